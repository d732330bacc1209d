#include "zeta4/coset_tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "zeta4/errors.hpp"

namespace zeta4 {

namespace {

SubscriptTuple parse_tuple(const std::string& s) {
    // "12|3|4" -> ({1,2},{3},{4});  "0" marks an empty (zeroed) slot.
    SubscriptTuple t;
    Mask cur = 0;
    for (char c : s) {
        if (c == '|') {
            t.push_back(cur);
            cur = 0;
        } else if (c == '0') {
            cur = 0;
        } else {
            cur = static_cast<Mask>(cur | (1u << (c - '1')));
        }
    }
    t.push_back(cur);
    return t;
}

struct RawRow {
    const char* target;
    std::initializer_list<const char*> sigmas;
};

CosetTable make_table(const char* name, const char* base, std::initializer_list<RawRow> rows) {
    CosetTable t;
    t.name = name;
    t.base = parse_tuple(base);
    for (const RawRow& r : rows) {
        CosetTableRow row;
        row.target = parse_tuple(r.target);
        for (const char* s : r.sigmas) row.sigmas.push_back(Perm::cycles(s));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<CosetTable> build_tables() {
    std::vector<CosetTable> ts;
    ts.push_back(make_table("l12,l3,l4", "12|3|4", {
        {"12|3|4", {"e", "(12)"}},
        {"12|4|3", {"(12)(34)", "(34)"}},
        {"13|2|4", {"(132)", "(23)"}},
        {"13|4|2", {"(234)", "(1342)"}},
        {"14|2|3", {"(243)", "(1432)"}},
        {"14|3|2", {"(142)", "(24)"}},
        {"23|1|4", {"(123)", "(13)"}},
        {"23|4|1", {"(134)", "(1234)"}},
        {"24|1|3", {"(143)", "(1243)"}},
        {"24|3|1", {"(124)", "(14)"}},
        {"34|1|2", {"(13)(24)", "(1423)"}},
        {"34|2|1", {"(14)(23)", "(1324)"}},
    }));
    ts.push_back(make_table("l1,l23,l4", "1|23|4", {
        {"1|23|4", {"e", "(23)"}},
        {"1|24|3", {"(243)", "(34)"}},
        {"1|34|2", {"(234)", "(24)"}},
        {"2|13|4", {"(123)", "(12)"}},
        {"2|14|3", {"(12)(34)", "(1243)"}},
        {"2|34|1", {"(124)", "(1234)"}},
        {"3|12|4", {"(132)", "(13)"}},
        {"3|14|2", {"(13)(24)", "(1342)"}},
        {"3|24|1", {"(134)", "(1324)"}},
        {"4|12|3", {"(143)", "(1432)"}},
        {"4|13|2", {"(142)", "(1423)"}},
        {"4|23|1", {"(14)(23)", "(14)"}},
    }));
    ts.push_back(make_table("l1,l2,l34", "1|2|34", {
        {"1|2|34", {"e", "(34)"}},
        {"1|3|24", {"(234)", "(23)"}},
        {"1|4|23", {"(243)", "(24)"}},
        {"2|1|34", {"(12)(34)", "(12)"}},
        {"2|3|14", {"(123)", "(1234)"}},
        {"2|4|13", {"(124)", "(1243)"}},
        {"3|1|24", {"(132)", "(1342)"}},
        {"3|2|14", {"(134)", "(13)"}},
        {"3|4|12", {"(13)(24)", "(1324)"}},
        {"4|1|23", {"(142)", "(1432)"}},
        {"4|2|13", {"(143)", "(14)"}},
        {"4|3|12", {"(14)(23)", "(1423)"}},
    }));
    ts.push_back(make_table("l12,l34", "12|34", {
        {"12|34", {"e", "(12)(34)", "(12)", "(34)"}},
        {"13|24", {"(132)", "(234)", "(23)", "(1342)"}},
        {"14|23", {"(142)", "(243)", "(24)", "(1432)"}},
        {"23|14", {"(123)", "(134)", "(13)", "(1234)"}},
        {"24|13", {"(124)", "(143)", "(14)", "(1243)"}},
        {"34|12", {"(13)(24)", "(14)(23)", "(1423)", "(1324)"}},
    }));
    ts.push_back(make_table("l123,l4", "123|4", {
        {"123|4", {"e", "(123)", "(132)", "(12)", "(13)", "(23)"}},
        {"124|3", {"(12)(34)", "(143)", "(243)", "(34)", "(1243)", "(1432)"}},
        {"134|2", {"(13)(24)", "(142)", "(234)", "(24)", "(1342)", "(1423)"}},
        {"234|1", {"(14)(23)", "(124)", "(134)", "(14)", "(1234)", "(1324)"}},
    }));
    ts.push_back(make_table("l1,l234", "1|234", {
        {"1|234", {"e", "(234)", "(243)", "(23)", "(24)", "(34)"}},
        {"2|134", {"(12)(34)", "(123)", "(124)", "(12)", "(1234)", "(1243)"}},
        {"3|124", {"(13)(24)", "(132)", "(134)", "(13)", "(1324)", "(1342)"}},
        {"4|123", {"(14)(23)", "(142)", "(143)", "(14)", "(1423)", "(1432)"}},
    }));
    return ts;
}

} // namespace

const std::vector<CosetTable>& coset_tables() {
    static const std::vector<CosetTable> ts = build_tables();
    return ts;
}

bool TableReport::all_ok() const {
    if (!partition_failures.empty()) return false;
    for (const RowCheck& r : rows)
        if (!r.action_ok || !r.exact_ok) return false;
    return true;
}

TableReport verify_table1() {
    const S4Data& s4 = S4Data::instance();
    TableReport rep;
    for (const CosetTable& t : coset_tables()) {
        SignedPermSet seen;
        for (const CosetTableRow& row : t.rows) {
            RowCheck rc;
            rc.table = t.name;
            rc.row = tuple_str(row.target);
            rc.action_ok = true;
            for (const Perm& s : row.sigmas) {
                seen[s] += 1;
                if (act_on_subscript_tuple(s, t.base) != row.target) rc.action_ok = false;
            }
            // the row must list every solution, not only some
            PermList solutions;
            for (const Perm& s : s4.all)
                if (act_on_subscript_tuple(s, t.base) == row.target) solutions.push_back(s);
            rc.exact_ok = multiset_equal(to_multiset(solutions), to_multiset(row.sigmas));
            rep.rows.push_back(rc);
        }
        if (!multiset_equal(seen, to_multiset(s4.all)))
            rep.partition_failures.push_back(t.name);
    }
    return rep;
}

namespace {

Perm P(const char* s) { return Perm::cycles(s); }

PermList L(std::initializer_list<const char*> names) {
    PermList out;
    for (const char* n : names) out.push_back(P(n));
    return out;
}

// Canonical representative (minimum element) of the left coset sigma*H.
Perm coset_rep(const Perm& sigma, const PermList& H) {
    PermList c = left_coset(sigma, H);
    return *std::min_element(c.begin(), c.end());
}

std::map<Perm, int> coset_projection(const PermList& A, const PermList& H) {
    std::map<Perm, int> m;
    for (const Perm& a : A) m[coset_rep(a, H)] += 1;
    return m;
}

bool is_transversal(const PermList& T, const PermList& H, int group_order = 24) {
    if (static_cast<int>(T.size()) * static_cast<int>(H.size()) != group_order) return false;
    auto proj = coset_projection(T, H);
    for (const auto& [rep, count] : proj)
        if (count != 1) return false;
    return static_cast<int>(proj.size()) == static_cast<int>(T.size());
}

CosetIdentityCheck mk(const std::string& name, bool ok, const std::string& detail = "") {
    return CosetIdentityCheck{name, ok, detail};
}

} // namespace

std::vector<CosetIdentityCheck> verify_coset_identities() {
    const S4Data& s4 = S4Data::instance();
    std::vector<CosetIdentityCheck> out;

    auto Ccoset = [&](const char* s) { return right_coset(s4.C, P(s)); };

    // the six right cosets of C, listed explicitly
    struct Row {
        const char* rep;
        std::initializer_list<const char*> elems;
    };
    const Row six[] = {
        {"e", {"e", "(1234)", "(13)(24)", "(1432)"}},
        {"(12)", {"(12)", "(134)", "(1423)", "(243)"}},
        {"(13)", {"(13)", "(14)(23)", "(24)", "(12)(34)"}},
        {"(14)", {"(14)", "(234)", "(1243)", "(132)"}},
        {"(23)", {"(23)", "(124)", "(1342)", "(143)"}},
        {"(34)", {"(34)", "(123)", "(1324)", "(142)"}},
    };
    for (const Row& r : six) {
        bool ok = multiset_equal(to_multiset(Ccoset(r.rep)), to_multiset(L(r.elems)));
        out.push_back(mk(std::string("C") + r.rep + " explicit list", ok));
    }
    {
        SignedPermSet whole;
        for (const Row& r : six) add_to(whole, to_multiset(Ccoset(r.rep)));
        out.push_back(mk("six cosets partition S4", multiset_equal(whole, to_multiset(s4.all))));
    }

    // signed multiset identities from the harmonic-lemma summations
    auto combo = [&](std::initializer_list<std::pair<const char*, int>> parts) {
        SignedPermSet acc;
        for (const auto& [rep, coeff] : parts) add_to(acc, to_multiset(Ccoset(rep)), coeff);
        return acc;
    };
    out.push_back(mk("C*U1 = 2C + C(12) + C(34)",
                     multiset_equal(product_multiset(s4.C, s4.U1),
                                    combo({{"e", 2}, {"(12)", 1}, {"(34)", 1}}))));
    out.push_back(mk("C(243) = C(12)",
                     multiset_equal(to_multiset(Ccoset("(243)")), to_multiset(Ccoset("(12)")))));
    out.push_back(mk("Cb*V2 = C(23)",
                     multiset_equal(product_multiset(s4.Cb, s4.V2), combo({{"(23)", 1}}))));
    out.push_back(mk("Cb*U2 = C + C(14) + C(23)",
                     multiset_equal(product_multiset(s4.Cb, s4.U2),
                                    combo({{"e", 1}, {"(14)", 1}, {"(23)", 1}}))));
    out.push_back(mk("C*W3 = C(13) + C(23)",
                     multiset_equal(product_multiset(s4.C, s4.W3),
                                    combo({{"(13)", 1}, {"(23)", 1}}))));
    out.push_back(mk("C*V3 = C + C(12) + C(13) + 2C(23) + C(34)",
                     multiset_equal(product_multiset(s4.C, s4.V3),
                                    combo({{"e", 1}, {"(12)", 1}, {"(13)", 1}, {"(23)", 2}, {"(34)", 1}}))));
    {
        SignedPermSet rhs = combo({{"e", 1}, {"(13)", -1}});
        add_to(rhs, to_multiset(s4.all), 2);
        out.push_back(mk("C*U3 = 2*S4 + C - C(13)",
                         multiset_equal(product_multiset(s4.C, s4.U3), rhs)));
    }

    // products with <(34)> used to reduce part (iii) to part (ii)
    PermList g34 = generate(L({"(34)"}));
    out.push_back(mk("<(34)>*U2 = U3",
                     multiset_equal(product_multiset(g34, s4.U2), to_multiset(s4.U3))));
    out.push_back(mk("<(34)>*V2 = {(23),(1342),(243),(142)}",
                     multiset_equal(product_multiset(g34, s4.V2),
                                    to_multiset(L({"(23)", "(1342)", "(243)", "(142)"})))));
    out.push_back(mk("<(34)>*(23) = {(23),(243)}",
                     multiset_equal(product_multiset(g34, L({"(23)"})),
                                    to_multiset(L({"(23)", "(243)"})))));

    // transversals
    for (const char* t : {"(12)", "(13)", "(14)", "(23)", "(24)", "(34)"}) {
        PermList H = generate(L({t}));
        out.push_back(mk(std::string("A4 transversal of S4/<") + t + ">", is_transversal(s4.A4, H)));
    }
    {
        PermList H = generate(L({"(12)", "(34)"}));
        PermList T = s4.C;
        for (const Perm& p : right_coset(s4.Cb, P("(14)"))) T.push_back(p);
        out.push_back(mk("C u Cb(14) transversal of S4/<(12),(34)>", is_transversal(T, H)));
    }
    for (int i : {1, 4}) {
        PermList stab;
        for (const Perm& p : s4.all)
            if (p(i) == i) stab.push_back(p);
        out.push_back(mk("C transversal of S4/Stab(" + std::to_string(i) + ")",
                         is_transversal(s4.C, stab)));
    }

    // congruence table: equality of left-coset multisets
    auto congruent = [&](const PermList& A, const PermList& B, const PermList& H) {
        return coset_projection(A, H) == coset_projection(B, H);
    };
    struct Cong {
        const char* a;
        const char* b;
        std::initializer_list<const char*> H;
    };
    const Cong congs[] = {
        {"e", "(12)", {"(12)"}},   {"(13)", "(34)", {"(12)"}}, {"(14)", "(23)", {"(12)"}},
        {"e", "(23)", {"(23)"}},   {"(12)", "(34)", {"(23)"}}, {"(13)", "(14)", {"(23)"}},
        {"e", "(34)", {"(34)"}},   {"(12)", "(13)", {"(34)"}}, {"(14)", "(23)", {"(34)"}},
    };
    for (const Cong& c : congs) {
        PermList H = generate(L(c.H));
        std::ostringstream name;
        name << "C" << c.a << " == C" << c.b << " mod <" << *c.H.begin() << ">";
        out.push_back(mk(name.str(), congruent(Ccoset(c.a), Ccoset(c.b), H)));
    }
    // congruences used on the merged-subscript templates: the induced sums
    // of acted tuples agree (up to the multiplicity forced by cardinality)
    {
        auto scaled = [](TupleMultiset m, int f) {
            for (auto& [t, c] : m) c *= f;
            return m;
        };
        SubscriptTuple halves{mask_of({1, 2}), mask_of({3, 4})};
        out.push_back(mk("Cb(23) == Cb(14) on (l12,l34)",
                         tuple_multiset_equal(orbit_multiset(right_coset(s4.Cb, P("(23)")), halves),
                                              orbit_multiset(right_coset(s4.Cb, P("(14)")), halves))));
        out.push_back(mk("C(13) == C on (l12,l34)",
                         tuple_multiset_equal(orbit_multiset(Ccoset("(13)"), halves),
                                              orbit_multiset(s4.C, halves))));
        out.push_back(mk("C(23) == 2 Cb(14) on (l12,l34)",
                         tuple_multiset_equal(orbit_multiset(Ccoset("(23)"), halves),
                                              scaled(orbit_multiset(right_coset(s4.Cb, P("(14)")), halves), 2))));
        SubscriptTuple triple_single{mask_of({1, 2, 3}), mask_of({4})};
        out.push_back(mk("C(24) == C on (l123,l4)",
                         tuple_multiset_equal(orbit_multiset(Ccoset("(24)"), triple_single),
                                              orbit_multiset(s4.C, triple_single))));
    }

    // facts used by the argument-collection lemmas
    {
        PermList CC34 = s4.C;
        for (const Perm& p : Ccoset("(34)")) CC34.push_back(p);
        out.push_back(mk("(C u C(34)) * <(234)> = S4",
                         multiset_equal(product_multiset(CC34, generate(L({"(234)"}))),
                                        to_multiset(s4.all))));
    }
    out.push_back(mk("C = C(13)(24)",
                     multiset_equal(to_multiset(Ccoset("(13)(24)")), to_multiset(s4.C))));
    out.push_back(mk("C(34) = C(123)",
                     multiset_equal(to_multiset(Ccoset("(123)")), to_multiset(Ccoset("(34)")))));
    out.push_back(mk("C = C(1234)",
                     multiset_equal(to_multiset(Ccoset("(1234)")), to_multiset(s4.C))));

    return out;
}

} // namespace zeta4
