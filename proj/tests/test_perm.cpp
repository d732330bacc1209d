#include <algorithm>
#include <doctest.h>
#include <set>

#include "zeta4/coset_tables.hpp"
#include "zeta4/perm.hpp"

using namespace zeta4;

namespace {

PermList enumerate_s4() {
    std::vector<int> im{1, 2, 3, 4};
    PermList out;
    do {
        out.push_back(Perm(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

} // namespace

TEST_CASE("cycle notation round-trips and composes as functions") {
    Perm p = Perm::cycles("(1234)");
    CHECK(p(1) == 2);
    CHECK(p(4) == 1);
    CHECK(p.cycle_str() == "(1234)");
    CHECK(Perm::cycles("(12)(34)").cycle_str() == "(12)(34)");
    CHECK(Perm::cycles("e").is_identity());
    // right coset convention: (1234) after (23)
    CHECK((Perm::cycles("(1234)") * Perm::cycles("(23)")).cycle_str() == "(124)");
}

TEST_CASE("group laws hold exhaustively over the 24 elements") {
    PermList s4 = enumerate_s4();
    REQUIRE(s4.size() == 24);
    Perm e = Perm::identity(4);
    for (const Perm& a : s4) {
        CHECK(a * e == a);
        CHECK(e * a == a);
        CHECK(a * a.inverse() == e);
    }
    for (const Perm& a : s4)
        for (const Perm& b : s4)
            for (const Perm& c : s4) {
                if (!((a * b) * c == a * (b * c))) {
                    REQUIRE((a * b) * c == a * (b * c));
                }
            }
}

TEST_CASE("generated subgroups") {
    PermList c = generate({Perm::cycles("(1234)")});
    CHECK(to_multiset(c) == to_multiset({Perm::cycles("e"), Perm::cycles("(1234)"),
                                         Perm::cycles("(13)(24)"), Perm::cycles("(1432)")}));
    CHECK(generate({}).size() == 1);
    // a transposition and a 3-cycle on the same three points close up to
    // the symmetric group on those points
    CHECK(generate({Perm::cycles("(12)"), Perm::cycles("(123)")}).size() == 6);
    // adding the long cycle reaches the whole group; compare with the
    // independent enumeration
    PermList whole = generate({Perm::cycles("(12)"), Perm::cycles("(1234)")});
    CHECK(to_multiset(whole) == to_multiset(enumerate_s4()));
}

TEST_CASE("right cosets of the cyclic subgroup") {
    const S4Data& s4 = S4Data::instance();
    CHECK(to_multiset(right_coset(s4.C, Perm::cycles("(14)"))) ==
          to_multiset({Perm::cycles("(14)"), Perm::cycles("(234)"), Perm::cycles("(1243)"),
                       Perm::cycles("(132)")}));
    CHECK(to_multiset(right_coset(s4.C, Perm::identity(4))) == to_multiset(s4.C));
    CHECK(to_multiset(right_coset(s4.C, Perm::cycles("(34)"))) ==
          to_multiset({Perm::cycles("(34)"), Perm::cycles("(123)"), Perm::cycles("(1324)"),
                       Perm::cycles("(142)")}));
}

TEST_CASE("right cosets partition the group") {
    const S4Data& s4 = S4Data::instance();
    for (const PermList& H : {s4.C, s4.A4, generate({Perm::cycles("(12)"), Perm::cycles("(34)")})}) {
        std::set<SubscriptTuple> dummy;
        SignedPermSet seen;
        std::set<Perm> reps;
        for (const Perm& g : s4.all) {
            PermList coset = right_coset(H, g);
            Perm rep = *std::min_element(coset.begin(), coset.end());
            if (reps.insert(rep).second) add_to(seen, to_multiset(coset));
        }
        CHECK(multiset_equal(seen, to_multiset(s4.all)));
        (void)dummy;
    }
}

TEST_CASE("named sets have the stated cardinalities") {
    const S4Data& s4 = S4Data::instance();
    CHECK(s4.C.size() == 4);
    CHECK(s4.Cb.size() == 2);
    CHECK(s4.A4.size() == 12);
    CHECK(s4.U1.size() == 4);
    CHECK(s4.V2.size() == 2);
    CHECK(s4.U2.size() == 6);
    CHECK(s4.W3.size() == 2);
    CHECK(s4.V3.size() == 6);
    CHECK(s4.V3a.size() == 5);
    CHECK(s4.V3b.size() == 5);
    CHECK(s4.V3c.size() == 5);
    CHECK(s4.U3.size() == 12);
}

TEST_CASE("subscript tuple action") {
    SubscriptTuple singles{mask_of({1}), mask_of({2}), mask_of({3}), mask_of({4})};
    CHECK(act_on_subscript_tuple(Perm::cycles("(13)(24)"), singles) ==
          SubscriptTuple{mask_of({3}), mask_of({4}), mask_of({1}), mask_of({2})});
    SubscriptTuple pairs{mask_of({1, 2}), mask_of({3, 4})};
    CHECK(act_on_subscript_tuple(Perm::cycles("(1234)"), pairs) ==
          SubscriptTuple{mask_of({2, 3}), mask_of({4, 1})});
    SubscriptTuple t{mask_of({1, 2}), mask_of({3}), mask_of({4})};
    CHECK(act_on_subscript_tuple(Perm::cycles("(132)"), t) ==
          SubscriptTuple{mask_of({3, 1}), mask_of({2}), mask_of({4})});
}

TEST_CASE("subscript action is functorial, exhaustively") {
    PermList s4 = enumerate_s4();
    std::vector<SubscriptTuple> tuples;
    for (const CosetTable& t : coset_tables()) {
        tuples.push_back(t.base);
        for (const CosetTableRow& row : t.rows) tuples.push_back(row.target);
    }
    for (const Perm& a : s4)
        for (const Perm& b : s4)
            for (const SubscriptTuple& t : tuples) {
                if (!(act_on_subscript_tuple(a * b, t) ==
                      act_on_subscript_tuple(a, act_on_subscript_tuple(b, t)))) {
                    CAPTURE(a.cycle_str());
                    CAPTURE(b.cycle_str());
                    REQUIRE(false);
                }
            }
    CHECK(true);
}

TEST_CASE("the six merged-subscript tables verify") {
    TableReport rep = verify_table1();
    CHECK(rep.partition_failures.empty());
    for (const RowCheck& r : rep.rows) {
        CAPTURE(r.table);
        CAPTURE(r.row);
        CHECK(r.action_ok);
        CHECK(r.exact_ok);
    }
    // spot: the halves row of the two-block table
    bool found = false;
    for (const CosetTable& t : coset_tables())
        if (t.name == "l12,l34")
            for (const CosetTableRow& row : t.rows)
                if (row.target == SubscriptTuple{mask_of({3, 4}), mask_of({1, 2})}) {
                    found = true;
                    CHECK(to_multiset(row.sigmas) ==
                          to_multiset({Perm::cycles("(13)(24)"), Perm::cycles("(14)(23)"),
                                       Perm::cycles("(1423)"), Perm::cycles("(1324)")}));
                }
    CHECK(found);
}

TEST_CASE("coset identity suite passes") {
    for (const CosetIdentityCheck& c : verify_coset_identities()) {
        CAPTURE(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("product multiset example: C times U1 covers C twice") {
    const S4Data& s4 = S4Data::instance();
    SignedPermSet prod = product_multiset(s4.C, s4.U1);
    for (const Perm& p : s4.C) CHECK(prod[p] == 2);
}
