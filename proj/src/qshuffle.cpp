#include "zeta4/qshuffle.hpp"

#include <sstream>

#include "zeta4/errors.hpp"

namespace zeta4 {

bool LiSymbol::operator<(const LiSymbol& rhs) const {
    if (letters.size() != rhs.letters.size()) return letters.size() < rhs.letters.size();
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i].exp != rhs.letters[i].exp) return letters[i].exp < rhs.letters[i].exp;
    for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i].zexp != rhs.letters[i].zexp) return letters[i].zexp < rhs.letters[i].zexp;
    return false;
}

std::string LiSymbol::str() const {
    std::ostringstream os;
    os << "Li(";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ',';
        os << mask_str(letters[i].exp);
    }
    os << ";";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ',';
        os << "z^" << letters[i].zexp;
    }
    os << ")";
    return os.str();
}

LiSymbol make_symbol(std::initializer_list<Mask> word, std::initializer_list<int> zexps) {
    return make_symbol(std::vector<Mask>(word), std::vector<int>(zexps));
}

LiSymbol make_symbol(const std::vector<Mask>& word, const std::vector<int>& zexps) {
    if (word.size() != zexps.size())
        throw ArityMismatch("LiSymbol: word/argument length mismatch");
    LiSymbol s;
    s.letters.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) s.letters.push_back({word[i], zexps[i]});
    return s;
}

LiSymbol act(const Perm& sigma, const LiSymbol& s) {
    LiSymbol out = s;
    for (Letter& l : out.letters) l.exp = apply_perm(sigma, l.exp);
    return out;
}

void FormalLiSum::add(const LiSymbol& s, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalLiSum& FormalLiSum::operator+=(const FormalLiSum& rhs) {
    for (const auto& [s, c] : rhs.terms_) add(s, c);
    return *this;
}

FormalLiSum& FormalLiSum::operator-=(const FormalLiSum& rhs) {
    for (const auto& [s, c] : rhs.terms_) add(s, -c);
    return *this;
}

FormalLiSum FormalLiSum::operator*(const Rational& c) const {
    FormalLiSum out;
    if (c == 0) return out;
    for (const auto& [s, coeff] : terms_) out.terms_.emplace(s, coeff * c);
    return out;
}

std::string FormalLiSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*" << s.str();
        first = false;
    }
    return os.str();
}

FormalLiSum act(const Perm& sigma, const FormalLiSum& s) {
    FormalLiSum out;
    for (const auto& [sym, c] : s.terms()) out.add(act(sigma, sym), c);
    return out;
}

namespace {

// Recursive domain decomposition.  activeA/activeB hold the z-power of the
// deepest letter already consumed from each factor; they persist once a
// factor is exhausted, which yields the cumulative-product argument rule.
void stuffle_rec(const std::vector<Letter>& a, std::size_t i, int activeA,
                 const std::vector<Letter>& b, std::size_t j, int activeB,
                 LiSymbol& out, FormalLiSum& acc) {
    if (i == a.size() && j == b.size()) {
        acc.add(out, 1);
        return;
    }
    if (i < a.size()) {
        out.letters.push_back({a[i].exp, a[i].zexp + activeB});
        stuffle_rec(a, i + 1, a[i].zexp, b, j, activeB, out, acc);
        out.letters.pop_back();
    }
    if (j < b.size()) {
        out.letters.push_back({b[j].exp, activeA + b[j].zexp});
        stuffle_rec(a, i, activeA, b, j + 1, b[j].zexp, out, acc);
        out.letters.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        if (a[i].exp & b[j].exp)
            throw InvalidArguments("stuffle: overlapping subscript supports");
        out.letters.push_back({static_cast<Mask>(a[i].exp | b[j].exp), a[i].zexp + b[j].zexp});
        stuffle_rec(a, i + 1, a[i].zexp, b, j + 1, b[j].zexp, out, acc);
        out.letters.pop_back();
    }
}

} // namespace

FormalLiSum stuffle(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    FormalLiSum acc;
    LiSymbol scratch;
    scratch.letters.reserve(a.size() + b.size());
    stuffle_rec(a, 0, 0, b, 0, 0, scratch, acc);
    return acc;
}

FormalLiSum stuffle(const FormalLiSum& a, const std::vector<Letter>& b) {
    FormalLiSum acc;
    for (const auto& [sym, c] : a.terms()) {
        FormalLiSum part = stuffle(sym.letters, b);
        acc += part * c;
    }
    return acc;
}

FormalLiSum stuffle(const FormalLiSum& a, const FormalLiSum& b) {
    FormalLiSum acc;
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            FormalLiSum part = stuffle(sa.letters, sb.letters);
            acc += part * (ca * cb);
        }
    return acc;
}

InstLiSum instantiate(const FormalLiSum& s, const std::array<int, 4>& composition) {
    InstLiSum out;
    for (const auto& [sym, c] : s.terms()) {
        InstSymbol inst;
        inst.word.reserve(sym.letters.size());
        inst.zexps.reserve(sym.letters.size());
        for (const Letter& l : sym.letters) {
            int v = 0;
            for (int j = 1; j <= 4; ++j)
                if (l.exp & (1u << (j - 1))) v += composition[static_cast<std::size_t>(j - 1)];
            inst.word.push_back(v);
            inst.zexps.push_back(l.zexp);
        }
        auto it = out.find(inst);
        if (it == out.end()) {
            out.emplace(std::move(inst), c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

namespace {

Mask M1(int a) { return mask_of({a}); }
Mask M2(int a, int b) { return mask_of({a, b}); }

// the recurring three-letter depth templates with their printed z-patterns
LiSymbol tmpl_4word() {
    return make_symbol({M1(1), M1(2), M1(3), M1(4)}, {1, 2, 3, 4});
}
LiSymbol tmpl_12_3_4() { return make_symbol({M2(1, 2), M1(3), M1(4)}, {2, 3, 4}); }
LiSymbol tmpl_1_23_4() { return make_symbol({M1(1), M2(2, 3), M1(4)}, {1, 3, 4}); }
LiSymbol tmpl_1_2_34() { return make_symbol({M1(1), M1(2), M2(3, 4)}, {1, 2, 4}); }
LiSymbol tmpl_12_34() { return make_symbol({M2(1, 2), M2(3, 4)}, {2, 4}); }
LiSymbol tmpl_123_4() { return make_symbol({mask_of({1, 2, 3}), M1(4)}, {3, 4}); }
LiSymbol tmpl_1_234() { return make_symbol({M1(1), mask_of({2, 3, 4})}, {1, 4}); }

FormalLiSum orbit_sum(const PermList& set, const LiSymbol& t) {
    FormalLiSum acc;
    for (const Perm& s : set) acc.add(act(s, t), 1);
    return acc;
}

FormalLiSum orbit_sum(const PermList& set, const FormalLiSum& t) {
    FormalLiSum acc;
    for (const Perm& s : set) acc += act(s, t);
    return acc;
}

FormalLiSum three_templates() {
    FormalLiSum s;
    s.add(tmpl_12_3_4(), 1);
    s.add(tmpl_1_23_4(), 1);
    s.add(tmpl_1_2_34(), 1);
    return s;
}

// product factors of each lemma part, with sigma applied to the factors
FormalLiSum lemma21_lhs(int part, const Perm& sigma) {
    auto A = [&](std::initializer_list<Mask> ms) {
        std::vector<Letter> w;
        int e = 1;
        for (Mask m : ms) w.push_back({apply_perm(sigma, m), e++});
        return w;
    };
    switch (part) {
        case 1:
            return stuffle(A({M1(1), M1(2), M1(3)}), A({M1(4)}));
        case 2:
            return stuffle(A({M1(1), M1(2)}), A({M1(3), M1(4)}));
        case 3:
            return stuffle(stuffle(A({M1(1), M1(2)}), A({M1(3)})), A({M1(4)}));
        case 4:
            return stuffle(stuffle(stuffle(A({M1(1)}), A({M1(2)})), A({M1(3)})), A({M1(4)}));
        default:
            throw InvalidArguments("lemma21: part must be 1..4");
    }
}

FormalLiSum lemma21_rhs(int part) {
    const S4Data& s4 = S4Data::instance();
    FormalLiSum acc;
    switch (part) {
        case 1: {
            acc += orbit_sum(s4.U1, tmpl_4word());
            FormalLiSum pair;
            pair.add(tmpl_12_3_4(), 1);
            pair.add(tmpl_1_23_4(), 1);
            acc += act(Perm::cycles("(243)"), pair);
            acc.add(tmpl_1_2_34(), 1);
            return acc;
        }
        case 2: {
            acc += orbit_sum(s4.U2, tmpl_4word());
            acc += orbit_sum(s4.V2, three_templates());
            acc += act(Perm::cycles("(23)"), FormalLiSum(tmpl_12_34()));
            return acc;
        }
        case 3: {
            acc += orbit_sum(s4.U3, tmpl_4word());
            acc += orbit_sum(s4.V3a, FormalLiSum(tmpl_12_3_4()));
            acc += orbit_sum(s4.V3b, FormalLiSum(tmpl_1_23_4()));
            acc += orbit_sum(s4.V3c, FormalLiSum(tmpl_1_2_34()));
            acc += orbit_sum(s4.W3, FormalLiSum(tmpl_12_34()));
            acc += act(Perm::cycles("(24)"), FormalLiSum(tmpl_123_4()));
            acc.add(tmpl_1_234(), 1);
            return acc;
        }
        case 4: {
            acc += orbit_sum(s4.all, tmpl_4word());
            acc += orbit_sum(s4.A4, three_templates());
            PermList CuCb14 = s4.C;
            for (const Perm& p : right_coset(s4.Cb, Perm::cycles("(14)"))) CuCb14.push_back(p);
            acc += orbit_sum(CuCb14, FormalLiSum(tmpl_12_34()));
            FormalLiSum tails;
            tails.add(tmpl_123_4(), 1);
            tails.add(tmpl_1_234(), 1);
            acc += orbit_sum(s4.C, tails);
            acc.add(make_symbol({mask_of({1, 2, 3, 4})}, {4}), 1);
            return acc;
        }
        default:
            throw InvalidArguments("lemma21: part must be 1..4");
    }
}

FormalLiSum lemma22_rhs(int part) {
    const S4Data& s4 = S4Data::instance();
    auto C = [&](const char* rep) { return right_coset(s4.C, Perm::cycles(rep)); };
    FormalLiSum acc;
    switch (part) {
        case 1: {
            acc += orbit_sum(s4.C, tmpl_4word()) * 2;
            acc += orbit_sum(C("(12)"), tmpl_4word());
            acc += orbit_sum(C("(34)"), tmpl_4word());
            FormalLiSum t3 = three_templates();
            acc += orbit_sum(s4.A4, t3);
            acc -= orbit_sum(C("(13)"), t3);
            acc -= orbit_sum(C("(23)"), t3);
            return acc;
        }
        case 2: {
            acc += orbit_sum(s4.C, tmpl_4word());
            acc += orbit_sum(C("(14)"), tmpl_4word());
            acc += orbit_sum(C("(23)"), tmpl_4word());
            acc += orbit_sum(C("(23)"), three_templates());
            acc += orbit_sum(right_coset(s4.Cb, Perm::cycles("(14)")), FormalLiSum(tmpl_12_34()));
            return acc;
        }
        case 3: {
            acc += orbit_sum(s4.all, tmpl_4word()) * 2;
            acc += orbit_sum(s4.C, tmpl_4word());
            acc -= orbit_sum(C("(13)"), tmpl_4word());
            FormalLiSum t3 = three_templates();
            acc += orbit_sum(s4.A4, t3) * 2;
            acc -= orbit_sum(C("(13)"), t3);
            acc += orbit_sum(s4.C, FormalLiSum(tmpl_12_34()));
            acc += orbit_sum(right_coset(s4.Cb, Perm::cycles("(14)")), FormalLiSum(tmpl_12_34())) * 2;
            FormalLiSum tails;
            tails.add(tmpl_123_4(), 1);
            tails.add(tmpl_1_234(), 1);
            acc += orbit_sum(s4.C, tails);
            return acc;
        }
        default:
            throw InvalidArguments("lemma22: part must be 1..3");
    }
}

} // namespace

LemmaSides lemma21_sides(int part) {
    LemmaSides s;
    s.lhs = lemma21_lhs(part, Perm::identity(4));
    s.rhs = lemma21_rhs(part);
    return s;
}

LemmaSides lemma22_sides(int part) {
    const S4Data& s4 = S4Data::instance();
    LemmaSides s;
    const PermList& set = (part == 2) ? s4.Cb : s4.C;
    int lhs_part = (part == 1) ? 1 : (part == 2 ? 2 : 3);
    for (const Perm& sigma : set) s.lhs += lemma21_lhs(lhs_part, sigma);
    s.rhs = lemma22_rhs(part);
    return s;
}

bool verify_lemma21(int part) { return lemma21_sides(part).equal(); }

bool verify_lemma21(int part, const std::array<int, 4>& composition) {
    LemmaSides s = lemma21_sides(part);
    return instantiate(s.lhs, composition) == instantiate(s.rhs, composition);
}

bool verify_lemma22(int part) { return lemma22_sides(part).equal(); }

bool verify_lemma22(int part, const std::array<int, 4>& composition) {
    LemmaSides s = lemma22_sides(part);
    return instantiate(s.lhs, composition) == instantiate(s.rhs, composition);
}

LemmaSides harmonic_combined_sides() {
    const S4Data& s4 = S4Data::instance();
    LemmaSides s;
    for (const Perm& sigma : s4.C) {
        s.lhs += lemma21_lhs(1, sigma);
        s.lhs -= lemma21_lhs(3, sigma);
    }
    for (const Perm& sigma : s4.Cb) s.lhs += lemma21_lhs(2, sigma);
    s.lhs += lemma21_lhs(4, Perm::identity(4));

    s.rhs = orbit_sum(s4.C, tmpl_4word());
    s.rhs.add(make_symbol({mask_of({1, 2, 3, 4})}, {4}), 1);
    return s;
}

std::vector<ProductBlock> prop21_blocks() {
    const S4Data& s4 = S4Data::instance();
    PermList e{Perm::identity(4)};
    return {
        {-1, s4.C, {4}, {4}},
        {+1, s4.C, {3, 1}, {3, 1}},
        {+1, s4.Cb, {2, 2}, {2, 2}},
        {-1, s4.C, {2, 1, 1}, {2, 1, 1}},
        {+1, e, {1, 1, 1, 1}, {1, 1, 1, 1}},
    };
}

} // namespace zeta4
