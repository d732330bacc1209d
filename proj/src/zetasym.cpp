#include "zeta4/zetasym.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace zeta4 {

void ZetaSum::add(ZMonomial m, const Rational& c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ZetaSum& ZetaSum::operator+=(const ZetaSum& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

ZetaSum& ZetaSum::operator-=(const ZetaSum& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
}

ZetaSum ZetaSum::operator*(const Rational& c) const {
    ZetaSum out;
    for (const auto& [m, coeff] : terms_) out.add(m, coeff * c);
    return out;
}

std::string ZetaSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (const ZWord& w : m) {
            os << "*Z(";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << ',';
                os << mask_str(w[i]);
            }
            os << ')';
        }
        first = false;
    }
    return os.str();
}

ZMonomial make_monomial(std::initializer_list<ZWord> words) {
    ZMonomial m(words);
    std::sort(m.begin(), m.end());
    return m;
}

ZetaSum act(const Perm& sigma, const ZetaSum& s) {
    ZetaSum out;
    for (const auto& [m, c] : s.terms()) {
        ZMonomial n;
        n.reserve(m.size());
        for (const ZWord& w : m) {
            ZWord v;
            v.reserve(w.size());
            for (Mask x : w) v.push_back(apply_perm(sigma, x));
            n.push_back(std::move(v));
        }
        out.add(std::move(n), c);
    }
    return out;
}

namespace {

Mask M1(int a) { return mask_of({a}); }

ZWord W(std::initializer_list<Mask> ms) { return ZWord(ms); }

void add_orbit(ZetaSum& acc, const PermList& set, const ZetaSum& t, const Rational& c = 1) {
    for (const Perm& s : set) acc += act(s, t) * c;
}

ZetaSum single(std::initializer_list<ZWord> words, const Rational& c = 1) {
    ZetaSum s;
    s.add(make_monomial(words), c);
    return s;
}

} // namespace

ZetaSum cyclic_sum_delta() {
    const S4Data& s4 = S4Data::instance();
    ZetaSum d;
    add_orbit(d, s4.C, single({W({M1(1), M1(2), M1(3), M1(4)})}));
    d -= single({W({M1(1)}), W({M1(2)}), W({M1(3)}), W({M1(4)})});
    ZetaSum pairpair = single({W({M1(1), M1(2)}), W({M1(3), M1(4)})});
    ZetaSum neg;
    add_orbit(neg, s4.Cb, pairpair);
    d -= neg;
    ZetaSum inner = single({W({M1(1), M1(2), M1(3)}), W({M1(4)})});
    inner -= single({W({M1(1), M1(2)}), W({M1(3)}), W({M1(4)})});
    ZetaSum csum;
    add_orbit(csum, s4.C, inner);
    d -= csum;
    d += single({W({mask_of({1, 2, 3, 4})})});
    return d;
}

ZetaSum symmetric2_delta(Mask a, Mask b) {
    ZetaSum d;
    d.add(make_monomial({W({a, b})}), 1);
    d.add(make_monomial({W({b, a})}), 1);
    d.add(make_monomial({W({a}), W({b})}), -1);
    d.add(make_monomial({W({static_cast<Mask>(a | b)})}), 1);
    return d;
}

ZetaSum symmetric3_delta(Mask a, Mask b, Mask c) {
    ZetaSum d;
    Mask v[3] = {a, b, c};
    int idx[3] = {0, 1, 2};
    std::sort(idx, idx + 3);
    do {
        d.add(make_monomial({W({v[idx[0]], v[idx[1]], v[idx[2]]})}), 1);
    } while (std::next_permutation(idx, idx + 3));
    d.add(make_monomial({W({a}), W({b}), W({c})}), -1);
    d.add(make_monomial({W({static_cast<Mask>(a | b)}), W({c})}), 1);
    d.add(make_monomial({W({static_cast<Mask>(b | c)}), W({a})}), 1);
    d.add(make_monomial({W({static_cast<Mask>(c | a)}), W({b})}), 1);
    d.add(make_monomial({W({static_cast<Mask>(a | b | c)})}), -2);
    return d;
}

ZetaSum symmetric4_delta() {
    const S4Data& s4 = S4Data::instance();
    ZetaSum d;
    add_orbit(d, s4.all, single({W({M1(1), M1(2), M1(3), M1(4)})}));
    d -= single({W({M1(1)}), W({M1(2)}), W({M1(3)}), W({M1(4)})});
    PermList CuCb14 = s4.C;
    for (const Perm& p : right_coset(s4.Cb, Perm::cycles("(14)"))) CuCb14.push_back(p);
    ZetaSum t = single({W({mask_of({1, 2})}), W({M1(3)}), W({M1(4)})});
    ZetaSum s1;
    add_orbit(s1, CuCb14, t);
    d += s1;
    PermList g123 = generate({Perm::cycles("(123)")});
    ZetaSum s2;
    add_orbit(s2, g123, single({W({mask_of({1, 2})}), W({mask_of({3, 4})})}));
    d -= s2;
    ZetaSum s3;
    add_orbit(s3, s4.C, single({W({mask_of({1, 2, 3})}), W({M1(4)})}));
    d -= s3 * 2;
    d += single({W({mask_of({1, 2, 3, 4})})}, 6);
    return d;
}

namespace {

// exact Gaussian elimination deciding whether target lies in the span
bool in_span(const std::vector<ZetaSum>& generators, const ZetaSum& target, std::size_t* used) {
    std::map<ZMonomial, std::size_t> row_of;
    auto row_index = [&](const ZMonomial& m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        std::size_t r = row_of.size();
        row_of.emplace(m, r);
        return r;
    };
    for (const ZetaSum& g : generators)
        for (const auto& [m, c] : g.terms()) row_index(m);
    for (const auto& [m, c] : target.terms()) row_index(m);

    std::size_t rows = row_of.size(), cols = generators.size();
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [m, c] : generators[j].terms()) A[row_of[m]][j] = c;
    for (const auto& [m, c] : target.terms()) A[row_of[m]][cols] = c;

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        Rational inv = 1 / A[rank][col];
        for (std::size_t j = col; j <= cols; ++j) A[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || A[i][col] == 0) continue;
            Rational f = A[i][col];
            for (std::size_t j = col; j <= cols; ++j) A[i][j] -= f * A[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (A[i][cols] != 0) return false;
    // consistent; count nonzero coordinates of the particular solution
    if (used) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < rank; ++i)
            if (A[i][cols] != 0) ++n;
        *used = n;
    }
    return true;
}

std::vector<Mask> nonempty_subsets(Mask universe) {
    std::vector<Mask> out;
    for (Mask m = 1; m < 16; ++m)
        if ((m & universe) == m) out.push_back(m);
    return out;
}

// spectator monomials over the complement of a used support
std::vector<ZMonomial> spectators(Mask complement) {
    std::vector<ZMonomial> out;
    out.push_back({});
    std::vector<int> left;
    for (int j = 1; j <= 4; ++j)
        if (complement & (1u << (j - 1))) left.push_back(j);
    if (left.size() == 1) {
        out.push_back(make_monomial({W({M1(left[0])})}));
    } else if (left.size() == 2) {
        int c = left[0], dd = left[1];
        out.push_back(make_monomial({W({M1(c)})}));
        out.push_back(make_monomial({W({M1(dd)})}));
        out.push_back(make_monomial({W({M1(c)}), W({M1(dd)})}));
        out.push_back(make_monomial({W({mask_of({c, dd})})}));
        out.push_back(make_monomial({W({M1(c), M1(dd)})}));
        out.push_back(make_monomial({W({M1(dd), M1(c)})}));
    }
    return out;
}

ZetaSum times_monomial(const ZetaSum& s, const ZMonomial& mono) {
    ZetaSum out;
    for (const auto& [m, c] : s.terms()) {
        ZMonomial prod = m;
        prod.insert(prod.end(), mono.begin(), mono.end());
        out.add(std::move(prod), c);
    }
    return out;
}

} // namespace

ReductionResult verify_sixfold_reduction() {
    ZetaSum target;
    for (const char* rep : {"e", "(12)", "(13)", "(14)", "(23)", "(34)"})
        target += act(Perm::cycles(rep), cyclic_sum_delta());
    target -= symmetric4_delta();

    std::vector<ZetaSum> gens;
    // depth-2 instances over disjoint subscript sets, with spectators
    std::vector<Mask> subsets = nonempty_subsets(0xF);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            Mask a = subsets[i], b = subsets[j];
            if (a & b) continue;
            Mask compl_mask = static_cast<Mask>(0xF & ~(a | b));
            ZetaSum base = symmetric2_delta(a, b);
            for (const ZMonomial& sp : spectators(compl_mask)) gens.push_back(times_monomial(base, sp));
        }
    // depth-3 instances
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            for (std::size_t k = j + 1; k < subsets.size(); ++k) {
                Mask a = subsets[i], b = subsets[j], c = subsets[k];
                if ((a & b) || (a & c) || (b & c)) continue;
                Mask compl_mask = static_cast<Mask>(0xF & ~(a | b | c));
                ZetaSum base = symmetric3_delta(a, b, c);
                for (const ZMonomial& sp : spectators(compl_mask)) gens.push_back(times_monomial(base, sp));
            }

    ReductionResult res;
    res.candidates = gens.size();
    res.reduced = in_span(gens, target, &res.used);
    return res;
}

} // namespace zeta4
