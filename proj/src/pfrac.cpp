#include "zeta4/pfrac.hpp"

#include <algorithm>

#include "zeta4/errors.hpp"
#include "zeta4/indexword.hpp"

namespace zeta4 {

void FracSum::add(MultiPoly num, DenKey den) {
    std::sort(den.begin(), den.end());
    terms.push_back({std::move(num), std::move(den)});
}

std::map<DenKey, MultiPoly> collect(const FracSum& s) {
    std::map<DenKey, MultiPoly> out;
    for (const FracTerm& t : s.terms) {
        MultiPoly& slot = out[t.den];
        slot += t.numerator;
        if (slot.is_zero()) out.erase(t.den);
    }
    return out;
}

DenKey nested_chain(const Perm& sigma) {
    DenKey d;
    Mask acc = 0;
    Mask slots[4];
    for (int k = 4; k >= 1; --k) {
        acc = static_cast<Mask>(acc | (1u << (sigma(k) - 1)));
        slots[k - 1] = acc;
    }
    for (int k = 0; k < 4; ++k) d.push_back({slots[k], 1});
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

Rational eval_den(const DenKey& den, const std::array<Rational, 16>& subset_sums) {
    Rational v(1);
    for (const auto& [mask, pow] : den)
        for (int i = 0; i < pow; ++i) v *= subset_sums[mask];
    return v;
}

} // namespace

DecisionOutcome equal_as_rational_functions(const FracSum& a, const FracSum& b, ExecMode mode) {
    // per-variable degree bound of the cleared-denominator polynomial
    std::map<Mask, int> max_pow;
    int max_num_deg = 0;
    auto scan = [&](const FracSum& s) {
        for (const FracTerm& t : s.terms) {
            for (const auto& [mask, pow] : t.den) {
                int& slot = max_pow[mask];
                slot = std::max(slot, pow);
            }
            max_num_deg = std::max(max_num_deg, std::max(0, t.numerator.degree()));
        }
    };
    scan(a);
    scan(b);
    int bound = 0;
    for (int v = 1; v <= 4; ++v) {
        int bv = 0;
        for (const auto& [mask, pow] : max_pow)
            if (mask & (1u << (v - 1))) bv += pow;
        bound = std::max(bound, bv);
    }
    (void)max_num_deg; // numerators live in y only and add no m-degree
    int grid = bound + 2;

    DecisionOutcome out;
    out.grid_per_variable = grid;
    long long total = 1;
    for (int v = 0; v < 4; ++v) total *= grid;
    out.points = total;

    std::vector<char> ok(static_cast<std::size_t>(total), 0);
    parallel_for(mode, static_cast<std::size_t>(total), [&](std::size_t idx) {
        long long rest = static_cast<long long>(idx);
        std::array<Rational, 4> m;
        for (int v = 0; v < 4; ++v) {
            m[static_cast<std::size_t>(v)] = Rational(static_cast<long>(rest % grid) + 1);
            rest /= grid;
        }
        std::array<Rational, 16> subset_sums;
        subset_sums[0] = 0;
        for (Mask mask = 1; mask < 16; ++mask) {
            Rational s(0);
            for (int j = 0; j < 4; ++j)
                if (mask & (1u << j)) s += m[static_cast<std::size_t>(j)];
            subset_sums[mask] = s;
        }
        MultiPoly acc; // polynomial in y with rational coefficients
        for (const FracTerm& t : a.terms)
            acc += t.numerator * (Rational(1) / eval_den(t.den, subset_sums));
        for (const FracTerm& t : b.terms)
            acc -= t.numerator * (Rational(1) / eval_den(t.den, subset_sums));
        ok[idx] = acc.is_zero() ? 1 : 0;
    });
    out.equal = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return out;
}

std::pair<FracSum, FracSum> base_identity(BaseIdentity which) {
    const S4Data& s4 = S4Data::instance();
    FracSum lhs, rhs;
    MultiPoly one = MultiPoly::constant(1);
    switch (which) {
        case BaseIdentity::u1_form: {
            lhs.add(one, {{mask_of({1, 2, 3}), 1}, {mask_of({2, 3}), 1}, {mask_of({3}), 1}, {mask_of({4}), 1}});
            for (const Perm& s : s4.U1) rhs.add(one, nested_chain(s));
            break;
        }
        case BaseIdentity::u2_form: {
            lhs.add(one, {{mask_of({1, 2}), 1}, {mask_of({2}), 1}, {mask_of({3, 4}), 1}, {mask_of({4}), 1}});
            for (const Perm& s : s4.U2) rhs.add(one, nested_chain(s));
            break;
        }
        case BaseIdentity::split34: {
            lhs.add(one, {{mask_of({3}), 1}, {mask_of({4}), 1}});
            rhs.add(one, {{mask_of({3, 4}), 1}, {mask_of({4}), 1}});
            rhs.add(one, {{mask_of({3, 4}), 1}, {mask_of({3}), 1}});
            break;
        }
        case BaseIdentity::s4_form: {
            lhs.add(one, {{mask_of({1}), 1}, {mask_of({2}), 1}, {mask_of({3}), 1}, {mask_of({4}), 1}});
            for (const Perm& s : s4.all) rhs.add(one, nested_chain(s));
            break;
        }
    }
    return {lhs, rhs};
}

std::string base_identity_name(BaseIdentity which) {
    switch (which) {
        case BaseIdentity::u1_form: return "triple-times-single chain";
        case BaseIdentity::u2_form: return "double-times-double chain";
        case BaseIdentity::split34: return "two-factor split";
        case BaseIdentity::s4_form: return "full symmetric chain";
    }
    return "?";
}

namespace {

void splits_rec(int slots, int remaining, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        splits_rec(slots - 1, remaining - v, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::map<DenKey, MultiPoly> texpand_coefficient(const FracSum& s, int weight) {
    std::map<DenKey, MultiPoly> out;
    for (const FracTerm& t : s.terms) {
        int arity = static_cast<int>(t.den.size());
        int tdeg = weight - arity;
        if (tdeg < 0) throw InvalidArguments("texpand_coefficient: weight below arity");
        for (const auto& [mask, pow] : t.den)
            if (pow != 1) throw InvalidArguments("texpand_coefficient: base powers must be 1");
        std::vector<std::vector<int>> splits;
        std::vector<int> cur;
        splits_rec(arity, tdeg, cur, splits);
        for (const std::vector<int>& ks : splits) {
            MultiPoly num = t.numerator;
            DenKey den;
            for (int i = 0; i < arity; ++i) {
                Mask mask = t.den[static_cast<std::size_t>(i)].first;
                num = num * subset_power(mask, ks[static_cast<std::size_t>(i)]);
                den.push_back({mask, ks[static_cast<std::size_t>(i)] + 1});
            }
            std::sort(den.begin(), den.end());
            MultiPoly& slot = out[den];
            slot += num;
            if (slot.is_zero()) out.erase(den);
        }
    }
    return out;
}

std::map<DenKey, MultiPoly> composition_expansion(const FracSum& s, int weight) {
    std::map<DenKey, MultiPoly> out;
    for (const FracTerm& t : s.terms) {
        int arity = static_cast<int>(t.den.size());
        for (const IndexWord& w : compositions(weight, arity, false)) {
            MultiPoly num = t.numerator;
            DenKey den;
            for (int i = 0; i < arity; ++i) {
                Mask mask = t.den[static_cast<std::size_t>(i)].first;
                num = num * subset_power(mask, w[i] - 1);
                den.push_back({mask, w[i]});
            }
            std::sort(den.begin(), den.end());
            MultiPoly& slot = out[den];
            slot += num;
            if (slot.is_zero()) out.erase(den);
        }
    }
    return out;
}

} // namespace zeta4
