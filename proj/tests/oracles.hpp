// Independent test-side oracles.  Nothing here calls the library evaluation
// paths it is used to check.
#ifndef ZETA4_TESTS_ORACLES_HPP
#define ZETA4_TESTS_ORACLES_HPP

#include <vector>

#include "zeta4/bigreal.hpp"

namespace zeta4::oracle {

// zeta(s) for integer s >= 2 by direct summation with an Euler-Maclaurin
// tail: integral term, half-term, and two Bernoulli corrections; the error
// is far below 1e-25 at M = 4000 for every s used in the tests.
inline BigReal em_zeta(long s, mpfr_prec_t prec, long M = 4000) {
    BigReal sum(0, prec);
    for (long m = 1; m < M; ++m) sum += BigReal(1, prec) / BigReal(m, prec).pow_si(s);
    BigReal Ms = BigReal(M, prec);
    sum += Ms.pow_si(1 - s) / BigReal(s - 1, prec);              // integral
    sum += Ms.pow_si(-s) / 2;                                    // half-term
    sum += Ms.pow_si(-s - 1) * s / 12;                           // B2 term
    BigReal b4 = Ms.pow_si(-s - 3) * (s * (s + 1) * (s + 2));
    sum -= b4 / 720;                                             // B4 term
    return sum;
}

// truncated direct nested summation of the defining series, decreasing
// chain cut at m1 <= M; only a coarse cross-check (tail is O(log^3 M / M^{l1-1})).
inline BigReal direct_mzv(const std::vector<int>& word, long M, mpfr_prec_t prec) {
    const int n = static_cast<int>(word.size());
    std::vector<BigReal> level(static_cast<std::size_t>(n), BigReal(0, prec));
    for (long m = 1; m <= M; ++m) {
        BigReal minv = BigReal(1, prec) / BigReal(m, prec);
        for (int j = 0; j < n; ++j) {
            BigReal term = minv.pow_si(word[static_cast<std::size_t>(j)]);
            if (j + 1 < n) term *= level[static_cast<std::size_t>(j + 1)];
            level[static_cast<std::size_t>(j)] += term;
        }
    }
    return level[0];
}

// number of compositions of `weight` into `depth` positive parts with an
// optional first-part floor, by exhaustive enumeration
inline long count_compositions(int weight, int depth, int first_min) {
    if (depth == 1) return weight >= first_min ? 1 : 0;
    long total = 0;
    for (int v = first_min; v <= weight - (depth - 1); ++v)
        total += count_compositions(weight - v, depth - 1, 1);
    return total;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace zeta4::oracle

#endif
