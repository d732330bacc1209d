#ifndef ZETA4_POLYLOG_HPP
#define ZETA4_POLYLOG_HPP

#include <array>
#include <vector>

#include "zeta4/bigreal.hpp"
#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"

namespace zeta4 {

struct LiValue {
    BigReal value;
    BigReal err;
    long long terms = 0;
};

// Li(l1..ln; z^{e1},..,z^{en}) for 0 < z < 1 via the all-positive form of
// the defining series, summed as nested prefix sums over the strictly
// decreasing chain; truncation controlled by a geometric tail bound in the
// outermost exponent.  Exponents must be nondecreasing (every pattern the
// harmonic product produces is).
LiValue eval_li(const std::vector<int>& word, const std::vector<int>& zexps,
                const BigReal& z, const BigReal& target_err, mpfr_prec_t prec,
                long long max_terms = 400000000LL);

inline LiValue eval_li(const IndexWord& w, const ZPattern& p, const BigReal& z,
                       const BigReal& target_err, mpfr_prec_t prec) {
    return eval_li(w.parts(), p.exps(), z, target_err, prec);
}

// Batched evaluation of the parameterized sums of fixed depth: returns,
// for every weight w in [depth, max_weight], the sum over all compositions
// (l1..ld) of w of  x1^{l1-1}..xd^{ld-1} * Li(l; pattern).  The pattern is
// the ladder (z,z^2,..,z^d) or the flat one (z,..,z).  One pass of the
// series covers all weights at once by carrying a truncated polynomial in
// the weight-marking variable.
struct ParamSums {
    int depth = 0;
    int max_weight = 0;
    std::vector<BigReal> by_weight; // index i holds weight depth+i
    BigReal err;                    // common absolute bound
    long long terms = 0;

    const BigReal& at_weight(int w) const { return by_weight[static_cast<std::size_t>(w - depth)]; }
};

ParamSums eval_param_sums(int depth, bool ladder, const std::vector<Rational>& x,
                          const BigReal& z, int max_weight, const BigReal& target_err,
                          mpfr_prec_t prec, long long max_terms = 400000000LL);

// Single-weight convenience: kind S, D, T, Q selects depth 1..4.
BigReal eval_param_sum(char kind, int weight, const std::vector<Rational>& x, bool ladder,
                       const BigReal& z, const BigReal& target_err, mpfr_prec_t prec);

} // namespace zeta4

#endif
