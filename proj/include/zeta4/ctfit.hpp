#ifndef ZETA4_CTFIT_HPP
#define ZETA4_CTFIT_HPP

#include <functional>
#include <vector>

#include "zeta4/bigreal.hpp"

namespace zeta4 {

// One sample of the function under extrapolation: z close to 1 and the
// associated T = -log(1-z).
struct CtSample {
    double k = 0; // z = 1 - 10^{-k}
    BigReal z;
    BigReal T;
    BigReal value;
    CtSample() : z(64), T(64), value(64) {}
};

struct CtFit {
    std::vector<CtSample> samples;
    std::vector<BigReal> poly_coeffs; // c_0..c_d of the polynomial in T
    BigReal c0;
    BigReal residual; // leave-one-out spread of c0
    CtFit() : c0(64), residual(64) {}
};

// z-schedule 1 - 10^{-k} for k from k_min to k_max in the given step.
std::vector<double> ct_schedule(double k_min = 1.4, double k_max = 5.2, double step = 0.2);

// Least-squares fit of value ~ P(T) + (1-z) Q1(T) + (1-z)^2 Q2(T), reading
// off P(0).  degree_hint is the degree of P (the power of log(1-z) that
// survives at z = 1); the correction blocks absorb the leading parts of
// the vanishing error so the schedule can stay at desk-scale distances
// from 1.  Uses the samples closest to 1 that keep the system
// overdetermined.  Needs at least degree_hint + 2 samples; throws
// IllConditionedFit when the leave-one-out spread exceeds max_residual
// (if positive).
CtFit ct_extract(const std::vector<CtSample>& samples, int degree_hint, mpfr_prec_t prec,
                 double max_residual = 0.0);

// Convenience: builds samples by calling f at each scheduled z.
CtFit ct_extract(const std::function<BigReal(const BigReal&)>& f,
                 const std::vector<double>& schedule, int degree_hint, mpfr_prec_t prec,
                 double max_residual = 0.0);

} // namespace zeta4

#endif
