#include "zeta4/ctfit.hpp"

#include <stdexcept>

#include "zeta4/errors.hpp"

namespace zeta4 {

std::vector<double> ct_schedule(double k_min, double k_max, double step) {
    std::vector<double> ks;
    for (double k = k_min; k <= k_max + 1e-9; k += step) ks.push_back(k);
    return ks;
}

namespace {

// Model: value = P(T) + (1-z) Q1(T) + (1-z)^2 Q2(T) with deg P = d,
// deg Q1 = d+1, deg Q2 = d+2.  The correction blocks absorb the leading
// parts of the vanishing error, which is what lets the schedule stay at
// desk-scale distances from 1.
std::vector<BigReal> model_row(const CtSample& s, int d, mpfr_prec_t prec) {
    std::vector<BigReal> row;
    BigReal u = BigReal(1, prec) - s.z;
    BigReal tp(1, prec);
    for (int i = 0; i <= d; ++i) {
        row.push_back(tp);
        tp = tp * s.T;
    }
    BigReal up = u;
    for (int i = 0; i <= d + 1; ++i) {
        row.push_back(up);
        up = up * s.T;
    }
    BigReal vp = u * u;
    for (int i = 0; i <= d + 2; ++i) {
        row.push_back(vp);
        vp = vp * s.T;
    }
    return row;
}

BigReal fit_c0(const std::vector<CtSample>& samples, int deg_p, mpfr_prec_t prec,
               std::vector<BigReal>* coeffs_out) {
    const std::size_t n = samples.size();
    std::vector<std::vector<BigReal>> X(n);
    std::vector<BigReal> y;
    y.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        X[r] = model_row(samples[r], deg_p, prec);
        BigReal v(prec);
        mpfr_set(v.raw(), samples[r].value.raw(), MPFR_RNDN);
        y.push_back(std::move(v));
    }
    const std::size_t p = X[0].size();
    if (n < p) throw IllConditionedFit("ct fit: fewer samples than model columns");
    std::vector<std::vector<BigReal>> G(p, std::vector<BigReal>(p + 1, BigReal(0, prec)));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            BigReal s(0, prec);
            for (std::size_t r = 0; r < n; ++r) s += X[r][i] * X[r][j];
            G[i][j] = s;
        }
        BigReal s(0, prec);
        for (std::size_t r = 0; r < n; ++r) s += X[r][i] * y[r];
        G[i][p] = s;
    }
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (G[r][col].abs() > G[piv][col].abs()) piv = r;
        if (G[piv][col].is_zero()) throw IllConditionedFit("ct fit: singular normal equations");
        std::swap(G[col], G[piv]);
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            BigReal f = G[r][col] / G[col][col];
            for (std::size_t j = col; j <= p; ++j) G[r][j] -= f * G[col][j];
        }
    }
    if (coeffs_out) {
        coeffs_out->clear();
        for (int i = 0; i <= deg_p; ++i)
            coeffs_out->push_back(G[static_cast<std::size_t>(i)][p] / G[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    return G[0][p] / G[0][0];
}

} // namespace

CtFit ct_extract(const std::vector<CtSample>& samples, int degree_hint, mpfr_prec_t prec,
                 double max_residual) {
    if (static_cast<int>(samples.size()) < degree_hint + 2)
        throw InvalidArguments("ct_extract: need at least degree_hint + 2 samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].z > samples[i - 1].z))
            throw InvalidArguments("ct_extract: schedule must increase toward 1");

    // keep the closest-to-1 samples, two more than the model columns
    std::size_t want = static_cast<std::size_t>(3 * degree_hint + 6 + 2);
    std::size_t use = std::min(samples.size(), std::max<std::size_t>(want, static_cast<std::size_t>(degree_hint + 2)));
    std::vector<CtSample> sel(samples.end() - static_cast<long>(use), samples.end());

    // the normal equations mix scales like T^d against (1-z)^2, so solve
    // well above the sample precision
    mpfr_prec_t solve_prec = std::max<mpfr_prec_t>(2 * prec + 64, 320);

    CtFit fit;
    fit.samples = sel;
    fit.c0 = fit_c0(sel, degree_hint, solve_prec, &fit.poly_coeffs);

    BigReal spread(0, solve_prec);
    if (sel.size() > static_cast<std::size_t>(3 * degree_hint + 6)) {
        for (std::size_t drop = 0; drop < sel.size(); ++drop) {
            std::vector<CtSample> rest;
            for (std::size_t i = 0; i < sel.size(); ++i)
                if (i != drop) rest.push_back(sel[i]);
            try {
                BigReal c0 = fit_c0(rest, degree_hint, solve_prec, nullptr);
                BigReal dev = (c0 - fit.c0).abs();
                if (dev > spread) spread = dev;
            } catch (const IllConditionedFit&) {
                // dropping a sample may make the system square; skip it
            }
        }
    }
    fit.residual = spread;
    if (max_residual > 0) {
        BigReal lim(0, solve_prec);
        mpfr_set_d(lim.raw(), max_residual, MPFR_RNDN);
        if (fit.residual > lim)
            throw IllConditionedFit("ct_extract: leave-one-out spread above bound");
    }
    return fit;
}

CtFit ct_extract(const std::function<BigReal(const BigReal&)>& f,
                 const std::vector<double>& schedule, int degree_hint, mpfr_prec_t prec,
                 double max_residual) {
    std::vector<CtSample> samples;
    samples.reserve(schedule.size());
    for (double k : schedule) {
        CtSample s;
        s.k = k;
        s.z = BigReal(1, prec) - pow10(-k, prec);
        s.T = (BigReal(1, prec) - s.z).ln() * -1L;
        s.value = f(s.z);
        samples.push_back(std::move(s));
    }
    return ct_extract(samples, degree_hint, prec, max_residual);
}

} // namespace zeta4
