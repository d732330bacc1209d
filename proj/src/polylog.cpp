#include "zeta4/polylog.hpp"

#include <vector>

#include "zeta4/errors.hpp"

namespace zeta4 {

namespace {

// tail of sum_{m>M} q^m = q^{M+1}/(1-q), with the inner-sum growth folded
// into a constant: harmonic levels contribute at most 4*m^{1/4} each and
// m^{3/4} is absorbed by 1/m^{l1}, so a flat factor 64 * zeta(2)^3 < 300
// suffices for words; the weight-marked engine needs the split count and
// |x| powers as well.
void tail_bound(mpfr_ptr out, mpfr_srcptr q, long long m, double constant, mpfr_prec_t prec) {
    BigReal t(prec);
    mpfr_set_si(t.raw(), static_cast<long>(m + 1), MPFR_RNDN);
    mpfr_pow(out, q, t.raw(), MPFR_RNDU);
    mpfr_ui_sub(t.raw(), 1, q, MPFR_RNDD);
    mpfr_div(out, out, t.raw(), MPFR_RNDU);
    mpfr_mul_d(out, out, constant, MPFR_RNDU);
}

std::vector<BigReal> reals(std::size_t n, mpfr_prec_t prec) {
    std::vector<BigReal> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(prec);
    return v;
}

} // namespace

LiValue eval_li(const std::vector<int>& word, const std::vector<int>& zexps,
                const BigReal& z, const BigReal& target_err, mpfr_prec_t prec,
                long long max_terms) {
    const int n = static_cast<int>(word.size());
    if (n == 0) throw InvalidArguments("eval_li: empty word");
    if (word.size() != zexps.size()) throw ArityMismatch("eval_li: word vs pattern length");
    for (int j = 0; j < n; ++j) {
        if (word[static_cast<std::size_t>(j)] < 1) throw InvalidArguments("eval_li: index entries must be positive");
        if (zexps[static_cast<std::size_t>(j)] < 1) throw InvalidArguments("eval_li: z exponents must be positive");
        if (j > 0 && zexps[static_cast<std::size_t>(j)] < zexps[static_cast<std::size_t>(j - 1)])
            throw InvalidArguments("eval_li: z exponents must be nondecreasing");
    }
    if (!(z > BigReal(0, prec)) || !(z < BigReal(1, prec)))
        throw InvalidArguments("eval_li: need 0 < z < 1");

    std::vector<int> d(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        d[static_cast<std::size_t>(j)] = zexps[static_cast<std::size_t>(j)] - (j ? zexps[static_cast<std::size_t>(j - 1)] : 0);

    int maxl = 0;
    for (int v : word) maxl = std::max(maxl, v);

    // level[j] accumulates the nested sum from level j inward
    std::vector<BigReal> level = reals(static_cast<std::size_t>(n), prec);
    std::vector<BigReal> zpow = reals(static_cast<std::size_t>(n), prec);
    std::vector<BigReal> zstep = reals(static_cast<std::size_t>(n), prec);
    for (int j = 0; j < n; ++j) {
        mpfr_set_ui(zpow[static_cast<std::size_t>(j)].raw(), 1, MPFR_RNDN);
        mpfr_pow_si(zstep[static_cast<std::size_t>(j)].raw(), z.raw(), d[static_cast<std::size_t>(j)], MPFR_RNDN);
    }
    std::vector<BigReal> minv_pow = reals(static_cast<std::size_t>(maxl + 1), prec);
    BigReal minv(prec), t(prec), term(prec), bound(prec), q(prec);
    mpfr_set(q.raw(), zstep[0].raw(), MPFR_RNDN);

    long long m = 0;
    bool converged = false;
    while (m < max_terms) {
        ++m;
        mpfr_set_ui(minv_pow[0].raw(), 1, MPFR_RNDN);
        mpfr_set_si(t.raw(), static_cast<long>(m), MPFR_RNDN);
        mpfr_ui_div(minv.raw(), 1, t.raw(), MPFR_RNDN);
        for (int i = 1; i <= maxl; ++i)
            mpfr_mul(minv_pow[static_cast<std::size_t>(i)].raw(), minv_pow[static_cast<std::size_t>(i - 1)].raw(), minv.raw(), MPFR_RNDN);
        for (int j = 0; j < n; ++j) {
            if (d[static_cast<std::size_t>(j)] != 0)
                mpfr_mul(zpow[static_cast<std::size_t>(j)].raw(), zpow[static_cast<std::size_t>(j)].raw(), zstep[static_cast<std::size_t>(j)].raw(), MPFR_RNDN);
            mpfr_mul(term.raw(), zpow[static_cast<std::size_t>(j)].raw(), minv_pow[static_cast<std::size_t>(word[static_cast<std::size_t>(j)])].raw(), MPFR_RNDN);
            if (j + 1 < n) mpfr_mul(term.raw(), term.raw(), level[static_cast<std::size_t>(j + 1)].raw(), MPFR_RNDN);
            mpfr_add(level[static_cast<std::size_t>(j)].raw(), level[static_cast<std::size_t>(j)].raw(), term.raw(), MPFR_RNDN);
        }
        if ((m & 31) == 0) {
            tail_bound(bound.raw(), q.raw(), m, 300.0, prec);
            if (mpfr_cmp(bound.raw(), target_err.raw()) < 0) {
                converged = true;
                break;
            }
        }
    }
    if (!converged) {
        tail_bound(bound.raw(), q.raw(), m, 300.0, prec);
        if (mpfr_cmp(bound.raw(), target_err.raw()) >= 0)
            throw PrecisionInfeasible("eval_li: term budget exhausted before tail bound met");
    }

    LiValue out{BigReal(prec), BigReal(prec), m};
    mpfr_set(out.value.raw(), level[0].raw(), MPFR_RNDN);
    // truncation bound plus a coarse rounding allowance
    mpfr_abs(t.raw(), level[0].raw(), MPFR_RNDU);
    mpfr_add_ui(t.raw(), t.raw(), 4, MPFR_RNDU);
    mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(16 * n), MPFR_RNDU);
    mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(std::max(1LL, m)), MPFR_RNDU);
    mpfr_mul_2si(t.raw(), t.raw(), -static_cast<long>(prec - 4), MPFR_RNDU);
    mpfr_add(out.err.raw(), bound.raw(), t.raw(), MPFR_RNDU);
    return out;
}

ParamSums eval_param_sums(int depth, bool ladder, const std::vector<Rational>& x,
                          const BigReal& z, int max_weight, const BigReal& target_err,
                          mpfr_prec_t prec, long long max_terms) {
    if (depth < 1 || depth > 4) throw InvalidArguments("eval_param_sums: depth must be 1..4");
    if (static_cast<int>(x.size()) < depth) throw InvalidArguments("eval_param_sums: missing parameters");
    if (max_weight < depth) throw InvalidArguments("eval_param_sums: max_weight below depth");
    if (!(z > BigReal(0, prec)) || !(z < BigReal(1, prec)))
        throw InvalidArguments("eval_param_sums: need 0 < z < 1");

    const int K = max_weight - depth; // truncation degree of the weight marker
    const int n = depth;

    std::vector<BigReal> xv = reals(static_cast<std::size_t>(n), prec);
    double xmax = 1.0;
    for (int j = 0; j < n; ++j) {
        mpfr_set_q(xv[static_cast<std::size_t>(j)].raw(), x[static_cast<std::size_t>(j)].get_mpq_t(), MPFR_RNDN);
        double a = std::abs(x[static_cast<std::size_t>(j)].get_d());
        xmax = std::max(xmax, a);
    }
    double split_count = 1.0;
    for (int i = 1; i <= n - 1; ++i) split_count *= (K + i) / static_cast<double>(i);
    double tail_const = 300.0 * split_count;
    for (int i = 0; i < K; ++i) tail_const *= xmax;

    // S[j][k]: truncated weight-marker series of the sum from level j inward
    std::vector<std::vector<BigReal>> S;
    for (int j = 0; j < n; ++j) S.push_back(reals(static_cast<std::size_t>(K + 1), prec));

    std::vector<BigReal> zpow = reals(static_cast<std::size_t>(n), prec);
    std::vector<BigReal> zstep = reals(static_cast<std::size_t>(n), prec);
    for (int j = 0; j < n; ++j) {
        int dj = ladder ? 1 : (j == 0 ? 1 : 0);
        mpfr_set_ui(zpow[static_cast<std::size_t>(j)].raw(), 1, MPFR_RNDN);
        mpfr_pow_si(zstep[static_cast<std::size_t>(j)].raw(), z.raw(), dj, MPFR_RNDN);
    }

    BigReal minv(prec), t(prec), term(prec), bound(prec), q(prec);
    mpfr_set(q.raw(), z.raw(), MPFR_RNDN); // outermost step is z^1 in both styles
    std::vector<BigReal> g = reals(static_cast<std::size_t>(K + 1), prec);

    long long m = 0;
    bool converged = false;
    while (m < max_terms) {
        ++m;
        mpfr_set_si(t.raw(), static_cast<long>(m), MPFR_RNDN);
        mpfr_ui_div(minv.raw(), 1, t.raw(), MPFR_RNDN);
        for (int j = 0; j < n; ++j) {
            bool stepped = ladder || j == 0;
            if (stepped)
                mpfr_mul(zpow[static_cast<std::size_t>(j)].raw(), zpow[static_cast<std::size_t>(j)].raw(), zstep[static_cast<std::size_t>(j)].raw(), MPFR_RNDN);
            // g_k = z^{d_j m} * x_j^k / m^{k+1}
            mpfr_mul(g[0].raw(), zpow[static_cast<std::size_t>(j)].raw(), minv.raw(), MPFR_RNDN);
            for (int k = 1; k <= K; ++k) {
                mpfr_mul(g[static_cast<std::size_t>(k)].raw(), g[static_cast<std::size_t>(k - 1)].raw(), xv[static_cast<std::size_t>(j)].raw(), MPFR_RNDN);
                mpfr_mul(g[static_cast<std::size_t>(k)].raw(), g[static_cast<std::size_t>(k)].raw(), minv.raw(), MPFR_RNDN);
            }
            if (j + 1 < n) {
                for (int k = 0; k <= K; ++k)
                    for (int a = 0; a <= k; ++a) {
                        mpfr_mul(term.raw(), g[static_cast<std::size_t>(a)].raw(), S[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k - a)].raw(), MPFR_RNDN);
                        mpfr_add(S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].raw(), S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].raw(), term.raw(), MPFR_RNDN);
                    }
            } else {
                for (int k = 0; k <= K; ++k)
                    mpfr_add(S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].raw(), S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].raw(), g[static_cast<std::size_t>(k)].raw(), MPFR_RNDN);
            }
        }
        if ((m & 31) == 0) {
            tail_bound(bound.raw(), q.raw(), m, tail_const, prec);
            if (mpfr_cmp(bound.raw(), target_err.raw()) < 0) {
                converged = true;
                break;
            }
        }
    }
    tail_bound(bound.raw(), q.raw(), m, tail_const, prec);
    if (!converged && mpfr_cmp(bound.raw(), target_err.raw()) >= 0)
        throw PrecisionInfeasible("eval_param_sums: term budget exhausted before tail bound met");

    ParamSums out;
    out.depth = depth;
    out.max_weight = max_weight;
    out.terms = m;
    out.err = BigReal(prec);
    mpfr_abs(t.raw(), S[0][0].raw(), MPFR_RNDU);
    for (int k = 0; k <= K; ++k) {
        mpfr_abs(term.raw(), S[0][static_cast<std::size_t>(k)].raw(), MPFR_RNDU);
        if (mpfr_cmp(term.raw(), t.raw()) > 0) mpfr_set(t.raw(), term.raw(), MPFR_RNDU);
    }
    mpfr_add_ui(t.raw(), t.raw(), 4, MPFR_RNDU);
    mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(32 * n * (K + 1)), MPFR_RNDU);
    mpfr_mul_si(t.raw(), t.raw(), static_cast<long>(std::max(1LL, m)), MPFR_RNDU);
    mpfr_mul_2si(t.raw(), t.raw(), -static_cast<long>(prec - 4), MPFR_RNDU);
    mpfr_add(out.err.raw(), bound.raw(), t.raw(), MPFR_RNDU);
    for (int k = 0; k <= K; ++k) out.by_weight.push_back(S[0][static_cast<std::size_t>(k)]);
    return out;
}

BigReal eval_param_sum(char kind, int weight, const std::vector<Rational>& x, bool ladder,
                       const BigReal& z, const BigReal& target_err, mpfr_prec_t prec) {
    int depth = 0;
    switch (kind) {
        case 'S': depth = 1; break;
        case 'D': depth = 2; break;
        case 'T': depth = 3; break;
        case 'Q': depth = 4; break;
        default: throw InvalidArguments("eval_param_sum: kind must be one of S D T Q");
    }
    return eval_param_sums(depth, ladder, x, z, weight, target_err, prec).at_weight(weight);
}

} // namespace zeta4
