#include "zeta4/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zeta4/coset_tables.hpp"
#include "zeta4/ctfit.hpp"
#include "zeta4/errors.hpp"
#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"
#include "zeta4/pfrac.hpp"
#include "zeta4/polylog.hpp"
#include "zeta4/qshuffle.hpp"
#include "zeta4/theorem1.hpp"
#include "zeta4/zetasym.hpp"

namespace zeta4 {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

std::string fmt_residual(const BigReal& r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", r.to_double());
    return buf;
}

std::string fmt_comp(const std::array<int, 4>& c) {
    std::ostringstream os;
    os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ')';
    return os.str();
}

std::array<int, 4> to_arr(const IndexWord& w) {
    std::array<int, 4> a{1, 1, 1, 1};
    for (int i = 0; i < w.depth() && i < 4; ++i) a[static_cast<std::size_t>(i)] = w[i];
    return a;
}

Rational pow_rat(const Rational& b, long e) {
    Rational out(1);
    for (long i = 0; i < e; ++i) out *= b;
    return out;
}

Rational pow_int(long b, long e) { return pow_rat(Rational(b), e); }

// numeric check helper: records the worst residual over sub-items
struct NumericCheck {
    CheckResult res;
    BigReal worst;
    double tol;
    Clock::time_point t0 = Clock::now();

    NumericCheck(std::string id, std::string anchor, double tol_, mpfr_prec_t prec)
        : worst(0, prec), tol(tol_) {
        res.id = std::move(id);
        res.anchor = std::move(anchor);
    }
    void update(const BigReal& r) {
        if (r > worst) worst = r;
    }
    CheckResult finish(const CheckContext& ctx, const std::string& params = "") {
        res.residual = fmt_residual(worst);
        res.params = params;
        res.seed = ctx.seed;
        res.elapsed_ms = ms_since(t0);
        res.status = worst.to_double() < tol ? "pass" : "fail";
        return res;
    }
};

CheckResult symbolic_result(const CheckContext& ctx, const std::string& id,
                            const std::string& anchor, bool ok, Clock::time_point t0,
                            const std::string& detail = "", const std::string& params = "") {
    CheckResult r;
    r.id = id;
    r.anchor = anchor;
    r.status = ok ? "pass" : "fail";
    r.detail = ok ? "" : detail;
    r.params = params;
    r.seed = ctx.seed;
    r.elapsed_ms = ms_since(t0);
    return r;
}

std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t n, long max_abs = 2) {
    std::vector<Rational> out;
    std::uniform_int_distribution<long> den_d(1, 8);
    for (std::size_t i = 0; i < n; ++i) {
        long den = den_d(rng);
        std::uniform_int_distribution<long> num_d(-max_abs * den, max_abs * den);
        long num = num_d(rng);
        if (num == 0) num = 1;
        Rational q(num, den);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

// ---------- shared numeric machinery ----------

// one evaluator per suite invocation, serialized internally
struct Numerics {
    MzvEvaluator ev;
    mpfr_prec_t prec;

    explicit Numerics(const CheckContext& ctx)
        : ev(ctx.prec, ctx.target_err(), ctx.cache), prec(ctx.prec) {}

    BigReal zeta(const IndexWord& w) { return ev.zeta(w); }
    BigReal zeta_star(const IndexWord& w) { return ev.zeta_star(w); }

    BigReal eval_monomial(const ZMonomial& mono, const std::array<int, 4>& comp) {
        BigReal acc(1, prec);
        for (const ZWord& w : mono) {
            std::vector<int> parts;
            for (Mask m : w) {
                int v = 0;
                for (int j = 1; j <= 4; ++j)
                    if (m & (1u << (j - 1))) v += comp[static_cast<std::size_t>(j - 1)];
                parts.push_back(v);
            }
            acc *= ev.zeta(IndexWord(parts));
        }
        return acc;
    }

    BigReal eval_zetasum(const ZetaSum& s, const std::array<int, 4>& comp) {
        BigReal acc(0, prec);
        for (const auto& [mono, c] : s.terms()) acc += eval_monomial(mono, comp) * BigReal(c, prec);
        return acc;
    }

    // Z_l(pattern): sum over admissible compositions of the weighted values
    BigReal z_pattern_value(int l, const std::array<Rational, 4>& pattern) {
        BigReal acc(0, prec);
        for (const IndexWord& w : compositions(l, 4, true)) {
            Rational coeff(1);
            for (int i = 0; i < 4; ++i) coeff *= pow_rat(pattern[static_cast<std::size_t>(i)], w[i] - 1);
            if (coeff == 0) continue;
            acc += ev.zeta(w) * BigReal(coeff, prec);
        }
        return acc;
    }

    // star-weighted parameterized sum over all compositions of given depth
    BigReal star_param_sum(int depth, int weight, const std::vector<Rational>& x) {
        BigReal acc(0, prec);
        for (const IndexWord& w : compositions(weight, depth, false)) {
            Rational coeff(1);
            for (int i = 0; i < depth; ++i) coeff *= pow_rat(x[static_cast<std::size_t>(i)], w[i] - 1);
            if (coeff == 0) continue;
            acc += ev.zeta_star(w) * BigReal(coeff, prec);
        }
        return acc;
    }
};

} // namespace

// ---------------------------------------------------------------- sumformula

std::vector<CheckResult> check_sum_formula(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;
    for (int l = std::max(5, ctx.weight_min); l <= std::max(9, ctx.weight_max); ++l) {
        NumericCheck c("sumformula.l" + std::to_string(l), "sum formula, depth four", ctx.tol, ctx.prec);
        BigReal sum(0, ctx.prec);
        for (const IndexWord& w : compositions(l, 4, true)) sum += nm.zeta(w);
        c.update((sum - nm.zeta(IndexWord({l}))).abs());
        out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
    }
    return out;
}

// --------------------------------------------------------------------- thm1

std::vector<CheckResult> check_theorem1(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;

    // coefficientwise: every monomial coefficient of the assembled side
    // must equal zeta(l)
    for (int l = 5; l <= 7; ++l) {
        NumericCheck c("thm1.w" + std::to_string(l) + ".coeff",
                       "four-parameter sum formula, coefficientwise", 1e-9, ctx.prec);
        std::vector<IndexWord> comps = compositions(l, 4, true);
        std::vector<MultiPoly> polys(comps.size());
        parallel_for(ctx.mode, comps.size(), [&](std::size_t i) {
            polys[i] = theorem1_coefficient(comps[i]);
        });
        std::map<MultiPoly::Exponents, BigReal> acc;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            BigReal zl = nm.zeta(comps[i]);
            for (const auto& [e, coeff] : polys[i].terms()) {
                auto it = acc.find(e);
                if (it == acc.end()) it = acc.emplace(e, BigReal(0, ctx.prec)).first;
                it->second += zl * BigReal(coeff, ctx.prec);
            }
        }
        BigReal target = nm.zeta(IndexWord({l}));
        int monomials = 0;
        for (const IndexWord& w : compositions(l, 4, false)) {
            MultiPoly::Exponents e{w[0] - 1, w[1] - 1, w[2] - 1, w[3] - 1};
            auto it = acc.find(e);
            BigReal got = (it == acc.end()) ? BigReal(0, ctx.prec) : it->second;
            c.update((got - target).abs());
            ++monomials;
        }
        out.push_back(c.finish(ctx, "weight=" + std::to_string(l) +
                                        " monomials=" + std::to_string(monomials)));
    }

    // random-point mode at weight 8
    {
        const int l = 8;
        NumericCheck c("thm1.w8.random", "four-parameter sum formula, random points", 1e-9, ctx.prec);
        std::mt19937_64 rng(static_cast<unsigned long long>(ctx.seed));
        std::vector<IndexWord> comps = compositions(l, 4, true);
        std::vector<MultiPoly> polys(comps.size());
        parallel_for(ctx.mode, comps.size(), [&](std::size_t i) {
            polys[i] = theorem1_coefficient(comps[i]);
        });
        for (int point = 0; point < 5; ++point) {
            std::vector<Rational> xr = random_rationals(rng, 4);
            std::array<Rational, 4> x{xr[0], xr[1], xr[2], xr[3]};
            BigReal lhs(0, ctx.prec);
            for (std::size_t i = 0; i < comps.size(); ++i)
                lhs += nm.zeta(comps[i]) * BigReal(polys[i].substitute(x), ctx.prec);
            BigReal rhs = nm.zeta(IndexWord({l})) * BigReal(rhs_multiplier(l).substitute(x), ctx.prec);
            c.update((lhs - rhs).abs());
        }
        out.push_back(c.finish(ctx, "weight=8 points=5"));
    }

    // exact symbolic properties of the bracket
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        Perm gen = Perm::cycles("(1234)");
        for (int l = 5; l <= 9 && ok; ++l)
            for (const IndexWord& w : compositions(l, 4, true)) {
                MultiPoly p = theorem1_coefficient(w);
                if (!(act(gen, p) == p)) {
                    ok = false;
                    detail = "not invariant at " + w.str();
                    break;
                }
            }
        out.push_back(symbolic_result(ctx, "thm1.cinvariance",
                                      "cyclic invariance of the bracket", ok, t0, detail,
                                      "weights=5..9"));
    }
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (int l = 5; l <= 9 && ok; ++l)
            for (const IndexWord& w : compositions(l, 4, true)) {
                if (!(theorem1_coefficient(w) == theorem1_coefficient_route2(w))) {
                    ok = false;
                    detail = "route mismatch at " + w.str();
                    break;
                }
            }
        out.push_back(symbolic_result(ctx, "thm1.dualroute",
                                      "merged vs split assembly of the bracket", ok, t0, detail,
                                      "weights=5..9"));
    }
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        std::array<Rational, 4> e1{1, 0, 0, 0};
        for (int l = 5; l <= 9 && ok; ++l)
            for (const IndexWord& w : compositions(l, 4, true)) {
                if (theorem1_coefficient(w).substitute(e1) != 1) {
                    ok = false;
                    detail = "reduction value differs from one at " + w.str();
                    break;
                }
            }
        out.push_back(symbolic_result(ctx, "thm1.reduction",
                                      "specialization to the plain sum formula", ok, t0, detail,
                                      "weights=5..9"));
    }
    return out;
}

// --------------------------------------------------------------------- thm2

namespace {

Rational thm2_weight(int part, const IndexWord& w) {
    long l1 = w[0], l2 = w[1], l3 = w[2];
    long l12 = l1 + l2, l23 = l2 + l3, l123 = l1 + l2 + l3, l13 = l1 + l3;
    switch (part) {
        case 1:
            return pow_int(2, l123 - 2) + pow_int(2, l12 - 2) + pow_int(2, l1 - 1) -
                   pow_int(2, l23 - 1) - pow_int(2, l2 - 1);
        case 2:
            return pow_int(2, l123 - 1) + pow_int(2, l12 - 1) - pow_int(2, l23) -
                   pow_int(2, l2) - pow_int(2, l3 + 1);
        case 3:
            return pow_int(2, l1) + pow_int(2, l3 + 1);
        case 4:
            return (pow_int(3, l2) * pow_int(2, l1 - 1) - pow_int(3, l2) - 1) * pow_int(2, l13);
    }
    return 0;
}

Rational thm2_rhs_factor(int part, int l) {
    switch (part) {
        case 1: return Rational(l);
        case 2: return Rational(l - 3);
        case 3: return Rational(l + 3);
        case 4: return rat((l + 1) * (l * l + 5 * l - 18), 12);
    }
    return 0;
}

} // namespace

std::vector<CheckResult> check_theorem2(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;
    const char* names[4] = {"i1", "i2", "i3", "ii"};
    for (int part = 1; part <= 4; ++part) {
        for (int l = std::max(5, ctx.weight_min); l <= ctx.weight_max; ++l) {
            NumericCheck c(std::string("thm2.") + names[part - 1] + ".l" + std::to_string(l),
                           "weighted sum formulas", ctx.tol, ctx.prec);
            BigReal lhs(0, ctx.prec);
            for (const IndexWord& w : compositions(l, 4, true))
                lhs += nm.zeta(w) * BigReal(thm2_weight(part, w), ctx.prec);
            BigReal rhs = nm.zeta(IndexWord({l})) * BigReal(thm2_rhs_factor(part, l), ctx.prec);
            c.update((lhs - rhs).abs());
            out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
        }
    }
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (int l = 5; l <= ctx.weight_max && ok; ++l)
            for (const IndexWord& w : compositions(l, 4, true)) {
                if (thm2_weight(3, w) != thm2_weight(1, w) * 2 - thm2_weight(2, w)) {
                    ok = false;
                    detail = "weight mismatch at " + w.str();
                    break;
                }
            }
        out.push_back(symbolic_result(ctx, "thm2.consistency",
                                      "third weighting = twice first minus second", ok, t0,
                                      detail, "weights<=" + std::to_string(ctx.weight_max)));
    }
    return out;
}

// ------------------------------------------------------------------- prop21

namespace {

// engine cache for parameterized sums at one z
struct ParamEngines {
    mpfr_prec_t prec;
    BigReal z;
    BigReal err;
    int max_weight;
    std::map<std::tuple<int, bool, std::vector<Rational>>, ParamSums> memo;

    ParamEngines(mpfr_prec_t p, const BigReal& z_, const BigReal& err_, int mw)
        : prec(p), z(z_), err(err_), max_weight(mw) {}

    const ParamSums& get(int depth, bool ladder, const std::vector<Rational>& x) {
        auto key = std::make_tuple(depth, ladder, x);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, eval_param_sums(depth, ladder, x, z, max_weight, err, prec)).first;
        return it->second;
    }
};

std::vector<Rational> permuted(const std::array<Rational, 4>& x, const Perm& sigma, int take) {
    std::vector<Rational> out;
    for (int i = 1; i <= take; ++i) out.push_back(x[static_cast<std::size_t>(sigma(i) - 1)]);
    return out;
}

} // namespace

std::vector<CheckResult> check_prop21(const CheckContext& ctx) {
    Numerics nm(ctx);
    const S4Data& s4 = S4Data::instance();
    std::vector<CheckResult> out;

    // per-index identity, exact over formal symbols
    {
        Clock::time_point t0 = Clock::now();
        LemmaSides s = harmonic_combined_sides();
        bool ok = s.equal();
        out.push_back(symbolic_result(ctx, "prop21.identity",
                                      "combined harmonic identity, formal", ok, t0,
                                      ok ? "" : "formal sums differ"));
        // and instantiated over every composition of weight <= symbolic max
        t0 = Clock::now();
        bool sweep_ok = true;
        std::string detail;
        for (int l = 4; l <= ctx.symbolic_weight_max && sweep_ok; ++l)
            for (const IndexWord& w : compositions(l, 4, false)) {
                std::array<int, 4> comp = to_arr(w);
                if (instantiate(s.lhs, comp) != instantiate(s.rhs, comp)) {
                    sweep_ok = false;
                    detail = "mismatch at " + w.str();
                    break;
                }
            }
        out.push_back(symbolic_result(ctx, "prop21.identity.sweep",
                                      "combined harmonic identity, instantiated", sweep_ok, t0,
                                      detail, "weights<=" + std::to_string(ctx.symbolic_weight_max)));
    }

    // numeric residuals of the five-block identity
    std::mt19937_64 rng(static_cast<unsigned long long>(ctx.seed) + 21);
    std::vector<std::array<Rational, 4>> xs;
    xs.push_back({Rational(1), rat(1, 2), rat(-1, 3), rat(2, 5)});
    {
        std::vector<Rational> r = random_rationals(rng, 4);
        xs.push_back({r[0], r[1], r[2], r[3]});
    }
    BigReal sample_err = pow10(-15, ctx.prec);
    for (double zd : ctx.zs) {
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            const std::array<Rational, 4>& x = xs[xi];
            for (int l : {4, 5, 6, 7}) {
                char idbuf[64];
                std::snprintf(idbuf, sizeof idbuf, "prop21.l%d.z%.2f.x%zu", l, zd, xi);
                NumericCheck c(idbuf, "harmonic five-block identity", ctx.tol, ctx.prec);
                BigReal z(ctx.prec);
                mpfr_set_d(z.raw(), zd, MPFR_RNDN);
                ParamEngines eng(ctx.prec, z, sample_err, l);

                BigReal lhs(0, ctx.prec);
                // the five product blocks, driven by the structured form
                for (const ProductBlock& block : prop21_blocks()) {
                    for (const Perm& s : block.sigmas) {
                        std::vector<const ParamSums*> factors;
                        int pos = 1;
                        for (int d : block.factor_depths) {
                            std::vector<Rational> args;
                            for (int i = pos; i < pos + d; ++i)
                                args.push_back(x[static_cast<std::size_t>(s(i) - 1)]);
                            factors.push_back(&eng.get(d, true, args));
                            pos += d;
                        }
                        // convolve the factors over weight splits of l
                        std::vector<BigReal> acc(static_cast<std::size_t>(l + 1),
                                                 BigReal(0, ctx.prec));
                        acc[0] = BigReal(1, ctx.prec);
                        for (std::size_t f = 0; f < factors.size(); ++f) {
                            int dmin = block.min_weights[f];
                            std::vector<BigReal> next(static_cast<std::size_t>(l + 1),
                                                      BigReal(0, ctx.prec));
                            for (int total = dmin; total <= l; ++total)
                                for (int w = dmin; w <= total; ++w)
                                    next[static_cast<std::size_t>(total)] +=
                                        factors[f]->at_weight(w) *
                                        acc[static_cast<std::size_t>(total - w)];
                            acc = std::move(next);
                        }
                        if (block.sign > 0)
                            lhs += acc[static_cast<std::size_t>(l)];
                        else
                            lhs -= acc[static_cast<std::size_t>(l)];
                    }
                }
                // rhs: multiplier(x) * Li_l(z^4)
                LiValue li = eval_li(std::vector<int>{l}, std::vector<int>{4}, z, sample_err, ctx.prec);
                BigReal rhs = BigReal(rhs_multiplier(l).substitute(x), ctx.prec) * li.value;
                c.update((lhs - rhs).abs());
                out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------- prop22

namespace {

// argument tuples of the shuffle-route identities, as subscript masks
struct MaskTuple {
    std::array<Mask, 4> m;
};

std::vector<MaskTuple> prop22_rhs_tuples(int part) {
    const S4Data& s4 = S4Data::instance();
    std::vector<MaskTuple> base;
    auto add = [&](std::initializer_list<Mask> ms) {
        MaskTuple t{};
        int i = 0;
        for (Mask mm : ms) t.m[static_cast<std::size_t>(i++)] = mm;
        base.push_back(t);
    };
    Mask m14 = mask_of({1, 4}), m24 = mask_of({2, 4}), m34 = mask_of({3, 4});
    Mask m13 = mask_of({1, 3}), m23 = mask_of({2, 3}), m12 = mask_of({1, 2});
    switch (part) {
        case 1:
            add({m14, m24, m34, mask_of({4})});
            add({m14, m24, m34, mask_of({3})});
            add({m14, m24, mask_of({2}), mask_of({3})});
            add({m14, mask_of({1}), mask_of({2}), mask_of({3})});
            return base;
        case 2: {
            std::vector<MaskTuple> pre;
            auto addp = [&](std::initializer_list<Mask> ms) {
                MaskTuple t{};
                int i = 0;
                for (Mask mm : ms) t.m[static_cast<std::size_t>(i++)] = mm;
                pre.push_back(t);
            };
            addp({m13, m23, m24, mask_of({4})});
            addp({m13, m23, m24, mask_of({2})});
            addp({m13, m23, mask_of({3}), mask_of({4})});
            for (const Perm& s : generate({Perm::cycles("(13)(24)")}))
                for (const MaskTuple& t : pre) {
                    MaskTuple u{};
                    for (int i = 0; i < 4; ++i) u.m[static_cast<std::size_t>(i)] = apply_perm(s, t.m[static_cast<std::size_t>(i)]);
                    base.push_back(u);
                }
            return base;
        }
        case 3: {
            std::vector<MaskTuple> pre;
            auto addp = [&](std::array<Mask, 4> ms) { pre.push_back({ms}); };
            for (const Perm& rho : generate({Perm::cycles("(234)")}))
                addp({mask_of({1, 3, 4}), mask_of({rho(2), rho(3), rho(4)}),
                      mask_of({rho(3), rho(4)}), mask_of({rho(4)})});
            for (const Perm& rho : generate({Perm::cycles("(24)")}))
                addp({mask_of({1, 3, 4}), m14, mask_of({rho(2), rho(4)}), mask_of({rho(4)})});
            addp({mask_of({1, 3, 4}), m14, mask_of({1}), mask_of({2})});
            for (const Perm& s : generate({Perm::cycles("(34)")}))
                for (const MaskTuple& t : pre) {
                    MaskTuple u{};
                    for (int i = 0; i < 4; ++i) u.m[static_cast<std::size_t>(i)] = apply_perm(s, t.m[static_cast<std::size_t>(i)]);
                    base.push_back(u);
                }
            return base;
        }
        case 4:
            for (const Perm& s : s4.all) {
                MaskTuple t{};
                t.m[0] = apply_perm(s, mask_of({1, 2, 3, 4}));
                t.m[1] = apply_perm(s, mask_of({2, 3, 4}));
                t.m[2] = apply_perm(s, m34);
                t.m[3] = apply_perm(s, mask_of({4}));
                base.push_back(t);
            }
            return base;
    }
    (void)m12;
    return base;
}

MultiPoly mask_sum_poly(Mask m) { return subset_power(m, 1); }

// multiset of 4-tuples of polynomials, canonicalized by printing
std::multiset<std::string> tuple_poly_multiset(const std::vector<std::array<MultiPoly, 4>>& v) {
    std::multiset<std::string> out;
    for (const auto& t : v) out.insert(t[0].str() + "|" + t[1].str() + "|" + t[2].str() + "|" + t[3].str());
    return out;
}

MultiPoly substitute_vars(const MultiPoly& p, const std::array<MultiPoly, 4>& args) {
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(c);
        for (int j = 0; j < 4; ++j)
            term = term * args[static_cast<std::size_t>(j)].pow(e[static_cast<std::size_t>(j)]);
        out += term;
    }
    return out;
}

} // namespace

std::vector<CheckResult> check_prop22(const CheckContext& ctx) {
    std::vector<CheckResult> out;

    // base partial fraction identities, exact decision
    for (BaseIdentity which : {BaseIdentity::u1_form, BaseIdentity::u2_form,
                               BaseIdentity::split34, BaseIdentity::s4_form}) {
        Clock::time_point t0 = Clock::now();
        auto [lhs, rhs] = base_identity(which);
        DecisionOutcome d = equal_as_rational_functions(lhs, rhs, ctx.mode);
        out.push_back(symbolic_result(ctx, "pfrac.base." + std::to_string(static_cast<int>(which)),
                                      base_identity_name(which), d.equal, t0,
                                      d.equal ? "" : "grid found a nonzero point",
                                      "grid=" + std::to_string(d.grid_per_variable) +
                                          " points=" + std::to_string(d.points)));
    }

    // series expansion vs composition display, termwise exact, weights <= 8
    for (BaseIdentity which : {BaseIdentity::u1_form, BaseIdentity::u2_form,
                               BaseIdentity::split34, BaseIdentity::s4_form}) {
        auto [lhs, rhs] = base_identity(which);
        int arity = static_cast<int>(lhs.terms[0].den.size());
        for (int l = arity; l <= 8; ++l) {
            Clock::time_point t0 = Clock::now();
            bool ok = texpand_coefficient(lhs, l) == composition_expansion(lhs, l) &&
                      texpand_coefficient(rhs, l) == composition_expansion(rhs, l);
            out.push_back(symbolic_result(
                ctx,
                "pfrac.texp." + std::to_string(static_cast<int>(which)) + ".l" + std::to_string(l),
                "geometric-series coefficient matches composition display", ok, t0,
                ok ? "" : "expansion mismatch", "weight=" + std::to_string(l)));
        }
        // cross-side rational-function identity of the coefficients
        {
            int l = arity + 1;
            Clock::time_point t0 = Clock::now();
            FracSum lhs_exp, rhs_exp;
            for (const auto& [den, num] : texpand_coefficient(lhs, l)) lhs_exp.add(num, den);
            for (const auto& [den, num] : texpand_coefficient(rhs, l)) rhs_exp.add(num, den);
            DecisionOutcome d = equal_as_rational_functions(lhs_exp, rhs_exp, ctx.mode);
            out.push_back(symbolic_result(
                ctx,
                "pfrac.texp.cross." + std::to_string(static_cast<int>(which)),
                "expanded coefficients agree across sides", d.equal, t0,
                d.equal ? "" : "grid found a nonzero point",
                "weight=" + std::to_string(l) + " grid=" + std::to_string(d.grid_per_variable)));
        }
    }

    // substitution transport: y-chains become the printed x-argument tuples
    {
        const S4Data& s4 = S4Data::instance();
        auto x = [](int j) { return MultiPoly::variable(j); };
        struct Subst {
            int part;
            const PermList* set;
            std::array<MultiPoly, 4> y;
        };
        std::vector<Subst> runs;
        runs.push_back({1, &s4.U1, {x(1) - x(2), x(2) - x(3), x(3), x(4)}});
        runs.push_back({2, &s4.U2, {x(1) - x(2), x(2), x(3) - x(4), x(4)}});
        runs.push_back({4, &s4.all, {x(1), x(2), x(3), x(4)}});
        for (const Subst& r : runs) {
            Clock::time_point t0 = Clock::now();
            std::vector<std::array<MultiPoly, 4>> lhs_tuples;
            for (const Perm& s : *r.set) {
                std::array<MultiPoly, 4> t;
                Mask acc = 0;
                for (int k = 4; k >= 1; --k) {
                    acc = static_cast<Mask>(acc | (1u << (s(k) - 1)));
                    MultiPoly sum;
                    for (int j = 1; j <= 4; ++j)
                        if (acc & (1u << (j - 1))) sum += r.y[static_cast<std::size_t>(j - 1)];
                    t[static_cast<std::size_t>(k - 1)] = sum;
                }
                lhs_tuples.push_back(t);
            }
            std::vector<std::array<MultiPoly, 4>> rhs_tuples;
            for (const MaskTuple& mt : prop22_rhs_tuples(r.part)) {
                std::array<MultiPoly, 4> t;
                for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = mask_sum_poly(mt.m[static_cast<std::size_t>(i)]);
                rhs_tuples.push_back(t);
            }
            bool ok = tuple_poly_multiset(lhs_tuples) == tuple_poly_multiset(rhs_tuples);
            out.push_back(symbolic_result(ctx, "prop22.subst." + std::to_string(r.part),
                                          "parameter substitution transports the chain identity",
                                          ok, t0, ok ? "" : "argument tuples differ"));
        }
        // part 3 via part 2 with the third slot opened up; the slot opening
        // happens before the (34) relabeling
        {
            Clock::time_point t0 = Clock::now();
            std::vector<std::array<MultiPoly, 4>> lhs_tuples;
            std::array<MultiPoly, 4> open{x(1), x(2), x(3) + x(4), x(4)};
            for (const Perm& s : generate({Perm::cycles("(34)")}))
                for (const MaskTuple& mt : prop22_rhs_tuples(2)) {
                    std::array<MultiPoly, 4> t;
                    for (int i = 0; i < 4; ++i) {
                        MultiPoly base = substitute_vars(mask_sum_poly(mt.m[static_cast<std::size_t>(i)]), open);
                        t[static_cast<std::size_t>(i)] = act(s, base);
                    }
                    lhs_tuples.push_back(t);
                }
            std::vector<std::array<MultiPoly, 4>> rhs_tuples;
            for (const MaskTuple& mt : prop22_rhs_tuples(3)) {
                std::array<MultiPoly, 4> t;
                for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = mask_sum_poly(mt.m[static_cast<std::size_t>(i)]);
                rhs_tuples.push_back(t);
            }
            bool ok = tuple_poly_multiset(lhs_tuples) == tuple_poly_multiset(rhs_tuples);
            out.push_back(symbolic_result(ctx, "prop22.subst.3",
                                          "split of the two single slots reduces to the paired case",
                                          ok, t0, ok ? "" : "argument tuples differ"));
        }
    }

    // numeric residuals, flat arguments
    Numerics nm(ctx);
    std::mt19937_64 rng(static_cast<unsigned long long>(ctx.seed) + 22);
    std::vector<std::array<Rational, 4>> xs;
    xs.push_back({Rational(1), Rational(1), Rational(1), Rational(1)});
    {
        std::vector<Rational> r = random_rationals(rng, 4);
        xs.push_back({r[0], r[1], r[2], r[3]});
    }
    BigReal sample_err = pow10(-15, ctx.prec);
    for (double zd : ctx.zs) {
        BigReal z(ctx.prec);
        mpfr_set_d(z.raw(), zd, MPFR_RNDN);
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            const std::array<Rational, 4>& x = xs[xi];
            for (int l : {4, 5, 6}) {
                ParamEngines eng(ctx.prec, z, sample_err, l);
                for (int part = 1; part <= 4; ++part) {
                    char idbuf[64];
                    std::snprintf(idbuf, sizeof idbuf, "prop22.%d.l%d.z%.2f.x%zu", part, l, zd, xi);
                    NumericCheck c(idbuf, "shuffle-route identities", ctx.tol, ctx.prec);
                    BigReal lhs(0, ctx.prec);
                    std::vector<Rational> x1{x[0]}, x2{x[1]}, x3{x[2]}, x4{x[3]};
                    switch (part) {
                        case 1: {
                            const ParamSums& T = eng.get(3, false, {x[0], x[1], x[2]});
                            const ParamSums& S = eng.get(1, false, x4);
                            for (int a = 3; a <= l - 1; ++a) lhs += T.at_weight(a) * S.at_weight(l - a);
                            break;
                        }
                        case 2: {
                            const ParamSums& Da = eng.get(2, false, {x[0], x[1]});
                            const ParamSums& Db = eng.get(2, false, {x[2], x[3]});
                            for (int a = 2; a <= l - 2; ++a) lhs += Da.at_weight(a) * Db.at_weight(l - a);
                            break;
                        }
                        case 3: {
                            const ParamSums& D = eng.get(2, false, {x[0], x[1]});
                            const ParamSums& S3 = eng.get(1, false, x3);
                            const ParamSums& S4v = eng.get(1, false, x4);
                            for (int a = 2; a <= l - 2; ++a)
                                for (int b = 1; b <= l - a - 1; ++b)
                                    lhs += D.at_weight(a) * S3.at_weight(b) * S4v.at_weight(l - a - b);
                            break;
                        }
                        case 4: {
                            const ParamSums* S[4];
                            for (int i = 0; i < 4; ++i) {
                                std::vector<Rational> xi1{x[static_cast<std::size_t>(i)]};
                                S[i] = &eng.get(1, false, xi1);
                            }
                            for (int a = 1; a <= l - 3; ++a)
                                for (int b = 1; b <= l - a - 2; ++b)
                                    for (int cnt = 1; cnt <= l - a - b - 1; ++cnt)
                                        lhs += S[0]->at_weight(a) * S[1]->at_weight(b) *
                                               S[2]->at_weight(cnt) * S[3]->at_weight(l - a - b - cnt);
                            break;
                        }
                    }
                    BigReal rhs(0, ctx.prec);
                    for (const MaskTuple& mt : prop22_rhs_tuples(part)) {
                        std::vector<Rational> args;
                        for (int i = 0; i < 4; ++i) {
                            Rational s(0);
                            for (int j = 1; j <= 4; ++j)
                                if (mt.m[static_cast<std::size_t>(i)] & (1u << (j - 1))) s += x[static_cast<std::size_t>(j - 1)];
                            args.push_back(s);
                        }
                        rhs += eng.get(4, false, args).at_weight(l);
                    }
                    c.update((lhs - rhs).abs());
                    out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
                }
            }
        }
    }
    (void)nm;
    return out;
}

// ------------------------------------------------------------------- prop23

namespace {

int leading_ones_hint(int depth, int weight) {
    // T-degree of the asymptotic polynomial of the parameterized sum
    return weight == depth ? depth : depth - 1;
}

} // namespace

std::vector<CheckResult> check_prop23(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;
    const std::vector<double> schedule = ct_schedule();
    const std::vector<Rational> x{Rational(1), rat(1, 2), rat(1, 3), rat(1, 5)};
    BigReal sample_err = pow10(-11, ctx.prec);

    BigReal zeta2 = nm.zeta(IndexWord({2}));
    BigReal zeta3 = nm.zeta(IndexWord({3}));

    struct Kind {
        int depth;
        int min_l, max_l;
    };
    for (bool ladder : {false, true}) {
        for (const Kind& kind : {Kind{2, 2, 7}, Kind{3, 3, 7}, Kind{4, ladder ? 5 : 4, 7}}) {
            // one engine pass per z covers all weights
            std::vector<std::vector<CtSample>> samples(static_cast<std::size_t>(kind.max_l - kind.depth + 1));
            for (auto& v : samples) v.resize(schedule.size());
            std::vector<int> idx(schedule.size());
            for (std::size_t i = 0; i < schedule.size(); ++i) idx[i] = static_cast<int>(i);
            parallel_for(ctx.mode, schedule.size(), [&](std::size_t i) {
                double k = schedule[i];
                BigReal z = BigReal(1, ctx.prec) - pow10(-k, ctx.prec);
                ParamSums ps = eval_param_sums(kind.depth, ladder, x, z, kind.max_l, sample_err, ctx.prec);
                BigReal T = (BigReal(1, ctx.prec) - z).ln() * -1L;
                for (int l = kind.depth; l <= kind.max_l; ++l) {
                    CtSample s;
                    s.k = k;
                    s.z = z;
                    s.T = T;
                    s.value = ps.at_weight(l);
                    samples[static_cast<std::size_t>(l - kind.depth)][i] = s;
                }
            });
            for (int l = std::max(kind.min_l, ladder ? kind.min_l : kind.depth); l <= kind.max_l; ++l) {
                if (!ladder && l < kind.min_l) continue;
                char idbuf[64];
                std::snprintf(idbuf, sizeof idbuf, "prop23.%s.d%d.l%d", ladder ? "ladder" : "flat",
                              kind.depth, l);
                NumericCheck c(idbuf, ladder ? "constant terms, staircase arguments"
                                             : "constant terms, equal arguments",
                               ctx.ct_tol, ctx.prec);
                CtFit fit = ct_extract(samples[static_cast<std::size_t>(l - kind.depth)],
                                       leading_ones_hint(kind.depth, l), ctx.prec);
                BigReal expected = nm.star_param_sum(kind.depth, l, x);
                if (ladder) {
                    if (kind.depth == 2 && l == 2) expected -= zeta2 / 2;
                    if (kind.depth == 3) {
                        if (l == 3) expected += zeta3 / 3;
                        else
                            expected -= zeta2 * nm.zeta(IndexWord({l - 2})) *
                                        BigReal(pow_rat(x[2], l - 3), ctx.prec) / 2;
                    }
                    if (kind.depth == 4) {
                        BigReal dstar(0, ctx.prec);
                        for (const IndexWord& w : compositions(l - 2, 2, false)) {
                            Rational coeff = pow_rat(x[2], w[0] - 1) * pow_rat(x[3], w[1] - 1);
                            dstar += nm.zeta_star(w) * BigReal(coeff, ctx.prec);
                        }
                        expected -= zeta2 * dstar / 2;
                        expected += zeta3 * nm.zeta(IndexWord({l - 3})) *
                                    BigReal(pow_rat(x[3], l - 4), ctx.prec) / 3;
                    }
                }
                c.update((fit.c0 - expected).abs());
                out.push_back(c.finish(ctx, "loo_spread=" + fmt_residual(fit.residual)));
            }
        }
    }

    // star constants recovered by extrapolation
    {
        auto single_fit = [&](const char* id, const char* anchor, std::vector<int> word,
                              std::vector<int> pattern, int hint, const BigReal& expected) {
            NumericCheck c(id, anchor, ctx.ct_tol, ctx.prec);
            std::vector<CtSample> samples;
            for (double k : schedule) {
                CtSample s;
                s.k = k;
                s.z = BigReal(1, ctx.prec) - pow10(-k, ctx.prec);
                s.T = (BigReal(1, ctx.prec) - s.z).ln() * -1L;
                s.value = eval_li(word, pattern, s.z, sample_err, ctx.prec).value;
                samples.push_back(std::move(s));
            }
            CtFit fit = ct_extract(samples, hint, ctx.prec);
            c.update((fit.c0 - expected).abs());
            out.push_back(c.finish(ctx, "loo_spread=" + fmt_residual(fit.residual)));
        };
        BigReal zero(0, ctx.prec);
        single_fit("ct.star1", "vanishing star value, depth one", {1}, {1}, 1, zero);
        single_fit("ct.star11", "vanishing star value, depth two", {1, 1}, {1, 1}, 2, zero);
        single_fit("ct.star111", "vanishing star value, depth three", {1, 1, 1}, {1, 1, 1}, 3, zero);
        single_fit("ct.star12", "star value of (1,2)", {1, 2}, {1, 2}, 1, zeta3 * -2L);
        single_fit("ct.star11.ladder", "double staircase constant", {1, 1}, {1, 2}, 2, zeta2 / -2L);
    }

    // the limit lemma: differences must decrease strictly toward 1
    {
        struct Pair {
            std::vector<int> word, pa, pb;
        };
        int pi = 0;
        for (const Pair& p : {Pair{{1, 2}, {1, 3}, {1, 1}}, Pair{{1, 1, 2}, {1, 2, 4}, {1, 2, 2}}}) {
            Clock::time_point t0 = Clock::now();
            bool ok = true;
            BigReal prev(0, ctx.prec);
            bool first = true;
            std::ostringstream seq;
            for (int k = 2; k <= 5; ++k) {
                BigReal z = BigReal(1, ctx.prec) - pow10(-k, ctx.prec);
                BigReal diff = (eval_li(p.word, p.pa, z, sample_err, ctx.prec).value -
                                eval_li(p.word, p.pb, z, sample_err, ctx.prec).value)
                                   .abs();
                seq << (k > 2 ? "," : "") << fmt_residual(diff);
                if (!first && !(diff < prev)) ok = false;
                prev = diff;
                first = false;
            }
            out.push_back(symbolic_result(ctx, "lemma231.seq." + std::to_string(pi++),
                                          "argument-deformation differences shrink toward 1", ok,
                                          t0, ok ? "" : "sequence not strictly decreasing",
                                          "seq=" + seq.str()));
        }
    }
    return out;
}

// ------------------------------------------------------------ lemma21 / 22

std::vector<CheckResult> check_lemma21(const CheckContext& ctx) {
    std::vector<CheckResult> out;
    const char* roman[4] = {"i", "ii", "iii", "iv"};
    for (int part = 1; part <= 4; ++part) {
        Clock::time_point t0 = Clock::now();
        LemmaSides s = lemma21_sides(part);
        bool ok = s.equal();
        out.push_back(symbolic_result(ctx, std::string("lemma21.") + roman[part - 1] + ".formal",
                                      "harmonic product lemma, formal", ok, t0,
                                      ok ? "" : "formal sums differ",
                                      "terms=" + std::to_string(s.lhs.size())));
        t0 = Clock::now();
        std::vector<IndexWord> comps;
        for (int l = 4; l <= ctx.symbolic_weight_max; ++l)
            for (const IndexWord& w : compositions(l, 4, false)) comps.push_back(w);
        std::vector<char> good(comps.size(), 0);
        parallel_for(ctx.mode, comps.size(), [&](std::size_t i) {
            std::array<int, 4> comp = to_arr(comps[i]);
            good[i] = instantiate(s.lhs, comp) == instantiate(s.rhs, comp) ? 1 : 0;
        });
        std::string detail;
        bool all_ok = true;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!good[i]) {
                all_ok = false;
                detail = "mismatch at " + comps[i].str();
                break;
            }
        out.push_back(symbolic_result(ctx, std::string("lemma21.") + roman[part - 1] + ".sweep",
                                      "harmonic product lemma, all compositions", all_ok, t0, detail,
                                      "compositions=" + std::to_string(comps.size())));
    }
    return out;
}

std::vector<CheckResult> check_lemma22(const CheckContext& ctx) {
    std::vector<CheckResult> out;
    const char* roman[3] = {"i", "ii", "iii"};
    for (int part = 1; part <= 3; ++part) {
        Clock::time_point t0 = Clock::now();
        LemmaSides s = lemma22_sides(part);
        bool ok = s.equal();
        out.push_back(symbolic_result(ctx, std::string("lemma22.") + roman[part - 1] + ".formal",
                                      "summed harmonic lemma, formal", ok, t0,
                                      ok ? "" : "formal sums differ"));
        t0 = Clock::now();
        std::vector<IndexWord> comps;
        for (int l = 4; l <= ctx.symbolic_weight_max; ++l)
            for (const IndexWord& w : compositions(l, 4, false)) comps.push_back(w);
        std::vector<char> good(comps.size(), 0);
        parallel_for(ctx.mode, comps.size(), [&](std::size_t i) {
            std::array<int, 4> comp = to_arr(comps[i]);
            good[i] = instantiate(s.lhs, comp) == instantiate(s.rhs, comp) ? 1 : 0;
        });
        std::string detail;
        bool all_ok = true;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!good[i]) {
                all_ok = false;
                detail = "mismatch at " + comps[i].str();
                break;
            }
        out.push_back(symbolic_result(ctx, std::string("lemma22.") + roman[part - 1] + ".sweep",
                                      "summed harmonic lemma, all compositions", all_ok, t0, detail,
                                      "compositions=" + std::to_string(comps.size())));
    }
    return out;
}

// ------------------------------------------------------------------ lemma3x

namespace {

SubscriptTuple zt(std::initializer_list<Mask> ms) { return SubscriptTuple(ms); }

TupleMultiset orbit_of_list(const PermList& set, const std::vector<SubscriptTuple>& ts) {
    TupleMultiset out;
    for (const Perm& s : set)
        for (const SubscriptTuple& t : ts) out[act_on_subscript_tuple(s, t)] += 1;
    return out;
}

} // namespace

std::vector<CheckResult> check_lemma3x(const CheckContext& ctx) {
    const S4Data& s4 = S4Data::instance();
    std::vector<CheckResult> out;
    Mask z0 = 0;

    // splitting of the all-compositions sum into admissible plus leading-one
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        for (int l = 5; l <= ctx.weight_max && ok; ++l) {
            std::map<std::vector<int>, int> all, split;
            for (const IndexWord& w : compositions(l, 4, false)) all[w.parts()] += 1;
            for (const IndexWord& w : compositions(l, 4, true)) split[w.parts()] += 1;
            for (const IndexWord& w : compositions(l - 1, 3, false)) {
                std::vector<int> parts{1};
                for (int p : w.parts()) parts.push_back(p);
                split[parts] += 1;
            }
            if (all != split) {
                ok = false;
                detail = "decomposition differs at weight " + std::to_string(l);
            }
        }
        out.push_back(symbolic_result(ctx, "lemma31", "regularized sum splits off the leading-one part",
                                      ok, t0, detail, "weights=5.." + std::to_string(ctx.weight_max)));
    }

    PermList CuC34 = s4.C;
    for (const Perm& p : right_coset(s4.C, Perm::cycles("(34)"))) CuC34.push_back(p);
    Mask m234 = mask_of({2, 3, 4}), m34 = mask_of({3, 4}), m4 = mask_of({4});
    Mask m14 = mask_of({1, 4}), m24 = mask_of({2, 4}), m23 = mask_of({2, 3});

    struct TupleCheck {
        std::string id;
        TupleMultiset lhs, rhs;
    };
    std::vector<TupleCheck> checks;

    // collection identities behind the zeroed-slot cancellation
    {
        PermList prods;
        for (const Perm& s : CuC34)
            for (const Perm& r : generate({Perm::cycles("(234)")})) prods.push_back(s * r);
        checks.push_back({"lemma32.1", orbit_multiset(s4.all, zt({z0, m234, m34, m4})),
                          orbit_multiset(prods, zt({z0, m234, m34, m4}))});
    }
    checks.push_back({"lemma32.2",
                      orbit_of_list(CuC34, {zt({z0, m14, m24, m4}), zt({z0, m14, m24, mask_of({2})})}),
                      orbit_of_list(s4.C, {zt({z0, m23, m24, m4}), zt({z0, m23, m24, mask_of({2})}),
                                           zt({z0, m24, m34, m4}), zt({z0, m24, m34, mask_of({3})})})});
    checks.push_back({"lemma32.3",
                      orbit_of_list(CuC34, {zt({z0, m14, mask_of({1}), mask_of({2})})}),
                      orbit_of_list(s4.C, {zt({z0, m23, mask_of({3}), mask_of({4})}),
                                           zt({z0, m24, mask_of({2}), mask_of({3})})})});
    checks.push_back({"lemma32.4",
                      orbit_of_list(s4.C, {zt({z0, mask_of({1}), mask_of({2}), mask_of({3})})}),
                      orbit_of_list(s4.C, {zt({z0, mask_of({2}), mask_of({3}), mask_of({4})})})});

    // merged-template identities for the third block
    {
        std::vector<SubscriptTuple> lhs, rhs;
        for (const Perm& rho : generate({Perm::cycles("(24)")}))
            lhs.push_back(zt({mask_of({1, 3}), mask_of({3, 2}), mask_of({rho(2), rho(4)}), mask_of({rho(4)})}));
        for (const Perm& rho : generate({Perm::cycles("(34)")}))
            lhs.push_back(zt({m14, m24, mask_of({rho(3), rho(4)}), mask_of({rho(4)})}));
        for (const Perm& nu : s4.Cb) {
            Perm t = Perm::cycles("(" + std::to_string(nu(2)) + "4)");
            for (const Perm& rho : generate({t}))
                rhs.push_back(zt({mask_of({1, nu(3)}), mask_of({nu(3), 2}),
                                  mask_of({rho(nu(2)), rho(4)}), mask_of({rho(4)})}));
        }
        checks.push_back({"lemma33.1", orbit_of_list(s4.C, lhs), orbit_of_list(s4.C, rhs)});
    }
    {
        std::vector<SubscriptTuple> lhs, rhs;
        lhs.push_back(zt({mask_of({1, 3}), mask_of({2, 3}), mask_of({3}), m4}));
        lhs.push_back(zt({m14, mask_of({4, 2}), mask_of({2}), mask_of({3})}));
        for (const Perm& nu : s4.Cb)
            rhs.push_back(zt({mask_of({nu(1), 3}), mask_of({2, nu(3)}), mask_of({nu(3)}), mask_of({nu(4)})}));
        checks.push_back({"lemma33.2", orbit_of_list(s4.C, lhs), orbit_of_list(s4.C, rhs)});
    }

    for (const TupleCheck& tc : checks) {
        Clock::time_point t0 = Clock::now();
        bool ok = tuple_multiset_equal(tc.lhs, tc.rhs);
        out.push_back(symbolic_result(ctx, tc.id, "argument-tuple collection identity", ok, t0,
                                      ok ? "" : "tuple multisets differ"));
    }
    return out;
}

// ------------------------------------------------------------------ lemma41

namespace {

struct PrintedCombo {
    std::array<Rational, 4> point;
    std::map<std::array<int, 4>, int> combo;
    Rational rhs_factor(int l) const { return rhs(l); }
    std::function<Rational(int)> rhs;
};

std::map<std::array<int, 4>, int> printed_combo(int which) {
    auto c = [](std::initializer_list<std::pair<std::array<int, 4>, int>> items) {
        std::map<std::array<int, 4>, int> m;
        for (const auto& [k, v] : items) m[k] = v;
        return m;
    };
    switch (which) {
        case 1:
            return c({{{2, 2, 2, 1}, 2}, {{2, 2, 1, 1}, 1}, {{2, 1, 1, 1}, 1},
                      {{1, 2, 2, 1}, -2}, {{1, 2, 1, 1}, -1}, {{1, 1, 1, 1}, -3}});
        case 2:
            return c({{{2, 2, 2, 1}, 4}, {{2, 2, 1, 1}, 2}, {{1, 2, 2, 1}, -4},
                      {{1, 2, 1, 1}, -2}, {{1, 1, 2, 1}, -4}});
        case 3:
            return c({{{3, 3, 2, 1}, 6}, {{3, 2, 2, 1}, 4}, {{3, 2, 1, 1}, 2},
                      {{2, 3, 2, 1}, -6}, {{2, 2, 2, 1}, -8}, {{2, 2, 1, 1}, -4},
                      {{2, 1, 2, 1}, -2}, {{2, 1, 1, 1}, -2}, {{1, 2, 2, 1}, 4},
                      {{1, 2, 1, 1}, 2}, {{1, 1, 2, 1}, 2}, {{1, 1, 1, 1}, 3}});
        case 4:
            return c({{{4, 3, 2, 1}, 24}, {{3, 3, 2, 1}, -24}, {{3, 2, 2, 1}, -16},
                      {{3, 2, 1, 1}, -8}, {{2, 2, 2, 1}, 16}, {{2, 2, 1, 1}, 8},
                      {{2, 1, 1, 1}, 4}, {{1, 1, 1, 1}, -4}});
    }
    return {};
}

std::array<Rational, 4> lemma41_point(int which) {
    switch (which) {
        case 1: return {1, 1, 0, 0};
        case 2: return {1, 0, 1, 0};
        case 3: return {1, 1, 1, 0};
        case 4: return {1, 1, 1, 1};
    }
    return {0, 0, 0, 0};
}

Rational lemma41_rhs(int which, int l) {
    switch (which) {
        case 1: return Rational(l - 3);
        case 2: return Rational(l - 3);
        case 3: return rat((l - 2) * (l - 3), 2);
        case 4: return rat((l - 1) * (l - 2) * (l - 3), 6);
    }
    return 0;
}

std::map<std::array<int, 4>, int> derived_combo(int which) {
    std::map<std::array<int, 4>, int> m;
    for (const auto& [key, coeff] : derive_z_combination(lemma41_point(which))) {
        std::array<int, 4> ik;
        for (int i = 0; i < 4; ++i) {
            const Rational& q = key[static_cast<std::size_t>(i)];
            ik[static_cast<std::size_t>(i)] = static_cast<int>(q.get_num().get_si());
        }
        m[ik] = coeff;
    }
    return m;
}

} // namespace

std::vector<CheckResult> check_lemma41(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;
    for (int which = 1; which <= 4; ++which) {
        Clock::time_point t0 = Clock::now();
        std::map<std::array<int, 4>, int> derived = derived_combo(which);
        bool ok = derived == printed_combo(which);
        std::ostringstream detail;
        if (!ok) {
            detail << "derived:";
            for (const auto& [k, v] : derived)
                detail << ' ' << v << "*Z" << fmt_comp(k);
        }
        out.push_back(symbolic_result(ctx, "lemma41.derive." + std::to_string(which),
                                      "specialized bracket collapses to the printed combination",
                                      ok, t0, detail.str()));
        for (int l = std::max(5, ctx.weight_min); l <= ctx.weight_max; ++l) {
            NumericCheck c("lemma41.num." + std::to_string(which) + ".l" + std::to_string(l),
                           "specialized identities", ctx.tol, ctx.prec);
            BigReal lhs(0, ctx.prec);
            for (const auto& [pattern, coeff] : printed_combo(which)) {
                std::array<Rational, 4> pr{pattern[0], pattern[1], pattern[2], pattern[3]};
                lhs += nm.z_pattern_value(l, pr) * coeff;
            }
            BigReal rhs = nm.zeta(IndexWord({l})) * BigReal(lemma41_rhs(which, l), ctx.prec);
            c.update((lhs - rhs).abs());
            out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
        }
    }
    return out;
}

// ----------------------------------------------------------------- remark41

namespace {

Rational remark41_weight(int which, const IndexWord& w) {
    long l1 = w[0], l2 = w[1], l3 = w[2];
    long l12 = l1 + l2, l13 = l1 + l3, l23 = l2 + l3, l123 = l1 + l2 + l3;
    switch (which) {
        case 1: // corresponds to the third specialized combination
            return pow_int(3, l12 - 1) * pow_int(2, l3) + pow_int(3, l1 - 1) * pow_int(2, l23) +
                   pow_int(3, l1 - 1) * pow_int(2, l2) - pow_int(3, l2) * pow_int(2, l13 - 1) -
                   pow_int(2, l123) - pow_int(2, l12) - pow_int(2, l13 - 1) - pow_int(2, l1) +
                   pow_int(2, l23) + pow_int(2, l2) + pow_int(2, l3);
        case 2: // corresponds to half of the fourth
            return pow_int(3, l2) * pow_int(2, 2 * l1 + l3 - 1) -
                   pow_int(3, l12 - 1) * pow_int(2, l3 + 1) -
                   pow_int(3, l1 - 1) * pow_int(2, l23 + 1) -
                   pow_int(3, l1 - 1) * pow_int(2, l2 + 1) + pow_int(2, l123) + pow_int(2, l12) +
                   pow_int(2, l1);
        case 3: // corresponds to twice the merged combination
            return pow_int(3, l12 - 1) * pow_int(2, l3 + 1) +
                   pow_int(3, l1 - 1) * pow_int(2, l23 + 1) +
                   pow_int(3, l1 - 1) * pow_int(2, l2 + 1) - pow_int(3, l2) * pow_int(2, l13) -
                   pow_int(2, l123) - pow_int(2, l12) - pow_int(2, l13) - pow_int(2, l1);
    }
    return 0;
}

Rational remark41_rhs(int which, long l) {
    switch (which) {
        case 1: return rat(l * (l - 5), 2);
        case 2: return rat((l + 1) * (l * l - 7 * l + 18), 12);
        case 3: return Rational((l + 1) * (l - 3));
    }
    return 0;
}

std::map<std::array<int, 4>, int> add_combos(const std::map<std::array<int, 4>, int>& a,
                                             const std::map<std::array<int, 4>, int>& b,
                                             int num, int den) {
    // a + (num/den) * b with exact integer result expected
    std::map<std::array<int, 4>, int> out = a;
    for (const auto& [k, v] : b) {
        int scaled = v * num;
        if (scaled % den != 0) throw InvalidArguments("add_combos: non-integer combination");
        out[k] += scaled / den;
        if (out[k] == 0) out.erase(k);
    }
    return out;
}

Rational pattern_weight(const std::array<int, 4>& pattern, const IndexWord& w) {
    Rational c(1);
    for (int i = 0; i < 4; ++i) c *= pow_int(pattern[static_cast<std::size_t>(i)], w[i] - 1);
    return c;
}

} // namespace

std::vector<CheckResult> check_remark41(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;

    // exact scalar bookkeeping
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        for (long l = 5; l <= ctx.weight_max; ++l) {
            ok = ok && rat(3 * (l - 3), 2) + rat((l - 2) * (l - 3), 2) ==
                           rat((l + 1) * (l - 3), 2);
            ok = ok && rat((l + 1) * (l - 3), 2) + rat((l - 1) * (l - 2) * (l - 3), 24) +
                               1 ==
                           rat((l + 1) * (l * l + 5 * l - 18), 24);
        }
        out.push_back(symbolic_result(ctx, "eq45.scalars", "combination arithmetic", ok, t0,
                                      ok ? "" : "scalar identity fails"));
    }

    // exact combination bookkeeping at the pattern level
    std::map<std::array<int, 4>, int> merged;
    std::map<std::array<int, 4>, int> final_combo;
    {
        Clock::time_point t0 = Clock::now();
        merged = add_combos(printed_combo(1), printed_combo(2), 1, 2);
        merged = add_combos(merged, printed_combo(3), 1, 1);
        std::map<std::array<int, 4>, int> merged_expected{
            {{3, 3, 2, 1}, 6}, {{3, 2, 2, 1}, 4}, {{3, 2, 1, 1}, 2}, {{2, 3, 2, 1}, -6},
            {{2, 2, 2, 1}, -4}, {{2, 2, 1, 1}, -2}, {{2, 1, 2, 1}, -2}, {{2, 1, 1, 1}, -1}};
        bool ok = merged == merged_expected;
        final_combo = add_combos(merged, printed_combo(4), 1, 4);
        std::map<std::array<int, 4>, int> final_expected{
            {{4, 3, 2, 1}, 6}, {{2, 3, 2, 1}, -6}, {{2, 1, 2, 1}, -2}, {{1, 1, 1, 1}, -1}};
        ok = ok && final_combo == final_expected;
        out.push_back(symbolic_result(ctx, "eq45.bookkeeping",
                                      "combinations merge exactly as stated", ok, t0,
                                      ok ? "" : "pattern combination differs"));
    }

    // numeric: the final three-term combination
    for (int l = std::max(5, ctx.weight_min); l <= ctx.weight_max; ++l) {
        NumericCheck c("eq45.num.l" + std::to_string(l), "power-of-two-and-three combination",
                       ctx.tol, ctx.prec);
        BigReal lhs(0, ctx.prec);
        lhs += nm.z_pattern_value(l, {Rational(4), Rational(3), Rational(2), Rational(1)}) * 6;
        lhs -= nm.z_pattern_value(l, {Rational(2), Rational(3), Rational(2), Rational(1)}) * 6;
        lhs -= nm.z_pattern_value(l, {Rational(2), Rational(1), Rational(2), Rational(1)}) * 2;
        BigReal rhs = nm.zeta(IndexWord({l})) *
                      BigReal(rat((l + 1) * (l * l + 5 * l - 18), 24), ctx.prec);
        c.update((lhs - rhs).abs());
        out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
    }

    // the three rewritten weighted formulas: exact weight agreement with the
    // pattern combinations, then numeric residuals
    {
        Clock::time_point t0 = Clock::now();
        bool ok = true;
        std::string detail;
        auto check_weights = [&](int which, std::map<std::array<int, 4>, int> combo, int scale_num,
                                 int scale_den) {
            combo.erase({1, 1, 1, 1}); // moved to the right-hand side
            for (int l = 5; l <= ctx.weight_max && ok; ++l)
                for (const IndexWord& w : compositions(l, 4, true)) {
                    Rational acc(0);
                    for (const auto& [pattern, coeff] : combo)
                        acc += pattern_weight(pattern, w) * coeff;
                    acc *= rat(scale_num, scale_den);
                    if (acc != remark41_weight(which, w)) {
                        ok = false;
                        detail = "weight mismatch, formula " + std::to_string(which) + " at " + w.str();
                        break;
                    }
                }
        };
        check_weights(1, printed_combo(3), 1, 1);
        check_weights(2, printed_combo(4), 1, 2);
        check_weights(3, merged, 2, 1);
        out.push_back(symbolic_result(ctx, "remark41.weights",
                                      "explicit weights match the pattern combinations", ok, t0,
                                      detail));
    }
    for (int which = 1; which <= 3; ++which) {
        for (int l = std::max(5, ctx.weight_min); l <= ctx.weight_max; ++l) {
            NumericCheck c("remark41.eq" + std::to_string(which) + ".l" + std::to_string(l),
                           "explicit two-and-three power formulas", ctx.tol, ctx.prec);
            BigReal lhs(0, ctx.prec);
            for (const IndexWord& w : compositions(l, 4, true))
                lhs += nm.zeta(w) * BigReal(remark41_weight(which, w), ctx.prec);
            BigReal rhs = nm.zeta(IndexWord({l})) * BigReal(remark41_rhs(which, l), ctx.prec);
            c.update((lhs - rhs).abs());
            out.push_back(c.finish(ctx, "weight=" + std::to_string(l)));
        }
    }
    return out;
}

// ----------------------------------------------------------------- remark21

std::vector<CheckResult> check_remark21(const CheckContext& ctx) {
    Numerics nm(ctx);
    std::vector<CheckResult> out;
    const std::array<int, 4> families[2] = {{2, 2, 2, 2}, {3, 2, 2, 2}};

    for (const std::array<int, 4>& comp : families) {
        NumericCheck c("remark21.cyclic." + fmt_comp(comp), "cyclic sum equation", ctx.tol, ctx.prec);
        c.update(nm.eval_zetasum(cyclic_sum_delta(), comp).abs());
        out.push_back(c.finish(ctx, "index=" + fmt_comp(comp)));
    }
    // spec'd double instance (2,3) plus the family instances
    {
        NumericCheck c("hoffman.d2.(2,3)", "symmetric double sum", ctx.tol, ctx.prec);
        c.update(nm.eval_zetasum(symmetric2_delta(mask_of({1}), mask_of({2})), {2, 3, 1, 1}).abs());
        out.push_back(c.finish(ctx, "index=(2,3)"));
    }
    for (const std::array<int, 4>& comp : families) {
        NumericCheck c2("hoffman.d2." + fmt_comp(comp), "symmetric double sum", ctx.tol, ctx.prec);
        c2.update(nm.eval_zetasum(symmetric2_delta(mask_of({1}), mask_of({2})), comp).abs());
        out.push_back(c2.finish(ctx, "index=" + fmt_comp(comp)));
        NumericCheck c3("hoffman.d3." + fmt_comp(comp), "symmetric triple sum", ctx.tol, ctx.prec);
        c3.update(nm.eval_zetasum(symmetric3_delta(mask_of({1}), mask_of({2}), mask_of({3})), comp).abs());
        out.push_back(c3.finish(ctx, "index=" + fmt_comp(comp)));
        NumericCheck c4("hoffman.d4." + fmt_comp(comp), "symmetric quadruple sum", ctx.tol, ctx.prec);
        c4.update(nm.eval_zetasum(symmetric4_delta(), comp).abs());
        out.push_back(c4.finish(ctx, "index=" + fmt_comp(comp)));
    }
    // the cyclic-sum equation is the z -> 1 image of the per-index
    // product identity: rebuild it from the block structure and compare
    // with the independently transcribed form
    {
        Clock::time_point t0 = Clock::now();
        const S4Data& s4 = S4Data::instance();
        auto W = [](std::initializer_list<int> subs) {
            ZWord w;
            for (int j : subs) w.push_back(mask_of({j}));
            return w;
        };
        ZetaSum image;
        ZetaSum inner;
        inner.add(make_monomial({W({1, 2, 3}), W({4})}), 1);
        inner.add(make_monomial({W({1, 2}), W({3}), W({4})}), -1);
        for (const Perm& s : s4.C) image += act(s, inner);
        ZetaSum pairpair;
        pairpair.add(make_monomial({W({1, 2}), W({3, 4})}), 1);
        for (const Perm& s : s4.Cb) image += act(s, pairpair);
        image.add(make_monomial({W({1}), W({2}), W({3}), W({4})}), 1);
        for (const Perm& s : s4.C) {
            ZetaSum four;
            four.add(make_monomial({W({1, 2, 3, 4})}), 1);
            image -= act(s, four);
        }
        image.add(make_monomial({{mask_of({1, 2, 3, 4})}}), -1);
        image += cyclic_sum_delta();
        out.push_back(symbolic_result(ctx, "remark21.derivation",
                                      "cyclic-sum equation is the limit of the product identity",
                                      image.is_zero(), t0,
                                      image.is_zero() ? "" : "block image differs"));
    }
    {
        Clock::time_point t0 = Clock::now();
        ReductionResult r = verify_sixfold_reduction();
        out.push_back(symbolic_result(ctx, "remark21.sixfold",
                                      "six-fold cyclic sum reduces to the symmetric equation", r.reduced,
                                      t0, r.reduced ? "" : "not in the span",
                                      "candidates=" + std::to_string(r.candidates) +
                                          " used=" + std::to_string(r.used)));
    }
    return out;
}

// ----------------------------------------------------------- table1 / cosets

std::vector<CheckResult> check_table1(const CheckContext& ctx) {
    std::vector<CheckResult> out;
    Clock::time_point t0 = Clock::now();
    TableReport rep = verify_table1();
    std::map<std::string, std::pair<int, int>> per_table; // ok/total
    bool all_rows = true;
    for (const RowCheck& r : rep.rows) {
        auto& slot = per_table[r.table];
        slot.second += 1;
        if (r.action_ok && r.exact_ok)
            slot.first += 1;
        else
            all_rows = false;
    }
    for (const auto& [name, counts] : per_table) {
        bool partition_ok = std::find(rep.partition_failures.begin(), rep.partition_failures.end(),
                                      name) == rep.partition_failures.end();
        bool ok = partition_ok && counts.first == counts.second;
        out.push_back(symbolic_result(ctx, "table1." + name, "merged-subscript coset table", ok, t0,
                                      ok ? "" : "row or partition failure",
                                      "rows=" + std::to_string(counts.second)));
    }
    out.push_back(symbolic_result(ctx, "table1", "all six tables", all_rows && rep.all_ok(), t0,
                                  "", "rows=" + std::to_string(rep.rows.size())));
    return out;
}

std::vector<CheckResult> check_cosets(const CheckContext& ctx) {
    std::vector<CheckResult> out;
    Clock::time_point t0 = Clock::now();
    for (const CosetIdentityCheck& c : verify_coset_identities()) {
        std::string id = "cosets." + c.name;
        for (char& ch : id)
            if (ch == ' ') ch = '_';
        out.push_back(symbolic_result(ctx, id, "coset identity: " + c.name, c.ok, t0, c.detail));
    }
    return out;
}

// ----------------------------------------------------------------- registry

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        {"table1", check_table1},
        {"cosets", check_cosets},
        {"lemma21", check_lemma21},
        {"lemma22", check_lemma22},
        {"lemma3x", check_lemma3x},
        {"sumformula", check_sum_formula},
        {"thm1", check_theorem1},
        {"thm2", check_theorem2},
        {"lemma41", check_lemma41},
        {"remark41", check_remark41},
        {"remark21", check_remark21},
        {"prop21", check_prop21},
        {"prop22", check_prop22},
        {"prop23", check_prop23},
    };
    return suites;
}

std::vector<CheckResult> run_suites(const std::vector<std::string>& names, const CheckContext& ctx) {
    std::vector<CheckResult> results;
    for (const Suite& s : all_suites()) {
        bool selected = names.empty();
        for (const std::string& n : names)
            if (n == s.name || n == "all") selected = true;
        if (!selected) continue;
        std::vector<CheckResult> part = s.run(ctx);
        results.insert(results.end(), part.begin(), part.end());
    }
    return results;
}

std::string report_json(const std::vector<CheckResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& r : results) {
        nlohmann::json j;
        j["check"] = r.id;
        j["paper_ref"] = r.anchor;
        j["status"] = r.status;
        if (r.residual)
            j["residual"] = *r.residual;
        else
            j["residual"] = nullptr;
        nlohmann::json params = nlohmann::json::object();
        std::istringstream ps(r.params);
        std::string tok;
        while (ps >> tok) {
            std::size_t eq = tok.find('=');
            if (eq == std::string::npos)
                params["note"] = r.params;
            else
                params[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        j["params"] = params;
        if (!r.detail.empty()) j["detail"] = r.detail;
        j["seed"] = r.seed;
        j["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace zeta4
