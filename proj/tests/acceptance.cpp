// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and ranges are pinned here, not configurable.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zeta4/checks.hpp"
#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"
#include "zeta4/qshuffle.hpp"
#include "zeta4/theorem1.hpp"

using namespace zeta4;

namespace {

int g_failures = 0;

void report(int criterion, const char* label, bool ok, const std::string& extra = "") {
    std::printf("criterion %2d %-4s %s%s%s\n", criterion, ok ? "PASS" : "FAIL", label,
                extra.empty() ? "" : " -- ", extra.c_str());
    if (!ok) ++g_failures;
}

bool all_pass(const std::vector<CheckResult>& rs, const std::string& prefix = "",
              std::string* why = nullptr) {
    bool ok = true;
    for (const CheckResult& r : rs) {
        if (!prefix.empty() && r.id.rfind(prefix, 0) != 0) continue;
        if (!r.passed()) {
            ok = false;
            if (why && why->empty()) *why = r.id + (r.residual ? " residual=" + *r.residual : "");
        }
    }
    return ok;
}

CheckContext base_ctx() {
    CheckContext ctx;
    ctx.prec = 128;
    ctx.tol = 1e-10;
    ctx.ct_tol = 1e-4;
    ctx.weight_max = 10;
    ctx.symbolic_weight_max = 8;
    return ctx;
}

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 4), expo(0, 3), num(-5, 5), den(1, 4);
    MultiPoly p;
    int t = terms(rng);
    for (int i = 0; i < t; ++i)
        p.add_term({expo(rng), expo(rng), expo(rng), expo(rng)}, rat(num(rng), den(rng)));
    return p;
}

std::vector<Letter> random_word(std::mt19937_64& rng, int from, int len) {
    std::vector<Letter> w;
    int e = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) {
        w.push_back({mask_of({from + i}), e});
        e += static_cast<int>(rng() % 3);
    }
    return w;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    CheckContext ctx = base_ctx();

    // 1: plain sum formula, weights 5..9, within two minutes
    {
        CheckContext c1 = ctx;
        c1.weight_max = 9;
        auto t0 = Clock::now();
        auto rs = check_sum_formula(c1);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::string why;
        bool ok = all_pass(rs, "", &why) && secs <= 120.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs for weights 5..9", secs);
        report(1, "sum formula at depth four", ok, ok ? buf : why + " " + buf);
    }

    // 2: four-parameter identity, coefficientwise and at random points
    {
        auto rs = check_theorem1(ctx);
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(2, "four-parameter sum formula", ok, why);
    }

    // 3: weighted sum formulas including the two-and-three-power one
    {
        auto rs = check_theorem2(ctx);
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(3, "weighted sum formulas", ok, why);
    }

    // 4: harmonic product lemmas, exact and exhaustive to weight eight
    {
        auto rs = check_lemma21(ctx);
        auto rs2 = check_lemma22(ctx);
        rs.insert(rs.end(), rs2.begin(), rs2.end());
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(4, "harmonic product lemmas, all compositions", ok, why);
    }

    // 5: coset tables and coset identities
    {
        auto rs = check_table1(ctx);
        auto rs2 = check_cosets(ctx);
        rs.insert(rs.end(), rs2.begin(), rs2.end());
        auto rs3 = check_lemma3x(ctx);
        rs.insert(rs.end(), rs3.begin(), rs3.end());
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(5, "subscript tables, cosets, collection identities", ok, why);
    }

    // 6: partial fraction identities and the series-coefficient match
    {
        auto rs = check_prop22(ctx);
        std::string why;
        bool ok = all_pass(rs, "pfrac.", &why);
        // the substitution and numeric residual checks ride along
        ok = all_pass(rs, "prop22.", &why) && ok;
        report(6, "partial fractions and coefficient extraction", ok, why);
    }

    // 7: regularization: star constants, constant terms, limit lemma
    {
        auto rs = check_prop23(ctx);
        std::string why;
        bool ok = all_pass(rs, "ct.star", &why) && all_pass(rs, "prop23.ladder", &why) &&
                  all_pass(rs, "prop23.flat", &why) && all_pass(rs, "lemma231.", &why);
        report(7, "regularized values via extrapolation", ok, why);
    }

    // 8: specialized combinations and the explicit weighted formulas
    {
        auto rs = check_lemma41(ctx);
        auto rs2 = check_remark41(ctx);
        rs.insert(rs.end(), rs2.begin(), rs2.end());
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(8, "specialized combinations and explicit formulas", ok, why);
    }

    // 9: cyclic-sum equation, symmetric sums, and the six-fold reduction
    {
        auto rs = check_remark21(ctx);
        std::string why;
        bool ok = all_pass(rs, "", &why);
        report(9, "cyclic and symmetric sum equations", ok, why);
    }

    // 10: property suites
    {
        bool ok = true;
        std::string why;
        std::mt19937_64 rng(20120930);
        for (int i = 0; i < 200 && ok; ++i) {
            std::vector<Letter> a = random_word(rng, 1, 2);
            std::vector<Letter> b = random_word(rng, 3, 1 + static_cast<int>(rng() % 2));
            if (!(stuffle(a, b) == stuffle(b, a))) {
                ok = false;
                why = "stuffle commutativity";
            }
        }
        for (int i = 0; i < 200 && ok; ++i) {
            std::vector<Letter> a = random_word(rng, 1, 1 + static_cast<int>(rng() % 2));
            std::vector<Letter> b = random_word(rng, 3, 1);
            std::vector<Letter> c = random_word(rng, 4, 1);
            if (!(stuffle(stuffle(a, b), c) == stuffle(stuffle(b, c), a))) {
                ok = false;
                why = "stuffle associativity";
            }
        }
        for (int i = 0; i < 200 && ok; ++i) {
            MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            if (!((a + b) + c == a + (b + c)) || !(a * b == b * a) ||
                !((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c)) {
                ok = false;
                why = "polynomial ring laws";
            }
        }
        if (ok) {
            const PermList& s4 = S4Data::instance().all;
            MultiPoly p = random_poly(rng);
            SubscriptTuple t{mask_of({1, 2}), mask_of({3}), mask_of({4})};
            for (const Perm& a : s4)
                for (const Perm& b : s4) {
                    if (!(act(a * b, p) == act(a, act(b, p))) ||
                        !(act_on_subscript_tuple(a * b, t) ==
                          act_on_subscript_tuple(a, act_on_subscript_tuple(b, t)))) {
                        ok = false;
                        why = "action functoriality";
                    }
                }
        }
        report(10, "property suites", ok, why);
    }

    std::printf("%s\n", g_failures == 0 ? "all criteria pass" : "FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
