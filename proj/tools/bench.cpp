// Compares the serial reference path of each data-parallel kernel against
// its OpenMP version, checking that both produce identical results.
#include <chrono>
#include <cstdio>
#include <string>

#include "zeta4/checks.hpp"
#include "zeta4/ctfit.hpp"
#include "zeta4/indexword.hpp"
#include "zeta4/mzv.hpp"
#include "zeta4/parallel.hpp"
#include "zeta4/pfrac.hpp"
#include "zeta4/polylog.hpp"
#include "zeta4/qshuffle.hpp"

using namespace zeta4;

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, same ? "identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    // exact rational grid decision for the full symmetric chain
    {
        auto [lhs, rhs] = base_identity(BaseIdentity::s4_form);
        DecisionOutcome a{}, b{};
        double ts = time_ms([&] { a = equal_as_rational_functions(lhs, rhs, ExecMode::serial); });
        double tp = time_ms([&] { b = equal_as_rational_functions(lhs, rhs, ExecMode::openmp); });
        row("pfrac grid decision", ts, tp, a.equal == b.equal && a.points == b.points);
    }

    // harmonic lemma sweep over all compositions of weight <= 8
    {
        LemmaSides s = lemma21_sides(3);
        std::vector<IndexWord> comps;
        for (int l = 4; l <= 8; ++l)
            for (const IndexWord& w : compositions(l, 4, false)) comps.push_back(w);
        std::vector<char> rs(comps.size()), rp(comps.size());
        auto sweep = [&](ExecMode mode, std::vector<char>& out) {
            parallel_for(mode, comps.size(), [&](std::size_t i) {
                std::array<int, 4> comp{1, 1, 1, 1};
                for (int k = 0; k < 4; ++k) comp[static_cast<std::size_t>(k)] = comps[i][k];
                out[i] = instantiate(s.lhs, comp) == instantiate(s.rhs, comp) ? 1 : 0;
            });
        };
        double ts = time_ms([&] { sweep(ExecMode::serial, rs); });
        double tp = time_ms([&] { sweep(ExecMode::openmp, rp); });
        row("harmonic lemma sweep", ts, tp, rs == rp);
    }

    // staircase-argument series schedule (the extrapolation workload)
    {
        std::vector<double> ks = {1.6, 2.0, 2.4, 2.8, 3.2};
        std::vector<Rational> x{Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5)};
        BigReal err = pow10(-11, 128);
        std::vector<std::string> vs(ks.size()), vp(ks.size());
        auto run = [&](ExecMode mode, std::vector<std::string>& out) {
            parallel_for(mode, ks.size(), [&](std::size_t i) {
                BigReal z = BigReal(1, 128) - pow10(-ks[i], 128);
                ParamSums ps = eval_param_sums(4, true, x, z, 7, err, 128);
                out[i] = ps.at_weight(7).to_string();
            });
        };
        double ts = time_ms([&] { run(ExecMode::serial, vs); });
        double tp = time_ms([&] { run(ExecMode::openmp, vp); });
        row("staircase series schedule", ts, tp, vs == vp);
    }

    // batch of zeta values at 128 bits
    {
        std::vector<IndexWord> words;
        for (int l = 5; l <= 9; ++l)
            for (const IndexWord& w : compositions(l, 4, true)) words.push_back(w);
        BigReal err = pow10(-15, 128);
        std::vector<std::string> vs(words.size()), vp(words.size());
        auto run = [&](ExecMode mode, std::vector<std::string>& out) {
            parallel_for(mode, words.size(), [&](std::size_t i) {
                out[i] = eval_mzv(words[i], err, 128).value.to_string();
            });
        };
        double ts = time_ms([&] { run(ExecMode::serial, vs); });
        double tp = time_ms([&] { run(ExecMode::openmp, vp); });
        row("zeta batch, weights 5..9", ts, tp, vs == vp);
    }
    return 0;
}
