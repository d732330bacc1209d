#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeta4/checks.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta4 verify: machine-checks the quadruple zeta value identity catalog"};

    std::string suite = "all";
    std::string weight;
    int weight_max = 10;
    long prec_bits = 128;
    double tol = 1e-10;
    double ct_tol = 1e-4;
    std::string zlist;
    long seed = 20120930;
    std::string cache_path;
    std::string report_path;
    int jobs = 0;
    bool serial = false;

    std::set<std::string> known{"all",     "sumformula", "thm1",    "thm2",    "prop21",
                                "prop22",  "prop23",     "lemma21", "lemma22", "lemma3x",
                                "lemma41", "remark21",   "remark41", "table1", "cosets"};
    app.add_option("--suite", suite, "comma-separated suites, or 'all'")->capture_default_str();
    app.add_option("--weight", weight, "weight or range for numeric sweeps, e.g. 7 or 5..10");
    app.add_option("--weight-max", weight_max, "largest weight for numeric sweeps")->capture_default_str();
    app.add_option("--prec-bits", prec_bits, "working precision in bits")->check(CLI::Range(64L, 4096L))->capture_default_str();
    app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();
    app.add_option("--ct-tol", ct_tol, "extrapolation tolerance")->capture_default_str();
    app.add_option("--z", zlist, "comma-separated sample points in (0,1)");
    app.add_option("--seed", seed, "seed for random parameter points")->capture_default_str();
    app.add_option("--cache", cache_path, "path of the persistent value cache");
    app.add_option("--report", report_path, "write the JSON report here");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware default)");
    app.add_flag("--serial", serial, "run every kernel on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> suites = split_csv(suite);
    for (const std::string& s : suites)
        if (!known.count(s)) {
            std::cerr << "unknown suite: " << s << "\n";
            return 2;
        }

#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#endif

    zeta4::CheckContext ctx;
    ctx.prec = static_cast<mpfr_prec_t>(prec_bits);
    ctx.tol = tol;
    ctx.ct_tol = ct_tol;
    ctx.weight_max = weight_max;
    if (!weight.empty()) {
        std::size_t dots = weight.find("..");
        if (dots == std::string::npos) {
            ctx.weight_min = ctx.weight_max = std::stoi(weight);
        } else {
            ctx.weight_min = std::stoi(weight.substr(0, dots));
            ctx.weight_max = std::stoi(weight.substr(dots + 2));
        }
        if (ctx.weight_min < 4 || ctx.weight_max < ctx.weight_min) {
            std::cerr << "bad --weight range\n";
            return 2;
        }
    }
    ctx.seed = seed;
    ctx.jobs = jobs;
    ctx.mode = serial ? zeta4::ExecMode::serial : zeta4::ExecMode::openmp;
    if (!zlist.empty()) {
        ctx.zs.clear();
        for (const std::string& zstr : split_csv(zlist)) ctx.zs.push_back(std::stod(zstr));
    }
    zeta4::MzvCache cache(cache_path);
    if (!cache_path.empty()) ctx.cache = &cache;

    std::vector<zeta4::CheckResult> results;
    try {
        results = zeta4::run_suites(suites, ctx);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    int failed = 0;
    for (const zeta4::CheckResult& r : results) {
        std::printf("%-44s %-4s", r.id.c_str(), r.status.c_str());
        if (r.residual) std::printf("  residual=%s", r.residual->c_str());
        if (!r.detail.empty()) std::printf("  [%s]", r.detail.c_str());
        std::printf("\n");
        if (!r.passed()) ++failed;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << zeta4::report_json(results) << "\n";
    }
    if (!cache_path.empty()) cache.save();
    return failed == 0 ? 0 : 1;
}
