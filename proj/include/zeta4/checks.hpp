#ifndef ZETA4_CHECKS_HPP
#define ZETA4_CHECKS_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zeta4/bigreal.hpp"
#include "zeta4/cache.hpp"
#include "zeta4/mzv.hpp"
#include "zeta4/parallel.hpp"

namespace zeta4 {

struct CheckResult {
    std::string id;
    std::string anchor;                  // catalog label, "paper_ref" in reports
    std::string status = "pass";         // pass | fail | skipped
    std::optional<std::string> residual; // numeric checks only
    std::string detail;                  // mismatch information
    std::string params;                  // short parameter summary
    long seed = 0;
    long elapsed_ms = 0;

    bool passed() const { return status == "pass"; }
};

struct CheckContext {
    mpfr_prec_t prec = 128;
    double tol = 1e-10;
    double ct_tol = 1e-4;
    int weight_min = 5;           // numeric sweeps
    int weight_max = 10;
    int symbolic_weight_max = 8;  // exhaustive formal sweeps
    std::vector<double> zs = {0.5, 0.7, 0.9};
    long seed = 20120930;
    ExecMode mode = ExecMode::openmp;
    int jobs = 0;
    MzvCache* cache = nullptr;

    // evaluation target: five digits below the tolerance, at least 1e-15
    BigReal target_err() const {
        double digits = std::max(15.0, -std::log10(tol) + 5.0);
        return pow10(-digits, prec);
    }
};

using CheckFn = std::function<std::vector<CheckResult>(const CheckContext&)>;

struct Suite {
    std::string name;
    CheckFn run;
};

// All suites, in report order.  Names match the command-line vocabulary:
// sumformula thm1 thm2 prop21 prop22 prop23 lemma21 lemma22 lemma3x
// lemma41 remark21 remark41 table1 cosets
const std::vector<Suite>& all_suites();

std::vector<CheckResult> run_suites(const std::vector<std::string>& names, const CheckContext& ctx);

std::string report_json(const std::vector<CheckResult>& results);

// ---- individual checks used by both the CLI and the acceptance tests ----

std::vector<CheckResult> check_sum_formula(const CheckContext& ctx);
std::vector<CheckResult> check_theorem1(const CheckContext& ctx);
std::vector<CheckResult> check_theorem2(const CheckContext& ctx);
std::vector<CheckResult> check_prop21(const CheckContext& ctx);
std::vector<CheckResult> check_prop22(const CheckContext& ctx);
std::vector<CheckResult> check_prop23(const CheckContext& ctx);
std::vector<CheckResult> check_lemma21(const CheckContext& ctx);
std::vector<CheckResult> check_lemma22(const CheckContext& ctx);
std::vector<CheckResult> check_lemma3x(const CheckContext& ctx);
std::vector<CheckResult> check_lemma41(const CheckContext& ctx);
std::vector<CheckResult> check_remark21(const CheckContext& ctx);
std::vector<CheckResult> check_remark41(const CheckContext& ctx);
std::vector<CheckResult> check_table1(const CheckContext& ctx);
std::vector<CheckResult> check_cosets(const CheckContext& ctx);

} // namespace zeta4

#endif
