#ifndef ZETA4_MZV_HPP
#define ZETA4_MZV_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "zeta4/bigreal.hpp"
#include "zeta4/cache.hpp"
#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"

namespace zeta4 {

struct MzvValue {
    IndexWord index;
    BigReal value;
    BigReal err;
    bool regularized = false;
};

// zeta(l1..ln) for an admissible word: the integral representation is split
// at one half, turning the value into a finite sum of products of rapidly
// convergent series at z = 1/2.
MzvValue eval_mzv(const IndexWord& w, const BigReal& target_err, mpfr_prec_t prec);

// Exact expansion of a regularized value with leading ones into admissible
// values: zeta*(1^a, tail) is eliminated through the harmonic product of
// Li(1^a) with Li(tail); zeta*(1^n) = 0.  Throws UnsupportedIndex for
// anything else (first entry neither 1 nor >= 2 cannot occur).
std::map<IndexWord, Rational> star_expansion(const IndexWord& w);

// Memoizing evaluator; the cache persists across runs when given a path.
class MzvEvaluator {
public:
    MzvEvaluator(mpfr_prec_t prec, const BigReal& target_err, MzvCache* cache = nullptr)
        : prec_(prec), target_err_(target_err), cache_(cache) {}

    BigReal zeta(const IndexWord& w);                  // admissible
    BigReal zeta(std::initializer_list<int> w) { return zeta(IndexWord(w)); }
    BigReal zeta_star(const IndexWord& w);             // leading-ones allowed
    BigReal max_err() const { return worst_err_; }

    mpfr_prec_t prec() const { return prec_; }
    const BigReal& target_err() const { return target_err_; }

private:
    mpfr_prec_t prec_;
    BigReal target_err_;
    MzvCache* cache_;
    std::map<std::pair<std::vector<int>, bool>, BigReal> memo_;
    BigReal worst_err_{0, 64};
    mutable std::recursive_mutex mu_; // zeta may recurse through star values

    BigReal compute(const IndexWord& w, bool star);
};

// The binary encoding used by the split evaluation; exposed for tests.
std::vector<int> to_binary_word(const IndexWord& w);
IndexWord from_binary_word(const std::vector<int>& b);

} // namespace zeta4

#endif
