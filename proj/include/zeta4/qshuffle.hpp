#ifndef ZETA4_QSHUFFLE_HPP
#define ZETA4_QSHUFFLE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"
#include "zeta4/perm.hpp"

namespace zeta4 {

// One slot of a formal polylogarithm symbol: a formal index l_S given by a
// subscript set, together with the power of z it carries as argument.
struct Letter {
    Mask exp;
    int zexp;
    auto operator<=>(const Letter&) const = default;
};

// Li(word; z-pattern) with formal subscript-set indices.  Canonical by
// construction: masks are sets, so l_{12} and l_{21} coincide.  Symbols
// order by (depth, word, argument pattern).
struct LiSymbol {
    std::vector<Letter> letters;

    int depth() const { return static_cast<int>(letters.size()); }
    bool operator==(const LiSymbol& rhs) const { return letters == rhs.letters; }
    bool operator<(const LiSymbol& rhs) const;
    std::string str() const;
};

LiSymbol make_symbol(std::initializer_list<Mask> word, std::initializer_list<int> zexps);
LiSymbol make_symbol(const std::vector<Mask>& word, const std::vector<int>& zexps);
LiSymbol act(const Perm& sigma, const LiSymbol& s);

// Rational-linear combination of Li symbols.
class FormalLiSum {
public:
    using Terms = std::map<LiSymbol, Rational>;

    FormalLiSum() = default;
    explicit FormalLiSum(const LiSymbol& s) { add(s, 1); }

    void add(const LiSymbol& s, const Rational& c);
    FormalLiSum& operator+=(const FormalLiSum& rhs);
    FormalLiSum& operator-=(const FormalLiSum& rhs);
    FormalLiSum operator*(const Rational& c) const;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool operator==(const FormalLiSum& rhs) const { return terms_ == rhs.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

FormalLiSum act(const Perm& sigma, const FormalLiSum& s);

// The harmonic product.  Decomposes the joint summation domain into
// interleavings plus contractions; output z-powers follow the cumulative
// product rule (at each position, the power of the deepest letter consumed
// so far from each factor adds in).
FormalLiSum stuffle(const std::vector<Letter>& a, const std::vector<Letter>& b);
FormalLiSum stuffle(const FormalLiSum& a, const FormalLiSum& b);
FormalLiSum stuffle(const FormalLiSum& a, const std::vector<Letter>& b);

// Integer instantiation: each subscript set becomes the sum of the chosen
// composition's parts.  Key is (index word, z-pattern).
struct InstSymbol {
    std::vector<int> word;
    std::vector<int> zexps;
    auto operator<=>(const InstSymbol&) const = default;
};
using InstLiSum = std::map<InstSymbol, Rational>;
InstLiSum instantiate(const FormalLiSum& s, const std::array<int, 4>& composition);

// The four harmonic-product identities (parts i..iv) and their C/Cb-summed
// forms, checked as exact formal-sum equalities.  `formal` compares the
// subscript-set sums; the composition overloads compare instantiations.
struct LemmaSides {
    FormalLiSum lhs, rhs;
    bool equal() const { return lhs == rhs; }
};

LemmaSides lemma21_sides(int part);  // part in 1..4
LemmaSides lemma22_sides(int part);  // part in 1..3
bool verify_lemma21(int part);
bool verify_lemma21(int part, const std::array<int, 4>& composition);
bool verify_lemma22(int part);
bool verify_lemma22(int part, const std::array<int, 4>& composition);

// Per-index identity behind the harmonic proposition (its x-weighted sum
// over all compositions of fixed weight is the proposition itself).
LemmaSides harmonic_combined_sides();

// Structured description of the proposition's five product blocks,
// consumable by the numeric evaluator: sign, summation set over sigma,
// factor depths with their weight constraints, and argument style.
struct ProductBlock {
    int sign;
    PermList sigmas;                  // x-action set (C, Cb, or {e})
    std::vector<int> factor_depths;   // e.g. {3,1} for T_a * S_b
    std::vector<int> min_weights;     // per-factor lower bound on its weight
};
std::vector<ProductBlock> prop21_blocks();

} // namespace zeta4

#endif
