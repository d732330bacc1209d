#ifndef ZETA4_INDEXWORD_HPP
#define ZETA4_INDEXWORD_HPP

#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "zeta4/errors.hpp"

namespace zeta4 {

// A composition (l1,...,ln) of positive integers.  The first entry decides
// admissibility (l1 >= 2), the sum is the weight, the length the depth.
class IndexWord {
public:
    IndexWord() = default;
    IndexWord(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit IndexWord(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int depth() const { return static_cast<int>(parts_.size()); }
    bool admissible() const { return !parts_.empty() && parts_.front() >= 2; }

    const std::vector<int>& parts() const { return parts_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    auto operator<=>(const IndexWord&) const = default;

    std::string str() const;

private:
    void validate() const {
        if (parts_.empty()) throw InvalidArguments("IndexWord: empty composition");
        for (int p : parts_)
            if (p < 1) throw InvalidArguments("IndexWord: parts must be positive");
    }
    std::vector<int> parts_;
};

// Argument tuple (z^{e1},...,z^{en}).  ladder(n) is (z,z^2,...,z^n),
// flat(n) is (z,...,z).
class ZPattern {
public:
    ZPattern() = default;
    ZPattern(std::initializer_list<int> exps) : exps_(exps) { validate(); }
    explicit ZPattern(std::vector<int> exps) : exps_(std::move(exps)) { validate(); }

    static ZPattern ladder(int n);
    static ZPattern flat(int n);

    int length() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exps() const { return exps_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    auto operator<=>(const ZPattern&) const = default;

    std::string str() const;

private:
    void validate() const {
        for (int e : exps_)
            if (e < 1) throw InvalidArguments("ZPattern: exponents must be positive");
    }
    std::vector<int> exps_;
};

// Enumerates compositions of `weight` into `depth` positive parts in
// lexicographic order; admissible_only keeps those with first part >= 2.
std::vector<IndexWord> compositions(int weight, int depth, bool admissible_only);

// Pairs a word with an argument pattern, rejecting length mismatches.
std::pair<IndexWord, ZPattern> checked_pair(const IndexWord& w, const ZPattern& z);

} // namespace zeta4

#endif
