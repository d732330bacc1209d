#ifndef ZETA4_PERM_HPP
#define ZETA4_PERM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zeta4 {

// A permutation of {1,...,n} stored as an image array:
// images_[i-1] = sigma(i).  Composition is (sigma*rho)(x) = sigma(rho(x)).
class Perm {
public:
    Perm() = default;
    static Perm identity(int degree);
    // Accepts things like "e", "(1234)", "(12)(34)", "(132)".
    static Perm cycles(const std::string& notation, int degree = 4);
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    Perm operator*(const Perm& rhs) const; // this after rhs
    Perm inverse() const;
    bool is_identity() const;
    bool even() const;

    auto operator<=>(const Perm&) const = default;

    std::string cycle_str() const;

private:
    std::vector<int> images_;
};

using PermList = std::vector<Perm>;

// Integer-multiplicity map over group elements; the comparison currency for
// the coset identities, which mix cosets with signs and multiplicities.
using SignedPermSet = std::map<Perm, int>;

SignedPermSet to_multiset(const PermList& v, int coeff = 1);
SignedPermSet& add_to(SignedPermSet& acc, const SignedPermSet& other, int coeff = 1);
bool multiset_equal(const SignedPermSet& a, const SignedPermSet& b);
std::string multiset_str(const SignedPermSet& s);

// Closure of the generators under composition (always contains e).
PermList generate(const PermList& generators, int degree = 4);

// Right coset H*sigma = {h∘sigma : h in H}.
PermList right_coset(const PermList& H, const Perm& sigma);
PermList left_coset(const Perm& sigma, const PermList& H);

// Product set A*B = {a∘b} as a multiset (|A|*|B| entries).
SignedPermSet product_multiset(const PermList& A, const PermList& B);

// Named subsets of S4 used throughout: C = <(1234)>, Cb = {e,(1234)},
// A4, and the harmonic-lemma sets U1, U2, V2, U3, V3, V3a, V3b, V3c, W3.
struct S4Data {
    PermList all;      // the 24 elements
    PermList C, Cb, A4;
    PermList U1, V2, U2, W3, V3, V3a, V3b, V3c, U3;
    PermList coset_of_C(const Perm& sigma) const { return right_coset(C, sigma); }
    static const S4Data& instance();
};

// Tuple of subscript sets, e.g. (l_{12}, l_3, l_4) as ({1,2},{3},{4}).
// Masks are bitmasks over {1,2,3,4}; an empty mask marks a zeroed slot.
using Mask = std::uint8_t;
using SubscriptTuple = std::vector<Mask>;

Mask mask_of(std::initializer_list<int> subscripts);
Mask apply_perm(const Perm& sigma, Mask m);
SubscriptTuple act_on_subscript_tuple(const Perm& sigma, const SubscriptTuple& t);
std::string mask_str(Mask m);
std::string tuple_str(const SubscriptTuple& t);

using TupleMultiset = std::map<SubscriptTuple, int>;
TupleMultiset orbit_multiset(const PermList& set, const SubscriptTuple& t);
bool tuple_multiset_equal(const TupleMultiset& a, const TupleMultiset& b);

} // namespace zeta4

#endif
