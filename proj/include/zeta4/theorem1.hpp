#ifndef ZETA4_THEOREM1_HPP
#define ZETA4_THEOREM1_HPP

#include <array>
#include <map>
#include <vector>

#include "zeta4/indexword.hpp"
#include "zeta4/multipoly.hpp"
#include "zeta4/perm.hpp"

namespace zeta4 {

// One product term x_{S1}^{l1-1} x_{S2}^{l2-1} x_{S3}^{l3-1} x_{S4}^{l4-1}
// carrying the sign of its block.
struct BracketTerm {
    int sign;
    std::array<Mask, 4> slots;
};

// The fully expanded term list of the four-parameter bracket, with every
// sigma/rho/nu sum unrolled.  route 2 is the pre-merge variant whose third
// block keeps the two rho-sums and the two single terms separate; both
// must assemble to the same polynomial.
std::vector<BracketTerm> theorem1_terms();
std::vector<BracketTerm> theorem1_terms_route2();

// The bracket polynomial multiplying zeta(l1,l2,l3,l4).
MultiPoly theorem1_coefficient(const IndexWord& l);
MultiPoly theorem1_coefficient_route2(const IndexWord& l);

// Multiplier on the right-hand side: sum of x1^{l1-1}..x4^{l4-1} over all
// compositions of l into four positive parts (every monomial of total
// degree l-4, coefficient one).
MultiPoly rhs_multiplier(int weight);

// Argument-pattern combination obtained by substituting a concrete point
// for (x1..x4): map from the 4-tuple of substituted subset sums to its
// integer coefficient.  Zero columns cancel for the four substitutions of
// interest, leaving the printed positive patterns.
using ZPatternKey = std::array<Rational, 4>;
std::map<ZPatternKey, int> derive_z_combination(const std::array<Rational, 4>& point);

} // namespace zeta4

#endif
