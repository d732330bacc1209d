#ifndef ZETA4_PFRAC_HPP
#define ZETA4_PFRAC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zeta4/multipoly.hpp"
#include "zeta4/parallel.hpp"
#include "zeta4/perm.hpp"

namespace zeta4 {

// Denominator: product of subset-sum factors m_S^p, keyed by mask, sorted.
using DenKey = std::vector<std::pair<Mask, int>>;

// numerator_poly / prod_{(S,p)} m_S^p — the numerator lives in y1..y4 and
// is constant 1 for the base identities.
struct FracTerm {
    MultiPoly numerator;
    DenKey den;
};

struct FracSum {
    std::vector<FracTerm> terms;
    void add(MultiPoly num, DenKey den);
};

// Collected canonical form: denominator signature -> total numerator.
std::map<DenKey, MultiPoly> collect(const FracSum& s);

// The nested chain (m_{s(1)s(2)s(3)s(4)}, m_{s(2)s(3)s(4)}, m_{s(3)s(4)}, m_{s(4)}).
DenKey nested_chain(const Perm& sigma);

// Exact decision procedure for equality of rational functions in m1..m4
// with polynomial-in-y numerators: evaluates on a positive integer grid
// whose size exceeds the per-variable degree bound of the cleared
// polynomial.  Subset sums of positive values never vanish, so no poles.
struct DecisionOutcome {
    bool equal = false;
    long long points = 0;
    int grid_per_variable = 0;
};
DecisionOutcome equal_as_rational_functions(const FracSum& a, const FracSum& b,
                                            ExecMode mode = ExecMode::serial);

// The four generating identities: lhs/rhs pairs.
enum class BaseIdentity { u1_form, u2_form, split34, s4_form };
std::pair<FracSum, FracSum> base_identity(BaseIdentity which);
std::string base_identity_name(BaseIdentity which);

// Geometric-series route: coefficient of t^{weight-arity} after replacing
// every factor m_S by m_S - t*y_S, expanded termwise exactly.
std::map<DenKey, MultiPoly> texpand_coefficient(const FracSum& s, int weight);

// Display route: the same coefficient written as a sum over compositions.
std::map<DenKey, MultiPoly> composition_expansion(const FracSum& s, int weight);

} // namespace zeta4

#endif
