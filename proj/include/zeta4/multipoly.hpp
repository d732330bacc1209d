#ifndef ZETA4_MULTIPOLY_HPP
#define ZETA4_MULTIPOLY_HPP

#include <array>
#include <gmpxx.h>
#include <map>
#include <string>

#include "zeta4/perm.hpp"

namespace zeta4 {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Multivariate polynomial in x1..x4 over exact rationals.  Zero
// coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::array<int, 4>;
    using Terms = std::map<Exponents, Rational>;

    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(int j); // x_j, 1-based

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const;
    MultiPoly pow(int k) const;

    bool operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }

    // total degree; -1 for the zero polynomial
    int degree() const;
    int degree_in(int var) const;
    bool homogeneous(int deg) const;

    Rational coefficient(const Exponents& e) const;
    Rational substitute(const std::array<Rational, 4>& point) const;

    // prints terms in the canonical (map) monomial order
    std::string str() const;

    void add_term(const Exponents& e, const Rational& c);

private:
    Terms terms_;
};

// (sum of x_j over j in mask)^k, expanded.
MultiPoly subset_power(Mask subset, int k);

// sigma . f(x1,..,x4) = f(x_{sigma(1)},..,x_{sigma(4)})
MultiPoly act(const Perm& sigma, const MultiPoly& p);

} // namespace zeta4

#endif
