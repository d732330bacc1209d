#ifndef ZETA4_BIGREAL_HPP
#define ZETA4_BIGREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>
#include <string>

namespace zeta4 {

// Value-semantic arbitrary-precision float.  Every value carries its own
// working precision; binary operations compute at the larger of the two.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 128);
    BigReal(long x, mpfr_prec_t prec);
    BigReal(const mpq_class& q, mpfr_prec_t prec);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    BigReal operator+(const BigReal& rhs) const;
    BigReal operator-(const BigReal& rhs) const;
    BigReal operator*(const BigReal& rhs) const;
    BigReal operator/(const BigReal& rhs) const;
    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);
    BigReal operator-() const;

    BigReal operator*(long rhs) const;
    BigReal operator/(long rhs) const;

    bool operator<(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_) < 0; }
    bool operator>(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_) > 0; }
    bool operator<=(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_) <= 0; }
    bool operator>=(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_) >= 0; }
    bool operator==(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_) == 0; }

    BigReal abs() const;
    BigReal pow_si(long e) const;
    BigReal ln() const;   // natural log
    BigReal exp10_neg() const = delete;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Round-trip decimal string: parsing it back at the same precision
    // recovers the value exactly.
    std::string to_string() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

// 10^{-k} at the given precision (k may be fractional, e.g. 2.5).
BigReal pow10(double k, mpfr_prec_t prec);

} // namespace zeta4

#endif
