#include "zeta4/bigreal.hpp"

#include <stdexcept>
#include <vector>

namespace zeta4 {

BigReal::BigReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

BigReal::BigReal(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_string(const std::string& s, mpfr_prec_t prec) {
    BigReal out(prec);
    if (mpfr_set_str(out.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal::from_string: cannot parse '" + s + "'");
    return out;
}

namespace {
mpfr_prec_t out_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

BigReal BigReal::operator+(const BigReal& rhs) const {
    BigReal out(out_prec(*this, rhs));
    mpfr_add(out.raw(), v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator-(const BigReal& rhs) const {
    BigReal out(out_prec(*this, rhs));
    mpfr_sub(out.raw(), v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator*(const BigReal& rhs) const {
    BigReal out(out_prec(*this, rhs));
    mpfr_mul(out.raw(), v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator/(const BigReal& rhs) const {
    BigReal out(out_prec(*this, rhs));
    mpfr_div(out.raw(), v_, rhs.v_, MPFR_RNDN);
    return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { mpfr_add(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator-=(const BigReal& rhs) { mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator*=(const BigReal& rhs) { mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN); return *this; }
BigReal& BigReal::operator/=(const BigReal& rhs) { mpfr_div(v_, v_, rhs.v_, MPFR_RNDN); return *this; }

BigReal BigReal::operator-() const {
    BigReal out(prec());
    mpfr_neg(out.raw(), v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator*(long rhs) const {
    BigReal out(prec());
    mpfr_mul_si(out.raw(), v_, rhs, MPFR_RNDN);
    return out;
}

BigReal BigReal::operator/(long rhs) const {
    BigReal out(prec());
    mpfr_div_si(out.raw(), v_, rhs, MPFR_RNDN);
    return out;
}

BigReal BigReal::abs() const {
    BigReal out(prec());
    mpfr_abs(out.raw(), v_, MPFR_RNDN);
    return out;
}

BigReal BigReal::pow_si(long e) const {
    BigReal out(prec());
    mpfr_pow_si(out.raw(), v_, e, MPFR_RNDN);
    return out;
}

BigReal BigReal::ln() const {
    BigReal out(prec());
    mpfr_log(out.raw(), v_, MPFR_RNDN);
    return out;
}

std::string BigReal::to_string() const {
    mpfr_exp_t exp;
    char* s = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    bool neg = !digits.empty() && digits[0] == '-';
    std::string mant = neg ? digits.substr(1) : digits;
    if (mant.empty()) mant = "0";
    std::string out = (neg ? "-0." : "0.") + mant + "e" + std::to_string(exp);
    return out;
}

BigReal pow10(double k, mpfr_prec_t prec) {
    BigReal out(prec);
    BigReal kk(prec);
    mpfr_set_d(kk.raw(), k, MPFR_RNDN);
    BigReal ten(10, prec);
    mpfr_pow(out.raw(), ten.raw(), kk.raw(), MPFR_RNDN);
    return out;
}

} // namespace zeta4
