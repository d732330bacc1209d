#include "zeta4/multipoly.hpp"

#include <sstream>

#include "zeta4/errors.hpp"

namespace zeta4 {

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(int j) {
    MultiPoly p;
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(j - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out -= rhs;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    return *this * Rational(-1);
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw InvalidArguments("MultiPoly::pow: negative exponent");
    MultiPoly out = constant(1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var - 1)]);
    return d;
}

bool MultiPoly::homogeneous(int deg) const {
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] + e[3] != deg) return false;
    return true;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

Rational rational_pow(const Rational& b, int k) {
    // 0^0 = 1 by convention, matching x^{l-1} weights at l = 1
    Rational out(1);
    for (int i = 0; i < k; ++i) out *= b;
    return out;
}

} // namespace

Rational MultiPoly::substitute(const std::array<Rational, 4>& point) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int j = 0; j < 4; ++j) term *= rational_pow(point[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(j)]);
        acc += term;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (int j = 0; j < 4; ++j)
            if (e[static_cast<std::size_t>(j)]) {
                os << "*x" << (j + 1);
                if (e[static_cast<std::size_t>(j)] > 1) os << "^" << e[static_cast<std::size_t>(j)];
            }
        first = false;
    }
    return os.str();
}

MultiPoly subset_power(Mask subset, int k) {
    if (subset == 0) {
        // zeroed slot: 0^k, which is 1 when k = 0
        return k == 0 ? MultiPoly::constant(1) : MultiPoly();
    }
    MultiPoly base;
    for (int j = 1; j <= 4; ++j)
        if (subset & (1u << (j - 1))) base += MultiPoly::variable(j);
    return base.pow(k);
}

MultiPoly act(const Perm& sigma, const MultiPoly& p) {
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents f{0, 0, 0, 0};
        for (int j = 1; j <= 4; ++j)
            f[static_cast<std::size_t>(sigma(j) - 1)] = e[static_cast<std::size_t>(j - 1)];
        out.add_term(f, c);
    }
    return out;
}

} // namespace zeta4
