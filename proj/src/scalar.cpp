#include "supergv/scalar.hpp"

#include <stdexcept>

namespace supergv {

Rational Scalar::rational_value() const {
    if (!is_constant()) throw std::logic_error("scalar is not a rational constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_term() / den_.constant_term();
}

void Scalar::canon() {
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    // Denominator monic under grlex; the unit moves into the numerator.
    Rational lc = den_.leading_term().second;
    if (lc != 1) {
        ParamPoly inv(Rational(1) / lc);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void Scalar::reduce() {
    if (den_.is_zero()) throw std::logic_error("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = ParamPoly(Rational(1));
        return;
    }
    ParamPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    canon();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::logic_error("scalar division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::logic_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string Scalar::str(const std::vector<std::string>& param_names) const {
    std::string n = num_.str(param_names);
    if (den_.is_constant() && den_.constant_term() == 1) return n;
    std::string d = den_.str(param_names);
    auto wrap = [](const std::string& s) {
        bool needs = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        return needs ? "(" + s + ")" : s;
    };
    return wrap(n) + "/" + wrap(d);
}

} // namespace supergv
