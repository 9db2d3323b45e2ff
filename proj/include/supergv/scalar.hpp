#pragma once

#include "supergv/param_poly.hpp"

namespace supergv {

// Exact rational function in the formal parameters. Always held in
// canonical reduced form: numerator and denominator coprime, denominator
// monic under graded-lex, and zero is 0/1. With no parameters this is
// just an exact rational constant.
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(int v) : num_(Rational(v)), den_(Rational(1)) {}
    Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}
    Scalar(long num, long den) : num_(Rational(num, den)), den_(Rational(1)) { canon(); }
    explicit Scalar(ParamPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    Scalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static Scalar parameter(std::size_t index) { return Scalar(ParamPoly::variable(index)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == ParamPoly(Rational(1)); }
    // True when the value is a plain rational (no parameter dependence).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    std::string str(const std::vector<std::string>& param_names) const;

private:
    void canon();
    void reduce();
    ParamPoly num_, den_;
};

} // namespace supergv
