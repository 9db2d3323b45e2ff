#pragma once

#include "supergv/scalar.hpp"
#include "supergv/signature.hpp"

#include <map>

namespace supergv {

// One multiplicative factor per even coordinate. For a line coordinate
// the entry is a plain exponent n >= 0 (x^n). For a circle coordinate it
// encodes a trig atom: 0 is the constant 1, +k is cos(k x), -k is
// sin(k x). Products of circle atoms rewrite to sums (product-to-sum),
// so a monomial never holds more than one atom per coordinate.
struct BaseMonomial {
    std::vector<int> factors;

    BaseMonomial() = default;
    explicit BaseMonomial(std::size_t even_count) : factors(even_count, 0) {}

    bool is_constant() const {
        for (int f : factors)
            if (f != 0) return false;
        return true;
    }
    auto operator<=>(const BaseMonomial& o) const = default;
};

// Exact function on the base manifold: a finite Scalar-combination of
// BaseMonomials. Closed under product and under d/dx_i for every even
// coordinate.
class BaseCoefficient {
public:
    BaseCoefficient() = default;
    BaseCoefficient(SignaturePtr sig) : sig_(std::move(sig)) {}
    BaseCoefficient(SignaturePtr sig, const Scalar& c);

    static BaseCoefficient line_power(const SignaturePtr& sig, std::size_t even_index, unsigned n);
    static BaseCoefficient trig(const SignaturePtr& sig, std::size_t even_index, bool is_cos, int k);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Scalar value when the coefficient is the constant monomial only.
    Scalar constant_value() const;
    // Coefficient of the constant monomial (zero if absent).
    Scalar constant_part() const;

    BaseCoefficient operator-() const;
    BaseCoefficient operator+(const BaseCoefficient& o) const;
    BaseCoefficient operator-(const BaseCoefficient& o) const;
    BaseCoefficient operator*(const BaseCoefficient& o) const;
    BaseCoefficient operator*(const Scalar& c) const;
    BaseCoefficient& operator+=(const BaseCoefficient& o);
    BaseCoefficient& operator-=(const BaseCoefficient& o);

    bool operator==(const BaseCoefficient& o) const { return terms_ == o.terms_; }
    bool operator!=(const BaseCoefficient& o) const { return !(*this == o); }

    // Exact derivative along even coordinate i.
    BaseCoefficient derivative(std::size_t even_index) const;

    // Degree bounds used by the bounded-basis solver in tests.
    unsigned max_line_degree() const;
    int max_circle_mode() const;

    const std::map<BaseMonomial, Scalar>& terms() const { return terms_; }
    const SignaturePtr& signature() const { return sig_; }
    void add_term(const BaseMonomial& m, const Scalar& c);

    // Numeric evaluation at a sample point (parameters and coordinates
    // given as doubles). Test oracle only; the engine itself never
    // touches floating point.
    double eval(const std::vector<double>& param_values,
                const std::vector<double>& coord_values) const;

private:
    SignaturePtr sig_;
    std::map<BaseMonomial, Scalar> terms_;
};

} // namespace supergv
