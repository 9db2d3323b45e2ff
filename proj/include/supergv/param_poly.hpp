#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace supergv {

using Rational = mpq_class;

// Sparse multivariate polynomial in the formal parameters of a space
// signature, with exact rational coefficients. The exponent vector is
// indexed by parameter position; a key shorter than the parameter list is
// never stored (keys are trimmed of trailing zeros so the constant term
// has an empty key regardless of how many parameters exist).
class ParamPoly {
public:
    using Monomial = std::vector<unsigned>;

    ParamPoly() = default;
    explicit ParamPoly(const Rational& c);
    static ParamPoly variable(std::size_t index, unsigned power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant term (zero if absent).
    Rational constant_term() const;
    // Leading term under graded-lex order; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const;

    unsigned degree_in(std::size_t index) const;
    unsigned total_degree() const;

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

    // Exact division; throws std::logic_error when the divisor does not
    // divide exactly. Used by the fraction-free elimination and by gcd.
    ParamPoly div_exact(const ParamPoly& divisor) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Rational& c);

    std::string str(const std::vector<std::string>& param_names) const;

private:
    // Graded-lex: compare total degree first, then exponents.
    struct GrlexLess {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    std::map<Monomial, Rational, GrlexLess> terms_;
};

// Polynomial gcd (primitive PRS in the first parameter that occurs,
// recursing on coefficients). The result is normalized so its leading
// grlex coefficient is 1; gcd(0,0) = 0.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

} // namespace supergv
