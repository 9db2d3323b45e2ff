#pragma once

#include "supergv/superfunction.hpp"

#include <variant>

namespace supergv {

// Product of 1-form generators in the fixed global order dx_1 < ... <
// dx_p < dtheta_1 < ... < dtheta_q. dx exponents are 0/1 (odd
// generators); dtheta exponents are arbitrary naturals up to the
// signature's power guard (dtheta is an even generator, its powers do
// not vanish).
struct FormMonomial {
    std::uint32_t dx_mask = 0;
    std::vector<std::uint8_t> dtheta_exp;

    FormMonomial() = default;
    explicit FormMonomial(const SpaceSignature& sig) : dtheta_exp(sig.odd_count(), 0) {}

    unsigned degree() const;
    int parity() const { return std::popcount(dx_mask) & 1; }  // dtheta is even
    bool is_function() const { return degree() == 0; }

    auto operator<=>(const FormMonomial& o) const = default;
};

// Sparse differential form: map from form monomials to superfunction
// coefficients, the coefficient standing to the LEFT of the monomial.
// Total parity of a homogeneous term = parity(coefficient) + #dx mod 2.
class SuperForm {
public:
    SuperForm() = default;
    explicit SuperForm(SignaturePtr sig) : sig_(std::move(sig)) {}

    static SuperForm function(const Superfunction& f);
    static SuperForm dx(const SignaturePtr& sig, std::size_t even_index);
    static SuperForm dtheta(const SignaturePtr& sig, std::size_t odd_index);

    bool is_zero() const { return terms_.empty(); }
    // Uniform form degree; nullopt when mixed. Zero reports degree 0.
    std::optional<unsigned> degree() const;
    // Total parity; nullopt when mixed.
    std::optional<int> parity() const;

    SuperForm operator-() const;
    SuperForm operator+(const SuperForm& o) const;
    SuperForm operator-(const SuperForm& o) const;
    SuperForm operator*(const Scalar& c) const;
    SuperForm& operator+=(const SuperForm& o);
    SuperForm& operator-=(const SuperForm& o);

    bool operator==(const SuperForm& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperForm& o) const { return !(*this == o); }

    const std::map<FormMonomial, Superfunction>& terms() const { return terms_; }
    const SignaturePtr& signature() const { return sig_; }
    void add_term(const FormMonomial& m, const Superfunction& f);

    // Coefficient of a monomial (zero superfunction when absent).
    Superfunction coefficient(const FormMonomial& m) const;

private:
    SignaturePtr sig_;
    std::map<FormMonomial, Superfunction> terms_;
};

// Super vector field in component form: coordinate id -> superfunction
// coefficient, the coefficient standing to the LEFT of the derivation.
// Coordinate ids: 0..p-1 the even coordinates, p..p+q-1 the odd ones.
class SuperVectorField {
public:
    SuperVectorField() = default;
    explicit SuperVectorField(SignaturePtr sig) : sig_(std::move(sig)) {}

    static SuperVectorField coordinate(const SignaturePtr& sig, std::size_t coord_id);
    static SuperVectorField d_dx(const SignaturePtr& sig, std::size_t even_index);
    static SuperVectorField d_dtheta(const SignaturePtr& sig, std::size_t odd_index);

    bool is_zero() const { return comps_.empty(); }
    std::optional<int> parity() const;
    bool is_homogeneous() const { return parity().has_value(); }

    SuperVectorField operator-() const;
    SuperVectorField operator+(const SuperVectorField& o) const;
    SuperVectorField operator-(const SuperVectorField& o) const;
    SuperVectorField operator*(const Scalar& c) const;
    SuperVectorField& operator+=(const SuperVectorField& o);

    // Left multiplication by a superfunction.
    friend SuperVectorField operator*(const Superfunction& f, const SuperVectorField& X);

    bool operator==(const SuperVectorField& o) const { return comps_ == o.comps_; }
    bool operator!=(const SuperVectorField& o) const { return !(*this == o); }

    Superfunction component(std::size_t coord_id) const;
    const std::map<std::size_t, Superfunction>& components() const { return comps_; }
    const SignaturePtr& signature() const { return sig_; }
    void set_component(std::size_t coord_id, const Superfunction& f);

    // Derivation action X(f) = sum_a X^a . d_a f.
    Superfunction apply(const Superfunction& f) const;

private:
    SignaturePtr sig_;
    std::map<std::size_t, Superfunction> comps_;
};

// Coordinate presentation of a map between model spaces. Even line and
// odd targets take an arbitrary superfunction of matching parity. A
// circle target must be an integer winding of one source circle
// coordinate plus an even nilpotent correction; that is the only shape
// whose Fourier atoms pull back inside the ring.
class SuperMap {
public:
    struct CircleFormula {
        int winding = 0;
        int source_even_index = -1;  // -1 when winding == 0
        Superfunction correction;    // even, zero body
    };
    using Formula = std::variant<Superfunction, CircleFormula>;

    SuperMap(SignaturePtr source, SignaturePtr target);

    void set_even_line(std::size_t target_even, const Superfunction& f);
    void set_even_circle(std::size_t target_even, int winding, int source_even,
                         const Superfunction& correction);
    void set_odd(std::size_t target_odd, const Superfunction& f);

    static SuperMap identity(const SignaturePtr& sig);

    const SignaturePtr& source() const { return source_; }
    const SignaturePtr& target() const { return target_; }
    const Formula& even_formula(std::size_t i) const;
    const Superfunction& odd_formula(std::size_t j) const;
    void validate() const;

private:
    SignaturePtr source_, target_;
    std::vector<std::optional<Formula>> even_formulas_;
    std::vector<std::optional<Superfunction>> odd_formulas_;
};

// Exterior algebra operations. All are pure; inputs are never modified.
SuperForm wedge(const SuperForm& a, const SuperForm& b);
SuperForm wedge(const Superfunction& f, const SuperForm& b);
SuperForm exterior_d(const Superfunction& f);
SuperForm exterior_d(const SuperForm& w);
SuperForm interior_product(const SuperVectorField& X, const SuperForm& w);
SuperForm lie_derivative(const SuperVectorField& X, const SuperForm& w);
SuperVectorField vf_bracket(const SuperVectorField& X, const SuperVectorField& Y);
SuperForm project_base(const SuperForm& w);
Superfunction pullback(const SuperMap& phi, const Superfunction& f);
SuperForm pullback(const SuperMap& phi, const SuperForm& w);

} // namespace supergv
