#pragma once

#include "supergv/base_coeff.hpp"

#include <cstdint>
#include <optional>

namespace supergv {

// Sign of reordering theta_J . theta_K into theta_{J|K}: (-1)^inversions,
// 0 when the index sets intersect. Masks are bitsets over odd coordinates.
int grassmann_sign(std::uint32_t j_mask, std::uint32_t k_mask);

// Element of O(M): finite map from theta-monomials (index subsets of the
// odd coordinates, encoded as bitmasks) to base coefficients. The empty
// subset is the body.
class Superfunction {
public:
    Superfunction() = default;
    explicit Superfunction(SignaturePtr sig) : sig_(std::move(sig)) {}
    Superfunction(SignaturePtr sig, const Scalar& c);

    static Superfunction scalar(const SignaturePtr& sig, const Scalar& c);
    static Superfunction base(const SignaturePtr& sig, const BaseCoefficient& b);
    static Superfunction theta(const SignaturePtr& sig, std::size_t odd_index);
    static Superfunction even_coord_power(const SignaturePtr& sig, std::size_t even_index, unsigned n);
    static Superfunction trig(const SignaturePtr& sig, std::size_t even_index, bool is_cos, int k);

    bool is_zero() const { return comps_.empty(); }
    bool is_one() const;

    // Parity of a homogeneous element: 0 even, 1 odd; nullopt when mixed.
    // Zero counts as homogeneous of either parity (reported as even).
    std::optional<int> parity() const;
    bool is_even() const { return parity() == 0; }
    bool is_odd() const { return parity() == 1 || is_zero(); }
    // Even/odd part by theta-degree.
    Superfunction parity_part(int parity) const;

    Superfunction operator-() const;
    Superfunction operator+(const Superfunction& o) const;
    Superfunction operator-(const Superfunction& o) const;
    Superfunction operator*(const Superfunction& o) const;  // sf_mul
    Superfunction operator*(const Scalar& c) const;
    Superfunction& operator+=(const Superfunction& o);
    Superfunction& operator-=(const Superfunction& o);

    bool operator==(const Superfunction& o) const { return comps_ == o.comps_; }
    bool operator!=(const Superfunction& o) const { return !(*this == o); }

    // Projection p on functions: the empty-theta component.
    Superfunction body() const;
    BaseCoefficient body_coefficient() const;
    // Nilpotent part f - body.
    Superfunction soul() const;

    // Inverse via the truncating geometric series; requires the body to
    // be a nonzero Scalar constant (unit of the coefficient ring).
    Superfunction inverse() const;  // sf_invert

    // Left partial derivative along a coordinate of either parity.
    Superfunction partial_even(std::size_t even_index) const;
    Superfunction partial_odd(std::size_t odd_index) const;
    Superfunction partial(const std::string& coord_name) const;  // sf_partial

    Superfunction pow(unsigned n) const;

    const std::map<std::uint32_t, BaseCoefficient>& components() const { return comps_; }
    const SignaturePtr& signature() const { return sig_; }
    void add_component(std::uint32_t mask, const BaseCoefficient& b);

private:
    SignaturePtr sig_;
    std::map<std::uint32_t, BaseCoefficient> comps_;
};

inline Superfunction operator*(const Scalar& c, const Superfunction& f) { return f * c; }

// sf_* names from the operation table, for readers grepping the API.
inline Superfunction sf_mul(const Superfunction& f, const Superfunction& g) { return f * g; }
inline Superfunction sf_body(const Superfunction& f) { return f.body(); }
inline Superfunction sf_invert(const Superfunction& f) { return f.inverse(); }
inline Superfunction sf_partial(const Superfunction& f, const std::string& coord) { return f.partial(coord); }

} // namespace supergv
