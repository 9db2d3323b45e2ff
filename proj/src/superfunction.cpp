#include "supergv/superfunction.hpp"

#include "supergv/errors.hpp"

#include <bit>

namespace supergv {

int grassmann_sign(std::uint32_t j_mask, std::uint32_t k_mask) {
    if (j_mask & k_mask) return 0;
    // Inversions: pairs (j in J, k in K) with j > k.
    int inv = 0;
    std::uint32_t k = k_mask;
    while (k) {
        std::uint32_t low = k & (~k + 1);
        int bit = std::countr_zero(low);
        inv += std::popcount(j_mask >> (bit + 1));
        k ^= low;
    }
    return (inv & 1) ? -1 : 1;
}

Superfunction::Superfunction(SignaturePtr sig, const Scalar& c) : sig_(std::move(sig)) {
    BaseCoefficient b(sig_, c);
    if (!b.is_zero()) comps_.emplace(0u, std::move(b));
}

Superfunction Superfunction::scalar(const SignaturePtr& sig, const Scalar& c) {
    return Superfunction(sig, c);
}

Superfunction Superfunction::base(const SignaturePtr& sig, const BaseCoefficient& b) {
    Superfunction f(sig);
    if (!b.is_zero()) f.comps_.emplace(0u, b);
    return f;
}

Superfunction Superfunction::theta(const SignaturePtr& sig, std::size_t j) {
    Superfunction f(sig);
    f.comps_.emplace(1u << j, BaseCoefficient(sig, Scalar(1)));
    return f;
}

Superfunction Superfunction::even_coord_power(const SignaturePtr& sig, std::size_t i, unsigned n) {
    return base(sig, BaseCoefficient::line_power(sig, i, n));
}

Superfunction Superfunction::trig(const SignaturePtr& sig, std::size_t i, bool is_cos, int k) {
    return base(sig, BaseCoefficient::trig(sig, i, is_cos, k));
}

bool Superfunction::is_one() const {
    if (comps_.size() != 1) return false;
    const auto& [mask, b] = *comps_.begin();
    return mask == 0 && b.is_constant() && !b.is_zero() && b.constant_value().is_one();
}

std::optional<int> Superfunction::parity() const {
    if (comps_.empty()) return 0;
    int p = std::popcount(comps_.begin()->first) & 1;
    for (const auto& [mask, b] : comps_)
        if ((std::popcount(mask) & 1) != p) return std::nullopt;
    return p;
}

Superfunction Superfunction::parity_part(int parity) const {
    Superfunction r(sig_);
    for (const auto& [mask, b] : comps_)
        if ((std::popcount(mask) & 1) == parity) r.comps_.emplace(mask, b);
    return r;
}

void Superfunction::add_component(std::uint32_t mask, const BaseCoefficient& b) {
    if (b.is_zero()) return;
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
        comps_.emplace(mask, b);
    } else {
        it->second += b;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Superfunction Superfunction::operator-() const {
    Superfunction r(sig_);
    for (const auto& [mask, b] : comps_) r.comps_.emplace(mask, -b);
    return r;
}

Superfunction& Superfunction::operator+=(const Superfunction& o) {
    if (!sig_) sig_ = o.sig_;
    else if (o.sig_) require_same_signature(sig_, o.sig_);
    for (const auto& [mask, b] : o.comps_) add_component(mask, b);
    return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& o) {
    if (!sig_) sig_ = o.sig_;
    else if (o.sig_) require_same_signature(sig_, o.sig_);
    for (const auto& [mask, b] : o.comps_) add_component(mask, -b);
    return *this;
}

Superfunction Superfunction::operator+(const Superfunction& o) const {
    Superfunction r = *this;
    r += o;
    return r;
}

Superfunction Superfunction::operator-(const Superfunction& o) const {
    Superfunction r = *this;
    r -= o;
    return r;
}

Superfunction Superfunction::operator*(const Superfunction& o) const {
    if (sig_ && o.sig_) require_same_signature(sig_, o.sig_);
    Superfunction r(sig_ ? sig_ : o.sig_);
    for (const auto& [ma, ba] : comps_) {
        for (const auto& [mb, bb] : o.comps_) {
            int s = grassmann_sign(ma, mb);
            if (s == 0) continue;
            BaseCoefficient prod = ba * bb;
            if (s < 0) prod = -prod;
            r.add_component(ma | mb, prod);
        }
    }
    return r;
}

Superfunction Superfunction::operator*(const Scalar& c) const {
    Superfunction r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [mask, b] : comps_) r.comps_.emplace(mask, b * c);
    return r;
}

Superfunction Superfunction::body() const {
    Superfunction r(sig_);
    auto it = comps_.find(0u);
    if (it != comps_.end()) r.comps_.emplace(0u, it->second);
    return r;
}

BaseCoefficient Superfunction::body_coefficient() const {
    auto it = comps_.find(0u);
    return it == comps_.end() ? BaseCoefficient(sig_) : it->second;
}

Superfunction Superfunction::soul() const {
    Superfunction r(sig_);
    for (const auto& [mask, b] : comps_)
        if (mask != 0) r.comps_.emplace(mask, b);
    return r;
}

Superfunction Superfunction::inverse() const {
    BaseCoefficient b = body_coefficient();
    if (b.is_zero() || !b.is_constant())
        throw non_unit_body("body is not a nonzero constant scalar");
    Scalar c = b.constant_value();
    // f = c (1 + n) with n nilpotent; f^-1 = c^-1 sum (-n)^k.
    Superfunction n = soul() * c.inverse();
    Superfunction acc(sig_, Scalar(1));
    Superfunction power(sig_, Scalar(1));
    std::size_t q = sig_->odd_count();
    for (std::size_t k = 1; k <= q; ++k) {
        power = power * n;
        if (power.is_zero()) break;
        if (k & 1) acc -= power;
        else acc += power;
    }
    return acc * c.inverse();
}

Superfunction Superfunction::partial_even(std::size_t i) const {
    Superfunction r(sig_);
    for (const auto& [mask, b] : comps_) r.add_component(mask, b.derivative(i));
    return r;
}

Superfunction Superfunction::partial_odd(std::size_t j) const {
    // Left derivative: bring theta_j to the front of the ascending word,
    // which costs one sign per smaller index present, then delete it.
    Superfunction r(sig_);
    std::uint32_t bit = 1u << j;
    for (const auto& [mask, b] : comps_) {
        if (!(mask & bit)) continue;
        int before = std::popcount(mask & (bit - 1));
        BaseCoefficient v = (before & 1) ? -b : b;
        r.add_component(mask ^ bit, v);
    }
    return r;
}

Superfunction Superfunction::partial(const std::string& coord) const {
    int i = sig_->even_index(coord);
    if (i >= 0) return partial_even(static_cast<std::size_t>(i));
    int j = sig_->odd_index(coord);
    if (j >= 0) return partial_odd(static_cast<std::size_t>(j));
    throw unknown_coordinate(coord);
}

Superfunction Superfunction::pow(unsigned n) const {
    Superfunction r(sig_, Scalar(1));
    for (unsigned k = 0; k < n; ++k) r = r * (*this);
    return r;
}

} // namespace supergv
