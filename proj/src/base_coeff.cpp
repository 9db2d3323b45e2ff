#include "supergv/base_coeff.hpp"

#include "supergv/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace supergv {

BaseCoefficient::BaseCoefficient(SignaturePtr sig, const Scalar& c) : sig_(std::move(sig)) {
    if (!c.is_zero()) terms_.emplace(BaseMonomial(sig_->even_count()), c);
}

BaseCoefficient BaseCoefficient::line_power(const SignaturePtr& sig, std::size_t i, unsigned n) {
    if (sig->is_circle(i)) throw bad_structure("polynomial factor on circle coordinate " + sig->even(i).name);
    BaseCoefficient r(sig);
    BaseMonomial m(sig->even_count());
    m.factors[i] = static_cast<int>(n);
    r.terms_.emplace(m, Scalar(1));
    return r;
}

BaseCoefficient BaseCoefficient::trig(const SignaturePtr& sig, std::size_t i, bool is_cos, int k) {
    if (!sig->is_circle(i)) throw bad_structure("trig factor on line coordinate " + sig->even(i).name);
    BaseCoefficient r(sig);
    if (k < 0) {
        if (is_cos) k = -k;          // cos(-k x) = cos(k x)
        else return -trig(sig, i, false, -k);  // sin(-k x) = -sin(k x)
    }
    if (k == 0) {
        if (!is_cos) return r;       // sin(0) = 0
        return BaseCoefficient(sig, Scalar(1));
    }
    BaseMonomial m(sig->even_count());
    m.factors[i] = is_cos ? k : -k;
    r.terms_.emplace(m, Scalar(1));
    return r;
}

bool BaseCoefficient::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Scalar BaseCoefficient::constant_value() const {
    if (!is_constant()) throw std::logic_error("base coefficient is not constant");
    return constant_part();
}

Scalar BaseCoefficient::constant_part() const {
    if (sig_ == nullptr) return Scalar(0);
    auto it = terms_.find(BaseMonomial(sig_->even_count()));
    return it == terms_.end() ? Scalar(0) : it->second;
}

void BaseCoefficient::add_term(const BaseMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BaseCoefficient BaseCoefficient::operator-() const {
    BaseCoefficient r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BaseCoefficient& BaseCoefficient::operator+=(const BaseCoefficient& o) {
    if (sig_ == nullptr) sig_ = o.sig_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BaseCoefficient& BaseCoefficient::operator-=(const BaseCoefficient& o) {
    if (sig_ == nullptr) sig_ = o.sig_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BaseCoefficient BaseCoefficient::operator+(const BaseCoefficient& o) const {
    BaseCoefficient r = *this;
    r += o;
    return r;
}

BaseCoefficient BaseCoefficient::operator-(const BaseCoefficient& o) const {
    BaseCoefficient r = *this;
    r -= o;
    return r;
}

BaseCoefficient BaseCoefficient::operator*(const Scalar& c) const {
    BaseCoefficient r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

namespace {

// Product of two atoms on the same circle coordinate, as a list of
// (atom, scalar) contributions. Atoms: 0 -> 1, +k -> cos(kx), -k -> sin(kx).
void atom_product(int u, int v, std::vector<std::pair<int, Rational>>& out) {
    out.clear();
    if (u == 0) {
        out.emplace_back(v, Rational(1));
        return;
    }
    if (v == 0) {
        out.emplace_back(u, Rational(1));
        return;
    }
    Rational half(1, 2);
    auto push_cos = [&](int k, Rational c) {
        if (k < 0) k = -k;
        out.emplace_back(k, c);  // cos(0) is atom 0
    };
    auto push_sin = [&](int k, Rational c) {
        if (k == 0) return;      // sin(0) = 0
        if (k < 0) { k = -k; c = -c; }
        out.emplace_back(-k, c);
    };
    if (u > 0 && v > 0) {        // cos a cos b
        push_cos(u + v, half);
        push_cos(u - v, half);
    } else if (u < 0 && v < 0) { // sin a sin b
        int a = -u, b = -v;
        push_cos(a - b, half);
        push_cos(a + b, -half);
    } else {                     // sin a cos b (either order)
        int a = u < 0 ? -u : -v;
        int b = u < 0 ? v : u;
        push_sin(a + b, half);
        push_sin(a - b, half);
    }
}

} // namespace

BaseCoefficient BaseCoefficient::operator*(const BaseCoefficient& o) const {
    BaseCoefficient r(sig_ ? sig_ : o.sig_);
    if (!sig_ || !o.sig_) return r;  // multiplying by an uninitialized zero
    std::vector<std::pair<int, Rational>> atoms;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            // Branch over circle coordinates whose product-to-sum splits.
            std::vector<std::pair<BaseMonomial, Scalar>> partial{{BaseMonomial(sig_->even_count()), ca * cb}};
            for (std::size_t i = 0; i < sig_->even_count(); ++i) {
                int u = ma.factors[i], v = mb.factors[i];
                if (!sig_->is_circle(i)) {
                    for (auto& [m, c] : partial) m.factors[i] = u + v;
                    continue;
                }
                atom_product(u, v, atoms);
                std::vector<std::pair<BaseMonomial, Scalar>> next;
                next.reserve(partial.size() * atoms.size());
                for (const auto& [m, c] : partial) {
                    for (const auto& [atom, f] : atoms) {
                        BaseMonomial m2 = m;
                        m2.factors[i] = atom;
                        next.emplace_back(std::move(m2), c * Scalar(f));
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [m, c] : partial) r.add_term(m, c);
        }
    }
    return r;
}

BaseCoefficient BaseCoefficient::derivative(std::size_t i) const {
    BaseCoefficient r(sig_);
    if (!sig_) return r;
    for (const auto& [m, c] : terms_) {
        int f = m.factors[i];
        if (f == 0) continue;
        BaseMonomial m2 = m;
        if (!sig_->is_circle(i)) {
            m2.factors[i] = f - 1;
            r.add_term(m2, c * Scalar(f));
        } else if (f > 0) {      // cos(kx) -> -k sin(kx)
            m2.factors[i] = -f;
            r.add_term(m2, c * Scalar(-f));
        } else {                 // sin(kx) -> k cos(kx)
            m2.factors[i] = -f;
            r.add_term(m2, c * Scalar(-f));
        }
    }
    return r;
}

unsigned BaseCoefficient::max_line_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.factors.size(); ++i)
            if (!sig_->is_circle(i)) d = std::max(d, static_cast<unsigned>(m.factors[i]));
    return d;
}

int BaseCoefficient::max_circle_mode() const {
    int k = 0;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.factors.size(); ++i)
            if (sig_->is_circle(i)) k = std::max(k, std::abs(m.factors[i]));
    return k;
}

double BaseCoefficient::eval(const std::vector<double>& param_values,
                             const std::vector<double>& coord_values) const {
    auto scalar_val = [&](const Scalar& s) {
        auto poly_val = [&](const ParamPoly& p) {
            double acc = 0;
            for (const auto& [m, c] : p.terms()) {
                double t = c.get_d();
                for (std::size_t i = 0; i < m.size(); ++i) t *= std::pow(param_values[i], m[i]);
                acc += t;
            }
            return acc;
        };
        return poly_val(s.num()) / poly_val(s.den());
    };
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = scalar_val(c);
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            int f = m.factors[i];
            if (f == 0) continue;
            double x = coord_values[i];
            if (!sig_->is_circle(i)) t *= std::pow(x, f);
            else if (f > 0) t *= std::cos(f * x);
            else t *= std::sin(-f * x);
        }
        acc += t;
    }
    return acc;
}

} // namespace supergv
