#include "supergv/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supergv {

namespace {

void trim(ParamPoly::Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

unsigned mono_degree(const ParamPoly::Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

} // namespace

bool ParamPoly::GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // Same total degree: lexicographic on exponents, padding with zeros.
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(std::size_t index, unsigned power) {
    ParamPoly p;
    if (power == 0) return ParamPoly(Rational(1));
    Monomial m(index + 1, 0);
    m[index] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const ParamPoly::Monomial, Rational>& ParamPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

unsigned ParamPoly::degree_in(std::size_t index) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        if (index < m.size()) d = std::max(d, m[index]);
    return d;
}

unsigned ParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

void ParamPoly::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    Monomial m = mono;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ParamPoly ParamPoly::div_exact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
    ParamPoly rem = *this;
    ParamPoly quot;
    const auto& [dm, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        // Leading monomial of the remainder must be divisible by dm.
        Monomial q(std::max(rm.size(), dm.size()), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            unsigned er = i < rm.size() ? rm[i] : 0;
            unsigned ed = i < dm.size() ? dm[i] : 0;
            if (er < ed) throw std::logic_error("inexact polynomial division");
            q[i] = er - ed;
        }
        ParamPoly t;
        trim(q);
        t.terms_.emplace(q, rc / dc);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

namespace {

// Univariate view of p in parameter `var`: coefficients are ParamPolys in
// the remaining parameters.
std::vector<ParamPoly> coeffs_in(const ParamPoly& p, std::size_t var) {
    std::vector<ParamPoly> out(p.degree_in(var) + 1);
    for (const auto& [m, c] : p.terms()) {
        unsigned e = var < m.size() ? m[var] : 0;
        ParamPoly::Monomial rest = m;
        if (var < rest.size()) rest[var] = 0;
        out[e].add_term(rest, c);
    }
    return out;
}

ParamPoly from_coeffs(const std::vector<ParamPoly>& cs, std::size_t var) {
    ParamPoly out;
    for (std::size_t e = 0; e < cs.size(); ++e) {
        ParamPoly xe = ParamPoly::variable(var, static_cast<unsigned>(e));
        out += cs[e] * xe;
    }
    return out;
}

int first_variable(const ParamPoly& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 0 && (best < 0 || static_cast<int>(i) < best)) best = static_cast<int>(i);
        }
    }
    return best;
}

ParamPoly normalize_monic(const ParamPoly& p) {
    if (p.is_zero()) return p;
    ParamPoly lcinv(Rational(1) / p.leading_term().second);
    return p * lcinv;
}

} // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    int va = first_variable(a), vb = first_variable(b);
    if (va < 0 && vb < 0) return ParamPoly(Rational(1));
    std::size_t var = static_cast<std::size_t>(va < 0 ? vb : (vb < 0 ? va : std::min(va, vb)));

    auto content = [](const std::vector<ParamPoly>& cs) {
        ParamPoly g;
        for (const auto& c : cs) g = poly_gcd(g, c);
        return g;
    };

    std::vector<ParamPoly> ca = coeffs_in(a, var), cb = coeffs_in(b, var);
    ParamPoly cont_a = content(ca), cont_b = content(cb);
    ParamPoly prim_a = a.div_exact(cont_a), prim_b = b.div_exact(cont_b);
    ParamPoly cont_g = poly_gcd(cont_a, cont_b);

    // Primitive Euclidean loop with pseudo-division in `var`.
    ParamPoly u = prim_a, v = prim_b;
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);
    while (!v.is_zero()) {
        unsigned du = u.degree_in(var), dv = v.degree_in(var);
        if (du < dv) std::swap(u, v), std::swap(du, dv);
        std::vector<ParamPoly> cu = coeffs_in(u, var), cv = coeffs_in(v, var);
        const ParamPoly& lv = cv.back();
        // Pseudo-remainder: lv^(du-dv+1) * u mod v.
        ParamPoly r = u;
        for (unsigned k = 0; k <= du - dv; ++k) {
            std::vector<ParamPoly> cr = coeffs_in(r, var);
            if (cr.size() < dv + 1) break;
            unsigned dr = static_cast<unsigned>(cr.size()) - 1;
            if (cr[dr].is_zero()) {
                cr.pop_back();
                r = from_coeffs(cr, var);
                continue;
            }
            if (dr < dv) break;
            ParamPoly shift = ParamPoly::variable(var, dr - dv);
            r = r * lv - v * shift * cr[dr];
        }
        // Keep r primitive to bound growth.
        if (!r.is_zero()) {
            std::vector<ParamPoly> crr = coeffs_in(r, var);
            ParamPoly cont_r = content(crr);
            r = r.div_exact(cont_r);
        }
        u = v;
        v = r;
    }
    std::vector<ParamPoly> cuf = coeffs_in(u, var);
    ParamPoly prim_g = u.div_exact(content(cuf));
    return normalize_monic(cont_g * prim_g);
}

std::string ParamPoly::str(const std::vector<std::string>& param_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-order terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = !m.empty();
        if (ac != 1 || !has_vars) os << ac.get_str();
        bool printed = (ac != 1 || !has_vars);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << param_names[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace supergv
