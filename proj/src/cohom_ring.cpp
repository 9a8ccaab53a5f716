#include "wobbly/cohom_ring.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace wobbly {

namespace {

// Reduce a raw exponent record to normal form.  c_count may be 0, 1 or 2
// before reduction; returns nullopt when the monomial is zero in the ring.
std::optional<Monomial> reduce(bool a, bool b, int c_count, int q, int n) {
    if (a && b) { // xi*xi' -> sigma (callers account for the sign)
        a = b = false;
        ++c_count;
    }
    if (c_count >= 2) return std::nullopt;            // sigma^2 = 0
    bool c = c_count == 1;
    if (c && (a || b)) return std::nullopt;           // xi*sigma = xi'*sigma = 0
    if (q <= n - 1) return Monomial{a, b, c, q};
    if (q == n && !a && !b && !c)                     // eta^n = sigma*eta^{n-1}
        return Monomial{false, false, true, n - 1};
    return std::nullopt; // eta^n against sigma or an odd generator, or q > n
}

} // namespace

std::string Monomial::str() const {
    std::string s;
    auto push = [&s](const std::string& part) {
        if (!s.empty()) s += "*";
        s += part;
    };
    if (a) push("xi");
    if (b) push("xi'");
    if (c) push("sigma");
    if (q == 1) push("eta");
    if (q >= 2) push("eta^" + std::to_string(q));
    return s;
}

void validate_monomial(const Monomial& m, int n) {
    if (n < 1) throw domain_error("ambient symmetric power must be >= 1");
    if (m.a && m.b)
        throw domain_error("invalid monomial: xi*xi' must be stored as sigma");
    if (m.c && (m.a || m.b))
        throw domain_error("invalid monomial: sigma cannot pair with xi or xi'");
    if (m.q < 0 || m.q > n - 1)
        throw domain_error("invalid monomial: eta exponent out of range for Sym^" +
                           std::to_string(n));
}

RingElement::RingElement(int n) : n_(n) {
    if (n < 1) throw domain_error("ambient symmetric power must be >= 1");
}

RingElement::RingElement(int n, std::map<Monomial, Int> terms) : n_(n) {
    if (n < 1) throw domain_error("ambient symmetric power must be >= 1");
    for (auto& [m, coeff] : terms) {
        validate_monomial(m, n);
        if (coeff != 0) terms_.emplace(m, coeff);
    }
}

Int RingElement::coefficient(const Monomial& m) const {
    validate_monomial(m, n_);
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void RingElement::accumulate(const Monomial& m, const Int& coeff) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

RingElement RingElement::operator-() const {
    RingElement r(n_);
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, -coeff);
    return r;
}

RingElement operator+(const RingElement& x, const RingElement& y) {
    if (x.n_ != y.n_)
        throw domain_error("incompatible ambient symmetric powers: Sym^" +
                           std::to_string(x.n_) + " vs Sym^" + std::to_string(y.n_));
    RingElement r = x;
    for (const auto& [m, coeff] : y.terms_) r.accumulate(m, coeff);
    return r;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
    return x + (-y);
}

RingElement operator*(const RingElement& x, const RingElement& y) {
    if (x.n_ != y.n_)
        throw domain_error("incompatible ambient symmetric powers: Sym^" +
                           std::to_string(x.n_) + " vs Sym^" + std::to_string(y.n_));
    RingElement r(x.n_);
    for (const auto& [m1, c1] : x.terms_) {
        for (const auto& [m2, c2] : y.terms_) {
            if ((m1.a && m2.a) || (m1.b && m2.b)) continue; // xi^2 = xi'^2 = 0
            // reorder xi from m2 past xi' of m1
            int sign = (m1.b && m2.a) ? -1 : 1;
            auto reduced = reduce(m1.a || m2.a, m1.b || m2.b,
                                  int(m1.c) + int(m2.c), m1.q + m2.q, x.n_);
            if (!reduced) continue;
            r.accumulate(*reduced, sign * c1 * c2);
        }
    }
    return r;
}

RingElement operator*(const Int& k, const RingElement& x) {
    RingElement r(x.ambient());
    if (k == 0) return r;
    for (const auto& [m, coeff] : x.terms()) r.accumulate(m, k * coeff);
    return r;
}

RingElement RingElement::pow(unsigned e) const {
    RingElement r = make_generator(n_, Generator::one);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

RingElement RingElement::component(int degree) const {
    RingElement r(n_);
    for (const auto& [m, coeff] : terms_)
        if (m.degree() == degree) r.terms_.emplace(m, coeff);
    return r;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        Int mag = coeff < 0 ? Int(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::string ms = m.str();
        if (ms.empty()) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << ms;
        }
    }
    return out.str();
}

RingElement make_generator(int n, Generator which) {
    RingElement r(n);
    std::optional<Monomial> m;
    switch (which) {
    case Generator::one:      m = reduce(false, false, 0, 0, n); break;
    case Generator::xi:       m = reduce(true, false, 0, 0, n); break;
    case Generator::xi_prime: m = reduce(false, true, 0, 0, n); break;
    case Generator::eta:      m = reduce(false, false, 0, 1, n); break; // at n = 1: eta -> sigma
    case Generator::sigma:    m = reduce(false, false, 1, 0, n); break;
    }
    if (m) r = RingElement(n, {{*m, Int(1)}});
    return r;
}

RingElement chern_total(int n) {
    RingElement one = make_generator(n, Generator::one);
    RingElement eta = make_generator(n, Generator::eta);
    RingElement sigma = make_generator(n, Generator::sigma);
    return (one + eta).pow(unsigned(n - 1)) * (one + eta - sigma);
}

std::vector<Monomial> basis_monomials(int n) {
    if (n < 1) throw domain_error("ambient symmetric power must be >= 1");
    std::vector<Monomial> basis;
    basis.reserve(4 * size_t(n));
    for (int q = 0; q <= n - 1; ++q) {
        basis.push_back(Monomial{false, false, false, q});
        basis.push_back(Monomial{true, false, false, q});
        basis.push_back(Monomial{false, true, false, q});
        basis.push_back(Monomial{false, false, true, q});
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace wobbly
