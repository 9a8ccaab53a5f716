#include "wobbly/product_ring.hpp"

#include <sstream>

namespace wobbly {

namespace {

// cohomological degree per factor state; index 1 = alpha, 2 = alpha' (both
// odd, degree 1), 3 = beta (degree 2)
constexpr int state_degree[4] = {0, 1, 1, 2};

// product of two single-factor states: returns coefficient (0 kills) and state
struct FactorProduct { int coeff; std::uint8_t state; };

FactorProduct factor_mul(std::uint8_t u, std::uint8_t v) {
    if (u == 0) return {1, v};
    if (v == 0) return {1, u};
    if (u == 1 && v == 2) return {1, 3};  // alpha*alpha' = beta
    if (u == 2 && v == 1) return {-1, 3}; // alpha'*alpha = -beta
    return {0, 0}; // squares of odd states, and anything of degree > 2
}

} // namespace

ProductRingElement::ProductRingElement(int n) : n_(n) {
    if (n < 1 || n > max_factors)
        throw domain_error("product ring supports 1.." + std::to_string(max_factors) +
                           " factors");
}

void ProductRingElement::accumulate(const Word& w, const Int& coeff) {
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(w, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

ProductRingElement ProductRingElement::one(int n) {
    ProductRingElement r(n);
    r.terms_.emplace(Word{}, Int(1));
    return r;
}

ProductRingElement ProductRingElement::alpha(int n, int k) {
    ProductRingElement r(n);
    Word w{};
    w[size_t(k)] = 1;
    r.terms_.emplace(w, Int(1));
    return r;
}

ProductRingElement ProductRingElement::alpha_prime(int n, int k) {
    ProductRingElement r(n);
    Word w{};
    w[size_t(k)] = 2;
    r.terms_.emplace(w, Int(1));
    return r;
}

ProductRingElement ProductRingElement::beta(int n, int k) {
    ProductRingElement r(n);
    Word w{};
    w[size_t(k)] = 3;
    r.terms_.emplace(w, Int(1));
    return r;
}

ProductRingElement ProductRingElement::operator-() const {
    ProductRingElement r(n_);
    for (const auto& [w, coeff] : terms_) r.terms_.emplace(w, -coeff);
    return r;
}

ProductRingElement operator+(const ProductRingElement& x, const ProductRingElement& y) {
    if (x.n_ != y.n_) throw domain_error("incompatible factor counts");
    ProductRingElement r = x;
    for (const auto& [w, coeff] : y.terms_) r.accumulate(w, coeff);
    return r;
}

ProductRingElement operator-(const ProductRingElement& x, const ProductRingElement& y) {
    return x + (-y);
}

ProductRingElement operator*(const ProductRingElement& x, const ProductRingElement& y) {
    if (x.n_ != y.n_) throw domain_error("incompatible factor counts");
    const int n = x.n_;
    ProductRingElement r(n);
    for (const auto& [u, cu] : x.terms_) {
        for (const auto& [v, cv] : y.terms_) {
            int coeff = 1;
            ProductRingElement::Word w{};
            // Koszul sign: v_i crosses u_{i+1}, ..., u_{n-1} on the way to slot i
            int parity = 0;
            int suffix_deg = 0;
            for (int i = n - 1; i >= 0; --i) {
                parity += state_degree[v[size_t(i)]] * suffix_deg;
                suffix_deg += state_degree[u[size_t(i)]];
            }
            if (parity % 2 != 0) coeff = -coeff;
            for (int i = 0; i < n && coeff != 0; ++i) {
                auto fp = factor_mul(u[size_t(i)], v[size_t(i)]);
                coeff *= fp.coeff;
                w[size_t(i)] = fp.state;
            }
            if (coeff != 0) r.accumulate(w, coeff * cu * cv);
        }
    }
    return r;
}

ProductRingElement operator*(const Int& k, const ProductRingElement& x) {
    ProductRingElement r(x.n_);
    if (k == 0) return r;
    for (const auto& [w, coeff] : x.terms_) r.accumulate(w, k * coeff);
    return r;
}

ProductRingElement ProductRingElement::pow(unsigned e) const {
    ProductRingElement r = one(n_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

ProductRingElement xi_image(int n) {
    ProductRingElement r(n);
    for (int k = 0; k < n; ++k) r = r + ProductRingElement::alpha(n, k);
    return r;
}

ProductRingElement xi_prime_image(int n) {
    ProductRingElement r(n);
    for (int k = 0; k < n; ++k) r = r + ProductRingElement::alpha_prime(n, k);
    return r;
}

ProductRingElement eta_image(int n) {
    ProductRingElement r(n);
    for (int k = 0; k < n; ++k) r = r + ProductRingElement::beta(n, k);
    return r;
}

ProductRingElement sigma_image(int n) {
    return xi_image(n) * xi_prime_image(n);
}

ProductRingElement embed(const RingElement& x) {
    const int n = x.ambient();
    ProductRingElement xi = xi_image(n);
    ProductRingElement xip = xi_prime_image(n);
    ProductRingElement eta = eta_image(n);
    ProductRingElement sigma = sigma_image(n);
    ProductRingElement r(n);
    for (const auto& [m, coeff] : x.terms()) {
        ProductRingElement img = ProductRingElement::one(n);
        if (m.a) img = img * xi;
        if (m.b) img = img * xip;
        if (m.c) img = img * sigma;
        for (int i = 0; i < m.q; ++i) img = img * eta;
        r = r + coeff * img;
    }
    return r;
}

std::string OracleReport::summary() const {
    std::ostringstream out;
    out << "product-ring oracle, n = " << n << ": ";
    if (ok()) {
        out << "ok (" << pairs_checked << " basis pairs)";
    } else if (!relations_ok) {
        out << "defining relations FAILED in the product ring";
    } else {
        out << mismatches.size() << " mismatch(es); first: " << mismatches.front();
    }
    return out.str();
}

OracleReport oracle_product_ring_check(int n) {
    if (n < 1 || n > 3) throw domain_error("oracle check supports n in 1..3");
    OracleReport report;
    report.n = n;

    ProductRingElement xi = xi_image(n);
    ProductRingElement xip = xi_prime_image(n);
    ProductRingElement eta = eta_image(n);
    ProductRingElement zero(n);
    report.relations_ok =
        xi * xi == zero && xip * xip == zero &&
        (xi * xip - eta) * eta.pow(unsigned(n - 1)) == zero;

    const auto basis = basis_monomials(n);
    for (const Monomial& m1 : basis) {
        for (const Monomial& m2 : basis) {
            RingElement e1(n, {{m1, Int(1)}});
            RingElement e2(n, {{m2, Int(1)}});
            ProductRingElement lhs = embed(e1 * e2);
            ProductRingElement rhs = embed(e1) * embed(e2);
            ++report.pairs_checked;
            if (lhs != rhs && report.mismatches.size() < 8) {
                report.mismatches.push_back("(" + e1.str() + ") * (" + e2.str() + ")");
            }
        }
    }
    return report;
}

} // namespace wobbly
