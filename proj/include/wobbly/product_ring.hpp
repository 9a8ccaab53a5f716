#ifndef WOBBLY_PRODUCT_RING_HPP
#define WOBBLY_PRODUCT_RING_HPP

#include "wobbly/cohom_ring.hpp"
#include "wobbly/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wobbly {

// Brute-force model of H*(X^n, Z) for a genus-1 curve X, used as an oracle
// against the normal-form ring.  Each tensor factor carries one of
// 1, alpha, alpha', beta (= alpha*alpha'); odd generators in distinct
// factors anticommute via the Koszul sign.
class ProductRingElement {
public:
    static constexpr int max_factors = 8;
    // per-factor state: 0 = 1, 1 = alpha, 2 = alpha', 3 = beta
    using Word = std::array<std::uint8_t, max_factors>;

    explicit ProductRingElement(int n);

    static ProductRingElement one(int n);
    static ProductRingElement alpha(int n, int k);       // alpha in factor k (0-based)
    static ProductRingElement alpha_prime(int n, int k);
    static ProductRingElement beta(int n, int k);

    int factors() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Int>& terms() const { return terms_; }

    ProductRingElement operator-() const;
    friend ProductRingElement operator+(const ProductRingElement&, const ProductRingElement&);
    friend ProductRingElement operator-(const ProductRingElement&, const ProductRingElement&);
    friend ProductRingElement operator*(const ProductRingElement&, const ProductRingElement&);
    friend ProductRingElement operator*(const Int& k, const ProductRingElement&);
    ProductRingElement pow(unsigned e) const;

    friend bool operator==(const ProductRingElement&, const ProductRingElement&) = default;

private:
    int n_;
    std::map<Word, Int> terms_;

    void accumulate(const Word& w, const Int& coeff);
};

// symmetric sums realizing the Sym^n generators inside H*(X^n)
ProductRingElement xi_image(int n);
ProductRingElement xi_prime_image(int n);
ProductRingElement eta_image(int n);
ProductRingElement sigma_image(int n);

// image of a normal-form element under the symmetrization embedding
ProductRingElement embed(const RingElement& x);

struct OracleReport {
    int n = 0;
    bool relations_ok = false;   // xi^2 = xi'^2 = 0 and (xi*xi' - eta)*eta^{n-1} = 0
    long pairs_checked = 0;
    std::vector<std::string> mismatches; // empty on success
    bool ok() const { return relations_ok && mismatches.empty(); }
    std::string summary() const;
};

// Multiplies every pair of normal-form basis monomials both ways (normal
// form, then embedded; embedded factors multiplied directly) and compares.
// Mismatches are reported, not thrown.
OracleReport oracle_product_ring_check(int n);

} // namespace wobbly

#endif
