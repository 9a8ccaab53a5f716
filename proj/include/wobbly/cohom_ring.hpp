#ifndef WOBBLY_COHOM_RING_HPP
#define WOBBLY_COHOM_RING_HPP

#include "wobbly/numeric.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace wobbly {

// Exponent record of a normal-form basis monomial xi^a xi'^b sigma^c eta^q
// of H*(Sym^n X, Z) for a genus-1 curve X.  The stored form never contains
// xi*xi' (rewritten to sigma), never pairs sigma with an odd generator, and
// keeps q <= n-1 (eta^n is rewritten to sigma*eta^{n-1}).
struct Monomial {
    bool a = false; // xi
    bool b = false; // xi'
    bool c = false; // sigma
    int q = 0;      // eta^q

    int degree() const { return int(a) + int(b) + 2 * int(c) + 2 * q; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& lhs, const Monomial& rhs) {
        return std::tuple(lhs.degree(), lhs.a, lhs.b, lhs.c, lhs.q) <
               std::tuple(rhs.degree(), rhs.a, rhs.b, rhs.c, rhs.q);
    }

    std::string str() const;
};

enum class Generator { one, xi, xi_prime, eta, sigma };

// throws domain_error unless m is a valid normal-form monomial for Sym^n
void validate_monomial(const Monomial& m, int n);

// An element of H*(Sym^n X, Z) in normal form: a finite map from monomials
// to nonzero integer coefficients.  Immutable value semantics; every
// operation returns a fresh element.
class RingElement {
public:
    explicit RingElement(int n);
    RingElement(int n, std::map<Monomial, Int> terms); // validates and prunes zeros

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const; // validates m, 0 if absent

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const Int& k, const RingElement& x);
    RingElement pow(unsigned e) const;

    // homogeneous component of the given cohomological degree
    RingElement component(int degree) const;

    // canonical text rendering: terms sorted by (degree, a, b, c, q)
    std::string str() const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    int n_;
    std::map<Monomial, Int> terms_;

    void accumulate(const Monomial& m, const Int& coeff);
};

RingElement make_generator(int n, Generator which);
RingElement chern_total(int n);

// all 4n normal-form basis monomials of Sym^n, in canonical order
std::vector<Monomial> basis_monomials(int n);

} // namespace wobbly

#endif
