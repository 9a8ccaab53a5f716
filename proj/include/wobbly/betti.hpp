#ifndef WOBBLY_BETTI_HPP
#define WOBBLY_BETTI_HPP

#include "wobbly/numeric.hpp"

#include <string>
#include <vector>

namespace wobbly {

// Betti numbers as a polynomial in z; index = cohomological degree.
// No trailing zeros are stored.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::vector<Int> coefficients);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int coefficient(size_t degree) const;
    int top_degree() const { return int(coeffs_.size()) - 1; } // -1 for the zero polynomial
    bool is_palindromic() const;

    Int evaluate_at_one() const;
    Int euler_characteristic() const; // alternating sum

    std::string coefficient_list() const; // "1,2,2,2,1"
    std::string pretty() const;           // "1 + 2z + 2z^2 + 2z^3 + z^4"

    friend PoincarePolynomial operator*(const PoincarePolynomial&, const PoincarePolynomial&);
    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    std::vector<Int> coeffs_;
};

// Betti numbers of Sym^n of a genus-g curve: coefficient of t^n in
// (1 + z t)^{2g} / ((1 - t)(1 - z^2 t)).  Sym^0 is a point.
PoincarePolynomial poincare_sym(int genus, int n);

// coefficientwise polynomial product
PoincarePolynomial kunneth(const PoincarePolynomial& p, const PoincarePolynomial& q);

// Poincare polynomial of the sublocus X x Sym^{h-s}(X), 2 <= s <= h
PoincarePolynomial poincare_std_sublocus(int h, int s);

// Fixed-determinant sublocus: h^2 points when s = h, otherwise the Betti
// numbers of a P^{h-s-1}-bundle over the elliptic curve.
PoincarePolynomial poincare_fixed_det(int h, int s);

// Betti numbers of a P^{fiber_rank - 1}-bundle over a genus-1 curve,
// via h^i = sum_t h^{i-2t}(X)
PoincarePolynomial poincare_projective_bundle_over_elliptic(int fiber_rank);

// 2^{2k} * C(g, 2g - 2k - lambda); requires ceil((g-lambda)/2) <= k <= g - lambda
Int cl_wk(int g, int k, int lambda);

} // namespace wobbly

#endif
