#include "wobbly/betti.hpp"

#include <algorithm>
#include <sstream>

namespace wobbly {

PoincarePolynomial::PoincarePolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    for (const Int& c : coeffs_)
        if (c < 0) throw domain_error("Betti numbers must be non-negative");
}

Int PoincarePolynomial::coefficient(size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : Int(0);
}

bool PoincarePolynomial::is_palindromic() const {
    size_t n = coeffs_.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

Int PoincarePolynomial::evaluate_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

Int PoincarePolynomial::euler_characteristic() const {
    Int s = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        s += (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    return s;
}

std::string PoincarePolynomial::coefficient_list() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ",";
        out << coeffs_[i].str();
    }
    return out.str();
}

std::string PoincarePolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << coeffs_[i].str();
            continue;
        }
        if (coeffs_[i] != 1) out << coeffs_[i].str();
        out << "z";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

PoincarePolynomial operator*(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    if (p.coeffs_.empty() || q.coeffs_.empty()) return PoincarePolynomial{};
    std::vector<Int> prod(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            prod[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return PoincarePolynomial(std::move(prod));
}

PoincarePolynomial poincare_sym(int genus, int n) {
    if (genus < 0 || n < 0) throw domain_error("poincare_sym needs g >= 0, n >= 0");
    // coefficient of t^n in (1 + z t)^{2g} / ((1 - t)(1 - z^2 t)):
    // sum over j of C(2g, j) z^j * sum_{m <= n-j} z^{2m}
    std::vector<Int> coeffs(size_t(2 * n) + 1, Int(0));
    for (int j = 0; j <= std::min(2 * genus, n); ++j) {
        Int binom = binomial(2 * genus, j);
        for (int m = 0; m <= n - j; ++m) coeffs[size_t(j + 2 * m)] += binom;
    }
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial kunneth(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    return p * q;
}

PoincarePolynomial poincare_std_sublocus(int h, int s) {
    if (h < 2 || s < 2 || s > h)
        throw domain_error("standard sublocus needs 2 <= s <= h");
    return kunneth(poincare_sym(1, 1), poincare_sym(1, h - s));
}

PoincarePolynomial poincare_projective_bundle_over_elliptic(int fiber_rank) {
    if (fiber_rank < 1) throw domain_error("fiber rank must be >= 1");
    // h^i = sum_{t=0}^{rank-1} h^{i-2t}(X), with h^*(X) = 1, 2, 1
    std::vector<Int> coeffs(size_t(2 * fiber_rank) + 1, Int(0));
    for (int t = 0; t < fiber_rank; ++t) {
        coeffs[size_t(2 * t)] += 1;
        coeffs[size_t(2 * t + 1)] += 2;
        coeffs[size_t(2 * t + 2)] += 1;
    }
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial poincare_fixed_det(int h, int s) {
    if (h < 2 || s < 2 || s > h)
        throw domain_error("fixed-determinant sublocus needs 2 <= s <= h");
    if (s == h) return PoincarePolynomial({Int(h) * h}); // h^2 isolated points
    return poincare_projective_bundle_over_elliptic(h - s);
}

Int cl_wk(int g, int k, int lambda) {
    if (g < 2) throw domain_error("cl_wk is defined for genus >= 2");
    if (lambda != 0 && lambda != 1) throw domain_error("lambda must be 0 or 1");
    int lo = (g - lambda + 1) / 2; // ceil((g - lambda)/2)
    int hi = g - lambda;
    if (k < lo || k > hi)
        throw domain_error("k out of range: need ceil((g-lambda)/2) <= k <= g-lambda");
    Int r = 1;
    r <<= 2 * k;
    return r * binomial(g, 2 * g - 2 * k - lambda);
}

} // namespace wobbly
