#ifndef WOBBLY_BUNDLES_HPP
#define WOBBLY_BUNDLES_HPP

#include "wobbly/numeric.hpp"

#include <string>
#include <variant>
#include <vector>

namespace wobbly {

// A point of Pic^0(X) modeled as a pair of exact rationals mod 1.
// Torsion points are dense on an elliptic curve, and every criterion the
// classifier needs (equality, translation, torsion order, roots) is
// decidable here without choosing a specific curve.
struct PicOffset {
    Frac x{0};
    Frac y{0};

    PicOffset() = default;
    PicOffset(Frac x_in, Frac y_in) : x(mod_one(x_in)), y(mod_one(y_in)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    Int torsion_order() const; // lcm of the two denominators

    friend PicOffset operator+(const PicOffset& p, const PicOffset& q) {
        return {p.x + q.x, p.y + q.y};
    }
    friend PicOffset operator-(const PicOffset& p, const PicOffset& q) {
        return {p.x - q.x, p.y - q.y};
    }
    friend PicOffset operator*(long long k, const PicOffset& p) {
        return {Frac(k) * p.x, Frac(k) * p.y};
    }
    PicOffset operator-() const { return {-x, -y}; }
    friend bool operator==(const PicOffset&, const PicOffset&) = default;
    friend bool operator<(const PicOffset& p, const PicOffset& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    }
};

// A line bundle: integer degree plus a Pic^0 coordinate relative to the
// fixed base point A (which itself sits at offset (0,0) in degree 1).
struct PicPoint {
    long long degree = 0;
    PicOffset offset;

    friend bool operator==(const PicPoint&, const PicPoint&) = default;
    friend bool operator<(const PicPoint& p, const PicPoint& q) {
        if (p.degree != q.degree) return p.degree < q.degree;
        return p.offset < q.offset;
    }
};

// ---------------------------------------------------------------------------
// genus 0

// Birkhoff-Grothendieck splitting O(d_1) + ... + O(d_r), stored sorted
// descending; the order never matters to any operation.
struct GZeroBundle {
    std::vector<long long> degrees;
    explicit GZeroBundle(std::vector<long long> ds);

    long long rank() const { return (long long)degrees.size(); }
    long long total_degree() const;
    friend bool operator==(const GZeroBundle&, const GZeroBundle&) = default;
};

Frac slope(const GZeroBundle& e);
bool is_semistable(const GZeroBundle& e);

// ---------------------------------------------------------------------------
// genus 1

// E_A(rank, degree) tensored by the degree-0 line bundle at `twist`
struct Indecomposable {
    long long rank = 1;
    long long degree = 0;
    PicOffset twist;

    Indecomposable() = default;
    Indecomposable(long long r, long long d, PicOffset t = {});
    bool is_stable() const; // gcd(rank, degree) = 1
    friend bool operator==(const Indecomposable&, const Indecomposable&) = default;
    friend bool operator<(const Indecomposable& a, const Indecomposable& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.twist < b.twist;
    }
};

// direct sum of stable summands E_A(r', d') (x) M_i; summands kept sorted
struct Polystable {
    std::vector<Indecomposable> summands;
    explicit Polystable(std::vector<Indecomposable> s);
    friend bool operator==(const Polystable&, const Polystable&) = default;
};

class EllipticBundle;

// general (possibly non-semistable) direct sum
struct DirectSum {
    std::vector<EllipticBundle> parts;
    friend bool operator==(const DirectSum&, const DirectSum&);
};

class EllipticBundle {
public:
    using Value = std::variant<Indecomposable, Polystable, DirectSum>;

    EllipticBundle(Indecomposable v) : value_(std::move(v)) {}
    EllipticBundle(Polystable v) : value_(std::move(v)) {}
    EllipticBundle(DirectSum v);

    const Value& value() const { return value_; }
    long long rank() const;
    long long total_degree() const;

    friend bool operator==(const EllipticBundle&, const EllipticBundle&) = default;

private:
    Value value_;
};

// the indecomposable constituents, direct sums expanded recursively
std::vector<Indecomposable> flatten(const EllipticBundle& e);

Frac slope(const EllipticBundle& e);
bool is_semistable(const EllipticBundle& e);

struct Normalized {
    EllipticBundle bundle;
    long long shift = 0; // total degree moved by rank * shift into [0, rank)
};
Normalized normalize_degree(const EllipticBundle& e);

// d when d > 0; at d = 0, one section iff the twist is trivial.  d < 0 rejected.
long long h0_indecomposable(const Indecomposable& e);

Indecomposable dual(const Indecomposable& e);
// E_A(r, d) (x) F_h = E_A(rh, dh); requires gcd(r, d) = 1
Indecomposable tensor_fr(const Indecomposable& e, long long h);
// E_A(r, d) (x) E_A(r', d') = E_A(rr', rd' + r'd); pairwise coprimality required
Indecomposable tensor_coprime(const Indecomposable& e, const Indecomposable& f);

// determinant: total degree, rank-weighted sum of twist offsets
PicPoint det(const EllipticBundle& e);

// The divisor in Sym^h(X) representing the S-equivalence class of a
// semistable bundle, h = gcd(rank, degree); returned sorted.
std::vector<PicPoint> moduli_point(const EllipticBundle& e);

// ---------------------------------------------------------------------------
// verdicts

enum class Outcome { VeryStable, Wobbly, Undetermined };

std::string outcome_name(Outcome o); // "very_stable" / "wobbly" / "undetermined"

struct Verdict {
    Outcome outcome = Outcome::Undetermined;
    std::string reason; // the statement justifying the verdict
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict classify_p1(const GZeroBundle& e, long long t);
Verdict classify_elliptic(const EllipticBundle& e, const PicPoint& twist);

} // namespace wobbly

#endif
