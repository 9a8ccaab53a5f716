#ifndef WOBBLY_STRATA_HPP
#define WOBBLY_STRATA_HPP

#include "wobbly/betti.hpp"
#include "wobbly/bundles.hpp"
#include "wobbly/cohom_ring.hpp"
#include "wobbly/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wobbly {

// A partition i_1 >= ... >= i_k of the total weight h; permuted tuples
// describe the same sublocus, so parts are kept sorted descending.
struct WeightTuple {
    std::vector<int> parts;
    explicit WeightTuple(std::vector<int> p);

    int total() const;          // h
    int count() const { return int(parts.size()); } // k
    friend bool operator==(const WeightTuple&, const WeightTuple&) = default;
};

struct Stratum {
    WeightTuple partition;
    int dim;       // = weight count
    bool standard; // shape (s, 1, ..., 1)
    std::optional<RingElement> fundamental_class; // standard shapes only
};

// groups of the diagonal morphism: group l consists of n_l points of weight i_l
struct DiagonalSpec {
    std::vector<int> group_sizes; // N = (n_1, ..., n_k)
    std::vector<int> weights;     // I = (i_1, ..., i_k)

    int nu() const;    // sum n_l
    int total() const; // h = sum n_l * i_l
};

std::vector<std::vector<int>> partitions_of(int h); // descending parts, lexicographic

std::vector<Stratum> enumerate_strata(int h);
Stratum wobbly_stratum(int h); // the codimension-1 stratum (2, 1, ..., 1)

// W(inner) is contained in W(outer) iff outer refines inner; decided by an
// exact search splitting each part of inner into parts of outer.
bool contains(const WeightTuple& inner, const WeightTuple& outer);

// divisor lies in W(lambda): its multiplicities arise by grouping lambda's
// parts onto the distinct points (exact assignment search)
bool membership(const std::vector<PicPoint>& divisor, const WeightTuple& lambda);

// s * [h * eta^{s-1} - (s-1) * eta^{s-2} * sigma] in H*(Sym^h X)
RingElement delta_class(int s, int h);

// Fundamental class of the image of the diagonal morphism: the coefficient
// of y_1^{n_1} ... y_k^{n_k} in P^{nu-1} eta^{h-nu-1} (P eta + Q (eta - sigma))
// with P = sum i_l y_l and Q = sum (i_l^2 - i_l) y_l, expanded exactly.
RingElement diagonal_class(const DiagonalSpec& spec);

Int covering_degree(int h); // (h-2)!, h >= 3

// Counts ordered (h-1)-tuples drawn from the samples that map onto one
// generic point of the codimension-1 stratum under
// (E_1, ..., E_{h-1}) -> [2 E_1 + E_2 + ... + E_{h-1}].
long long fiber_count_oracle(int h, const std::vector<PicPoint>& samples);
long long fiber_count_oracle_serial(int h, const std::vector<PicPoint>& samples);

struct FixedDetStratum {
    int dim = 0;
    std::optional<Int> point_count; // h^2, present only when s = h
    PoincarePolynomial poincare;
};
FixedDetStratum fixed_det_stratum(int h, int s);

// Symmetric-power factors (n_1, ..., n_k) of the product model
// Sym^{n_1} x ... x Sym^{n_k} = W; needs strictly decreasing weight values.
std::vector<int> stratum_product_model(const std::vector<int>& values,
                                       const std::vector<int>& multiplicities);

// distinct part values (descending) with multiplicities
std::pair<std::vector<int>, std::vector<int>> group_partition(const WeightTuple& t);

// Poincare polynomial of a stratum via the grouped product model
PoincarePolynomial stratum_poincare(const WeightTuple& t);

// Full pairwise containment tables over partitions_of(h): the refinement
// rule, and the independent oracle quantifying over every divisor on h
// labeled points.  The unsuffixed versions run the pair sweep with OpenMP;
// the _serial versions are the reference implementations.
std::vector<std::vector<char>> containment_table(int h);
std::vector<std::vector<char>> containment_table_serial(int h);
std::vector<std::vector<char>> containment_table_oracle(int h);
std::vector<std::vector<char>> containment_table_oracle_serial(int h);

} // namespace wobbly

#endif
