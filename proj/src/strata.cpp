#include "wobbly/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wobbly {

WeightTuple::WeightTuple(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw domain_error("a weight tuple needs at least one part");
    for (int x : parts)
        if (x < 1) throw domain_error("weights must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int WeightTuple::total() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

int DiagonalSpec::nu() const {
    int s = 0;
    for (int n : group_sizes) s += n;
    return s;
}

int DiagonalSpec::total() const {
    int s = 0;
    for (size_t l = 0; l < group_sizes.size(); ++l) s += group_sizes[l] * weights[l];
    return s;
}

std::vector<std::vector<int>> partitions_of(int h) {
    if (h < 1) throw domain_error("partitions need h >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(h, h);
    return out;
}

std::vector<Stratum> enumerate_strata(int h) {
    std::vector<Stratum> strata;
    for (auto& parts : partitions_of(h)) {
        WeightTuple t(parts);
        int big_parts = 0;
        for (int x : t.parts) big_parts += x > 1;
        bool standard = big_parts <= 1;
        std::optional<RingElement> cls;
        if (standard) {
            int s = t.parts.front();
            cls = s >= 2 ? delta_class(s, h) : make_generator(h, Generator::one);
        }
        strata.push_back(Stratum{t, t.count(), standard, std::move(cls)});
    }
    return strata;
}

Stratum wobbly_stratum(int h) {
    if (h < 2) throw domain_error("the wobbly stratum needs h >= 2");
    std::vector<int> parts{2};
    parts.insert(parts.end(), size_t(h - 2), 1);
    WeightTuple t(std::move(parts));
    return Stratum{t, h - 1, true, delta_class(2, h)};
}

namespace {

// split inner.parts[li] (with `remaining` still owed) into unused outer parts
bool split_search(const std::vector<int>& inner, size_t li, int remaining, size_t from,
                  const std::vector<int>& outer, std::vector<char>& used) {
    if (remaining == 0) {
        if (li + 1 == inner.size()) return true;
        return split_search(inner, li + 1, inner[li + 1], 0, outer, used);
    }
    for (size_t i = from; i < outer.size(); ++i) {
        if (used[i] || outer[i] > remaining) continue;
        if (i > from && outer[i] == outer[i - 1] && !used[i - 1]) continue;
        used[i] = 1;
        if (split_search(inner, li, remaining - outer[i], i + 1, outer, used)) return true;
        used[i] = 0;
    }
    return false;
}

// assign lambda.parts[pi] to points with remaining capacities
bool assign_search(const std::vector<int>& lambda, size_t pi, std::vector<int>& capacity) {
    if (pi == lambda.size()) return true; // totals match, so all capacities are 0
    for (size_t j = 0; j < capacity.size(); ++j) {
        if (capacity[j] < lambda[pi]) continue;
        bool seen = false; // identical capacities are interchangeable
        for (size_t l = 0; l < j; ++l)
            if (capacity[l] == capacity[j]) { seen = true; break; }
        if (seen) continue;
        capacity[j] -= lambda[pi];
        if (assign_search(lambda, pi + 1, capacity)) return true;
        capacity[j] += lambda[pi];
    }
    return false;
}

} // namespace

bool contains(const WeightTuple& inner, const WeightTuple& outer) {
    if (inner.total() != outer.total())
        throw domain_error("containment needs equal total weights");
    std::vector<char> used(outer.parts.size(), 0);
    return split_search(inner.parts, 0, inner.parts.front(), 0, outer.parts, used);
}

bool membership(const std::vector<PicPoint>& divisor, const WeightTuple& lambda) {
    if (int(divisor.size()) != lambda.total())
        throw domain_error("divisor size must equal the total weight");
    std::map<PicPoint, int> profile;
    for (const auto& p : divisor) ++profile[p];
    std::vector<int> capacity;
    capacity.reserve(profile.size());
    for (const auto& [pt, mult] : profile) capacity.push_back(mult);
    return assign_search(lambda.parts, 0, capacity);
}

RingElement delta_class(int s, int h) {
    if (s < 2 || s > h) throw domain_error("delta class needs 2 <= s <= h");
    RingElement eta = make_generator(h, Generator::eta);
    RingElement sigma = make_generator(h, Generator::sigma);
    return Int(s) * (Int(h) * eta.pow(unsigned(s - 1)) -
                     Int(s - 1) * (eta.pow(unsigned(s - 2)) * sigma));
}

namespace {

// sparse multivariate polynomial over Z, exponent vector -> coefficient
using Multi = std::map<std::vector<int>, Int>;

Multi multi_linear(const std::vector<Int>& coeffs) {
    Multi p;
    for (size_t v = 0; v < coeffs.size(); ++v) {
        if (coeffs[v] == 0) continue;
        std::vector<int> e(coeffs.size(), 0);
        e[v] = 1;
        p.emplace(std::move(e), coeffs[v]);
    }
    return p;
}

Multi multi_mul(const Multi& a, const Multi& b) {
    Multi r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            Int prod = ca * cb;
            auto [it, fresh] = r.try_emplace(std::move(e), prod);
            if (!fresh) it->second += prod;
        }
    }
    return r;
}

Multi multi_pow(const Multi& a, int e, size_t vars) {
    Multi r{{std::vector<int>(vars, 0), Int(1)}};
    for (int i = 0; i < e; ++i) r = multi_mul(r, a);
    return r;
}

Int multi_coeff(const Multi& p, const std::vector<int>& e) {
    auto it = p.find(e);
    return it == p.end() ? Int(0) : it->second;
}

} // namespace

RingElement diagonal_class(const DiagonalSpec& spec) {
    const size_t k = spec.group_sizes.size();
    if (k == 0 || spec.weights.size() != k)
        throw domain_error("diagonal spec needs matching nonempty N and I");
    for (size_t l = 0; l < k; ++l)
        if (spec.group_sizes[l] < 1 || spec.weights[l] < 1)
            throw domain_error("diagonal spec entries must be positive");
    const int nu = spec.nu();
    const int h = spec.total();
    if (h < nu + 1)
        throw domain_error("diagonal class needs h >= nu + 1 (eta exponent h - nu - 1 "
                           "would be negative)");

    std::vector<Int> p_coeffs(k), q_coeffs(k);
    for (size_t l = 0; l < k; ++l) {
        Int w = spec.weights[l];
        p_coeffs[l] = w;
        q_coeffs[l] = w * w - w;
    }
    Multi p = multi_linear(p_coeffs);
    Multi q = multi_linear(q_coeffs);
    Multi p_nu_minus_1 = multi_pow(p, nu - 1, k);

    std::vector<int> target(spec.group_sizes.begin(), spec.group_sizes.end());
    Int a = multi_coeff(multi_mul(p_nu_minus_1, p), target); // y^N in P^nu
    Int b = multi_coeff(multi_mul(p_nu_minus_1, q), target); // y^N in P^{nu-1} Q

    RingElement eta = make_generator(h, Generator::eta);
    RingElement sigma = make_generator(h, Generator::sigma);
    return (a * eta + b * (eta - sigma)) * eta.pow(unsigned(h - nu - 1));
}

Int covering_degree(int h) {
    if (h < 3) throw domain_error("covering degree needs h >= 3");
    return factorial(unsigned(h - 2));
}

namespace {

struct FiberSetup {
    int tuple_len;            // h - 1
    long long sample_count;
    long long tuple_count;    // sample_count^(h-1)
    std::vector<int> target;  // sorted index multiset of the generic point
};

FiberSetup fiber_setup(int h, const std::vector<PicPoint>& samples) {
    if (h < 3) throw domain_error("fiber count needs h >= 3");
    if (h > 15) throw domain_error("fiber enumeration supports h <= 15");
    if (int(samples.size()) < h - 1)
        throw domain_error("need at least h - 1 distinct sample points");
    std::vector<PicPoint> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw domain_error("sample points must be distinct");

    FiberSetup setup;
    setup.tuple_len = h - 1;
    setup.sample_count = (long long)samples.size();
    setup.tuple_count = 1;
    for (int i = 0; i < setup.tuple_len; ++i) {
        if (setup.tuple_count > (1LL << 62) / setup.sample_count)
            throw domain_error("fiber enumeration too large");
        setup.tuple_count *= setup.sample_count;
    }
    // generic point of the codim-1 stratum: first sample doubled
    setup.target.push_back(0);
    for (int i = 0; i < h - 1; ++i) setup.target.push_back(i);
    std::sort(setup.target.begin(), setup.target.end());
    return setup;
}

// does tuple #index (mixed radix) hit the target divisor?
bool fiber_tuple_hits(long long index, const FiberSetup& setup) {
    int buf[16];
    int len = 0;
    long long rest = index;
    for (int i = 0; i < setup.tuple_len; ++i) {
        int digit = int(rest % setup.sample_count);
        rest /= setup.sample_count;
        buf[len++] = digit;
        if (i == 0) buf[len++] = digit; // first factor enters with weight 2
    }
    std::sort(buf, buf + len);
    for (int i = 0; i < len; ++i)
        if (buf[i] != setup.target[size_t(i)]) return false;
    return true;
}

} // namespace

long long fiber_count_oracle_serial(int h, const std::vector<PicPoint>& samples) {
    FiberSetup setup = fiber_setup(h, samples);
    long long count = 0;
    for (long long index = 0; index < setup.tuple_count; ++index)
        count += fiber_tuple_hits(index, setup);
    return count;
}

long long fiber_count_oracle(int h, const std::vector<PicPoint>& samples) {
    FiberSetup setup = fiber_setup(h, samples);
    long long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (long long index = 0; index < setup.tuple_count; ++index)
        count += fiber_tuple_hits(index, setup);
    return count;
}

FixedDetStratum fixed_det_stratum(int h, int s) {
    if (h < 2 || s < 2 || s > h)
        throw domain_error("fixed-determinant stratum needs 2 <= s <= h");
    FixedDetStratum out;
    out.dim = h - s;
    if (s == h) out.point_count = Int(h) * h;
    out.poincare = poincare_fixed_det(h, s);
    return out;
}

std::vector<int> stratum_product_model(const std::vector<int>& values,
                                       const std::vector<int>& multiplicities) {
    if (values.empty() || values.size() != multiplicities.size())
        throw domain_error("product model needs matching nonempty values and multiplicities");
    for (size_t l = 0; l < values.size(); ++l) {
        if (values[l] < 1 || multiplicities[l] < 1)
            throw domain_error("product model entries must be positive");
        if (l > 0 && values[l] >= values[l - 1])
            throw domain_error("repeated weight values rejected: the product model "
                               "needs strictly decreasing weights");
    }
    return multiplicities;
}

std::pair<std::vector<int>, std::vector<int>> group_partition(const WeightTuple& t) {
    std::vector<int> values, mult;
    for (int x : t.parts) {
        if (!values.empty() && values.back() == x) {
            ++mult.back();
        } else {
            values.push_back(x);
            mult.push_back(1);
        }
    }
    return {values, mult};
}

PoincarePolynomial stratum_poincare(const WeightTuple& t) {
    auto [values, mult] = group_partition(t);
    auto factors = stratum_product_model(values, mult);
    PoincarePolynomial p({Int(1)});
    for (int n : factors) p = kunneth(p, poincare_sym(1, n));
    return p;
}

namespace {

// all divisors of degree h supported on h labeled points, as multiplicity vectors
std::vector<std::vector<int>> divisor_profiles(int h) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(size_t(h), 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == h - 1) {
            current[size_t(slot)] = remaining;
            out.push_back(current);
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            current[size_t(slot)] = m;
            rec(slot + 1, remaining - m);
        }
    };
    rec(0, h);
    return out;
}

std::vector<PicPoint> divisor_from_profile(const std::vector<int>& mults) {
    std::vector<PicPoint> divisor;
    for (size_t i = 0; i < mults.size(); ++i) {
        PicPoint pt{1, PicOffset(Frac((long long)i, (long long)mults.size() + 1), Frac(0))};
        for (int c = 0; c < mults[i]; ++c) divisor.push_back(pt);
    }
    return divisor;
}

std::vector<WeightTuple> all_tuples(int h) {
    auto parts = partitions_of(h);
    std::vector<WeightTuple> tuples;
    tuples.reserve(parts.size());
    for (auto& p : parts) tuples.emplace_back(p);
    return tuples;
}

template <typename Decide>
std::vector<std::vector<char>> pair_table(const std::vector<WeightTuple>& tuples,
                                          bool parallel, Decide decide) {
    const int n = int(tuples.size());
    std::vector<std::vector<char>> table(size_t(n), std::vector<char>(size_t(n), 0));
    if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                table[size_t(i)][size_t(j)] = decide(tuples[size_t(i)], tuples[size_t(j)]);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                table[size_t(i)][size_t(j)] = decide(tuples[size_t(i)], tuples[size_t(j)]);
    }
    return table;
}

// W(inner) subset of W(outer) iff every divisor on h labeled points that is
// realizable with profile `inner` is expressible with profile `outer`.  The
// divisor-vs-partition membership matrix is computed once; the pair table is
// then a pure implication scan.
std::vector<std::vector<char>> oracle_table(int h, bool parallel) {
    auto tuples = all_tuples(h);
    auto profiles = divisor_profiles(h);
    std::vector<std::vector<PicPoint>> divisors;
    divisors.reserve(profiles.size());
    for (const auto& profile : profiles) divisors.push_back(divisor_from_profile(profile));

    const long long d_count = (long long)divisors.size();
    const size_t t_count = tuples.size();
    std::vector<std::vector<char>> member(size_t(d_count), std::vector<char>(t_count, 0));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long d = 0; d < d_count; ++d)
            for (size_t t = 0; t < t_count; ++t)
                member[size_t(d)][t] = membership(divisors[size_t(d)], tuples[t]);
    } else {
        for (long long d = 0; d < d_count; ++d)
            for (size_t t = 0; t < t_count; ++t)
                member[size_t(d)][t] = membership(divisors[size_t(d)], tuples[t]);
    }

    std::vector<std::vector<char>> table(t_count, std::vector<char>(t_count, 1));
    for (long long d = 0; d < d_count; ++d)
        for (size_t i = 0; i < t_count; ++i)
            if (member[size_t(d)][i])
                for (size_t j = 0; j < t_count; ++j)
                    if (!member[size_t(d)][j]) table[i][j] = 0;
    return table;
}

} // namespace

std::vector<std::vector<char>> containment_table(int h) {
    return pair_table(all_tuples(h), true, [](const WeightTuple& a, const WeightTuple& b) {
        return char(contains(a, b));
    });
}

std::vector<std::vector<char>> containment_table_serial(int h) {
    return pair_table(all_tuples(h), false, [](const WeightTuple& a, const WeightTuple& b) {
        return char(contains(a, b));
    });
}

std::vector<std::vector<char>> containment_table_oracle(int h) {
    return oracle_table(h, true);
}

std::vector<std::vector<char>> containment_table_oracle_serial(int h) {
    return oracle_table(h, false);
}

} // namespace wobbly
