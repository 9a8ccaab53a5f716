#include "wobbly/bundles.hpp"

#include <algorithm>
#include <numeric>

namespace wobbly {

namespace {

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

Int lcm_int(const Int& a, const Int& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

} // namespace

Int PicOffset::torsion_order() const {
    return lcm_int(denominator(x), denominator(y));
}

// ---------------------------------------------------------------------------
// genus 0

GZeroBundle::GZeroBundle(std::vector<long long> ds) : degrees(std::move(ds)) {
    if (degrees.empty()) throw domain_error("a splitting needs at least one summand");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

long long GZeroBundle::total_degree() const {
    long long s = 0;
    for (long long d : degrees) s += d;
    return s;
}

Frac slope(const GZeroBundle& e) { return Frac(e.total_degree(), e.rank()); }

bool is_semistable(const GZeroBundle& e) {
    return e.degrees.front() == e.degrees.back();
}

Verdict classify_p1(const GZeroBundle& e, long long t) {
    if (e.rank() == 1) return {Outcome::VeryStable, "rank 1"};
    if (t >= 0) return {Outcome::Wobbly, "no t-very stable bundles for t >= 0"};
    long long gap = e.degrees.front() - e.degrees.back();
    if (gap < -t) return {Outcome::VeryStable, "splitting criterion: |d_i - d_j| < -t"};
    return {Outcome::Wobbly, "splitting criterion: |d_i - d_j| < -t"};
}

// ---------------------------------------------------------------------------
// genus 1 descriptors

Indecomposable::Indecomposable(long long r, long long d, PicOffset t)
    : rank(r), degree(d), twist(std::move(t)) {
    if (r < 1) throw domain_error("rank must be >= 1");
}

bool Indecomposable::is_stable() const { return gcd_ll(rank, degree) == 1; }

Polystable::Polystable(std::vector<Indecomposable> s) : summands(std::move(s)) {
    if (summands.empty()) throw domain_error("a polystable descriptor needs summands");
    for (const auto& part : summands)
        if (!part.is_stable())
            throw domain_error("polystable summands must have gcd(rank, degree) = 1");
    std::sort(summands.begin(), summands.end());
}

EllipticBundle::EllipticBundle(DirectSum v) : value_(std::move(v)) {
    if (std::get<DirectSum>(value_).parts.empty())
        throw domain_error("a direct sum needs at least one part");
}

bool operator==(const DirectSum& a, const DirectSum& b) { return a.parts == b.parts; }

long long EllipticBundle::rank() const {
    return std::visit(
        [](const auto& v) -> long long {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indecomposable>) {
                return v.rank;
            } else if constexpr (std::is_same_v<T, Polystable>) {
                long long r = 0;
                for (const auto& s : v.summands) r += s.rank;
                return r;
            } else {
                long long r = 0;
                for (const auto& p : v.parts) r += p.rank();
                return r;
            }
        },
        value_);
}

long long EllipticBundle::total_degree() const {
    return std::visit(
        [](const auto& v) -> long long {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indecomposable>) {
                return v.degree;
            } else if constexpr (std::is_same_v<T, Polystable>) {
                long long d = 0;
                for (const auto& s : v.summands) d += s.degree;
                return d;
            } else {
                long long d = 0;
                for (const auto& p : v.parts) d += p.total_degree();
                return d;
            }
        },
        value_);
}

std::vector<Indecomposable> flatten(const EllipticBundle& e) {
    std::vector<Indecomposable> parts;
    std::visit(
        [&parts](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indecomposable>) {
                parts.push_back(v);
            } else if constexpr (std::is_same_v<T, Polystable>) {
                parts.insert(parts.end(), v.summands.begin(), v.summands.end());
            } else {
                for (const auto& p : v.parts) {
                    auto sub = flatten(p);
                    parts.insert(parts.end(), sub.begin(), sub.end());
                }
            }
        },
        e.value());
    return parts;
}

Frac slope(const EllipticBundle& e) { return Frac(e.total_degree(), e.rank()); }

bool is_semistable(const EllipticBundle& e) {
    auto parts = flatten(e); // every indecomposable on an elliptic curve is semistable
    Frac mu = Frac(parts.front().degree, parts.front().rank);
    for (const auto& p : parts)
        if (Frac(p.degree, p.rank) != mu) return false;
    return true;
}

namespace {

EllipticBundle shift_by(const EllipticBundle& e, long long shift) {
    return std::visit(
        [shift](const auto& v) -> EllipticBundle {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Indecomposable>) {
                return Indecomposable(v.rank, v.degree + v.rank * shift, v.twist);
            } else if constexpr (std::is_same_v<T, Polystable>) {
                std::vector<Indecomposable> s;
                s.reserve(v.summands.size());
                for (const auto& part : v.summands)
                    s.emplace_back(part.rank, part.degree + part.rank * shift, part.twist);
                return Polystable(std::move(s));
            } else {
                DirectSum ds;
                ds.parts.reserve(v.parts.size());
                for (const auto& p : v.parts) ds.parts.push_back(shift_by(p, shift));
                return EllipticBundle(std::move(ds));
            }
        },
        e.value());
}

long long floor_div(long long a, long long b) { // b > 0
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

} // namespace

Normalized normalize_degree(const EllipticBundle& e) {
    long long shift = -floor_div(e.total_degree(), e.rank());
    return {shift_by(e, shift), shift};
}

long long h0_indecomposable(const Indecomposable& e) {
    if (e.degree < 0) throw domain_error("h0 needs degree >= 0; dualize first");
    if (e.degree > 0) return e.degree;
    return e.twist.is_zero() ? 1 : 0;
}

Indecomposable dual(const Indecomposable& e) {
    return Indecomposable(e.rank, -e.degree, -e.twist);
}

Indecomposable tensor_fr(const Indecomposable& e, long long h) {
    if (h < 1) throw domain_error("F_h needs h >= 1");
    if (!e.is_stable())
        throw domain_error("tensor with F_h needs gcd(rank, degree) = 1");
    return Indecomposable(e.rank * h, e.degree * h, e.twist);
}

Indecomposable tensor_coprime(const Indecomposable& e, const Indecomposable& f) {
    if (!e.is_stable() || !f.is_stable() || gcd_ll(e.rank, f.rank) != 1)
        throw domain_error("tensor product label needs pairwise coprime (r, d), (r', d'), r, r'");
    return Indecomposable(e.rank * f.rank, e.rank * f.degree + f.rank * e.degree,
                          f.rank * e.twist + e.rank * f.twist);
}

PicPoint det(const EllipticBundle& e) {
    PicPoint p;
    for (const auto& part : flatten(e)) {
        p.degree += part.degree;
        p.offset = p.offset + part.rank * part.twist;
    }
    return p;
}

std::vector<PicPoint> moduli_point(const EllipticBundle& e) {
    if (!is_semistable(e)) throw domain_error("moduli point needs a semistable bundle");
    std::vector<PicPoint> points;
    for (const auto& part : flatten(e)) {
        long long h = gcd_ll(part.rank, part.degree);
        long long reduced_rank = part.rank / h;
        // grading: h copies of E_A(r', d') (x) M, sitting at r'M + A
        PicPoint pt{1, reduced_rank * part.twist};
        for (long long i = 0; i < h; ++i) points.push_back(pt);
    }
    std::sort(points.begin(), points.end());
    return points;
}

// ---------------------------------------------------------------------------
// classification

std::string outcome_name(Outcome o) {
    switch (o) {
    case Outcome::VeryStable: return "very_stable";
    case Outcome::Wobbly: return "wobbly";
    default: return "undetermined";
    }
}

namespace {

Frac max_slope_gap(const std::vector<Indecomposable>& parts) {
    Frac lo = Frac(parts.front().degree, parts.front().rank);
    Frac hi = lo;
    for (const auto& p : parts) {
        Frac mu(p.degree, p.rank);
        lo = std::min(lo, mu);
        hi = std::max(hi, mu);
    }
    return hi - lo;
}

bool has_repeated_point(const std::vector<PicPoint>& sorted_points) {
    return std::adjacent_find(sorted_points.begin(), sorted_points.end()) !=
           sorted_points.end();
}

} // namespace

Verdict classify_elliptic(const EllipticBundle& input, const PicPoint& twist) {
    const EllipticBundle e = normalize_degree(input).bundle;
    if (e.rank() == 1) return {Outcome::VeryStable, "rank 1"};

    const long long deg_l = twist.degree;
    const bool semistable = is_semistable(e);
    const auto parts = flatten(e);

    if (deg_l < 0) {
        if (semistable) return {Outcome::VeryStable, "Lemma vst(1)"};
        if (max_slope_gap(parts) > Frac(-deg_l)) return {Outcome::Wobbly, "Remark dec"};
        return {Outcome::Undetermined, "Remark dec (slope gaps within -deg(L))"};
    }

    // deg(L) >= 0: a very stable bundle is slope-semistable
    if (!semistable) return {Outcome::Wobbly, "Lemma vst(2)"};

    if (deg_l >= 2) {
        bool stable = parts.size() == 1 && parts.front().is_stable();
        return {Outcome::Wobbly, stable ? "Theorem 3(3)" : "Corollary (3)"};
    }

    if (deg_l == 1) {
        if (parts.size() == 1) {
            const Indecomposable& ind = parts.front(); // 0 <= degree < rank
            if (ind.rank == ind.degree + 1) {
                // determinant point in Pic^1 through the Abel-Jacobi identification
                bool det_is_twist = ind.rank * ind.twist == twist.offset;
                if (ind.rank == 2)
                    return {det_is_twist ? Outcome::Wobbly : Outcome::VeryStable,
                            "Theorem 3(2)"};
                if (det_is_twist) return {Outcome::Wobbly, "Lemma exact (det = L)"};
                return {Outcome::Undetermined, "Conjecture 1"};
            }
            return {Outcome::Wobbly, "Lemma exact (r > d + 1)"};
        }
        for (const auto& part : parts) {
            Verdict v = classify_elliptic(EllipticBundle(part), twist);
            if (v.outcome == Outcome::Wobbly)
                return {Outcome::Wobbly, "wobbly direct summand (Lemma exact)"};
        }
        return {Outcome::Undetermined, "direct sum with deg(L) = 1 (undecided)"};
    }

    // deg(L) = 0, semistable
    if (twist.offset.is_zero()) {
        // canonical twist: decided on the S-equivalence class
        auto points = moduli_point(e);
        return {has_repeated_point(points) ? Outcome::Wobbly : Outcome::VeryStable,
                "Theorem 3(1)"};
    }

    // nontrivial degree-0 twist
    bool all_stable =
        std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.is_stable(); });
    if (all_stable && parts.size() >= 2) {
        // equal slopes, so all summands share one reduced (rank, degree)
        long long rp = parts.front().rank;
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j)
                if (i != j &&
                    rp * parts[i].twist == rp * parts[j].twist + rp * twist.offset)
                    return {Outcome::Wobbly, "Remark dec"};
        return {Outcome::VeryStable, "Remark dec"};
    }
    if (parts.size() == 1) {
        const Indecomposable& ind = parts.front();
        if (ind.degree == 0) {
            if (twist.offset.torsion_order() > ind.rank)
                return {Outcome::VeryStable, "Remark (degree-0 twist)"};
            return {Outcome::Undetermined, "Remark (degree-0 twist, order <= rank)"};
        }
        return {Outcome::Undetermined, "Remark (degree-0 twist, stable or h > 1 bundle)"};
    }
    return {Outcome::Undetermined, "Remark (degree-0 twist, mixed sum)"};
}

} // namespace wobbly
