#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wobbly/bundles.hpp"

#include <numeric>

using namespace wobbly;

namespace {

PicOffset off(long long px, long long qx, long long py = 0, long long qy = 1) {
    return PicOffset(Frac(px, qx), Frac(py, qy));
}

EllipticBundle ind(long long r, long long d, PicOffset t = {}) {
    return EllipticBundle(Indecomposable(r, d, t));
}

EllipticBundle poly(std::vector<Indecomposable> s) {
    return EllipticBundle(Polystable(std::move(s)));
}

PicPoint twist(long long deg, PicOffset o = {}) { return PicPoint{deg, o}; }

// independent wobbliness test for the canonical twist: the S-grading of a
// semistable bundle repeats iff some part is non-stable or two stable parts
// are isomorphic
bool grading_repeats(const EllipticBundle& e) {
    auto parts = flatten(e);
    std::vector<std::pair<std::pair<long long, long long>, PicOffset>> stable_pieces;
    for (const auto& p : parts) {
        if (std::gcd(p.rank, p.degree < 0 ? -p.degree : p.degree) != 1) return true;
        stable_pieces.push_back({{p.rank, p.degree}, p.rank * p.twist});
    }
    for (size_t i = 0; i < stable_pieces.size(); ++i)
        for (size_t j = i + 1; j < stable_pieces.size(); ++j)
            if (stable_pieces[i] == stable_pieces[j]) return true;
    return false;
}

} // namespace

TEST_CASE("pic offsets reduce mod 1") {
    CHECK(off(5, 4) == off(1, 4));
    CHECK(off(-1, 3) == off(2, 3));
    CHECK((off(1, 2) + off(1, 2)).is_zero());
    CHECK(-off(1, 3) == off(2, 3));
    CHECK(off(0, 1).torsion_order() == 1);
    CHECK(off(1, 2).torsion_order() == 2);
    CHECK(off(1, 2, 1, 3).torsion_order() == 6);
    CHECK(3 * off(1, 3) == off(0, 1));
}

TEST_CASE("slopes") {
    CHECK(slope(GZeroBundle({2, 0})) == Frac(1));
    CHECK(slope(ind(3, 1)) == Frac(1, 3));
    DirectSum ds{{ind(1, 0), ind(1, 1)}};
    CHECK(slope(EllipticBundle(ds)) == Frac(1, 2));
}

TEST_CASE("semistability") {
    CHECK(is_semistable(ind(4, 2)));
    CHECK_FALSE(is_semistable(GZeroBundle({1, 0})));
    CHECK(is_semistable(GZeroBundle({2, 2, 2})));
    CHECK_FALSE(is_semistable(poly({Indecomposable(2, 1), Indecomposable(1, 0)})));
    CHECK(is_semistable(poly({Indecomposable(2, 1), Indecomposable(2, 1, off(1, 3))})));
}

TEST_CASE("genus-0 classification") {
    CHECK(classify_p1(GZeroBundle({2, 0}), -1).outcome == Outcome::Wobbly);
    CHECK(classify_p1(GZeroBundle({0, 0}), -1).outcome == Outcome::VeryStable);
    CHECK(classify_p1(GZeroBundle({5, 3}), 0).outcome == Outcome::Wobbly);
    CHECK(classify_p1(GZeroBundle({7}), 3).outcome == Outcome::VeryStable); // rank 1

    // twisting by a line bundle shifts every splitting degree equally
    for (long long t = -5; t <= 2; ++t) {
        for (long long shift : {-3LL, 1LL, 4LL}) {
            GZeroBundle e({2, 0, -1});
            GZeroBundle shifted({2 + shift, 0 + shift, -1 + shift});
            CHECK(classify_p1(e, t).outcome == classify_p1(shifted, t).outcome);
        }
    }
}

TEST_CASE("degree normalization") {
    auto [b1, s1] = normalize_degree(ind(2, 5));
    CHECK(b1 == ind(2, 1));
    CHECK(s1 == -2);
    auto [b2, s2] = normalize_degree(ind(3, 0));
    CHECK(b2 == ind(3, 0));
    CHECK(s2 == 0);
    auto [b3, s3] = normalize_degree(ind(2, -1));
    CHECK(b3 == ind(2, 1));
    CHECK(s3 == 1);
}

TEST_CASE("h0 of indecomposables") {
    CHECK(h0_indecomposable(Indecomposable(3, 2, off(1, 5))) == 2);
    CHECK(h0_indecomposable(Indecomposable(3, 0)) == 1); // F_3
    CHECK(h0_indecomposable(Indecomposable(3, 0, off(1, 2))) == 0);
    CHECK_THROWS_AS(h0_indecomposable(Indecomposable(2, -1)), domain_error);
}

TEST_CASE("duals and tensor labels") {
    CHECK(dual(Indecomposable(3, 2)) == Indecomposable(3, -2));
    CHECK(dual(Indecomposable(2, 0, off(1, 2))) == Indecomposable(2, 0, off(1, 2)));
    Indecomposable e(5, 3, off(2, 7, 1, 3));
    CHECK(dual(dual(e)) == e);

    CHECK(tensor_fr(Indecomposable(2, 1), 3) == Indecomposable(6, 3));
    CHECK(tensor_fr(Indecomposable(1, 0), 1) == Indecomposable(1, 0));
    CHECK(tensor_fr(Indecomposable(3, 1), 2) == Indecomposable(6, 2));
    CHECK_THROWS_AS(tensor_fr(Indecomposable(4, 2), 2), domain_error);

    CHECK(tensor_coprime(Indecomposable(2, 1), Indecomposable(3, 1)) ==
          Indecomposable(6, 5));
    CHECK(tensor_coprime(Indecomposable(1, 0), Indecomposable(5, 2)) ==
          Indecomposable(5, 2));
    CHECK(tensor_coprime(Indecomposable(2, 1), Indecomposable(3, 2)) ==
          Indecomposable(6, 7));
    CHECK_THROWS_AS(tensor_coprime(Indecomposable(2, 1), Indecomposable(2, 1)),
                    domain_error);
    // commutative in its arguments
    Indecomposable a(2, 1, off(1, 4)), b(3, 2, off(1, 5));
    CHECK(tensor_coprime(a, b) == tensor_coprime(b, a));
}

TEST_CASE("determinants") {
    CHECK(det(ind(2, 1)) == PicPoint{1, {}});
    CHECK(det(ind(2, 1, off(1, 4))) == (PicPoint{1, off(1, 2)}));
    CHECK(det(poly({Indecomposable(1, 0, off(1, 3)), Indecomposable(1, 0, off(1, 5))})) ==
          (PicPoint{0, off(8, 15)}));
}

TEST_CASE("moduli points") {
    auto two_distinct =
        moduli_point(poly({Indecomposable(1, 0), Indecomposable(1, 0, off(1, 3))}));
    CHECK(two_distinct.size() == 2);
    CHECK(two_distinct[0] != two_distinct[1]);

    auto doubled = moduli_point(ind(4, 2));
    CHECK(doubled.size() == 2);
    CHECK(doubled[0] == doubled[1]);

    auto all_equal = moduli_point(
        poly({Indecomposable(1, 0, off(1, 7)), Indecomposable(1, 0, off(1, 7)),
              Indecomposable(1, 0, off(1, 7))}));
    CHECK(all_equal.size() == 3);
    CHECK(all_equal[0] == all_equal[2]);

    CHECK_THROWS_AS(moduli_point(poly({Indecomposable(2, 1), Indecomposable(1, 0)})),
                    domain_error);
}

TEST_CASE("elliptic classification follows the decision table") {
    PicPoint trivial = twist(0);

    SUBCASE("canonical twist") {
        Verdict v = classify_elliptic(ind(3, 0), trivial);
        CHECK(v.outcome == Outcome::Wobbly);
        CHECK(v.reason == "Theorem 3(1)");
        CHECK(classify_elliptic(poly({Indecomposable(1, 0),
                                      Indecomposable(1, 0, off(1, 3))}),
                                trivial)
                  .outcome == Outcome::VeryStable);
        CHECK(classify_elliptic(poly({Indecomposable(1, 0), Indecomposable(1, 0)}),
                                trivial)
                  .outcome == Outcome::Wobbly);
        CHECK(classify_elliptic(ind(3, 2), trivial).outcome == Outcome::VeryStable);
    }

    SUBCASE("degree-1 twist and the determinant point") {
        PicPoint at_half = twist(1, off(1, 2));
        Verdict hit = classify_elliptic(ind(2, 1, off(1, 4)), at_half);
        CHECK(hit.outcome == Outcome::Wobbly);
        CHECK(hit.reason == "Theorem 3(2)");
        Verdict miss = classify_elliptic(ind(2, 1, off(1, 3)), at_half);
        CHECK(miss.outcome == Outcome::VeryStable);

        // r = d + 1 >= 3: proven wobbly on the determinant fiber, open elsewhere
        CHECK(classify_elliptic(ind(3, 2, off(1, 6)), at_half).outcome ==
              Outcome::Wobbly);
        Verdict open = classify_elliptic(ind(3, 2, off(1, 5)), at_half);
        CHECK(open.outcome == Outcome::Undetermined);
        CHECK(open.reason == "Conjecture 1");

        // r > d + 1 is always wobbly
        CHECK(classify_elliptic(ind(3, 1), at_half).outcome == Outcome::Wobbly);
        CHECK(classify_elliptic(ind(4, 2), at_half).outcome == Outcome::Wobbly);
        CHECK(classify_elliptic(ind(2, 0), at_half).outcome == Outcome::Wobbly);
    }

    SUBCASE("degree >= 2 twists") {
        CHECK(classify_elliptic(ind(5, 2), twist(3)).outcome == Outcome::Wobbly);
        CHECK(classify_elliptic(ind(5, 2), twist(3)).reason == "Theorem 3(3)");
        CHECK(classify_elliptic(ind(4, 2), twist(2)).reason == "Corollary (3)");
        CHECK(classify_elliptic(poly({Indecomposable(1, 0), Indecomposable(1, 0)}),
                                twist(2))
                  .outcome == Outcome::Wobbly);
    }

    SUBCASE("negative twists") {
        Verdict v = classify_elliptic(ind(4, 2), twist(-1));
        CHECK(v.outcome == Outcome::VeryStable);
        CHECK(v.reason == "Lemma vst(1)");
        // slope gap 2 > 1 = -deg(L): wobbly
        DirectSum gap{{ind(1, 0), ind(1, 2)}};
        CHECK(classify_elliptic(EllipticBundle(gap), twist(-1)).outcome ==
              Outcome::Wobbly);
        // slope gap 1 <= 1: open
        DirectSum small_gap{{ind(1, 0), ind(1, 1)}};
        CHECK(classify_elliptic(EllipticBundle(small_gap), twist(-1)).outcome ==
              Outcome::Undetermined);
    }

    SUBCASE("non-semistable with deg(L) >= 0 is wobbly") {
        DirectSum mixed{{ind(1, 0), ind(1, 1)}};
        for (long long d : {0LL, 1LL, 2LL}) {
            Verdict v = classify_elliptic(EllipticBundle(mixed), twist(d));
            CHECK(v.outcome == Outcome::Wobbly);
        }
        CHECK(classify_elliptic(EllipticBundle(mixed), twist(0)).reason ==
              "Lemma vst(2)");
    }

    SUBCASE("nontrivial degree-0 twists") {
        PicPoint l = twist(0, off(1, 2));
        Verdict translated = classify_elliptic(
            poly({Indecomposable(1, 0), Indecomposable(1, 0, off(1, 2))}), l);
        CHECK(translated.outcome == Outcome::Wobbly);
        CHECK(translated.reason == "Remark dec");
        CHECK(classify_elliptic(
                  poly({Indecomposable(1, 0), Indecomposable(1, 0, off(1, 3))}), l)
                  .outcome == Outcome::VeryStable);

        // F_r with a twist of order > r
        CHECK(classify_elliptic(ind(2, 0), twist(0, off(1, 3))).outcome ==
              Outcome::VeryStable);
        CHECK(classify_elliptic(ind(3, 0), twist(0, off(1, 3))).outcome ==
              Outcome::Undetermined);
        // stable bundle: the degree-0 remark stays conditional
        CHECK(classify_elliptic(ind(2, 1), l).outcome == Outcome::Undetermined);
    }

    SUBCASE("rank 1 is always very stable") {
        for (long long d : {-2LL, 0LL, 1LL, 3LL})
            CHECK(classify_elliptic(ind(1, 5, off(1, 3)), twist(d)).outcome ==
                  Outcome::VeryStable);
    }
}

TEST_CASE("classification invariants over a descriptor grid") {
    std::vector<PicOffset> offsets{off(0, 1), off(1, 2), off(1, 3), off(1, 6, 1, 2)};
    std::vector<PicPoint> twists;
    for (long long d = -3; d <= 3; ++d) {
        twists.push_back(twist(d));
        twists.push_back(twist(d, off(1, 2)));
        twists.push_back(twist(d, off(2, 3)));
    }

    std::vector<EllipticBundle> grid;
    for (long long r = 1; r <= 6; ++r)
        for (long long d = -6; d <= 6; ++d)
            for (const auto& o : offsets) grid.push_back(ind(r, d, o));
    grid.push_back(poly({Indecomposable(1, 0), Indecomposable(1, 0, off(1, 3))}));
    grid.push_back(poly({Indecomposable(2, 1), Indecomposable(2, 1, off(1, 4))}));
    grid.push_back(EllipticBundle(DirectSum{{ind(2, 1), ind(1, 0)}}));
    grid.push_back(EllipticBundle(DirectSum{{ind(4, 2), ind(1, 0, off(1, 5))}}));

    for (const auto& e : grid) {
        for (const auto& l : twists) {
            Verdict direct = classify_elliptic(e, l);
            Verdict shifted = classify_elliptic(normalize_degree(e).bundle, l);
            CHECK(direct == shifted);
            if (l.degree >= 0 && direct.outcome == Outcome::VeryStable)
                CHECK(is_semistable(e)); // Lemma vst(2) consistency
            if (direct.outcome == Outcome::Undetermined)
                CHECK_FALSE(direct.reason.empty());
        }
        // canonical twist agrees with the independent repeated-grading test
        if (is_semistable(e)) {
            Verdict v = classify_elliptic(e, twist(0));
            CHECK(v.outcome ==
                  (grading_repeats(e) ? Outcome::Wobbly : Outcome::VeryStable));
            auto points = moduli_point(e);
            bool repeat = false;
            for (size_t i = 0; i + 1 < points.size(); ++i)
                repeat = repeat || points[i] == points[i + 1];
            CHECK(v.outcome == (repeat ? Outcome::Wobbly : Outcome::VeryStable));
        }
    }
}

TEST_CASE("the degree-1 wobbly locus in rank 2 is one moduli point") {
    // over all descriptors E in E(2,1), the wobbly ones share one determinant
    PicPoint l = twist(1, off(1, 3));
    std::vector<PicOffset> dets;
    for (long long num = 0; num < 12; ++num) {
        for (long long num2 = 0; num2 < 12; ++num2) {
            EllipticBundle e = ind(2, 1, off(num, 12, num2, 12));
            if (classify_elliptic(e, l).outcome == Outcome::Wobbly) {
                PicOffset d = det(e).offset;
                if (std::find(dets.begin(), dets.end(), d) == dets.end())
                    dets.push_back(d);
            }
        }
    }
    CHECK(dets.size() == 1);
    CHECK(dets.front() == off(1, 3));
}
