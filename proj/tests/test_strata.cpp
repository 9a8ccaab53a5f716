#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wobbly/strata.hpp"

using namespace wobbly;

namespace {

WeightTuple wt(std::vector<int> parts) { return WeightTuple(std::move(parts)); }

std::vector<PicPoint> sample_points(int count) {
    std::vector<PicPoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(PicPoint{1, PicOffset(Frac(i, count + 1), Frac(0))});
    return pts;
}

std::vector<PicPoint> divisor(std::vector<int> point_ids) {
    std::vector<PicPoint> d;
    for (int id : point_ids)
        d.push_back(PicPoint{1, PicOffset(Frac(id, 97), Frac(0))});
    return d;
}

} // namespace

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(1) == std::vector<std::vector<int>>{{1}});
    CHECK(partitions_of(3) ==
          std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("stratum enumeration") {
    auto strata3 = enumerate_strata(3);
    REQUIRE(strata3.size() == 3);
    CHECK(strata3[0].partition == wt({3}));
    CHECK(strata3[0].dim == 1);
    CHECK(strata3[1].partition == wt({2, 1}));
    CHECK(strata3[1].dim == 2);
    CHECK(strata3[2].partition == wt({1, 1, 1}));
    CHECK(strata3[2].dim == 3);

    auto strata1 = enumerate_strata(1);
    REQUIRE(strata1.size() == 1);
    CHECK(strata1[0].dim == 1);

    CHECK(enumerate_strata(5).size() == 7);

    for (const Stratum& s : enumerate_strata(6)) {
        int big = 0;
        for (int x : s.partition.parts) big += x > 1;
        CHECK(s.standard == (big <= 1));
        CHECK(s.dim == s.partition.count());
        if (s.standard) {
            REQUIRE(s.fundamental_class.has_value());
            int top = s.partition.parts.front();
            CHECK(*s.fundamental_class ==
                  (top >= 2 ? delta_class(top, 6) : make_generator(6, Generator::one)));
        } else {
            CHECK_FALSE(s.fundamental_class.has_value());
        }
    }
}

TEST_CASE("the wobbly stratum") {
    Stratum w2 = wobbly_stratum(2);
    CHECK(w2.partition == wt({2}));
    CHECK(w2.dim == 1);
    CHECK(w2.fundamental_class->str() == "4*eta - 2*sigma");
    CHECK(wobbly_stratum(4).dim == 3);
    CHECK(wobbly_stratum(3).partition == wt({2, 1}));
    CHECK_THROWS_AS(wobbly_stratum(1), domain_error);
}

TEST_CASE("containment by refinement") {
    CHECK(contains(wt({3}), wt({2, 1})));
    CHECK_FALSE(contains(wt({2, 2}), wt({3, 1})));
    CHECK(contains(wt({2, 1, 1}), wt({1, 1, 1, 1})));
    CHECK(contains(wt({4, 2}), wt({2, 2, 2})));
    CHECK_FALSE(contains(wt({3, 3}), wt({2, 2, 2})));
    CHECK_THROWS_AS(contains(wt({2}), wt({1, 1, 1})), domain_error);
}

TEST_CASE("divisor membership") {
    CHECK(membership(divisor({5, 5, 9}), wt({2, 1})));
    CHECK_FALSE(membership(divisor({1, 2, 3}), wt({2, 1})));
    CHECK(membership(divisor({4, 4, 4}), wt({2, 1}))); // both groups at one point
    CHECK(membership(divisor({4, 4, 4}), wt({3})));
    CHECK_FALSE(membership(divisor({4, 4, 7}), wt({3})));
    CHECK_THROWS_AS(membership(divisor({1, 2}), wt({2, 1})), domain_error);
}

TEST_CASE("delta classes") {
    for (int h = 2; h <= 10; ++h) {
        RingElement d2 = delta_class(2, h);
        RingElement eta = make_generator(h, Generator::eta);
        RingElement sigma = make_generator(h, Generator::sigma);
        CHECK(d2 == Int(2 * h) * eta - Int(2) * sigma);
    }
    CHECK(delta_class(3, 4).str() == "12*eta^2 - 6*sigma*eta");

    for (int h = 2; h <= 10; ++h) {
        for (int s = 2; s <= h; ++s) {
            RingElement d = delta_class(s, h);
            // homogeneous of degree 2(s-1) with the stated two coefficients
            CHECK(d == d.component(2 * (s - 1)));
            CHECK(d.coefficient(Monomial{false, false, false, s - 1}) == Int(s) * h);
            if (s >= 2)
                CHECK(d.coefficient(Monomial{false, false, true, s - 2}) ==
                      Int(-s) * (s - 1));
        }
    }
    CHECK_THROWS_AS(delta_class(1, 4), domain_error);
    CHECK_THROWS_AS(delta_class(5, 4), domain_error);
}

TEST_CASE("diagonal classes") {
    for (int h = 2; h <= 10; ++h) {
        RingElement eta = make_generator(h, Generator::eta);
        RingElement sigma = make_generator(h, Generator::sigma);
        DiagonalSpec spec{h == 2 ? std::vector<int>{1} : std::vector<int>{1, h - 2},
                          h == 2 ? std::vector<int>{2} : std::vector<int>{2, 1}};
        CHECK(diagonal_class(spec) == Int(2) * (Int(h) * eta - sigma));
    }

    // against the closed form, for every standard shape
    for (int h = 2; h <= 10; ++h) {
        for (int s = 2; s <= h; ++s) {
            DiagonalSpec spec{s == h ? std::vector<int>{1} : std::vector<int>{1, h - s},
                              s == h ? std::vector<int>{h} : std::vector<int>{s, 1}};
            CHECK(diagonal_class(spec) == delta_class(s, h));
        }
    }

    // a non-standard shape: N = (2), I = (2) inside Sym^4 (the stratum (2,2))
    {
        RingElement eta = make_generator(4, Generator::eta);
        RingElement sigma = make_generator(4, Generator::sigma);
        RingElement cls = diagonal_class(DiagonalSpec{{2}, {2}});
        // P = 2y, Q = 2y, nu = 2: the y^2 coefficients of P^2 and PQ are both 4
        CHECK(cls == (Int(4) * eta + Int(4) * (eta - sigma)) * eta);
    }

    CHECK_THROWS_AS(diagonal_class(DiagonalSpec{{1}, {1}}), domain_error); // h = nu
    CHECK_THROWS_AS(diagonal_class(DiagonalSpec{{1, 1}, {1}}), domain_error);
    CHECK_THROWS_AS(diagonal_class(DiagonalSpec{{}, {}}), domain_error);
}

TEST_CASE("covering degrees and the fiber oracle") {
    CHECK(covering_degree(3) == 1);
    CHECK(covering_degree(4) == 2);
    CHECK(covering_degree(5) == 6);
    CHECK_THROWS_AS(covering_degree(2), domain_error);

    CHECK(fiber_count_oracle(4, sample_points(3)) == 2);
    CHECK(fiber_count_oracle(3, sample_points(2)) == 1);
    CHECK(fiber_count_oracle(5, sample_points(4)) == 6);

    for (int h = 3; h <= 6; ++h) {
        auto pts = sample_points(h - 1);
        long long parallel = fiber_count_oracle(h, pts);
        long long serial = fiber_count_oracle_serial(h, pts);
        CHECK(parallel == serial);
        CHECK(Int(parallel) == covering_degree(h));
    }

    // extra sample points do not create extra preimages
    CHECK(fiber_count_oracle(4, sample_points(5)) == 2);

    CHECK_THROWS_AS(fiber_count_oracle(5, sample_points(3)), domain_error);
    auto dup = sample_points(3);
    dup.push_back(dup.front());
    CHECK_THROWS_AS(fiber_count_oracle(4, dup), domain_error);
}

TEST_CASE("fixed-determinant strata") {
    FixedDetStratum top = fixed_det_stratum(4, 4);
    CHECK(top.dim == 0);
    REQUIRE(top.point_count.has_value());
    CHECK(*top.point_count == 16);
    CHECK(top.poincare == PoincarePolynomial({Int(16)}));

    FixedDetStratum mid = fixed_det_stratum(4, 2);
    CHECK(mid.dim == 2);
    CHECK_FALSE(mid.point_count.has_value());
    CHECK(mid.poincare == PoincarePolynomial({Int(1), Int(2), Int(2), Int(2), Int(1)}));

    FixedDetStratum low = fixed_det_stratum(3, 2);
    CHECK(low.dim == 1);
    CHECK(low.poincare == PoincarePolynomial({Int(1), Int(2), Int(1)}));

    CHECK_THROWS_AS(fixed_det_stratum(4, 1), domain_error);
}

TEST_CASE("product models") {
    CHECK(stratum_product_model({5, 1}, {1, 3}) == std::vector<int>{1, 3});
    CHECK(stratum_product_model({3, 2, 1}, {1, 1, 1}) == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(stratum_product_model({2, 2}, {1, 1}), domain_error);
    CHECK_THROWS_AS(stratum_product_model({1, 2}, {1, 1}), domain_error);

    auto [values, mult] = group_partition(wt({3, 2, 2, 1, 1, 1}));
    CHECK(values == std::vector<int>{3, 2, 1});
    CHECK(mult == std::vector<int>{1, 2, 3});

    // standard shape: X x Sym^{h-s}
    CHECK(stratum_poincare(wt({3, 1, 1})) == poincare_std_sublocus(5, 3));
    // (2,2): Sym^2 of the curve
    CHECK(stratum_poincare(wt({2, 2})) == poincare_sym(1, 2));
    // full stratum: Sym^h itself
    CHECK(stratum_poincare(wt({1, 1, 1, 1})) == poincare_sym(1, 4));
}

TEST_CASE("containment rule matches the divisor oracle") {
    for (int h = 2; h <= 7; ++h) {
        auto rule = containment_table(h);
        auto rule_serial = containment_table_serial(h);
        auto oracle = containment_table_oracle(h);
        auto oracle_serial = containment_table_oracle_serial(h);
        CHECK(rule == rule_serial);
        CHECK(oracle == oracle_serial);
        CHECK(rule == oracle);
    }
}

TEST_CASE("containment is a partial order") {
    for (int h = 2; h <= 8; ++h) {
        auto parts = partitions_of(h);
        std::vector<WeightTuple> tuples;
        for (auto& p : parts) tuples.emplace_back(p);
        auto table = containment_table(h);
        const size_t n = tuples.size();
        for (size_t i = 0; i < n; ++i) {
            CHECK(table[i][i]); // reflexive
            for (size_t j = 0; j < n; ++j) {
                bool both_ways = table[i][j] && table[j][i];
                if (i != j) CHECK_FALSE(both_ways); // antisymmetric
                for (size_t k = 0; k < n; ++k)
                    if (table[i][j] && table[j][k]) CHECK(table[i][k]); // transitive
            }
        }
    }
}

TEST_CASE("the standard filtration chain") {
    for (int h = 2; h <= 10; ++h) {
        std::vector<WeightTuple> chain;
        for (int s = h; s >= 1; --s) {
            std::vector<int> parts{s};
            parts.insert(parts.end(), size_t(h - s), 1);
            chain.emplace_back(parts); // W(h-s+1, s, 1, ..., 1); s = 1 is Sym^h
        }
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            CHECK(contains(chain[i], chain[i + 1]));
            CHECK_FALSE(contains(chain[i + 1], chain[i]));
            CHECK(chain[i].count() + 1 == chain[i + 1].count()); // dims 1, 2, ..., h
        }
    }
}
