#include <doctest.h>

#include "oracles.hpp"
#include "qeuler/constructions.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/newton.hpp"

using namespace qeuler;

namespace {

LaurentSeries x(long e) { return LaurentSeries::x_power(e); }
LaurentSeries cst(long v) { return LaurentSeries::constant(v); }

} // namespace

TEST_CASE("polygon of x sigma + 1") {
    const NewtonPolygon np = newton_polygon(QDiffOperator::first_order(x(1), cst(1)));
    CHECK(np.points == std::vector<LatticePoint>{{0, 0}, {1, 1}});
    CHECK(np.slopes == std::vector<Slope>{{1, 1, 1}});
    const SummabilityOrder o = summability_order(np);
    CHECK(o.kind == SummabilityOrder::Kind::summable);
    CHECK(o.levels == std::vector<long>{1});
}

TEST_CASE("polygon of the square operator has two levels") {
    const QDiffOperator l =
        QDiffOperator::first_order(x(1), cst(1)).compose(QDiffOperator::first_order(x(2), cst(-1)));
    const NewtonPolygon np = newton_polygon(l);
    CHECK(np.points == std::vector<LatticePoint>{{0, 0}, {1, 1}, {2, 3}});
    CHECK(np.slopes == std::vector<Slope>{{1, 1, 1}, {2, 1, 1}});
    CHECK(summability_order(np).levels == std::vector<long>{1, 2});
}

TEST_CASE("flat polygon is convergent") {
    const NewtonPolygon np = newton_polygon(QDiffOperator::first_order(cst(1), cst(1)));
    CHECK(np.slopes == std::vector<Slope>{{0, 1, 1}});
    CHECK(summability_order(np).kind == SummabilityOrder::Kind::convergent);

    NewtonPolygon flat2;
    flat2.slopes = {{0, 1, 2}};
    const SummabilityOrder o = summability_order(flat2);
    CHECK(o.kind == SummabilityOrder::Kind::convergent);
    CHECK(o.levels.empty());
}

TEST_CASE("negative and non-integer slopes") {
    // a_0 = x^2, a_2 = 1, a_1 = x^3: one edge of slope -1 over length 2.
    QDiffOperator::term_map t{{0, x(2)}, {1, x(3)}, {2, cst(1)}};
    const NewtonPolygon np = newton_polygon(QDiffOperator(t));
    CHECK(np.hull == std::vector<LatticePoint>{{0, 2}, {2, 0}});
    CHECK(np.slopes == std::vector<Slope>{{-1, 1, 2}});
    CHECK(summability_order(np).kind == SummabilityOrder::Kind::convergent);

    QDiffOperator::term_map h{{0, cst(1)}, {2, x(1)}};
    const NewtonPolygon half = newton_polygon(QDiffOperator(h));
    CHECK(half.slopes == std::vector<Slope>{{1, 2, 2}});
    CHECK_THROWS_AS(summability_order(half), non_integer_slope);
    CHECK_THROWS_AS(half.slope_multiset(), non_integer_slope);
}

TEST_CASE("missing endpoints and unknown valuations") {
    CHECK_THROWS_AS(newton_polygon(QDiffOperator()), missing_endpoint_coefficient);
    QDiffOperator::term_map no_a0{{1, x(1)}};
    CHECK_THROWS_AS(newton_polygon(QDiffOperator(no_a0)), missing_endpoint_coefficient);
    QDiffOperator::term_map unknown{{0, cst(1)}, {1, LaurentSeries::big_o(5)}};
    CHECK_THROWS_AS(newton_polygon(QDiffOperator(unknown)), indeterminate_valuation);
}

TEST_CASE("collinear vertices are dropped but the multiplicity survives") {
    const auto hull = lower_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(hull == std::vector<LatticePoint>{{0, 0}, {3, 3}});
    const auto slopes = hull_slopes(hull);
    CHECK(slopes == std::vector<Slope>{{1, 1, 3}});
    NewtonPolygon np;
    np.slopes = slopes;
    CHECK(np.slope_multiset() == std::vector<long>{1, 1, 1});
}

TEST_CASE("left multiplication by x^m moves the polygon vertically") {
    const QDiffOperator l = build_tower(cst(1), 3, 20).cleared_top();
    const NewtonPolygon base = newton_polygon(l);
    for (long m = -3; m <= 3; ++m) {
        const NewtonPolygon moved = newton_polygon(l.left_multiply(x(m)));
        CHECK(moved.slopes == base.slopes);
        for (std::size_t i = 0; i < base.points.size(); ++i) {
            CHECK(moved.points[i].m == base.points[i].m + m);
        }
        CHECK(moved.display_normalized().points == base.display_normalized().points);
    }
}

TEST_CASE("cleared towers for P = 1 have slopes 1..n") {
    for (unsigned n = 1; n <= 5; ++n) {
        const NewtonPolygon np = newton_polygon(build_tower(cst(1), n, 24).cleared_top());
        std::vector<long> expected;
        for (long i = 1; i <= static_cast<long>(n); ++i) {
            expected.push_back(i);
        }
        CHECK(np.slope_multiset() == expected);
    }
}

TEST_CASE("monotone chain agrees with brute force on random point sets") {
    oracle::Gen g(404);
    for (int round = 0; round < 200; ++round) {
        std::vector<LatticePoint> pts;
        const long order = g.integer(1, 4);
        pts.push_back({0, g.integer(-3, 3)});
        pts.push_back({order, g.integer(-3, 3)});
        for (long k = 1; k < order; ++k) {
            if (g.coin()) {
                pts.push_back({k, g.integer(-3, 3)});
            }
        }
        if (g.coin()) {
            pts.push_back({g.integer(0, order), g.integer(-3, 3)});
        }
        CHECK(lower_hull(pts) == oracle::brute_force_lower_hull(pts));
        long total = 0;
        const auto slopes = hull_slopes(lower_hull(pts));
        for (std::size_t i = 0; i < slopes.size(); ++i) {
            total += slopes[i].length;
            if (i > 0) {
                CHECK(slopes[i - 1].num * slopes[i].den < slopes[i].num * slopes[i - 1].den);
            }
        }
        CHECK(total == order);
    }
}
