#pragma once

#include <vector>

#include "qeuler/qdiff.hpp"

namespace qeuler {

struct LatticePoint {
    long k;
    long m;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Edge of the lower hull: slope num/den in lowest terms (den > 0), spanning
// `length` units horizontally.
struct Slope {
    long num;
    long den;
    long length;
    bool is_integer() const noexcept { return den == 1; }
    friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonPolygon {
    std::vector<LatticePoint> points; // one per nonzero coefficient, by shift
    std::vector<LatticePoint> hull;   // lower hull vertices, left to right
    std::vector<Slope> slopes;        // non-decreasing

    // Same polygon shifted vertically so the lowest point sits at height 0.
    NewtonPolygon display_normalized() const;
    // kappa_1 <= ... <= kappa_n with multiplicities (integer slopes only).
    std::vector<long> slope_multiset() const;
};

struct SummabilityOrder {
    enum class Kind { convergent, summable };
    Kind kind;
    std::vector<long> levels;
};

// Lower convex hull (monotone chain) of arbitrary lattice points; collinear
// vertices are dropped. Points are sorted by k, and only the lowest m per k
// matters.
std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> points);
std::vector<Slope> hull_slopes(const std::vector<LatticePoint>& hull);

NewtonPolygon newton_polygon(const QDiffOperator& op);
SummabilityOrder summability_order(const NewtonPolygon& np);

} // namespace qeuler
