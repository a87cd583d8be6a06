#include "qeuler/newton.hpp"

#include <algorithm>
#include <numeric>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

// Cross product of (a - o) and (b - o); > 0 for a counter-clockwise turn.
long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.k - o.k) * (b.m - o.m) - (a.m - o.m) * (b.k - o.k);
}

} // namespace

std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.k != b.k ? a.k < b.k : a.m < b.m;
    });
    // Keep the lowest point of each column.
    points.erase(std::unique(points.begin(), points.end(),
                             [](const LatticePoint& a, const LatticePoint& b) { return a.k == b.k; }),
                 points.end());
    std::vector<LatticePoint> hull;
    for (const auto& p : points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    return hull;
}

std::vector<Slope> hull_slopes(const std::vector<LatticePoint>& hull) {
    std::vector<Slope> out;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long dm = hull[i].m - hull[i - 1].m;
        long dk = hull[i].k - hull[i - 1].k;
        const long g = std::gcd(dm, dk);
        out.push_back({dm / g, dk / g, dk});
    }
    return out;
}

NewtonPolygon NewtonPolygon::display_normalized() const {
    NewtonPolygon np = *this;
    if (points.empty()) {
        return np;
    }
    const long lo = std::min_element(points.begin(), points.end(), [](const auto& a, const auto& b) {
                        return a.m < b.m;
                    })->m;
    for (auto& p : np.points) {
        p.m -= lo;
    }
    for (auto& p : np.hull) {
        p.m -= lo;
    }
    return np;
}

std::vector<long> NewtonPolygon::slope_multiset() const {
    std::vector<long> out;
    for (const auto& s : slopes) {
        if (!s.is_integer()) {
            throw non_integer_slope("slope " + std::to_string(s.num) + "/" + std::to_string(s.den) + " is not an integer");
        }
        out.insert(out.end(), static_cast<std::size_t>(s.length), s.num);
    }
    return out;
}

NewtonPolygon newton_polygon(const QDiffOperator& op) {
    if (op.is_zero()) {
        throw missing_endpoint_coefficient("the zero operator has no Newton polygon");
    }
    if (op.coefficient(0).is_canonical_zero()) {
        throw missing_endpoint_coefficient("coefficient of sigma^0 vanishes");
    }
    NewtonPolygon np;
    for (const auto& [k, a] : op.terms()) {
        np.points.push_back({k, a.valuation()});
    }
    np.hull = lower_hull(np.points);
    np.slopes = hull_slopes(np.hull);
    return np;
}

SummabilityOrder summability_order(const NewtonPolygon& np) {
    std::vector<long> levels;
    for (const auto& s : np.slopes) {
        if (!s.is_integer()) {
            throw non_integer_slope("slope " + std::to_string(s.num) + "/" + std::to_string(s.den) +
                                    " is not an integer; the classifier covers integer slopes only");
        }
        if (s.num > 0) {
            levels.push_back(s.num);
        }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return {levels.empty() ? SummabilityOrder::Kind::convergent : SummabilityOrder::Kind::summable, levels};
}

} // namespace qeuler
