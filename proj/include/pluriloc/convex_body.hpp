#pragma once

#include <string>
#include <vector>

#include "pluriloc/types.hpp"

namespace pluriloc {

struct HalfSpace {
    RVec normal;  // unit vector
    double offset = 0.0;  // <x, normal> <= offset
};

/// Intersection of half-spaces; in 2D also carries the vertex polygon
/// (counterclockwise). 3D bodies stay in half-space form.
struct ConvexBody {
    int dimension = 0;
    std::vector<HalfSpace> halfspaces;
    std::vector<RVec> polygon;  // 2D only

    bool contains(const RVec& x, double slack = 1e-9) const;
    /// Minimum over half-spaces of offset - <x, normal>; negative outside.
    double min_slack(const RVec& x) const;
    /// Supporting function from the polygon (2D with a built polygon only).
    double polygon_support(const RVec& direction) const;

    std::string to_json() const;
    std::string polygon_csv() const;
};

struct PolygonBuild {
    bool empty = false;
    bool bounded = true;
    std::vector<RVec> vertices;       // CCW
    RVec chebyshev_center;
    double chebyshev_radius = 0.0;
    std::vector<char> redundant;      // per input half-space, slack test on the polygon
};

/// 2D half-plane intersection: a Chebyshev-center solve certifies interior
/// or emptiness, then boundary lines sorted by angle are walked with a deque
/// and consecutive active constraints intersected; redundant half-planes are
/// identified by a vertex slack test.
PolygonBuild intersect_halfplanes(const std::vector<HalfSpace>& hs, double tol = 1e-9);

/// Body from half-spaces; builds the polygon when dimension == 2.
/// Throws when the intersection is empty or unbounded.
ConvexBody make_body(int dimension, std::vector<HalfSpace> hs);

}  // namespace pluriloc
