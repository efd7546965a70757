#include "pluriloc/convex_body.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pluriloc/simplex.hpp"

namespace pluriloc {

bool ConvexBody::contains(const RVec& x, double slack) const {
    return min_slack(x) >= -slack;
}

double ConvexBody::min_slack(const RVec& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& h : halfspaces) m = std::min(m, h.offset - dot(x, h.normal));
    return m;
}

double ConvexBody::polygon_support(const RVec& direction) const {
    if (polygon.empty()) throw std::logic_error("polygon_support: no polygon available");
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& v : polygon) s = std::max(s, dot(v, direction));
    return s;
}

std::string ConvexBody::to_json() const {
    nlohmann::json j;
    auto hs = nlohmann::json::array();
    for (const auto& h : halfspaces) {
        auto row = h.normal;
        row.push_back(h.offset);
        hs.push_back(row);
    }
    j["halfspaces"] = hs;
    auto poly = nlohmann::json::array();
    for (const auto& v : polygon) poly.push_back(v);
    j["polygon"] = poly;
    return j.dump();
}

std::string ConvexBody::polygon_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "x,y\n";
    for (const auto& v : polygon) os << v[0] << ',' << v[1] << '\n';
    return os.str();
}

namespace {

struct BoundaryLine {
    RVec n;
    double h = 0.0;
    double ang = 0.0;
    int source = -1;  // input half-space index
};

RVec line_intersection(const BoundaryLine& a, const BoundaryLine& b) {
    const double det = a.n[0] * b.n[1] - a.n[1] * b.n[0];
    if (std::abs(det) < 1e-14)
        throw std::runtime_error("intersect_halfplanes: near-parallel active constraints");
    return RVec{(a.h * b.n[1] - b.h * a.n[1]) / det, (a.n[0] * b.h - b.n[0] * a.h) / det};
}

bool violates(const BoundaryLine& a, const BoundaryLine& b, const BoundaryLine& test,
              double tol) {
    const RVec x = line_intersection(a, b);
    return dot(x, test.n) > test.h + tol;
}

}  // namespace

PolygonBuild intersect_halfplanes(const std::vector<HalfSpace>& hs, double tol) {
    PolygonBuild out;
    if (hs.empty()) throw std::invalid_argument("intersect_halfplanes: empty half-space list");

    // Chebyshev center: max r with <n_i, p> + r <= h_i. Certifies interior/empty.
    FreeVarLP lp;
    lp.nvars = 3;
    lp.objective = RVec{0.0, 0.0, 1.0};
    for (const auto& h : hs) {
        lp.ineq_rows.push_back(RVec{h.normal[0], h.normal[1], 1.0});
        lp.ineq_rhs.push_back(h.offset);
    }
    const FreeVarLPResult cheb = solve_max_free(lp);
    if (cheb.status == LPStatus::Unbounded) {
        out.bounded = false;
        return out;
    }
    if (cheb.status != LPStatus::Optimal)
        throw std::runtime_error("intersect_halfplanes: Chebyshev LP failed");
    out.chebyshev_center = RVec{cheb.x[0], cheb.x[1]};
    out.chebyshev_radius = cheb.x[2];
    if (cheb.x[2] <= tol) {
        out.empty = true;  // empty or lower-dimensional
        return out;
    }

    std::vector<BoundaryLine> lines;
    lines.reserve(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        BoundaryLine L;
        L.n = hs[i].normal;
        L.h = hs[i].offset;
        L.ang = std::atan2(L.n[1], L.n[0]);
        L.source = static_cast<int>(i);
        lines.push_back(std::move(L));
    }
    std::sort(lines.begin(), lines.end(), [](const BoundaryLine& a, const BoundaryLine& b) {
        return a.ang < b.ang;
    });
    // near-parallel duplicates: keep the tighter one
    std::vector<BoundaryLine> uniq;
    for (const auto& L : lines) {
        if (!uniq.empty() && std::abs(L.ang - uniq.back().ang) < 1e-12) {
            if (L.h < uniq.back().h) uniq.back() = L;
        } else {
            uniq.push_back(L);
        }
    }

    std::deque<BoundaryLine> dq;
    for (const auto& L : uniq) {
        while (dq.size() >= 2 && violates(dq[dq.size() - 2], dq[dq.size() - 1], L, 0.0)) dq.pop_back();
        while (dq.size() >= 2 && violates(dq[0], dq[1], L, 0.0)) dq.pop_front();
        dq.push_back(L);
    }
    while (dq.size() >= 3 && violates(dq[dq.size() - 2], dq[dq.size() - 1], dq[0], 0.0)) dq.pop_back();
    while (dq.size() >= 3 && violates(dq[0], dq[1], dq[dq.size() - 1], 0.0)) dq.pop_front();

    if (dq.size() < 3) {
        out.empty = true;
        return out;
    }
    for (std::size_t i = 0; i < dq.size(); ++i)
        out.vertices.push_back(line_intersection(dq[i], dq[(i + 1) % dq.size()]));

    out.redundant.assign(hs.size(), 1);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        double slack = std::numeric_limits<double>::infinity();
        for (const auto& v : out.vertices)
            slack = std::min(slack, hs[i].offset - dot(v, hs[i].normal));
        if (slack < 1e-7 * std::max(1.0, std::abs(hs[i].offset))) out.redundant[i] = 0;
    }
    return out;
}

ConvexBody make_body(int dimension, std::vector<HalfSpace> hs) {
    if (hs.empty()) throw std::invalid_argument("make_body: empty half-space list");
    for (auto& h : hs) {
        if (static_cast<int>(h.normal.size()) != dimension)
            throw std::invalid_argument("make_body: half-space dimension mismatch");
        const double n = euclid_norm(h.normal);
        if (n < 1e-14) throw std::invalid_argument("make_body: zero normal");
        for (auto& c : h.normal) c /= n;
        h.offset /= n;
    }
    ConvexBody body;
    body.dimension = dimension;
    body.halfspaces = std::move(hs);
    if (dimension == 2) {
        const PolygonBuild pb = intersect_halfplanes(body.halfspaces);
        if (!pb.bounded) throw std::runtime_error("make_body: unbounded intersection");
        if (pb.empty) throw std::runtime_error("make_body: empty intersection");
        body.polygon = pb.vertices;
    }
    return body;
}

}  // namespace pluriloc
