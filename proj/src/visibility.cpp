#include "geocenter/visibility.hpp"

#include <algorithm>

namespace geocenter {

bool segment_in_domain(const PolygonalDomain& dom, Point a, Point b) {
    const Tolerance& tol = dom.tolerance();
    const double len = dist(a, b);
    if (len <= tol.tau_abs) return true;

    const double lo_x = std::min(a.x, b.x) - tol.tau_abs;
    const double hi_x = std::max(a.x, b.x) + tol.tau_abs;
    const double lo_y = std::min(a.y, b.y) - tol.tau_abs;
    const double hi_y = std::max(a.y, b.y) + tol.tau_abs;

    std::vector<double> splits;
    bool endpoint_on_boundary = false;
    const auto& corners = dom.corners();
    for (const BoundaryEdge& e : dom.edges()) {
        const Point c = corners[e.from].p;
        const Point d = corners[e.to].p;
        if (std::max(c.x, d.x) < lo_x || std::min(c.x, d.x) > hi_x || std::max(c.y, d.y) < lo_y ||
            std::min(c.y, d.y) > hi_y) {
            continue;
        }
        const int o1 = orient(a, b, c, tol);
        const int o2 = orient(a, b, d, tol);
        const int o3 = orient(c, d, a, tol);
        const int o4 = orient(c, d, b, tol);
        if (o1 * o2 < 0 && o3 * o4 < 0) return false;

        if (o1 == 0 && distance_to_segment(c, a, b) <= tol.tau_abs) {
            if (dist(c, a) > tol.tau_abs && dist(c, b) > tol.tau_abs) splits.push_back(project_param(c, a, b));
        }
        if (!endpoint_on_boundary && ((o3 == 0 && distance_to_segment(a, c, d) <= tol.tau_abs) ||
                                      (o4 == 0 && distance_to_segment(b, c, d) <= tol.tau_abs))) {
            endpoint_on_boundary = true;
        }
    }
    if (splits.empty() && !endpoint_on_boundary) return true;

    // Between consecutive contacts the open segment lies wholly inside, wholly
    // outside, or along the boundary, so one midpoint per piece decides.
    splits.push_back(0.0);
    splits.push_back(1.0);
    std::sort(splits.begin(), splits.end());
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        if ((splits[i + 1] - splits[i]) * len <= tol.tau_abs) continue;
        const double t = 0.5 * (splits[i] + splits[i + 1]);
        if (!dom.in_domain(a + t * (b - a))) return false;
    }
    return true;
}

bool visible(const PolygonalDomain& dom, Point a, Point b) {
    dom.require_inside(a);
    dom.require_inside(b);
    return segment_in_domain(dom, a, b);
}

std::vector<std::size_t> visible_corners(const PolygonalDomain& dom, Point p) {
    dom.require_inside(p);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dom.corner_count(); ++i) {
        if (segment_in_domain(dom, p, dom.corners()[i].p)) out.push_back(i);
    }
    return out;
}

VisibilityGraph::VisibilityGraph(const PolygonalDomain& dom) {
    const std::size_t n = dom.corner_count();
    adjacency_.resize(n);
    matrix_.assign(n * n, 0);
    const auto& corners = dom.corners();
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!segment_in_domain(dom, corners[u].p, corners[v].p)) continue;
            const double w = dist(corners[u].p, corners[v].p);
            adjacency_[u].push_back({v, w});
            adjacency_[v].push_back({u, w});
            matrix_[u * n + v] = matrix_[v * n + u] = 1;
            ++edge_count_;
        }
    }
    for (auto& arcs : adjacency_) {
        std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }
}

}  // namespace geocenter
