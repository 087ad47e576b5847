#include "geocenter/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace geocenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using QueueItem = std::pair<double, std::size_t>;
using MinQueue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

void relax_all(const VisibilityGraph& graph, std::vector<double>& dist, MinQueue& queue) {
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        for (const auto& arc : graph.neighbors(u)) {
            const double nd = d + arc.length;
            if (nd < dist[arc.to]) {
                dist[arc.to] = nd;
                queue.push({nd, arc.to});
            }
        }
    }
}

}  // namespace

DistanceTable corner_distance_table(const PolygonalDomain& dom, const VisibilityGraph& graph) {
    const std::size_t n = dom.corner_count();
    DistanceTable table(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<double> dist(n, kInf);
        dist[src] = 0.0;
        MinQueue queue;
        queue.push({0.0, src});
        relax_all(graph, dist, queue);
        for (std::size_t v = 0; v < n; ++v) table.at(src, v) = dist[v];
    }
    // Symmetrize against rounding in the summation order.
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double m = std::min(table(u, v), table(v, u));
            table.at(u, v) = table.at(v, u) = m;
        }
    }
    return table;
}

Geodesics::Geodesics(PolygonalDomain dom)
    : dom_(std::make_shared<const PolygonalDomain>(std::move(dom))),
      graph_(*dom_),
      table_(corner_distance_table(*dom_, graph_)) {}

std::vector<double> Geodesics::dijkstra_from(Point s, const std::vector<std::size_t>& seen) const {
    const auto& corners = dom_->corners();
    std::vector<double> dist(corners.size(), kInf);
    MinQueue queue;
    for (std::size_t v : seen) {
        dist[v] = ::geocenter::dist(s, corners[v].p);
        queue.push({dist[v], v});
    }
    relax_all(graph_, dist, queue);
    return dist;
}

GeodesicResult Geodesics::distance(Point s, Point t) const {
    dom_->require_inside(s);
    dom_->require_inside(t);
    GeodesicResult out;
    out.path.source = s;
    out.path.target = t;
    if (segment_in_domain(*dom_, s, t)) {
        out.distance = out.path.length = ::geocenter::dist(s, t);
        return out;
    }

    const auto& corners = dom_->corners();
    const std::vector<std::size_t> seen_by_t = visible_corners(*dom_, t);
    const std::vector<std::size_t> seen_by_s = visible_corners(*dom_, s);
    const std::vector<double> to_t = dijkstra_from(t, seen_by_t);
    std::vector<char> sees_t(corners.size(), 0);
    for (std::size_t v : seen_by_t) sees_t[v] = 1;

    double best = kInf;
    for (std::size_t u : seen_by_s) best = std::min(best, ::geocenter::dist(s, corners[u].p) + to_t[u]);
    out.distance = best;

    // Walk forward choosing the smallest tight corner at every step.
    const Tolerance& tol = dom_->tolerance();
    const double slack = tol.slack(best);
    double remaining = best;
    std::vector<std::size_t> options = seen_by_s;
    Point cur = s;
    for (std::size_t step = 0; step <= corners.size(); ++step) {
        std::size_t chosen = corners.size();
        for (std::size_t v : options) {
            if (::geocenter::dist(cur, corners[v].p) + to_t[v] <= remaining + slack) {
                chosen = v;
                break;
            }
        }
        if (chosen == corners.size()) break;
        out.path.corners.push_back(chosen);
        cur = corners[chosen].p;
        remaining = to_t[chosen];
        if (sees_t[chosen] && ::geocenter::dist(cur, t) <= remaining + slack) break;
        options.clear();
        for (const auto& arc : graph_.neighbors(chosen)) options.push_back(arc.to);
    }

    Point prev = s;
    double len = 0.0;
    for (std::size_t v : out.path.corners) {
        len += ::geocenter::dist(prev, corners[v].p);
        prev = corners[v].p;
    }
    out.path.length = len + ::geocenter::dist(prev, t);
    return out;
}

double Geodesics::path_length(std::size_t u, std::size_t v, Point s, Point t) const {
    const auto& corners = dom_->corners();
    if (u >= corners.size() || v >= corners.size()) throw PreconditionError("path_length: corner index out of range");
    dom_->require_inside(s);
    dom_->require_inside(t);
    if (!segment_in_domain(*dom_, s, corners[u].p)) throw PreconditionError("path_length: s does not see u");
    if (!segment_in_domain(*dom_, t, corners[v].p)) throw PreconditionError("path_length: t does not see v");
    return ::geocenter::dist(s, corners[u].p) + table_(u, v) + ::geocenter::dist(corners[v].p, t);
}

ShortestPathTree Geodesics::shortest_path_tree(Point s) const {
    dom_->require_inside(s);
    const auto& corners = dom_->corners();
    const std::size_t n = corners.size();
    const std::vector<std::size_t> seen = visible_corners(*dom_, s);

    ShortestPathTree tree;
    tree.source = s;
    tree.dist = dijkstra_from(s, seen);
    tree.sees_source.assign(n, 0);
    for (std::size_t v : seen) tree.sees_source[v] = 1;
    tree.parent.assign(n, kSourceNode);
    tree.tied_parents.assign(n, {});

    const Tolerance& tol = dom_->tolerance();
    for (std::size_t v = 0; v < n; ++v) {
        const double target = tree.dist[v];
        const double slack = tol.slack(target);
        auto& ties = tree.tied_parents[v];
        if (tree.sees_source[v] && ::geocenter::dist(s, corners[v].p) <= target + slack) ties.push_back(kSourceNode);
        for (const auto& arc : graph_.neighbors(v)) {
            const std::size_t u = arc.to;
            if (tree.dist[u] + arc.length <= target + slack && tree.dist[u] < target) {
                ties.push_back(static_cast<long>(u));
            }
        }
        if (!ties.empty()) tree.parent[v] = ties.front();
    }
    return tree;
}

double Geodesics::distance_via(const ShortestPathTree& tree, Point x) const {
    if (segment_in_domain(*dom_, tree.source, x)) return ::geocenter::dist(tree.source, x);
    const auto& corners = dom_->corners();
    const std::size_t n = corners.size();
    std::vector<std::pair<double, std::size_t>> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = {tree.dist[v] + ::geocenter::dist(corners[v].p, x), v};
    std::sort(order.begin(), order.end());
    for (const auto& [value, v] : order) {
        if (segment_in_domain(*dom_, corners[v].p, x)) return value;
    }
    return kInf;
}

}  // namespace geocenter
