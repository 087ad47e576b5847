#include "geocenter/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "geocenter/spm.hpp"
#include "geocenter/visibility.hpp"

namespace geocenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lattice neighbors are joined up to this fraction of the longest box side.
constexpr double kLinkRadius = 0.1;

}  // namespace

DenseGraph::DenseGraph(const PolygonalDomain& dom, std::size_t k) : dom_(dom), k_(k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const BoundingBox& box = dom_.bbox();
    spacing_ = {box.width() / static_cast<double>(k), box.height() / static_cast<double>(k)};
    for (const Corner& c : dom_.corners()) nodes_.push_back(c.p);
    const double tau = dom_.tolerance().tau_abs;
    for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = 0; j <= k; ++j) {
            const Point p{box.min_x + static_cast<double>(i) * spacing_.x, box.min_y + static_cast<double>(j) * spacing_.y};
            if (!dom_.in_domain(p)) continue;
            if (auto c = dom_.corner_at(p); c && dist(dom_.corners()[*c].p, p) <= tau) continue;
            nodes_.push_back(p);
        }
    }

    const std::size_t n = nodes_.size();
    const std::size_t nc = dom_.corner_count();
    adj_.resize(n);
    auto link = [this](std::size_t u, std::size_t v) {
        if (!segment_in_domain(dom_, nodes_[u], nodes_[v])) return;
        const double w = dist(nodes_[u], nodes_[v]);
        adj_[u].push_back({v, w});
        adj_[v].push_back({u, w});
    };
    for (std::size_t u = 0; u < nc; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) link(u, v);
    }
    const double radius = kLinkRadius * box.longest_side();
    for (std::size_t u = nc; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (nodes_[v].x - nodes_[u].x > radius) break;  // samples are ordered by x
            if (dist(nodes_[u], nodes_[v]) <= radius) link(u, v);
        }
    }
}

std::vector<double> DenseGraph::distances_from(Point s) const {
    dom_.require_inside(s);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    std::vector<double> d(nodes_.size(), kInf);
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (!segment_in_domain(dom_, s, nodes_[v])) continue;
        d[v] = dist(s, nodes_[v]);
        queue.push({d[v], v});
    }
    while (!queue.empty()) {
        const auto [du, u] = queue.top();
        queue.pop();
        if (du > d[u]) continue;
        for (const Arc& a : adj_[u]) {
            if (du + a.length < d[a.to]) {
                d[a.to] = du + a.length;
                queue.push({d[a.to], a.to});
            }
        }
    }
    return d;
}

double DenseGraph::distance(Point s, Point t) const {
    dom_.require_inside(t);
    const std::vector<double> d = distances_from(s);
    if (segment_in_domain(dom_, s, t)) return dist(s, t);
    double best = kInf;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (d[v] + dist(nodes_[v], t) < best && segment_in_domain(dom_, nodes_[v], t)) best = d[v] + dist(nodes_[v], t);
    }
    return best;
}

double dense_distance(const PolygonalDomain& dom, Point s, Point t, std::size_t k) {
    dom.require_inside(s);
    dom.require_inside(t);
    return DenseGraph(dom, k).distance(s, t);
}

BrutePhi brute_phi(const DenseGraph& graph, Point p) {
    const std::vector<double> d = graph.distances_from(p);
    BrutePhi out;
    out.argmax = p;
    // Corners come first, so an exact corner maximum wins ties with samples.
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (d[v] > out.value) {
            out.value = d[v];
            out.argmax = graph.nodes()[v];
        }
    }
    return out;
}

BrutePhi brute_phi(const PolygonalDomain& dom, Point p, std::size_t k) { return brute_phi(DenseGraph(dom, k), p); }

std::size_t Lemma1Report::passed() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const Lemma1Trial& t) { return t.pass(); }));
}

Lemma1Report check_lemma1(const Geodesics& geo, std::size_t trials, std::size_t k, std::uint64_t seed) {
    const PolygonalDomain& dom = geo.domain();
    const DenseGraph graph(dom, k);
    Lemma1Report report;
    report.k = k;
    report.spacing = std::max(graph.spacing().x, graph.spacing().y);
    report.bound = 2.0 * graph.cell_diagonal();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        Lemma1Trial trial;
        trial.p = random_point(dom, rng);
        const BrutePhi brute = brute_phi(graph, trial.p);
        trial.brute = brute.value;
        trial.argmax = brute.argmax;
        SpmOptions options;
        options.vertices_only = true;
        const ShortestPathMap spm = build_spm(geo, trial.p, options);
        trial.vertex_gap = kInf;
        for (const SpmVertex& v : spm.vertices()) {
            trial.phi = std::max(trial.phi, v.distance);
            trial.vertex_gap = std::min(trial.vertex_gap, dist(v.p, brute.argmax));
        }
        trial.near_vertex = trial.vertex_gap <= 2.0 * report.spacing;
        trial.value_ok = std::abs(trial.brute - trial.phi) <= report.bound;
        report.trials.push_back(trial);
    }
    return report;
}

Point random_point(const PolygonalDomain& dom, std::mt19937_64& rng) {
    const BoundingBox& box = dom.bbox();
    std::uniform_real_distribution<double> ux(box.min_x, box.max_x);
    std::uniform_real_distribution<double> uy(box.min_y, box.max_y);
    for (;;) {
        const Point p{ux(rng), uy(rng)};
        if (dom.in_domain(p)) return p;
    }
}

namespace {

// Ring of points at sorted random angles with radius `radius(angle)` around c.
template <typename Radius>
Ring star_ring(std::mt19937_64& rng, Point c, std::size_t count, Radius radius) {
    std::uniform_real_distribution<double> ua(0.0, 2.0 * std::numbers::pi);
    std::vector<double> angles(count);
    for (double& a : angles) a = ua(rng);
    std::sort(angles.begin(), angles.end());
    Ring ring;
    for (double a : angles) {
        const double r = radius(a);
        ring.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    return ring;
}

double min_gap(const Ring& a, const Ring& b) {
    double gap = kInf;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            gap = std::min(gap, distance_to_segment(a[i], b[j], b[(j + 1) % b.size()]));
            gap = std::min(gap, distance_to_segment(b[j], a[i], a[(i + 1) % a.size()]));
        }
    }
    return gap;
}

double min_corner_angle_sin(const Ring& ring) {
    double worst = 1.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[(i + ring.size() - 1) % ring.size()];
        const Point b = ring[i];
        const Point c = ring[(i + 1) % ring.size()];
        const double s = std::abs(cross(b - a, c - b)) / (dist(a, b) * dist(b, c));
        worst = std::min(worst, s);
    }
    return worst;
}

}  // namespace

RawDomain random_domain(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> outer_count(8, 16);
    std::uniform_int_distribution<int> hole_count(1, 3);
    std::uniform_int_distribution<int> hole_corners(3, 6);
    std::uniform_real_distribution<double> wobble(0.8, 1.15);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        RawDomain raw;
        raw.outer = star_ring(rng, {0, 0}, static_cast<std::size_t>(outer_count(rng)), [&](double) { return 10.0 * wobble(rng); });
        if (min_corner_angle_sin(raw.outer) < 0.05) continue;
        const int holes = hole_count(rng);
        for (int attempt = 0; attempt < 200 && static_cast<int>(raw.holes.size()) < holes; ++attempt) {
            const double r = 1.0 + 2.0 * unit(rng);
            const double rho = 7.0 * std::sqrt(unit(rng));
            const double theta = 2.0 * std::numbers::pi * unit(rng);
            const Point c{rho * std::cos(theta), rho * std::sin(theta)};
            // Points on a circle in angular order form a convex polygon.
            Ring hole = star_ring(rng, c, static_cast<std::size_t>(hole_corners(rng)), [r](double) { return r; });
            if (signed_area(hole) < 0.3 * r * r || min_corner_angle_sin(hole) < 0.05) continue;
            bool clear = min_gap(hole, raw.outer) > 0.3;
            for (const Ring& other : raw.holes) clear = clear && min_gap(hole, other) > 0.3;
            if (!clear || locate_in_ring(c, raw.outer) != Location::inside) continue;
            std::reverse(hole.begin(), hole.end());
            raw.holes.push_back(std::move(hole));
        }
        if (raw.holes.empty()) continue;
        if (validate(raw.outer, raw.holes).ok) return raw;
    }
}

RawDomain random_simple_polygon(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(8, 20);
    std::uniform_real_distribution<double> radius(3.0, 10.0);
    for (;;) {
        RawDomain raw;
        raw.outer = star_ring(rng, {0, 0}, static_cast<std::size_t>(count(rng)), [&](double) { return radius(rng); });
        if (min_corner_angle_sin(raw.outer) < 0.05) continue;
        if (validate(raw.outer, {}).ok) return raw;
    }
}

}  // namespace geocenter
