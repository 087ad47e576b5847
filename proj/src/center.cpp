#include "geocenter/center.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace geocenter {

namespace {

void require_eps(double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
}

// Removes points closer than `tol` to an earlier one in lexicographic order.
std::vector<Point> dedupe(std::vector<Point> pts, double tol) {
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dup = false;
        for (auto it = out.rbegin(); it != out.rend() && p.x - it->x <= tol; ++it) {
            if (dist(*it, p) <= tol) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(p);
    }
    return out;
}

CenterEstimate estimate_at(const Geodesics& geo, Point c) {
    FarthestNeighbors fn = farthest_neighbors(geo, c);
    CenterEstimate est;
    est.c = c;
    est.upper = fn.phi;
    est.witnesses = std::move(fn.witnesses);
    return est;
}

}  // namespace

std::size_t worker_count() {
    if (const char* env = std::getenv("GEODESIC_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) return static_cast<std::size_t>(n);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<double> phi_many(const Geodesics& geo, const std::vector<Point>& points) {
    std::vector<double> out(points.size());
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(points.size(), 1));
    auto work = [&](std::size_t begin) {
        for (std::size_t i = begin; i < points.size(); i += workers) out[i] = phi(geo, points[i]);
    };
    if (workers == 1) {
        work(0);
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    return out;
}

Bounds two_approx_radius(const Geodesics& geo, Point s) {
    const double u = phi(geo, s);
    return {u / 2.0, u};
}

CandidateSet grid_candidates(const PolygonalDomain& dom, double eps) {
    require_eps(eps);
    const BoundingBox& box = dom.bbox();
    CandidateSet set;
    set.step = eps / (4.0 * std::numbers::sqrt2) * box.longest_side();
    const double g = set.step;
    const auto nx = static_cast<long>(std::floor(box.width() / g));
    const auto ny = static_cast<long>(std::floor(box.height() / g));

    std::vector<Point> pts;
    for (long i = 0; i <= nx; ++i) {
        for (long j = 0; j <= ny; ++j) {
            const Point p{box.min_x + static_cast<double>(i) * g, box.min_y + static_cast<double>(j) * g};
            if (dom.in_domain(p)) pts.push_back(p);
        }
    }
    for (std::size_t e = 0; e < dom.edges().size(); ++e) {
        const Point a = dom.edge_start(e);
        const Point b = dom.edge_end(e);
        if (a.x != b.x) {
            const long lo = static_cast<long>(std::ceil((std::min(a.x, b.x) - box.min_x) / g));
            const long hi = static_cast<long>(std::floor((std::max(a.x, b.x) - box.min_x) / g));
            for (long i = lo; i <= hi; ++i) {
                const double x = box.min_x + static_cast<double>(i) * g;
                const double t = (x - a.x) / (b.x - a.x);
                pts.push_back({x, a.y + t * (b.y - a.y)});
            }
        }
        if (a.y != b.y) {
            const long lo = static_cast<long>(std::ceil((std::min(a.y, b.y) - box.min_y) / g));
            const long hi = static_cast<long>(std::floor((std::max(a.y, b.y) - box.min_y) / g));
            for (long j = lo; j <= hi; ++j) {
                const double y = box.min_y + static_cast<double>(j) * g;
                const double t = (y - a.y) / (b.y - a.y);
                pts.push_back({a.x + t * (b.x - a.x), y});
            }
        }
    }
    for (const Corner& c : dom.corners()) pts.push_back(c.p);
    std::erase_if(pts, [&dom](Point p) { return !dom.in_domain(p); });
    set.points = dedupe(std::move(pts), dom.tolerance().tau_abs);
    return set;
}

CenterEstimate approx_center(const Geodesics& geo, double eps) {
    const CandidateSet set = grid_candidates(geo.domain(), eps);
    const std::vector<double> values = phi_many(geo, set.points);
    // Points are sorted, so the first minimum is the lexicographically smallest.
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    CenterEstimate est = estimate_at(geo, set.points[best]);
    est.eps = eps;
    est.lower = est.upper / (1.0 + eps);
    est.candidates_evaluated = set.points.size();
    const double slack = geo.domain().tolerance().slack(est.upper);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != best && values[i] <= values[best] + slack) est.near_ties.push_back(set.points[i]);
    }
    return est;
}

namespace {

CenterEstimate pattern_search(const Geodesics& geo, Point start, double step, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const PolygonalDomain& dom = geo.domain();
    dom.require_inside(start);
    constexpr int kDirections = 16;
    constexpr double kGolden = 0.6180339887498949;
    Point cur = start;
    double best = phi(geo, cur);
    std::size_t evaluated = 1;
    step = std::max(step, tol);
    for (long round = 0; step >= tol && round < 100000; ++round) {
        // Rotate the poll so that narrow descent cones are eventually hit.
        const double offset = std::fmod(static_cast<double>(round) * kGolden, 1.0);
        Point next = cur;
        double next_value = best;
        for (int k = 0; k < kDirections; ++k) {
            const double angle = 2.0 * std::numbers::pi * (k + offset) / kDirections;
            const Point cand = cur + step * Point{std::cos(angle), std::sin(angle)};
            if (!dom.in_domain(cand)) continue;
            const double v = phi(geo, cand);
            ++evaluated;
            if (v < next_value) {
                next = cand;
                next_value = v;
            }
        }
        if (next_value < best) {
            cur = next;
            best = next_value;
        } else {
            step /= 2.0;
        }
    }
    CenterEstimate est = estimate_at(geo, cur);
    est.candidates_evaluated = evaluated;
    return est;
}

}  // namespace

CenterEstimate refine_center(const Geodesics& geo, Point start, double tol) {
    CenterEstimate est = pattern_search(geo, start, 0.1 * geo.domain().bbox().longest_side(), tol);
    est.lower = phi(geo, start) / 2.0;
    est.eps = 1.0;
    return est;
}

CenterEstimate refine_center(const Geodesics& geo, const CenterEstimate& start, double tol) {
    const double step = start.eps / (4.0 * std::numbers::sqrt2) * geo.domain().bbox().longest_side();
    CenterEstimate est = pattern_search(geo, start.c, step, tol);
    if (est.upper > start.upper) est = start;
    est.lower = start.lower;
    est.eps = start.eps;
    est.near_ties.clear();
    return est;
}

DiameterEstimate approx_diameter(const Geodesics& geo, double eps) {
    const CandidateSet set = grid_candidates(geo.domain(), eps);
    const std::vector<double> values = phi_many(geo, set.points);
    const auto best = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
    DiameterEstimate out;
    out.eps = eps;
    out.lower = values[best];
    out.upper = (1.0 + eps) * out.lower;
    out.from = set.points[best];
    const FarthestNeighbors fn = farthest_neighbors(geo, out.from);
    out.to = fn.witnesses.empty() ? out.from : fn.witnesses.front().p;
    return out;
}

}  // namespace geocenter
