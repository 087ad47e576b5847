#include "geocenter/geom.hpp"

#include <algorithm>

namespace geocenter {

int orient(Point a, Point b, Point c, const Tolerance& tol) {
    const double area2 = cross(b - a, c - a);
    const double longest = std::max({dist(a, b), dist(b, c), dist(c, a)});
    // |area2| / longest is the height over the longest side.
    if (std::abs(area2) <= tol.tau_abs * longest) return 0;
    return area2 > 0 ? 1 : -1;
}

double distance_to_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

double project_param(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    return len2 == 0.0 ? 0.0 : dot(p - a, ab) / len2;
}

namespace {

Point line_crossing(Point a, Point b, Point c, Point d) {
    // Average of the two parametric solutions keeps the witness symmetric in the
    // argument order.
    const Point r = b - a;
    const Point s = d - c;
    const double den = cross(r, s);
    const double t = cross(c - a, s) / den;
    const double u = cross(c - a, r) / den;
    return 0.5 * ((a + t * r) + (c + u * s));
}

}  // namespace

SegmentContact segment_intersection(Point a, Point b, Point c, Point d, const Tolerance& tol) {
    if (dist(a, b) <= tol.tau_abs || dist(c, d) <= tol.tau_abs) {
        throw GeometryError("segment_intersection: zero-length segment");
    }
    const int o1 = orient(a, b, c, tol);
    const int o2 = orient(a, b, d, tol);
    const int o3 = orient(c, d, a, tol);
    const int o4 = orient(c, d, b, tol);

    SegmentContact out;
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Collinear: intersect the parameter intervals along the longer segment.
        const bool ab_longer = dist(a, b) >= dist(c, d);
        const Point p = ab_longer ? a : c;
        const Point q = ab_longer ? b : d;
        const double len = dist(p, q);
        double lo = 0.0;
        double hi = 1.0;
        double t1 = project_param(ab_longer ? c : a, p, q);
        double t2 = project_param(ab_longer ? d : b, p, q);
        if (t1 > t2) std::swap(t1, t2);
        lo = std::max(lo, t1);
        hi = std::min(hi, t2);
        const double eps = tol.tau_abs / len;
        if (hi < lo - eps) return out;
        const Point w0 = p + lo * (q - p);
        const Point w1 = p + hi * (q - p);
        if ((hi - lo) * len <= tol.tau_abs) {
            out.kind = ContactKind::touch;
            out.witness = {0.5 * (w0 + w1), 0.5 * (w0 + w1)};
        } else {
            out.kind = ContactKind::overlap;
            out.witness = lex_less(w0, w1) ? std::array{w0, w1} : std::array{w1, w0};
        }
        return out;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        out.kind = ContactKind::crossing;
        out.witness[0] = out.witness[1] = line_crossing(a, b, c, d);
        return out;
    }
    // Endpoint contacts, checked in an order-independent way.
    std::array<Point, 4> candidates{};
    int found = 0;
    if (o1 == 0 && distance_to_segment(c, a, b) <= tol.tau_abs) candidates[found++] = c;
    if (o2 == 0 && distance_to_segment(d, a, b) <= tol.tau_abs) candidates[found++] = d;
    if (o3 == 0 && distance_to_segment(a, c, d) <= tol.tau_abs) candidates[found++] = a;
    if (o4 == 0 && distance_to_segment(b, c, d) <= tol.tau_abs) candidates[found++] = b;
    if (found == 0) return out;
    Point best = candidates[0];
    for (int i = 1; i < found; ++i) {
        if (lex_less(candidates[i], best)) best = candidates[i];
    }
    out.kind = ContactKind::touch;
    out.witness = {best, best};
    return out;
}

Location locate_in_ring(Point p, std::span<const Point> ring, const Tolerance& tol) {
    const std::size_t m = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const Point a = ring[j];
        const Point b = ring[i];
        if (distance_to_segment(p, a, b) <= tol.tau_abs) return Location::boundary;
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside ? Location::inside : Location::outside;
}

bool is_simple_ring(std::span<const Point> ring, const Tolerance& tol) {
    const std::size_t m = ring.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % m];
        if (dist(a, b) <= tol.tau_abs) return false;
        for (std::size_t j = i + 1; j < m; ++j) {
            const Point c = ring[j];
            const Point d = ring[(j + 1) % m];
            const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            const SegmentContact hit = segment_intersection(a, b, c, d, tol);
            if (hit.kind == ContactKind::disjoint) continue;
            if (!adjacent) return false;
            // Adjacent edges may only share their common endpoint.
            if (hit.kind != ContactKind::touch) return false;
        }
    }
    return true;
}

Location point_in_ring(Point p, std::span<const Point> ring, const Tolerance& tol) {
    if (!is_simple_ring(ring, tol)) throw GeometryError("point_in_ring: ring is not simple");
    return locate_in_ring(p, ring, tol);
}

double signed_area(std::span<const Point> ring) {
    double acc = 0.0;
    const std::size_t m = ring.size();
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) acc += cross(ring[j], ring[i]);
    return 0.5 * acc;
}

}  // namespace geocenter
