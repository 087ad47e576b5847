#include "geocenter/domain.hpp"

#include <algorithm>
#include <sstream>

namespace geocenter {

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::too_few_vertices: return "too few vertices";
        case ViolationKind::non_finite_coordinate: return "non-finite coordinate";
        case ViolationKind::degenerate_ring: return "degenerate ring";
        case ViolationKind::ring_not_simple: return "ring not simple";
        case ViolationKind::hole_not_strictly_interior: return "hole not strictly interior";
        case ViolationKind::holes_intersect: return "holes intersect";
    }
    return "unknown";
}

namespace {

std::string ring_name(std::size_t ring) {
    return ring == 0 ? std::string("outer ring") : "hole " + std::to_string(ring - 1);
}

// Drops repeated vertices and vertices lying strictly between their neighbours.
Ring merge_redundant(const Ring& raw, const Tolerance& tol, std::size_t& removed) {
    Ring ring = raw;
    bool changed = true;
    while (changed && ring.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
            const std::size_t m = ring.size();
            const Point prev = ring[(i + m - 1) % m];
            const Point cur = ring[i];
            const Point next = ring[(i + 1) % m];
            const bool duplicate = dist(prev, cur) <= tol.tau_abs;
            const bool straight = orient(prev, cur, next, tol) == 0 && dot(prev - cur, next - cur) < 0.0;
            if (duplicate || straight) {
                ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
                ++removed;
                changed = true;
                break;
            }
        }
    }
    return ring;
}

std::optional<Point> first_contact(const Ring& r1, const Ring& r2, const Tolerance& tol) {
    for (std::size_t i = 0; i < r1.size(); ++i) {
        const Point a = r1[i];
        const Point b = r1[(i + 1) % r1.size()];
        for (std::size_t j = 0; j < r2.size(); ++j) {
            const Point c = r2[j];
            const Point d = r2[(j + 1) % r2.size()];
            const SegmentContact hit = segment_intersection(a, b, c, d, tol);
            if (hit.kind != ContactKind::disjoint) return hit.witness[0];
        }
    }
    return std::nullopt;
}

}  // namespace

ValidationReport validate(const Ring& outer, const std::vector<Ring>& holes) {
    ValidationReport report;
    std::vector<Ring> rings;
    rings.push_back(outer);
    rings.insert(rings.end(), holes.begin(), holes.end());

    auto fail = [&report](ViolationKind kind, std::vector<std::size_t> ids, std::optional<Point> at, std::string detail) {
        report.ok = false;
        report.violations.push_back({kind, std::move(ids), at, std::move(detail)});
    };

    for (std::size_t r = 0; r < rings.size(); ++r) {
        if (rings[r].size() < 3) {
            fail(ViolationKind::too_few_vertices, {r}, std::nullopt, ring_name(r) + " has fewer than 3 vertices");
        }
        for (const Point& p : rings[r]) {
            if (!is_finite(p)) {
                fail(ViolationKind::non_finite_coordinate, {r}, std::nullopt, ring_name(r) + " has a non-finite coordinate");
                break;
            }
        }
    }
    if (!report.ok) return report;

    BoundingBox box{outer[0].x, outer[0].y, outer[0].x, outer[0].y};
    for (const Point& p : outer) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    Tolerance tol;
    tol.tau_abs = std::max(1e-9 * box.diagonal(), 1e-300);

    for (std::size_t r = 0; r < rings.size(); ++r) {
        std::size_t removed = 0;
        rings[r] = merge_redundant(rings[r], tol, removed);
        if (removed > 0) {
            report.corrections.push_back("merged " + std::to_string(removed) + " redundant vertices in " + ring_name(r));
        }
        if (rings[r].size() < 3 || std::abs(signed_area(rings[r])) <= tol.tau_abs * box.diagonal()) {
            fail(ViolationKind::degenerate_ring, {r}, std::nullopt, ring_name(r) + " has zero area");
            continue;
        }
        const bool ccw = signed_area(rings[r]) > 0.0;
        const bool want_ccw = (r == 0);
        if (ccw != want_ccw) {
            std::reverse(rings[r].begin(), rings[r].end());
            report.corrections.push_back("reversed orientation of " + ring_name(r));
        }
        if (!is_simple_ring(rings[r], tol)) {
            fail(ViolationKind::ring_not_simple, {r}, std::nullopt, ring_name(r) + " self-intersects");
        }
    }
    if (!report.ok) return report;

    for (std::size_t r = 1; r < rings.size(); ++r) {
        if (auto hit = first_contact(rings[0], rings[r], tol)) {
            fail(ViolationKind::hole_not_strictly_interior, {0, r}, hit, ring_name(r) + " meets the outer ring");
        } else if (locate_in_ring(rings[r][0], rings[0], tol) != Location::inside) {
            fail(ViolationKind::hole_not_strictly_interior, {0, r}, rings[r][0], ring_name(r) + " lies outside the outer ring");
        }
    }
    for (std::size_t r1 = 1; r1 < rings.size(); ++r1) {
        for (std::size_t r2 = r1 + 1; r2 < rings.size(); ++r2) {
            if (auto hit = first_contact(rings[r1], rings[r2], tol)) {
                fail(ViolationKind::holes_intersect, {r1, r2}, hit, ring_name(r1) + " meets " + ring_name(r2));
            } else if (locate_in_ring(rings[r1][0], rings[r2], tol) != Location::outside ||
                       locate_in_ring(rings[r2][0], rings[r1], tol) != Location::outside) {
                fail(ViolationKind::holes_intersect, {r1, r2}, std::nullopt, ring_name(r1) + " and " + ring_name(r2) + " are nested");
            }
        }
    }

    report.outer = rings[0];
    report.holes.assign(rings.begin() + 1, rings.end());
    return report;
}

namespace {

std::string describe(const ValidationReport& report) {
    std::ostringstream out;
    out << "invalid polygonal domain";
    for (const Violation& v : report.violations) out << "; " << to_string(v.kind) << ": " << v.detail;
    return out.str();
}

}  // namespace

DomainError::DomainError(ValidationReport report) : std::runtime_error(describe(report)), report_(std::move(report)) {}

OutsideDomain::OutsideDomain(Point p)
    : std::domain_error("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") is outside the domain"), p_(p) {}

PolygonalDomain PolygonalDomain::from_rings(const Ring& outer, const std::vector<Ring>& holes) {
    ValidationReport report = validate(outer, holes);
    if (!report.ok) throw DomainError(std::move(report));

    PolygonalDomain dom;
    dom.outer_ = std::move(report.outer);
    dom.holes_ = std::move(report.holes);

    const Point first = dom.outer_.front();
    dom.bbox_ = {first.x, first.y, first.x, first.y};
    for (const Point& p : dom.outer_) {
        dom.bbox_.min_x = std::min(dom.bbox_.min_x, p.x);
        dom.bbox_.min_y = std::min(dom.bbox_.min_y, p.y);
        dom.bbox_.max_x = std::max(dom.bbox_.max_x, p.x);
        dom.bbox_.max_y = std::max(dom.bbox_.max_y, p.y);
    }
    dom.tol_.tau_abs = 1e-9 * dom.bbox_.diagonal();

    auto add_ring = [&dom](const Ring& ring, std::size_t ring_id) {
        const std::size_t base = dom.corners_.size();
        const std::size_t m = ring.size();
        for (std::size_t i = 0; i < m; ++i) {
            Corner c;
            c.p = ring[i];
            c.ring = ring_id;
            c.index = i;
            c.prev = base + (i + m - 1) % m;
            c.next = base + (i + 1) % m;
            // The domain is on the left of every ring; a right turn is reflex.
            c.reflex = cross(ring[i] - ring[(i + m - 1) % m], ring[(i + 1) % m] - ring[i]) < 0.0;
            dom.corners_.push_back(c);
            dom.edges_.push_back({base + i, base + (i + 1) % m});
        }
    };
    add_ring(dom.outer_, 0);
    for (std::size_t h = 0; h < dom.holes_.size(); ++h) add_ring(dom.holes_[h], h + 1);

    dom.area_ = signed_area(dom.outer_);
    for (const Ring& h : dom.holes_) dom.area_ += signed_area(h);  // holes are clockwise
    return dom;
}

Location PolygonalDomain::contains(Point p) const {
    const Location in_outer = locate_in_ring(p, outer_, tol_);
    if (in_outer != Location::inside) return in_outer;
    for (const Ring& h : holes_) {
        const Location in_hole = locate_in_ring(p, h, tol_);
        if (in_hole == Location::inside) return Location::outside;
        if (in_hole == Location::boundary) return Location::boundary;
    }
    return Location::inside;
}

void PolygonalDomain::require_inside(Point p) const {
    if (!is_finite(p) || !in_domain(p)) throw OutsideDomain(p);
}

std::optional<std::size_t> PolygonalDomain::corner_at(Point p) const {
    for (std::size_t i = 0; i < corners_.size(); ++i) {
        if (dist(corners_[i].p, p) <= tol_.tau_abs) return i;
    }
    return std::nullopt;
}

}  // namespace geocenter
