#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geocenter/geom.hpp"

namespace geocenter {

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double longest_side() const { return std::max(width(), height()); }
    double diagonal() const { return std::hypot(width(), height()); }
};

enum class ViolationKind {
    too_few_vertices,
    non_finite_coordinate,
    degenerate_ring,
    ring_not_simple,
    hole_not_strictly_interior,
    holes_intersect,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> rings;  // 0 = outer, i = hole i-1
    std::optional<Point> witness;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::vector<std::string> corrections;
    // Normalized rings (orientation fixed, collinear vertices merged).
    Ring outer;
    std::vector<Ring> holes;
};

/// Checks the raw rings and normalizes them: outer made counterclockwise, holes
/// clockwise, duplicate and collinear consecutive vertices merged.
ValidationReport validate(const Ring& outer, const std::vector<Ring>& holes);

struct Corner {
    Point p;
    std::size_t ring = 0;   // 0 = outer, 1.. = holes
    std::size_t index = 0;  // position within its ring
    std::size_t prev = 0;   // global index of the ring predecessor
    std::size_t next = 0;   // global index of the ring successor
    bool reflex = false;    // interior angle of the domain exceeds 180 degrees
};

/// Boundary edge from corner `from` to corner `to`; the domain lies to its left.
struct BoundaryEdge {
    std::size_t from = 0;
    std::size_t to = 0;
};

class DomainError : public std::runtime_error {
public:
    explicit DomainError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

class OutsideDomain : public std::domain_error {
public:
    explicit OutsideDomain(Point p);
    Point point() const { return p_; }

private:
    Point p_;
};

/// A closed, connected polygonal region with h holes. Immutable once built.
class PolygonalDomain {
public:
    /// Validates and normalizes; throws DomainError when validation fails.
    static PolygonalDomain from_rings(const Ring& outer, const std::vector<Ring>& holes = {});

    const Ring& outer() const { return outer_; }
    const std::vector<Ring>& holes() const { return holes_; }
    std::size_t hole_count() const { return holes_.size(); }

    /// All ring vertices: outer ring first, then holes in input order.
    const std::vector<Corner>& corners() const { return corners_; }
    std::size_t corner_count() const { return corners_.size(); }
    const std::vector<BoundaryEdge>& edges() const { return edges_; }
    Point edge_start(std::size_t e) const { return corners_[edges_[e].from].p; }
    Point edge_end(std::size_t e) const { return corners_[edges_[e].to].p; }

    const BoundingBox& bbox() const { return bbox_; }
    const Tolerance& tolerance() const { return tol_; }
    double area() const { return area_; }

    Location contains(Point p) const;
    bool in_domain(Point p) const { return contains(p) != Location::outside; }
    /// Throws OutsideDomain unless p is in the closed domain.
    void require_inside(Point p) const;

    /// Index of a corner within tau of p, if any.
    std::optional<std::size_t> corner_at(Point p) const;

private:
    PolygonalDomain() = default;

    Ring outer_;
    std::vector<Ring> holes_;
    std::vector<Corner> corners_;
    std::vector<BoundaryEdge> edges_;
    BoundingBox bbox_;
    Tolerance tol_;
    double area_ = 0.0;
};

}  // namespace geocenter
