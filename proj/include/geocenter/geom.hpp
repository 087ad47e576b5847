#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace geocenter {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

using Ring = std::vector<Point>;

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Lexicographic order (x, then y); used for deterministic tie-breaking.
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Length tolerances. The domain derives its own from the bounding-box diagonal.
struct Tolerance {
    double tau_abs = 1e-9;
    double tau_rel = 1e-10;

    /// Absolute slack for comparing two lengths of magnitude `scale`.
    double slack(double scale) const { return tau_abs + tau_rel * std::abs(scale); }
};

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sign of the signed area of triangle abc. Zero when the vertex farthest from
/// the longest side lies within tau_abs of that side's line.
int orient(Point a, Point b, Point c, const Tolerance& tol = {});

double distance_to_segment(Point p, Point a, Point b);

/// Parameter of the projection of p onto the line through a, b (0 at a, 1 at b).
double project_param(Point p, Point a, Point b);

enum class ContactKind { disjoint, crossing, touch, overlap };

struct SegmentContact {
    ContactKind kind = ContactKind::disjoint;
    // crossing/touch: first only. overlap: the two ends of the shared piece.
    std::array<Point, 2> witness{};
};

/// Classifies how closed segments ab and cd meet. Throws GeometryError for a
/// zero-length segment.
SegmentContact segment_intersection(Point a, Point b, Point c, Point d, const Tolerance& tol = {});

enum class Location { inside, boundary, outside };

/// Location of p relative to a simple closed ring (either orientation).
/// Throws GeometryError when the ring is not simple.
Location point_in_ring(Point p, std::span<const Point> ring, const Tolerance& tol = {});

/// As point_in_ring without the simplicity check; the caller guarantees it.
Location locate_in_ring(Point p, std::span<const Point> ring, const Tolerance& tol = {});

bool is_simple_ring(std::span<const Point> ring, const Tolerance& tol = {});

/// Shoelace area, positive for counterclockwise rings.
double signed_area(std::span<const Point> ring);

}  // namespace geocenter
