#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "geocenter/geodesic.hpp"

namespace geocenter {

/// Generator of a shortest path map cell: the source itself (corner == kSourceNode)
/// or a reflex corner, with additive weight d(source, root).
struct SpmRoot {
    long corner = kSourceNode;
    Point p;
    double weight = 0.0;
    std::vector<long> parents;  // SPT predecessors realizing the weight
};

enum class VertexClass {
    corner,    // a corner of the domain
    boundary,  // an arc meets the domain boundary away from corners
    interior,  // three or more cells meet inside the domain
};

const char* to_string(VertexClass cls);

struct SpmVertex {
    Point p;
    double distance = 0.0;           // d(source, p)
    std::vector<std::size_t> roots;  // roots realizing the distance, ascending
    VertexClass cls = VertexClass::interior;
    std::optional<std::size_t> corner;         // for VertexClass::corner
    std::optional<std::size_t> boundary_edge;  // for VertexClass::boundary
};

enum class ArcShape {
    ray,        // roots adjacent in the shortest path tree
    line,       // equal weights: perpendicular bisector
    hyperbola,  // one branch, foci at the two roots
};

const char* to_string(ArcShape shape);

/// Locus where two roots give equal total length: w_a + |x-a| = w_b + |x-b|.
class Bisector {
public:
    Bisector(const SpmRoot& a, const SpmRoot& b);

    ArcShape shape() const { return shape_; }
    /// Monotone coordinate along the curve.
    double param(Point x) const;
    Point at(double t) const;
    /// False when the weights differ by more than the focal distance.
    bool exists() const { return exists_; }

private:
    ArcShape shape_ = ArcShape::hyperbola;
    bool exists_ = true;
    Point focus_;  // hyperbola: focus a; ray: origin
    Point axis_;   // hyperbola: b - a; ray: unit direction
    double delta_ = 0.0;
    double axis_len_ = 0.0;
};

struct BisectorArc {
    std::size_t root_a = 0;
    std::size_t root_b = 0;
    ArcShape shape = ArcShape::hyperbola;
    std::size_t from = 0;  // vertex indices
    std::size_t to = 0;
    std::vector<Point> polyline;  // sampled on the exact curve, endpoints included
};

struct BoundaryPiece {
    std::size_t edge = 0;  // boundary edge index
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t root = 0;  // cell on the domain side
};

struct SpmCell {
    std::size_t root = 0;
    std::vector<Point> loop;                // counterclockwise outer boundary polyline
    std::vector<std::vector<Point>> holes;  // clockwise inner boundaries
    double area = 0.0;
};

struct SpmOptions {
    bool vertices_only = false;
    std::size_t arc_samples = 48;
};

class ShortestPathMap {
public:
    Point source() const { return source_; }
    const std::vector<SpmRoot>& roots() const { return roots_; }
    const std::vector<SpmVertex>& vertices() const { return vertices_; }
    const std::vector<BisectorArc>& arcs() const { return arcs_; }
    const std::vector<BoundaryPiece>& boundary_pieces() const { return pieces_; }
    const std::vector<SpmCell>& cells() const { return cells_; }
    std::size_t edge_count() const { return arcs_.size() + pieces_.size(); }
    /// Faces whose half-edges disagree on their root, with non-positive area, or
    /// inner boundaries that no face encloses.
    std::size_t malformed_faces() const { return malformed_; }
    const PolygonalDomain& domain() const { return *dom_; }

    /// w(root) + |root - x|.
    double root_value(std::size_t root, Point x) const { return roots_[root].weight + dist(roots_[root].p, x); }

private:
    friend class SpmBuilder;

    std::shared_ptr<const PolygonalDomain> dom_;
    Point source_;
    std::vector<SpmRoot> roots_;
    std::vector<SpmVertex> vertices_;
    std::vector<BisectorArc> arcs_;
    std::vector<BoundaryPiece> pieces_;
    std::vector<SpmCell> cells_;
    std::size_t malformed_ = 0;
};

/// Shortest path map of s. Throws OutsideDomain when s is not in the domain.
ShortestPathMap build_spm(const Geodesics& geo, Point s, const SpmOptions& options = {});

/// Root of a cell containing x: the minimizer of w(r) + |r-x| over roots that
/// see x, smallest root index on ties.
std::size_t locate(const ShortestPathMap& spm, Point x);

/// Index of the cell whose polygon contains x, if any.
std::optional<std::size_t> cell_at(const ShortestPathMap& spm, Point x);

struct FarthestNeighbors {
    double phi = 0.0;
    std::vector<SpmVertex> witnesses;
};

/// Maximum geodesic distance from p over the domain, read off the vertices of
/// the shortest path map of p, with every vertex attaining it.
FarthestNeighbors farthest_neighbors(const Geodesics& geo, Point p);

double phi(const Geodesics& geo, Point p);

}  // namespace geocenter
