#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "geocenter/domain.hpp"
#include "geocenter/visibility.hpp"

namespace geocenter {

/// Polygonal path source -> corners[0] -> ... -> corners[k-1] -> target.
struct GeodesicPath {
    Point source;
    Point target;
    std::vector<std::size_t> corners;
    double length = 0.0;  // recomputed segment sum
};

struct GeodesicResult {
    double distance = 0.0;
    GeodesicPath path;
};

/// All-pairs shortest path lengths between corners, symmetric with zero diagonal.
class DistanceTable {
public:
    DistanceTable() = default;
    explicit DistanceTable(std::size_t n) : n_(n), d_(n * n, 0.0) {}
    std::size_t size() const { return n_; }
    double operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    double& at(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

inline constexpr long kSourceNode = -1;

struct ShortestPathTree {
    Point source;
    std::vector<double> dist;                 // d(source, corner)
    std::vector<long> parent;                 // corner index, or kSourceNode
    std::vector<std::vector<long>> tied_parents;  // every predecessor on some shortest path
    std::vector<char> sees_source;            // corner sees the source directly
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable precomputation for geodesic queries on one domain: the visibility
/// graph and the corner distance table. Safe to share between threads.
class Geodesics {
public:
    explicit Geodesics(PolygonalDomain dom);

    const PolygonalDomain& domain() const { return *dom_; }
    const std::shared_ptr<const PolygonalDomain>& domain_ptr() const { return dom_; }
    const VisibilityGraph& graph() const { return graph_; }
    const DistanceTable& table() const { return table_; }

    /// Shortest path and its length. Among equal-length paths the one with the
    /// lexicographically smallest corner sequence is returned.
    GeodesicResult distance(Point s, Point t) const;

    /// Length of the path s -> u ~> v -> t: |s-u| + d(u,v) + |v-t|.
    /// Throws PreconditionError when s does not see u or t does not see v.
    double path_length(std::size_t u, std::size_t v, Point s, Point t) const;

    /// Dijkstra from s; parents prefer the source, then the smallest corner index.
    ShortestPathTree shortest_path_tree(Point s) const;

    /// d(tree.source, x) from a finished tree: direct if visible, otherwise the
    /// best visible corner.
    double distance_via(const ShortestPathTree& tree, Point x) const;

private:
    std::vector<double> dijkstra_from(Point s, const std::vector<std::size_t>& seen) const;

    std::shared_ptr<const PolygonalDomain> dom_;
    VisibilityGraph graph_;
    DistanceTable table_;
};

DistanceTable corner_distance_table(const PolygonalDomain& dom, const VisibilityGraph& graph);

inline GeodesicResult geodesic_distance(const Geodesics& geo, Point s, Point t) { return geo.distance(s, t); }
inline ShortestPathTree build_spt(const Geodesics& geo, Point s) { return geo.shortest_path_tree(s); }
inline double path_length(const Geodesics& geo, std::size_t u, std::size_t v, Point s, Point t) {
    return geo.path_length(u, v, s, t);
}

}  // namespace geocenter
