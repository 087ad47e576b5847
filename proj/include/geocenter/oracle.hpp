#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "geocenter/domain_io.hpp"
#include "geocenter/geodesic.hpp"

namespace geocenter {

/// Brute-force distance graph: corners plus the samples of a (k+1) x (k+1)
/// lattice spanning the bounding box that lie in the domain. Lattices for k and
/// 2k nest, and nearby samples are joined within a fixed absolute radius, so
/// refining k never lengthens a distance.
class DenseGraph {
public:
    DenseGraph(const PolygonalDomain& dom, std::size_t k);

    const PolygonalDomain& domain() const { return dom_; }
    std::size_t resolution() const { return k_; }
    std::size_t node_count() const { return nodes_.size(); }
    const std::vector<Point>& nodes() const { return nodes_; }
    /// Nodes [0, corner_count) are corners; the rest are lattice samples.
    std::size_t corner_count() const { return dom_.corner_count(); }
    /// Lattice spacing along x and y.
    Point spacing() const { return spacing_; }
    /// Diagonal of one lattice cell.
    double cell_diagonal() const { return norm(spacing_); }

    /// Path lengths from s to every node, with s joined to all nodes it sees.
    std::vector<double> distances_from(Point s) const;
    double distance(Point s, Point t) const;

private:
    struct Arc {
        std::size_t to;
        double length;
    };

    PolygonalDomain dom_;
    std::size_t k_;
    Point spacing_;
    std::vector<Point> nodes_;
    std::vector<std::vector<Arc>> adj_;
};

/// Throws OutsideDomain for points outside, std::invalid_argument for k < 2.
double dense_distance(const PolygonalDomain& dom, Point s, Point t, std::size_t k);

struct BrutePhi {
    double value = 0.0;
    Point argmax;
};

/// Largest distance from p to a lattice sample or corner: a lower bound on phi.
BrutePhi brute_phi(const DenseGraph& graph, Point p);
BrutePhi brute_phi(const PolygonalDomain& dom, Point p, std::size_t k);

struct Lemma1Trial {
    Point p;
    double brute = 0.0;
    double phi = 0.0;
    Point argmax;
    double vertex_gap = 0.0;  // from the brute argmax to the nearest map vertex
    bool near_vertex = false;
    bool value_ok = false;
    bool pass() const { return near_vertex && value_ok; }
};

struct Lemma1Report {
    std::size_t k = 0;
    double spacing = 0.0;  // larger lattice spacing
    double bound = 0.0;    // allowed |brute - phi|
    std::vector<Lemma1Trial> trials;
    std::size_t passed() const;
    bool ok() const { return passed() == trials.size(); }
};

/// For random points p: the brute-force farthest sample lies within two lattice
/// spacings of a vertex of the shortest path map of p, and the brute value is
/// within two cell diagonals of phi(p).
Lemma1Report check_lemma1(const Geodesics& geo, std::size_t trials, std::size_t k, std::uint64_t seed = 1);

/// Uniform point of the domain by rejection from its bounding box.
Point random_point(const PolygonalDomain& dom, std::mt19937_64& rng);

/// Perturbed convex outer ring with one to three convex holes, valid by
/// rejection; at most 40 corners.
RawDomain random_domain(std::uint64_t seed);

/// Star-shaped simple polygon with 8 to 20 corners and no holes.
RawDomain random_simple_polygon(std::uint64_t seed);

}  // namespace geocenter
