#pragma once

#include <cstddef>
#include <vector>

#include "geocenter/domain.hpp"

namespace geocenter {

/// True when the closed segment ab lies in the closed domain. Grazing contact
/// with the boundary is allowed; crossing into a hole or the exterior is not.
/// Throws OutsideDomain when an endpoint is outside.
bool visible(const PolygonalDomain& dom, Point a, Point b);

/// As visible() without the endpoint membership check.
bool segment_in_domain(const PolygonalDomain& dom, Point a, Point b);

/// Indices of corners that see p (sorted ascending).
std::vector<std::size_t> visible_corners(const PolygonalDomain& dom, Point p);

class VisibilityGraph {
public:
    struct Arc {
        std::size_t to;
        double length;
    };

    explicit VisibilityGraph(const PolygonalDomain& dom);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool has_edge(std::size_t u, std::size_t v) const { return matrix_[u * adjacency_.size() + v]; }
    /// Neighbours of u in ascending index order.
    const std::vector<Arc>& neighbors(std::size_t u) const { return adjacency_[u]; }

private:
    std::vector<std::vector<Arc>> adjacency_;
    std::vector<char> matrix_;
    std::size_t edge_count_ = 0;
};

}  // namespace geocenter
