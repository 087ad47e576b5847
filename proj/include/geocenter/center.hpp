#pragma once

#include <cstddef>
#include <vector>

#include "geocenter/spm.hpp"

namespace geocenter {

struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct CenterEstimate {
    Point c;
    double upper = 0.0;  // phi(c)
    double lower = 0.0;  // certified lower bound on the radius
    double eps = 0.0;
    std::vector<SpmVertex> witnesses;
    std::size_t candidates_evaluated = 0;
    // Other grid candidates whose value matches the optimum within tolerance.
    std::vector<Point> near_ties;
};

struct CandidateSet {
    double step = 0.0;
    std::vector<Point> points;  // lexicographically sorted, all in the domain
};

/// phi(s) and phi(s)/2, which bracket the radius for any s in the domain.
Bounds two_approx_radius(const Geodesics& geo, Point s);

/// Grid points in the domain, grid-line crossings of boundary edges and all
/// corners. Throws std::invalid_argument unless 0 < eps <= 1.
CandidateSet grid_candidates(const PolygonalDomain& dom, double eps);

/// Evaluates phi over the candidate set and keeps the minimizer. Uses up to
/// GEODESIC_THREADS worker threads (default: hardware concurrency).
CenterEstimate approx_center(const Geodesics& geo, double eps);

/// Pattern search on phi from `start`; stops once the step drops below tol.
/// The lower bound is phi(start)/2.
CenterEstimate refine_center(const Geodesics& geo, Point start, double tol);

/// Same, starting from a grid estimate whose lower bound and eps are kept.
CenterEstimate refine_center(const Geodesics& geo, const CenterEstimate& start, double tol);

struct DiameterEstimate {
    double lower = 0.0;
    double upper = 0.0;
    double eps = 0.0;
    Point from;  // candidate attaining the lower bound
    Point to;    // one of its farthest points
};

/// lower = max over candidates z of phi(z); upper = (1 + eps) * lower.
DiameterEstimate approx_diameter(const Geodesics& geo, double eps);

/// Worker count from GEODESIC_THREADS, falling back to the hardware.
std::size_t worker_count();

/// phi at every point, computed in parallel, in input order.
std::vector<double> phi_many(const Geodesics& geo, const std::vector<Point>& points);

}  // namespace geocenter
