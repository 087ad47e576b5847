#pragma once

#include <string>
#include <vector>

#include "geocenter/center.hpp"
#include "geocenter/spm.hpp"

#include <json.hpp>

namespace geocenter {

/// v rounded to 12 significant digits, the precision of every emitted number.
double round12(double v);
std::string format12(double v);

nlohmann::json point_json(Point p);
nlohmann::json vertex_json(const SpmVertex& v);

/// {source, roots[], vertices[], arcs[], boundary_pieces[], cells[], counts}.
nlohmann::json spm_json(const ShortestPathMap& spm);

/// {c, U, L, eps, witnesses[], candidates_evaluated, near_ties[]}.
nlohmann::json center_json(const CenterEstimate& est);

/// Cells filled by root, arcs stroked, vertices dotted by class.
std::string spm_svg(const ShortestPathMap& spm);

/// Domain, candidate grid, center and shortest paths to its witnesses.
std::string center_svg(const Geodesics& geo, const CenterEstimate& est, const std::vector<Point>& grid);

}  // namespace geocenter
