#pragma once

#include <string>

#include "geocenter/domain_io.hpp"
#include "geocenter/geodesic.hpp"

namespace support {

inline geocenter::PolygonalDomain fixture(const std::string& name) {
    const geocenter::RawDomain raw = geocenter::read_domain_file(std::string(FIXTURE_DIR) + "/" + name + ".json");
    return geocenter::PolygonalDomain::from_rings(raw.outer, raw.holes);
}

inline geocenter::PolygonalDomain unit_square() { return geocenter::PolygonalDomain::from_rings({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline geocenter::PolygonalDomain holed_square() {
    return geocenter::PolygonalDomain::from_rings({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{{4, 4}, {6, 4}, {6, 6}, {4, 6}}});
}

inline const char* const kFixtures[] = {"unit_square", "triangle", "holed_square", "triangle_hole", "three_lobe"};

}  // namespace support
