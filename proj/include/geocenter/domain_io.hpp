#pragma once

#include <filesystem>
#include <string>

#include "geocenter/domain.hpp"

#include <json.hpp>

namespace geocenter {

/// Raw rings as read from a domain file, before validation.
struct RawDomain {
    Ring outer;
    std::vector<Ring> holes;
};

/// Parses {"outer": [[x,y],...], "holes": [[[x,y],...],...]}. Throws
/// std::invalid_argument on a malformed document.
RawDomain parse_domain(const nlohmann::json& doc);
RawDomain read_domain_file(const std::filesystem::path& path);

nlohmann::json domain_to_json(const Ring& outer, const std::vector<Ring>& holes);
nlohmann::json domain_to_json(const PolygonalDomain& dom);

/// Serialized text for a domain file: one ring per line, 12 significant digits.
std::string format_domain(const Ring& outer, const std::vector<Ring>& holes);

}  // namespace geocenter
