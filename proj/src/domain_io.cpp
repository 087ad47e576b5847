#include "geocenter/domain_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geocenter {

namespace {

Ring parse_ring(const nlohmann::json& arr, const std::string& what) {
    if (!arr.is_array()) throw std::invalid_argument(what + " must be an array of [x, y] pairs");
    Ring ring;
    ring.reserve(arr.size());
    for (const auto& pt : arr) {
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
            throw std::invalid_argument(what + " contains an entry that is not an [x, y] number pair");
        }
        ring.push_back({pt[0].get<double>(), pt[1].get<double>()});
    }
    return ring;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

void append_ring(std::ostringstream& out, const Ring& ring) {
    out << '[';
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i > 0) out << ", ";
        out << '[' << format_number(ring[i].x) << ", " << format_number(ring[i].y) << ']';
    }
    out << ']';
}

}  // namespace

RawDomain parse_domain(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("outer")) {
        throw std::invalid_argument("domain document must be an object with an \"outer\" ring");
    }
    RawDomain raw;
    raw.outer = parse_ring(doc.at("outer"), "outer");
    if (doc.contains("holes")) {
        const auto& holes = doc.at("holes");
        if (!holes.is_array()) throw std::invalid_argument("\"holes\" must be an array of rings");
        for (std::size_t i = 0; i < holes.size(); ++i) {
            raw.holes.push_back(parse_ring(holes[i], "hole " + std::to_string(i)));
        }
    }
    return raw;
}

RawDomain read_domain_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open domain file " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed domain file " + path.string() + ": " + e.what());
    }
    return parse_domain(doc);
}

nlohmann::json domain_to_json(const Ring& outer, const std::vector<Ring>& holes) {
    auto ring_json = [](const Ring& ring) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Point& p : ring) arr.push_back({p.x, p.y});
        return arr;
    };
    nlohmann::json doc;
    doc["outer"] = ring_json(outer);
    doc["holes"] = nlohmann::json::array();
    for (const Ring& h : holes) doc["holes"].push_back(ring_json(h));
    return doc;
}

nlohmann::json domain_to_json(const PolygonalDomain& dom) { return domain_to_json(dom.outer(), dom.holes()); }

std::string format_domain(const Ring& outer, const std::vector<Ring>& holes) {
    std::ostringstream out;
    out << "{\n  \"outer\": ";
    append_ring(out, outer);
    out << ",\n  \"holes\": [";
    for (std::size_t i = 0; i < holes.size(); ++i) {
        out << (i == 0 ? "\n    " : ",\n    ");
        append_ring(out, holes[i]);
    }
    out << (holes.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

}  // namespace geocenter
