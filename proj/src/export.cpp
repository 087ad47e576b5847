#include "geocenter/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace geocenter {

double round12(double v) {
    if (!std::isfinite(v)) return v;
    return std::stod(format12(v));
}

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

nlohmann::json point_json(Point p) { return nlohmann::json::array({round12(p.x), round12(p.y)}); }

nlohmann::json vertex_json(const SpmVertex& v) {
    nlohmann::json out = {
        {"p", point_json(v.p)},
        {"distance", round12(v.distance)},
        {"roots", v.roots},
        {"class", to_string(v.cls)},
    };
    if (v.corner) out["corner"] = *v.corner;
    if (v.boundary_edge) out["boundary_edge"] = *v.boundary_edge;
    return out;
}

namespace {

nlohmann::json polyline_json(const std::vector<Point>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (Point p : pts) out.push_back(point_json(p));
    return out;
}

// SVG drawing of the domain's bounding box, with y pointing up.
class Canvas {
public:
    explicit Canvas(const PolygonalDomain& dom) : box_(dom.bbox()) {
        unit_ = box_.diagonal() / 400.0;
        const double m = 0.03 * box_.longest_side();
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
             << format12(800.0 * (box_.height() + 2 * m) / (box_.width() + 2 * m)) << "\" viewBox=\""
             << format12(box_.min_x - m) << ' ' << format12(-box_.max_y - m) << ' ' << format12(box_.width() + 2 * m)
             << ' ' << format12(box_.height() + 2 * m) << "\">\n"
             << "<g transform=\"scale(1,-1)\">\n";
    }

    double unit() const { return unit_; }

    void ring_path(const std::vector<std::vector<Point>>& rings, const std::string& style) {
        out_ << "<path fill-rule=\"evenodd\" d=\"";
        for (const auto& ring : rings) {
            for (std::size_t i = 0; i < ring.size(); ++i) {
                out_ << (i == 0 ? 'M' : 'L') << format12(ring[i].x) << ',' << format12(ring[i].y) << ' ';
            }
            out_ << "Z ";
        }
        out_ << "\" " << style << "/>\n";
    }

    void polyline(const std::vector<Point>& pts, const std::string& style) {
        out_ << "<polyline points=\"";
        for (Point p : pts) out_ << format12(p.x) << ',' << format12(p.y) << ' ';
        out_ << "\" fill=\"none\" " << style << "/>\n";
    }

    void dot(Point p, double r, const std::string& fill) {
        out_ << "<circle cx=\"" << format12(p.x) << "\" cy=\"" << format12(p.y) << "\" r=\"" << format12(r)
             << "\" fill=\"" << fill << "\"/>\n";
    }

    void domain(const PolygonalDomain& dom) {
        std::vector<std::vector<Point>> rings{dom.outer()};
        ring_path(rings, "fill=\"none\" stroke=\"black\" stroke-width=\"" + format12(unit_) + "\"");
        for (const Ring& h : dom.holes()) {
            ring_path({h}, "fill=\"#9a9a9a\" stroke=\"black\" stroke-width=\"" + format12(unit_) + "\"");
        }
    }

    std::string finish() {
        out_ << "</g>\n</svg>\n";
        return out_.str();
    }

private:
    BoundingBox box_;
    double unit_ = 1.0;
    std::ostringstream out_;
};

std::string root_color(std::size_t root) {
    // Golden-angle hue walk keeps neighbouring indices apart.
    const double hue = std::fmod(root * 137.508, 360.0);
    char buf[48];
    std::snprintf(buf, sizeof buf, "hsl(%.1f,65%%,72%%)", hue);
    return buf;
}

const char* vertex_color(VertexClass cls) {
    switch (cls) {
        case VertexClass::corner: return "black";
        case VertexClass::boundary: return "#1f5fbf";
        case VertexClass::interior: return "#c0392b";
    }
    return "black";
}

}  // namespace

nlohmann::json spm_json(const ShortestPathMap& spm) {
    nlohmann::json out;
    out["source"] = point_json(spm.source());

    nlohmann::json roots = nlohmann::json::array();
    for (const SpmRoot& r : spm.roots()) {
        nlohmann::json j = {{"p", point_json(r.p)}, {"weight", round12(r.weight)}};
        j["corner"] = r.corner == kSourceNode ? nlohmann::json(nullptr) : nlohmann::json(r.corner);
        roots.push_back(j);
    }
    out["roots"] = roots;

    nlohmann::json vertices = nlohmann::json::array();
    for (const SpmVertex& v : spm.vertices()) vertices.push_back(vertex_json(v));
    out["vertices"] = vertices;

    nlohmann::json arcs = nlohmann::json::array();
    for (const BisectorArc& a : spm.arcs()) {
        arcs.push_back({{"roots", {a.root_a, a.root_b}},
                        {"shape", to_string(a.shape)},
                        {"from", a.from},
                        {"to", a.to},
                        {"polyline", polyline_json(a.polyline)}});
    }
    out["arcs"] = arcs;

    nlohmann::json pieces = nlohmann::json::array();
    for (const BoundaryPiece& b : spm.boundary_pieces()) {
        pieces.push_back({{"edge", b.edge}, {"from", b.from}, {"to", b.to}, {"root", b.root}});
    }
    out["boundary_pieces"] = pieces;

    nlohmann::json cells = nlohmann::json::array();
    for (const SpmCell& c : spm.cells()) {
        nlohmann::json holes = nlohmann::json::array();
        for (const auto& h : c.holes) holes.push_back(polyline_json(h));
        cells.push_back(
            {{"root", c.root}, {"area", round12(c.area)}, {"loop", polyline_json(c.loop)}, {"holes", holes}});
    }
    out["cells"] = cells;

    out["counts"] = {{"vertices", spm.vertices().size()},
                     {"edges", spm.edge_count()},
                     {"cells", spm.cells().size()},
                     {"malformed_faces", spm.malformed_faces()}};
    return out;
}

nlohmann::json center_json(const CenterEstimate& est) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const SpmVertex& v : est.witnesses) witnesses.push_back(vertex_json(v));
    nlohmann::json ties = nlohmann::json::array();
    for (Point p : est.near_ties) ties.push_back(point_json(p));
    return {{"c", point_json(est.c)},
            {"U", round12(est.upper)},
            {"L", round12(est.lower)},
            {"eps", round12(est.eps)},
            {"witnesses", witnesses},
            {"candidates_evaluated", est.candidates_evaluated},
            {"near_ties", ties}};
}

std::string spm_svg(const ShortestPathMap& spm) {
    Canvas canvas(spm.domain());
    const std::string thin = "stroke-width=\"" + format12(0.5 * canvas.unit()) + "\"";
    for (const SpmCell& c : spm.cells()) {
        std::vector<std::vector<Point>> rings{c.loop};
        rings.insert(rings.end(), c.holes.begin(), c.holes.end());
        canvas.ring_path(rings, "fill=\"" + root_color(c.root) + "\" stroke=\"none\"");
    }
    canvas.domain(spm.domain());
    for (const BisectorArc& a : spm.arcs()) canvas.polyline(a.polyline, "stroke=\"#333333\" " + thin);
    for (const SpmVertex& v : spm.vertices()) canvas.dot(v.p, 2.0 * canvas.unit(), vertex_color(v.cls));
    canvas.dot(spm.source(), 3.5 * canvas.unit(), "#e67e22");
    return canvas.finish();
}

std::string center_svg(const Geodesics& geo, const CenterEstimate& est, const std::vector<Point>& grid) {
    Canvas canvas(geo.domain());
    canvas.domain(geo.domain());
    for (Point z : grid) canvas.dot(z, 0.6 * canvas.unit(), "#7f8c8d");
    const std::string stroke = "stroke=\"#c0392b\" stroke-width=\"" + format12(canvas.unit()) + "\"";
    const auto& corners = geo.domain().corners();
    const ShortestPathMap spm = build_spm(geo, est.c, {.vertices_only = true});
    for (const SpmVertex& w : est.witnesses) {
        // One polyline per root: every shortest path to the witness.
        for (std::size_t r : w.roots) {
            const Point root = spm.roots()[r].p;
            std::vector<Point> pts{est.c};
            if (spm.roots()[r].corner != kSourceNode) {
                for (std::size_t v : geo.distance(est.c, root).path.corners) pts.push_back(corners[v].p);
                if (dist(pts.back(), root) > 0.0) pts.push_back(root);
            }
            pts.push_back(w.p);
            canvas.polyline(pts, stroke);
        }
        canvas.dot(w.p, 2.0 * canvas.unit(), "#c0392b");
    }
    canvas.dot(est.c, 3.5 * canvas.unit(), "#1f5fbf");
    return canvas.finish();
}

}  // namespace geocenter
