// Command-line front end: geocenter <subcommand> [options] domain.json

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geocenter/center.hpp"
#include "geocenter/domain_io.hpp"
#include "geocenter/export.hpp"
#include "geocenter/oracle.hpp"
#include "geocenter/spm.hpp"

using namespace geocenter;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool parse_point(const std::string& text, Point& out) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        out.x = std::stod(text.substr(0, comma), &used);
        if (used != comma) return false;
        const std::string rest = text.substr(comma + 1);
        out.y = std::stod(rest, &used);
        return used == rest.size() && is_finite(out);
    } catch (const std::exception&) {
        return false;
    }
}

const CLI::Validator kPoint(
    [](std::string& text) {
        Point p;
        return parse_point(text, p) ? std::string() : "expected a point x,y, got '" + text + "'";
    },
    "X,Y");

const CLI::Validator kEps(
    [](std::string& text) {
        try {
            const double v = std::stod(text);
            if (v > 0.0 && v <= 1.0) return std::string();
        } catch (const std::exception&) {
        }
        return "eps must lie in (0, 1], got '" + text + "'";
    },
    "(0,1]");

Point point_arg(const std::string& text) {
    Point p;
    parse_point(text, p);
    return p;
}

Geodesics load(const std::string& path) {
    const RawDomain raw = read_domain_file(path);
    return Geodesics(PolygonalDomain::from_rings(raw.outer, raw.holes));
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json violations_json(const ValidationReport& report) {
    json out = json::array();
    for (const Violation& v : report.violations) {
        json j = {{"kind", to_string(v.kind)}, {"rings", v.rings}, {"detail", v.detail}};
        j["witness"] = v.witness ? point_json(*v.witness) : json(nullptr);
        out.push_back(j);
    }
    return out;
}

int run_validate(const std::string& file) {
    const RawDomain raw = read_domain_file(file);
    const ValidationReport report = validate(raw.outer, raw.holes);
    json doc = {{"ok", report.ok}, {"violations", violations_json(report)}, {"corrections", report.corrections}};
    if (report.ok) {
        const PolygonalDomain dom = PolygonalDomain::from_rings(raw.outer, raw.holes);
        doc["corners"] = dom.corner_count();
        doc["holes"] = dom.hole_count();
        doc["area"] = round12(dom.area());
    }
    emit(doc);
    return report.ok ? kOk : kFailed;
}

int run_dist(const std::string& file, Point from, Point to, bool with_path) {
    const Geodesics geo = load(file);
    const GeodesicResult r = geo.distance(from, to);
    if (!with_path) {
        std::cout << format12(r.distance) << '\n';
        return kOk;
    }
    json pts = json::array({point_json(from)});
    for (std::size_t v : r.path.corners) pts.push_back(point_json(geo.domain().corners()[v].p));
    pts.push_back(point_json(to));
    emit({{"distance", round12(r.distance)}, {"corners", r.path.corners}, {"path", pts}});
    return kOk;
}

int run_spm(const std::string& file, Point source, const std::string& out, const std::string& svg) {
    const Geodesics geo = load(file);
    const ShortestPathMap spm = build_spm(geo, source);
    const json doc = spm_json(spm);
    if (out.empty()) {
        emit(doc);
    } else {
        write_file(out, doc.dump(2) + "\n");
    }
    if (!svg.empty()) write_file(svg, spm_svg(spm));
    return kOk;
}

int run_farthest(const std::string& file, Point p) {
    const Geodesics geo = load(file);
    const FarthestNeighbors fn = farthest_neighbors(geo, p);
    json witnesses = json::array();
    for (const SpmVertex& v : fn.witnesses) witnesses.push_back(vertex_json(v));
    emit({{"p", point_json(p)}, {"phi", round12(fn.phi)}, {"witnesses", witnesses}});
    return kOk;
}

int run_center(const std::string& file, double eps, double tol, bool refine, const std::string& svg) {
    const Geodesics geo = load(file);
    const CenterEstimate grid = approx_center(geo, eps);
    const CenterEstimate best = refine ? refine_center(geo, grid, tol) : grid;
    json doc = center_json(best);
    doc["grid"] = {{"c", point_json(grid.c)}, {"U", round12(grid.upper)}};
    doc["refined"] = refine;
    emit(doc);
    if (!svg.empty()) write_file(svg, center_svg(geo, best, grid_candidates(geo.domain(), eps).points));
    return kOk;
}

int run_diameter(const std::string& file, double eps) {
    const Geodesics geo = load(file);
    const DiameterEstimate d = approx_diameter(geo, eps);
    emit({{"L", round12(d.lower)},
          {"U", round12(d.upper)},
          {"eps", round12(d.eps)},
          {"from", point_json(d.from)},
          {"to", point_json(d.to)}});
    return kOk;
}

int run_check(const std::string& file, std::size_t k, std::size_t trials, std::uint64_t seed) {
    const Geodesics geo = load(file);
    const Lemma1Report report = check_lemma1(geo, trials, k, seed);
    json rows = json::array();
    for (const Lemma1Trial& t : report.trials) {
        rows.push_back({{"p", point_json(t.p)},
                        {"brute", round12(t.brute)},
                        {"phi", round12(t.phi)},
                        {"argmax", point_json(t.argmax)},
                        {"vertex_gap", round12(t.vertex_gap)},
                        {"pass", t.pass()}});
    }
    emit({{"k", report.k},
          {"spacing", round12(report.spacing)},
          {"bound", round12(report.bound)},
          {"passed", report.passed()},
          {"total", report.trials.size()},
          {"trials", rows}});
    return report.ok() ? kOk : kFailed;
}

int run_gen(std::uint64_t seed, bool simple, const std::string& out) {
    const RawDomain raw = simple ? random_simple_polygon(seed) : random_domain(seed);
    const std::string text = format_domain(raw.outer, raw.holes);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file(out, text);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic distances, shortest path maps and approximate centers of polygonal domains"};
    app.require_subcommand(1);
    std::string file;
    auto add_file = [&file](CLI::App* cmd) {
        cmd->add_option("domain", file, "domain file")->required();
    };

    auto* validate_cmd = app.add_subcommand("validate", "check a domain file");
    add_file(validate_cmd);

    std::string from, to;
    bool with_path = false;
    auto* dist_cmd = app.add_subcommand("dist", "geodesic distance between two points");
    dist_cmd->add_option("--from", from, "start point")->required()->check(kPoint);
    dist_cmd->add_option("--to", to, "end point")->required()->check(kPoint);
    dist_cmd->add_flag("--path", with_path, "print the path as JSON");
    add_file(dist_cmd);

    std::string out, svg;
    auto* spm_cmd = app.add_subcommand("spm", "shortest path map of a source");
    spm_cmd->add_option("--source", from, "source point")->required()->check(kPoint);
    spm_cmd->add_option("-o,--out", out, "write the JSON dump here instead of stdout");
    spm_cmd->add_option("--svg", svg, "write an SVG rendering");
    add_file(spm_cmd);

    auto* farthest_cmd = app.add_subcommand("farthest", "farthest neighbors of a point");
    farthest_cmd->add_option("--from", from, "query point")->required()->check(kPoint);
    add_file(farthest_cmd);

    double eps = 0.1;
    double tol = 1e-6;
    bool no_refine = false;
    auto* center_cmd = app.add_subcommand("center", "approximate geodesic center");
    center_cmd->add_option("--eps", eps, "approximation factor")->check(kEps)->capture_default_str();
    center_cmd->add_option("--tol", tol, "refinement step tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    center_cmd->add_flag("--no-refine", no_refine, "report the grid optimum only");
    center_cmd->add_option("--svg", svg, "write an SVG overlay");
    add_file(center_cmd);

    auto* diameter_cmd = app.add_subcommand("diameter", "approximate geodesic diameter");
    diameter_cmd->add_option("--eps", eps, "approximation factor")->check(kEps)->capture_default_str();
    add_file(diameter_cmd);

    std::size_t k = 60, trials = 20;
    std::uint64_t seed = 1;
    auto* check_cmd = app.add_subcommand("check", "brute-force check of farthest neighbors");
    check_cmd->add_option("-k,--k", k, "lattice resolution")->check(CLI::Range(std::size_t{2}, std::size_t{4096}))
        ->capture_default_str();
    check_cmd->add_option("--trials", trials, "random points")->capture_default_str();
    check_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    add_file(check_cmd);

    bool simple = false;
    auto* gen_cmd = app.add_subcommand("gen", "random valid domain");
    gen_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
    gen_cmd->add_flag("--simple", simple, "simple polygon without holes");
    gen_cmd->add_option("-o,--out", out, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(file);
        if (dist_cmd->parsed()) return run_dist(file, point_arg(from), point_arg(to), with_path);
        if (spm_cmd->parsed()) return run_spm(file, point_arg(from), out, svg);
        if (farthest_cmd->parsed()) return run_farthest(file, point_arg(from));
        if (center_cmd->parsed()) return run_center(file, eps, tol, !no_refine, svg);
        if (diameter_cmd->parsed()) return run_diameter(file, eps);
        if (check_cmd->parsed()) return run_check(file, k, trials, seed);
        if (gen_cmd->parsed()) return run_gen(seed, simple, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
