// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "geocenter/center.hpp"
#include "geocenter/oracle.hpp"
#include "geocenter/spm.hpp"
#include "support.hpp"

using namespace geocenter;

namespace {

constexpr double kHalfDiag = 0.70710678118654752;

// 1
constexpr double kSquareEps = 0.05;
constexpr double kSquareLow = 0.707106;
constexpr double kSquareHigh = 1.05 * 0.707107;
constexpr double kRefineGap = 1e-4;
constexpr double kTriangleRel = 0.05;
constexpr double kConvexSeconds = 10.0;
// 2
constexpr std::size_t kLemmaDomains = 20;
constexpr std::size_t kLemmaPoints = 20;
constexpr std::size_t kLemmaK = 60;
constexpr double kLemmaSeconds = 300.0;
// 3
constexpr std::size_t kSimplePolygons = 10;
constexpr std::size_t kSimplePoints = 10;
// 4
constexpr double kSandwichEps = 0.1;
constexpr std::size_t kSandwichSamples = 1000;
constexpr std::size_t kSandwichK = 40;
// 5
constexpr std::size_t kMetricTriples = 1000;
constexpr double kMetricRel = 1e-9;
// 6
constexpr std::size_t kSpmSources = 10;
constexpr double kCoverage = 0.005;
constexpr double kBisectorRel = 1e-9;
constexpr std::size_t kCountFactor = 8;
// 7
constexpr double kLobeGridEps = 0.1;
constexpr double kLobeRefineTol = 1e-7;
constexpr double kLobeCenterGap = 1e-3;
constexpr double kLobeWitnessGap = 1e-6;
// 8
constexpr std::size_t kOraclePairs = 100;
constexpr std::size_t kOracleKs[] = {20, 40, 80};

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Outcome convex_fixtures() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    const Geodesics square(support::fixture("unit_square"));
    const CenterEstimate grid = approx_center(square, kSquareEps);
    const CenterEstimate refined = refine_center(square, grid, 1e-7);
    const double gap = dist(refined.c, {0.5, 0.5});
    const double t_square = seconds_since(t0);
    const bool square_ok =
        grid.upper >= kSquareLow && grid.upper <= kSquareHigh && gap <= kRefineGap && t_square < kConvexSeconds;

    t0 = std::chrono::steady_clock::now();
    const Geodesics tri(support::fixture("triangle"));
    const CenterEstimate t = approx_center(tri, kSquareEps);
    const double circumradius = 1.0 / std::sqrt(3.0);
    const double rel = std::abs(t.upper - circumradius) / circumradius;
    const double t_tri = seconds_since(t0);
    const bool tri_ok = rel <= kTriangleRel && t_tri < kConvexSeconds;

    out.pass = square_ok && tri_ok;
    out.detail = fmt("square U=%.9f in [%.6f, %.6f], refined gap %.2e (%.1fs); triangle U=%.9f rel %.2e (%.1fs)",
                     grid.upper, kSquareLow, kSquareHigh, gap, t_square, t.upper, rel, t_tri);
    return out;
}

Outcome lemma_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t passed = 0, total = 0, max_n = 0, max_h = 0;
    double worst_gap_ratio = 0;
    for (std::size_t i = 0; i < kLemmaDomains; ++i) {
        const RawDomain raw = random_domain(1000 + i);
        const Geodesics geo(PolygonalDomain::from_rings(raw.outer, raw.holes));
        max_n = std::max(max_n, geo.domain().corner_count());
        max_h = std::max(max_h, geo.domain().hole_count());
        const Lemma1Report report = check_lemma1(geo, kLemmaPoints, kLemmaK, 77 + i);
        passed += report.passed();
        total += report.trials.size();
        for (const Lemma1Trial& t : report.trials) worst_gap_ratio = std::max(worst_gap_ratio, t.vertex_gap / report.spacing);
    }
    const double secs = seconds_since(t0);
    Outcome out;
    out.pass = passed == total && total == kLemmaDomains * kLemmaPoints && max_n <= 40 && max_h <= 3 &&
               secs < kLemmaSeconds;
    out.detail = fmt("%zu/%zu trials, k=%zu, n<=%zu, h<=%zu, worst argmax gap %.2f spacings (%.1fs)", passed, total,
                     kLemmaK, max_n, max_h, worst_gap_ratio, secs);
    return out;
}

Outcome simple_polygon_corners() {
    std::size_t witnesses = 0, off_corner = 0;
    double worst = 0;
    for (std::size_t i = 0; i < kSimplePolygons; ++i) {
        const RawDomain raw = random_simple_polygon(2000 + i);
        const Geodesics geo(PolygonalDomain::from_rings(raw.outer, raw.holes));
        const double tau = geo.domain().tolerance().tau_abs;
        std::mt19937_64 rng(i);
        for (std::size_t j = 0; j < kSimplePoints; ++j) {
            for (const SpmVertex& w : farthest_neighbors(geo, random_point(geo.domain(), rng)).witnesses) {
                double gap = INFINITY;
                for (const Corner& c : geo.domain().corners()) gap = std::min(gap, dist(c.p, w.p));
                worst = std::max(worst, gap / tau);
                ++witnesses;
                off_corner += gap >= tau;
            }
        }
    }
    Outcome out;
    out.pass = off_corner == 0 && witnesses > 0;
    out.detail = fmt("%zu witnesses over %zu polygons x %zu points, %zu off a corner, worst gap %.2g tau", witnesses,
                     kSimplePolygons, kSimplePoints, off_corner, worst);
    return out;
}

Outcome sandwich() {
    Outcome out;
    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        const CenterEstimate est = approx_center(geo, kSandwichEps);
        const bool bracket = est.lower <= est.upper && est.upper <= (1 + est.eps) * est.lower * (1 + 1e-12);
        const bool consistent = std::abs(est.upper - phi(geo, est.c)) <= geo.domain().tolerance().slack(est.upper);

        const DenseGraph graph(geo.domain(), kSandwichK);
        const double slack = 2.0 * graph.cell_diagonal();
        std::mt19937_64 rng(4242);
        double best = INFINITY;
        for (std::size_t i = 0; i < kSandwichSamples; ++i) {
            best = std::min(best, brute_phi(graph, random_point(geo.domain(), rng)).value);
        }
        const bool beaten = est.upper > (1 + est.eps) * (best + slack);
        out.pass = out.pass && bracket && consistent && !beaten;
        out.detail += fmt("%s%s U=%.6f L=%.6f min brute=%.6f%s", out.detail.empty() ? "" : "; ", name.c_str(), est.upper, est.lower, best,
                          bracket && consistent && !beaten ? "" : " VIOLATED");
    }
    out.detail = fmt("eps=%.2f, %zu samples, k=%zu: ", kSandwichEps, kSandwichSamples, kSandwichK) + out.detail;
    return out;
}

Outcome metric_fuzz() {
    Outcome out;
    std::size_t failures = 0;
    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        std::mt19937_64 rng(5150);
        for (std::size_t i = 0; i < kMetricTriples; ++i) {
            const Point s = random_point(geo.domain(), rng), u = random_point(geo.domain(), rng),
                        t = random_point(geo.domain(), rng);
            const double st = geo.distance(s, t).distance, ts = geo.distance(t, s).distance;
            const double su = geo.distance(s, u).distance, ut = geo.distance(u, t).distance;
            const double rel = kMetricRel * std::max({1.0, st, su + ut});
            const bool ok = std::abs(st - ts) <= rel && st >= dist(s, t) - rel && su + ut >= st - rel;
            failures += !ok;
        }
    }
    out.pass = failures == 0;
    out.detail = fmt("%zu triples per fixture, %zu violations at %.0e relative", kMetricTriples, failures, kMetricRel);
    return out;
}

Outcome spm_structure() {
    Outcome out;
    double worst_cover = 0, worst_bisector = 0, worst_count = 0;
    std::size_t malformed = 0, lone_non_corner = 0, maps = 0;
    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        const PolygonalDomain& dom = geo.domain();
        std::mt19937_64 rng(606);
        for (std::size_t i = 0; i < kSpmSources; ++i) {
            const ShortestPathMap spm = build_spm(geo, random_point(dom, rng));
            ++maps;
            malformed += spm.malformed_faces();
            double area = 0;
            for (const SpmCell& c : spm.cells()) area += c.area;
            worst_cover = std::max(worst_cover, std::abs(area - dom.area()) / dom.area());
            for (const BisectorArc& a : spm.arcs()) {
                for (Point x : a.polyline) {
                    const double va = spm.root_value(a.root_a, x), vb = spm.root_value(a.root_b, x);
                    worst_bisector = std::max(worst_bisector, std::abs(va - vb) / std::max(va, vb));
                }
            }
            const double n = double(dom.corner_count());
            worst_count = std::max({worst_count, spm.vertices().size() / n, spm.edge_count() / n, spm.cells().size() / n});
            for (const SpmVertex& v : spm.vertices()) {
                if (v.roots.size() != 1) continue;
                double gap = INFINITY;
                for (const Corner& c : dom.corners()) gap = std::min(gap, dist(c.p, v.p));
                lone_non_corner += v.cls != VertexClass::corner || gap > dom.tolerance().tau_abs;
            }
        }
    }
    out.pass = worst_cover <= kCoverage && worst_bisector <= kBisectorRel && worst_count <= kCountFactor &&
               lone_non_corner == 0 && malformed == 0;
    out.detail = fmt("%zu maps: coverage error %.2e, bisector mismatch %.2e, max count/n %.2f, %zu single-root "
                     "non-corners, %zu malformed faces",
                     maps, worst_cover, worst_bisector, worst_count, lone_non_corner, malformed);
    return out;
}

Outcome three_lobe() {
    const Geodesics geo(support::fixture("three_lobe"));
    const Point fixed{0, 0};
    const CenterEstimate grid = approx_center(geo, kLobeGridEps);
    const CenterEstimate refined = refine_center(geo, grid, kLobeRefineTol);
    const double center_gap = dist(refined.c, fixed);

    const FarthestNeighbors fn = farthest_neighbors(geo, fixed);
    double spread = 0;
    bool triples = fn.witnesses.size() == 3;
    for (const SpmVertex& a : fn.witnesses) {
        triples = triples && a.cls == VertexClass::interior && a.roots.size() == 3;
        for (const SpmVertex& b : fn.witnesses) spread = std::max(spread, std::abs(a.distance - b.distance));
    }
    std::size_t paths = 0;
    for (const SpmVertex& w : fn.witnesses) paths += w.roots.size();

    Outcome out;
    out.pass = center_gap <= kLobeCenterGap && triples && spread < kLobeWitnessGap;
    out.detail = fmt("grid c=(%.4f, %.4f), refined c=(%.2e, %.2e) gap %.2e; phi=%.9f with %zu witnesses, "
                     "%zu equal paths, spread %.2e",
                     grid.c.x, grid.c.y, refined.c.x, refined.c.y, center_gap, fn.phi, fn.witnesses.size(), paths,
                     spread);
    return out;
}

Outcome oracle_convergence() {
    Outcome out;
    std::size_t non_monotone = 0, outside_bound = 0;
    double worst_ratio = 0;
    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        const PolygonalDomain& dom = geo.domain();
        std::vector<DenseGraph> graphs;
        for (std::size_t k : kOracleKs) graphs.emplace_back(dom, k);
        const double tau = dom.tolerance().tau_abs;
        std::mt19937_64 rng(8080);
        for (std::size_t i = 0; i < kOraclePairs; ++i) {
            const Point s = random_point(dom, rng), t = random_point(dom, rng);
            const double exact = geo.distance(s, t).distance;
            double prev = INFINITY;
            for (const DenseGraph& g : graphs) {
                const double d = g.distance(s, t);
                non_monotone += d > prev + tau;
                const double bound = 4.0 * dom.bbox().diagonal() / double(g.resolution());
                outside_bound += d - exact > bound || d < exact - tau;
                worst_ratio = std::max(worst_ratio, (d - exact) / bound);
                prev = d;
            }
        }
    }
    out.pass = non_monotone == 0 && outside_bound == 0;
    out.detail = fmt("%zu pairs per fixture at k=20,40,80: %zu non-monotone, %zu outside 4*diag/k, worst excess %.2e "
                     "of the bound",
                     kOraclePairs, non_monotone, outside_bound, worst_ratio);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"convex fixtures", convex_fixtures},
        {"farthest points are map vertices (brute force)", lemma_suite},
        {"simple polygon witnesses are corners", simple_polygon_corners},
        {"(1+eps) sandwich", sandwich},
        {"metric fuzz", metric_fuzz},
        {"shortest path map structure", spm_structure},
        {"three-lobe domain", three_lobe},
        {"dense oracle convergence", oracle_convergence},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        all = all && o.pass;
        std::printf("criterion %zu %s: %s [%.1fs] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    seconds_since(t0), o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
