#include <doctest.h>

#include <cmath>
#include <random>

#include "geocenter/geodesic.hpp"
#include "geocenter/oracle.hpp"
#include "support.hpp"

using namespace geocenter;

namespace {

std::size_t corner(const PolygonalDomain& dom, Point p) { return *dom.corner_at(p); }

double segment_sum(const Geodesics& geo, const GeodesicPath& path) {
    Point prev = path.source;
    double len = 0;
    for (std::size_t v : path.corners) {
        const Point q = geo.domain().corners()[v].p;
        CHECK(visible(geo.domain(), prev, q));
        len += dist(prev, q);
        prev = q;
    }
    CHECK(visible(geo.domain(), prev, path.target));
    return len + dist(prev, path.target);
}

}  // namespace

TEST_CASE("distance examples") {
    const Geodesics square(support::unit_square());
    auto r = square.distance({0, 0}, {1, 1});
    CHECK(r.distance == doctest::Approx(std::sqrt(2.0)));
    CHECK(r.path.corners.empty());
    CHECK(square.distance({0.3, 0.7}, {0.3, 0.7}).distance == 0);

    const Geodesics holed(support::holed_square());
    r = holed.distance({2, 5}, {8, 5});
    CHECK(r.distance == doctest::Approx(2 + 2 * std::sqrt(5.0)).epsilon(1e-12));
    REQUIRE(r.path.corners.size() == 2);
    // Both detours have equal length; the smaller index sequence wins.
    const std::vector<std::size_t> above{corner(holed.domain(), {4, 6}), corner(holed.domain(), {6, 6})};
    const std::vector<std::size_t> below{corner(holed.domain(), {4, 4}), corner(holed.domain(), {6, 4})};
    CHECK(r.path.corners == std::min(above, below));
    CHECK(r.path.length == doctest::Approx(r.distance).epsilon(1e-12));
    CHECK_THROWS_AS(holed.distance({5, 5}, {1, 1}), OutsideDomain);
}

TEST_CASE("path length function") {
    const Geodesics holed(support::holed_square());
    const auto& dom = holed.domain();
    const std::size_t u = corner(dom, {4, 4}), v = corner(dom, {6, 4});
    CHECK(holed.path_length(u, v, {2, 5}, {8, 5}) == doctest::Approx(std::sqrt(5.0) + 2 + std::sqrt(5.0)));
    CHECK(holed.path_length(u, u, {2, 5}, {3, 1}) == doctest::Approx(std::sqrt(5.0) + std::sqrt(10.0)));
    CHECK(holed.path_length(u, v, {4, 4}, {6, 4}) == doctest::Approx(2));
    CHECK_THROWS_AS(holed.path_length(u, v, {8, 5}, {2, 5}), PreconditionError);
}

TEST_CASE("corner distance table") {
    const Geodesics square(support::unit_square());
    CHECK(square.table()(0, 2) == doctest::Approx(std::sqrt(2.0)));

    const Geodesics holed(support::holed_square());
    const auto& dom = holed.domain();
    CHECK(holed.table()(corner(dom, {4, 4}), corner(dom, {6, 6})) == doctest::Approx(4));

    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        const auto& t = geo.table();
        for (std::size_t a = 0; a < t.size(); ++a) {
            CHECK(t(a, a) == 0);
            for (std::size_t b = 0; b < t.size(); ++b) CHECK(t(a, b) == t(b, a));
        }
    }
}

TEST_CASE("shortest path tree") {
    const Geodesics square(support::unit_square());
    const auto star = square.shortest_path_tree({0.4, 0.6});
    for (long p : star.parent) CHECK(p == kSourceNode);

    const Geodesics holed(support::holed_square());
    const auto& dom = holed.domain();
    const auto tree = holed.shortest_path_tree({2, 5});
    CHECK(tree.parent[corner(dom, {6, 4})] == long(corner(dom, {4, 4})));

    for (const std::string name : support::kFixtures) {
        const Geodesics geo(support::fixture(name));
        std::mt19937_64 rng(31);
        const Point s = random_point(geo.domain(), rng);
        const auto t = geo.shortest_path_tree(s);
        const auto& corners = geo.domain().corners();
        for (std::size_t v = 0; v < corners.size(); ++v) {
            CHECK(t.dist[v] >= dist(s, corners[v].p) - 1e-12);
            // Walking parents reaches the source through visibility edges.
            std::size_t steps = 0;
            long cur = long(v);
            while (cur != kSourceNode && steps++ <= corners.size()) {
                const long par = t.parent[cur];
                const Point from = par == kSourceNode ? s : corners[par].p;
                const double through = (par == kSourceNode ? 0.0 : t.dist[par]) + dist(from, corners[cur].p);
                CHECK(through == doctest::Approx(t.dist[cur]).epsilon(1e-10));
                CHECK(visible(geo.domain(), from, corners[cur].p));
                cur = par;
            }
            CHECK(cur == kSourceNode);
        }
    }
}

TEST_CASE("metric properties and dense oracle agreement") {
    for (const std::string name : support::kFixtures) {
        CAPTURE(name);
        const Geodesics geo(support::fixture(name));
        const auto& dom = geo.domain();
        const DenseGraph dense(dom, 8);
        std::mt19937_64 rng(41);
        for (int i = 0; i < 100; ++i) {
            const Point s = random_point(dom, rng), t = random_point(dom, rng), u = random_point(dom, rng);
            const auto st = geo.distance(s, t);
            const double scale = 1e-9 * std::max(1.0, st.distance);
            CHECK(std::abs(st.distance - geo.distance(t, s).distance) <= scale);
            CHECK(st.distance >= dist(s, t) - scale);
            CHECK(geo.distance(s, u).distance + geo.distance(u, t).distance >= st.distance - scale);
            CHECK(std::abs(segment_sum(geo, st.path) - st.distance) <= scale);
            CHECK(st.path.corners.empty() == visible(dom, s, t));
            // The dense graph joins every corner to everything it sees, so
            // with the corners present it reproduces the exact distance.
            CHECK(std::abs(dense.distance(s, t) - st.distance) <= scale);
        }
    }
}
