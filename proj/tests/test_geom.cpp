#include <doctest.h>

#include <algorithm>
#include <random>

#include "geocenter/geom.hpp"

using namespace geocenter;

TEST_CASE("orient signs") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orient({0, 0}, {0, 1}, {1, 1}) == -1);
}

TEST_CASE("orient flips under argument swaps") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int i = 0; i < 1000; ++i) {
        const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        const int s = orient(a, b, c);
        CHECK(orient(b, a, c) == -s);
        CHECK(orient(a, c, b) == -s);
        CHECK(orient(c, b, a) == -s);
        CHECK(orient(b, c, a) == s);
    }
}

TEST_CASE("segment contacts") {
    auto r = segment_intersection({0, 0}, {2, 2}, {0, 2}, {2, 0});
    CHECK(r.kind == ContactKind::crossing);
    CHECK(dist(r.witness[0], {1, 1}) < 1e-12);

    r = segment_intersection({0, 0}, {1, 0}, {1, 0}, {2, 0});
    CHECK(r.kind == ContactKind::touch);
    CHECK(dist(r.witness[0], {1, 0}) < 1e-12);

    CHECK(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}).kind == ContactKind::disjoint);

    r = segment_intersection({0, 0}, {3, 0}, {1, 0}, {5, 0});
    CHECK(r.kind == ContactKind::overlap);

    CHECK_THROWS_AS(segment_intersection({0, 0}, {0, 0}, {1, 1}, {2, 2}), GeometryError);
}

TEST_CASE("segment contact is symmetric in its two segments") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> u(0, 4);
    for (int i = 0; i < 2000; ++i) {
        // Small integer grid so touches and overlaps are frequent.
        const Point a{double(u(rng)), double(u(rng))}, b{double(u(rng)), double(u(rng))};
        const Point c{double(u(rng)), double(u(rng))}, d{double(u(rng)), double(u(rng))};
        if (a == b || c == d) continue;
        CHECK(segment_intersection(a, b, c, d).kind == segment_intersection(c, d, a, b).kind);
    }
}

TEST_CASE("point in ring") {
    const Ring square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(point_in_ring({0.5, 0.5}, square) == Location::inside);
    CHECK(point_in_ring({1, 0.5}, square) == Location::boundary);
    CHECK(point_in_ring({2, 2}, square) == Location::outside);

    const Ring bow{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(point_in_ring({0.5, 0.2}, bow), GeometryError);
}

TEST_CASE("point in ring ignores rotation and orientation") {
    Ring ring{{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}};
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 5);
    std::vector<Point> probes{{2, 1}, {1, 0}, {2, 2}, {3, 1.5}};
    for (int i = 0; i < 300; ++i) probes.push_back({u(rng), u(rng)});
    for (Point p : probes) {
        const Location expect = point_in_ring(p, ring);
        Ring r = ring;
        for (std::size_t k = 0; k < ring.size(); ++k) {
            std::rotate(r.begin(), r.begin() + 1, r.end());
            CHECK(point_in_ring(p, r) == expect);
        }
        Ring rev(ring.rbegin(), ring.rend());
        CHECK(point_in_ring(p, rev) == expect);
    }
}

TEST_CASE("shoelace area") {
    const Ring square{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(signed_area(square) == doctest::Approx(4));
    const Ring rev(square.rbegin(), square.rend());
    CHECK(signed_area(rev) == doctest::Approx(-4));
    CHECK(is_simple_ring(square));
    CHECK_FALSE(is_simple_ring(Ring{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
}
