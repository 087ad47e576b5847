#include <doctest.h>

#include <cmath>
#include <random>

#include "geocenter/center.hpp"
#include "geocenter/oracle.hpp"
#include "support.hpp"

using namespace geocenter;

namespace {

const double kHalfDiag = std::sqrt(0.5);

void check_sandwich(const Geodesics& geo, const CenterEstimate& est) {
    CHECK(est.lower <= est.upper);
    CHECK(est.upper <= (1 + est.eps) * est.lower * (1 + 1e-12));
    CHECK(est.upper == doctest::Approx(phi(geo, est.c)).epsilon(1e-10));
    CHECK(geo.domain().in_domain(est.c));
}

}  // namespace

TEST_CASE("two-approximation") {
    const Geodesics square(support::unit_square());
    auto b = two_approx_radius(square, {0.5, 0.5});
    CHECK(b.upper == doctest::Approx(kHalfDiag));
    CHECK(b.lower == doctest::Approx(kHalfDiag / 2));
    b = two_approx_radius(square, {0, 0});
    CHECK(b.upper == doctest::Approx(std::sqrt(2.0)));
    CHECK(b.lower == doctest::Approx(kHalfDiag));

    const Geodesics lobes(support::fixture("three_lobe"));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        const auto r = two_approx_radius(lobes, random_point(lobes.domain(), rng));
        CHECK(r.upper == 2 * r.lower);
    }
}

TEST_CASE("grid candidates on the unit square") {
    const auto dom = support::unit_square();
    const auto set = grid_candidates(dom, 1.0);
    const double g = 1 / (4 * std::sqrt(2.0));
    CHECK(set.step == doctest::Approx(g));
    // Lattice points i*g with i = 0..5 in both axes, then the crossings of the
    // right and top sides with the six grid lines, then the far corner.
    const int per_axis = int(std::floor(1 / g)) + 1;
    CHECK(per_axis == 6);
    CHECK(set.points.size() == std::size_t(per_axis * per_axis + 2 * per_axis + 1));
    for (Point z : set.points) CHECK(dom.in_domain(z));
    CHECK(std::is_sorted(set.points.begin(), set.points.end(), lex_less));

    CHECK_THROWS_AS(grid_candidates(dom, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(grid_candidates(dom, 1.5), std::invalid_argument);
}

TEST_CASE("grid candidate count grows fourfold when eps halves") {
    const auto dom = support::holed_square();
    for (double eps : {0.2, 0.1}) {
        const double ratio = double(grid_candidates(dom, eps / 2).points.size()) / grid_candidates(dom, eps).points.size();
        CAPTURE(eps);
        CHECK(ratio >= 3);
        CHECK(ratio <= 5);
    }
    for (const std::string name : support::kFixtures) {
        const auto d = support::fixture(name);
        const auto set = grid_candidates(d, 0.3);
        CHECK_FALSE(set.points.empty());
        for (Point z : set.points) CHECK(d.in_domain(z));
        const double area_estimate = d.area() / (set.step * set.step);
        CHECK(set.points.size() >= 0.5 * area_estimate);
    }
}

TEST_CASE("approximate center of convex fixtures") {
    const Geodesics square(support::unit_square());
    const auto est = approx_center(square, 0.1);
    check_sandwich(square, est);
    CHECK(est.upper >= kHalfDiag - 1e-12);
    CHECK(est.upper <= 1.1 * kHalfDiag);
    CHECK(dist(est.c, {0.5, 0.5}) <= grid_candidates(square.domain(), 0.1).step);
    CHECK(est.candidates_evaluated == grid_candidates(square.domain(), 0.1).points.size());
    CHECK(est.witnesses.size() >= 1);

    const Geodesics tri(support::fixture("triangle"));
    const auto t = approx_center(tri, 0.1);
    check_sandwich(tri, t);
    const double circumradius = 1 / std::sqrt(3.0);
    CHECK(t.upper >= circumradius - 1e-9);
    CHECK(t.upper <= 1.1 * circumradius);
}

TEST_CASE("refinement") {
    const Geodesics square(support::unit_square());
    const auto r = refine_center(square, Point{0.3, 0.3}, 1e-6);
    CHECK(dist(r.c, {0.5, 0.5}) <= 1e-5);
    CHECK(std::abs(r.upper - kHalfDiag) <= 1e-6);
    CHECK(r.upper <= phi(square, {0.3, 0.3}));
    CHECK(r.lower == doctest::Approx(phi(square, {0.3, 0.3}) / 2));

    for (const std::string name : {"holed_square", "triangle_hole"}) {
        const Geodesics geo(support::fixture(name));
        const auto grid = approx_center(geo, 0.2);
        const auto refined = refine_center(geo, grid, 1e-6);
        CHECK(refined.upper <= grid.upper);
        CHECK(refined.lower == grid.lower);
        CHECK(refined.eps == grid.eps);
        CHECK(refined.upper == doctest::Approx(phi(geo, refined.c)).epsilon(1e-10));
    }
}

TEST_CASE("grid optimum is not beaten by random points") {
    for (const std::string name : {"unit_square", "triangle", "holed_square", "triangle_hole"}) {
        CAPTURE(name);
        const Geodesics geo(support::fixture(name));
        const double eps = 0.2;
        const auto est = approx_center(geo, eps);
        check_sandwich(geo, est);
        std::mt19937_64 rng(71);
        std::vector<Point> qs;
        for (int i = 0; i < 100; ++i) qs.push_back(random_point(geo.domain(), rng));
        for (double v : phi_many(geo, qs)) CHECK(est.upper <= v + eps * est.upper);

        const auto finer = approx_center(geo, eps / 2);
        CHECK(finer.upper <= est.upper + geo.domain().tolerance().slack(est.upper));
    }
}

TEST_CASE("diameter") {
    const Geodesics square(support::unit_square());
    auto d = approx_diameter(square, 0.1);
    CHECK(d.lower >= std::sqrt(2.0) / 1.1);
    CHECK(d.lower <= std::sqrt(2.0) + 1e-12);
    CHECK(d.upper >= std::sqrt(2.0));

    const Geodesics holed(support::holed_square());
    d = approx_diameter(holed, 0.2);
    const double corner_to_corner = dense_distance(holed.domain(), {0, 0}, {10, 10}, 20);
    CHECK(d.lower == doctest::Approx(corner_to_corner).epsilon(1e-9));
    CHECK(holed.distance(d.from, d.to).distance == doctest::Approx(d.lower).epsilon(1e-12));

    // rad <= diam <= 2 rad, checked through the certified brackets.
    for (const std::string name : support::kFixtures) {
        CAPTURE(name);
        const Geodesics geo(support::fixture(name));
        const auto c = approx_center(geo, 0.3);
        const auto dm = approx_diameter(geo, 0.3);
        CHECK(dm.lower <= dm.upper);
        CHECK(dm.lower <= 2 * c.upper + geo.domain().tolerance().slack(c.upper));
        CHECK(c.lower <= dm.upper);
    }
}
