#include "isoptic/analysis.hpp"
#include "isoptic/angle.hpp"
#include "isoptic/fourier_body.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace isoptic;

namespace {

FourierBody triangle_rotor() { return FourierBody(30.0, {{4, 0.0, 1.0}}); }
FourierBody hexagon_rotor() { return FourierBody(80.0, {{7, 1.0, 0.0}}); }
FourierBody mixed_rotor() { return FourierBody(70.0, {{4, 0.0, 1.0}, {5, 1.0, 0.0}}); }
FourierBody square_rotor() { return FourierBody(60.0, {{5, 1.0, 0.0}}); }

} // namespace

TEST_CASE("support_eval examples")
{
    CHECK(FourierBody::disc(1.0).support(0.7, 0) == 1.0);
    // d/dt (30 + sin 4t) = 4 cos 4t
    CHECK(triangle_rotor().support(0.0, 1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(hexagon_rotor().support(kPi / 7, 0) == doctest::Approx(79.0).epsilon(1e-15));
}

TEST_CASE("support derivatives match closed forms")
{
    const auto body = mixed_rotor();
    for (double t : {0.0, 0.4, 1.3, 2.9, 5.5}) {
        CHECK(body.support(t, 0) == doctest::Approx(70 + std::sin(4 * t) + std::cos(5 * t)).epsilon(1e-14));
        CHECK(body.support(t, 1) == doctest::Approx(4 * std::cos(4 * t) - 5 * std::sin(5 * t)).epsilon(1e-13));
        CHECK(body.support(t, 2) == doctest::Approx(-16 * std::sin(4 * t) - 25 * std::cos(5 * t)).epsilon(1e-13));
    }
    CHECK_THROWS_AS((void)body.support(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)body.support(0.0, -1), std::invalid_argument);
}

TEST_CASE("support is 2pi periodic")
{
    const auto body = mixed_rotor();
    for (double t : {0.1, 2.0, 4.0})
        for (int k : {0, 1, 2})
            CHECK(body.support(t + kTwoPi, k) == doctest::Approx(body.support(t, k)).epsilon(1e-12));
}

TEST_CASE("boundary_point examples")
{
    const auto disc = FourierBody::disc(1.0);
    const auto p0 = disc.boundary_point(0.0);
    CHECK(p0.x == doctest::Approx(1.0));
    CHECK(p0.y == doctest::Approx(0.0));
    const auto p1 = disc.boundary_point(kPi / 2);
    CHECK(p1.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p1.y == doctest::Approx(1.0));
    const auto q = triangle_rotor().boundary_point(0.0);
    CHECK(q.x == doctest::Approx(30.0));
    CHECK(q.y == doctest::Approx(4.0));
}

TEST_CASE("boundary point lies on its support line")
{
    const auto body = mixed_rotor();
    for (int i = 0; i < 50; ++i) {
        const double t = 0.123 * i;
        CHECK(dot(body.boundary_point(t), unit(t)) == doctest::Approx(body.support(t)).epsilon(1e-13));
    }
}

TEST_CASE("width_profile examples")
{
    const auto disc = width_profile(FourierBody::disc(1.0), 64);
    CHECK(disc.min_width == 2.0);
    CHECK(disc.is_constant);

    const auto w6 = width_profile(hexagon_rotor(), 512);
    CHECK(w6.is_constant);
    CHECK(w6.min_width == doctest::Approx(160.0).epsilon(1e-14));
    CHECK(w6.max_width == doctest::Approx(160.0).epsilon(1e-14));

    const auto w5 = width_profile(triangle_rotor(), 1024);
    CHECK_FALSE(w5.is_constant);
    CHECK(w5.min_width == doctest::Approx(58.0).epsilon(1e-14));
    for (std::size_t i = 0; i < w5.t.size(); i += 37)
        CHECK(w5.width[i] == doctest::Approx(60 + 2 * std::sin(4 * w5.t[i])).epsilon(1e-14));

    CHECK_THROWS_AS(width_profile(triangle_rotor(), 7), std::invalid_argument);
}

TEST_CASE("perimeter examples and quadrature")
{
    CHECK(perimeter(FourierBody::disc(1.0)) == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(perimeter(mixed_rotor()) == doctest::Approx(140 * kPi).epsilon(1e-15));
    CHECK(perimeter(square_rotor()) == doctest::Approx(120 * kPi).epsilon(1e-15));

    // trapezoid of p over a period is exact for trig polynomials of degree < grid
    for (const auto& body : {triangle_rotor(), hexagon_rotor(), mixed_rotor(), square_rotor()}) {
        const int n = 1000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += body.support(kTwoPi * i / n);
        CHECK(std::abs(sum * kTwoPi / n - perimeter(body)) <= 1e-10 * perimeter(body));
    }
}

TEST_CASE("convexity_margin examples")
{
    CHECK(convexity_margin(FourierBody::disc(1.0), 64) == 1.0);
    CHECK(convexity_margin(triangle_rotor(), 1024) == doctest::Approx(15.0).epsilon(1e-14));

    const std::vector<Harmonic> bad{{7, 1.0, 0.0}};
    CHECK(convexity_margin(10.0, bad, 1024) == doctest::Approx(-38.0).epsilon(1e-14));
    CHECK_THROWS_AS(FourierBody(10.0, bad), NonConvexBody);
    try {
        FourierBody(10.0, bad);
    } catch (const NonConvexBody& e) {
        CHECK(e.margin() < 0.0);
    }
}

TEST_CASE("convexity_margin grid precondition")
{
    CHECK(min_convexity_grid(hexagon_rotor().harmonics()) == 64 * 8);
    CHECK_THROWS_AS(convexity_margin(hexagon_rotor(), 511), std::invalid_argument);
    CHECK_NOTHROW(convexity_margin(hexagon_rotor(), 512));
}

TEST_CASE("analytic bound decides when conclusive, grid otherwise")
{
    // bound 1 - 3*0.3 = 0.1 > 0
    CHECK(curvature_lower_bound(1.0, std::vector<Harmonic>{{2, 0.3, 0.0}}) == doctest::Approx(0.1));
    // bound negative but the two harmonics never align: still convex on the grid
    const FourierBody ok(0.9, {{2, 0.2, 0.0}, {3, 0.0, 0.05}});
    CHECK(curvature_lower_bound(0.9, ok.harmonics()) < 0.0);
    CHECK(convexity_margin(ok, 1024) > 0.0);
}

TEST_CASE("constructor rejects malformed harmonics")
{
    CHECK_THROWS_AS(FourierBody(1.0, {{0, 0.1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(FourierBody(1.0, {{2, 0.01, 0.0}, {2, 0.0, 0.01}}), std::invalid_argument);
    CHECK_THROWS_AS(FourierBody(0.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(FourierBody(-1.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(FourierBody(1.0, {{2, std::nan(""), 0.0}}), std::invalid_argument);
}

TEST_CASE("symmetry_predicates examples")
{
    CHECK(symmetry_predicates(hexagon_rotor()).constant_width);
    CHECK_FALSE(symmetry_predicates(hexagon_rotor()).centrally_symmetric);
    CHECK(symmetry_predicates(triangle_rotor()).centrally_symmetric);
    CHECK_FALSE(symmetry_predicates(triangle_rotor()).constant_width);
    const auto s7 = symmetry_predicates(mixed_rotor());
    CHECK_FALSE(s7.constant_width);
    CHECK_FALSE(s7.centrally_symmetric);
    CHECK_FALSE(s7.rotational_period.has_value());

    REQUIRE(symmetry_predicates(triangle_rotor()).rotational_period.has_value());
    CHECK(*symmetry_predicates(triangle_rotor()).rotational_period == doctest::Approx(kPi / 2));
    const FourierBody b(20.0, {{3, 1.0, 0.0}, {6, 0.0, 0.1}});
    CHECK(*symmetry_predicates(b).rotational_period == doctest::Approx(kTwoPi / 3));
    CHECK(rotation_invariant(b, kTwoPi / 3));
    CHECK_FALSE(rotation_invariant(b, kPi / 3));

    const auto disc = symmetry_predicates(FourierBody::disc(2.0));
    CHECK(disc.constant_width);
    CHECK(disc.centrally_symmetric);
}

TEST_CASE("order-1 harmonic is a translation")
{
    const auto body = triangle_rotor().translated(2.0, -1.5);
    const auto s = symmetry_predicates(body);
    CHECK(s.centrally_symmetric);
    for (double t : {0.0, 0.7, 2.2}) {
        const auto p = body.boundary_point(t);
        const auto q = triangle_rotor().boundary_point(t);
        CHECK(p.x == doctest::Approx(q.x + 2.0).epsilon(1e-13));
        CHECK(p.y == doctest::Approx(q.y - 1.5).epsilon(1e-13));
    }
    CHECK(body.centered() == triangle_rotor());
}

TEST_CASE("property: finite-difference derivative over random t")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    const double eps = 1e-5;
    for (const auto& body : random_corpus()) {
        const double tol = 1e-6 * body.coefficient_mass();
        for (int i = 0; i < 100; ++i) {
            const double t = ut(rng);
            const double fd = (body.support(t + eps) - body.support(t - eps)) / (2 * eps);
            CHECK(std::abs(fd - body.support(t, 1)) <= tol);
        }
    }
}

TEST_CASE("property: rotation equivariance of boundary points")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    for (const auto& body : random_corpus()) {
        const double theta = ut(rng);
        const auto rot = body.translated(0.05, -0.02).rotated(theta);
        const auto base = body.translated(0.05, -0.02);
        for (int i = 0; i < 10; ++i) {
            const double t = ut(rng);
            const auto p = base.boundary_point(t);
            const PlanePoint expected{std::cos(theta) * p.x - std::sin(theta) * p.y,
                                      std::sin(theta) * p.x + std::cos(theta) * p.y};
            CHECK(distance(rot.boundary_point(t + theta), expected) <= 1e-10);
        }
    }
}

TEST_CASE("property: scale equivariance")
{
    for (const auto& body : random_corpus()) {
        const double s = 2.5;
        const auto big = body.scaled(s);
        CHECK(perimeter(big) == s * perimeter(body));
        const auto w = width_profile(body, 256);
        const auto wb = width_profile(big, 256);
        CHECK(wb.min_width == doctest::Approx(s * w.min_width).epsilon(1e-15));
        CHECK(wb.max_width == doctest::Approx(s * w.max_width).epsilon(1e-15));
        for (double t : {0.3, 1.9, 4.4}) {
            CHECK(big.boundary_point(t).x == doctest::Approx(s * body.boundary_point(t).x).epsilon(1e-15));
            CHECK(big.boundary_point(t).y == doctest::Approx(s * body.boundary_point(t).y).epsilon(1e-15));
        }
    }
    CHECK_THROWS_AS((void)triangle_rotor().scaled(0.0), std::invalid_argument);
}

TEST_CASE("property: perimeter at least pi times minimal width")
{
    const auto corpus = random_corpus();
    REQUIRE(corpus.size() >= 20);
    for (const auto& body : corpus) {
        const auto w = width_profile(body, kDefaultGrid);
        const double L = perimeter(body);
        CHECK(L >= kPi * w.min_width - 1e-12);
        const bool equality = std::abs(L - kPi * w.min_width) <= 1e-9 * L;
        CHECK(equality == symmetry_predicates(body).constant_width);
    }
    const auto w6 = width_profile(hexagon_rotor(), kDefaultGrid);
    CHECK(perimeter(hexagon_rotor()) == doctest::Approx(kPi * w6.min_width).epsilon(1e-14));
}

TEST_CASE("random corpus is reproducible and admissible")
{
    const auto a = random_corpus(20, 0);
    const auto b = random_corpus(20, 0);
    REQUIRE(a.size() == 20);
    CHECK(a == b);
    for (const auto& body : a) {
        CHECK(body.mean_term() == 1.0);
        CHECK(convexity_margin(body, 1024) >= 0.1);
        CHECK(body.max_order() >= 2);
        CHECK(body.max_order() <= 7);
    }
    CHECK_FALSE(random_corpus(20, 1) == a);
}
