#include "isoptic/analysis.hpp"
#include "isoptic/angle.hpp"
#include "isoptic/rotor_builder.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace isoptic;

namespace {

FourierBody triangle_rotor() { return FourierBody(30.0, {{4, 0.0, 1.0}}); }
FourierBody hexagon_rotor() { return FourierBody(80.0, {{7, 1.0, 0.0}}); }
FourierBody mixed_rotor() { return FourierBody(70.0, {{4, 0.0, 1.0}, {5, 1.0, 0.0}}); }
FourierBody square_rotor() { return FourierBody(60.0, {{5, 1.0, 0.0}}); }

std::vector<double> ten_angles()
{
    std::vector<double> out;
    for (int i = 1; i <= 10; ++i)
        out.push_back(kPi * i / 11.0);
    return out;
}

} // namespace

TEST_CASE("disc_reference examples")
{
    const auto r1 = disc_reference(1.0, kPi / 2);
    CHECK(r1.chords.a == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r1.chords.b == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r1.chords.h == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r1.chords.c == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r1.chords.d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r1.chords.q == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r1.chords.lambda == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r1.isoptic_radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const auto r2 = disc_reference(2.0, kPi / 3);
    CHECK(r2.chords.c == doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.chords.lambda == doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.chords.d == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-15));

    const auto disc = FourierBody::disc(1.0);
    for (double alpha : {0.4, 1.2, 2.7}) {
        const auto ref = disc_reference(1.0, alpha);
        const auto got = tangent_chords(disc, alpha, 0.9);
        for (Chord w : kAllChords)
            CHECK(got.get(w) == doctest::Approx(ref.chords.get(w)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(disc_reference(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(disc_reference(1.0, kPi), std::invalid_argument);
}

TEST_CASE("mean_chord_c examples")
{
    CHECK(mean_chord_c(FourierBody::disc(2.0), 1.0) == doctest::Approx(4.0 / std::tan(0.5)).epsilon(1e-14));
    CHECK(mean_chord_c(mixed_rotor(), kPi / 3) == doctest::Approx(140 * std::sqrt(3.0)).epsilon(1e-14));
    CHECK(mean_chord_c(mixed_rotor(), kPi / 3) == doctest::Approx(242.487113).epsilon(1e-9));
    CHECK(mean_chord_c(triangle_rotor(), kPi / 3) == doctest::Approx(103.923048).epsilon(1e-8));
    CHECK(mean_chord_c(triangle_rotor(), kPi / 3) == doctest::Approx(tangent_chords(triangle_rotor(), kPi / 3, 0.77).c).epsilon(1e-12));
}

TEST_CASE("property: mean chord identity over corpus and angles")
{
    for (const auto& body : random_corpus())
        for (double alpha : ten_angles()) {
            const double m = mean_chord_c(body, alpha);
            CHECK(std::abs(quadrature_mean_c(body, alpha) - m) <= 1e-9 * m);
        }
}

TEST_CASE("check_constant_c examples")
{
    const auto r5 = check_constant_c(triangle_rotor(), kPi / 3);
    CHECK(r5.verdict == Verdict::pass);
    CHECK(r5.measurements.at("c_relative_spread") <= 1e-9);
    CHECK(r5.measurements.count("det_c[n=4]") == 1);
    CHECK(r5.theorem == "1");

    const auto r8 = check_constant_c(square_rotor(), 2 * kPi / 5);
    CHECK(r8.verdict == Verdict::fail);
    CHECK(r8.measurements.at("c_relative_spread") > 1e-3);
    CHECK(r8.measurements.at("det_c[n=5]") > 1e-6);

    CHECK(check_constant_c(FourierBody::disc(3.0), 2.2).verdict == Verdict::pass);
}

TEST_CASE("check_constant_h")
{
    CHECK(check_constant_h(FourierBody::disc(1.0), 1.0).verdict == Verdict::pass);
    const auto r = check_constant_h(triangle_rotor(), kPi / 3);
    CHECK(r.verdict == Verdict::fail);
    CHECK(r.measurements.at("min_det_h") > 0.0);
}

TEST_CASE("check_lambda_equals_2d examples")
{
    const FourierBody sym(20.0, {{3, 1.0, 0.0}});
    const auto r = check_lambda_equals_2d(sym, kPi / 3);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.measurements.at("max_rel_diff_lambda_2d") <= 1e-9);
    CHECK(r.theorem == "4");

    const auto disc = check_lambda_equals_2d(FourierBody::disc(1.5), 1.1);
    CHECK(disc.verdict == Verdict::pass);
    CHECK(disc.measurements.at("max_rel_diff_radius_lambda_over_2sin") <= 1e-9);
    CHECK(4 * 1.5 * std::cos(0.55) / (2 * std::sin(1.1)) == doctest::Approx(1.5 / std::sin(0.55)).epsilon(1e-14));

    const auto gated = check_lambda_equals_2d(triangle_rotor(), kPi / 3);
    CHECK(gated.verdict == Verdict::informational);
    CHECK(gated.measurements.at("symmetry_gate") == 0.0);
}

TEST_CASE("lambda = 2d pointwise under the 2alpha symmetry as well")
{
    // invariance under rotation by 2alpha = 2pi/5 * 2 for a 5-fold body
    const FourierBody body(40.0, {{5, 0.7, 0.2}});
    const auto r = check_lambda_equals_2d(body, kPi / 5);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("check_lambda_inequality examples")
{
    const double R = 2.0;
    const auto disc = check_lambda_inequality(FourierBody::disc(R), kPi / 2);
    CHECK(disc.verdict == Verdict::pass);
    CHECK(disc.measurements.at("equality_everywhere") == 1.0);
    CHECK(disc.measurements.at("lambda_max") == doctest::Approx(4 * R * std::cos(kPi / 4)).epsilon(1e-13));

    const auto r5 = check_lambda_inequality(triangle_rotor(), kPi / 3);
    CHECK(r5.verdict == Verdict::pass);
    CHECK(r5.measurements.at("omega0") == doctest::Approx(58.0).epsilon(1e-12));
    CHECK(r5.measurements.at("lambda_max") > 2 * 58 * std::cos(kPi / 6));
    CHECK(r5.measurements.at("equality_everywhere") == 0.0);

    const auto r6 = check_lambda_inequality(hexagon_rotor(), 2 * kPi / 3);
    CHECK(r6.verdict == Verdict::pass);
    CHECK(r6.measurements.at("perimeter") ==
          doctest::Approx(kPi * r6.measurements.at("omega0")).epsilon(1e-12));
    CHECK(r6.measurements.at("chained_bound") == doctest::Approx(r6.measurements.at("bound_2w0cos")).epsilon(1e-12));
}

TEST_CASE("check_q_inequality examples")
{
    const double R = 1.3;
    const auto disc = check_q_inequality(FourierBody::disc(R), 0.8);
    CHECK(disc.verdict == Verdict::pass);
    CHECK(disc.measurements.at("equality_everywhere") == 1.0);
    CHECK(disc.measurements.at("q_max") == doctest::Approx(2 * R * std::cos(0.4)).epsilon(1e-13));

    const auto r5 = check_q_inequality(triangle_rotor(), kPi / 2);
    CHECK(r5.verdict == Verdict::pass);
    CHECK(r5.measurements.at("q_max") > 58 * std::cos(kPi / 4));

    CHECK(check_q_inequality(mixed_rotor(), kPi / 3).verdict == Verdict::pass);
}

TEST_CASE("property: inequality suites pass on the corpus")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(0.2, kPi - 0.2);
    for (const auto& body : random_corpus()) {
        const double alpha = ua(rng);
        CHECK(check_lambda_inequality(body, alpha).verdict == Verdict::pass);
        CHECK(check_q_inequality(body, alpha).verdict == Verdict::pass);
    }
}

TEST_CASE("triangle_bound_check examples")
{
    for (double t : {0.0, 1.0, 4.0}) {
        const auto d = triangle_bound_check(FourierBody::disc(1.0), 1.2, t);
        CHECK(d.ok);
        CHECK(d.equality);
        CHECK(d.lhs == doctest::Approx(d.rhs).epsilon(1e-12));
    }
    for (double t : {0.0, 0.5, 2.0}) {
        CHECK(triangle_bound_check(triangle_rotor(), kPi / 3, t).equality);
        CHECK(triangle_bound_check(hexagon_rotor(), 2 * kPi / 3, t).equality);
        CHECK(triangle_bound_check(square_rotor(), kPi / 2, t).equality);
    }
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi);
    bool strict = false;
    for (int i = 0; i < 50; ++i) {
        const auto r = triangle_bound_check(square_rotor(), 2 * kPi / 5, ut(rng));
        CHECK(r.ok);
        strict = strict || (!r.equality && r.lhs > r.rhs);
    }
    CHECK(strict);
}

TEST_CASE("property: triangle bound holds across the corpus")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ut(0.0, kTwoPi), ua(0.2, kPi - 0.2);
    for (const auto& body : random_corpus())
        for (int i = 0; i < 20; ++i)
            CHECK(triangle_bound_check(body, ua(rng), ut(rng)).ok);
}

TEST_CASE("property: reports scale with the body")
{
    const double s = 3.0;
    for (const auto& body : random_corpus(5, 2)) {
        const double alpha = 1.1;
        const auto a = check_lambda_inequality(body, alpha);
        const auto b = check_lambda_inequality(body.scaled(s), alpha);
        CHECK(a.verdict == b.verdict);
        for (const char* key : {"omega0", "perimeter", "lambda_max", "lambda_min", "bound_2w0cos"})
            CHECK(b.measurements.at(key) == doctest::Approx(s * a.measurements.at(key)).epsilon(1e-12));
        const auto qa = check_q_inequality(body, alpha);
        const auto qb = check_q_inequality(body.scaled(s), alpha);
        CHECK(qa.verdict == qb.verdict);
        CHECK(qb.measurements.at("q_max") == doctest::Approx(s * qa.measurements.at("q_max")).epsilon(1e-12));
        CHECK(check_constant_c(body, alpha).verdict == check_constant_c(body.scaled(s), alpha).verdict);
    }
}

TEST_CASE("property: no corpus body has constant c and constant q together")
{
    for (const auto& body : random_corpus())
        for (double alpha : ten_angles()) {
            const double cs = profile(body, alpha, Chord::c, 512).stats.relative_spread;
            const double qs = profile(body, alpha, Chord::q, 512).stats.relative_spread;
            CHECK_FALSE((cs <= 1e-9 && qs <= 1e-9));
        }
}

TEST_CASE("property: constant h only for a disc")
{
    for (const auto& body : random_corpus())
        for (double alpha : ten_angles())
            CHECK(check_constant_h(body, alpha, 1e-9, 512).verdict == Verdict::fail);
    CHECK(check_constant_h(FourierBody::disc(2.0), 0.6).measurements.at("all_harmonics_vanish") == 1.0);
}

TEST_CASE("lambda equality search reports findings")
{
    const auto r = search_lambda_equality_case(256);
    CHECK(r.verdict == Verdict::informational);
    CHECK(r.measurements.at("candidates_tried") > 0);
    CHECK(r.measurements.count("equality_cases_found") == 1);
}

TEST_CASE("describe")
{
    CHECK(describe(FourierBody::disc(2.0)) == "2");
    CHECK(describe(triangle_rotor()).find("sin(4t)") != std::string::npos);
}
