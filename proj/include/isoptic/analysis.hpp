#pragma once

#include "isoptic/chords3d.hpp"
#include "isoptic/fourier_body.hpp"
#include "isoptic/isoptic_engine.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isoptic {

enum class Verdict { pass, fail, informational };

std::string_view verdict_name(Verdict v) noexcept;

/// Outcome of one numerical theorem check. The verdict is a function of the
/// measurements and tolerances only.
struct VerificationReport {
    std::string theorem;
    std::string body;
    double alpha = 0.0;
    std::map<std::string, double> measurements;
    std::map<std::string, double> tolerances;
    Verdict verdict = Verdict::informational;
    std::string note;
};

/// "a0=30 + 1*sin(4t)" style descriptor.
std::string describe(const FourierBody& body);

/// Closed forms for the disc p ≡ R.
struct DiscReference {
    double radius = 0.0;
    double alpha = 0.0;
    ChordSet chords;
    double isoptic_radius = 0.0;
};

DiscReference disc_reference(double radius, double alpha);

/// Mean of c over a period, cot(α/2)·L/π.
double mean_chord_c(const FourierBody& body, double alpha);

/// Quadrature mean of the c profile (trapezoid on the periodic grid).
double quadrature_mean_c(const FourierBody& body, double alpha, int grid_size = kDefaultGrid);

/// Passes iff the c-profile relative spread is within tolerance. Records the
/// admissibility determinant of every harmonic of order >= 2.
VerificationReport check_constant_c(const FourierBody& body, double alpha, double tolerance = kConstancyTolerance,
                                    int grid_size = kDefaultGrid);

/// Same for h. A constant h forces a disc centred at O, so the report also
/// records whether every harmonic vanishes and the smallest determinant_h.
VerificationReport check_constant_h(const FourierBody& body, double alpha, double tolerance = kConstancyTolerance,
                                    int grid_size = kDefaultGrid);

/// λ(t) = 2d(t) for bodies invariant under rotation by π-α or 2α, plus
/// |γ_α| = λ/(2 sin α) when λ is constant. Informational otherwise.
VerificationReport check_lambda_equals_2d(const FourierBody& body, double alpha, int grid_size = kDefaultGrid);

/// Some t with λ(t) ≥ 2ω₀cos(α/2), and the chained bound through the
/// perimeter at a t₀ where c(t)+c(t-π+α) equals its mean.
VerificationReport check_lambda_inequality(const FourierBody& body, double alpha, int grid_size = kDefaultGrid);

/// Some t with q(t) ≥ ω₀cos(α/2).
VerificationReport check_q_inequality(const FourierBody& body, double alpha, int grid_size = kDefaultGrid);

struct TriangleBound {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
    bool equality = false;
};

/// λ(t) against (c(t) + c(t-π+α))·sin(α/2).
TriangleBound triangle_bound_check(const FourierBody& body, double alpha, double t);

/// Reproducible set of admissible bodies: a0 = 1, one to three harmonics of
/// orders 2..7, rejection-sampled until convexity margin ≥ 0.1.
std::vector<FourierBody> random_corpus(int count = 20, std::uint64_t seed = 0);

/// Tangent chords of outer around inner. Concentric balls must give one
/// length (spread ≤ 1e-6); any other pair must show measurable spread.
VerificationReport check_equichordal_3d(const chords3d::ImplicitBody3D& outer, const chords3d::ImplicitBody3D& inner,
                                        int count, std::uint64_t seed);

/// Some sampled α-chord at least ω₀cos(α/2) long.
VerificationReport check_alpha_chord_bound_3d(const chords3d::ImplicitBody3D& body, double alpha, int count,
                                              std::uint64_t seed);

/// π/2-chords: constant (spread ≤ 1e-6) for a ball, varying otherwise.
VerificationReport check_right_chords_3d(const chords3d::ImplicitBody3D& body, int count, std::uint64_t seed);

/// Searches constant-width bodies (a0 + odd harmonics) and angles for the
/// case λ(t) = 2ω₀cos(α/2) at every t; reports what it finds.
VerificationReport search_lambda_equality_case(int grid_size = 512);

} // namespace isoptic
