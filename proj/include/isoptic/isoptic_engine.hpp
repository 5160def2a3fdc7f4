#pragma once

#include "isoptic/fourier_body.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace isoptic {

inline constexpr int kDefaultGrid = 2048;

/// Chord functions of a body relative to its isoptic K_α.
enum class Chord { a, b, c, d, q, lambda, h };

inline constexpr std::array<Chord, 7> kAllChords{Chord::a, Chord::b, Chord::c, Chord::d,
                                                 Chord::q, Chord::lambda, Chord::h};

std::string_view chord_name(Chord which) noexcept;
/// Accepts a, b, c, d, q, lambda, h. Throws std::invalid_argument.
Chord parse_chord(std::string_view name);

/// All chord values at one parameter t.
struct ChordSet {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double q = 0.0;
    double lambda = 0.0;
    double h = 0.0;

    [[nodiscard]] double get(Chord which) const noexcept;
};

/// γ_α(t): intersection of the support lines with normals u(t) and u(t+π-α).
PlanePoint isoptic_point(const FourierBody& body, double alpha, double t);

/// a, b, c, d from their closed forms in the support function; q, λ, h are
/// filled as well so the result is a complete ChordSet.
ChordSet tangent_chords(const FourierBody& body, double alpha, double t);

/// Evaluates just one chord function.
double chord_value(const FourierBody& body, double alpha, Chord which, double t);

/// |γ(t) - γ(t+π-α)|
double contact_chord_q(const FourierBody& body, double alpha, double t);
/// |γ_α(t+π-α) - γ_α(t-π+α)|, at exactly shifted parameters.
double isoptic_chord_lambda(const FourierBody& body, double alpha, double t);
/// [p(t)cos α + p(t+π-α)] / sin α
double h_value(const FourierBody& body, double alpha, double t);
/// |γ_α'(t)| = q(t) / sin α
double isoptic_speed(const FourierBody& body, double alpha, double t);

struct ProfileStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double relative_spread = 0.0;
};

/// Statistics over a materialized list in index order.
ProfileStats profile_stats(const std::vector<double>& values);

struct ChordProfile {
    Chord which = Chord::c;
    double alpha = 0.0;
    std::vector<double> t;
    std::vector<double> values;
    ProfileStats stats;
};

/// Uniform-grid sampling of one chord function over [0, 2π). grid_size >= 256.
ChordProfile profile(const FourierBody& body, double alpha, Chord which, int grid_size = kDefaultGrid);

struct IsopticCurve {
    FourierBody body;
    double alpha = 0.0;
    std::vector<double> t;
    std::vector<PlanePoint> points;
};

/// γ_α sampled at grid_size uniform parameters in [0, 2π).
IsopticCurve sample_isoptic(const FourierBody& body, double alpha, int grid_size = kDefaultGrid);

/// Boundary γ sampled at grid_size uniform parameters in [0, 2π).
std::vector<PlanePoint> sample_boundary(const FourierBody& body, int grid_size = kDefaultGrid);

struct HomothetyFit {
    double ratio = 1.0;
    PlanePoint center;
    /// RMS distance between B and the mapped A over the mean radius of B.
    double residual = 0.0;
    /// Parameter offset τ with B(t + τ) ≈ center + ratio·(A(t) - center).
    double phase_shift = 0.0;
};

/// Least-squares homothety B ≈ center + ratio·(A - center), ratio may be
/// negative. All cyclic alignments of the sample index are searched and the
/// best one is refined continuously using B's source body. Throws
/// std::invalid_argument on unequal sample counts or a degenerate A.
HomothetyFit homothety_fit(const IsopticCurve& a, const IsopticCurve& b);

struct PolygonFrame {
    int sides = 0;
    double phase = 0.0;
    /// vertex k = ℓ(t_k) ∩ ℓ(t_{k+1}), t_k = phase + 2πk/N
    std::vector<PlanePoint> vertices;
    /// tangency point on side k, i.e. γ(t_k)
    std::vector<PlanePoint> tangency_points;
    /// side k lies on ℓ(t_k), from vertex k-1 to vertex k
    std::vector<double> side_lengths;
};

/// Regular N-gon circumscribed about the body, sides normal to t + 2πk/N.
PolygonFrame circumscribed_polygon(const FourierBody& body, int sides, double phase);

/// Interior angle (N-2)π/N of the regular N-gon.
double interior_angle(int sides);

} // namespace isoptic
