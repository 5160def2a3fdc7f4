#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoptic {

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;

    friend PlanePoint operator+(PlanePoint a, PlanePoint b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend PlanePoint operator-(PlanePoint a, PlanePoint b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend PlanePoint operator*(double s, PlanePoint a) noexcept { return {s * a.x, s * a.y}; }
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

double norm(PlanePoint p) noexcept;
double distance(PlanePoint a, PlanePoint b) noexcept;
double dot(PlanePoint a, PlanePoint b) noexcept;

/// u(t) = (cos t, sin t)
PlanePoint unit(double t) noexcept;
/// u'(t) = (-sin t, cos t)
PlanePoint unit_perp(double t) noexcept;

/// One term a·cos(nt) + b·sin(nt) of a support function.
struct Harmonic {
    int order = 1;
    double cos_coeff = 0.0;
    double sin_coeff = 0.0;

    [[nodiscard]] double amplitude() const noexcept;
    friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

class NonConvexBody : public std::runtime_error {
public:
    NonConvexBody(double margin, const std::string& detail);
    [[nodiscard]] double margin() const noexcept { return margin_; }

private:
    double margin_;
};

/// Relative spread at or below which a sampled quantity counts as constant.
inline constexpr double kConstancyTolerance = 1e-9;

/// Planar strictly convex body given by a truncated Fourier support function
///
///     p(t) = a0 + Σ (a_n cos nt + b_n sin nt).
///
/// Construction validates the harmonics (order >= 1, no duplicate orders) and
/// strict convexity, i.e. p + p'' > 0. Instances are immutable.
class FourierBody {
public:
    /// Throws std::invalid_argument on malformed harmonics and NonConvexBody
    /// when p + p'' is not positive.
    FourierBody(double mean_term, std::vector<Harmonic> harmonics);

    static FourierBody disc(double radius) { return FourierBody(radius, {}); }

    [[nodiscard]] double mean_term() const noexcept { return a0_; }
    /// Sorted by order.
    [[nodiscard]] std::span<const Harmonic> harmonics() const noexcept { return harmonics_; }
    [[nodiscard]] int max_order() const noexcept;
    /// a0 + Σ (|a_n| + |b_n|), the scale used for absolute tolerances.
    [[nodiscard]] double coefficient_mass() const noexcept;

    /// p(t), p'(t) or p''(t).
    [[nodiscard]] double support(double t, int derivative_order = 0) const;
    /// γ(t) = p(t)u(t) + p'(t)u'(t), the boundary point with outward normal u(t).
    [[nodiscard]] PlanePoint boundary_point(double t) const noexcept;

    /// Body rotated by theta about the origin: p(t - theta).
    [[nodiscard]] FourierBody rotated(double theta) const;
    /// Body translated by (dx, dy); only the order-1 term changes.
    [[nodiscard]] FourierBody translated(double dx, double dy) const;
    /// All coefficients multiplied by s > 0.
    [[nodiscard]] FourierBody scaled(double s) const;
    /// Order-1 term removed, i.e. translated so the Steiner point sits at O.
    [[nodiscard]] FourierBody centered() const;

    friend bool operator==(const FourierBody&, const FourierBody&) = default;

private:
    double a0_;
    std::vector<Harmonic> harmonics_;
};

/// Checks order >= 1 and uniqueness; returns the harmonics sorted by order.
std::vector<Harmonic> normalize_harmonics(std::vector<Harmonic> harmonics);

/// a0 - Σ (n²-1)·amplitude_n: a lower bound for p + p''.
double curvature_lower_bound(double mean_term, std::span<const Harmonic> harmonics) noexcept;

/// Smallest admissible grid for convexity_margin: 64·(1 + max order).
int min_convexity_grid(std::span<const Harmonic> harmonics) noexcept;

/// min over a uniform grid of p(t) + p''(t). Works on raw coefficients so that
/// rejected candidates can still be measured. Throws std::invalid_argument
/// if grid_size is below min_convexity_grid.
double convexity_margin(double mean_term, std::span<const Harmonic> harmonics, int grid_size);
double convexity_margin(const FourierBody& body, int grid_size);

struct WidthProfile {
    std::vector<double> t;
    std::vector<double> width;
    double min_width = 0.0;
    double max_width = 0.0;
    double mean_width = 0.0;
    bool is_constant = false;
};

/// w(t) = p(t) + p(t + π) on a uniform grid of [0, 2π). grid_size >= 8.
WidthProfile width_profile(const FourierBody& body, int grid_size);

/// Perimeter as the integral of p, 2π·a0.
double perimeter(const FourierBody& body) noexcept;

struct SymmetryInfo {
    bool constant_width = false;
    bool centrally_symmetric = false;
    /// 2π/g where g >= 2 is the gcd of the orders of the nonzero harmonics.
    /// Empty when there is no such symmetry, and also for discs, which are
    /// invariant under every rotation (see rotation_invariant).
    std::optional<double> rotational_period;
    /// g as above; 0 when no nonzero harmonic exists.
    int rotation_fold = 1;
};

SymmetryInfo symmetry_predicates(const FourierBody& body);

/// p(t + theta) == p(t) for all t, decided harmonic by harmonic.
bool rotation_invariant(const FourierBody& body, double theta);

} // namespace isoptic
