#pragma once

#include "isoptic/angle.hpp"
#include "isoptic/fourier_body.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace isoptic {

/// det ≤ this counts as zero. True zeros land below 1e-14 for q ≤ 30.
inline constexpr double kAdmissibilityThreshold = 1e-12;

/// The two bracketed expressions of the constant-c Fourier system and the
/// determinant e1² + e2² of its 2×2 matrix.
struct CDeterminant {
    double e1 = 0.0;
    double e2 = 0.0;
    double det = 0.0;

    [[nodiscard]] bool admissible() const noexcept { return det <= kAdmissibilityThreshold; }
};

/// e1 = -2 sin n(π-α) cos α + sin 2nα, e2 = 2 cos n(π-α) cos α + 1 + cos 2nα.
/// Requires n >= 2 and α ∈ (0, π).
CDeterminant determinant_c(int n, double alpha);

/// n² sin² n(π-α) + n² (cos α + cos n(π-α))², the constant-h system.
double determinant_h(int n, double alpha);

/// Exact test: cos nα = -cos α (n even) or cos nα = cos α (n odd), decided
/// on the integers via α = (2r+1)π/(n±1) resp. 2rπ/(n±1).
bool admissible_exact(int n, const RationalAngle& alpha);

/// All α ∈ (0, π) with a nonzero n-th harmonic compatible with constant c,
/// sorted ascending.
std::vector<RationalAngle> admissible_angles(int n);

/// All n ∈ [2, n_max] admissible at α = sπ/q. Requires 0 < s < q coprime.
std::vector<int> admissible_harmonics(std::int64_t s, std::int64_t q, int n_max);

class InadmissibleHarmonic : public std::runtime_error {
public:
    InadmissibleHarmonic(int order, RationalAngle alpha, double det);
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] const RationalAngle& alpha() const noexcept { return alpha_; }
    [[nodiscard]] double det() const noexcept { return det_; }

private:
    int order_;
    RationalAngle alpha_;
    double det_;
};

struct RotorSpec {
    int sides = 3;
    std::vector<Harmonic> harmonics;
    /// Empty means auto: max(1, 2·Σ(n²-1)·amplitude_n).
    std::optional<double> mean_term;

    [[nodiscard]] RationalAngle interior_angle() const;
};

/// a0 chosen by the auto rule for these harmonics.
double auto_mean_term(const std::vector<Harmonic>& harmonics);

/// Body whose chords c are constant for the polygon's interior angle, so the
/// regular N-gon turns around it while staying circumscribed. Throws
/// InadmissibleHarmonic, NonConvexBody or std::invalid_argument.
FourierBody build_rotor(const RotorSpec& spec);

} // namespace isoptic
