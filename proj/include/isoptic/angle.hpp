#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace isoptic {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle s·π/q kept as an exact reduced fraction of π.
///
/// Admissibility of harmonics is a number-theoretic property of s/q, so the
/// fraction is carried around unchanged and only turned into radians when a
/// trigonometric expression actually needs evaluating.
class RationalAngle {
public:
    /// Throws std::invalid_argument if q <= 0. The fraction is reduced.
    RationalAngle(std::int64_t s, std::int64_t q);

    [[nodiscard]] std::int64_t num() const noexcept { return s_; }
    [[nodiscard]] std::int64_t den() const noexcept { return q_; }
    [[nodiscard]] double radians() const noexcept;

    /// True for 0 < s/q < 1, i.e. an angle strictly inside (0, π).
    [[nodiscard]] bool in_open_half_turn() const noexcept { return s_ > 0 && s_ < q_; }

    /// "s/qpi", the CLI spelling.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
    friend auto operator<=>(const RationalAngle& a, const RationalAngle& b) noexcept
    {
        // denominators are positive, cross-multiplication keeps the order
        return a.s_ * b.q_ <=> b.s_ * a.q_;
    }

private:
    std::int64_t s_;
    std::int64_t q_;
};

/// Angle argument as given on the command line: always has radians, keeps the
/// exact fraction when the user wrote one.
struct AngleArg {
    double radians = 0.0;
    std::optional<RationalAngle> rational;

    [[nodiscard]] std::string str() const;
};

/// Parses "s/qpi" (exact) or a decimal number of radians. Throws
/// std::invalid_argument on anything else.
AngleArg parse_angle(std::string_view text);

/// Throws std::invalid_argument unless alpha lies in (0, π).
void require_open_angle(double alpha, std::string_view what = "alpha");

/// Wraps t into [0, 2π).
double wrap_two_pi(double t) noexcept;

} // namespace isoptic
