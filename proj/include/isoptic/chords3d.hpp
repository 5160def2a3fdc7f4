#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace isoptic::chords3d {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Ball {
    double radius = 1.0;
};

struct Ellipsoid {
    Vec3 semi_axes{1.0, 1.0, 1.0};
};

/// Star body with radial function radius·(1 + epsilon·P_m(u_z)), P_m the
/// Legendre polynomial of degree m.
struct PerturbedSphere {
    double radius = 1.0;
    double epsilon = 0.0;
    int order = 2;
};

/// Curvature-safe bound on epsilon·m·(m+1) for PerturbedSphere.
inline constexpr double kPerturbationBound = 0.25;

/// Strictly convex body {x : F(x) <= 0} placed by a rigid motion
/// x = center + rotation·y, with the shape defined in local coordinates y.
class ImplicitBody3D {
public:
    using Shape = std::variant<Ball, Ellipsoid, PerturbedSphere>;

    /// Throws std::invalid_argument on nonpositive sizes, a perturbation
    /// violating kPerturbationBound, or a rotation that is not orthonormal.
    explicit ImplicitBody3D(Shape shape, Vec3 center = Vec3::Zero(), Mat3 rotation = Mat3::Identity());

    static ImplicitBody3D ball(double radius, Vec3 center = Vec3::Zero()) { return ImplicitBody3D(Ball{radius}, center); }
    static ImplicitBody3D ellipsoid(Vec3 semi_axes, Vec3 center = Vec3::Zero())
    {
        return ImplicitBody3D(Ellipsoid{semi_axes}, center);
    }

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] const Vec3& center() const noexcept { return center_; }
    [[nodiscard]] const Mat3& rotation() const noexcept { return rotation_; }

    /// Same body after x -> rotation·x + translation.
    [[nodiscard]] ImplicitBody3D moved(const Mat3& rotation, const Vec3& translation) const;

    /// Negative inside, zero on the boundary. For balls and perturbed spheres
    /// this is a signed radial distance, for ellipsoids Σ(y_i/a_i)² - 1.
    [[nodiscard]] double implicit(const Vec3& x) const;
    /// Outward unit normal at a boundary point.
    [[nodiscard]] Vec3 normal(const Vec3& x) const;
    /// Boundary point on the ray from the center in world direction dir.
    [[nodiscard]] Vec3 radial_boundary_point(const Vec3& dir) const;
    /// Upper bound on the diameter.
    [[nodiscard]] double diameter_bound() const;
    /// Minimal width for balls and ellipsoids (2·min semi-axis); for perturbed
    /// spheres a lower bound from the smallest radial value.
    [[nodiscard]] double min_width_estimate() const;

    struct SupportPoint {
        Vec3 point;
        bool converged = true;
        double residual = 0.0;
        int iterations = 0;
    };
    /// Boundary point with outward normal u (unit). Closed form for balls and
    /// ellipsoids, damped Newton for perturbed spheres.
    [[nodiscard]] SupportPoint support_point(const Vec3& u) const;

private:
    [[nodiscard]] Vec3 to_local(const Vec3& x) const { return rotation_.transpose() * (x - center_); }
    [[nodiscard]] Vec3 to_world(const Vec3& y) const { return center_ + rotation_ * y; }

    Shape shape_;
    Vec3 center_;
    Mat3 rotation_;
};

enum class SampleStatus { ok, not_bracketed, newton_failed };

struct ChordSample3D {
    /// Tangency point on the inner body (tangent chords) or first endpoint
    /// z1 (α-chords).
    Vec3 base = Vec3::Zero();
    Vec3 direction = Vec3::Zero();
    Vec3 end_a = Vec3::Zero();
    Vec3 end_b = Vec3::Zero();
    double length = 0.0;
    /// Largest |F| over both endpoints.
    double residual = 0.0;
    SampleStatus status = SampleStatus::ok;
};

class ContainmentViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Chords of outer tangent to inner, `count` of them drawn from `seed`.
/// Throws ContainmentViolation unless inner lies strictly inside outer. Root
/// finding failures are reported through ChordSample3D::status.
std::vector<ChordSample3D> tangent_chord_lengths(const ImplicitBody3D& outer, const ImplicitBody3D& inner, int count,
                                                 std::uint64_t seed);

/// Segments between boundary points whose outward normals meet at π - α,
/// i.e. whose tangent planes meet at α.
std::vector<ChordSample3D> alpha_chords(const ImplicitBody3D& body, double alpha, int count, std::uint64_t seed);

struct SpreadStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double relative_spread = 0.0;
    int used = 0;
    int failed = 0;
};

/// Statistics over the successful samples. Throws std::invalid_argument if
/// there are none.
SpreadStats chord_spread(const std::vector<ChordSample3D>& samples);

} // namespace isoptic::chords3d
