#include "isoptic/chords3d.hpp"

#include "isoptic/angle.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <boost/math/tools/roots.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace isoptic::chords3d {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double radial_value(const PerturbedSphere& s, const Vec3& w)
{
    return s.radius * (1.0 + s.epsilon * boost::math::legendre_p(s.order, w.z()));
}

Vec3 radial_gradient(const PerturbedSphere& s, const Vec3& w)
{
    return Vec3(0.0, 0.0, s.radius * s.epsilon * boost::math::legendre_p_prime(s.order, w.z()));
}

// Local-frame normal of the perturbed sphere at its boundary point in direction w.
Vec3 perturbed_normal(const PerturbedSphere& s, const Vec3& w)
{
    const double rho = radial_value(s, w);
    const Vec3 g = radial_gradient(s, w);
    const Vec3 tangential = g - w * w.dot(g);
    return (w - tangential / rho).normalized();
}

// Orthonormal e1, e2 spanning the plane orthogonal to unit n.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& n)
{
    const Vec3 helper = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    const Vec3 e1 = n.cross(helper).normalized();
    return {e1, n.cross(e1)};
}

Vec3 random_unit(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double z = 2.0 * unit(rng) - 1.0;
    const double phi = kTwoPi * unit(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

// Fibonacci sphere, deterministic and roughly uniform.
std::vector<Vec3> sphere_lattice(int count)
{
    std::vector<Vec3> dirs;
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        dirs.emplace_back(r * std::cos(golden * i), r * std::sin(golden * i), z);
    }
    return dirs;
}

struct Crossing {
    double s = 0.0;
    bool ok = false;
};

// First sign change of F along z + s·d for s in direction `sign`, refined by bisection.
Crossing find_crossing(const ImplicitBody3D& body, const Vec3& z, const Vec3& d, double sign)
{
    const double step = 0.1 * body.diameter_bound();
    auto f = [&](double s) { return body.implicit(z + (sign * s) * d); };
    double lo = 0.0;
    double hi = step;
    int guard = 0;
    while (f(hi) < 0.0) {
        lo = hi;
        hi += step;
        if (++guard > 1000)
            return {};
    }
    if (f(hi) == 0.0)
        return {sign * hi, true};
    std::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    return {sign * 0.5 * (a + b), true};
}

} // namespace

ImplicitBody3D::ImplicitBody3D(Shape shape, Vec3 center, Mat3 rotation)
    : shape_(std::move(shape)), center_(std::move(center)), rotation_(std::move(rotation))
{
    std::visit(overloaded{
                   [](const Ball& b) {
                       if (!(b.radius > 0.0))
                           throw std::invalid_argument("ball radius must be positive");
                   },
                   [](const Ellipsoid& e) {
                       if (!(e.semi_axes.minCoeff() > 0.0))
                           throw std::invalid_argument("ellipsoid semi-axes must be positive");
                   },
                   [](const PerturbedSphere& p) {
                       if (!(p.radius > 0.0))
                           throw std::invalid_argument("perturbed sphere radius must be positive");
                       if (p.order < 1)
                           throw std::invalid_argument("perturbation order must be >= 1");
                       if (!(std::abs(p.epsilon) * p.order * (p.order + 1) < kPerturbationBound))
                           throw std::invalid_argument("perturbation too strong for strict convexity: |eps|*m*(m+1) = " +
                                                       std::to_string(std::abs(p.epsilon) * p.order * (p.order + 1)) +
                                                       " must stay below " + std::to_string(kPerturbationBound));
                   },
               },
               shape_);
    if (!center_.allFinite())
        throw std::invalid_argument("body center must be finite");
    if (!(rotation_.transpose() * rotation_ - Mat3::Identity()).isZero(1e-12) || rotation_.determinant() < 0.0)
        throw std::invalid_argument("body rotation must be a proper orthonormal matrix");
}

ImplicitBody3D ImplicitBody3D::moved(const Mat3& rotation, const Vec3& translation) const
{
    return ImplicitBody3D(shape_, rotation * center_ + translation, rotation * rotation_);
}

double ImplicitBody3D::implicit(const Vec3& x) const
{
    const Vec3 y = to_local(x);
    return std::visit(overloaded{
                          [&](const Ball& b) { return y.norm() - b.radius; },
                          [&](const Ellipsoid& e) { return y.cwiseQuotient(e.semi_axes).squaredNorm() - 1.0; },
                          [&](const PerturbedSphere& p) {
                              const double r = y.norm();
                              if (r == 0.0)
                                  return -p.radius;
                              return r - radial_value(p, y / r);
                          },
                      },
                      shape_);
}

Vec3 ImplicitBody3D::normal(const Vec3& x) const
{
    const Vec3 y = to_local(x);
    const Vec3 n = std::visit(overloaded{
                                  [&](const Ball&) -> Vec3 { return y.normalized(); },
                                  [&](const Ellipsoid& e) -> Vec3 {
                                      return y.cwiseQuotient(e.semi_axes.cwiseProduct(e.semi_axes)).normalized();
                                  },
                                  [&](const PerturbedSphere& p) -> Vec3 { return perturbed_normal(p, y.normalized()); },
                              },
                              shape_);
    return rotation_ * n;
}

Vec3 ImplicitBody3D::radial_boundary_point(const Vec3& dir) const
{
    const Vec3 v = (rotation_.transpose() * dir).normalized();
    const Vec3 y = std::visit(overloaded{
                                  [&](const Ball& b) -> Vec3 { return b.radius * v; },
                                  [&](const Ellipsoid& e) -> Vec3 { return v / v.cwiseQuotient(e.semi_axes).norm(); },
                                  [&](const PerturbedSphere& p) -> Vec3 { return radial_value(p, v) * v; },
                              },
                              shape_);
    return to_world(y);
}

double ImplicitBody3D::diameter_bound() const
{
    return std::visit(overloaded{
                          [](const Ball& b) { return 2.0 * b.radius; },
                          [](const Ellipsoid& e) { return 2.0 * e.semi_axes.maxCoeff(); },
                          [](const PerturbedSphere& p) { return 2.0 * p.radius * (1.0 + std::abs(p.epsilon)); },
                      },
                      shape_);
}

double ImplicitBody3D::min_width_estimate() const
{
    return std::visit(overloaded{
                          [](const Ball& b) { return 2.0 * b.radius; },
                          [](const Ellipsoid& e) { return 2.0 * e.semi_axes.minCoeff(); },
                          [](const PerturbedSphere& p) { return 2.0 * p.radius * (1.0 - std::abs(p.epsilon)); },
                      },
                      shape_);
}

ImplicitBody3D::SupportPoint ImplicitBody3D::support_point(const Vec3& u) const
{
    const Vec3 ul = (rotation_.transpose() * u).normalized();
    if (const auto* b = std::get_if<Ball>(&shape_))
        return {to_world(b->radius * ul)};
    if (const auto* e = std::get_if<Ellipsoid>(&shape_)) {
        const Vec3 a2 = e->semi_axes.cwiseProduct(e->semi_axes);
        const Vec3 y = a2.cwiseProduct(ul) / std::sqrt(a2.dot(ul.cwiseProduct(ul)));
        return {to_world(y)};
    }

    // Perturbed sphere: find w with normal(ρ(w)w) = u. Unknowns are the
    // offsets of w from u inside the tangent plane of u.
    const auto& p = std::get<PerturbedSphere>(shape_);
    const auto [e1, e2] = tangent_basis(ul);
    auto direction = [&](const Eigen::Vector2d& x) -> Vec3 { return (ul + x.x() * e1 + x.y() * e2).normalized(); };
    auto residual = [&](const Eigen::Vector2d& x) -> Eigen::Vector2d {
        const Vec3 n = perturbed_normal(p, direction(x));
        return {n.dot(e1), n.dot(e2)};
    };

    SupportPoint out;
    Eigen::Vector2d x = Eigen::Vector2d::Zero();
    Eigen::Vector2d g = residual(x);
    constexpr double h = 1e-7;
    constexpr int max_iter = 60;
    int it = 0;
    for (; it < max_iter && g.norm() > 1e-14; ++it) {
        Eigen::Matrix2d jac;
        for (int k = 0; k < 2; ++k) {
            Eigen::Vector2d dx = Eigen::Vector2d::Zero();
            dx[k] = h;
            jac.col(k) = (residual(x + dx) - residual(x - dx)) / (2.0 * h);
        }
        const Eigen::Vector2d step = jac.fullPivLu().solve(-g);
        double damp = 1.0;
        Eigen::Vector2d next = x + step;
        Eigen::Vector2d gn = residual(next);
        while (gn.norm() >= g.norm() && damp > 1e-6) {
            damp *= 0.5;
            next = x + damp * step;
            gn = residual(next);
        }
        if (gn.norm() >= g.norm())
            break;
        x = next;
        g = gn;
    }
    const Vec3 w = direction(x);
    out.point = to_world(radial_value(p, w) * w);
    out.residual = g.norm();
    out.iterations = it;
    out.converged = out.residual <= 1e-9;
    return out;
}

std::vector<ChordSample3D> tangent_chord_lengths(const ImplicitBody3D& outer, const ImplicitBody3D& inner, int count,
                                                 std::uint64_t seed)
{
    if (count < 1)
        throw std::invalid_argument("sample count must be >= 1");
    for (const Vec3& dir : sphere_lattice(2000)) {
        const Vec3 z = inner.radial_boundary_point(inner.rotation() * dir);
        if (!(outer.implicit(z) < 0.0))
            throw ContainmentViolation("inner body is not strictly inside the outer body (boundary point " +
                                       std::to_string(z.x()) + ", " + std::to_string(z.y()) + ", " +
                                       std::to_string(z.z()) + ")");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<ChordSample3D> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // drawn in the inner body's frame so a common rigid motion of both
        // bodies reproduces congruent chords
        const Vec3 u_local = random_unit(rng);
        const double phi = angle(rng);
        ChordSample3D s;
        s.base = inner.radial_boundary_point(inner.rotation() * u_local);
        const Vec3 n_local = inner.rotation().transpose() * inner.normal(s.base);
        const auto [e1, e2] = tangent_basis(n_local);
        s.direction = inner.rotation() * (std::cos(phi) * e1 + std::sin(phi) * e2);

        const Crossing fwd = find_crossing(outer, s.base, s.direction, 1.0);
        const Crossing bwd = find_crossing(outer, s.base, s.direction, -1.0);
        if (!fwd.ok || !bwd.ok) {
            s.status = SampleStatus::not_bracketed;
            out.push_back(s);
            continue;
        }
        s.end_a = s.base + bwd.s * s.direction;
        s.end_b = s.base + fwd.s * s.direction;
        s.length = (s.end_b - s.end_a).norm();
        s.residual = std::max(std::abs(outer.implicit(s.end_a)), std::abs(outer.implicit(s.end_b)));
        out.push_back(s);
    }
    return out;
}

std::vector<ChordSample3D> alpha_chords(const ImplicitBody3D& body, double alpha, int count, std::uint64_t seed)
{
    require_open_angle(alpha);
    if (count < 1)
        throw std::invalid_argument("sample count must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const double normal_angle = kPi - alpha;
    std::vector<ChordSample3D> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const Vec3 u1_local = random_unit(rng);
        const double phi = angle(rng);
        const auto [e1, e2] = tangent_basis(u1_local);
        const Vec3 u2_local =
            std::cos(normal_angle) * u1_local + std::sin(normal_angle) * (std::cos(phi) * e1 + std::sin(phi) * e2);
        const auto z1 = body.support_point(body.rotation() * u1_local);
        const auto z2 = body.support_point(body.rotation() * u2_local);

        ChordSample3D s;
        s.base = z1.point;
        s.end_a = z1.point;
        s.end_b = z2.point;
        s.length = (z2.point - z1.point).norm();
        s.direction = s.length > 0.0 ? Vec3((z2.point - z1.point) / s.length) : Vec3::Zero();
        s.residual = std::max({std::abs(body.implicit(z1.point)), std::abs(body.implicit(z2.point)), z1.residual,
                               z2.residual});
        if (!z1.converged || !z2.converged)
            s.status = SampleStatus::newton_failed;
        out.push_back(s);
    }
    return out;
}

SpreadStats chord_spread(const std::vector<ChordSample3D>& samples)
{
    SpreadStats st;
    st.min = std::numeric_limits<double>::infinity();
    st.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& s : samples) {
        if (s.status != SampleStatus::ok) {
            ++st.failed;
            continue;
        }
        ++st.used;
        st.min = std::min(st.min, s.length);
        st.max = std::max(st.max, s.length);
        sum += s.length;
    }
    if (st.used == 0)
        throw std::invalid_argument("chord spread of an empty sample list");
    st.mean = sum / st.used;
    st.relative_spread = st.mean > 0.0 ? (st.max - st.min) / st.mean : 0.0;
    return st;
}

} // namespace isoptic::chords3d
