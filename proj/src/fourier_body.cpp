#include "isoptic/fourier_body.hpp"

#include "isoptic/angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace isoptic {

namespace {

// Harmonics with amplitude below this fraction of a0 count as absent.
constexpr double kZeroCoefficient = 1e-12;

bool is_zero(const Harmonic& h, double a0) noexcept
{
    return h.amplitude() <= kZeroCoefficient * std::abs(a0);
}

std::vector<double> uniform_grid(int n)
{
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = kTwoPi * i / n;
    return t;
}

} // namespace

double norm(PlanePoint p) noexcept { return std::hypot(p.x, p.y); }
double distance(PlanePoint a, PlanePoint b) noexcept { return norm(a - b); }
double dot(PlanePoint a, PlanePoint b) noexcept { return a.x * b.x + a.y * b.y; }
PlanePoint unit(double t) noexcept { return {std::cos(t), std::sin(t)}; }
PlanePoint unit_perp(double t) noexcept { return {-std::sin(t), std::cos(t)}; }

double Harmonic::amplitude() const noexcept { return std::hypot(cos_coeff, sin_coeff); }

NonConvexBody::NonConvexBody(double margin, const std::string& detail)
    : std::runtime_error("body is not strictly convex (min p+p'' = " + std::to_string(margin) + "): " + detail),
      margin_(margin)
{
}

std::vector<Harmonic> normalize_harmonics(std::vector<Harmonic> harmonics)
{
    for (const auto& h : harmonics) {
        if (h.order < 1)
            throw std::invalid_argument("harmonic order must be >= 1, got " + std::to_string(h.order));
        if (!std::isfinite(h.cos_coeff) || !std::isfinite(h.sin_coeff))
            throw std::invalid_argument("harmonic " + std::to_string(h.order) + " has a non-finite coefficient");
    }
    std::sort(harmonics.begin(), harmonics.end(), [](const Harmonic& a, const Harmonic& b) { return a.order < b.order; });
    auto dup = std::adjacent_find(harmonics.begin(), harmonics.end(),
                                  [](const Harmonic& a, const Harmonic& b) { return a.order == b.order; });
    if (dup != harmonics.end())
        throw std::invalid_argument("duplicate harmonic order " + std::to_string(dup->order));
    return harmonics;
}

double curvature_lower_bound(double mean_term, std::span<const Harmonic> harmonics) noexcept
{
    double deficit = 0.0;
    for (const auto& h : harmonics)
        deficit += (static_cast<double>(h.order) * h.order - 1.0) * h.amplitude();
    return mean_term - deficit;
}

int min_convexity_grid(std::span<const Harmonic> harmonics) noexcept
{
    int top = 0;
    for (const auto& h : harmonics)
        top = std::max(top, h.order);
    return 64 * (1 + top);
}

double convexity_margin(double mean_term, std::span<const Harmonic> harmonics, int grid_size)
{
    if (grid_size < min_convexity_grid(harmonics))
        throw std::invalid_argument("convexity grid " + std::to_string(grid_size) + " below required " +
                                    std::to_string(min_convexity_grid(harmonics)));
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
        const double t = kTwoPi * i / grid_size;
        // p + p'' = a0 + Σ (1 - n²)(a cos nt + b sin nt)
        double v = mean_term;
        for (const auto& h : harmonics) {
            const double n = h.order;
            v += (1.0 - n * n) * (h.cos_coeff * std::cos(n * t) + h.sin_coeff * std::sin(n * t));
        }
        margin = std::min(margin, v);
    }
    return margin;
}

double convexity_margin(const FourierBody& body, int grid_size)
{
    return convexity_margin(body.mean_term(), body.harmonics(), grid_size);
}

FourierBody::FourierBody(double mean_term, std::vector<Harmonic> harmonics)
    : a0_(mean_term), harmonics_(normalize_harmonics(std::move(harmonics)))
{
    if (!std::isfinite(a0_) || !(a0_ > 0.0))
        throw std::invalid_argument("mean term a0 must be finite and positive");
    if (curvature_lower_bound(a0_, harmonics_) > 0.0)
        return;
    const int grid = std::max(1024, min_convexity_grid(harmonics_));
    const double margin = convexity_margin(a0_, harmonics_, grid);
    if (!(margin > 0.0))
        throw NonConvexBody(margin, "increase a0 or shrink the harmonics");
}

int FourierBody::max_order() const noexcept
{
    return harmonics_.empty() ? 0 : harmonics_.back().order;
}

double FourierBody::coefficient_mass() const noexcept
{
    double m = std::abs(a0_);
    for (const auto& h : harmonics_)
        m += std::abs(h.cos_coeff) + std::abs(h.sin_coeff);
    return m;
}

double FourierBody::support(double t, int derivative_order) const
{
    double v = 0.0;
    switch (derivative_order) {
    case 0:
        v = a0_;
        for (const auto& h : harmonics_) {
            const double nt = h.order * t;
            v += h.cos_coeff * std::cos(nt) + h.sin_coeff * std::sin(nt);
        }
        return v;
    case 1:
        for (const auto& h : harmonics_) {
            const double n = h.order;
            v += n * (h.sin_coeff * std::cos(n * t) - h.cos_coeff * std::sin(n * t));
        }
        return v;
    case 2:
        for (const auto& h : harmonics_) {
            const double n = h.order;
            v -= n * n * (h.cos_coeff * std::cos(n * t) + h.sin_coeff * std::sin(n * t));
        }
        return v;
    default:
        throw std::invalid_argument("derivative order must be 0, 1 or 2, got " + std::to_string(derivative_order));
    }
}

PlanePoint FourierBody::boundary_point(double t) const noexcept
{
    return support(t, 0) * unit(t) + support(t, 1) * unit_perp(t);
}

FourierBody FourierBody::rotated(double theta) const
{
    std::vector<Harmonic> hs = harmonics_;
    for (auto& h : hs) {
        const double c = std::cos(h.order * theta);
        const double s = std::sin(h.order * theta);
        const double a = h.cos_coeff;
        const double b = h.sin_coeff;
        h.cos_coeff = a * c - b * s;
        h.sin_coeff = a * s + b * c;
    }
    return FourierBody(a0_, std::move(hs));
}

FourierBody FourierBody::translated(double dx, double dy) const
{
    // <x, u(t)> = dx cos t + dy sin t
    std::vector<Harmonic> hs = harmonics_;
    auto it = std::find_if(hs.begin(), hs.end(), [](const Harmonic& h) { return h.order == 1; });
    if (it == hs.end())
        hs.push_back({1, dx, dy});
    else {
        it->cos_coeff += dx;
        it->sin_coeff += dy;
    }
    return FourierBody(a0_, std::move(hs));
}

FourierBody FourierBody::scaled(double s) const
{
    if (!(s > 0.0))
        throw std::invalid_argument("scale factor must be positive");
    std::vector<Harmonic> hs = harmonics_;
    for (auto& h : hs) {
        h.cos_coeff *= s;
        h.sin_coeff *= s;
    }
    return FourierBody(a0_ * s, std::move(hs));
}

FourierBody FourierBody::centered() const
{
    std::vector<Harmonic> hs;
    std::copy_if(harmonics_.begin(), harmonics_.end(), std::back_inserter(hs),
                 [](const Harmonic& h) { return h.order != 1; });
    return FourierBody(a0_, std::move(hs));
}

WidthProfile width_profile(const FourierBody& body, int grid_size)
{
    if (grid_size < 8)
        throw std::invalid_argument("width profile needs grid_size >= 8");
    WidthProfile w;
    w.t = uniform_grid(grid_size);
    w.width.reserve(w.t.size());
    for (double t : w.t)
        w.width.push_back(body.support(t) + body.support(t + kPi));
    const auto [lo, hi] = std::minmax_element(w.width.begin(), w.width.end());
    w.min_width = *lo;
    w.max_width = *hi;
    w.mean_width = std::accumulate(w.width.begin(), w.width.end(), 0.0) / static_cast<double>(w.width.size());
    w.is_constant = (w.max_width - w.min_width) <= kConstancyTolerance * std::abs(w.mean_width);
    return w;
}

double perimeter(const FourierBody& body) noexcept
{
    return kTwoPi * body.mean_term();
}

SymmetryInfo symmetry_predicates(const FourierBody& body)
{
    SymmetryInfo info;
    info.constant_width = true;
    info.centrally_symmetric = true;
    int g = 0;
    for (const auto& h : body.harmonics()) {
        if (is_zero(h, body.mean_term()))
            continue;
        if (h.order >= 2 && h.order % 2 == 0)
            info.constant_width = false;
        if (h.order >= 3 && h.order % 2 == 1)
            info.centrally_symmetric = false;
        g = std::gcd(g, h.order);
    }
    info.rotation_fold = g;
    if (g >= 2)
        info.rotational_period = kTwoPi / g;
    return info;
}

bool rotation_invariant(const FourierBody& body, double theta)
{
    for (const auto& h : body.harmonics()) {
        if (is_zero(h, body.mean_term()))
            continue;
        const double turns = h.order * theta / kTwoPi;
        if (std::abs(turns - std::round(turns)) > 1e-9)
            return false;
    }
    return true;
}

} // namespace isoptic
