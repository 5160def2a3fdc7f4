#include "isoptic/isoptic_engine.hpp"

#include "isoptic/angle.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace isoptic {

std::string_view chord_name(Chord which) noexcept
{
    switch (which) {
    case Chord::a: return "a";
    case Chord::b: return "b";
    case Chord::c: return "c";
    case Chord::d: return "d";
    case Chord::q: return "q";
    case Chord::lambda: return "lambda";
    case Chord::h: return "h";
    }
    return "?";
}

Chord parse_chord(std::string_view name)
{
    for (Chord c : kAllChords)
        if (chord_name(c) == name)
            return c;
    throw std::invalid_argument("unknown chord '" + std::string(name) + "' (expected a, b, c, d, q, lambda or h)");
}

double ChordSet::get(Chord which) const noexcept
{
    switch (which) {
    case Chord::a: return a;
    case Chord::b: return b;
    case Chord::c: return c;
    case Chord::d: return d;
    case Chord::q: return q;
    case Chord::lambda: return lambda;
    case Chord::h: return h;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

PlanePoint isoptic_point(const FourierBody& body, double alpha, double t)
{
    require_open_angle(alpha);
    const double p = body.support(t);
    const double p1 = body.support(t + kPi - alpha);
    const double along = p * std::cos(alpha) / std::sin(alpha) + p1 / std::sin(alpha);
    return p * unit(t) + along * unit_perp(t);
}

ChordSet tangent_chords(const FourierBody& body, double alpha, double t)
{
    require_open_angle(alpha);
    const double s = std::sin(alpha);
    const double c = std::cos(alpha);
    const double shift = kPi - alpha;
    const double p = body.support(t);
    const double dp = body.support(t, 1);
    const double p1 = body.support(t + shift);
    const double dp1 = body.support(t + shift, 1);
    const double p2 = body.support(t - 2.0 * alpha);

    ChordSet out;
    out.a = (p1 + p * c - dp * s) / s;
    out.b = (p1 * c + dp1 * s + p) / s;
    out.c = (2.0 * p1 * c + p + p2) / s;
    out.d = std::sqrt(std::max(0.0, p * p + p1 * p1 + 2.0 * p * p1 * c));
    out.q = contact_chord_q(body, alpha, t);
    out.lambda = isoptic_chord_lambda(body, alpha, t);
    out.h = (p * c + p1) / s;
    return out;
}

double chord_value(const FourierBody& body, double alpha, Chord which, double t)
{
    switch (which) {
    case Chord::q: return contact_chord_q(body, alpha, t);
    case Chord::lambda: return isoptic_chord_lambda(body, alpha, t);
    case Chord::h: return h_value(body, alpha, t);
    default: return tangent_chords(body, alpha, t).get(which);
    }
}

double contact_chord_q(const FourierBody& body, double alpha, double t)
{
    require_open_angle(alpha);
    return distance(body.boundary_point(t), body.boundary_point(t + kPi - alpha));
}

double isoptic_chord_lambda(const FourierBody& body, double alpha, double t)
{
    const double shift = kPi - alpha;
    return distance(isoptic_point(body, alpha, t + shift), isoptic_point(body, alpha, t - shift));
}

double h_value(const FourierBody& body, double alpha, double t)
{
    require_open_angle(alpha);
    const double shift = kPi - alpha;
    return (body.support(t) * std::cos(alpha) + body.support(t + shift)) / std::sin(alpha);
}

double isoptic_speed(const FourierBody& body, double alpha, double t)
{
    return contact_chord_q(body, alpha, t) / std::sin(alpha);
}

ProfileStats profile_stats(const std::vector<double>& values)
{
    if (values.empty())
        throw std::invalid_argument("statistics of an empty profile");
    ProfileStats s;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    s.relative_spread = s.mean != 0.0 ? (s.max - s.min) / std::abs(s.mean) : (s.max - s.min == 0.0 ? 0.0 : INFINITY);
    return s;
}

ChordProfile profile(const FourierBody& body, double alpha, Chord which, int grid_size)
{
    require_open_angle(alpha);
    if (grid_size < 256)
        throw std::invalid_argument("chord profile needs grid_size >= 256, got " + std::to_string(grid_size));
    ChordProfile out;
    out.which = which;
    out.alpha = alpha;
    out.t.resize(static_cast<std::size_t>(grid_size));
    out.values.resize(out.t.size());
    for (int i = 0; i < grid_size; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out.t[k] = kTwoPi * i / grid_size;
        out.values[k] = chord_value(body, alpha, which, out.t[k]);
    }
    out.stats = profile_stats(out.values);
    return out;
}

IsopticCurve sample_isoptic(const FourierBody& body, double alpha, int grid_size)
{
    require_open_angle(alpha);
    if (grid_size < 3)
        throw std::invalid_argument("isoptic sampling needs at least 3 points");
    IsopticCurve curve{body, alpha, {}, {}};
    curve.t.reserve(static_cast<std::size_t>(grid_size));
    curve.points.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double t = kTwoPi * i / grid_size;
        curve.t.push_back(t);
        curve.points.push_back(isoptic_point(body, alpha, t));
    }
    return curve;
}

std::vector<PlanePoint> sample_boundary(const FourierBody& body, int grid_size)
{
    std::vector<PlanePoint> pts;
    pts.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        pts.push_back(body.boundary_point(kTwoPi * i / grid_size));
    return pts;
}

namespace {

PlanePoint centroid(const std::vector<PlanePoint>& pts)
{
    PlanePoint c;
    for (const auto& p : pts)
        c = c + p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

// Least-squares k, m with B_i ≈ k·A_i + m for already aligned samples.
struct AlignedFit {
    double ratio;
    PlanePoint offset;
    double rms;
};

AlignedFit fit_aligned(const std::vector<PlanePoint>& a, PlanePoint a_mean, double a_var,
                       const std::vector<PlanePoint>& b)
{
    const PlanePoint b_mean = centroid(b);
    double cross = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        cross += dot(a[i] - a_mean, b[i] - b_mean);
    const double k = cross / a_var;
    const PlanePoint m = b_mean - k * a_mean;
    double ss = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const PlanePoint r = b[i] - (k * a[i] + m);
        ss += dot(r, r);
    }
    return {k, m, std::sqrt(ss / static_cast<double>(a.size()))};
}

} // namespace

HomothetyFit homothety_fit(const IsopticCurve& a, const IsopticCurve& b)
{
    const std::size_t n = a.points.size();
    if (n == 0 || n != b.points.size())
        throw std::invalid_argument("homothety fit needs two curves with the same, nonzero sample count");

    const PlanePoint a_mean = centroid(a.points);
    double a_var = 0.0;
    for (const auto& p : a.points)
        a_var += dot(p - a_mean, p - a_mean);
    if (!(a_var > 1e-24 * static_cast<double>(n)))
        throw std::invalid_argument("degenerate homothety fit: first curve has no spread about its centroid");

    const PlanePoint b_mean = centroid(b.points);
    double b_radius = 0.0;
    for (const auto& p : b.points)
        b_radius += distance(p, b_mean);
    b_radius /= static_cast<double>(n);

    // coarse: every cyclic shift of the sample index
    std::size_t best_shift = 0;
    double best_rms = std::numeric_limits<double>::infinity();
    std::vector<PlanePoint> shifted(n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = b.points[(i + s) % n];
        const double rms = fit_aligned(a.points, a_mean, a_var, shifted).rms;
        if (rms < best_rms) {
            best_rms = rms;
            best_shift = s;
        }
    }

    // fine: continuous parameter offset around the best shift, in units of
    // grid steps so the minimizer's absolute tolerance is meaningful
    const double step = kTwoPi / static_cast<double>(n);
    auto evaluate = [&](double offset_steps) {
        const double tau = (static_cast<double>(best_shift) + offset_steps) * step;
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = isoptic_point(b.body, b.alpha, a.t[i] + tau);
        return fit_aligned(a.points, a_mean, a_var, shifted);
    };
    const auto [offset, rms] =
        boost::math::tools::brent_find_minima([&](double x) { return evaluate(x).rms; }, -1.0, 1.0, 52);

    double use_offset = offset;
    if (!(rms < best_rms))
        use_offset = 0.0;
    const AlignedFit fit = evaluate(use_offset);

    HomothetyFit out;
    out.ratio = fit.ratio;
    out.phase_shift = (static_cast<double>(best_shift) + use_offset) * step;
    out.residual = b_radius > 0.0 ? fit.rms / b_radius : fit.rms;
    // B = k A + m = c + k (A - c)  =>  c = m / (1 - k)
    if (std::abs(1.0 - fit.ratio) > 1e-12)
        out.center = (1.0 / (1.0 - fit.ratio)) * fit.offset;
    else
        out.center = a_mean;
    return out;
}

double interior_angle(int sides)
{
    if (sides < 3)
        throw std::invalid_argument("a polygon needs at least 3 sides, got " + std::to_string(sides));
    return static_cast<double>(sides - 2) * kPi / sides;
}

PolygonFrame circumscribed_polygon(const FourierBody& body, int sides, double phase)
{
    if (sides < 3)
        throw std::invalid_argument("a polygon needs at least 3 sides, got " + std::to_string(sides));
    PolygonFrame f;
    f.sides = sides;
    f.phase = phase;
    const auto n = static_cast<std::size_t>(sides);
    std::vector<double> dir(n);
    std::vector<double> sup(n);
    for (std::size_t k = 0; k < n; ++k) {
        dir[k] = phase + kTwoPi * static_cast<double>(k) / sides;
        sup[k] = body.support(dir[k]);
        f.tangency_points.push_back(body.boundary_point(dir[k]));
    }
    // ⟨x, u(t1)⟩ = p1, ⟨x, u(t2)⟩ = p2 by Cramer's rule
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = (k + 1) % n;
        const double c1 = std::cos(dir[k]), s1 = std::sin(dir[k]);
        const double c2 = std::cos(dir[j]), s2 = std::sin(dir[j]);
        const double det = c1 * s2 - s1 * c2;
        f.vertices.push_back({(sup[k] * s2 - sup[j] * s1) / det, (c1 * sup[j] - c2 * sup[k]) / det});
    }
    for (std::size_t k = 0; k < n; ++k)
        f.side_lengths.push_back(distance(f.vertices[(k + n - 1) % n], f.vertices[k]));
    return f;
}

} // namespace isoptic
