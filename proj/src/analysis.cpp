#include "isoptic/analysis.hpp"

#include "isoptic/angle.hpp"
#include "isoptic/rotor_builder.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace isoptic {

namespace {

double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::vector<double> grid(int n)
{
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = kTwoPi * i / n;
    return t;
}

VerificationReport new_report(std::string theorem, const FourierBody& body, double alpha)
{
    VerificationReport r;
    r.theorem = std::move(theorem);
    r.body = describe(body);
    r.alpha = alpha;
    return r;
}

} // namespace

std::string_view verdict_name(Verdict v) noexcept
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::informational: return "informational";
    }
    return "?";
}

std::string describe(const FourierBody& body)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", body.mean_term());
    std::string s = buf;
    for (const auto& h : body.harmonics()) {
        if (h.cos_coeff != 0.0) {
            std::snprintf(buf, sizeof buf, " + %.17g*cos(%dt)", h.cos_coeff, h.order);
            s += buf;
        }
        if (h.sin_coeff != 0.0) {
            std::snprintf(buf, sizeof buf, " + %.17g*sin(%dt)", h.sin_coeff, h.order);
            s += buf;
        }
    }
    return s;
}

DiscReference disc_reference(double radius, double alpha)
{
    if (!(radius > 0.0))
        throw std::invalid_argument("disc radius must be positive");
    require_open_angle(alpha);
    const double cot_half = 1.0 / std::tan(alpha / 2.0);
    const double cos_half = std::cos(alpha / 2.0);
    DiscReference ref;
    ref.radius = radius;
    ref.alpha = alpha;
    ref.chords.a = radius * cot_half;
    ref.chords.b = radius * cot_half;
    ref.chords.c = 2.0 * radius * cot_half;
    ref.chords.d = 2.0 * radius * cos_half;
    ref.chords.q = 2.0 * radius * cos_half;
    ref.chords.lambda = 4.0 * radius * cos_half;
    ref.chords.h = radius * cot_half;
    ref.isoptic_radius = radius / std::sin(alpha / 2.0);
    return ref;
}

double mean_chord_c(const FourierBody& body, double alpha)
{
    require_open_angle(alpha);
    return perimeter(body) / (kPi * std::tan(alpha / 2.0));
}

double quadrature_mean_c(const FourierBody& body, double alpha, int grid_size)
{
    // the trapezoid rule is exact for trigonometric polynomials of degree < grid_size
    return profile(body, alpha, Chord::c, grid_size).stats.mean;
}

VerificationReport check_constant_c(const FourierBody& body, double alpha, double tolerance, int grid_size)
{
    auto r = new_report("1", body, alpha);
    const auto prof = profile(body, alpha, Chord::c, grid_size);
    r.measurements["c_min"] = prof.stats.min;
    r.measurements["c_max"] = prof.stats.max;
    r.measurements["c_mean"] = prof.stats.mean;
    r.measurements["c_relative_spread"] = prof.stats.relative_spread;
    for (const auto& h : body.harmonics())
        if (h.order >= 2)
            r.measurements["det_c[n=" + std::to_string(h.order) + "]"] = determinant_c(h.order, alpha).det;
    r.tolerances["relative_spread"] = tolerance;
    r.verdict = prof.stats.relative_spread <= tolerance ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_constant_h(const FourierBody& body, double alpha, double tolerance, int grid_size)
{
    auto r = new_report("3", body, alpha);
    const auto prof = profile(body, alpha, Chord::h, grid_size);
    r.measurements["h_mean"] = prof.stats.mean;
    r.measurements["h_relative_spread"] = prof.stats.relative_spread;
    bool all_vanish = true;
    double min_det = INFINITY;
    for (const auto& h : body.harmonics()) {
        if (h.amplitude() > 0.0)
            all_vanish = false;
        min_det = std::min(min_det, determinant_h(h.order, alpha));
    }
    r.measurements["all_harmonics_vanish"] = all_vanish ? 1.0 : 0.0;
    if (!body.harmonics().empty())
        r.measurements["min_det_h"] = min_det;
    r.tolerances["relative_spread"] = tolerance;
    r.verdict = prof.stats.relative_spread <= tolerance ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_lambda_equals_2d(const FourierBody& body, double alpha, int grid_size)
{
    require_open_angle(alpha);
    auto r = new_report("4", body, alpha);
    constexpr double tol = 1e-9;
    const bool gate = rotation_invariant(body, kPi - alpha) || rotation_invariant(body, 2.0 * alpha);

    double worst = 0.0;
    double worst_cyclic = 0.0;
    std::vector<double> lambdas;
    for (double t : grid(grid_size)) {
        const ChordSet cs = tangent_chords(body, alpha, t);
        worst = std::max(worst, rel_diff(cs.lambda, 2.0 * cs.d));
        worst_cyclic = std::max(worst_cyclic, rel_diff(norm(isoptic_point(body, alpha, t)), cs.d / std::sin(alpha)));
        lambdas.push_back(cs.lambda);
    }
    const auto stats = profile_stats(lambdas);
    r.measurements["symmetry_gate"] = gate ? 1.0 : 0.0;
    r.measurements["max_rel_diff_lambda_2d"] = worst;
    r.measurements["max_rel_diff_radius_d_over_sin"] = worst_cyclic;
    r.measurements["lambda_relative_spread"] = stats.relative_spread;
    r.tolerances["relative"] = tol;

    if (!gate) {
        r.verdict = Verdict::informational;
        r.note = "body is not invariant under rotation by pi-alpha or 2alpha";
        return r;
    }
    bool ok = worst <= tol;
    if (stats.relative_spread <= tol) {
        double worst_circle = 0.0;
        const double expected = stats.mean / (2.0 * std::sin(alpha));
        for (double t : grid(grid_size))
            worst_circle = std::max(worst_circle, rel_diff(norm(isoptic_point(body, alpha, t)), expected));
        r.measurements["max_rel_diff_radius_lambda_over_2sin"] = worst_circle;
        ok = ok && worst_circle <= tol;
    }
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_lambda_inequality(const FourierBody& body, double alpha, int grid_size)
{
    require_open_angle(alpha);
    auto r = new_report("5", body, alpha);
    const double tol = 1e-9 * body.mean_term();
    const double omega0 = width_profile(body, grid_size).min_width;
    const double length = perimeter(body);
    const double bound = 2.0 * omega0 * std::cos(alpha / 2.0);

    const auto lam = profile(body, alpha, Chord::lambda, grid_size);
    double max_gap = 0.0;
    for (double v : lam.values)
        max_gap = std::max(max_gap, std::abs(v - bound));

    // t0 with c(t0) + c(t0 - π + α) equal to its mean
    const double shift = kPi - alpha;
    auto pair_sum = [&](double t) { return chord_value(body, alpha, Chord::c, t) + chord_value(body, alpha, Chord::c, t - shift); };
    const double pair_mean = 2.0 * length / (kPi * std::tan(alpha / 2.0));
    const auto ts = grid(grid_size);
    std::size_t best = 0;
    double best_gap = INFINITY;
    std::vector<double> excess(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        excess[i] = pair_sum(ts[i]) - pair_mean;
        if (std::abs(excess[i]) < best_gap) {
            best_gap = std::abs(excess[i]);
            best = i;
        }
    }
    double t0 = ts[best];
    const std::size_t n = ts.size();
    for (std::size_t j : {(best + n - 1) % n, (best + 1) % n}) {
        if (excess[best] == 0.0)
            break;
        if (std::signbit(excess[best]) == std::signbit(excess[j]))
            continue;
        double lo = ts[best], hi = ts[j];
        if (j == (best + n - 1) % n)
            std::swap(lo, hi);
        if (hi < lo)
            hi += kTwoPi;
        auto [a, b] = boost::math::tools::bisect([&](double t) { return pair_sum(t) - pair_mean; }, lo, hi,
                                                 boost::math::tools::eps_tolerance<double>(50));
        t0 = 0.5 * (a + b);
        break;
    }
    const double chained_bound = 2.0 * std::cos(alpha / 2.0) * length / kPi;
    const double lambda_t0 = isoptic_chord_lambda(body, alpha, t0);

    const bool exists = lam.stats.max >= bound - tol;
    const bool chained = lambda_t0 >= chained_bound - tol;
    r.measurements["omega0"] = omega0;
    r.measurements["perimeter"] = length;
    r.measurements["bound_2w0cos"] = bound;
    r.measurements["lambda_max"] = lam.stats.max;
    r.measurements["lambda_min"] = lam.stats.min;
    r.measurements["t0"] = t0;
    r.measurements["lambda_t0"] = lambda_t0;
    r.measurements["chained_bound"] = chained_bound;
    r.measurements["equality_everywhere"] = max_gap <= tol ? 1.0 : 0.0;
    r.measurements["constant_width"] = symmetry_predicates(body).constant_width ? 1.0 : 0.0;
    r.tolerances["one_sided_absolute"] = tol;
    r.verdict = exists && chained ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_q_inequality(const FourierBody& body, double alpha, int grid_size)
{
    require_open_angle(alpha);
    auto r = new_report("JY", body, alpha);
    const double tol = 1e-9 * body.mean_term();
    const double omega0 = width_profile(body, grid_size).min_width;
    const double bound = omega0 * std::cos(alpha / 2.0);
    const auto qp = profile(body, alpha, Chord::q, grid_size);
    double max_gap = 0.0;
    for (double v : qp.values)
        max_gap = std::max(max_gap, std::abs(v - bound));
    r.measurements["omega0"] = omega0;
    r.measurements["bound_w0cos"] = bound;
    r.measurements["q_max"] = qp.stats.max;
    r.measurements["q_min"] = qp.stats.min;
    r.measurements["equality_everywhere"] = max_gap <= tol ? 1.0 : 0.0;
    r.tolerances["one_sided_absolute"] = tol;
    r.verdict = qp.stats.max >= bound - tol ? Verdict::pass : Verdict::fail;
    return r;
}

TriangleBound triangle_bound_check(const FourierBody& body, double alpha, double t)
{
    require_open_angle(alpha);
    const double tol = 1e-9 * body.mean_term();
    const double c_here = chord_value(body, alpha, Chord::c, t);
    const double c_prev = chord_value(body, alpha, Chord::c, t - kPi + alpha);
    TriangleBound tb;
    tb.lhs = isoptic_chord_lambda(body, alpha, t);
    tb.rhs = (c_here + c_prev) * std::sin(alpha / 2.0);
    tb.ok = tb.lhs >= tb.rhs - tol;
    tb.equality = std::abs(c_here - c_prev) <= tol;
    return tb;
}

std::vector<FourierBody> random_corpus(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> how_many(1, 3);
    std::uniform_real_distribution<double> unit_coeff(-1.0, 1.0);
    std::vector<FourierBody> corpus;
    while (static_cast<int>(corpus.size()) < count) {
        std::vector<int> orders{2, 3, 4, 5, 6, 7};
        std::shuffle(orders.begin(), orders.end(), rng);
        const int k = how_many(rng);
        std::vector<Harmonic> hs;
        for (int i = 0; i < k; ++i) {
            const int n = orders[static_cast<std::size_t>(i)];
            const double scale = 0.9 / ((n * n - 1.0) * k);
            hs.push_back({n, scale * unit_coeff(rng), scale * unit_coeff(rng)});
        }
        const auto sorted = normalize_harmonics(hs);
        if (convexity_margin(1.0, sorted, 1024) >= 0.1)
            corpus.emplace_back(1.0, sorted);
    }
    return corpus;
}

VerificationReport search_lambda_equality_case(int grid_size)
{
    VerificationReport r;
    r.theorem = "5-equality-search";
    r.verdict = Verdict::informational;
    int tried = 0;
    int found = 0;
    for (int n = 3; n <= 11; n += 2) {
        const FourierBody body(static_cast<double>(n) * n, {{n, 1.0, 0.0}});
        for (const auto& angle : admissible_angles(n)) {
            const double alpha = angle.radians();
            ++tried;
            const double bound = 2.0 * width_profile(body, grid_size).min_width * std::cos(alpha / 2.0);
            const auto lam = profile(body, alpha, Chord::lambda, std::max(grid_size, 256));
            double gap = 0.0;
            for (double v : lam.values)
                gap = std::max(gap, std::abs(v - bound));
            if (gap <= 1e-9 * body.mean_term()) {
                if (found == 0) {
                    r.body = describe(body);
                    r.alpha = alpha;
                    r.note = "equality everywhere at alpha=" + angle.str();
                }
                ++found;
            }
        }
    }
    r.measurements["candidates_tried"] = tried;
    r.measurements["equality_cases_found"] = found;
    return r;
}

} // namespace isoptic

namespace isoptic {

namespace {

constexpr double kBallSpread = 1e-6;

bool is_ball(const chords3d::ImplicitBody3D& b)
{
    return std::holds_alternative<chords3d::Ball>(b.shape());
}

std::string describe3d(const chords3d::ImplicitBody3D& b)
{
    char buf[256];
    const auto& c = b.center();
    if (const auto* ball = std::get_if<chords3d::Ball>(&b.shape()))
        std::snprintf(buf, sizeof buf, "ball r=%.17g at (%.17g, %.17g, %.17g)", ball->radius, c.x(), c.y(), c.z());
    else if (const auto* e = std::get_if<chords3d::Ellipsoid>(&b.shape()))
        std::snprintf(buf, sizeof buf, "ellipsoid (%.17g, %.17g, %.17g) at (%.17g, %.17g, %.17g)", e->semi_axes.x(),
                      e->semi_axes.y(), e->semi_axes.z(), c.x(), c.y(), c.z());
    else {
        const auto& p = std::get<chords3d::PerturbedSphere>(b.shape());
        std::snprintf(buf, sizeof buf, "perturbed sphere r=%.17g eps=%.17g m=%d at (%.17g, %.17g, %.17g)", p.radius,
                      p.epsilon, p.order, c.x(), c.y(), c.z());
    }
    return buf;
}

void record_spread(VerificationReport& r, const chords3d::SpreadStats& st)
{
    r.measurements["length_min"] = st.min;
    r.measurements["length_max"] = st.max;
    r.measurements["length_mean"] = st.mean;
    r.measurements["relative_spread"] = st.relative_spread;
    r.measurements["samples_used"] = st.used;
    r.measurements["samples_failed"] = st.failed;
}

} // namespace

VerificationReport check_equichordal_3d(const chords3d::ImplicitBody3D& outer, const chords3d::ImplicitBody3D& inner,
                                        int count, std::uint64_t seed)
{
    VerificationReport r;
    r.theorem = "7";
    r.body = describe3d(outer) + " around " + describe3d(inner);
    const auto st = chords3d::chord_spread(chords3d::tangent_chord_lengths(outer, inner, count, seed));
    record_spread(r, st);
    r.measurements["seed"] = static_cast<double>(seed);
    r.tolerances["ball_spread"] = kBallSpread;
    const bool concentric_balls = is_ball(outer) && is_ball(inner) && (outer.center() - inner.center()).norm() <= 1e-12;
    if (concentric_balls) {
        const double big = std::get<chords3d::Ball>(outer.shape()).radius;
        const double small = std::get<chords3d::Ball>(inner.shape()).radius;
        r.measurements["expected_length"] = 2.0 * std::sqrt(big * big - small * small);
        r.note = "concentric balls: every tangent chord must have the same length";
        r.verdict = st.relative_spread <= kBallSpread && st.failed == 0 ? Verdict::pass : Verdict::fail;
    } else {
        r.note = "not concentric balls: tangent chords must vary";
        r.verdict = st.relative_spread > kBallSpread ? Verdict::pass : Verdict::fail;
    }
    return r;
}

VerificationReport check_alpha_chord_bound_3d(const chords3d::ImplicitBody3D& body, double alpha, int count,
                                              std::uint64_t seed)
{
    require_open_angle(alpha);
    VerificationReport r;
    r.theorem = "8";
    r.body = describe3d(body);
    r.alpha = alpha;
    const auto st = chords3d::chord_spread(chords3d::alpha_chords(body, alpha, count, seed));
    record_spread(r, st);
    const double bound = body.min_width_estimate() * std::cos(alpha / 2.0);
    const double tol = 1e-9 * body.diameter_bound();
    r.measurements["bound_w0cos"] = bound;
    r.measurements["equality_everywhere"] = std::abs(st.max - bound) <= tol && std::abs(st.min - bound) <= tol ? 1.0 : 0.0;
    r.tolerances["one_sided_absolute"] = tol;
    r.verdict = st.max >= bound - tol && st.failed == 0 ? Verdict::pass : Verdict::fail;
    return r;
}

VerificationReport check_right_chords_3d(const chords3d::ImplicitBody3D& body, int count, std::uint64_t seed)
{
    VerificationReport r;
    r.theorem = "9";
    r.body = describe3d(body);
    r.alpha = kPi / 2.0;
    const auto st = chords3d::chord_spread(chords3d::alpha_chords(body, kPi / 2.0, count, seed));
    record_spread(r, st);
    r.tolerances["ball_spread"] = kBallSpread;
    if (is_ball(body)) {
        r.note = "ball: pi/2-chords must all have length r*sqrt(2)";
        r.verdict = st.relative_spread <= kBallSpread && st.failed == 0 ? Verdict::pass : Verdict::fail;
    } else {
        r.note = "not a ball: pi/2-chords must vary";
        r.verdict = st.relative_spread > kBallSpread ? Verdict::pass : Verdict::fail;
    }
    return r;
}

} // namespace isoptic
