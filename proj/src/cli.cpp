#include "isoptic/cli.hpp"

#include "isoptic/analysis.hpp"
#include "isoptic/angle.hpp"
#include "isoptic/chords3d.hpp"
#include "isoptic/io.hpp"
#include "isoptic/isoptic_engine.hpp"
#include "isoptic/rotor_builder.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

namespace isoptic::cli {

namespace {

using io::json;

struct Options {
    std::string body;
    std::string spec;
    std::string out;
    std::string alpha;
    std::vector<std::string> alphas;
    std::string chord = "c";
    std::string theorem;
    std::string outer;
    std::string inner;
    std::string format = "json";
    int grid = kDefaultGrid;
    int n = 0;
    int nmax = 10;
    int sides = 0;
    int frames = 3;
    int count = 500;
    std::uint64_t seed = 0;
    double t = 0.0;
    double phase = 0.0;
    std::optional<double> tol;
};

class Emitter {
public:
    Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

    void emit(const std::string& text) const
    {
        if (path_.empty())
            out_ << text;
        else
            io::write_text_file(path_, text);
    }

private:
    std::ostream& out_;
    std::string path_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

FourierBody load_body(const std::string& path)
{
    if (path.empty())
        throw io::SpecError("--body is required");
    return io::parse_body(io::read_json_file(path));
}

AngleArg load_alpha(const std::string& text)
{
    if (text.empty())
        throw io::SpecError("--alpha is required");
    AngleArg a = parse_angle(text);
    require_open_angle(a.radians);
    return a;
}

json report_json(const VerificationReport& r, const std::string& alpha_text)
{
    json j = io::report_to_json(r);
    if (!alpha_text.empty())
        j["alpha_input"] = alpha_text;
    return j;
}

int verdict_exit(const VerificationReport& r)
{
    return r.verdict == Verdict::fail ? kVerificationFailed : kOk;
}

int cmd_body_eval(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    const auto w = width_profile(body, std::max(o.grid, 8));
    const auto sym = symmetry_predicates(body);
    const PlanePoint pt = body.boundary_point(o.t);
    json j;
    j["t"] = o.t;
    j["p"] = body.support(o.t, 0);
    j["dp"] = body.support(o.t, 1);
    j["ddp"] = body.support(o.t, 2);
    j["boundary_point"] = {pt.x, pt.y};
    j["perimeter"] = perimeter(body);
    j["min_width"] = w.min_width;
    j["max_width"] = w.max_width;
    j["convexity_margin"] = convexity_margin(body, std::max(o.grid, min_convexity_grid(body.harmonics())));
    j["constant_width"] = sym.constant_width;
    j["centrally_symmetric"] = sym.centrally_symmetric;
    j["rotational_period"] = sym.rotational_period ? json(*sym.rotational_period) : json(nullptr);
    Emitter(out, o.out).emit(dump(j));
    return kOk;
}

int cmd_body_export(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    if (o.format == "json") {
        Emitter(out, o.out).emit(dump(io::body_to_json(body)));
    } else if (o.format == "csv") {
        std::ostringstream s;
        std::vector<double> ts;
        for (int i = 0; i < o.grid; ++i)
            ts.push_back(kTwoPi * i / o.grid);
        io::write_curve_csv(s, ts, sample_boundary(body, o.grid));
        Emitter(out, o.out).emit(s.str());
    } else {
        throw io::SpecError("--format must be json or csv");
    }
    return kOk;
}

int cmd_isoptic_sample(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    const AngleArg alpha = load_alpha(o.alpha);
    const auto curve = sample_isoptic(body, alpha.radians, o.grid);
    std::ostringstream s;
    io::write_curve_csv(s, curve.t, curve.points);
    Emitter(out, o.out).emit(s.str());
    return kOk;
}

int cmd_profile(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    const AngleArg alpha = load_alpha(o.alpha);
    const auto prof = profile(body, alpha.radians, parse_chord(o.chord), o.grid);
    std::ostringstream s;
    io::write_profile_csv(s, prof);
    if (o.out.empty()) {
        out << s.str();
    } else {
        io::write_text_file(o.out, s.str());
        json j = {{"chord", std::string(chord_name(prof.which))},
                  {"alpha", alpha.radians},
                  {"alpha_input", alpha.str()},
                  {"grid", o.grid},
                  {"min", prof.stats.min},
                  {"max", prof.stats.max},
                  {"mean", prof.stats.mean},
                  {"relative_spread", prof.stats.relative_spread}};
        out << dump(j);
    }
    return kOk;
}

int cmd_rotor_angles(const Options& o, std::ostream& out)
{
    if (o.n < 2)
        throw io::SpecError("--n must be >= 2");
    std::ostringstream s;
    s << "alpha,radians\n";
    for (const auto& a : admissible_angles(o.n))
        s << a.str() << ',' << io::fmt17(a.radians()) << '\n';
    Emitter(out, o.out).emit(s.str());
    return kOk;
}

int cmd_rotor_harmonics(const Options& o, std::ostream& out)
{
    const AngleArg alpha = load_alpha(o.alpha);
    if (o.nmax < 2)
        throw io::SpecError("--nmax must be >= 2");
    std::vector<int> orders;
    if (alpha.rational) {
        orders = admissible_harmonics(alpha.rational->num(), alpha.rational->den(), o.nmax);
    } else {
        for (int n = 2; n <= o.nmax; ++n)
            if (determinant_c(n, alpha.radians).admissible())
                orders.push_back(n);
    }
    std::ostringstream s;
    s << "n,determinant\n";
    for (int n : orders)
        s << n << ',' << io::fmt17(determinant_c(n, alpha.radians).det) << '\n';
    Emitter(out, o.out).emit(s.str());
    return kOk;
}

int cmd_rotor_build(const Options& o, std::ostream& out)
{
    if (o.spec.empty())
        throw io::SpecError("--spec is required");
    const RotorSpec spec = io::parse_rotor_spec(io::read_json_file(o.spec));
    const FourierBody body = build_rotor(spec);
    Emitter(out, o.out).emit(dump(io::body_to_json(body)));
    return kOk;
}

chords3d::ImplicitBody3D load_body3d(const std::string& path, chords3d::ImplicitBody3D fallback)
{
    if (path.empty())
        return fallback;
    return io::parse_body3d(io::read_json_file(path));
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const std::string& id = o.theorem;
    static const std::set<std::string> known{"1", "2", "3", "4", "5", "6", "JY", "7", "8", "9"};
    if (!known.count(id))
        throw io::SpecError("--theorem must be one of 1, 2, 3, 4, 5, 6, JY, 7, 8, 9");
    if (id == "2" || id == "6") {
        json j = {{"theorem", id},
                  {"verdict", "informational"},
                  {"note", "not machine-checkable at desk scale; see the corpus-level properties in the test suite"}};
        out << dump(j);
        return kOk;
    }
    VerificationReport r;
    if (id == "7") {
        const auto outer = load_body3d(o.outer, chords3d::ImplicitBody3D::ball(2.0));
        const auto inner = load_body3d(o.inner, chords3d::ImplicitBody3D::ball(1.0));
        r = check_equichordal_3d(outer, inner, o.count, o.seed);
    } else if (id == "8") {
        const auto body = load_body3d(o.body, chords3d::ImplicitBody3D::ball(1.0));
        const double alpha = o.alpha.empty() ? kPi / 2.0 : load_alpha(o.alpha).radians;
        r = check_alpha_chord_bound_3d(body, alpha, o.count, o.seed);
    } else if (id == "9") {
        const auto body = load_body3d(o.body, chords3d::ImplicitBody3D::ball(1.0));
        r = check_right_chords_3d(body, o.count, o.seed);
    } else {
        const FourierBody body = load_body(o.body);
        const AngleArg alpha = load_alpha(o.alpha);
        if (id == "1")
            r = check_constant_c(body, alpha.radians, o.tol.value_or(kConstancyTolerance), o.grid);
        else if (id == "3")
            r = check_constant_h(body, alpha.radians, o.tol.value_or(kConstancyTolerance), o.grid);
        else if (id == "4")
            r = check_lambda_equals_2d(body, alpha.radians, o.grid);
        else if (id == "5")
            r = check_lambda_inequality(body, alpha.radians, o.grid);
        else
            r = check_q_inequality(body, alpha.radians, o.grid);
        out << dump(report_json(r, alpha.str()));
        return verdict_exit(r);
    }
    out << dump(report_json(r, o.alpha));
    return verdict_exit(r);
}

std::vector<PolygonFrame> frames_for(const FourierBody& body, int sides, double phase, int count)
{
    std::vector<PolygonFrame> frames;
    const double period = kTwoPi / sides;
    for (int k = 0; k < count; ++k)
        frames.push_back(circumscribed_polygon(body, sides, phase + period * k / count));
    return frames;
}

int cmd_polygon_frames(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    if (o.sides < 3)
        throw io::SpecError("--sides must be >= 3");
    if (o.frames < 1)
        throw io::SpecError("--frames must be >= 1");
    json arr = json::array();
    for (const auto& f : frames_for(body, o.sides, o.phase, o.frames))
        arr.push_back(io::frame_to_json(f));
    Emitter(out, o.out).emit(dump(arr));
    return kOk;
}

int cmd_render(const Options& o, std::ostream& out)
{
    const FourierBody body = load_body(o.body);
    if (o.out.empty())
        throw io::SpecError("--out is required for render");
    io::SvgScene scene;
    const int grid = std::min(o.grid, 720);
    scene.body = sample_boundary(body, grid);
    for (const auto& text : o.alphas)
        scene.isoptics.push_back(sample_isoptic(body, load_alpha(text).radians, grid).points);
    if (o.sides != 0) {
        if (o.sides < 3)
            throw io::SpecError("--sides must be >= 3");
        scene.frames = frames_for(body, o.sides, o.phase, o.frames);
    }
    io::write_text_file(o.out, io::render_svg(scene));
    json j = {{"out", o.out},
              {"isoptics", scene.isoptics.size()},
              {"frames", scene.frames.size()}};
    out << dump(j);
    return kOk;
}

json spread_json(const chords3d::SpreadStats& st)
{
    return {{"min", st.min},
            {"max", st.max},
            {"mean", st.mean},
            {"relative_spread", st.relative_spread},
            {"used", st.used},
            {"failed", st.failed}};
}

int cmd_probe_tangent(const Options& o, std::ostream& out)
{
    if (o.outer.empty() || o.inner.empty())
        throw io::SpecError("--outer and --inner are required");
    const auto outer = io::parse_body3d(io::read_json_file(o.outer));
    const auto inner = io::parse_body3d(io::read_json_file(o.inner));
    const auto samples = chords3d::tangent_chord_lengths(outer, inner, o.count, o.seed);
    if (!o.out.empty()) {
        std::ostringstream s;
        io::write_samples_csv(s, samples);
        io::write_text_file(o.out, s.str());
    }
    json j = spread_json(chords3d::chord_spread(samples));
    j["seed"] = o.seed;
    j["count"] = o.count;
    out << dump(j);
    return kOk;
}

int cmd_probe_alpha(const Options& o, std::ostream& out)
{
    if (o.body.empty())
        throw io::SpecError("--body is required");
    const auto body = io::parse_body3d(io::read_json_file(o.body));
    const AngleArg alpha = load_alpha(o.alpha);
    const auto samples = chords3d::alpha_chords(body, alpha.radians, o.count, o.seed);
    if (!o.out.empty()) {
        std::ostringstream s;
        io::write_samples_csv(s, samples);
        io::write_text_file(o.out, s.str());
    }
    json j = spread_json(chords3d::chord_spread(samples));
    j["seed"] = o.seed;
    j["count"] = o.count;
    j["alpha_input"] = alpha.str();
    out << dump(j);
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Support-function toolkit for isoptics, chord functions and rotors of planar convex bodies",
                 "isoptic-lab"};
    app.require_subcommand(1);

    auto add_grid = [&](CLI::App* c) { c->add_option("--grid", o.grid, "samples per curve")->capture_default_str(); };
    auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "random seed")->capture_default_str(); };
    auto add_count = [&](CLI::App* c) { c->add_option("--count", o.count, "number of samples")->capture_default_str(); };

    auto* body = app.add_subcommand("body", "evaluate or export a body spec");
    body->require_subcommand(1);
    auto* body_eval = body->add_subcommand("eval", "p, p', p'', boundary point and summary at --t");
    body_eval->add_option("--body", o.body, "body spec JSON")->required();
    body_eval->add_option("--t", o.t, "parameter");
    body_eval->add_option("--out", o.out);
    add_grid(body_eval);
    auto* body_export = body->add_subcommand("export", "normalized body JSON or boundary CSV");
    body_export->add_option("--body", o.body)->required();
    body_export->add_option("--format", o.format, "json or csv")->capture_default_str();
    body_export->add_option("--out", o.out);
    add_grid(body_export);

    auto* isoptic = app.add_subcommand("isoptic", "isoptic curves");
    isoptic->require_subcommand(1);
    auto* isoptic_sample = isoptic->add_subcommand("sample", "sample K_alpha as t,x,y CSV");
    isoptic_sample->add_option("--body", o.body)->required();
    isoptic_sample->add_option("--alpha", o.alpha, "s/qpi or radians")->required();
    isoptic_sample->add_option("--out", o.out);
    add_grid(isoptic_sample);

    auto* prof = app.add_subcommand("profile", "chord function profile as t,value CSV");
    prof->add_option("--body", o.body)->required();
    prof->add_option("--alpha", o.alpha)->required();
    prof->add_option("--chord", o.chord, "a, b, c, d, q, lambda or h")->capture_default_str();
    prof->add_option("--out", o.out);
    add_grid(prof);

    auto* rotor = app.add_subcommand("rotor", "harmonic admissibility and rotor construction");
    rotor->require_subcommand(1);
    auto* rotor_angles = rotor->add_subcommand("angles", "admissible angles for harmonic order n");
    rotor_angles->add_option("--n", o.n)->required();
    rotor_angles->add_option("--out", o.out);
    auto* rotor_harmonics = rotor->add_subcommand("harmonics", "admissible orders for an angle");
    rotor_harmonics->add_option("--alpha", o.alpha)->required();
    rotor_harmonics->add_option("--nmax", o.nmax)->capture_default_str();
    rotor_harmonics->add_option("--out", o.out);
    auto* rotor_build = rotor->add_subcommand("build", "build a rotor body from a rotor spec");
    rotor_build->add_option("--spec", o.spec)->required();
    rotor_build->add_option("--out", o.out);

    auto* verify = app.add_subcommand("verify", "run one theorem check and print a JSON report");
    verify->add_option("--theorem", o.theorem, "1, 2, 3, 4, 5, 6, JY, 7, 8, 9")->required();
    verify->add_option("--body", o.body, "planar body spec (3-D body spec for 8, 9)");
    verify->add_option("--alpha", o.alpha);
    verify->add_option("--outer", o.outer, "3-D outer body spec (--theorem 7)");
    verify->add_option("--inner", o.inner, "3-D inner body spec (--theorem 7)");
    verify->add_option("--tol", o.tol, "constancy tolerance");
    add_grid(verify);
    add_seed(verify);
    add_count(verify);

    auto* polygon = app.add_subcommand("polygon", "circumscribed regular polygons");
    polygon->require_subcommand(1);
    auto* polygon_frames = polygon->add_subcommand("frames", "circumscribed N-gons at evenly spaced phases");
    polygon_frames->add_option("--body", o.body)->required();
    polygon_frames->add_option("--sides", o.sides)->required();
    polygon_frames->add_option("--phase", o.phase);
    polygon_frames->add_option("--frames", o.frames)->capture_default_str();
    polygon_frames->add_option("--out", o.out);

    auto* render = app.add_subcommand("render", "SVG of body, isoptics and polygon frames");
    render->add_option("--body", o.body)->required();
    render->add_option("--alpha", o.alphas, "isoptic angle, repeatable");
    render->add_option("--sides", o.sides);
    render->add_option("--phase", o.phase);
    render->add_option("--frames", o.frames)->capture_default_str();
    render->add_option("--out", o.out)->required();
    add_grid(render);

    auto* probe = app.add_subcommand("probe3d", "3-D chord probes");
    probe->require_subcommand(1);
    auto* probe_tangent = probe->add_subcommand("tangent", "chords of --outer tangent to --inner");
    probe_tangent->add_option("--outer", o.outer)->required();
    probe_tangent->add_option("--inner", o.inner)->required();
    probe_tangent->add_option("--out", o.out, "samples CSV");
    add_seed(probe_tangent);
    add_count(probe_tangent);
    auto* probe_alpha = probe->add_subcommand("alpha", "alpha-chords of --body");
    probe_alpha->add_option("--body", o.body)->required();
    probe_alpha->add_option("--alpha", o.alpha)->required();
    probe_alpha->add_option("--out", o.out, "samples CSV");
    add_seed(probe_alpha);
    add_count(probe_alpha);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (body_eval->parsed())
            return cmd_body_eval(o, out);
        if (body_export->parsed())
            return cmd_body_export(o, out);
        if (isoptic_sample->parsed())
            return cmd_isoptic_sample(o, out);
        if (prof->parsed())
            return cmd_profile(o, out);
        if (rotor_angles->parsed())
            return cmd_rotor_angles(o, out);
        if (rotor_harmonics->parsed())
            return cmd_rotor_harmonics(o, out);
        if (rotor_build->parsed())
            return cmd_rotor_build(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (polygon_frames->parsed())
            return cmd_polygon_frames(o, out);
        if (render->parsed())
            return cmd_render(o, out);
        if (probe_tangent->parsed())
            return cmd_probe_tangent(o, out);
        if (probe_alpha->parsed())
            return cmd_probe_alpha(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

} // namespace isoptic::cli
