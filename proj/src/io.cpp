#include "isoptic/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace isoptic::io {

namespace {

double number_field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key))
        throw SpecError("missing field '" + where + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number())
        throw SpecError("field '" + where + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw SpecError("field '" + where + key + "' must be finite");
    return d;
}

double optional_number(const json& j, const std::string& key, const std::string& where, double fallback)
{
    return j.contains(key) ? number_field(j, key, where) : fallback;
}

int int_field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key))
        throw SpecError("missing field '" + where + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw SpecError("field '" + where + key + "' must be an integer");
    return v.get<int>();
}

std::vector<Harmonic> parse_harmonics(const json& j)
{
    std::vector<Harmonic> hs;
    if (!j.contains("harmonics"))
        return hs;
    const auto& arr = j.at("harmonics");
    if (!arr.is_array())
        throw SpecError("field 'harmonics' must be an array");
    std::set<int> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "harmonics[" + std::to_string(i) + "].";
        const auto& e = arr[i];
        if (!e.is_object())
            throw SpecError("field 'harmonics[" + std::to_string(i) + "]' must be an object");
        Harmonic h;
        h.order = int_field(e, "n", where);
        if (h.order < 1)
            throw SpecError("field '" + where + "n' must be >= 1, got " + std::to_string(h.order));
        if (!seen.insert(h.order).second)
            throw SpecError("field '" + where + "n' duplicates order " + std::to_string(h.order));
        h.cos_coeff = optional_number(e, "a", where, 0.0);
        h.sin_coeff = optional_number(e, "b", where, 0.0);
        hs.push_back(h);
    }
    return hs;
}

chords3d::Vec3 vec3_field(const json& j, const std::string& key, const chords3d::Vec3& fallback)
{
    if (!j.contains(key))
        return fallback;
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 3 || !std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); }))
        throw SpecError("field '" + key + "' must be an array of 3 numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

} // namespace

FourierBody parse_body(const json& j)
{
    if (!j.is_object())
        throw SpecError("body spec must be a JSON object");
    const double a0 = number_field(j, "a0", "");
    try {
        return FourierBody(a0, parse_harmonics(j));
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
}

json body_to_json(const FourierBody& body)
{
    json hs = json::array();
    for (const auto& h : body.harmonics())
        hs.push_back({{"n", h.order}, {"a", h.cos_coeff}, {"b", h.sin_coeff}});
    return {{"a0", body.mean_term()}, {"harmonics", hs}};
}

RotorSpec parse_rotor_spec(const json& j)
{
    if (!j.is_object())
        throw SpecError("rotor spec must be a JSON object");
    RotorSpec spec;
    spec.sides = int_field(j, "sides", "");
    if (spec.sides < 3)
        throw SpecError("field 'sides' must be >= 3, got " + std::to_string(spec.sides));
    spec.harmonics = parse_harmonics(j);
    if (j.contains("a0")) {
        const auto& a0 = j.at("a0");
        if (a0.is_string()) {
            if (a0.get<std::string>() != "auto")
                throw SpecError("field 'a0' must be a number or \"auto\"");
        } else {
            spec.mean_term = number_field(j, "a0", "");
        }
    }
    return spec;
}

chords3d::ImplicitBody3D parse_body3d(const json& j)
{
    using namespace chords3d;
    if (!j.is_object())
        throw SpecError("3-D body spec must be a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw SpecError("field 'kind' must be \"ball\", \"ellipsoid\" or \"perturbed_sphere\"");
    const auto kind = j.at("kind").get<std::string>();
    const Vec3 center = vec3_field(j, "center", Vec3::Zero());
    Mat3 rot = Mat3::Identity();
    if (j.contains("rotation")) {
        const auto& r = j.at("rotation");
        if (!r.is_array() || r.size() != 3)
            throw SpecError("field 'rotation' must be a 3x3 array");
        for (int i = 0; i < 3; ++i) {
            const auto& row = r[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 3)
                throw SpecError("field 'rotation' must be a 3x3 array");
            for (int k = 0; k < 3; ++k) {
                if (!row[static_cast<std::size_t>(k)].is_number())
                    throw SpecError("field 'rotation' must contain numbers");
                rot(i, k) = row[static_cast<std::size_t>(k)].get<double>();
            }
        }
    }
    try {
        if (kind == "ball")
            return ImplicitBody3D(Ball{number_field(j, "radius", "")}, center, rot);
        if (kind == "ellipsoid") {
            if (!j.contains("semi_axes"))
                throw SpecError("missing field 'semi_axes'");
            return ImplicitBody3D(Ellipsoid{vec3_field(j, "semi_axes", Vec3::Ones())}, center, rot);
        }
        if (kind == "perturbed_sphere")
            return ImplicitBody3D(PerturbedSphere{number_field(j, "radius", ""), number_field(j, "epsilon", ""),
                                                  int_field(j, "order", "")},
                                  center, rot);
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }
    throw SpecError("field 'kind' has unknown value \"" + kind + "\"");
}

json report_to_json(const VerificationReport& report)
{
    json j;
    j["theorem"] = report.theorem;
    j["body"] = report.body;
    j["alpha"] = report.alpha;
    j["measurements"] = report.measurements;
    j["tolerances"] = report.tolerances;
    j["verdict"] = std::string(verdict_name(report.verdict));
    if (!report.note.empty())
        j["note"] = report.note;
    return j;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_profile_csv(std::ostream& out, const ChordProfile& profile)
{
    out << "t,value\n";
    for (std::size_t i = 0; i < profile.t.size(); ++i)
        out << fmt17(profile.t[i]) << ',' << fmt17(profile.values[i]) << '\n';
}

void write_curve_csv(std::ostream& out, const std::vector<double>& t, const std::vector<PlanePoint>& points)
{
    out << "t,x,y\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << fmt17(t[i]) << ',' << fmt17(points[i].x) << ',' << fmt17(points[i].y) << '\n';
}

void write_samples_csv(std::ostream& out, const std::vector<chords3d::ChordSample3D>& samples)
{
    out << "px,py,pz,dx,dy,dz,ax,ay,az,bx,by,bz,length\n";
    for (const auto& s : samples) {
        for (const auto* v : {&s.base, &s.direction, &s.end_a, &s.end_b})
            out << fmt17(v->x()) << ',' << fmt17(v->y()) << ',' << fmt17(v->z()) << ',';
        out << fmt17(s.length) << '\n';
    }
}

json frame_to_json(const PolygonFrame& frame)
{
    auto pts = [](const std::vector<PlanePoint>& v) {
        json a = json::array();
        for (const auto& p : v)
            a.push_back({p.x, p.y});
        return a;
    };
    return {{"sides", frame.sides},
            {"phase", frame.phase},
            {"vertices", pts(frame.vertices)},
            {"tangency_points", pts(frame.tangency_points)},
            {"side_lengths", frame.side_lengths}};
}

namespace {

// SVG y grows downwards; flip so figures read like the math.
std::string svg_xy(PlanePoint p)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", p.x, -p.y);
    return buf;
}

std::string closed_path(const std::vector<PlanePoint>& pts)
{
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i)
        d += (i == 0 ? "M" : " L") + svg_xy(pts[i]);
    return d + " Z";
}

} // namespace

std::string render_svg(const SvgScene& scene)
{
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
    double xmax = -xmin, ymax = -xmin;
    auto grow = [&](const std::vector<PlanePoint>& pts) {
        for (const auto& p : pts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, -p.y);
            ymax = std::max(ymax, -p.y);
        }
    };
    grow(scene.body);
    for (const auto& c : scene.isoptics)
        grow(c);
    for (const auto& f : scene.frames)
        grow(f.vertices);
    if (!(xmin <= xmax)) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double margin = 0.05 * span;
    const double stroke = span / 400.0;

    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\" width=\"800\" height=\"%.0f\">\n",
                  xmin - margin, ymin - margin, (xmax - xmin) + 2 * margin, (ymax - ymin) + 2 * margin,
                  800.0 * ((ymax - ymin) + 2 * margin) / ((xmax - xmin) + 2 * margin));
    out << buf;
    std::snprintf(buf, sizeof buf, "%.6f", stroke);
    const std::string sw = buf;

    if (!scene.body.empty())
        out << "  <path class=\"body\" d=\"" << closed_path(scene.body) << "\" fill=\"#dde6f0\" stroke=\"#1f3b5c\" stroke-width=\""
            << sw << "\"/>\n";
    for (const auto& c : scene.isoptics)
        out << "  <path class=\"isoptic\" d=\"" << closed_path(c) << "\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\""
            << sw << "\"/>\n";
    for (const auto& f : scene.frames) {
        std::string pts;
        for (const auto& v : f.vertices)
            pts += svg_xy(v) + " ";
        pts += svg_xy(f.vertices.front());
        out << "  <polyline class=\"frame\" points=\"" << pts << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"" << sw
            << "\"/>\n";
        for (const auto& tp : f.tangency_points) {
            std::snprintf(buf, sizeof buf, "  <circle class=\"tangency\" cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"#1f3b5c\"/>\n",
                          tp.x, -tp.y, 3.0 * stroke);
            out << buf;
        }
    }
    out << "</svg>\n";
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace isoptic::io
