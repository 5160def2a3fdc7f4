#pragma once

#include "isoptic/analysis.hpp"
#include "isoptic/chords3d.hpp"
#include "isoptic/fourier_body.hpp"
#include "isoptic/isoptic_engine.hpp"
#include "isoptic/rotor_builder.hpp"

#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoptic::io {

using nlohmann::json;

/// Malformed input file or field; the message names the offending field.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"a0": number, "harmonics": [{"n": int, "a": number, "b": number}]}
FourierBody parse_body(const json& j);
json body_to_json(const FourierBody& body);

/// {"sides": N, "harmonics": [...], "a0": number | "auto"}
RotorSpec parse_rotor_spec(const json& j);

/// {"kind": "ball" | "ellipsoid" | "perturbed_sphere", "center": [x,y,z],
///  "radius": r, "semi_axes": [a,b,c], "epsilon": e, "order": m,
///  "rotation": [[..],[..],[..]]}
chords3d::ImplicitBody3D parse_body3d(const json& j);

json report_to_json(const VerificationReport& report);

/// Reads and parses a JSON file; SpecError on I/O or syntax failure.
json read_json_file(const std::filesystem::path& path);

/// %.17g
std::string fmt17(double v);

/// header `t,value`
void write_profile_csv(std::ostream& out, const ChordProfile& profile);
/// header `t,x,y`
void write_curve_csv(std::ostream& out, const std::vector<double>& t, const std::vector<PlanePoint>& points);
/// header `px,py,pz,dx,dy,dz,ax,ay,az,bx,by,bz,length`
void write_samples_csv(std::ostream& out, const std::vector<chords3d::ChordSample3D>& samples);

json frame_to_json(const PolygonFrame& frame);

/// Everything that goes into one figure.
struct SvgScene {
    std::vector<PlanePoint> body;
    std::vector<std::vector<PlanePoint>> isoptics;
    std::vector<PolygonFrame> frames;
};

/// Standalone SVG: closed paths for body and isoptics, polylines for the
/// frames, circles at tangency points; viewBox fitted with a 5% margin.
std::string render_svg(const SvgScene& scene);

/// Writes text to path; std::runtime_error naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace isoptic::io
