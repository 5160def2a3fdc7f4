#include "isoptic/angle.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <system_error>

namespace isoptic {

RationalAngle::RationalAngle(std::int64_t s, std::int64_t q)
{
    if (q <= 0)
        throw std::invalid_argument("rational angle needs a positive denominator, got " + std::to_string(q));
    const std::int64_t g = std::gcd(s, q);
    s_ = g == 0 ? 0 : s / g;
    q_ = g == 0 ? 1 : q / g;
}

double RationalAngle::radians() const noexcept
{
    return static_cast<double>(s_) * kPi / static_cast<double>(q_);
}

std::string RationalAngle::str() const
{
    return std::to_string(s_) + "/" + std::to_string(q_) + "pi";
}

std::string AngleArg::str() const
{
    if (rational)
        return rational->str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", radians);
    return buf;
}

AngleArg parse_angle(std::string_view text)
{
    static const std::regex rational_re(R"(^\s*(\d+)\s*/\s*(\d+)\s*pi\s*$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, rational_re)) {
        const auto num = std::stoll(m[1].str());
        const auto den = std::stoll(m[2].str());
        if (den == 0)
            throw std::invalid_argument("angle '" + s + "' has zero denominator");
        RationalAngle r(num, den);
        return {r.radians(), r};
    }

    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && std::isspace(static_cast<unsigned char>(*first)))
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw std::invalid_argument("cannot parse angle '" + s + "' (expected s/qpi or radians)");
    return {value, std::nullopt};
}

void require_open_angle(double alpha, std::string_view what)
{
    if (!(alpha > 0.0 && alpha < kPi))
        throw std::invalid_argument(std::string(what) + " must lie in (0, pi), got " + std::to_string(alpha));
}

double wrap_two_pi(double t) noexcept
{
    double r = std::fmod(t, kTwoPi);
    return r < 0.0 ? r + kTwoPi : r;
}

} // namespace isoptic
