#include "isoptic/rotor_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace isoptic {

CDeterminant determinant_c(int n, double alpha)
{
    if (n < 2)
        throw std::invalid_argument("determinant_c needs harmonic order n >= 2, got " + std::to_string(n));
    require_open_angle(alpha);
    const double nb = n * (kPi - alpha);
    const double ca = std::cos(alpha);
    CDeterminant d;
    d.e1 = -2.0 * std::sin(nb) * ca + std::sin(2.0 * n * alpha);
    d.e2 = 2.0 * std::cos(nb) * ca + 1.0 + std::cos(2.0 * n * alpha);
    d.det = d.e1 * d.e1 + d.e2 * d.e2;
    return d;
}

double determinant_h(int n, double alpha)
{
    require_open_angle(alpha);
    const double nn = static_cast<double>(n) * n;
    const double nb = n * (kPi - alpha);
    const double sum = std::cos(alpha) + std::cos(nb);
    const double s = std::sin(nb);
    return nn * s * s + nn * sum * sum;
}

namespace {

// Is s·m/q an integer of the given parity?
bool ratio_has_parity(std::int64_t s, std::int64_t q, std::int64_t m, bool odd)
{
    if (m <= 0)
        return false;
    const std::int64_t num = s * m;
    if (num % q != 0)
        return false;
    return ((num / q) % 2 != 0) == odd;
}

} // namespace

bool admissible_exact(int n, const RationalAngle& alpha)
{
    if (n < 1 || !alpha.in_open_half_turn())
        return false;
    if (n == 1)
        return true;
    // α/π = (2r+1)/(n±1) for even n, 2r/(n±1) for odd n
    const bool odd_numerator = n % 2 == 0;
    return ratio_has_parity(alpha.num(), alpha.den(), n + 1, odd_numerator) ||
           ratio_has_parity(alpha.num(), alpha.den(), n - 1, odd_numerator);
}

std::vector<RationalAngle> admissible_angles(int n)
{
    if (n < 2)
        throw std::invalid_argument("admissible_angles needs n >= 2, got " + std::to_string(n));
    std::vector<RationalAngle> out;
    const int first = n % 2 == 0 ? 1 : 2;
    for (int den : {n + 1, n - 1}) {
        for (int k = first; k < den; k += 2)
            out.emplace_back(k, den);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> admissible_harmonics(std::int64_t s, std::int64_t q, int n_max)
{
    if (!(s > 0 && s < q))
        throw std::invalid_argument("angle s/q·pi needs 0 < s < q, got " + std::to_string(s) + "/" + std::to_string(q));
    if (std::gcd(s, q) != 1)
        throw std::invalid_argument("angle numerator and denominator must be coprime, got " + std::to_string(s) + "/" +
                                    std::to_string(q));
    if (n_max < 2)
        throw std::invalid_argument("n_max must be >= 2");
    const RationalAngle alpha(s, q);
    std::vector<int> out;
    for (int n = 2; n <= n_max; ++n)
        if (admissible_exact(n, alpha))
            out.push_back(n);
    return out;
}

InadmissibleHarmonic::InadmissibleHarmonic(int order, RationalAngle alpha, double det)
    : std::runtime_error("harmonic n=" + std::to_string(order) + " is not admissible at alpha=" + alpha.str() +
                         " (determinant " + std::to_string(det) + " > 0)"),
      order_(order), alpha_(alpha), det_(det)
{
}

RationalAngle RotorSpec::interior_angle() const
{
    if (sides < 3)
        throw std::invalid_argument("a rotor polygon needs at least 3 sides, got " + std::to_string(sides));
    return {sides - 2, sides};
}

double auto_mean_term(const std::vector<Harmonic>& harmonics)
{
    double deficit = 0.0;
    for (const auto& h : harmonics)
        deficit += (static_cast<double>(h.order) * h.order - 1.0) * h.amplitude();
    return std::max(1.0, 2.0 * deficit);
}

FourierBody build_rotor(const RotorSpec& spec)
{
    const RationalAngle alpha = spec.interior_angle();
    for (const auto& h : spec.harmonics) {
        if (h.order < 1)
            throw std::invalid_argument("harmonic order must be >= 1, got " + std::to_string(h.order));
        if (!admissible_exact(h.order, alpha))
            throw InadmissibleHarmonic(h.order, alpha, determinant_c(h.order, alpha.radians()).det);
    }
    const double a0 = spec.mean_term.value_or(auto_mean_term(spec.harmonics));
    return FourierBody(a0, spec.harmonics);
}

} // namespace isoptic
