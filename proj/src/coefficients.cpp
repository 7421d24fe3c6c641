#include "rainfade/coefficients.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "rainfade/errors.hpp"
#include "rainfade/geometry.hpp"

namespace rainfade {

namespace {

constexpr std::string_view kBundledCsv =
#include "p838_3_coefficients.inc"
    ;

constexpr std::string_view kCoefficientHeader = "frequency_ghz,k_h,alpha_h,k_v,alpha_v";

bool parse_double(std::string_view text, double& out)
{
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

double lerp_log(double f, double f0, double f1, double y0, double y1)
{
    const double t = (std::log(f) - std::log(f0)) / (std::log(f1) - std::log(f0));
    return y0 + t * (y1 - y0);
}

}  // namespace

Polarization Polarization::tilted(double tau_deg)
{
    if (!(tau_deg >= 0.0 && tau_deg <= 90.0)) {
        throw DomainError("polarization tilt must lie in [0, 90] degrees, got " + std::to_string(tau_deg));
    }
    return Polarization(Kind::Tilted, tau_deg);
}

std::string Polarization::to_string() const
{
    switch (kind_) {
    case Kind::Horizontal:
        return "horizontal";
    case Kind::Vertical:
        return "vertical";
    case Kind::Circular:
        return "circular";
    case Kind::Tilted:
        break;
    }
    std::ostringstream os;
    os << "tilt:" << tilt_deg_;
    return os.str();
}

Polarization parse_polarization(std::string_view text)
{
    if (text == "horizontal" || text == "h") {
        return Polarization::horizontal();
    }
    if (text == "vertical" || text == "v") {
        return Polarization::vertical();
    }
    if (text == "circular" || text == "c") {
        return Polarization::circular();
    }
    if (text.starts_with("tilt:")) {
        text.remove_prefix(5);
    }
    double tau = 0.0;
    if (parse_double(text, tau)) {
        return Polarization::tilted(tau);
    }
    throw DomainError("unknown polarization '" + std::string(text)
                      + "' (expected horizontal, vertical, circular or a tilt angle in degrees)");
}

CoefficientTable::CoefficientTable(std::vector<CoefficientRow> rows) : rows_(std::move(rows))
{
    if (rows_.empty()) {
        throw DomainError("coefficient table is empty");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        if (!(r.frequency_ghz > 0.0)) {
            throw DomainError("coefficient row frequency must be positive");
        }
        if (!(r.k_h > 0.0 && r.k_v > 0.0 && r.alpha_h > 0.0 && r.alpha_v > 0.0)) {
            throw DomainError("coefficients at " + std::to_string(r.frequency_ghz) + " GHz must be positive");
        }
        if (i > 0 && !(rows_[i - 1].frequency_ghz < r.frequency_ghz)) {
            throw DomainError("coefficient table must be strictly ascending in frequency");
        }
    }
}

CoefficientTable CoefficientTable::from_csv(std::istream& in)
{
    std::vector<CoefficientRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line_no == 1) {
            if (line != kCoefficientHeader) {
                throw ParseError(1, "expected header '" + std::string(kCoefficientHeader) + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        double values[5];
        std::string_view rest = line;
        for (int i = 0; i < 5; ++i) {
            const auto comma = rest.find(',');
            const bool last = (i == 4);
            if (last != (comma == std::string_view::npos)) {
                throw ParseError(line_no, "expected 5 fields");
            }
            const std::string_view field = last ? rest : rest.substr(0, comma);
            if (!parse_double(field, values[i])) {
                throw ParseError(line_no, "invalid number '" + std::string(field) + "'");
            }
            if (!last) {
                rest.remove_prefix(comma + 1);
            }
        }
        rows.push_back({values[0], values[1], values[2], values[3], values[4]});
    }
    if (line_no == 0) {
        throw ParseError(1, "missing header");
    }
    try {
        return CoefficientTable(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
    }
}

const CoefficientTable& CoefficientTable::bundled()
{
    static const CoefficientTable table = [] {
        std::istringstream in{std::string(kBundledCsv)};
        return from_csv(in);
    }();
    return table;
}

CoefficientRow CoefficientTable::row_at(double f) const
{
    if (!(f >= kMinFrequencyGhz && f <= kMaxFrequencyGhz)) {
        throw OutOfRange("frequency " + std::to_string(f) + " GHz outside the supported 1-55 GHz range");
    }
    if (f < min_frequency() || f > max_frequency()) {
        throw OutOfRange("frequency " + std::to_string(f) + " GHz outside the coefficient table span ["
                         + std::to_string(min_frequency()) + ", " + std::to_string(max_frequency()) + "] GHz");
    }
    const auto upper = std::lower_bound(rows_.begin(), rows_.end(), f,
                                        [](const CoefficientRow& r, double x) { return r.frequency_ghz < x; });
    if (upper->frequency_ghz == f) {
        return *upper;
    }
    const CoefficientRow& lo = *(upper - 1);
    const CoefficientRow& hi = *upper;

    CoefficientRow out;
    out.frequency_ghz = f;
    out.k_h = std::exp(lerp_log(f, lo.frequency_ghz, hi.frequency_ghz, std::log(lo.k_h), std::log(hi.k_h)));
    out.k_v = std::exp(lerp_log(f, lo.frequency_ghz, hi.frequency_ghz, std::log(lo.k_v), std::log(hi.k_v)));
    out.alpha_h = lerp_log(f, lo.frequency_ghz, hi.frequency_ghz, lo.alpha_h, hi.alpha_h);
    out.alpha_v = lerp_log(f, lo.frequency_ghz, hi.frequency_ghz, lo.alpha_v, hi.alpha_v);
    return out;
}

RainCoefficients CoefficientTable::coefficients_at(double f, Polarization pol, double elevation_deg) const
{
    const CoefficientRow row = row_at(f);
    switch (pol.kind()) {
    case Polarization::Kind::Horizontal:
        return {row.k_h, row.alpha_h};
    case Polarization::Kind::Vertical:
        return {row.k_v, row.alpha_v};
    case Polarization::Kind::Circular:
    case Polarization::Kind::Tilted:
        break;
    }

    // cos(2 tau) is exactly zero for circular polarization.
    const double cos2tau = pol.kind() == Polarization::Kind::Circular ? 0.0 : cos_deg(2.0 * pol.tilt_deg());
    const double c = cos_deg(elevation_deg);
    const double weight = c * c * cos2tau;

    const double kh_ah = row.k_h * row.alpha_h;
    const double kv_av = row.k_v * row.alpha_v;
    const double k = (row.k_h + row.k_v + (row.k_h - row.k_v) * weight) / 2.0;
    const double alpha = (kh_ah + kv_av + (kh_ah - kv_av) * weight) / (2.0 * k);
    return {k, alpha};
}

double specific_attenuation(RainCoefficients coeffs, double rain_rate_mm_h)
{
    if (!(rain_rate_mm_h >= 0.0)) {
        throw DomainError("rain rate must be >= 0 mm/h");
    }
    if (!(coeffs.k > 0.0 && coeffs.alpha > 0.0)) {
        throw DomainError("k and alpha must be positive");
    }
    return coeffs.k * std::pow(rain_rate_mm_h, coeffs.alpha);
}

}  // namespace rainfade
