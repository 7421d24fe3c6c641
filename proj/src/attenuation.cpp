#include "rainfade/attenuation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rainfade/errors.hpp"
#include "rainfade/rain_rate.hpp"

namespace rainfade {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Latitude above which the vertical adjustment and percentage scaling
// drop their latitude terms, degrees.
constexpr double kLatitudeBreakDeg = 36.0;

// Outage percentages are snapped to a 1e-9 % grid so that 100 - 99.99 is
// exactly 0.01.
constexpr double kPercentScale = 1e9;

void require_frequency(double f)
{
    if (!(f >= kMinFrequencyGhz && f <= kMaxFrequencyGhz)) {
        throw OutOfRange("frequency " + std::to_string(f) + " GHz outside the supported 1-55 GHz range");
    }
}

}  // namespace

LinkConfig::LinkConfig(double f, Polarization pol, double sat_lon)
    : frequency_ghz(f), polarization(pol), satellite_longitude_deg(sat_lon)
{
    require_frequency(f);
    if (!(std::abs(sat_lon) <= 180.0)) {
        throw DomainError("satellite longitude must lie in [-180, 180], got " + std::to_string(sat_lon));
    }
}

double horizontal_reduction_factor(double l_g_km, double gamma_r_db_km, double frequency_ghz)
{
    if (!(l_g_km >= 0.0 && gamma_r_db_km >= 0.0 && frequency_ghz > 0.0)) {
        throw DomainError("horizontal reduction factor needs L_G >= 0, gamma_R >= 0, f > 0");
    }
    const double denom = 1.0 + 0.78 * std::sqrt(l_g_km * gamma_r_db_km / frequency_ghz)
                         - 0.38 * (1.0 - std::exp(-2.0 * l_g_km));
    return 1.0 / denom;
}

VerticalAdjustment vertical_adjustment_factor(double elevation_deg, double latitude_deg, double h_r_km,
                                              double h_s_km, double l_g_km, double r001, double gamma_r_db_km,
                                              double frequency_ghz)
{
    VerticalAdjustment out;
    const double depth = h_r_km - h_s_km;

    out.zeta_deg = std::atan2(depth, l_g_km * r001) * kRadToDeg;
    if (out.zeta_deg > elevation_deg) {
        out.l_r = l_g_km * r001 / cos_deg(elevation_deg);
    } else {
        out.l_r = depth / sin_deg(elevation_deg);
    }

    const double abs_lat = std::abs(latitude_deg);
    out.chi_deg = abs_lat < kLatitudeBreakDeg ? kLatitudeBreakDeg - abs_lat : 0.0;

    const double f2 = frequency_ghz * frequency_ghz;
    const double growth = 31.0 * (1.0 - std::exp(-(elevation_deg / (1.0 + out.chi_deg))));
    const double term = growth * std::sqrt(out.l_r * gamma_r_db_km) / f2 - 0.45;
    out.v001 = 1.0 / (1.0 + std::sqrt(sin_deg(elevation_deg)) * term);
    return out;
}

AttenuationBreakdown attenuation_001(const StationSite& site, double elevation_deg, double freezing_height_km,
                                     double rain_rate_001, double frequency_ghz, Polarization pol,
                                     const CoefficientTable& table)
{
    require_frequency(frequency_ghz);
    if (!(rain_rate_001 >= 0.0) || !std::isfinite(rain_rate_001)) {
        throw DomainError("R0.01 must be finite and >= 0 mm/h, got " + std::to_string(rain_rate_001));
    }

    AttenuationBreakdown b;
    b.elevation_deg = elevation_deg;
    b.rain_rate_001 = rain_rate_001;
    b.p = kReferencePercent;

    const auto coeffs = table.coefficients_at(frequency_ghz, pol, elevation_deg);
    b.k = coeffs.k;
    b.alpha = coeffs.alpha;

    b.h_r = rain_height(freezing_height_km);
    const auto slant = slant_path_length(b.h_r, site.altitude_km, elevation_deg);
    if (!slant) {
        b.zero_path = true;
        return b;
    }
    b.l_s = *slant;
    b.l_g = horizontal_projection(b.l_s, elevation_deg);

    if (rain_rate_001 == 0.0) {
        return b;
    }

    b.gamma_r = specific_attenuation(coeffs, rain_rate_001);
    b.r001 = horizontal_reduction_factor(b.l_g, b.gamma_r, frequency_ghz);

    const auto vertical = vertical_adjustment_factor(elevation_deg, site.latitude_deg, b.h_r, site.altitude_km,
                                                     b.l_g, b.r001, b.gamma_r, frequency_ghz);
    b.zeta_deg = vertical.zeta_deg;
    b.l_r = vertical.l_r;
    b.chi_deg = vertical.chi_deg;
    b.v001 = vertical.v001;

    b.l_e = b.l_r * b.v001;
    b.a001 = b.gamma_r * b.l_e;
    b.a_p = b.a001;
    b.beta_adj = percentage_beta(kReferencePercent, site.latitude_deg, elevation_deg);
    return b;
}

double percentage_beta(double percent, double latitude_deg, double elevation_deg)
{
    const double abs_lat = std::abs(latitude_deg);
    if (percent >= 1.0 || abs_lat >= kLatitudeBreakDeg) {
        return 0.0;
    }
    const double base = -0.005 * (abs_lat - kLatitudeBreakDeg);
    if (elevation_deg >= 25.0) {
        return base;
    }
    return base + 1.8 - 4.25 * sin_deg(elevation_deg);
}

double scale_to_percentage(double a001_db, double percent, double latitude_deg, double elevation_deg)
{
    if (!(percent >= kMinPercent && percent <= kMaxPercent)) {
        throw DomainError("percentage " + std::to_string(percent) + " outside the valid range [0.001, 5] %");
    }
    if (!(a001_db >= 0.0)) {
        throw DomainError("A0.01 must be >= 0 dB");
    }
    if (a001_db == 0.0) {
        return 0.0;
    }
    if (percent == kReferencePercent) {
        return a001_db;
    }
    const double beta = percentage_beta(percent, latitude_deg, elevation_deg);
    const double exponent = -(0.655 + 0.033 * std::log(percent) - 0.045 * std::log(a001_db)
                              - beta * (1.0 - percent) * sin_deg(elevation_deg));
    return a001_db * std::pow(percent / kReferencePercent, exponent);
}

double reference_rain_rate(const RainClimate& climate)
{
    if (exceedance_percent(climate, RainRate(0.0)) <= kReferencePercent) {
        return 0.0;
    }
    return rate_at_exceedance(climate, ExceedancePercent(kReferencePercent)).value();
}

AttenuationBreakdown predict(const RegionProfile& profile, const LinkConfig& link, double percent,
                             const PredictionSetup& setup)
{
    if (!(percent >= kMinPercent && percent <= kMaxPercent)) {
        throw DomainError("percentage " + std::to_string(percent) + " outside the valid range [0.001, 5] %");
    }
    require_frequency(link.frequency_ghz);

    const StationSite site(profile.latitude_deg, profile.longitude_deg, profile.altitude_km);
    const double elevation = elevation_angle(site, link.satellite_longitude_deg);
    const double rate = setup.rain_rate_override ? *setup.rain_rate_override : reference_rain_rate(profile.climate);

    AttenuationBreakdown b = attenuation_001(site, elevation, setup.freezing_height_km, rate, link.frequency_ghz,
                                             link.polarization, *setup.table);
    b.p = percent;
    if (b.a001 > 0.0) {
        b.beta_adj = percentage_beta(percent, site.latitude_deg, elevation);
        b.a_p = scale_to_percentage(b.a001, percent, site.latitude_deg, elevation);
    } else {
        b.a_p = 0.0;
    }
    return b;
}

std::vector<CurvePoint> exceedance_curve(const RegionProfile& profile, const LinkConfig& link,
                                         std::span<const double> percents, const PredictionSetup& setup)
{
    std::vector<CurvePoint> out;
    out.reserve(percents.size());
    for (double p : percents) {
        out.push_back({p, predict(profile, link, p, setup).a_p});
    }
    return out;
}

std::vector<double> log_spaced_percents(double pmin, double pmax, int count)
{
    if (!(pmin >= kMinPercent && pmax <= kMaxPercent && pmin <= pmax)) {
        throw DomainError("percentage range must satisfy 0.001 <= pmin <= pmax <= 5");
    }
    if (count < 1) {
        throw DomainError("point count must be >= 1");
    }
    if (count == 1) {
        return {pmin};
    }
    if (pmin == pmax) {
        throw DomainError("pmin must be below pmax for more than one point");
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    const double lo = std::log10(pmin);
    const double step = (std::log10(pmax) - lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = std::pow(10.0, lo + step * i);
    }
    out.front() = pmin;
    out.back() = pmax;
    return out;
}

double outage_percent(double availability_percent)
{
    if (!(availability_percent >= 100.0 - kMaxPercent && availability_percent < 100.0)) {
        throw DomainError("availability " + std::to_string(availability_percent)
                          + " % outside the valid range [95, 99.999] %");
    }
    const double p = std::round((100.0 - availability_percent) * kPercentScale) / kPercentScale;
    if (p < kMinPercent) {
        throw DomainError("availability " + std::to_string(availability_percent)
                          + " % implies an outage below 0.001 %");
    }
    return p;
}

double fade_margin(const RegionProfile& profile, const LinkConfig& link, double availability_percent,
                   const PredictionSetup& setup)
{
    return predict(profile, link, outage_percent(availability_percent), setup).a_p;
}

std::array<double, 12> monthly_margins(const RainfallDataset& ds, std::string_view region,
                                       const RegionProfile& profile, const LinkConfig& link,
                                       double availability_percent, const PredictionSetup& setup)
{
    const double p = outage_percent(availability_percent);
    std::array<double, 12> depths{};
    for (int m = 1; m <= 12; ++m) {
        depths[static_cast<std::size_t>(m - 1)] = ds.monthly_mean_depth(region, m);
    }

    std::array<double, 12> margins{};
    for (std::size_t i = 0; i < 12; ++i) {
        RegionProfile month_profile = profile;
        month_profile.climate = RainClimate(12.0 * depths[i], profile.climate.thunderstorm_ratio);
        margins[i] = predict(month_profile, link, p, setup).a_p;
    }
    return margins;
}

}  // namespace rainfade
