#ifndef RAINFADE_ATTENUATION_HPP
#define RAINFADE_ATTENUATION_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rainfade/climatology.hpp"
#include "rainfade/coefficients.hpp"
#include "rainfade/geometry.hpp"

namespace rainfade {

struct LinkConfig {
    double frequency_ghz = 40.0;
    Polarization polarization = Polarization::circular();
    double satellite_longitude_deg = 78.5;

    LinkConfig() = default;
    /// Throws OutOfRange unless 1 <= f <= 55 GHz.
    LinkConfig(double frequency_ghz, Polarization polarization, double satellite_longitude_deg);
};

inline constexpr double kDefaultFreezingHeightKm = 4.5;
inline constexpr double kReferencePercent = 0.01;
inline constexpr double kMinPercent = 0.001;
inline constexpr double kMaxPercent = 5.0;

/// Every intermediate of one earth-space rain attenuation prediction.
///
/// When the station sits at or above the rain height, or the 0.01 % rain
/// rate is zero, `a001` and `a_p` are zero and the fields downstream of the
/// exit are left at zero.
struct AttenuationBreakdown {
    double elevation_deg = 0.0;
    double rain_rate_001 = 0.0;  // mm/h
    double k = 0.0;
    double alpha = 0.0;

    double h_r = 0.0;      // rain height, km
    double l_s = 0.0;      // slant path below rain height, km
    double l_g = 0.0;      // horizontal projection, km
    double gamma_r = 0.0;  // dB/km
    double r001 = 0.0;
    double zeta_deg = 0.0;
    double l_r = 0.0;  // km
    double chi_deg = 0.0;
    double v001 = 0.0;
    double l_e = 0.0;   // effective path length, km
    double a001 = 0.0;  // dB

    double p = kReferencePercent;
    double beta_adj = 0.0;
    double a_p = 0.0;  // dB

    bool zero_path = false;  // station at or above the rain height
};

struct VerticalAdjustment {
    double v001 = 0.0;
    double l_r = 0.0;
    double zeta_deg = 0.0;
    double chi_deg = 0.0;
};

/// r_0.01 = 1 / (1 + 0.78 sqrt(L_G gamma_R / f) - 0.38 (1 - e^(-2 L_G))).
double horizontal_reduction_factor(double l_g_km, double gamma_r_db_km, double frequency_ghz);

/// v_0.01 and the adjusted rain path length L_R.
VerticalAdjustment vertical_adjustment_factor(double elevation_deg, double latitude_deg, double h_r_km,
                                              double h_s_km, double l_g_km, double r001, double gamma_r_db_km,
                                              double frequency_ghz);

/// Attenuation exceeded for 0.01 % of an average year, with intermediates.
/// The returned breakdown has p = 0.01 and a_p = a001.
AttenuationBreakdown attenuation_001(const StationSite& site, double elevation_deg, double freezing_height_km,
                                     double rain_rate_001, double frequency_ghz, Polarization pol,
                                     const CoefficientTable& table = CoefficientTable::bundled());

/// Exponent adjustment term for scaling A_0.01 to other percentages.
double percentage_beta(double percent, double latitude_deg, double elevation_deg);

/// A_p from A_0.01 for 0.001 <= p <= 5 percent. Throws DomainError outside.
double scale_to_percentage(double a001_db, double percent, double latitude_deg, double elevation_deg);

/// Inputs shared by the end-to-end predictions.
struct PredictionSetup {
    double freezing_height_km = kDefaultFreezingHeightKm;
    /// Replaces the Rice-Holmberg R_0.01 when set (e.g. a rain-map value).
    std::optional<double> rain_rate_override;
    const CoefficientTable* table = &CoefficientTable::bundled();
};

/// R_0.01 of `climate`; zero when it rains no more than 0.01 % of the year.
double reference_rain_rate(const RainClimate& climate);

/// Full prediction at `percent` for a region and link.
AttenuationBreakdown predict(const RegionProfile& profile, const LinkConfig& link, double percent,
                             const PredictionSetup& setup = {});

struct CurvePoint {
    double percent;
    double attenuation_db;
};

/// `predict` at each percentage, in input order.
std::vector<CurvePoint> exceedance_curve(const RegionProfile& profile, const LinkConfig& link,
                                         std::span<const double> percents, const PredictionSetup& setup = {});

/// `count` log-spaced percentages from `pmin` to `pmax` inclusive.
std::vector<double> log_spaced_percents(double pmin, double pmax, int count);

/// Margin needed for `availability_percent` (95 <= a < 100, p >= 0.001).
double fade_margin(const RegionProfile& profile, const LinkConfig& link, double availability_percent,
                   const PredictionSetup& setup = {});

/// Outage percentage 100 - availability; throws DomainError when it falls
/// outside [0.001, 5].
double outage_percent(double availability_percent);

/// Fade margin per calendar month, January first.
///
/// Each month is treated as a year raining at that month's mean depth:
/// M_eq = 12 x monthly mean, keeping the profile's thunderstorm ratio.
/// Throws NoData naming the first month without records.
std::array<double, 12> monthly_margins(const RainfallDataset& ds, std::string_view region,
                                       const RegionProfile& profile, const LinkConfig& link,
                                       double availability_percent, const PredictionSetup& setup = {});

}  // namespace rainfade

#endif  // RAINFADE_ATTENUATION_HPP
