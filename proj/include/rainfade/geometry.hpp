#ifndef RAINFADE_GEOMETRY_HPP
#define RAINFADE_GEOMETRY_HPP

#include <optional>

namespace rainfade {

/// Earth-station location. Longitude is east-positive, altitude above mean
/// sea level.
struct StationSite {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_km = 0.0;

    StationSite() = default;
    /// Throws DomainError unless |lat| <= 90, |lon| <= 180, altitude >= 0.
    StationSite(double latitude_deg, double longitude_deg, double altitude_km);
};

struct PathGeometry {
    double rain_height_km = 0.0;
    double slant_length_km = 0.0;
    double horizontal_projection_km = 0.0;
    double elevation_deg = 0.0;
};

namespace constants {
/// Effective earth radius for the low-elevation slant path, km.
inline constexpr double kEffectiveEarthRadiusKm = 8500.0;
/// WGS-84 equatorial radius, km.
inline constexpr double kEquatorialRadiusKm = 6378.137;
/// Geostationary orbit radius, km.
inline constexpr double kGeostationaryRadiusKm = 42164.17;
/// Rain height above the 0 degC isotherm, km.
inline constexpr double kRainHeightOffsetKm = 0.36;
/// Below this elevation the curved-earth slant path is used, degrees.
inline constexpr double kLowElevationDeg = 5.0;
}  // namespace constants

double sin_deg(double degrees);
/// cos in degrees; exactly 0 at +-90.
double cos_deg(double degrees);

/// Elevation angle of a geostationary satellite seen from `site`, degrees.
///
/// Spherical-earth look-angle geometry. Throws NotVisible when the
/// satellite is at or below the horizon.
double elevation_angle(const StationSite& site, double satellite_longitude_deg);

/// h_R = h_o + 0.36 km. Throws DomainError for negative `freezing_height_km`.
double rain_height(double freezing_height_km);

/// Slant-path length below the rain height, km.
///
/// Returns std::nullopt when the station is at or above the rain height
/// (zero attenuation for every percentage). Uses the flat-earth form at
/// elevations of 5 degrees and above and the curved-earth form below.
std::optional<double> slant_path_length(double rain_height_km, double station_altitude_km,
                                        double elevation_deg);

/// L_G = L_s cos(theta), km.
double horizontal_projection(double slant_length_km, double elevation_deg);

/// Rain height, slant path and projection in one pass; std::nullopt for a
/// station at or above the rain height.
std::optional<PathGeometry> path_geometry(double freezing_height_km, double station_altitude_km,
                                          double elevation_deg);

}  // namespace rainfade

#endif  // RAINFADE_GEOMETRY_HPP
