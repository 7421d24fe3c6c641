#include "rainfade/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rainfade/errors.hpp"

namespace rainfade {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

void require_elevation(double elevation_deg)
{
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
        throw DomainError("elevation angle must lie in (0, 90] degrees, got " + std::to_string(elevation_deg));
    }
}

}  // namespace

StationSite::StationSite(double lat, double lon, double alt)
    : latitude_deg(lat), longitude_deg(lon), altitude_km(alt)
{
    if (!(std::abs(lat) <= 90.0)) {
        throw DomainError("latitude must lie in [-90, 90], got " + std::to_string(lat));
    }
    if (!(std::abs(lon) <= 180.0)) {
        throw DomainError("longitude must lie in [-180, 180], got " + std::to_string(lon));
    }
    if (!(alt >= 0.0) || !std::isfinite(alt)) {
        throw DomainError("station altitude must be >= 0 km, got " + std::to_string(alt));
    }
}

double sin_deg(double degrees)
{
    return std::sin(degrees * kDegToRad);
}

double cos_deg(double degrees)
{
    if (std::abs(degrees) == 90.0) {
        return 0.0;
    }
    return std::cos(degrees * kDegToRad);
}

double elevation_angle(const StationSite& site, double satellite_longitude_deg)
{
    double delta = site.longitude_deg - satellite_longitude_deg;
    delta = std::remainder(delta, 360.0);

    const double cos_psi = cos_deg(site.latitude_deg) * std::cos(delta * kDegToRad);
    const double sin_psi = std::sqrt(std::max(0.0, 1.0 - cos_psi * cos_psi));
    if (sin_psi == 0.0) {
        return 90.0;
    }
    constexpr double ratio = constants::kEquatorialRadiusKm / constants::kGeostationaryRadiusKm;
    const double elevation = std::atan((cos_psi - ratio) / sin_psi) * kRadToDeg;
    if (elevation <= 0.0) {
        throw NotVisible("geostationary satellite at " + std::to_string(satellite_longitude_deg)
                         + " deg is below the horizon (elevation " + std::to_string(elevation) + " deg)");
    }
    return elevation;
}

double rain_height(double freezing_height_km)
{
    if (!(freezing_height_km >= 0.0) || !std::isfinite(freezing_height_km)) {
        throw DomainError("freezing height must be >= 0 km, got " + std::to_string(freezing_height_km));
    }
    return freezing_height_km + constants::kRainHeightOffsetKm;
}

std::optional<double> slant_path_length(double rain_height_km, double station_altitude_km, double elevation_deg)
{
    require_elevation(elevation_deg);
    const double depth = rain_height_km - station_altitude_km;
    if (depth <= 0.0) {
        return std::nullopt;
    }
    const double s = sin_deg(elevation_deg);
    if (elevation_deg >= constants::kLowElevationDeg) {
        return depth / s;
    }
    return 2.0 * depth / (std::sqrt(s * s + 2.0 * depth / constants::kEffectiveEarthRadiusKm) + s);
}

double horizontal_projection(double slant_length_km, double elevation_deg)
{
    if (!(slant_length_km >= 0.0)) {
        throw DomainError("slant length must be >= 0 km");
    }
    return slant_length_km * cos_deg(elevation_deg);
}

std::optional<PathGeometry> path_geometry(double freezing_height_km, double station_altitude_km, double elevation_deg)
{
    PathGeometry g;
    g.elevation_deg = elevation_deg;
    g.rain_height_km = rain_height(freezing_height_km);
    const auto slant = slant_path_length(g.rain_height_km, station_altitude_km, elevation_deg);
    if (!slant) {
        return std::nullopt;
    }
    g.slant_length_km = *slant;
    g.horizontal_projection_km = horizontal_projection(*slant, elevation_deg);
    return g;
}

}  // namespace rainfade
