#ifndef RAINFADE_COEFFICIENTS_HPP
#define RAINFADE_COEFFICIENTS_HPP

#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainfade {

/// One frequency row of the rain specific-attenuation regression table.
struct CoefficientRow {
    double frequency_ghz = 0.0;
    double k_h = 0.0;
    double alpha_h = 0.0;
    double k_v = 0.0;
    double alpha_v = 0.0;
};

/// Polarization of the link relative to the local horizontal.
class Polarization {
public:
    enum class Kind { Horizontal, Vertical, Circular, Tilted };

    static Polarization horizontal() { return Polarization(Kind::Horizontal, 0.0); }
    static Polarization vertical() { return Polarization(Kind::Vertical, 90.0); }
    static Polarization circular() { return Polarization(Kind::Circular, 45.0); }
    /// Linear polarization at `tau_deg` from horizontal; throws DomainError
    /// outside [0, 90].
    static Polarization tilted(double tau_deg);

    Kind kind() const noexcept { return kind_; }
    double tilt_deg() const noexcept { return tilt_deg_; }

    /// "horizontal", "vertical", "circular" or "tilt:<deg>".
    std::string to_string() const;

private:
    Polarization(Kind kind, double tilt) : kind_(kind), tilt_deg_(tilt) {}

    Kind kind_;
    double tilt_deg_;
};

/// Parses "horizontal"/"h", "vertical"/"v", "circular"/"c" or a tilt angle
/// in degrees. Throws DomainError otherwise.
Polarization parse_polarization(std::string_view text);

struct RainCoefficients {
    double k = 0.0;
    double alpha = 0.0;
};

inline constexpr double kMinFrequencyGhz = 1.0;
inline constexpr double kMaxFrequencyGhz = 55.0;

/// Frequency-sorted (k, alpha) table with log-frequency interpolation.
class CoefficientTable {
public:
    /// Throws DomainError when rows are empty, unsorted, duplicated or carry
    /// non-positive coefficients.
    explicit CoefficientTable(std::vector<CoefficientRow> rows);

    /// CSV `frequency_ghz,k_h,alpha_h,k_v,alpha_v`. Throws ParseError.
    static CoefficientTable from_csv(std::istream& in);

    /// ITU-R P.838-3 rows from 1 to 55 GHz compiled into the library.
    static const CoefficientTable& bundled();

    std::span<const CoefficientRow> rows() const noexcept { return rows_; }
    double min_frequency() const noexcept { return rows_.front().frequency_ghz; }
    double max_frequency() const noexcept { return rows_.back().frequency_ghz; }

    /// Per-polarization row at `frequency_ghz`: exact when a row exists,
    /// else log k and alpha interpolated linearly in log f between the
    /// bracketing rows. Throws OutOfRange outside [1, 55] GHz or the table.
    CoefficientRow row_at(double frequency_ghz) const;

    /// (k, alpha) for `pol` on a path at `elevation_deg`.
    ///
    /// Horizontal and vertical return the table values. Circular and tilted
    /// polarizations combine them:
    ///   k     = [k_H + k_V + (k_H - k_V) cos^2(theta) cos(2 tau)] / 2
    ///   alpha = [k_H a_H + k_V a_V + (k_H a_H - k_V a_V) cos^2(theta) cos(2 tau)] / (2k)
    RainCoefficients coefficients_at(double frequency_ghz, Polarization pol, double elevation_deg) const;

private:
    std::vector<CoefficientRow> rows_;
};

/// gamma_R = k R^alpha, dB/km.
double specific_attenuation(RainCoefficients coeffs, double rain_rate_mm_h);

}  // namespace rainfade

#endif  // RAINFADE_COEFFICIENTS_HPP
