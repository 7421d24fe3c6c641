#ifndef RAINFADE_RAIN_RATE_HPP
#define RAINFADE_RAIN_RATE_HPP

#include <span>
#include <vector>

namespace rainfade {

/// Long-term rainfall climate feeding the Rice-Holmberg distribution.
///
/// `annual_depth_mm` is the mean annual rainfall depth M and
/// `thunderstorm_ratio` the convective fraction beta of that depth.
struct RainClimate {
    double annual_depth_mm = 0.0;
    double thunderstorm_ratio = 0.0;

    RainClimate() = default;
    /// Throws DomainError unless M >= 0 and 0 <= beta <= 1.
    RainClimate(double annual_depth_mm, double thunderstorm_ratio);
};

/// Percentage of an average year, in (0, 100].
class ExceedancePercent {
public:
    /// Throws DomainError outside (0, 100].
    explicit ExceedancePercent(double percent);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Point rain rate in mm/h at 1-minute integration time.
class RainRate {
public:
    /// Throws DomainError when negative or not finite.
    explicit RainRate(double mm_per_hour);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Hours in an average year, leap days included.
inline constexpr double kHoursPerYear = 8766.0;

/// Bracket searched when inverting the distribution, mm/h.
inline constexpr double kMaxRainRate = 1000.0;

/// Default absolute bisection tolerance on the rain rate, mm/h.
inline constexpr double kDefaultRateTolerance = 1e-10;

/// Percentage of an average year during which `rate` is exceeded.
///
/// Rice-Holmberg: hours per year
///   T(R) = M [0.03 beta e^(-0.03R) + 0.2 (1 - beta)(e^(-0.258R) + 1.86 e^(-1.63R))]
/// converted to percent of kHoursPerYear. Zero for M = 0.
double exceedance_percent(const RainClimate& climate, RainRate rate);

/// Rain rate exceeded for `p` percent of an average year.
///
/// Bisection on [0, kMaxRainRate]. Throws NoSolution when M = 0 or when
/// `p` is larger than the percentage of time it rains at all.
RainRate rate_at_exceedance(const RainClimate& climate, ExceedancePercent p,
                            double tolerance = kDefaultRateTolerance);

struct CdfPoint {
    double percent;
    double rate_mm_h;
};

/// Pointwise rate_at_exceedance over `percents`, in input order.
std::vector<CdfPoint> cdf_curve(const RainClimate& climate,
                                std::span<const double> percents);

}  // namespace rainfade

#endif  // RAINFADE_RAIN_RATE_HPP
