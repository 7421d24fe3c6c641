#include "rainfade/rain_rate.hpp"

#include <cmath>
#include <string>

#include "rainfade/errors.hpp"

namespace rainfade {

RainClimate::RainClimate(double depth, double ratio)
    : annual_depth_mm(depth), thunderstorm_ratio(ratio)
{
    if (!std::isfinite(depth) || depth < 0.0) {
        throw DomainError("annual rainfall depth must be >= 0 mm, got " + std::to_string(depth));
    }
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw DomainError("thunderstorm ratio must lie in [0, 1], got " + std::to_string(ratio));
    }
}

ExceedancePercent::ExceedancePercent(double percent) : value_(percent)
{
    if (!(percent > 0.0 && percent <= 100.0)) {
        throw DomainError("exceedance percentage must lie in (0, 100], got " + std::to_string(percent));
    }
}

RainRate::RainRate(double mm_per_hour) : value_(mm_per_hour)
{
    if (!std::isfinite(mm_per_hour) || mm_per_hour < 0.0) {
        throw DomainError("rain rate must be finite and >= 0 mm/h, got " + std::to_string(mm_per_hour));
    }
}

double exceedance_percent(const RainClimate& climate, RainRate rate)
{
    const double m = climate.annual_depth_mm;
    const double beta = climate.thunderstorm_ratio;
    const double r = rate.value();

    const double convective = 0.03 * beta * std::exp(-0.03 * r);
    const double stratiform = 0.2 * (1.0 - beta) * (std::exp(-0.258 * r) + 1.86 * std::exp(-1.63 * r));
    const double hours = m * (convective + stratiform);
    return 100.0 * hours / kHoursPerYear;
}

RainRate rate_at_exceedance(const RainClimate& climate, ExceedancePercent p, double tolerance)
{
    const double target = p.value();
    if (climate.annual_depth_mm <= 0.0) {
        throw NoSolution("no rainfall in climate (M = 0); no rate is exceeded for "
                             + std::to_string(target) + " %",
                         target);
    }
    const double raining = exceedance_percent(climate, RainRate(0.0));
    if (target > raining) {
        throw NoSolution("requested " + std::to_string(target) + " % exceeds the " + std::to_string(raining)
                             + " % of the year with any rain",
                         target);
    }

    // p(R) is strictly decreasing, so the root stays bracketed in [lo, hi].
    double lo = 0.0;
    double hi = kMaxRainRate;
    if (exceedance_percent(climate, RainRate(hi)) > target) {
        throw NoSolution("rate for " + std::to_string(target) + " % lies above the search bracket", target);
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (exceedance_percent(climate, RainRate(mid)) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RainRate(0.5 * (lo + hi));
}

std::vector<CdfPoint> cdf_curve(const RainClimate& climate, std::span<const double> percents)
{
    std::vector<CdfPoint> points;
    points.reserve(percents.size());
    for (double p : percents) {
        try {
            points.push_back({p, rate_at_exceedance(climate, ExceedancePercent(p)).value()});
        } catch (const NoSolution& e) {
            throw NoSolution("at p = " + std::to_string(p) + " %: " + e.what(), p);
        } catch (const DomainError& e) {
            throw NoSolution("at p = " + std::to_string(p) + " %: " + e.what(), p);
        }
    }
    return points;
}

}  // namespace rainfade
