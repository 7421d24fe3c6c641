#ifndef RAINFADE_CLIMATOLOGY_HPP
#define RAINFADE_CLIMATOLOGY_HPP

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rainfade/rain_rate.hpp"

namespace rainfade {

struct RainfallRecord {
    std::string region;
    int year = 0;
    int month = 0;  // 1..12
    double depth_mm = 0.0;
};

/// Monthly rainfall depths keyed by (region, year, month).
///
/// Region identifiers are exact, case-sensitive strings. The dataset is
/// immutable once loaded; all queries are const.
class RainfallDataset {
public:
    RainfallDataset() = default;

    /// Throws DomainError on an out-of-range month or negative depth and
    /// DuplicateKey when the (region, year, month) key already exists.
    void add(RainfallRecord record);

    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }
    const std::vector<RainfallRecord>& records() const noexcept { return records_; }

    bool has_region(std::string_view region) const;
    /// Region identifiers in lexicographic order.
    std::vector<std::string> regions() const;

    /// Mean over complete (12-month) years of the annual total.
    double annual_mean_depth(std::string_view region) const;

    /// Mean depth for `month` over every year that has it.
    double monthly_mean_depth(std::string_view region, int month) const;

private:
    // year -> month -> depth_mm
    using YearTable = std::map<int, std::map<int, double>>;

    const YearTable& years_of(std::string_view region) const;

    std::vector<RainfallRecord> records_;
    std::map<std::string, YearTable, std::less<>> index_;
};

inline constexpr std::string_view kRainfallCsvHeader = "region,year,month,depth_mm";

/// Parses `region,year,month,depth_mm` CSV. The first line must be the
/// exact header; blank lines are ignored.
///
/// Throws ParseError (with the 1-based line number) for malformed rows and
/// DuplicateKey for repeated (region, year, month) keys.
RainfallDataset load_rainfall_csv(std::istream& in);

/// English month name for 1..12.
std::string_view month_name(int month);

struct RegionProfile {
    std::string name;
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_km = 0.0;
    RainClimate climate;
};

/// Dhaka, Chittagong, Rajshahi and Sylhet with their station coordinates,
/// altitudes and Rice-Holmberg parameters.
const std::vector<RegionProfile>& builtin_regions();

/// Throws UnknownRegion when `name` is not a built-in region.
const RegionProfile& find_region(std::string_view name);

}  // namespace rainfade

#endif  // RAINFADE_CLIMATOLOGY_HPP
