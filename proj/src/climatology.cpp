#include "rainfade/climatology.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "rainfade/errors.hpp"

namespace rainfade {

namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& out)
{
    if (text.empty()) {
        return false;
    }
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

void RainfallDataset::add(RainfallRecord record)
{
    if (record.month < 1 || record.month > 12) {
        throw DomainError("month must be 1..12, got " + std::to_string(record.month));
    }
    if (!std::isfinite(record.depth_mm) || record.depth_mm < 0.0) {
        throw DomainError("rainfall depth must be finite and >= 0 mm");
    }
    auto& months = index_[record.region][record.year];
    if (months.contains(record.month)) {
        throw DuplicateKey("duplicate record for (" + record.region + ", " + std::to_string(record.year) + ", "
                           + std::to_string(record.month) + ")");
    }
    months.emplace(record.month, record.depth_mm);
    records_.push_back(std::move(record));
}

bool RainfallDataset::has_region(std::string_view region) const
{
    return index_.find(region) != index_.end();
}

std::vector<std::string> RainfallDataset::regions() const
{
    std::vector<std::string> out;
    out.reserve(index_.size());
    for (const auto& [name, years] : index_) {
        out.push_back(name);
    }
    return out;
}

const RainfallDataset::YearTable& RainfallDataset::years_of(std::string_view region) const
{
    const auto it = index_.find(region);
    if (it == index_.end()) {
        throw UnknownRegion("unknown region '" + std::string(region) + "'");
    }
    return it->second;
}

double RainfallDataset::annual_mean_depth(std::string_view region) const
{
    const YearTable& years = years_of(region);
    double total = 0.0;
    int complete = 0;
    for (const auto& [year, months] : years) {
        if (months.size() != 12) {
            continue;
        }
        double sum = 0.0;
        for (const auto& [month, depth] : months) {
            sum += depth;
        }
        total += sum;
        ++complete;
    }
    if (complete == 0) {
        throw NoCompleteYears("region '" + std::string(region) + "' has no year with all 12 months");
    }
    return total / complete;
}

double RainfallDataset::monthly_mean_depth(std::string_view region, int month) const
{
    if (month < 1 || month > 12) {
        throw DomainError("month must be 1..12, got " + std::to_string(month));
    }
    const YearTable& years = years_of(region);
    double sum = 0.0;
    int count = 0;
    for (const auto& [year, months] : years) {
        const auto it = months.find(month);
        if (it != months.end()) {
            sum += it->second;
            ++count;
        }
    }
    if (count == 0) {
        throw NoData("no rainfall data for " + std::string(month_name(month)) + " in region '"
                         + std::string(region) + "'",
                     month);
    }
    return sum / count;
}

RainfallDataset load_rainfall_csv(std::istream& in)
{
    RainfallDataset ds;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!saw_header) {
            if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
                line.erase(0, 3);
            }
            if (line != kRainfallCsvHeader) {
                throw ParseError(line_no, "expected header '" + std::string(kRainfallCsvHeader) + "'");
            }
            saw_header = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 4) {
            throw ParseError(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
        }
        RainfallRecord rec;
        rec.region = std::string(fields[0]);
        if (rec.region.empty()) {
            throw ParseError(line_no, "empty region");
        }
        if (!parse_number(fields[1], rec.year)) {
            throw ParseError(line_no, "invalid year '" + std::string(fields[1]) + "'");
        }
        if (!parse_number(fields[2], rec.month) || rec.month < 1 || rec.month > 12) {
            throw ParseError(line_no, "month must be an integer 1..12, got '" + std::string(fields[2]) + "'");
        }
        if (!parse_number(fields[3], rec.depth_mm) || !std::isfinite(rec.depth_mm) || rec.depth_mm < 0.0) {
            throw ParseError(line_no, "depth_mm must be a number >= 0, got '" + std::string(fields[3]) + "'");
        }
        try {
            ds.add(std::move(rec));
        } catch (const DuplicateKey& e) {
            throw DuplicateKey("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!saw_header) {
        throw ParseError(1, "missing header '" + std::string(kRainfallCsvHeader) + "'");
    }
    return ds;
}

std::string_view month_name(int month)
{
    static constexpr std::array<std::string_view, 12> names = {
        "January", "February", "March",     "April",   "May",      "June",
        "July",    "August",   "September", "October", "November", "December"};
    if (month < 1 || month > 12) {
        throw DomainError("month must be 1..12, got " + std::to_string(month));
    }
    return names[static_cast<std::size_t>(month - 1)];
}

const std::vector<RegionProfile>& builtin_regions()
{
    static const std::vector<RegionProfile> regions = {
        {"Dhaka", 23.42, 90.24, 4e-3, RainClimate(2124.0, 0.5)},
        {"Chittagong", 22.19, 91.5, 7e-3, RainClimate(2887.0, 0.5)},
        {"Rajshahi", 24.22, 88.36, 31e-3, RainClimate(1545.0, 0.5)},
        {"Sylhet", 24.53, 91.52, 9e-3, RainClimate(4101.0, 0.5)},
    };
    return regions;
}

const RegionProfile& find_region(std::string_view name)
{
    for (const auto& region : builtin_regions()) {
        if (region.name == name) {
            return region;
        }
    }
    throw UnknownRegion("unknown region '" + std::string(name) + "' (built-in: Dhaka, Chittagong, Rajshahi, Sylhet)");
}

}  // namespace rainfade
