// rainfade: rain attenuation and fade-margin predictions for earth-space
// links, emitted as tables, CSV or JSON for plotting.
//
// Exit codes: 0 success, 1 domain or data error, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "rainfade/attenuation.hpp"
#include "rainfade/climatology.hpp"
#include "rainfade/errors.hpp"
#include "rainfade/rain_rate.hpp"

namespace {

using rainfade::AttenuationBreakdown;
using rainfade::RegionProfile;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s)
{
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "json") {
        return Format::Json;
    }
    return Format::Table;
}

using Cell = std::variant<std::string, double, int>;

std::string fixed4(double v)
{
    if (!std::isfinite(v)) {
        throw rainfade::DomainError("non-finite value in output");
    }
    std::string s = fmt::format("{:.4f}", v);
    if (s == "-0.0000") {
        s = "0.0000";
    }
    return s;
}

std::string cell_text(const Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto* i = std::get_if<int>(&c)) {
        return std::to_string(*i);
    }
    return fixed4(std::get<double>(c));
}

nlohmann::json cell_json(const Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c)) {
        return *s;
    }
    if (const auto* i = std::get_if<int>(&c)) {
        return *i;
    }
    const double v = std::get<double>(c);
    if (!std::isfinite(v)) {
        throw rainfade::DomainError("non-finite value in output");
    }
    double rounded = std::round(v * 1e4) / 1e4;
    if (rounded == 0.0) {
        rounded = 0.0;
    }
    return rounded;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

/// Column-oriented output shared by every command.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    // One record shown as key/value pairs; JSON becomes an object.
    bool single_record = false;

    void print(Format format, std::ostream& os) const
    {
        switch (format) {
        case Format::Csv:
            print_csv(os);
            break;
        case Format::Json:
            print_json(os);
            break;
        case Format::Table:
            if (single_record) {
                print_key_values(os);
            } else {
                print_table(os);
            }
            break;
        }
    }

private:
    void print_csv(std::ostream& os) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << csv_escape(columns[i]);
        }
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << csv_escape(cell_text(row[i]));
            }
            os << '\n';
        }
    }

    void print_json(std::ostream& os) const
    {
        auto record = [&](const std::vector<Cell>& row) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < columns.size(); ++i) {
                obj[columns[i]] = cell_json(row[i]);
            }
            return obj;
        };
        if (single_record && rows.size() == 1) {
            os << record(rows.front()).dump(2) << '\n';
            return;
        }
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            arr.push_back(record(row));
        }
        os << arr.dump(2) << '\n';
    }

    void print_table(std::ostream& os) const
    {
        std::vector<std::size_t> width(columns.size());
        std::vector<std::vector<std::string>> text;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            width[i] = columns[i].size();
        }
        for (const auto& row : rows) {
            auto& t = text.emplace_back();
            for (std::size_t i = 0; i < row.size(); ++i) {
                t.push_back(cell_text(row[i]));
                width[i] = std::max(width[i], t.back().size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << (i ? "  " : "") << fmt::format("{:>{}}", cells[i], width[i]);
            }
            os << '\n';
        };
        line(columns);
        for (const auto& t : text) {
            line(t);
        }
    }

    void print_key_values(std::ostream& os) const
    {
        std::size_t key_width = 0;
        for (const auto& c : columns) {
            key_width = std::max(key_width, c.size());
        }
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                os << fmt::format("{:<{}}  {}", columns[i], key_width, cell_text(row[i])) << '\n';
            }
        }
    }
};

struct LinkOptions {
    double frequency_ghz = 0.0;
    std::string polarization = "circular";
    double satellite_longitude_deg = 78.5;
    double freezing_height_km = rainfade::kDefaultFreezingHeightKm;
    std::optional<double> r001;

    void add_to(CLI::App* cmd, bool frequency_required = true)
    {
        auto* f = cmd->add_option("--f,--frequency", frequency_ghz, "Carrier frequency, GHz (1-55)");
        if (frequency_required) {
            f->required();
        }
        cmd->add_option("--polarization", polarization,
                        "horizontal | vertical | circular | tilt angle in degrees")
            ->capture_default_str();
        cmd->add_option("--sat-lon", satellite_longitude_deg, "Geostationary satellite longitude, deg east")
            ->capture_default_str();
        cmd->add_option("--ho,--freezing-height", freezing_height_km, "0 degC isotherm height, km")
            ->capture_default_str();
        cmd->add_option("--r001", r001, "Override the 0.01 % rain rate, mm/h");
    }

    rainfade::LinkConfig link() const
    {
        return rainfade::LinkConfig(frequency_ghz, rainfade::parse_polarization(polarization),
                                    satellite_longitude_deg);
    }

    rainfade::PredictionSetup setup() const
    {
        rainfade::PredictionSetup s;
        s.freezing_height_km = freezing_height_km;
        s.rain_rate_override = r001;
        return s;
    }
};

void add_format(CLI::App* cmd, std::string& format)
{
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

Report regions_report(double satellite_longitude_deg)
{
    Report r;
    r.columns = {"region",          "latitude_deg",       "longitude_deg", "altitude_km",
                 "annual_depth_mm", "thunderstorm_ratio", "elevation_deg"};
    for (const auto& p : rainfade::builtin_regions()) {
        const rainfade::StationSite site(p.latitude_deg, p.longitude_deg, p.altitude_km);
        r.rows.push_back({p.name, p.latitude_deg, p.longitude_deg, p.altitude_km, p.climate.annual_depth_mm,
                          p.climate.thunderstorm_ratio, rainfade::elevation_angle(site, satellite_longitude_deg)});
    }
    return r;
}

Report breakdown_report(const std::string& region, const LinkOptions& opts, const AttenuationBreakdown& b)
{
    Report r;
    r.single_record = true;
    r.columns = {"region",        "frequency_ghz", "polarization", "satellite_longitude_deg",
                 "freezing_height_km", "elevation_deg", "rain_rate_001_mm_h", "k",
                 "alpha",         "h_r_km",        "l_s_km",       "l_g_km",
                 "gamma_r_db_km", "r001",          "zeta_deg",     "l_r_km",
                 "chi_deg",       "v001",          "l_e_km",       "a001_db",
                 "p_percent",     "beta_adj",      "a_p_db"};
    r.rows.push_back({region,
                      opts.frequency_ghz,
                      rainfade::parse_polarization(opts.polarization).to_string(),
                      opts.satellite_longitude_deg,
                      opts.freezing_height_km,
                      b.elevation_deg,
                      b.rain_rate_001,
                      b.k,
                      b.alpha,
                      b.h_r,
                      b.l_s,
                      b.l_g,
                      b.gamma_r,
                      b.r001,
                      b.zeta_deg,
                      b.l_r,
                      b.chi_deg,
                      b.v001,
                      b.l_e,
                      b.a001,
                      b.p,
                      b.beta_adj,
                      b.a_p});
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rain attenuation and fade-margin prediction for earth-space links"};
    app.require_subcommand(1);

    std::string format = "table";

    // regions
    auto* regions_cmd = app.add_subcommand("regions", "List the built-in regions");
    double regions_sat_lon = 78.5;
    regions_cmd->add_option("--sat-lon", regions_sat_lon, "Satellite longitude for the elevation column")
        ->capture_default_str();
    add_format(regions_cmd, format);

    // rate
    auto* rate_cmd = app.add_subcommand("rate", "Rain rate exceeded for a percentage of the year");
    std::string rate_region;
    std::optional<double> rate_m;
    std::optional<double> rate_beta;
    double rate_p = rainfade::kReferencePercent;
    auto* rate_region_opt = rate_cmd->add_option("--region", rate_region, "Built-in region");
    auto* rate_m_opt = rate_cmd->add_option("--m", rate_m, "Annual rainfall depth M, mm");
    auto* rate_beta_opt = rate_cmd->add_option("--beta", rate_beta, "Thunderstorm ratio");
    rate_cmd->add_option("--p", rate_p, "Exceedance percentage")->capture_default_str();
    rate_region_opt->excludes(rate_m_opt)->excludes(rate_beta_opt);
    rate_m_opt->needs(rate_beta_opt);
    rate_beta_opt->needs(rate_m_opt);
    add_format(rate_cmd, format);

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "Full attenuation breakdown for one percentage");
    std::string predict_region;
    LinkOptions predict_link;
    double predict_p = rainfade::kReferencePercent;
    predict_cmd->add_option("--region", predict_region, "Built-in region")->required();
    predict_link.add_to(predict_cmd);
    predict_cmd->add_option("--p", predict_p, "Exceedance percentage (0.001-5)")->capture_default_str();
    add_format(predict_cmd, format);

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Attenuation exceedance curve");
    std::string curve_region;
    LinkOptions curve_link;
    double curve_pmin = rainfade::kMinPercent;
    double curve_pmax = rainfade::kMaxPercent;
    int curve_points = 25;
    curve_cmd->add_option("--region", curve_region, "Built-in region")->required();
    curve_link.add_to(curve_cmd);
    curve_cmd->add_option("--pmin", curve_pmin, "Smallest percentage")->capture_default_str();
    curve_cmd->add_option("--pmax", curve_pmax, "Largest percentage")->capture_default_str();
    curve_cmd->add_option("--points", curve_points, "Number of log-spaced points")->capture_default_str();
    add_format(curve_cmd, format);

    // margin
    auto* margin_cmd = app.add_subcommand("margin", "Fade margin for an availability target");
    std::string margin_region;
    bool margin_all = false;
    LinkOptions margin_link;
    double margin_availability = 99.99;
    auto* margin_region_opt = margin_cmd->add_option("--region", margin_region, "Built-in region");
    auto* margin_all_opt = margin_cmd->add_flag("--all", margin_all, "Every built-in region");
    margin_region_opt->excludes(margin_all_opt);
    margin_link.add_to(margin_cmd);
    margin_cmd->add_option("--availability", margin_availability, "Availability, percent")->capture_default_str();
    add_format(margin_cmd, format);

    // monthly
    auto* monthly_cmd = app.add_subcommand("monthly", "Fade margin per calendar month from a rainfall CSV");
    std::string monthly_csv;
    std::string monthly_region;
    std::string monthly_profile;
    LinkOptions monthly_link;
    double monthly_availability = 99.99;
    monthly_cmd->add_option("--csv", monthly_csv, "Rainfall CSV (region,year,month,depth_mm)")->required();
    monthly_cmd->add_option("--region", monthly_region, "Region identifier in the CSV")->required();
    monthly_cmd->add_option("--profile", monthly_profile, "Built-in region supplying geometry (default: --region)");
    monthly_link.add_to(monthly_cmd);
    monthly_cmd->add_option("--availability", monthly_availability, "Availability, percent")->capture_default_str();
    add_format(monthly_cmd, format);

    try {
        app.parse(argc, argv);
        if (margin_cmd->parsed() && !margin_all && margin_region.empty()) {
            throw CLI::RequiredError("margin needs --region or --all");
        }
        if (rate_cmd->parsed() && rate_region.empty() && !rate_m) {
            throw CLI::RequiredError("rate needs --region or --m/--beta");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const Format fmt_kind = parse_format(format);
    std::ostream& out = std::cout;

    try {
        if (regions_cmd->parsed()) {
            regions_report(regions_sat_lon).print(fmt_kind, out);
        } else if (rate_cmd->parsed()) {
            std::string name = "custom";
            rainfade::RainClimate climate;
            if (!rate_region.empty()) {
                const auto& profile = rainfade::find_region(rate_region);
                name = profile.name;
                climate = profile.climate;
            } else {
                climate = rainfade::RainClimate(*rate_m, *rate_beta);
            }
            const auto rate = rainfade::rate_at_exceedance(climate, rainfade::ExceedancePercent(rate_p));
            Report r;
            r.single_record = true;
            r.columns = {"region", "annual_depth_mm", "thunderstorm_ratio", "p_percent", "rain_rate_mm_h"};
            r.rows.push_back({name, climate.annual_depth_mm, climate.thunderstorm_ratio, rate_p, rate.value()});
            r.print(fmt_kind, out);
        } else if (predict_cmd->parsed()) {
            const auto& profile = rainfade::find_region(predict_region);
            const auto b = rainfade::predict(profile, predict_link.link(), predict_p, predict_link.setup());
            breakdown_report(profile.name, predict_link, b).print(fmt_kind, out);
        } else if (curve_cmd->parsed()) {
            const auto& profile = rainfade::find_region(curve_region);
            const auto grid = rainfade::log_spaced_percents(curve_pmin, curve_pmax, curve_points);
            const auto curve = rainfade::exceedance_curve(profile, curve_link.link(), grid, curve_link.setup());
            Report r;
            r.columns = {"p_percent", "attenuation_db"};
            for (const auto& pt : curve) {
                r.rows.push_back({pt.percent, pt.attenuation_db});
            }
            r.print(fmt_kind, out);
        } else if (margin_cmd->parsed()) {
            std::vector<const RegionProfile*> targets;
            if (margin_all) {
                for (const auto& p : rainfade::builtin_regions()) {
                    targets.push_back(&p);
                }
            } else {
                targets.push_back(&rainfade::find_region(margin_region));
            }
            const auto link = margin_link.link();
            Report r;
            r.columns = {"region", "margin_db"};
            for (const auto* p : targets) {
                r.rows.push_back(
                    {p->name, rainfade::fade_margin(*p, link, margin_availability, margin_link.setup())});
            }
            r.print(fmt_kind, out);
        } else if (monthly_cmd->parsed()) {
            std::ifstream in(monthly_csv);
            if (!in) {
                throw rainfade::Error("cannot open rainfall CSV '" + monthly_csv + "'");
            }
            const auto ds = rainfade::load_rainfall_csv(in);
            const auto& profile =
                rainfade::find_region(monthly_profile.empty() ? monthly_region : monthly_profile);
            const auto margins = rainfade::monthly_margins(ds, monthly_region, profile, monthly_link.link(),
                                                           monthly_availability, monthly_link.setup());
            Report r;
            r.columns = {"month", "margin_db"};
            for (int m = 1; m <= 12; ++m) {
                if (fmt_kind == Format::Table) {
                    r.rows.push_back({std::string(rainfade::month_name(m)), margins[static_cast<std::size_t>(m - 1)]});
                } else {
                    r.rows.push_back({m, margins[static_cast<std::size_t>(m - 1)]});
                }
            }
            r.print(fmt_kind, out);
        }
    } catch (const rainfade::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
