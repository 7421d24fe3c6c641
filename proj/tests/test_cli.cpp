// Black-box tests of the rainfade executable.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#ifndef RAINFADE_CLI_PATH
#error "RAINFADE_CLI_PATH must point at the rainfade executable"
#endif

namespace {

struct Run {
    int exit_code;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = std::string(RAINFADE_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("rainfade_cli_" + name);
    std::ofstream(path) << content;
    return path;
}

std::string monthly_csv(const std::array<double, 12>& months, int skip_month = 0)
{
    std::string text = "region,year,month,depth_mm\n";
    for (int y = 1990; y < 1993; ++y) {
        for (int m = 1; m <= 12; ++m) {
            if (m != skip_month) {
                text += "Sylhet," + std::to_string(y) + "," + std::to_string(m) + ","
                        + std::to_string(months[static_cast<std::size_t>(m - 1)]) + "\n";
            }
        }
    }
    return text;
}

}  // namespace

TEST_CASE("regions")
{
    const auto table = run("regions");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("Sylhet") != std::string::npos);
    CHECK(table.out.find("4101.0000") != std::string::npos);

    const auto json = run("regions --format json");
    REQUIRE(json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 4);
    CHECK(parsed[3]["region"] == "Sylhet");
    CHECK(parsed[3]["annual_depth_mm"] == 4101.0);

    CHECK(run("regions --format xml").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("bogus").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("rate")
{
    const auto sylhet = run("rate --region Sylhet --p 0.01 --format json");
    REQUIRE(sylhet.exit_code == 0);
    CHECK(std::abs(nlohmann::json::parse(sylhet.out)["rain_rate_mm_h"].get<double>() - 141.70) <= 0.05);

    const auto custom = run("rate --m 2124 --beta 0.5 --p 0.01 --format csv");
    REQUIRE(custom.exit_code == 0);
    const auto rows = csv_rows(custom.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].back() == "rain_rate_mm_h");
    CHECK(std::abs(std::stod(rows[1].back()) - 119.77) <= 0.05);

    const auto none = run("rate --m 0 --beta 0.5 --p 0.01", true);
    CHECK(none.exit_code == 1);
    CHECK(none.out.find("no rainfall") != std::string::npos);

    CHECK(run("rate --p 0.01").exit_code == 2);
    CHECK(run("rate --m 2000 --p 0.01").exit_code == 2);
}

TEST_CASE("predict")
{
    const auto sylhet = run("predict --region Sylhet --f 40 --p 0.01 --format json");
    REQUIRE(sylhet.exit_code == 0);
    const auto b = nlohmann::json::parse(sylhet.out);
    CHECK(std::abs(b["a_p_db"].get<double>() - 124.0) <= 3.0);
    for (const char* key : {"h_r_km", "l_s_km", "l_g_km", "gamma_r_db_km", "r001", "zeta_deg", "l_r_km", "chi_deg",
                            "v001", "l_e_km", "a001_db", "p_percent", "beta_adj", "a_p_db"}) {
        CHECK(b.contains(key));
    }

    const auto raj = run("predict --region Rajshahi --f 30 --p 0.01 --format json");
    REQUIRE(raj.exit_code == 0);
    CHECK(std::abs(nlohmann::json::parse(raj.out)["a_p_db"].get<double>() - 74.0) <= 3.0);

    const auto itu = run("predict --region Dhaka --f 40 --p 0.01 --r001 95 --format json");
    REQUIRE(itu.exit_code == 0);
    CHECK(std::abs(nlohmann::json::parse(itu.out)["a_p_db"].get<double>() - 102.0) <= 3.0);

    const auto bad_f = run("predict --region Dhaka --f 70 --p 0.01", true);
    CHECK(bad_f.exit_code == 1);
    CHECK(bad_f.out.find("frequency") != std::string::npos);
    CHECK(run("predict --region Atlantis --f 40").exit_code == 1);
    CHECK(run("predict --region Dhaka --f 40 --p 7").exit_code == 1);
    CHECK(run("predict --region Dhaka").exit_code == 2);
}

TEST_CASE("curve")
{
    const auto csv = run("curve --region Sylhet --f 50 --pmin 0.001 --pmax 5 --points 25 --format csv");
    REQUIRE(csv.exit_code == 0);
    const auto rows = csv_rows(csv.out);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == std::vector<std::string>{"p_percent", "attenuation_db"});
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
    }

    const auto at001 = run("curve --region Sylhet --f 50 --pmin 0.01 --pmax 0.01 --points 1 --format json");
    REQUIRE(at001.exit_code == 0);
    CHECK(std::abs(nlohmann::json::parse(at001.out)[0]["attenuation_db"].get<double>() - 156.0) <= 3.0);

    CHECK(run("curve --region Sylhet --f 50 --pmin 0.0001 --pmax 5").exit_code == 1);
    CHECK(run("curve --region Sylhet --f 50 --pmin 1 --pmax 10").exit_code == 1);
}

TEST_CASE("margin")
{
    const auto all = run("margin --all --f 50 --availability 99.99 --format csv");
    REQUIRE(all.exit_code == 0);
    const auto rows = csv_rows(all.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"region", "margin_db"});
    for (const auto& row : rows) {
        if (row[0] == "Sylhet") {
            CHECK(std::abs(std::stod(row[1]) - 156.0) <= 3.0);
        }
        if (row[0] == "Rajshahi") {
            CHECK(std::abs(std::stod(row[1]) - 138.0) <= 3.0);
        }
    }

    const auto m99 = run("margin --region Dhaka --f 40 --availability 99 --format json");
    const auto m9999 = run("margin --region Dhaka --f 40 --availability 99.99 --format json");
    REQUIRE(m99.exit_code == 0);
    REQUIRE(m9999.exit_code == 0);
    const double low = nlohmann::json::parse(m99.out)[0]["margin_db"].get<double>();
    const double high = nlohmann::json::parse(m9999.out)[0]["margin_db"].get<double>();
    CHECK(low > 0.0);
    CHECK(low < high);

    CHECK(run("margin --all --f 60 --availability 99.99").exit_code == 1);
    CHECK(run("margin --all --f 40 --availability 99.9999").exit_code == 1);
    CHECK(run("margin --f 40").exit_code == 2);
    CHECK(run("margin --all --region Dhaka --f 40").exit_code == 2);
}

TEST_CASE("monthly")
{
    std::array<double, 12> uniform{};
    uniform.fill(200.0);
    const auto flat_path = write_temp("uniform.csv", monthly_csv(uniform));
    const auto flat = run("monthly --csv " + flat_path.string() + " --region Sylhet --f 40 --format csv");
    REQUIRE(flat.exit_code == 0);
    const auto flat_rows = csv_rows(flat.out);
    REQUIRE(flat_rows.size() == 13);
    CHECK(flat_rows[0] == std::vector<std::string>{"month", "margin_db"});
    for (std::size_t i = 2; i < flat_rows.size(); ++i) {
        CHECK(flat_rows[i][1] == flat_rows[1][1]);
    }

    const std::array<double, 12> monsoon{8, 25, 80, 240, 480, 760, 820, 600, 430, 220, 30, 9};
    const auto monsoon_path = write_temp("monsoon.csv", monthly_csv(monsoon));
    const auto wet = run("monthly --csv " + monsoon_path.string() + " --region Sylhet --f 50 --format json");
    REQUIRE(wet.exit_code == 0);
    const auto arr = nlohmann::json::parse(wet.out);
    REQUIRE(arr.size() == 12);
    int max_month = 0;
    double max_margin = -1.0;
    for (const auto& row : arr) {
        if (row["margin_db"].get<double>() > max_margin) {
            max_margin = row["margin_db"].get<double>();
            max_month = row["month"].get<int>();
        }
    }
    CHECK(max_month == 7);

    const auto missing_path = write_temp("missing.csv", monthly_csv(uniform, 3));
    const auto missing = run("monthly --csv " + missing_path.string() + " --region Sylhet --f 40", true);
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.find("March") != std::string::npos);

    CHECK(run("monthly --csv /nonexistent/rain.csv --region Sylhet --f 40").exit_code == 1);
    const auto bad_path = write_temp("bad.csv", "region,year,month,depth_mm\nSylhet,1990,13,5\n");
    const auto bad = run("monthly --csv " + bad_path.string() + " --region Sylhet --f 40", true);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("line 2") != std::string::npos);
}

TEST_CASE("outputs are deterministic and finite")
{
    for (const char* args : {"regions --format csv", "regions --format json",
                             "predict --region Chittagong --f 50 --p 0.3 --format csv",
                             "predict --region Chittagong --f 50 --p 0.3 --format json",
                             "curve --region Dhaka --f 30 --points 10 --format csv",
                             "margin --all --f 40 --format json"}) {
        CAPTURE(args);
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find("nan") == std::string::npos);
        CHECK(a.out.find("inf") == std::string::npos);
    }
    // Fixed four decimals in CSV.
    const auto rows = csv_rows(run("curve --region Dhaka --f 30 --points 3 --format csv").out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        for (const auto& cell : rows[i]) {
            const auto dot = cell.find('.');
            REQUIRE(dot != std::string::npos);
            CHECK(cell.size() - dot - 1 == 4);
        }
    }
}
