#include "sdr/record_io.hpp"

#include "test_helpers.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace sdr;
using namespace sdr::test;

namespace {

ExperimentRecord tiny_record() {
    ExperimentRecord rec;
    rec.meta = {{"experiment", "sweep"}, {"seed", "42"}};
    rec.columns = {"theta", "rho_lobby"};
    rec.rows = {{0.0, 0.017716764265429057}, {0.5, 0.015}};
    rec.summaries = {{"rho_lobby", 0.0163583821327, 0.00192}};
    Histogram h;
    h.name = "rho_lobby";
    h.edges = {0.015, 0.0177167642654};
    h.counts = {2};
    rec.histograms = {h};
    return rec;
}

}  // namespace

TEST_CASE("csv output is the documented byte layout") {
    const std::string expected =
        "# experiment = sweep\n"
        "# seed = 42\n"
        "# units = theta:dimensionless rho_lobby:per unit time\n"
        "# summary rho_lobby mean = 0.0163583821327 stddev = 0.00192\n"
        "# histogram rho_lobby edges = 0.015 0.0177167642654 counts = 2\n"
        "theta,rho_lobby\n"
        "0,0.0177167642654\n"
        "0.5,0.015\n";
    CHECK(to_csv(tiny_record()) == expected);
    CHECK(to_csv(tiny_record()) == to_csv(tiny_record()));
}

TEST_CASE("csv precision is configurable") {
    const ExperimentRecord rec = tiny_record();
    const std::string p3 = to_csv(rec, 3);
    CHECK(p3.find("0,0.0177\n") != std::string::npos);
    const std::string p17 = to_csv(rec, 17);
    CHECK(p17.find("0.017716764265429057") != std::string::npos);
}

TEST_CASE("emitted numbers parse back within one printed unit") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-12, 12);
    for (int rep = 0; rep < 500; ++rep) {
        const double v = mant(rng) * std::pow(10.0, expo(rng));
        ExperimentRecord rec;
        rec.columns = {"x"};
        rec.rows = {{v}};
        const std::string csv = to_csv(rec, 12);
        const std::size_t header = csv.find("\nx\n");
        REQUIRE(header != std::string::npos);
        const double parsed = std::strtod(csv.c_str() + header + 3, nullptr);
        const double unit =
            v == 0.0 ? 0.0
                     : std::pow(10.0, std::floor(std::log10(std::abs(v))) - 11.0);
        CHECK(std::abs(parsed - v) <= unit);
    }
}

TEST_CASE("seventeen digit output round-trips exactly") {
    ExperimentRecord rec;
    rec.columns = {"x"};
    rec.rows = {{0.1 + 0.2}, {1.0 / 3.0}, {6.62607015e-34}};
    const std::string csv = to_csv(rec, 17);
    std::size_t pos = csv.find("\nx\n") + 3;
    for (const auto& row : rec.rows) {
        char* end = nullptr;
        const double parsed = std::strtod(csv.c_str() + pos, &end);
        CHECK(parsed == row[0]);
        pos = static_cast<std::size_t>(end - csv.c_str()) + 1;
    }
}

TEST_CASE("json output mirrors the csv content") {
    const ExperimentRecord rec = tiny_record();
    const std::string text = to_json(rec);
    CHECK(to_json(rec) == text);

    const auto j = nlohmann::json::parse(text);
    CHECK(j["meta"]["experiment"] == "sweep");
    CHECK(j["meta"]["seed"] == "42");
    CHECK(j["units"]["theta"] == "dimensionless");
    CHECK(j["columns"] == nlohmann::json({"theta", "rho_lobby"}));
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0][1].get<double>() == 0.0177167642654);
    CHECK(j["rows"][1][0].get<double>() == 0.5);
    CHECK(j["summaries"][0]["name"] == "rho_lobby");
    CHECK(j["summaries"][0]["mean"].get<double>() == 0.0163583821327);
    CHECK(j["histograms"][0]["counts"] == nlohmann::json({2}));
    CHECK(j["histograms"][0]["edges"].size() == 2);
}

TEST_CASE("json key order is stable") {
    const std::string text = to_json(tiny_record());
    const std::size_t meta = text.find("\"meta\"");
    const std::size_t units = text.find("\"units\"");
    const std::size_t columns = text.find("\"columns\"");
    const std::size_t rows = text.find("\"rows\"");
    CHECK(meta < units);
    CHECK(units < columns);
    CHECK(columns < rows);
    const std::size_t experiment = text.find("\"experiment\"");
    const std::size_t seed = text.find("\"seed\"");
    CHECK(experiment < seed);
}

TEST_CASE("column units cover the emitted vocabulary") {
    CHECK(column_unit("rep") == "index");
    CHECK(column_unit("group") == "index");
    CHECK(column_unit("theta") == "dimensionless");
    CHECK(column_unit("weight") == "dimensionless");
    CHECK(column_unit("t") == "time");
    CHECK(column_unit("x") == "resource");
    CHECK(column_unit("x_1") == "resource");
    CHECK(column_unit("x_17") == "resource");
    CHECK(column_unit("wealth") == "resource");
    CHECK(column_unit("abs_gap") == "resource");
    CHECK(column_unit("rho_lobby") == "per unit time");
    CHECK(column_unit("rho_3") == "per unit time");
    CHECK(column_unit("delta_disagreement") == "per unit time");
    CHECK(column_unit("rate") == "per unit time");
    CHECK(column_unit("rate_draw") == "per unit time");
    CHECK(column_unit("pdf") == "density");
}

TEST_CASE("serializers reject structurally broken records") {
    ExperimentRecord rec;
    CHECK_THROWS_AS(to_csv(rec), std::invalid_argument);
    CHECK_THROWS_AS(to_json(rec), std::invalid_argument);
    rec.columns = {"a"};
    rec.rows = {{1.0, 2.0}};
    CHECK_THROWS_AS(to_csv(rec), std::invalid_argument);
}

TEST_CASE("full experiment records serialize in both formats") {
    SweepSpec sw{benchmark_scenario()};
    sw.grid = {0.0, 0.5, 0.99};
    sw.outputs = {OutputField::consumption, OutputField::rho_lobby};
    const ExperimentRecord rec = run_sweep(sw);

    const std::string csv = to_csv(rec);
    CHECK(csv.find("# experiment = sweep\n") != std::string::npos);
    CHECK(csv.find("theta,x_1,x_2,x_3,rho_lobby\n") != std::string::npos);

    const auto j = nlohmann::json::parse(to_json(rec));
    CHECK(j["rows"].size() == 3);
    CHECK(j["columns"].size() == 5);
    const double csv_first =
        std::strtod(csv.c_str() + csv.find("\n0,") + 3, nullptr);
    CHECK(csv_first == j["rows"][0][1].get<double>());
}
