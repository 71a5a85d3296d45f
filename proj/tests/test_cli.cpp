#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fairsim/cli.hpp"
#include "fairsim/export.hpp"

namespace fs = std::filesystem;
using fairsim::run_cli;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("fairsim-test-" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

int cli(const std::vector<std::string>& args, std::string* out = nullptr, std::string* err = nullptr) {
    std::ostringstream o, e;
    const int rc = run_cli(args, o, e);
    if (out) *out = o.str();
    if (err) *err = e.str();
    return rc;
}

const char* kTinyConfig = R"({
  "name": "tiny",
  "n": 50,
  "protected_fraction": 0.5,
  "firms": [{"threshold": 0.6, "sophistication": 0.8}, {"threshold": 0.7, "sophistication": 0.9}],
  "periods": 3,
  "applicants_per_period": 10,
  "replications": 2,
  "base_seed": 7
})";

fs::path write_config(const TempDir& dir, const char* text, const char* name = "tiny.json") {
    const fs::path p = dir.path / name;
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int file_count(const fs::path& dir) {
    int n = 0;
    for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) ++n;
    return n;
}

}  // namespace

TEST_CASE("list prints the catalog, including study 3 and aliases, stably") {
    std::string out1, out2;
    CHECK(cli({"list"}, &out1) == 0);
    CHECK(cli({"list"}, &out2) == 0);
    CHECK(out1 == out2);
    CHECK(out1.find("study1-single-s0.7-t1") != std::string::npos);
    for (int sc = 1; sc <= 4; ++sc)
        CHECK(out1.find("study3-sc" + std::to_string(sc)) != std::string::npos);
    CHECK(out1.find("alias for study1-multi-a-t3") != std::string::npos);
    CHECK(out1.find("Fig. 2b") != std::string::npos);
}

TEST_CASE("run on a config file writes deterministic outputs") {
    TempDir dir;
    const fs::path cfg = write_config(dir, kTinyConfig);
    const fs::path out = dir.path / "out";

    std::string stdout_text;
    CHECK(cli({"run", cfg.string(), "--output", out.string()}, &stdout_text) == 0);
    CHECK(fs::exists(out / "tiny-metrics.csv"));
    CHECK(fs::exists(out / "tiny-manifest.json"));
    CHECK(stdout_text.find("tiny-metrics.csv") != std::string::npos);

    const std::string first = slurp(out / "tiny-metrics.csv");
    CHECK(cli({"run", cfg.string(), "--output", out.string()}) == 0);
    CHECK(slurp(out / "tiny-metrics.csv") == first);

    // Same run at a different parallelism is byte-identical.
    const fs::path out2 = dir.path / "out2";
    CHECK(cli({"run", cfg.string(), "--output", out2.string(), "--parallelism", "1"}) == 0);
    CHECK(slurp(out2 / "tiny-metrics.csv") == first);

    // A different seed changes the bytes.
    const fs::path out3 = dir.path / "out3";
    CHECK(cli({"run", cfg.string(), "--output", out3.string(), "--seed", "8"}) == 0);
    CHECK(slurp(out3 / "tiny-metrics.csv") != first);

    // Cumulative mode changes the series.
    const fs::path out4 = dir.path / "out4";
    CHECK(cli({"run", cfg.string(), "--output", out4.string(), "--cumulative"}) == 0);
    CHECK(slurp(out4 / "tiny-metrics.csv") != first);
}

TEST_CASE("run on a catalog alias covers firm and ecosystem scopes") {
    TempDir dir;
    std::string err;
    CHECK(cli({"run", "study1-multi-a", "--replications", "2", "--output", dir.path.string()},
              nullptr, &err) == 0);
    const std::string csv = slurp(dir.path / "study1-multi-a-t3-metrics.csv");
    CHECK(csv.find(",firm_0,") != std::string::npos);
    CHECK(csv.find(",firm_1,") != std::string::npos);
    CHECK(csv.find(",ecosystem,") != std::string::npos);
}

TEST_CASE("invalid configs exit 1 with a field-named message and no files") {
    TempDir dir;
    const fs::path cfg = write_config(dir, R"({
      "firms": [{"threshold": 1.5, "sophistication": 0.7}]
    })");
    const fs::path out = dir.path / "out";
    fs::create_directories(out);
    std::string err;
    CHECK(cli({"run", cfg.string(), "--output", out.string()}, nullptr, &err) == 1);
    CHECK(err.find("firms[0].threshold") != std::string::npos);
    CHECK(file_count(out) == 0);
}

TEST_CASE("unknown scenario references exit 1 with guidance") {
    std::string err;
    CHECK(cli({"run", "nope-not-a-scenario"}, nullptr, &err) == 1);
    CHECK(err.find("nope-not-a-scenario") != std::string::npos);
    CHECK(err.find("fairsim list") != std::string::npos);
}

TEST_CASE("bad flags and missing values exit 1") {
    std::string err;
    CHECK(cli({"run"}, nullptr, &err) == 1);
    CHECK(cli({"frobnicate"}, nullptr, &err) == 1);
    CHECK(cli({"sweep", "study1-multi-a", "--axis", "threshold"}, nullptr, &err) == 1);  // no values
    CHECK(cli({}, nullptr, &err) == 1);  // a subcommand is required
}

TEST_CASE("emit-events streams one row per record and firm") {
    TempDir dir;
    const fs::path cfg = write_config(dir, kTinyConfig);
    CHECK(cli({"run", cfg.string(), "--output", dir.path.string(), "--emit-events"}) == 0);
    const std::string events = slurp(dir.path / "tiny-events.csv");
    std::istringstream lines(events);
    std::string header;
    std::getline(lines, header);
    CHECK(header == std::string(fairsim::kEventsCsvHeader));
    int rows = 0;
    std::string row;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 2 * 3 * 10 * 2);  // replications x periods x applicants x firms

    // The metrics CSV is unchanged by the events path.
    const fs::path plain = dir.path / "plain";
    CHECK(cli({"run", cfg.string(), "--output", plain.string()}) == 0);
    CHECK(slurp(plain / "tiny-metrics.csv") == slurp(dir.path / "tiny-metrics.csv"));
}

TEST_CASE("sweep writes one CSV per value plus a combined long CSV") {
    TempDir dir;
    const fs::path cfg = write_config(dir, kTinyConfig);
    std::string out;
    CHECK(cli({"sweep", cfg.string(), "--axis", "threshold", "--values", "0.4,0.5,0.6", "--output",
               dir.path.string()},
              &out) == 0);
    int per_value = 0;
    for (double v : {0.4, 0.5, 0.6}) {
        std::ostringstream name;
        name << "tiny-threshold-" << v << "-metrics.csv";
        if (fs::exists(dir.path / name.str())) ++per_value;
    }
    CHECK(per_value == 3);
    const fs::path combined = dir.path / "tiny-threshold-sweep.csv";
    REQUIRE(fs::exists(combined));

    // Combined rows = sum of the per-value data rows; extra axis columns up front.
    const std::string text = slurp(combined);
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    CHECK(header == std::string("axis,axis_value,") + fairsim::kMetricsCsvHeader);
    int rows = 0;
    std::string row;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 3 * (3 * 8 * 3));  // values x (scopes x series x periods)
    CHECK(text.find("threshold,0.4,tiny-threshold-0.4,") != std::string::npos);
    CHECK(fs::exists(dir.path / "tiny-threshold-sweep-manifest.json"));
}

TEST_CASE("running a sweep-family catalog entry fans out automatically") {
    TempDir dir;
    CHECK(cli({"run", "appendixC-tau-sweep", "--replications", "1", "--output",
               dir.path.string()}) == 0);
    CHECK(fs::exists(dir.path / "appendixC-tau-sweep-threshold-0.1-metrics.csv"));
    CHECK(fs::exists(dir.path / "appendixC-tau-sweep-threshold-0.9-metrics.csv"));
    CHECK(fs::exists(dir.path / "appendixC-tau-sweep-threshold-sweep.csv"));
}

TEST_CASE("version flag reports the engine version") {
    std::string out;
    CHECK(cli({"--version"}, &out) == 0);
    CHECK(out.find("fairsim 0.1.0") != std::string::npos);
}
