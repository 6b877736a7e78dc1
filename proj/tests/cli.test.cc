// Copyright 2026 The Duality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "duality/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using nlohmann::json;
namespace cli = duality::cli;

namespace {

const std::string kDataDir = DUALITY_TEST_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<double> fields_of(const std::string &line) {
    std::vector<double> values;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        values.push_back(cell.empty() ? std::nan("") : std::stod(cell));
    }
    return values;
}

// Data rows of a CSV dataset: skips '#' comments and the column header.
std::vector<std::vector<double>> data_rows(const std::string &text) {
    std::vector<std::vector<double>> rows;
    bool header_seen = false;
    for (const auto &line : lines_of(text)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        rows.push_back(fields_of(line));
    }
    return rows;
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "duality_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(CliReport, MixedSuperposition) {
    const Result r = run({"report", "--builtin", "psi-mixed"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["label"], "psi-mixed");
    EXPECT_EQ(doc["V"].get<double>(), 0.7071067811865476);
    EXPECT_EQ(doc["D"].get<double>(), 0.7071067811865476);
    EXPECT_NE(r.out.find("0.7071067811865476"), std::string::npos);
}

TEST(CliReport, WernerEtaZeroAsCsv) {
    const Result r = run({"report", "--builtin", "werner", "--eta", "0", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "label,I1,I2,mu_abs,mu_phase,p1,p2,V,D,D2_plus_V2\nwerner(eta=0),0.5,0.5,0,,0,0,0,0,0\n");
}

TEST(CliReport, FileState) {
    const Result r = run({"report", "--file", kDataDir + "/equal_paths.json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["label"], "equal_paths");
    EXPECT_NEAR(doc["V"].get<double>(), 1.0, 1e-15);
}

TEST(CliReport, InvalidStateExitsTwo) {
    const Result r = run({"report", "--file", kDataDir + "/bad.json"});
    EXPECT_EQ(r.code, cli::kExitInvalidState);
    EXPECT_TRUE(r.out.empty());
    const auto json_start = r.err.find('{');
    ASSERT_NE(json_start, std::string::npos) << r.err;
    const json doc = json::parse(r.err.substr(json_start));
    EXPECT_EQ(doc["is_valid"], false);
    EXPECT_NEAR(doc["trace_defect"].get<double>(), 0.1, 1e-15);
}

TEST(CliReport, UsageErrorsExitOne) {
    EXPECT_EQ(run({"report"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--builtin", "psi3"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--builtin", "psi1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--builtin", "psi1", "--a", "1.5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--file", kDataDir + "/missing.json"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--builtin", "psi-mixed", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--builtin", "psi-mixed", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
}

TEST(CliReport, UnknownBuiltinIsNamedInTheError) {
    const Result r = run({"report", "--builtin", "psi-mix"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("psi-mix"), std::string::npos);
}

TEST(CliReport, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"report", "--help"}).code, cli::kExitOk);
}

TEST(CliSweep, Psi1Rows) {
    const Result r = run({"sweep", "--builtin", "psi1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto lines = lines_of(r.out);
    EXPECT_EQ(lines[0], "# family=psi1 vary=a start=0 stop=1 samples=201");
    EXPECT_EQ(lines[1], "a,V,D,D2_plus_V2");
    const auto rows = data_rows(r.out);
    ASSERT_EQ(rows.size(), 201u);
    const auto &half = rows[100];
    EXPECT_EQ(half[0], 0.5);
    EXPECT_NEAR(half[1], 0.86603, 1e-5);
    EXPECT_NEAR(half[2], 0.5, 1e-12);
    EXPECT_NEAR(half[3], 1.0, 1e-12);
}

TEST(CliSweep, WernerDEqualsEta) {
    const Result r = run({"sweep", "--builtin", "werner", "--samples", "51"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    for (const auto &row : data_rows(r.out)) {
        EXPECT_EQ(row[1], 0.0);
        EXPECT_NEAR(row[2], row[0], 1e-12);
    }
}

TEST(CliSweep, Psi2WithBZero) {
    const Result r = run({"sweep", "--builtin", "psi2", "--b", "0", "--samples", "21"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(lines_of(r.out)[0], "# family=psi2 vary=a start=0 stop=1 samples=21 b=0");
    for (const auto &row : data_rows(r.out)) {
        EXPECT_NEAR(row[1], 0.0, 1e-15);
        EXPECT_NEAR(row[2], 1.0, 1e-12);
    }
}

TEST(CliSweep, RejectsBadPlans) {
    EXPECT_EQ(run({"sweep", "--builtin", "psi2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--builtin", "psi-mixed"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--builtin", "psi1", "--vary", "eta"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--builtin", "psi1", "--start", "0.8", "--stop", "0.2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--builtin", "psi1", "--stop", "1.2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sweep", "--builtin", "psi1", "--samples", "1"}).code, cli::kExitUsage);
}

TEST(CliSweep, JsonFormat) {
    const Result r = run({"sweep", "--builtin", "werner", "--samples", "3", "--format", "json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc["rows"].size(), 3u);
    EXPECT_EQ(doc["rows"][2]["eta"], 1.0);
    EXPECT_NEAR(doc["rows"][2]["D"].get<double>(), 1.0, 1e-12);
}

TEST(CliEvolve, DephasingKeepsDConstant) {
    const Result r = run({"evolve", "--model", "dephasing", "--gamma", "1", "--t-max", "5", "--steps", "100"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto lines = lines_of(r.out);
    EXPECT_EQ(lines[0], "# model=dephasing gamma=1 method=closed n=-");
    EXPECT_EQ(lines[1], "# t_max=5 steps=100 initial=psi-mixed");
    EXPECT_EQ(lines[2], "time,V,D,D2_plus_V2,mu_abs,p1,p2,I1,I2");
    const auto rows = data_rows(r.out);
    ASSERT_EQ(rows.size(), 100u);
    for (const auto &row : rows) {
        EXPECT_NEAR(row[2], 0.70711, 1e-5);
        EXPECT_NEAR(row[2], rows[0][2], 1e-9);
    }
}

TEST(CliEvolve, ScatteringDipsAndRecovers) {
    const Result r = run({"evolve", "--model", "scattering", "--gamma", "1", "--t-max", "5"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto rows = data_rows(r.out);
    ASSERT_EQ(rows.size(), 200u);
    std::size_t lowest = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][2] < rows[lowest][2]) {
            lowest = i;
        }
    }
    EXPECT_LT(rows[lowest][2], 0.3);
    EXPECT_GT(lowest, 0u);
    EXPECT_LT(lowest, rows.size() - 1);
    EXPECT_GT(rows.back()[2], rows[lowest][2]);
    EXPECT_NEAR(rows.back()[2], 0.5, 0.02);
}

TEST(CliEvolve, IteratedAgreesWithClosedFormForDephasing) {
    const std::vector<std::string> base = {"evolve", "--model", "dephasing", "--gamma", "1", "--t-max", "5"};
    auto closed_args = base;
    closed_args.insert(closed_args.end(), {"--method", "closed"});
    auto iterated_args = base;
    iterated_args.insert(iterated_args.end(), {"--method", "iterated", "--n", "1000"});
    const Result closed = run(closed_args);
    const Result iterated = run(iterated_args);
    ASSERT_EQ(closed.code, cli::kExitOk) << closed.err;
    ASSERT_EQ(iterated.code, cli::kExitOk) << iterated.err;
    EXPECT_EQ(lines_of(iterated.out)[0], "# model=dephasing gamma=1 method=iterated n=1000");
    const auto a = data_rows(closed.out);
    const auto b = data_rows(iterated.out);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_LT(std::abs(a[i][1] - b[i][1]), 1e-3);
        EXPECT_LT(std::abs(a[i][2] - b[i][2]), 1e-3);
    }
}

TEST(CliEvolve, IteratedProbabilityGuard) {
    const Result r = run({"evolve", "--model", "dephasing", "--method", "iterated", "--n", "4"});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("exceeds"), std::string::npos) << r.err;
}

TEST(CliEvolve, RequiresModel) {
    EXPECT_EQ(run({"evolve"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"evolve", "--model", "amplitude"}).code, cli::kExitUsage);
}

TEST(CliEvolve, InvalidInitialStateExitsTwo) {
    EXPECT_EQ(run({"evolve", "--model", "dephasing", "--file", kDataDir + "/bad.json"}).code,
              cli::kExitInvalidState);
}

TEST(CliScreen, NumericAndAnalyticVisibility) {
    const Result r = run({"screen", "--builtin", "psi1", "--a", "0.7071067811865476"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto lines = lines_of(r.out);
    EXPECT_EQ(lines[0].rfind("# state=psi1(a=0.7071067811865476) k=12566370.614359172 d=0.001 L=1 samples=10000", 0),
              0u);
    EXPECT_EQ(lines[1], "x,intensity");
    EXPECT_EQ(lines.size(), 10003u);
    const std::string &trailer = lines.back();
    ASSERT_EQ(trailer.rfind("# numeric_V=", 0), 0u);
    const double numeric = std::stod(trailer.substr(std::string("# numeric_V=").size()));
    EXPECT_NEAR(numeric, 1.0, 1e-3);
}

TEST(CliScreen, MixedSuperpositionAndWerner) {
    const Result mixed = run({"screen", "--builtin", "psi-mixed", "--samples", "10000"});
    ASSERT_EQ(mixed.code, cli::kExitOk) << mixed.err;
    const std::string trailer = lines_of(mixed.out).back();
    EXPECT_NEAR(std::stod(trailer.substr(12)), 0.707, 1e-3);

    const Result w = run({"screen", "--builtin", "werner", "--eta", "0.5", "--format", "json"});
    ASSERT_EQ(w.code, cli::kExitOk) << w.err;
    const json doc = json::parse(w.out);
    EXPECT_NEAR(doc["numeric_V"].get<double>(), 0.0, 1e-3);
    EXPECT_EQ(doc["analytic_V"].get<double>(), 0.0);
}

TEST(CliScreen, InvalidGeometryExitsOne) {
    EXPECT_EQ(run({"screen", "--builtin", "psi-mixed", "--L", "-1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"screen", "--builtin", "psi-mixed", "--d", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"screen", "--builtin", "psi-mixed", "--x-min", "0", "--x-max", "0"}).code, cli::kExitUsage);
}

TEST(CliValidateChannel, ExitCodes) {
    const Result dephasing = run({"validate-channel", "--model", "dephasing", "--p", "0.3"});
    EXPECT_EQ(dephasing.code, cli::kExitOk) << dephasing.err;
    const auto lines = lines_of(dephasing.out);
    EXPECT_EQ(lines[0], "model=dephasing p=0.3 operators=3");
    ASSERT_EQ(lines[1].rfind("completeness_defect=", 0), 0u);
    EXPECT_LT(std::stod(lines[1].substr(20)), 1e-15);

    const Result scattering = run({"validate-channel", "--model", "scattering", "--p", "1.0"});
    EXPECT_EQ(scattering.code, cli::kExitOk) << scattering.err;
    EXPECT_LT(std::stod(lines_of(scattering.out)[1].substr(20)), 1e-15);

    EXPECT_EQ(run({"validate-channel", "--model", "dephasing", "--p", "1.5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"validate-channel", "--model", "dephasing"}).code, cli::kExitUsage);
}

TEST(CliValidateChannel, SeedSelectsProbe) {
    const Result a = run({"validate-channel", "--model", "scattering", "--p", "0.4", "--seed", "7"});
    const Result b = run({"validate-channel", "--model", "scattering", "--p", "0.4", "--seed", "7"});
    const Result c = run({"validate-channel", "--model", "scattering", "--p", "0.4", "--seed", "8"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(lines_of(a.out)[2], lines_of(c.out)[2]);
    EXPECT_EQ(lines_of(a.out)[2].rfind("probe seed=7 ", 0), 0u);
}

TEST(CliConfig, FileFillsUnsetFlags) {
    const auto path = scratch("werner.json");
    std::ofstream(path) << R"({"builtin": "werner", "eta": 0.25, "format": "csv"})";
    const Result r = run({"report", "--config", path.string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("werner(eta=0.25)"), std::string::npos);

    const Result overridden = run({"report", "--config", path.string(), "--eta", "0.75"});
    ASSERT_EQ(overridden.code, cli::kExitOk) << overridden.err;
    EXPECT_NE(overridden.out.find("werner(eta=0.75)"), std::string::npos);
}

TEST(CliConfig, UnknownKeysAndBadTypesAreErrors) {
    const auto unknown = scratch("unknown.json");
    std::ofstream(unknown) << R"({"builtin": "psi-mixed", "colour": "red"})";
    const Result r = run({"report", "--config", unknown.string()});
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_NE(r.err.find("colour"), std::string::npos);

    const auto typed = scratch("typed.json");
    std::ofstream(typed) << R"({"builtin": "werner", "eta": "high"})";
    EXPECT_EQ(run({"report", "--config", typed.string()}).code, cli::kExitUsage);

    const auto broken = scratch("broken.json");
    std::ofstream(broken) << "{";
    EXPECT_EQ(run({"report", "--config", broken.string()}).code, cli::kExitUsage);
}

TEST(CliTolerance, EnvironmentSetsDefaultOnly) {
    // bad.json has trace 0.9; a loose tolerance accepts it.
    ::setenv("DUALITY_DEFAULT_TOL", "0.2", 1);
    const Result loose = run({"report", "--file", kDataDir + "/bad.json"});
    const Result strict = run({"report", "--file", kDataDir + "/bad.json", "--tol", "1e-9"});
    ::setenv("DUALITY_DEFAULT_TOL", "nonsense", 1);
    const Result garbage = run({"report", "--builtin", "psi-mixed"});
    ::unsetenv("DUALITY_DEFAULT_TOL");
    EXPECT_EQ(loose.code, cli::kExitOk) << loose.err;
    EXPECT_EQ(strict.code, cli::kExitInvalidState);
    EXPECT_EQ(garbage.code, cli::kExitUsage);
    EXPECT_EQ(run({"report", "--file", kDataDir + "/bad.json"}).code, cli::kExitInvalidState);
}

TEST(CliOutput, OutFlagWritesFile) {
    const auto path = scratch("report.json");
    std::filesystem::remove(path);
    const Result r = run({"report", "--builtin", "psi-mixed", "--out", path.string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(json::parse(slurp(path))["label"], "psi-mixed");
}

TEST(CliFigures, AliasesMatchDocumentedInvocations) {
    const std::string inv_sqrt2 = "0.7071067811865476";
    const std::vector<std::pair<std::string, std::vector<std::string>>> expansions = {
        {"figure2", {"sweep", "--builtin", "psi1", "--vary", "a", "--start", "0", "--stop", "1", "--samples", "201"}},
        {"figure3",
         {"sweep", "--builtin", "psi2", "--vary", "a", "--b", inv_sqrt2, "--start", "0", "--stop", "1", "--samples",
          "201"}},
        {"figure4",
         {"sweep", "--builtin", "werner", "--vary", "eta", "--start", "0", "--stop", "1", "--samples", "201"}},
        {"figure5",
         {"evolve", "--model", "dephasing", "--gamma", "1", "--t-max", "5", "--steps", "200", "--method", "closed",
          "--builtin", "psi-mixed"}},
        {"figure6",
         {"evolve", "--model", "scattering", "--gamma", "1", "--t-max", "5", "--steps", "200", "--method", "closed",
          "--builtin", "psi-mixed"}},
    };
    for (const auto &[alias, expanded] : expansions) {
        const Result a = run({alias});
        const Result b = run(expanded);
        ASSERT_EQ(a.code, cli::kExitOk) << alias << ": " << a.err;
        EXPECT_EQ(a.out, b.out) << alias;
    }
}

TEST(CliFigures, OutputIsByteIdenticalAcrossRuns) {
    for (const std::string alias : {"figure2", "figure3", "figure4", "figure5", "figure6"}) {
        const auto first = scratch(alias + "_a.csv");
        const auto second = scratch(alias + "_b.csv");
        ASSERT_EQ(run({alias, "--out", first.string()}).code, cli::kExitOk);
        ASSERT_EQ(run({alias, "--out", second.string()}).code, cli::kExitOk);
        const std::string text = slurp(first);
        EXPECT_FALSE(text.empty());
        EXPECT_EQ(text, slurp(second)) << alias;
        EXPECT_EQ(text.find('\r'), std::string::npos);
    }
}

TEST(CliFigures, Figure3AnchorRow) {
    const Result r = run({"figure3"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("b=0.7071067811865476"), std::string::npos);
    bool found = false;
    for (const auto &row : data_rows(r.out)) {
        if (std::abs(row[0] - std::sqrt(0.5)) < 0.0025) {
            found = true;
            // nearest grid point to 1/sqrt(2) is a = 0.705
            EXPECT_NEAR(row[1], std::sqrt(0.5), 5e-3);
            EXPECT_NEAR(row[2], std::sqrt(0.5), 5e-3);
        }
    }
    EXPECT_TRUE(found);
}

TEST(CliFigures, OnlyOutputFlagsAreAccepted) {
    EXPECT_EQ(run({"figure5", "--gamma", "2"}).code, cli::kExitUsage);
    const Result json_out = run({"figure4", "--format", "json"});
    ASSERT_EQ(json_out.code, cli::kExitOk);
    EXPECT_EQ(json::parse(json_out.out)["rows"].size(), 201u);
}
