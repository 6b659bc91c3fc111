// Copyright 2026 The qig Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "qig/basisopt.hpp"
#include "qig/geometry.hpp"
#include "qig_cli/cli.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "qig");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = qig::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct Csv {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::vector<double> col(const std::string& name) const {
        const auto it = std::find(columns.begin(), columns.end(), name);
        EXPECT_NE(it, columns.end()) << name;
        const auto c = static_cast<std::size_t>(it - columns.begin());
        std::vector<double> v;
        for (const auto& r : rows) {
            v.push_back(r[c]);
        }
        return v;
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
        out.push_back(cell);
    }
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (line.rfind("# ", 0) == 0) {
            csv.comments.push_back(line.substr(2));
        } else if (csv.columns.empty()) {
            csv.columns = split(line);
        } else {
            std::vector<double> row;
            for (const auto& c : split(line)) {
                row.push_back(std::stod(c));
            }
            csv.rows.push_back(row);
        }
    }
    return csv;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qig_cli_test_" + name);
}

} // namespace

TEST(CliSweepBeta, MaximumAtBenchmark) {
    const auto o = run({"sweep-beta", "--beta-grid", "720"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Csv csv = parse_csv(o.out);
    ASSERT_EQ(csv.rows.size(), 720u);
    const auto s = csv.col("s_measured");
    const auto beta = csv.col("beta");
    EXPECT_NEAR(max_of(s), 0.5839, 5e-5);
    const auto k = std::max_element(s.begin(), s.end()) - s.begin();
    const auto opt = qig::optimize_beta(0.9, 0.5, kPi / 2);
    EXPECT_LE(std::abs(std::remainder(beta[k] - opt.beta, kPi)), 2 * kPi / 720);
    EXPECT_NEAR(csv.col("s_quantum").front(), 0.638472973439963, 1e-14);
}

TEST(CliSweepBeta, IdenticalStatesGiveZeros) {
    const auto o = run({"sweep-beta", "--r1", "0.6", "--r2", "0.6", "--theta", "0"});
    ASSERT_EQ(o.code, 0) << o.err;
    for (double v : parse_csv(o.out).col("s_measured")) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(CliSweepBeta, HeaderRecordsEverything) {
    const auto o = run({"sweep-beta", "--beta-grid", "16", "--seed", "5"});
    const auto h = qig::cli::Json::parse(parse_csv(o.out).comments.at(0));
    EXPECT_EQ(h["command"], "sweep-beta");
    EXPECT_EQ(h["seed"], 5);
    EXPECT_EQ(h["beta_grid"], 16);
    EXPECT_EQ(h["r1"], 0.9);
    EXPECT_EQ(h["r2"], 0.5);
    EXPECT_TRUE(h.contains("version"));
    EXPECT_TRUE(h.contains("theta"));
}

TEST(CliSweepTheta, EqualityAtCommutingAngles) {
    const auto o = run({"sweep-theta", "--grid", "361"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Csv csv = parse_csv(o.out);
    const auto theta = csv.col("theta"), s = csv.col("s_star"), q = csv.col("s_quantum"), gap = csv.col("gap");
    for (std::size_t i = 0; i < theta.size(); ++i) {
        EXPECT_GE(q[i], s[i] - 1e-12);
        EXPECT_GE(s[i], -1e-15);
        EXPECT_GE(q[i], -1e-15);
    }
    for (std::size_t i : {std::size_t{0}, std::size_t{180}, std::size_t{360}}) {
        EXPECT_LT(std::abs(gap[i]), 1e-6) << theta[i];
    }
    const auto k = std::max_element(gap.begin(), gap.end()) - gap.begin();
    EXPECT_GT(std::abs(std::sin(theta[k])), 0.5);
    EXPECT_GT(gap[90], 1e-3);
}

TEST(CliEllipseField, BkmInsideBh) {
    const auto o = run({"ellipse-field", "--grid", "5", "--epsilon", "0.1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Csv csv = parse_csv(o.out);
    EXPECT_EQ(csv.rows.size(), 1u + 5 * 12);
    const auto bhr = csv.col("bh_radial"), bkr = csv.col("bkm_radial");
    const auto bht = csv.col("bh_tangential"), bkt = csv.col("bkm_tangential");
    for (std::size_t i = 0; i < bhr.size(); ++i) {
        EXPECT_NEAR(bhr[i], bkr[i], 1e-14);
        EXPECT_LE(bkt[i], bht[i] + 1e-15);
    }
    EXPECT_NEAR(bhr[0], 0.1, 1e-15);
    EXPECT_EQ(run({"ellipse-field", "--epsilon", "-1"}).code, 2);
}

TEST(CliCurvature, NegativeAndMatchesLibrary) {
    const auto o = run({"curvature", "--grid", "19"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Csv csv = parse_csv(o.out);
    const auto r = csv.col("r"), R = csv.col("R");
    ASSERT_EQ(r.size(), 19u);
    for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_LE(R[i], 0.0);
        EXPECT_NEAR(R[i], qig::bkm_curvature(r[i]), 1e-14 * std::abs(R[i]));
    }
    EXPECT_LT(std::abs(R[0]), 3e-3);
    EXPECT_NEAR(R[9], -0.358833645004988, 1e-13);
}

TEST(CliGeodesic, RadialLengthLaw) {
    const auto o = run({"geodesic", "--r1", "0.5", "--direction", "0", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = qig::cli::Json::parse(o.out);
    EXPECT_EQ(j["stop"], "boundary");
    const double end_r = j["r"].back();
    const double extrapolated = j["length"].get<double>() + kPi / 2 - std::asin(end_r);
    EXPECT_NEAR(extrapolated, kPi / 2 - std::asin(0.5), 1e-6);
}

TEST(CliGeodesic, SymmetricPairAndConservation) {
    const auto o = run({"geodesic", "--r1", "0.7", "--phi1", "-0.5", "--r2", "0.7", "--phi2", "0.5", "--stride", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const Csv csv = parse_csv(o.out);
    ASSERT_EQ(csv.comments.size(), 2u);
    const auto summary = qig::cli::Json::parse(csv.comments[1]);
    EXPECT_LT(summary["endpoint_error"].get<double>(), 1e-6);
    const auto e = csv.col("E"), jm = csv.col("J"), r = csv.col("r"), phi = csv.col("phi");
    for (std::size_t i = 0; i < e.size(); ++i) {
        EXPECT_NEAR(e[i], 0.5, 1e-8);
        EXPECT_NEAR(jm[i], jm[0], 1e-8);
    }
    // mirror symmetry: r at phi and -phi agree
    const std::size_t n = r.size();
    EXPECT_NEAR(r[n / 4], r[n - 1 - n / 4], 1e-3);
    EXPECT_NEAR(phi[n / 4], -phi[n - 1 - n / 4], 1e-3);
}

TEST(CliBenchmark, LadderAndDeterminism) {
    const std::vector<std::string> args{"benchmark", "--steps", "3000", "--restarts", "2", "--seed", "11"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = qig::cli::Json::parse(a.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    const std::vector<std::string> ladder{"single_qubit", "bell_two_qubit", "mc_two_qubit", "mc_three_qubit",
                                          "quantum_relative_entropy"};
    auto pos = [&](const std::string& k) { return std::find(keys.begin(), keys.end(), k) - keys.begin(); };
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        EXPECT_LT(pos(ladder[i - 1]), pos(ladder[i]));
    }
    for (std::size_t i = 1; i + 1 < ladder.size(); ++i) {
        EXPECT_LE(j[ladder[i - 1]].get<double>(), j[ladder[i]].get<double>());
    }
    EXPECT_LT(j["mc_three_qubit"].get<double>(), j["quantum_relative_entropy"].get<double>());
    EXPECT_TRUE(j["ladder_monotone"].get<bool>());
    EXPECT_TRUE(j["below_quantum"].get<bool>());
    EXPECT_EQ(j["seed"], 11);
}

TEST(CliBenchmark, DegenerateInputIsAllZero) {
    const auto o = run({"benchmark", "--r1", "0.5", "--r2", "0.5", "--theta", "0", "--steps", "200", "--restarts", "1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = qig::cli::Json::parse(o.out);
    for (const char* k : {"single_qubit", "bell_two_qubit", "mc_two_qubit", "mc_three_qubit"}) {
        EXPECT_EQ(j[k].get<double>(), 0.0) << k;
    }
    EXPECT_NEAR(j["quantum_relative_entropy"].get<double>(), 0.0, 1e-15);
}

TEST(CliSimulate, ReportAndDeterminism) {
    const std::vector<std::string> args{"simulate", "--copies", "20000", "--seed", "3", "--strategy", "single"};
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = qig::cli::Json::parse(a.out);
    for (const char* k : {"strategy", "copies", "rate", "stderr", "seed", "analytic_rate"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(j["strategy"], "single");
    EXPECT_EQ(j["copies"], 20000);
    EXPECT_NEAR(j["analytic_rate"].get<double>(), 0.583926035523780, 1e-12);
    EXPECT_NE(run({"simulate", "--copies", "20000", "--seed", "4"}).out, a.out);
}

TEST(CliErrors, ValidationExitCodes) {
    auto bad = run({"sweep-beta", "--r1", "1.5"});
    EXPECT_EQ(bad.code, 2);
    const auto e = qig::cli::Json::parse(bad.err);
    EXPECT_EQ(e["error"], "validation_error");
    EXPECT_EQ(e["exit_code"], 2);
    EXPECT_EQ(run({"sweep-beta", "--r1", "abc"}).code, 2);
    EXPECT_EQ(run({"sweep-beta", "--bogus", "1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"simulate", "--copies", "1001"}).code, 2);
    EXPECT_EQ(run({"simulate", "--strategy", "bell"}).code, 2);
    EXPECT_EQ(run({"benchmark", "--blocks", "4"}).code, 2);
    EXPECT_EQ(run({"sweep-beta", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliConfig, HeaderReproducesFile) {
    const auto first = temp_file("sweep.csv");
    const auto second = temp_file("sweep2.csv");
    ASSERT_EQ(run({"sweep-theta", "--grid", "7", "--r1", "0.8", "--out", first.string()}).code, 0);
    ASSERT_EQ(run({"sweep-theta", "--config", first.string(), "--out", second.string()}).code, 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    EXPECT_EQ(slurp(first), slurp(second));
    EXPECT_FALSE(slurp(first).empty());
    std::filesystem::remove(first);
    std::filesystem::remove(second);
}

TEST(CliConfig, JsonConfigWithDashOrUnderscoreKeys) {
    const auto cfg = temp_file("cfg.json");
    {
        std::ofstream f(cfg);
        f << R"({"r1": 0.7, "beta-grid": 12, "format": "json"})";
    }
    const auto o = run({"sweep-beta", "--config", cfg.string(), "--r2", "0.2"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = qig::cli::Json::parse(o.out);
    EXPECT_EQ(j["r1"], 0.7);
    EXPECT_EQ(j["r2"], 0.2);
    EXPECT_EQ(j["beta_grid"], 12);
    EXPECT_EQ(j["beta"].size(), 12u);
    {
        std::ofstream f(cfg);
        f << R"({"radius": 0.7})";
    }
    EXPECT_EQ(run({"sweep-beta", "--config", cfg.string()}).code, 2);
    {
        std::ofstream f(cfg);
        f << R"({"command": "curvature"})";
    }
    EXPECT_EQ(run({"sweep-beta", "--config", cfg.string()}).code, 2);
    std::filesystem::remove(cfg);
}

TEST(CliFormat, CsvUsesFifteenDigits) {
    const auto o = run({"curvature", "--grid", "1"});
    const Csv csv = parse_csv(o.out);
    std::istringstream is(o.out);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    EXPECT_EQ(line, "r,R");
    std::getline(is, line);
    EXPECT_EQ(line, "0.5,-0.358833645004988");
}
