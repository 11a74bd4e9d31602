// Copyright 2026 The qcab Authors
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

#include "qcab/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcab/json_io.h"
#include "test_util.h"

using namespace qcab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcab");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const char *name) {
    return testutil::fixture(name);
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

}  // namespace

TEST(Cli, NoSubcommandIsUsageError) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, EcaRule126) {
    Result r = run({"eca", "--rule", "126", "--steps", "10", "--seed", "single"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 11u);
    EXPECT_EQ(rows[0], std::string(10, '.') + "#" + std::string(10, '.'));
    EXPECT_EQ(rows[1], std::string(9, '.') + "###" + std::string(9, '.'));
}

TEST(Cli, EcaRule0AndRange) {
    Result r = run({"eca", "--rule", "0", "--steps", "3", "--seed", "single"});
    ASSERT_EQ(r.code, kExitOk);
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    for (size_t i = 1; i < 4; i++) {
        EXPECT_EQ(rows[i].find('#'), std::string::npos);
    }
    EXPECT_EQ(run({"eca", "--rule", "300", "--steps", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"eca", "--rule", "30", "--steps", "-1"}).code, kExitUsage);
}

TEST(Cli, EcaPbmAndRingCheck) {
    Result r = run({"--format", "pbm", "eca", "--rule", "0", "--steps", "1", "--seed", "single"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "P1\n3 2\n0 1 0\n0 0 0\n");
    EXPECT_EQ(run({"eca", "--rule", "170", "--steps", "0", "--ring-check", "8"}).code, kExitOk);
    EXPECT_EQ(run({"eca", "--rule", "254", "--steps", "0", "--ring-check", "8"}).code, kExitFailure);
}

TEST(Cli, Ca2d) {
    Result r = run({"ca2d", "--rule", "life", "--pattern", "blinker", "--steps", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find('#'), std::string::npos);
    EXPECT_EQ(run({"ca2d", "--rule", "life", "--pattern", fx("three_state_grid.txt"), "--steps", "1"}).code,
              kExitFailure);
    EXPECT_EQ(run({"ca2d", "--rule", fx("rule90_2d.json"), "--pattern", "glider", "--steps", "1"}).code, kExitOk);
    EXPECT_EQ(run({"ca2d", "--rule", fx("malformed.json"), "--pattern", "glider", "--steps", "1"}).code, kExitUsage);
}

TEST(Cli, QcaCheck) {
    Result ok = run({"qca-check", "--spec", fx("epr_pqca.json"), "--pqca", "--window", "4"});
    EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
    Json j = parse_json(ok.out);
    EXPECT_TRUE(j["local_probability"]["ok"].get<bool>());
    EXPECT_EQ(run({"qca-check", "--spec", fx("hadamard_qca.json")}).code, kExitOk);

    Result broken = run({"qca-check", "--spec", fx("broken_qca.json")});
    EXPECT_EQ(broken.code, kExitFailure);
    Json b = parse_json(broken.out);
    EXPECT_FALSE(b["local_probability"]["ok"].get<bool>());
    EXPECT_FALSE(b["local_probability"]["worst_tuple"].empty());

    EXPECT_EQ(run({"qca-check", "--spec", fx("malformed.json")}).code, kExitUsage);
    EXPECT_EQ(run({"qca-check", "--spec", fx("no_such_file.json")}).code, kExitUsage);
}

TEST(Cli, QcaRun) {
    Result r = run({"qca-run", "--spec", fx("hadamard_qca.json"), "--init", "0:1", "--steps", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Json j = parse_json(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[1].size(), 2u);
    EXPECT_EQ(j[2].size(), 1u);
    EXPECT_EQ(run({"qca-run", "--spec", fx("hadamard_qca.json"), "--init-file", fx("not_normalized.json"), "--steps",
                   "1"})
                  .code,
              kExitFailure);
    EXPECT_EQ(run({"qca-run", "--spec", fx("hadamard_qca.json"), "--init", "0:zz", "--steps", "1"}).code, kExitUsage);
}

TEST(Cli, PqcaEpr) {
    Result r = run({"pqca-epr", "--steps", "5"});
    ASSERT_EQ(r.code, kExitOk);
    Json j = parse_json(r.out);
    ASSERT_EQ(j.size(), 5u);
    for (const auto &step : j) {
        ASSERT_EQ(step.size(), 2u);
        for (const auto &term : step) {
            double mag = std::hypot(term["re"].get<double>(), term["im"].get<double>());
            EXPECT_NEAR(mag, 0.7071067811865476, 1e-12);
        }
    }
}

TEST(Cli, PqcaRun) {
    Result r = run({"pqca-run", "--spec", fx("epr_pqca.json"), "--init", "-1:(0,0,-),1:(+,0,0)", "--steps", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Result e = run({"pqca-epr", "--steps", "1"});
    Json a = parse_json(r.out);
    Json b = parse_json(e.out);
    EXPECT_EQ(a.back(), b.back());
    EXPECT_EQ(run({"pqca-run", "--spec", fx("epr_pqca.json"), "--init-file", fx("not_normalized.json"), "--steps",
                   "1"})
                  .code,
              kExitFailure);
}

TEST(Cli, BqcaRun) {
    Result r = run({"bqca-run", "--n", "4", "--schedule", fx("schedule.json"), "--steps", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Json j = parse_json(r.out);
    EXPECT_LE(j["oracle_max_difference"].get<double>(), 1e-10);
    EXPECT_EQ(j["final"].size(), 4u);
    EXPECT_EQ(run({"bqca-run", "--n", "4", "--schedule", fx("bad_schedule.json"), "--steps", "2"}).code,
              kExitFailure);
    EXPECT_EQ(run({"bqca-run", "--n", "4", "--schedule", fx("schedule.json"), "--steps", "2", "--init", "01"}).code,
              kExitUsage);
}

TEST(Cli, QtmRunAndCheck) {
    Result r = run({"qtm-run", "--machine", fx("right_mover.json"), "--input", "", "--steps", "1", "--k", "0",
                    "--accept", "a"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Json j = parse_json(r.out);
    EXPECT_NEAR(j["acceptance"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(run({"qtm-run", "--machine", fx("coin_literal.json"), "--steps", "3"}).code, kExitFailure);
    EXPECT_EQ(run({"qtm-check", "--machine", fx("right_mover.json"), "--window", "6"}).code, kExitOk);
    EXPECT_EQ(run({"qtm-check", "--machine", fx("bad_coin.json")}).code, kExitFailure);
}

TEST(Cli, CompileAndEquiv) {
    Result c = run({"compile-qtm", "--in", fx("coin.json")});
    ASSERT_EQ(c.code, kExitOk) << c.err;
    PqcaSpec spec = pqca_spec_from_json(parse_json(c.out));
    EXPECT_TRUE(check_pqca_unitary(spec));
    Result bad = run({"compile-qtm", "--in", fx("bad_coin.json")});
    EXPECT_EQ(bad.code, kExitFailure);
    EXPECT_NE(bad.err.find("offending columns"), std::string::npos);
    EXPECT_EQ(run({"compile-qtm", "--in", fx("two_way.json")}).code, kExitFailure);

    Result e = run({"equiv", "--machine", fx("coin.json"), "--input", "", "--steps", "1", "--k", "0", "--accept", "a"});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    Json j = parse_json(e.out);
    EXPECT_NEAR(j["p_qtm"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["p_pqca"].get<double>(), 0.5, 1e-12);
    EXPECT_LT(j["delta"].get<double>(), 1e-10);
    EXPECT_EQ(run({"equiv", "--machine", fx("bad_coin.json"), "--steps", "1", "--accept", "a"}).code, kExitFailure);
    EXPECT_EQ(run({"equiv", "--machine", fx("coin.json"), "--steps", "1"}).code, kExitUsage);
}

TEST(Cli, Interferometer) {
    Json clear = parse_json(run({"interferometer"}).out);
    EXPECT_NEAR(clear["A"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(clear["B"].get<double>(), 1.0, 1e-12);
    Json blocked = parse_json(run({"interferometer", "--obstacle"}).out);
    EXPECT_NEAR(blocked["A"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(blocked["B"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, GatesDemo) {
    Result r = run({"gates-demo", "--n", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Json j = parse_json(r.out);
    EXPECT_TRUE(j.contains("cnot_table"));
    EXPECT_EQ(j["hadamard_all"].size(), 4u);
    EXPECT_EQ(run({"gates-demo", "--gate-file", fx("nonunitary_gate.json")}).code, kExitFailure);
    EXPECT_EQ(run({"gates-demo", "--n", "13"}).code, kExitUsage);
}

TEST(Cli, OutFlagWritesFile) {
    auto path = std::filesystem::temp_directory_path() / "qcab_cli_out_test.json";
    std::filesystem::remove(path);
    Result r = run({"--out", path.string(), "interferometer", "--obstacle"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), run({"interferometer", "--obstacle"}).out);
    std::filesystem::remove(path);
}

TEST(Cli, FormatRejectedWhereUnsupported) {
    EXPECT_EQ(run({"--format", "pbm", "interferometer"}).code, kExitUsage);
    EXPECT_EQ(run({"--format", "svg", "interferometer"}).code, kExitUsage);
}

TEST(Cli, ToleranceOverrides) {
    EXPECT_EQ(run({"--tolerance-norm", "0", "interferometer"}).code, kExitUsage);
    Result loose = run({"--tolerance-unitary", "1.5", "gates-demo", "--gate-file", fx("nonunitary_gate.json")});
    EXPECT_EQ(loose.code, kExitOk) << loose.err;
}
