// Copyright 2026 The quditsim Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.h"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace quditsim::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "quditsim");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST(cli, simulate_clifford_circuit) {
    std::string path = write_temp("clifford.qc", "d 3\nn 2\nH 0\nCSUM 0 1\nMEASURE 0\nMEASURE 1\n");
    Result r = invoke({"simulate", "--circuit", path, "--samples", "100"});
    ASSERT_EQ(r.code, kOk) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 101u);
    for (size_t i = 0; i < 100; i++) {
        auto j = nlohmann::json::parse(ls[i]);
        EXPECT_EQ(j["chi"], 1);
        EXPECT_EQ(j["outcomes"][0], j["outcomes"][1]);
    }
    EXPECT_EQ(nlohmann::json::parse(ls[100])["footer"]["chi"], 1);
}

TEST(cli, simulate_reports_chi_from_certificate) {
    std::string path = write_temp("one_t.qc", "d 3\nn 1\nH 0\nT 0\nH 0\nMEASURE 0\n");
    Result r = invoke({"simulate", "--circuit", path, "--samples", "5", "--delta", "0.1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    auto footer = nlohmann::json::parse(lines(r.out).back())["footer"];
    int k = footer["k"];
    EXPECT_EQ(footer["chi"], k == 0 ? 1 : (k == 1 ? 3 : -1));
    EXPECT_EQ(nlohmann::json::parse(lines(r.out)[0])["chi"], footer["chi"]);
}

TEST(cli, simulate_is_deterministic) {
    std::string path = write_temp("det.qc", "d 3\nn 2\nH 0\nT 0\nCSUM 0 1\nT 1\nH 1\nMEASURE 0\nMEASURE 1\n");
    std::vector<std::string> args{"simulate", "--circuit", path, "--samples", "200", "--seed", "17", "--no-timing"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(cli, bad_circuit_is_usage_error_with_line) {
    std::string path = write_temp("bad.qc", "d 3\nn 1\nH 0\nFROB 0\n");
    Result r = invoke({"simulate", "--circuit", path});
    EXPECT_EQ(r.code, kUsageError);
    EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"simulate", "--circuit", "/nonexistent/file.qc"}).code, kUsageError);
    EXPECT_EQ(invoke({"simulate"}).code, kUsageError);
    EXPECT_EQ(invoke({}).code, kUsageError);
    EXPECT_EQ(invoke({"simulate", "--circuit", path, "--delta", "2"}).code, kUsageError);
}

TEST(cli, table_rows) {
    Result r = invoke({"table", "--format", "csv"});
    ASSERT_EQ(r.code, kOk);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "d,diagonal,p,alpha_abs,kappa");
    EXPECT_EQ(ls[1], "3,\"diag(e^(2pi i*1/9),1,e^(2pi i*-1/9))\",0,0.844030,0.3087");
    EXPECT_NE(ls[2].find("0.723607"), std::string::npos);
    EXPECT_NE(ls[3].find("0.677277"), std::string::npos);
    EXPECT_EQ(invoke({"table", "--d", "9"}).code, kUsageError);
    EXPECT_EQ(invoke({"table", "--format", "xml"}).code, kUsageError);
}

TEST(cli, rank_reports_and_repeats) {
    std::vector<std::string> args{"rank", "--d", "3", "--t", "1", "--delta", "0.5", "--seed", "3", "--format", "json"};
    Result r = invoke(args);
    ASSERT_EQ(r.code, kOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j["k"].get<int>(), 1);
    EXPECT_EQ(invoke(args).out, r.out);

    Result strict = invoke({"rank", "--d", "3", "--t", "1", "--delta", "0.9", "--strict"});
    EXPECT_EQ(strict.code, kRuntimeFailure);
    EXPECT_NE(strict.err.find("smallest reachable delta"), std::string::npos);
    EXPECT_EQ(invoke({"rank", "--d", "3", "--t", "1", "--delta", "0.9"}).code, kOk);
}

TEST(cli, check_levels) {
    Result fast = invoke({"check", "--level", "fast"});
    EXPECT_EQ(fast.code, kOk) << fast.out;
    EXPECT_NE(fast.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(invoke({"check", "--level", "bogus"}).code, kUsageError);
}

TEST(cli, output_file) {
    std::string circuit = write_temp("out.qc", "d 5\nn 1\nH 0\nMEASURE 0\n");
    std::string target = ::testing::TempDir() + "samples.jsonl";
    Result r = invoke({"simulate", "--circuit", circuit, "--samples", "10", "--output", target});
    ASSERT_EQ(r.code, kOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(target);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(lines(ss.str()).size(), 11u);
    std::remove(target.c_str());
}

TEST(cli, phase_labels) {
    EXPECT_EQ(phase_label(5, 0), "1");
    EXPECT_EQ(phase_label(5, 40), "w");
    EXPECT_EQ(phase_label(5, -80), "w^-2");
    EXPECT_EQ(phase_label(3, 8), "e^(2pi i*1/9)");
}
