/*
 *   Copyright 2026 The fingroup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end checks of the installed CLI contract: exit codes
// (0 success, 1 domain failure, 2 usage/parse), output formats, and
// round-trip fidelity of printed numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingroup/algebra.hpp"
#include "fingroup/events.hpp"
#include "fingroup/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(FINGROUP_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() /
               ("fingroup_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl - pos));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return lines;
}

const TempDir& tmp() {
    static TempDir dir;
    return dir;
}

std::string exp_factor() {
    static const std::string path =
        tmp().file("exp.json", R"({"kind":"exponential","delta":0.05})");
    return path;
}

} // namespace

TEST_CASE("validate: conforming spec exits 0") {
    const RunResult r = run_cli("--factor " + exp_factor() + " validate");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("reciprocity") != std::string::npos);
}

TEST_CASE("validate: parse failures exit 2") {
    const std::string bad_kind =
        tmp().file("bad_kind.json", R"({"kind":"simple_interest","rate":0.05})");
    CHECK(run_cli("--factor " + bad_kind + " validate").exit_code == 2);

    const std::string bad_samples = tmp().file(
        "bad_samples.json",
        R"({"kind":"tabulated_odd_exp","samples":[[2.0,0.1],[1.0,0.2]]})");
    CHECK(run_cli("--factor " + bad_samples + " validate").exit_code == 2);

    const std::string not_json = tmp().file("not_json.json", "{oops");
    CHECK(run_cli("--factor " + not_json + " validate").exit_code == 2);

    CHECK(run_cli("--factor " + tmp().path("missing.json") + " validate").exit_code == 2);
}

TEST_CASE("product: result event round-trips") {
    const RunResult r = run_cli("--factor " + exp_factor() + " product 1,2,100 3,1,50");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    const fingroup::Event e = fingroup::parse_event(lines[0]);
    CHECK(e.t == 4.0);
    CHECK(e.h == 3.0);
    CHECK(e.c == doctest::Approx(5000.0).epsilon(1e-12));

    // parsing the printed line reproduces the computed event bitwise
    const fingroup::CapFactor f = fingroup::CapFactor::exponential(0.05);
    CHECK(e == fingroup::f_product(f, {1, 2, 100}, {3, 1, 50}));
}

TEST_CASE("product: --anti negates the capital") {
    const RunResult r =
        run_cli("--factor " + exp_factor() + " product --anti 1,2,100 3,1,50");
    CHECK(r.exit_code == 0);
    const fingroup::Event e = fingroup::parse_event(lines_of(r.out)[0]);
    CHECK(e.c == doctest::Approx(-5000.0).epsilon(1e-12));
}

TEST_CASE("product: centered") {
    const RunResult r =
        run_cli("--factor " + exp_factor() + " product --center 1,1,10 1,2,100 3,1,50");
    CHECK(r.exit_code == 0);
    const fingroup::Event e = fingroup::parse_event(lines_of(r.out)[0]);
    CHECK(e.t == 3.0);
    CHECK(e.h == 2.0);
    CHECK(e.c == doctest::Approx(500.0).epsilon(1e-12));

    CHECK(run_cli("--factor " + exp_factor() +
                  " product --center 0,0,0 1,2,100 3,1,50")
              .exit_code == 1);
}

TEST_CASE("product: malformed event literal exits 2") {
    CHECK(run_cli("--factor " + exp_factor() + " product 1,2 3,1,50").exit_code == 2);
    CHECK(run_cli("--factor " + exp_factor() + " product 1,2,x 3,1,50").exit_code == 2);
}

TEST_CASE("evolve: CSV of the unit event") {
    const RunResult r =
        run_cli("--factor " + exp_factor() + " evolve 0,0,1 --from 0 --to 2 --steps 2");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] == "t,h,c");
    CHECK(lines[1] == "0,0,1"); // base row is bitwise exact
    const fingroup::Event row1 = fingroup::parse_event(lines[2]);
    CHECK(row1.t == 1.0);
    CHECK(row1.h == 1.0);
    CHECK(row1.c == doctest::Approx(std::exp(0.05)).epsilon(1e-13));
    const fingroup::Event row2 = fingroup::parse_event(lines[3]);
    CHECK(row2.c == doctest::Approx(std::exp(0.1)).epsilon(1e-13));
}

TEST_CASE("evolve: base event row reproduces e0 exactly") {
    const RunResult r =
        run_cli("--factor " + exp_factor() + " evolve 1,2,100 --from 1 --to 1 --steps 1");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[1] == "1,2,100");
}

TEST_CASE("evolve: zero-capital base is allowed") {
    const RunResult r =
        run_cli("--factor " + exp_factor() + " evolve 1,2,0 --from 0 --to 4 --steps 4");
    CHECK(r.exit_code == 0);
    for (std::size_t i = 1; i < lines_of(r.out).size(); ++i) {
        const fingroup::Event row = fingroup::parse_event(lines_of(r.out)[i]);
        CHECK(row.c == 0.0);
    }
}

TEST_CASE("evolve: bad ranges exit 2") {
    CHECK(run_cli("--factor " + exp_factor() + " evolve 0,0,1 --from 0 --to 2 --steps 0")
              .exit_code == 2);
    CHECK(run_cli("--factor " + exp_factor() + " evolve 0,0,1 --from 3 --to 2 --steps 5")
              .exit_code == 2);
}

TEST_CASE("evolve: --out writes the file") {
    const std::string out = tmp().path("curve.csv");
    const RunResult r = run_cli("--factor " + exp_factor() + " --out " + out +
                                " evolve 0,0,1 --from 0 --to 1 --steps 1");
    CHECK(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,h,c");
}

TEST_CASE("verify: all laws pass on the example factor") {
    const RunResult r = run_cli("--factor " + exp_factor() + " verify --all --out " +
                                tmp().path("report.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("T8-homomorphism") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    std::ifstream report(tmp().path("report.json"));
    REQUIRE(report.good());
    std::string text((std::istreambuf_iterator<char>(report)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("\"law_id\"") != std::string::npos);
}

TEST_CASE("verify: single law and unknown law") {
    CHECK(run_cli("--factor " + exp_factor() + " verify --law T1-assoc").exit_code == 0);
    const RunResult bad =
        run_cli("--factor " + exp_factor() + " verify --law nonsense", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("T1-assoc") != std::string::npos); // lists valid ids
    CHECK(run_cli("--factor " + exp_factor() + " verify").exit_code == 2);
}

TEST_CASE("exp: tangent line and homomorphism check") {
    const RunResult r = run_cli("--factor " + exp_factor() + " exp 1 1,2,100");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "1,1,5");
    CHECK(lines[1].find("PASS") != std::string::npos);

    const RunResult origin = run_cli("--factor " + exp_factor() + " exp 0 0,0,1");
    CHECK(origin.exit_code == 0);
    CHECK(lines_of(origin.out)[0] == "1,1,0.05");

    CHECK(run_cli("--factor " + exp_factor() + " exp 0 0,0,0").exit_code == 1);
}

TEST_CASE("verify reports are identical with SIMD disabled") {
    const std::string args = "--factor " + exp_factor() + " --seed 5 verify --all";
    const RunResult with_simd = run_cli(args);
    CHECK(with_simd.exit_code == 0);
    const std::string cmd = "FINGROUP_NO_SIMD=1 " + std::string(FINGROUP_CLI_PATH) +
                            " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string scalar_out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) scalar_out.append(buf, n);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(scalar_out == with_simd.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("validate").exit_code == 2);          // missing --factor
    CHECK(run_cli("--factor " + exp_factor()).exit_code == 2); // missing subcommand
    CHECK(run_cli("--factor " + exp_factor() + " frobnicate").exit_code == 2);
}
