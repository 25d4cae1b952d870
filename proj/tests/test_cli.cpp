/*
 * Copyright 2026 The nsi Authors
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

#include "nsi/game.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string command = std::string(NSI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::filesystem::path golden = std::filesystem::path(NSI_TEST_DIR) / "golden";
const std::filesystem::path corpus = std::filesystem::path(NSI_TEST_DIR) / "data" / "pgsolver";

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("nsi_cli_" + name);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("solve golden files")
{
    for (const char* stem : {"even_self_loop", "odd_self_loop", "player1_odd_loop"}) {
        CAPTURE(stem);
        const Run r = run("solve " + (golden / (std::string(stem) + ".pg")).string());
        CHECK(r.code == 0);
        CHECK(r.out == slurp(golden / (std::string(stem) + ".out")));
    }
    const Run json = run("solve --json " + (golden / "even_self_loop.pg").string());
    CHECK(json.out == slurp(golden / "even_self_loop.json"));

    const Run piped = run("solve < " + (golden / "odd_self_loop.pg").string());
    CHECK(piped.out.find("W0: (empty)\n") != std::string::npos);
}

TEST_CASE("solve with every policy and backend")
{
    for (const char* policy : {"all-switches", "deterministic-all", "single-random"}) {
        for (const char* backend : {"dijkstra", "bellman-ford"}) {
            const Run r = run("solve --policy " + std::string(policy) + " --backend " + backend + " " +
                              (golden / "even_self_loop.pg").string());
            CHECK(r.code == 0);
            CHECK(r.out.rfind("W0: 0\n", 0) == 0);
        }
    }
    CHECK(run("solve --policy nope " + (golden / "even_self_loop.pg").string()).code == 2);
}

TEST_CASE("malformed input")
{
    const auto bad = scratch("bad.pg");
    std::ofstream(bad) << "parity 1;\n0 1 0;\n";
    CHECK(run("solve " + bad.string()).code == 2);
    CHECK(run("check " + bad.string()).code == 2);
    CHECK(run("trace " + bad.string()).code == 2);
    CHECK(run("solve " + scratch("missing.pg").string()).code == 2);
    CHECK(run("frobnicate").code == 2);
    std::filesystem::remove(bad);
}

TEST_CASE("gen")
{
    const std::string args = "gen --nodes 40 --degree 2 --colors 5 --seed 99";
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("gen --nodes 40 --degree 2 --colors 5 --seed 100").out);

    const nsi::ParityGame g = nsi::parse_pgsolver(a.out);
    CHECK(g.size() == 40);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto n = g.successors(static_cast<nsi::NodeId>(v)).size();
        CHECK(n >= 1);
        CHECK(n <= 2);
        CHECK(g.color(static_cast<nsi::NodeId>(v)) < 5);
    }

    CHECK(run("gen --nodes 0").code == 2);
    CHECK(run("gen --nodes 5 --degree 0").code == 2);
    CHECK(run("gen --nodes 5 --colors 0").code == 2);
    CHECK(run("gen --nodes 5 --p0-fraction 1.5").code == 2);
}

TEST_CASE("bench")
{
    const Run empty = run("bench --count 0");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    const Run r = run("bench --count 3 --sizes 6,8 --policies all-switches,deterministic-all --seed 4");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    std::string last;
    while (std::getline(lines, line)) {
        ++count;
        last = line;
    }
    CHECK(count == 3 * 2 * 2 + 1);
    CHECK(last.find("max_ratio") != std::string::npos);
    CHECK(r.out == run("bench --count 3 --sizes 6,8 --policies all-switches,deterministic-all --seed 4").out);
    CHECK(r.out.find("wall_ms") == std::string::npos);

    const auto out = scratch("bench.jsonl");
    CHECK(run("bench --count 2 --sizes 5 --out " + out.string()).code == 0);
    CHECK(!slurp(out).empty());
    std::filesystem::remove(out);
}

TEST_CASE("check")
{
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
        if (entry.path().filename().string().rfind("gen_", 0) == 0) continue;
        CAPTURE(entry.path().string());
        CHECK(run("check " + entry.path().string()).code == 0);
    }
    for (const char* stem : {"even_self_loop", "odd_self_loop", "player1_odd_loop"}) {
        CHECK(run("check " + (golden / (std::string(stem) + ".pg")).string()).code == 0);
    }
    const Run fuzz = run("check --count 1000 --seed 1");
    CHECK(fuzz.code == 0);
    CHECK(fuzz.out == "ok: 1000 games\n");

    const std::string big = "SOLVER_ORACLE_CAP=1 " + std::string(NSI_CLI_PATH) + " check " +
                            (corpus / "dense.gm").string() + " 2>&1";
    FILE* pipe = popen(big.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[256] = {};
    const std::size_t got = std::fread(buffer, 1, sizeof buffer - 1, pipe);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(std::string(buffer, got).find("instance too large for oracle") != std::string::npos);
}

TEST_CASE("trace")
{
    const Run odd = run("trace " + (golden / "odd_self_loop.pg").string());
    CHECK(odd.code == 0);
    CHECK(odd.out == slurp(golden / "odd_self_loop.trace"));
    CHECK(odd.out.find("iteration 2") == std::string::npos);

    const Run even = run("trace " + (golden / "even_self_loop.pg").string());
    CHECK(even.out == slurp(golden / "even_self_loop.trace"));
    CHECK(even.out.find("0 +inf -> (0,0,1)") != std::string::npos);
    CHECK(even.out.find("values: 0=+inf") != std::string::npos);

    const std::string args = "trace --policy single-random --seed 3 " + (corpus / "dense.gm").string();
    CHECK(run(args).out == run(args).out);
}

}
