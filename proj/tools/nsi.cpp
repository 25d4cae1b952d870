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

#include "nsi/bench.hpp"
#include "nsi/errors.hpp"
#include "nsi/generator.hpp"
#include "nsi/iteration.hpp"
#include "nsi/oracle.hpp"
#include "nsi/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct SolveFlags {
    std::string input;
    std::string policy = "all-switches";
    std::string backend = "dijkstra";
    std::uint64_t seed = 0;
    int audit = 16;
    bool json = false;
    bool timing = false;
    bool valuation = false;
};

int run_solve(const SolveFlags& flags)
{
    const nsi::ParityGame game = nsi::parse_pgsolver(read_input(flags.input));
    nsi::SolveOptions options;
    options.policy = nsi::parse_policy(flags.policy, flags.seed);
    options.backend = nsi::parse_backend(flags.backend);
    options.audit_interval = flags.audit;
    const nsi::SolveResult result = nsi::solve(game, options);
    if (flags.json) {
        std::cout << nsi::to_json(result, flags.timing, flags.valuation).dump() << '\n';
    } else {
        std::cout << nsi::format_result(result);
    }
    return kExitOk;
}

int run_gen(const nsi::GeneratorParams& params)
{
    std::cout << nsi::serialize_pgsolver(nsi::generate_game(params));
    return kExitOk;
}

struct BenchFlags {
    std::size_t count = 100;
    std::string sizes = "10,20,30";
    std::string policies = "all-switches";
    std::uint64_t seed = 1;
    std::size_t degree = 2;
    int colors = 4;
    double p0_fraction = 0.5;
    std::string backend = "dijkstra";
    std::string out;
    bool timing = false;
};

int run_bench(const BenchFlags& flags)
{
    nsi::BenchOptions options;
    options.count = flags.count;
    options.sizes.clear();
    for (const auto& s : split_list(flags.sizes)) {
        std::size_t pos = 0;
        const unsigned long value = std::stoul(s, &pos);
        if (pos != s.size() || value == 0) throw UsageError("invalid size '" + s + "'");
        options.sizes.push_back(value);
    }
    options.policies.clear();
    for (const auto& p : split_list(flags.policies)) options.policies.push_back(nsi::parse_policy(p, flags.seed));
    options.seed = flags.seed;
    options.degree = flags.degree;
    options.colors = flags.colors;
    options.p0_fraction = flags.p0_fraction;
    options.backend = nsi::parse_backend(flags.backend);
    options.timing = flags.timing;

    std::ofstream file;
    if (!flags.out.empty()) {
        file.open(flags.out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + flags.out);
    }
    std::ostream& out = flags.out.empty() ? std::cout : file;
    if (options.count == 0) return kExitOk;

    const nsi::BenchReport report =
        nsi::run_bench(options, [&](const nsi::BenchRecord& r) { out << nsi::to_json(r, flags.timing).dump() << '\n'; });
    out << nsi::aggregate_json(report).dump() << '\n';
    return kExitOk;
}

struct CheckFlags {
    std::string input;
    std::size_t count = 0;
    std::uint64_t seed = 1;
    std::string artifacts;
};

std::vector<nsi::SolveOptions> all_configurations(std::uint64_t seed)
{
    std::vector<nsi::SolveOptions> out;
    for (auto backend : {nsi::Backend::BellmanFord, nsi::Backend::Dijkstra}) {
        for (const auto& policy : {nsi::SwitchPolicy::all_switches(), nsi::SwitchPolicy::deterministic_all(),
                                   nsi::SwitchPolicy::single_random(seed)}) {
            nsi::SolveOptions options;
            options.policy = policy;
            options.backend = backend;
            options.audit_interval = 1;
            out.push_back(options);
        }
    }
    return out;
}

int check_game(const nsi::ParityGame& game, std::uint64_t seed, const std::string& stem, const std::string& artifacts,
               std::uint64_t cap)
{
    for (const auto& options : all_configurations(seed)) {
        const nsi::CrosscheckReport report = nsi::crosscheck(game, options, cap);
        if (report.agree) continue;
        std::cerr << "mismatch (" << stem << "):\n" << report.diff << '\n';
        if (!artifacts.empty()) nsi::write_mismatch_artifacts(artifacts, stem, game, report);
        return kExitMismatch;
    }
    return kExitOk;
}

int run_check(const CheckFlags& flags)
{
    const std::uint64_t cap = nsi::oracle_cap_from_env();
    try {
        if (flags.count == 0) {
            const nsi::ParityGame game = nsi::parse_pgsolver(read_input(flags.input));
            const int code = check_game(game, flags.seed, "input", flags.artifacts, cap);
            if (code == kExitOk) std::cout << "ok\n";
            return code;
        }
        for (std::size_t i = 0; i < flags.count; ++i) {
            const std::uint64_t seed = flags.seed + i;
            const nsi::ParityGame game = nsi::random_small_game(seed);
            const int code = check_game(game, seed, "seed-" + std::to_string(seed), flags.artifacts, cap);
            if (code != kExitOk) return code;
        }
        std::cout << "ok: " << flags.count << " games\n";
        return kExitOk;
    } catch (const nsi::LimitExceeded&) {
        std::cerr << "instance too large for oracle\n";
        return kExitUsage;
    }
}

struct TraceFlags {
    std::string input;
    std::string policy = "all-switches";
    std::uint64_t seed = 0;
};

std::string node_label(const nsi::EscapeArena& arena, nsi::NodeId v)
{
    return arena.is_sink(v) ? "bot" : std::to_string(arena.original_id(v));
}

std::string format_edges(const nsi::EscapeArena& arena, const nsi::Strategy& edges)
{
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < arena.node_count(); ++i) {
        const auto v = static_cast<nsi::NodeId>(i);
        const auto choices = edges.choices(v);
        if (choices.empty()) continue;
        out << (any ? " " : "") << node_label(arena, v) << "->";
        any = true;
        if (choices.size() == 1) {
            out << node_label(arena, choices.front());
            continue;
        }
        out << '{';
        for (std::size_t k = 0; k < choices.size(); ++k) out << (k ? "," : "") << node_label(arena, choices[k]);
        out << '}';
    }
    return any ? out.str() : "(none)";
}

int run_trace(const TraceFlags& flags)
{
    const nsi::ParityGame game = nsi::parse_pgsolver(read_input(flags.input));
    nsi::SolveOptions options;
    options.policy = nsi::parse_policy(flags.policy, flags.seed);
    options.backend = nsi::Backend::BellmanFord;

    std::ostringstream passes;
    std::ostringstream log;
    const nsi::EscapeArena* current = nullptr;
    std::vector<std::tuple<int, nsi::NodeId, std::string, std::string>> pending;
    options.trace = [&](int pass, nsi::NodeId v, const nsi::ColorProfile& before, const nsi::ColorProfile& after) {
        pending.emplace_back(pass, v, before.to_string(), after.to_string());
    };
    options.on_iteration = [&](const nsi::IterationSnapshot& snap) {
        current = &snap.arena;
        log << "iteration " << snap.iteration << '\n';
        log << "  strategy: " << format_edges(snap.arena, snap.strategy) << '\n';
        for (const auto& [pass, v, before, after] : pending) {
            log << "  pass " << pass << ": " << node_label(snap.arena, v) << ' ' << before << " -> " << after << '\n';
        }
        pending.clear();
        log << "  values:";
        for (std::size_t i = 0; i < snap.arena.node_count(); ++i) {
            const auto v = static_cast<nsi::NodeId>(i);
            log << ' ' << node_label(snap.arena, v) << '=' << snap.valuation[v].to_string();
        }
        log << '\n';
        log << "  strict: " << format_edges(snap.arena, snap.improvements.strict) << '\n';
    };

    const nsi::SolveResult result = nsi::solve(game, options);
    (void)current;
    std::cout << "pre-won: " << nsi::format_node_list(result.pre_won) << '\n';
    std::cout << log.str();
    std::cout << nsi::format_result(result);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parity game solver by non-deterministic strategy iteration"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "Solve a PGSolver game");
    solve->add_option("input", solve_flags.input, "Input file (stdin if omitted or '-')");
    solve->add_option("--policy", solve_flags.policy, "all-switches | deterministic-all | single-random");
    solve->add_option("--backend", solve_flags.backend, "dijkstra | bellman-ford");
    solve->add_option("--seed", solve_flags.seed, "Seed for single-random");
    solve->add_option("--audit", solve_flags.audit, "Bellman-Ford audit interval for dijkstra (0 = off)");
    solve->add_flag("--json", solve_flags.json, "Print the result as JSON");
    solve->add_flag("--timing", solve_flags.timing, "Include wall-clock times in JSON stats");
    solve->add_flag("--valuation", solve_flags.valuation, "Include the final valuation in JSON");

    nsi::GeneratorParams gen_params;
    auto* gen = app.add_subcommand("gen", "Generate a random game");
    gen->add_option("--nodes", gen_params.nodes, "Number of nodes");
    gen->add_option("--degree", gen_params.degree, "Maximal out-degree");
    gen->add_option("--colors", gen_params.colors, "Number of colors");
    gen->add_option("--p0-fraction", gen_params.p0_fraction, "Probability that a node belongs to player 0");
    gen->add_option("--seed", gen_params.seed, "Random seed");

    BenchFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Count improvement steps on generated games");
    bench->add_option("--count", bench_flags.count, "Instances per size");
    bench->add_option("--sizes", bench_flags.sizes, "Comma-separated node counts");
    bench->add_option("--policies", bench_flags.policies, "Comma-separated policies");
    bench->add_option("--seed", bench_flags.seed, "First seed");
    bench->add_option("--degree", bench_flags.degree, "Maximal out-degree");
    bench->add_option("--colors", bench_flags.colors, "Number of colors");
    bench->add_option("--p0-fraction", bench_flags.p0_fraction, "Probability that a node belongs to player 0");
    bench->add_option("--backend", bench_flags.backend, "dijkstra | bellman-ford");
    bench->add_option("--out", bench_flags.out, "Write JSON lines here instead of stdout");
    bench->add_flag("--timing", bench_flags.timing, "Include wall-clock times");

    CheckFlags check_flags;
    auto* check = app.add_subcommand("check", "Cross-check the solver against brute force");
    check->add_option("input", check_flags.input, "Input file (stdin if omitted or '-')");
    check->add_option("--count", check_flags.count, "Fuzz this many random games instead of reading input");
    check->add_option("--seed", check_flags.seed, "First fuzz seed");
    check->add_option("--artifacts", check_flags.artifacts, "Directory for mismatch artifacts");

    TraceFlags trace_flags;
    auto* trace = app.add_subcommand("trace", "Print every iteration of a solve");
    trace->add_option("input", trace_flags.input, "Input file (stdin if omitted or '-')");
    trace->add_option("--policy", trace_flags.policy, "all-switches | deterministic-all | single-random");
    trace->add_option("--seed", trace_flags.seed, "Seed for single-random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return run_solve(solve_flags);
        if (*gen) return run_gen(gen_params);
        if (*bench) return run_bench(bench_flags);
        if (*check) return run_check(check_flags);
        if (*trace) return run_trace(trace_flags);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nsi::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nsi::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
