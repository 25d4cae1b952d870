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

#pragma once

#include "nsi/iteration.hpp"
#include "nsi/report.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace nsi {

struct BenchOptions {
    std::size_t count = 100;
    std::vector<std::size_t> sizes{10, 20, 30};
    std::vector<SwitchPolicy> policies{SwitchPolicy::all_switches()};
    std::uint64_t seed = 1;
    std::size_t degree = 2;
    int colors = 4;
    double p0_fraction = 0.5;
    Backend backend = Backend::Dijkstra;
    bool timing = false;
};

struct BenchRecord {
    std::uint64_t seed = 0;
    std::size_t nodes = 0;
    std::size_t player0_nodes = 0;
    int colors = 0;
    std::size_t degree = 0;
    std::string policy;
    int iterations = 0;
    /// 3 * 1.724^|V0| when the generator degree is at most 2, otherwise the general bound.
    double bound = 0.0;
    double general_bound = 0.0;
    double wall_ms = 0.0;

    double ratio() const { return bound > 0.0 ? iterations / bound : 0.0; }
};

struct BenchReport {
    std::vector<BenchRecord> records;
    double max_ratio = 0.0;
    /// Paired instances where all-switches needed no more iterations than deterministic-all.
    std::size_t paired = 0;
    std::size_t all_switches_not_worse = 0;
};

/**
 * Solves `count` generated games per size and policy. Records are produced in
 * seed order; `on_record` sees each one as soon as it is complete. Throws
 * InvariantViolation (naming the seed) if an iteration count exceeds its bound.
 */
BenchReport run_bench(const BenchOptions& options, const std::function<void(const BenchRecord&)>& on_record = {});

Json to_json(const BenchRecord& record, bool with_timing);
Json aggregate_json(const BenchReport& report);

} // namespace nsi
