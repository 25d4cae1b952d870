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

#include <json.hpp>

#include <string>

namespace nsi {

using Json = nlohmann::ordered_json;

/// {"w0":[..],"w1":[..],"strategy0":{..},"strategy1":{..},"iterations":N,"policy":"..","stats":[..]}
Json to_json(const SolveResult& result, bool with_timing = false, bool with_valuation = false);

/// {"<original id>": "<profile>"} over the arena's game nodes.
Json valuation_to_json(const EscapeArena& arena, const Valuation& values);

/// "W0: ...\nW1: ...\nstrategy0: ...\nstrategy1: ...\niterations: N\n"
std::string format_result(const SolveResult& result);

/// Space-separated ids, or "(empty)".
std::string format_node_list(const std::vector<NodeId>& nodes);

} // namespace nsi
