/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstdint>
#include <string>

namespace hoct {

/// Runs the experiments described by a JSON config and returns CSV.
///
/// Config schema:
/// {
///   "experiments": [ {
///     "name": "accept-k2",
///     "generator": { "model": "clusterable" | "far_extra_components" |
///                    "far_shattered" | "file",
///                    "n": 1000, "k": 2,
///                    "intra": "tri_regular" | "clique_chain",
///                    "cross_edges": 3, "path": "graph.txt" },
///     "k": 2, "eps": 0.5, "psi": 0.5,
///     "mode": "practical" | "paper",
///     "scale": { "s": 4e-4, "l": 1e-2, "m": 2.5e-4 },
///     "trials": 30, "seed": 42
///   } ]
/// }
///
/// One CSV row per trial; per-experiment aggregates are appended as
/// '# summary' comment lines. Every field is deterministic: identical
/// config + seed gives byte-identical output (wall time goes to the runtime
/// log, not the CSV). Schema violations throw before any trial runs.
std::string run_experiments(const std::string& config_json, int threads = 1,
                            std::string* runtime_log = nullptr);

/// Fixed column header shared by run_experiments and the CLI.
const char* experiment_csv_header();

}  // namespace hoct
