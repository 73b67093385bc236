/* Copyright 2026 The pbe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PBE_CLI_COMMANDS_HPP_
#define PBE_CLI_COMMANDS_HPP_

#include <ostream>

#include "pbe/cli/config.hpp"

namespace pbe::cli {

inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_failure = 1;
inline constexpr int k_exit_config = 2;    // bad config, missing or empty inputs
inline constexpr int k_exit_endpoint = 3;  // proposer endpoint unavailable

inline constexpr int k_output_schema_version = 1;

// Each command reads its inputs from the config, writes artifacts under
// output.dir, prints a short summary to `out` and returns an exit code.
// Errors are reported on `err`, never thrown.

/// results.jsonl (header line, then one result per task), metrics.json and
/// timings.jsonl. Only timings vary between identical runs.
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// tune.jsonl from the seed file gen.seed.
int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);

/// adapt_trace.jsonl and seed_final.jsonl from adapt.seed and adapt.tasks.
/// Grammar mode refits the configured grammar each round. LLM mode writes
/// the cumulative seed as a tune file and waits for adapt.ready_url to
/// answer 200 before sampling from the endpoint.
int cmd_adapt(const RunConfig& config, std::ostream& out, std::ostream& err);

/// difficulty.csv and difficulty_summary.txt for the solved tasks in
/// analyze.results.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Blocks serving HTTP until the process is stopped.
int cmd_serve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line: pbe <solve|gen|adapt|analyze|serve|version> [options].
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbe::cli

#endif  // PBE_CLI_COMMANDS_HPP_
