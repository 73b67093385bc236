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

#include "pbe/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "pbe/analytics/difficulty.hpp"
#include "pbe/cli/server.hpp"
#include "pbe/engine/datasets.hpp"
#include "pbe/tasks/io.hpp"

namespace pbe::cli {

using nlohmann::json;

namespace {

json artifact_header(const RunConfig& config, std::string_view schema) {
  return {{"schema", schema},
          {"version", k_output_schema_version},
          {"config_hash", config.hash()},
          {"seeds", config.seeds()},
          {"pbe_version", k_version}};
}

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return k_exit_config;
  } catch (const tasks::InvalidTask& e) {
    err << "invalid task file: " << e.what() << "\n";
    return k_exit_config;
  } catch (const engine::InvalidSeed& e) {
    err << "invalid seed file: " << e.what() << "\n";
    return k_exit_config;
  } catch (const proposer::EndpointUnavailable& e) {
    err << "endpoint unavailable: " << e.what() << "\n";
    return k_exit_endpoint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return k_exit_failure;
  }
}

std::vector<tasks::Task> load_task_file(const RunConfig& config, std::string_view section) {
  auto tasks = tasks::load_tasks(config.existing_path(section, "tasks"));
  if (tasks.empty()) throw ConfigError(std::string(section) + ".tasks contains no tasks");
  return tasks;
}

// Polls `url` until it answers 200 or the timeout passes.
bool wait_for_ready(const std::string& url, double timeout_seconds) {
  const auto scheme = url.find("://");
  const auto slash = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  const std::string origin = url.substr(0, slash);
  const std::string path = slash == std::string::npos ? "/" : url.substr(slash);
  httplib::Client client(origin);
  client.set_connection_timeout(5, 0);
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  for (;;) {
    if (auto res = client.Get(path); res && res->status == 200) return true;
    if (std::chrono::steady_clock::now() >= deadline) return false;
    std::this_thread::sleep_for(std::chrono::seconds(2));
  }
}

}  // namespace

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto tasks = load_task_file(config, "solve");
    const auto options = config.solve_options();
    DomainProposer proposer(config);
    const auto results = engine::solve_all(tasks, proposer, options, config.count("solve", "threads"));
    const auto report = tasks::score_run(results, tasks);

    json header = artifact_header(config, "pbe.results");
    header["proposer"] = proposer.id();
    header["k"] = options.k;
    std::string lines = header.dump() + "\n";
    std::string timings;
    for (const auto& r : results) {
      lines += tasks::result_to_json(r).dump() + "\n";
      timings += json{{"task_id", r.task_id}, {"wall_seconds", r.wall_seconds}}.dump() + "\n";
    }
    const auto dir = config.output_dir();
    tasks::write_file(dir / "results.jsonl", lines);
    tasks::write_file(dir / "timings.jsonl", timings);
    json metrics = artifact_header(config, "pbe.metrics");
    metrics["report"] = tasks::report_to_json(report);
    tasks::write_file(dir / "metrics.json", metrics.dump(2) + "\n");
    out << tasks::format_report(report) << "\n";
    return k_exit_ok;
  });
}

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto seed = engine::load_seed(config.existing_path("gen", "seed"), true, config.budget());
    if (seed.empty()) throw ConfigError("gen.seed contains no entries");
    const auto options = config.datagen_options();
    DomainProposer proposer(config);
    auto data = engine::generate_tune_dataset(seed, proposer, options);
    const std::string hash = config.hash();
    for (auto& r : data.records) {
      r.meta["config_hash"] = hash;
      r.meta["proposer_seed"] = config.integer("proposer", "seed");
    }
    tasks::write_file(config.output_dir() / "tune.jsonl", engine::tune_to_jsonl(data));
    out << "records " << data.records.size() << " attempts " << data.attempts << " rejected_parse "
        << data.rejected_parse << " rejected_exec " << data.rejected_exec << " duplicates "
        << data.rejected_duplicate << "\n";
    return k_exit_ok;
  });
}

int cmd_adapt(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto seed = engine::load_seed(config.existing_path("adapt", "seed"), true, config.budget());
    const auto tasks = load_task_file(config, "adapt");
    for (const auto& t : tasks)
      if (t.domain != seed.domain) throw ConfigError("adapt task '" + t.id + "' is not in the seed's domain");
    const auto options = config.adapt_options();

    engine::TrainHook hook;
    if (config.str("proposer", "kind") == "grammar") {
      hook = engine::grammar_train_hook(configured_grammar(config, seed.domain),
                                        static_cast<std::uint64_t>(config.integer("proposer", "seed")),
                                        config.real("proposer", "smoothing"));
    } else {
      const auto llm = config.llm_config();
      const std::string tune_out = config.str("adapt", "tune_out");
      const std::string ready = config.str("adapt", "ready_url");
      const double wait = config.real("adapt", "ready_timeout");
      const auto dir = config.output_dir();
      hook = [=](const engine::SeedDataset& s, int round) -> std::unique_ptr<proposer::Proposer> {
        const std::filesystem::path file =
            tune_out.empty() ? dir / ("tune_round" + std::to_string(round) + ".jsonl")
                             : std::filesystem::path(tune_out + "." + std::to_string(round));
        tasks::write_file(file, engine::tune_to_jsonl(engine::seed_to_tune(s)));
        if (!ready.empty() && !wait_for_ready(ready, wait))
          throw engine::TrainHookFailure("model not ready at " + ready + " after " + std::to_string(wait) + " s");
        return std::make_unique<proposer::LlmProposer>(llm);
      };
    }

    const auto trace = engine::adapt(std::move(seed), tasks, hook, options);
    const auto dir = config.output_dir();
    json extra = artifact_header(config, "pbe.adapt_trace");
    extra.erase("version");
    tasks::write_file(dir / "adapt_trace.jsonl", engine::trace_to_jsonl(trace, extra));
    engine::save_seed(dir / "seed_final.jsonl", trace.seed);
    for (const auto& r : trace.rounds)
      out << "round " << r.round << " seed " << r.seed_before << "->" << r.seed_after << " new "
          << r.newly_solved.size() << " cumulative " << r.cumulative_solved << (r.aborted ? " aborted" : "") << "\n";
    return k_exit_ok;
  });
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto tasks = load_task_file(config, "analyze");
    std::map<std::string, tasks::SolveResult> results;
    {
      const std::string text = tasks::read_file(config.existing_path("analyze", "results"));
      std::size_t pos = 0;
      while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        const json j = json::parse(line);
        if (j.contains("schema")) continue;  // header
        auto r = tasks::result_from_json(j);
        results.emplace(r.task_id, std::move(r));
      }
    }
    const bool grammar_mode = config.str("proposer", "kind") == "grammar";
    const std::size_t trials = config.count("analyze", "trials");
    const std::size_t k_cap = config.count("analyze", "k_cap");
    if (trials == 0 || k_cap == 0) throw ConfigError("analyze.trials and analyze.k_cap must be positive");
    DomainProposer proposer(config);

    std::vector<analytics::DifficultyRecord> records;
    std::size_t unsolved = 0, skipped = 0;
    for (const auto& task : tasks) {
      const auto it = results.find(task.id);
      if (it == results.end() || !it->second.selected) {
        ++unsolved;
        continue;
      }
      const auto& chosen = it->second.satisfying.at(*it->second.selected);
      analytics::DifficultyRecord rec;
      rec.task_id = task.id;
      try {
        rec.size = tasks::program_size(tasks::parse_program(task.domain, chosen.source));
        const auto posterior = grammar_mode ? analytics::PosteriorSource::grammar()
                               : chosen.logprob ? analytics::PosteriorSource::tokens({*chosen.logprob})
                                                : throw analytics::MissingLogprobs("no logprob for " + task.id);
        const auto dl =
            analytics::description_lengths(chosen.source, configured_grammar(config, task.domain), posterior);
        rec.prior_dl = dl.prior_dl;
        rec.posterior_dl = dl.posterior_dl;
        rec.posterior_is_prior = dl.posterior_is_prior;
      } catch (const proposer::UnderivableProgram& e) {
        err << "skipping " << task.id << ": " << e.what() << "\n";
        ++skipped;
        continue;
      } catch (const analytics::MissingLogprobs& e) {
        err << "skipping " << task.id << ": " << e.what() << "\n";
        ++skipped;
        continue;
      }
      const auto est = analytics::estimate_budget(task, proposer.for_domain(task.domain), trials, k_cap,
                                                  config.budget(), config.count("solve", "threads"));
      rec.solve_rate = est.solve_rate;
      rec.expected_budget = est.expected_budget;
      rec.mean_first_hit = est.mean_first_hit;
      records.push_back(std::move(rec));
    }

    const auto dir = config.output_dir();
    const json header = artifact_header(config, "pbe.difficulty");
    tasks::write_file(dir / "difficulty.csv", "# " + header.dump() + "\n" + analytics::difficulty_csv(records));
    std::string summary = analytics::difficulty_summary(records);
    summary += "unsolved " + std::to_string(unsolved) + " skipped " + std::to_string(skipped) + "\n";
    tasks::write_file(dir / "difficulty_summary.txt", "# " + header.dump() + "\n" + summary);
    out << summary;
    return k_exit_ok;
  });
}

int cmd_serve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Server server(config);
    const int port = server.bind(config.str("serve", "host"), static_cast<int>(config.integer("serve", "port")));
    out << "listening on " << config.str("serve", "host") << ":" << port << std::endl;
    server.listen();
    return k_exit_ok;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Programming-by-example engine: solve, generate, adapt, analyze, serve", "pbe"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  app.add_option("-c,--config", config_path, "TOML configuration file");
  app.add_option("-s,--set", overrides, "Override, e.g. budget.k=64 (repeatable)");
  app.add_option("-o,--out", out_dir, "Output directory (output.dir)");

  // Flag values land here and become overrides after parsing.
  std::vector<std::pair<std::string, std::string>> flags;
  auto bind = [&flags](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags.emplace_back(key, v); }, help);
  };

  auto* solve = app.add_subcommand("solve", "Solve every task in a task file");
  bind(solve, "-t,--tasks", "solve.tasks", "Task file (JSONL)");
  bind(solve, "-k,--samples", "budget.k", "Samples per task");
  bind(solve, "--seed", "proposer.seed", "Proposer seed");
  bind(solve, "--stop", "solve.stop", "first or exhaustive");

  auto* gen = app.add_subcommand("gen", "Generate a verified tuning dataset from a seed file");
  bind(gen, "--seed-file", "gen.seed", "Seed dataset (JSONL)");
  bind(gen, "-n,--count", "gen.n", "Records to emit");
  bind(gen, "--seed", "proposer.seed", "Proposer seed");

  auto* adapt = app.add_subcommand("adapt", "Run wake-sleep adaptation");
  bind(adapt, "--seed-file", "adapt.seed", "Seed dataset (JSONL)");
  bind(adapt, "-t,--tasks", "adapt.tasks", "Unlabeled adaptation tasks (JSONL)");
  bind(adapt, "-r,--rounds", "adapt.rounds", "Rounds");
  bind(adapt, "-k,--samples", "budget.k", "Samples per task per round");

  auto* analyze = app.add_subcommand("analyze", "Difficulty analysis of solved tasks");
  bind(analyze, "-t,--tasks", "analyze.tasks", "Task file (JSONL)");
  bind(analyze, "--results", "analyze.results", "results.jsonl from pbe solve");
  bind(analyze, "--trials", "analyze.trials", "Budget estimation trials");
  bind(analyze, "--k-cap", "analyze.k_cap", "Samples per trial");

  auto* serve = app.add_subcommand("serve", "HTTP solve service");
  bind(serve, "--host", "serve.host", "Bind address");
  bind(serve, "-p,--port", "serve.port", "Port (0 picks a free one)");

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return k_exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return k_exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return k_exit_config;
  }

  if (version->parsed()) {
    out << "pbe " << k_version << "\n";
    return k_exit_ok;
  }

  RunConfig config;
  const int rc = guarded(err, [&] {
    if (!config_path.empty()) config = RunConfig::from_toml_file(config_path);
    for (const auto& o : overrides) config.set(o);
    for (const auto& [key, value] : flags) config.set(key + "=" + value);
    if (!out_dir.empty()) config.set("output.dir", out_dir);
    return k_exit_ok;
  });
  if (rc != k_exit_ok) return rc;

  if (solve->parsed()) return cmd_solve(config, out, err);
  if (gen->parsed()) return cmd_gen(config, out, err);
  if (adapt->parsed()) return cmd_adapt(config, out, err);
  if (analyze->parsed()) return cmd_analyze(config, out, err);
  if (serve->parsed()) return cmd_serve(config, out, err);
  return k_exit_config;
}

}  // namespace pbe::cli
