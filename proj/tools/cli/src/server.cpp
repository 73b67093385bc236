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

#include "pbe/cli/server.hpp"

#include <fstream>

#include <httplib.h>

#include "pbe/engine/datasets.hpp"
#include "pbe/tasks/check.hpp"
#include "pbe/tasks/io.hpp"
#include "pbe/turtle/ascii.hpp"
#include "pbe/turtle/raster.hpp"

namespace pbe::cli {

using nlohmann::json;

namespace {

HttpReply reply(int status, json body) {
  body["schema_version"] = k_api_schema_version;
  return {status, std::move(body)};
}

HttpReply bad_request(const std::string& why) { return reply(400, {{"error", why}}); }

std::optional<json> parse_body(std::string_view body, std::string& why) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) {
      why = "body must be a JSON object";
      return std::nullopt;
    }
    return j;
  } catch (const json::exception& e) {
    why = std::string("malformed JSON: ") + e.what();
    return std::nullopt;
  }
}

std::string feedback_key(const std::string& task_id, const std::string& program) {
  return task_id + '\x1f' + program;
}

}  // namespace

Service::Service(RunConfig config) : config_(std::move(config)), proposer_(config_) {
  // Accepted solutions already on disk, so a resubmission is not appended twice.
  std::ifstream in(config_.str("serve", "feedback"));
  std::string line;
  while (std::getline(in, line)) {
    try {
      const json j = json::parse(line);
      feedback_seen_.insert(feedback_key(j.at("task").at("id").get<std::string>(),
                                         j.at("entry").at("program").get<std::string>()));
    } catch (const json::exception&) {
      // tolerate a torn final line
    }
  }
}

HttpReply Service::health() {
  return reply(200, {{"status", "ok"},
                     {"version", k_version},
                     {"proposer", proposer_.id()},
                     {"config_hash", config_.hash()}});
}

HttpReply Service::logo_ascii(std::string_view body) {
  std::string why;
  const auto j = parse_body(body, why);
  if (!j) return bad_request(why);
  if (!j->contains("pgm") || !(*j)["pgm"].is_string()) return bad_request("missing \"pgm\" (base64 PGM)");
  try {
    const auto bytes = base64_decode((*j)["pgm"].get<std::string>());
    const auto canvas = turtle::read_pgm(bytes);
    return reply(200, {{"grid", turtle::to_ascii(canvas).text()}});
  } catch (const Error& e) {
    return bad_request(e.what());
  }
}

HttpReply Service::solve(std::string_view body) {
  std::string why;
  const auto j = parse_body(body, why);
  if (!j) return bad_request(why);
  tasks::Task task;
  engine::SolveOptions options;
  try {
    if (!j->contains("task")) return bad_request("missing \"task\"");
    task = tasks::task_from_json((*j)["task"]);
    options = config_.solve_options();
    if (j->contains("k")) options.k = (*j)["k"].get<std::size_t>();
    if (j->contains("nonce")) options.nonce = (*j)["nonce"].get<std::uint64_t>();
  } catch (const std::exception& e) {
    return bad_request(e.what());
  }
  const std::size_t max_k = config_.count("serve", "max_k");
  if (options.k == 0 || options.k > max_k) return bad_request("k must be in [1, " + std::to_string(max_k) + "]");

  tasks::SolveResult result;
  try {
    result = engine::solve(task, proposer_, options);
  } catch (const proposer::EndpointUnavailable& e) {
    return reply(503, {{"error", e.what()}});
  }
  json candidates = json::array();
  for (const auto& s : result.satisfying) {
    json c{{"source", s.source}, {"generalizes", s.generalizes}};
    if (s.logprob) c["logprob"] = *s.logprob;
    if (s.distance) c["distance"] = *s.distance;
    if (task.domain == tasks::Domain::Logo) {
      const auto program = tasks::parse_program(task.domain, s.source);
      if (const auto grid = engine::execute(program, task.domain, std::nullopt, options.budget))
        c["grid"] = std::get<tasks::AsciiGrid>(*grid).text();
    }
    candidates.push_back(std::move(c));
  }
  return reply(200, {{"result", tasks::result_to_json(result)}, {"candidates", candidates}});
}

HttpReply Service::feedback(std::string_view body) {
  std::string why;
  const auto j = parse_body(body, why);
  if (!j) return bad_request(why);
  tasks::Task task;
  std::string source;
  try {
    if (!j->contains("task") || !j->contains("program")) return bad_request("need \"task\" and \"program\"");
    task = tasks::task_from_json((*j)["task"]);
    source = (*j)["program"].get<std::string>();
  } catch (const std::exception& e) {
    return bad_request(e.what());
  }
  const auto budget = config_.budget();
  const auto program = tasks::try_parse_program(task.domain, source);
  if (!program) return reply(422, {{"accepted", false}, {"error", "program does not parse"}});
  if (!tasks::check_fit(*program, task, budget))
    return reply(422, {{"accepted", false}, {"error", "program does not fit the examples"}});
  std::vector<tasks::Value> inputs;
  for (const auto& e : task.train)
    if (e.input) inputs.push_back(*e.input);
  auto entry = engine::make_entry(task.domain, source, inputs, engine::Provenance::manual(), budget);
  if (!entry) return reply(422, {{"accepted", false}, {"error", "program does not execute"}});
  entry->origin = task.id;

  std::lock_guard lock(feedback_mu_);
  if (!feedback_seen_.insert(feedback_key(task.id, entry->program)).second)
    return reply(200, {{"accepted", true}, {"appended", false}});
  const json line{{"schema_version", k_api_schema_version},
                  {"domain", tasks::domain_name(task.domain)},
                  {"config_hash", config_.hash()},
                  {"task", tasks::task_to_json(task)},
                  {"entry", engine::seed_entry_to_json(task.domain, *entry)}};
  const std::filesystem::path path = config_.str("serve", "feedback");
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::app | std::ios::binary);
  out << line.dump() << "\n";
  if (!out) {
    feedback_seen_.erase(feedback_key(task.id, entry->program));
    return reply(500, {{"error", "cannot append to " + path.string()}});
  }
  return reply(200, {{"accepted", true}, {"appended", true}});
}

struct Server::Impl {
  explicit Impl(RunConfig config) : service(std::move(config)) {}
  Service service;
  httplib::Server http;
};

Server::Server(RunConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {
  auto& http = impl_->http;
  auto* svc = &impl_->service;
  const std::size_t workers = std::max<std::size_t>(1, svc->config().count("serve", "workers"));
  http.new_task_queue = [workers] { return new httplib::ThreadPool(workers); };

  auto send = [](httplib::Response& res, const HttpReply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  http.Get("/health", [svc, send](const httplib::Request&, httplib::Response& res) { send(res, svc->health()); });
  http.Post("/logo/ascii", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->logo_ascii(req.body));
  });
  http.Post("/solve",
            [svc, send](const httplib::Request& req, httplib::Response& res) { send(res, svc->solve(req.body)); });
  http.Post("/adapt/feedback", [svc, send](const httplib::Request& req, httplib::Response& res) {
    send(res, svc->feedback(req.body));
  });
  http.set_exception_handler([send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    send(res, reply(500, {{"error", what}}));
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  auto& http = impl_->http;
  if (port == 0) {
    const int bound = http.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!http.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

Service& Server::service() { return impl_->service; }

}  // namespace pbe::cli
