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

#ifndef PBE_CLI_SERVER_HPP_
#define PBE_CLI_SERVER_HPP_

// HTTP service, JSON in and out, every body tagged "schema_version": 1.
//
//   GET  /health         {"status": "ok", "version", "proposer", "config_hash"}
//   POST /logo/ascii     {"pgm": <base64 PGM>} -> {"grid": <32-line text>}
//   POST /solve          {"task": <task>, "k"?: N, "nonce"?: N}
//                        -> {"result": <result>, "candidates": [...]}; logo
//                        candidates carry their rendered "grid"
//   POST /adapt/feedback {"task": <task>, "program": <source>}
//                        -> {"accepted": true, "appended": bool}; the program
//                        must fit the task's training examples
//
// Malformed bodies get 400, programs that do not fit get 422, and an
// unreachable proposer endpoint gets 503.

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pbe/cli/config.hpp"

namespace pbe::cli {

inline constexpr int k_api_schema_version = 1;

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

/// Request handlers, independent of the transport.
class Service {
 public:
  explicit Service(RunConfig config);

  HttpReply health();
  HttpReply logo_ascii(std::string_view body);
  HttpReply solve(std::string_view body);
  HttpReply feedback(std::string_view body);

  const RunConfig& config() const { return config_; }

 private:
  RunConfig config_;
  DomainProposer proposer_;
  std::mutex feedback_mu_;  // single writer for the feedback file
  std::set<std::string> feedback_seen_;
};

class Server {
 public:
  explicit Server(RunConfig config);
  ~Server();

  /// Binds; port 0 picks a free port. Returns the bound port. Throws
  /// pbe::Error when the address is unavailable.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  void stop();
  Service& service();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pbe::cli

#endif  // PBE_CLI_SERVER_HPP_
