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

#include "pbe/proposer/candidate.hpp"

#include <nlohmann/json.hpp>

namespace pbe::proposer {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Fence {
  std::string tag;
  std::string body;
};

// Complete ``` fences in order of appearance. A fence opens at a line that
// starts with ``` and closes at the next such line.
std::vector<Fence> fences(std::string_view text) {
  std::vector<Fence> out;
  std::size_t pos = 0;
  bool open = false;
  Fence current;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    const std::string_view stripped = trim(line);
    if (stripped.starts_with("```")) {
      if (!open) {
        current = Fence{std::string(trim(stripped.substr(3))), {}};
        open = true;
      } else {
        out.push_back(std::move(current));
        open = false;
      }
    } else if (open) {
      current.body.append(line);
      current.body.push_back('\n');
    }
    pos = end + 1;
  }
  return out;
}

// Minimal CSV field reader: a quoted field with "" escapes, or the raw line.
std::optional<std::string> csv_field(std::string_view line) {
  if (line.empty() || line.front() != '"') return std::string(line);
  std::string out;
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i] == '"') {
      if (i + 1 < line.size() && line[i + 1] == '"') {
        out.push_back('"');
        ++i;
      } else {
        return i + 1 == line.size() ? std::optional<std::string>(out) : std::nullopt;
      }
    } else {
      out.push_back(line[i]);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Candidate> collect(CandidateStream& stream) {
  std::vector<Candidate> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

std::string extract_program(std::string_view text) {
  const auto fs = fences(text);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    if (it->tag == "csv" || it->tag == "json") continue;
    return std::string(trim(it->body));
  }
  return std::string(trim(text));
}

std::optional<std::vector<Value>> extract_inputs(Domain domain, std::string_view text) {
  if (domain == Domain::Logo) return std::nullopt;
  const std::string want = domain == Domain::String ? "csv" : "json";
  const auto fs = fences(text);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    if (it->tag != want) continue;
    std::vector<Value> inputs;
    std::size_t pos = 0;
    const std::string& body = it->body;
    while (pos < body.size()) {
      std::size_t end = body.find('\n', pos);
      if (end == std::string::npos) end = body.size();
      std::string_view line(body.data() + pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      pos = end + 1;
      if (trim(line).empty()) continue;
      if (domain == Domain::String) {
        auto field = csv_field(line);
        if (!field) return std::nullopt;
        inputs.push_back(Value::string(std::move(*field)));
      } else {
        try {
          Value v = minilang::value_from_json(nlohmann::json::parse(line));
          if (!v.is_list()) return std::nullopt;
          inputs.push_back(std::move(v));
        } catch (const std::exception&) {
          return std::nullopt;
        }
      }
    }
    if (inputs.empty()) return std::nullopt;
    return inputs;
  }
  return std::nullopt;
}

}  // namespace pbe::proposer
