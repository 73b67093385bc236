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

#include "pbe/tasks/program.hpp"

namespace pbe::tasks {

Program parse_program(Domain domain, std::string_view source) {
  if (domain == Domain::Logo) return turtle::parse(source);
  return minilang::parse(source);
}

std::optional<Program> try_parse_program(Domain domain, std::string_view source) {
  try {
    return parse_program(domain, source);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string print_program(const Program& program) {
  return std::visit([](const auto& p) { return print(p); }, program);
}

sexpr::Datum program_datum(const Program& program) {
  return std::visit([](const auto& p) { return to_datum(p); }, program);
}

std::size_t program_size(const Program& program) {
  return std::visit([](const auto& p) { return size(p); }, program);
}

std::optional<std::string> canonical_source(Domain domain, std::string_view source) {
  auto p = try_parse_program(domain, source);
  if (!p) return std::nullopt;
  return print_program(*p);
}

}  // namespace pbe::tasks
