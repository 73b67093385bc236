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

#ifndef PBE_TASKS_PROGRAM_HPP_
#define PBE_TASKS_PROGRAM_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "pbe/minilang/syntax.hpp"
#include "pbe/tasks/task.hpp"
#include "pbe/turtle/program.hpp"

namespace pbe::tasks {

/// A parsed candidate in the dialect of its domain: minilang for list and
/// string tasks, the turtle dialect for logo.
using Program = std::variant<minilang::SyntaxTree, turtle::Program>;

/// Throws sexpr::ParseError or turtle::MalformedProgram.
Program parse_program(Domain domain, std::string_view source);

/// Returns nullopt instead of throwing.
std::optional<Program> try_parse_program(Domain domain, std::string_view source);

std::string print_program(const Program& program);
sexpr::Datum program_datum(const Program& program);
std::size_t program_size(const Program& program);

/// Canonical text of `source`, or nullopt when it does not parse.
std::optional<std::string> canonical_source(Domain domain, std::string_view source);

}  // namespace pbe::tasks

#endif  // PBE_TASKS_PROGRAM_HPP_
