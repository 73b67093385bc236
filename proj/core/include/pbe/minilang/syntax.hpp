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

#ifndef PBE_MINILANG_SYNTAX_HPP_
#define PBE_MINILANG_SYNTAX_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pbe/minilang/primitives.hpp"
#include "pbe/minilang/sexpr.hpp"

namespace pbe::minilang {

using sexpr::ParseError;

enum class NodeKind { Int, Str, Bool, Var, Lambda, Apply, If, Let, Fix, Prim };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Children by kind:
//   Lambda [body]   Apply [function, argument]   If [cond, then, else]
//   Let [value, body]   Fix [body]   Prim [args...]
struct Node {
  NodeKind kind = NodeKind::Int;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;          // string literal contents, variable or binder name
  std::uint32_t depth = 0;   // Var: binders between the use and its binding (0 = innermost)
  Prim prim = Prim::Add;
  std::vector<NodePtr> children;
};

/// A parsed program. Immutable and safe to share between threads.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  explicit SyntaxTree(NodePtr root) : root_(std::move(root)) {}

  bool empty() const { return !root_; }
  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  friend bool operator==(const SyntaxTree& a, const SyntaxTree& b);

 private:
  NodePtr root_;
};

bool structurally_equal(const Node& a, const Node& b);

/// Parses minilang source. Variables must be bound; primitive calls must
/// match the table's arity; binder names may not shadow reserved words or
/// primitives. Throws ParseError.
SyntaxTree parse(std::string_view source);
SyntaxTree from_datum(const sexpr::Datum& datum);

sexpr::Datum to_datum(const SyntaxTree& tree);

/// Canonical single-line text; parse(print(t)) == t.
std::string print(const SyntaxTree& tree);

/// Node count: literals, variables, and each binder/application/call node.
std::size_t size(const SyntaxTree& tree);

}  // namespace pbe::minilang

#endif  // PBE_MINILANG_SYNTAX_HPP_
