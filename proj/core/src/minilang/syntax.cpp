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

#include "pbe/minilang/syntax.hpp"

namespace pbe::minilang {

namespace {

using sexpr::Datum;
using sexpr::DatumKind;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Builder {
 public:
  NodePtr build(const Datum& d) {
    switch (d.kind) {
      case DatumKind::Integer: {
        Node n;
        n.kind = NodeKind::Int;
        n.int_value = d.integer;
        return make(std::move(n));
      }
      case DatumKind::String: {
        Node n;
        n.kind = NodeKind::Str;
        n.name = d.text;
        return make(std::move(n));
      }
      case DatumKind::Boolean: {
        Node n;
        n.kind = NodeKind::Bool;
        n.bool_value = d.boolean;
        return make(std::move(n));
      }
      case DatumKind::Symbol: return variable(d);
      case DatumKind::List: return form(d);
    }
    throw ParseError(d.position, {}, "unknown datum");
  }

 private:
  NodePtr variable(const Datum& d) {
    if (is_reserved(d.text)) throw ParseError(d.position, {"expression"}, "'" + d.text + "' is a keyword and needs parentheses");
    if (const auto* p = find_primitive(d.text))
      throw ParseError(d.position, {"(" + d.text + " ...)"},
                       "primitive '" + d.text + "' must be called with " + std::to_string(p->arity) + " argument(s)");
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == d.text) {
        Node n;
        n.kind = NodeKind::Var;
        n.name = d.text;
        n.depth = static_cast<std::uint32_t>(scope_.size() - 1 - i);
        return make(std::move(n));
      }
    }
    throw ParseError(d.position, {"bound variable"}, "unbound variable '" + d.text + "'");
  }

  std::string binder(const Datum& d) {
    if (!d.is_symbol()) throw ParseError(d.position, {"variable name"}, "binder must be a symbol");
    if (is_reserved(d.text) || find_primitive(d.text))
      throw ParseError(d.position, {"variable name"}, "cannot bind reserved name '" + d.text + "'");
    return d.text;
  }

  void expect_items(const Datum& d, std::size_t n, const char* shape) {
    if (d.items.size() != n)
      throw ParseError(d.position, {shape}, "malformed " + d.items[0].text + " form");
  }

  NodePtr scoped(const std::string& name, const Datum& body) {
    scope_.push_back(name);
    NodePtr b = build(body);
    scope_.pop_back();
    return b;
  }

  NodePtr form(const Datum& d) {
    const Datum& head = d.items[0];
    if (head.is_symbol()) {
      const std::string& h = head.text;
      if (h == "lambda") {
        expect_items(d, 3, "(lambda name body)");
        Node n;
        n.kind = NodeKind::Lambda;
        n.name = binder(d.items[1]);
        n.children.push_back(scoped(n.name, d.items[2]));
        return make(std::move(n));
      }
      if (h == "fix") {
        expect_items(d, 3, "(fix name body)");
        Node n;
        n.kind = NodeKind::Fix;
        n.name = binder(d.items[1]);
        n.children.push_back(scoped(n.name, d.items[2]));
        return make(std::move(n));
      }
      if (h == "let") {
        expect_items(d, 4, "(let name value body)");
        Node n;
        n.kind = NodeKind::Let;
        n.name = binder(d.items[1]);
        n.children.push_back(build(d.items[2]));
        n.children.push_back(scoped(n.name, d.items[3]));
        return make(std::move(n));
      }
      if (h == "if") {
        expect_items(d, 4, "(if cond then else)");
        Node n;
        n.kind = NodeKind::If;
        for (std::size_t i = 1; i < 4; ++i) n.children.push_back(build(d.items[i]));
        return make(std::move(n));
      }
      if (const auto* p = find_primitive(h)) {
        if (d.items.size() != static_cast<std::size_t>(p->arity) + 1)
          throw ParseError(d.position, {std::to_string(p->arity) + " argument(s)"},
                           "'" + h + "' takes " + std::to_string(p->arity) + " argument(s), got " +
                               std::to_string(d.items.size() - 1));
        Node n;
        n.kind = NodeKind::Prim;
        n.prim = p->id;
        for (std::size_t i = 1; i < d.items.size(); ++i) n.children.push_back(build(d.items[i]));
        return make(std::move(n));
      }
    }
    if (d.items.size() < 2) throw ParseError(d.position, {"argument"}, "application needs at least one argument");
    NodePtr fn = build(head);
    for (std::size_t i = 1; i < d.items.size(); ++i) {
      Node n;
      n.kind = NodeKind::Apply;
      n.children.push_back(std::move(fn));
      n.children.push_back(build(d.items[i]));
      fn = make(std::move(n));
    }
    return fn;
  }

  std::vector<std::string> scope_;
};

Datum datum_of(const Node& n) {
  switch (n.kind) {
    case NodeKind::Int: return Datum::make_integer(n.int_value);
    case NodeKind::Str: return Datum::make_string(n.name);
    case NodeKind::Bool: return Datum::make_boolean(n.bool_value);
    case NodeKind::Var: return Datum::make_symbol(n.name);
    case NodeKind::Lambda:
      return Datum::make_list({Datum::make_symbol("lambda"), Datum::make_symbol(n.name), datum_of(*n.children[0])});
    case NodeKind::Fix:
      return Datum::make_list({Datum::make_symbol("fix"), Datum::make_symbol(n.name), datum_of(*n.children[0])});
    case NodeKind::Let:
      return Datum::make_list({Datum::make_symbol("let"), Datum::make_symbol(n.name), datum_of(*n.children[0]),
                               datum_of(*n.children[1])});
    case NodeKind::If:
      return Datum::make_list({Datum::make_symbol("if"), datum_of(*n.children[0]), datum_of(*n.children[1]),
                               datum_of(*n.children[2])});
    case NodeKind::Prim: {
      std::vector<Datum> items{Datum::make_symbol(std::string(primitive_info(n.prim).name))};
      for (const auto& c : n.children) items.push_back(datum_of(*c));
      return Datum::make_list(std::move(items));
    }
    case NodeKind::Apply: {
      // Left spine flattens: ((f a) b) prints as (f a b), which parses back identically.
      std::vector<const Node*> args;
      const Node* fn = &n;
      while (fn->kind == NodeKind::Apply) {
        args.push_back(fn->children[1].get());
        fn = fn->children[0].get();
      }
      std::vector<Datum> items{datum_of(*fn)};
      for (auto it = args.rbegin(); it != args.rend(); ++it) items.push_back(datum_of(**it));
      return Datum::make_list(std::move(items));
    }
  }
  return Datum::make_symbol("?");
}

std::size_t count(const Node& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += count(*c);
  return total;
}

}  // namespace

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case NodeKind::Int:
      if (a.int_value != b.int_value) return false;
      break;
    case NodeKind::Bool:
      if (a.bool_value != b.bool_value) return false;
      break;
    case NodeKind::Prim:
      if (a.prim != b.prim) return false;
      break;
    case NodeKind::Var:
      if (a.depth != b.depth || a.name != b.name) return false;
      break;
    case NodeKind::Str:
    case NodeKind::Lambda:
    case NodeKind::Let:
    case NodeKind::Fix:
      if (a.name != b.name) return false;
      break;
    case NodeKind::Apply:
    case NodeKind::If: break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

bool operator==(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return a.root_ == b.root_ || structurally_equal(*a.root_, *b.root_);
}

SyntaxTree parse(std::string_view source) { return from_datum(sexpr::read(source)); }

SyntaxTree from_datum(const sexpr::Datum& datum) { return SyntaxTree(Builder().build(datum)); }

sexpr::Datum to_datum(const SyntaxTree& tree) { return datum_of(tree.root()); }

std::string print(const SyntaxTree& tree) { return sexpr::print(to_datum(tree)); }

std::size_t size(const SyntaxTree& tree) { return tree.empty() ? 0 : count(tree.root()); }

}  // namespace pbe::minilang
