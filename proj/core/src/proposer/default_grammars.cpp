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

#include "pbe/proposer/default_grammars.hpp"

namespace pbe::proposer {

namespace {

// Weights favour variables and literals so that most samples stay small.
constexpr std::string_view k_list = R"(
list 6: var
list: (reverse list)
list: (sort list)
list: (unique list)
list: (tail list)
list: (append list list)
list: (cons int list)
list: (take int list)
list: (drop int list)
list: (map int@int list)
list: (filter bool@int list)
list: (range int)
list 0.5: (if bool list list)
list 0.5: (fold list@list,int list list)
int 4: var
int 2: lit 0
int 2: lit 1
int 1: lit 2
int 0.5: lit 3
int: (head list)
int: (length list)
int: (+ int int)
int: (- int int)
int 0.5: (* int int)
int 0.5: (mod int int)
int 0.5: (max int int)
int 0.5: (min int int)
int 0.5: (index list int)
int 0.5: (count int list)
int 0.5: (fold int@int,int int list)
bool: (= int int)
bool: (< int int)
bool: (> int int)
bool 0.5: (not bool)
bool 0.25: lit #t
bool 0.25: lit #f
)";

constexpr std::string_view k_string = R"(
str 6: var
str 1: lit ""
str 1: lit " "
str 1: lit ","
str 1: lit "-"
str 1: lit "."
str: (concat str str)
str: (upper str)
str: (lower str)
str: (trim str)
str: (substr str int int)
str 0.5: (replace str str str)
str 0.5: (int->str int)
str: (head strs)
str 0.5: (index strs int)
str: (join str strs)
str 0.5: (reverse str)
str 0.5: (if bool str str)
strs: (split str str)
strs: (map str@str strs)
strs 0.5: (reverse strs)
strs 0.5: (tail strs)
strs 0.5: (filter bool@str strs)
strs 0.5: lit (split s " ")
int 2: lit 0
int 2: lit 1
int 1: lit 2
int 1: lit 3
int: (length str)
int 0.5: (find str str)
int 0.5: (str->int str)
int 0.5: (+ int int)
int 0.5: (- int int)
bool: (= str str)
bool: (< int int)
bool 0.5: (= int int)
bool 0.25: lit #t
)";

constexpr std::string_view k_logo = R"(
cmd 3: (forward dist)
cmd 2: (left angle)
cmd 1: (right angle)
cmd 2: (do cmd cmd)
cmd 1: (do cmd cmd cmd)
cmd 2: (loop count cmd)
cmd 0.5: (fork cmd)
cmd 0.25: lit (penup)
cmd 0.25: lit (pendown)
dist: lit 10
dist: lit 20
dist: lit 50
dist: lit 100
dist 0.5: lit 5
dist 0.5: lit EPS_DIST
dist 0.25: (* dist count)
angle 2: lit 90
angle: lit 60
angle: lit 120
angle: lit 45
angle: lit 72
angle: lit 144
angle 0.5: lit 30
angle 0.5: lit EPS_ANGLE
count 2: lit 4
count: lit 2
count: lit 3
count: lit 5
count: lit 6
count: lit 8
count 0.5: lit HALF_INF
count 0.5: lit INF
)";

}  // namespace

std::string_view default_grammar_text(tasks::Domain domain) {
  switch (domain) {
    case tasks::Domain::List: return k_list;
    case tasks::Domain::String: return k_string;
    case tasks::Domain::Logo: return k_logo;
  }
  return {};
}

Grammar default_grammar(tasks::Domain domain) {
  auto productions = parse_productions(default_grammar_text(domain));
  switch (domain) {
    case tasks::Domain::List: return Grammar(domain, {"list", {"list"}, {"xs"}}, std::move(productions), 6);
    case tasks::Domain::String: return Grammar(domain, {"str", {"str"}, {"s"}}, std::move(productions), 5);
    case tasks::Domain::Logo: return Grammar(domain, {"cmd", {}, {}}, std::move(productions), 5);
  }
  throw InvalidGrammar("unknown domain");
}

}  // namespace pbe::proposer
