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

#ifndef PBE_PROPOSER_DEFAULT_GRAMMARS_HPP_
#define PBE_PROPOSER_DEFAULT_GRAMMARS_HPP_

#include <string_view>

#include "pbe/proposer/grammar.hpp"

namespace pbe::proposer {

/// Built-in prior for each domain. List programs take `xs`, string programs
/// take `s`, logo programs take nothing.
Grammar default_grammar(tasks::Domain domain);

/// The production text the default grammar is read from.
std::string_view default_grammar_text(tasks::Domain domain);

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_DEFAULT_GRAMMARS_HPP_
