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

#ifndef PBE_PROPOSER_PROMPT_HPP_
#define PBE_PROPOSER_PROMPT_HPP_

#include <string>
#include <string_view>

#include "pbe/proposer/candidate.hpp"

namespace pbe::proposer {

class TemplateDomainMismatch : public Error {
 public:
  using Error::Error;
};

enum class TemplateId { List, String, Logo, GenList, GenString, GenLogo };

const char* template_name(TemplateId id);
std::string_view template_text(TemplateId id);
TemplateId solve_template(Domain domain);
TemplateId generation_template(Domain domain);

struct Prompt {
  std::string text;
  std::string template_id;
  std::string task_id;  // empty for generation prompts
};

/// Fills {EXAMPLES} with one assertion line per prompt-visible training
/// example (list and string) or {GRID} with the first example's grid (logo).
/// A pure function of its arguments.
Prompt render_prompt(const Task& task, TemplateId id, std::size_t max_examples = tasks::k_prompt_examples);
Prompt render_prompt(const Task& task);

/// Fills {N_SHOT_BLOCK} with the request's exemplars.
Prompt render_generation_prompt(const GenerationRequest& request);

/// assert solve_puzzle([1, 2]) == [2, 1]   or   assert edit_text("a") == "A"
std::string assertion_line(Domain domain, const tasks::Example& example);

}  // namespace pbe::proposer

#endif  // PBE_PROPOSER_PROMPT_HPP_
