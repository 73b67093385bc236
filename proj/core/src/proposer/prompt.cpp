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

#include "pbe/proposer/prompt.hpp"

#include "pbe/prompt_assets.inc"

namespace pbe::proposer {

namespace {

Domain template_domain(TemplateId id) {
  switch (id) {
    case TemplateId::List:
    case TemplateId::GenList: return Domain::List;
    case TemplateId::String:
    case TemplateId::GenString: return Domain::String;
    case TemplateId::Logo:
    case TemplateId::GenLogo: return Domain::Logo;
  }
  return Domain::List;
}

std::string substitute(std::string_view tmpl, std::string_view placeholder, std::string_view value) {
  std::string out(tmpl);
  const auto at = out.find(placeholder);
  if (at == std::string::npos) throw Error("template lacks placeholder " + std::string(placeholder));
  out.replace(at, placeholder.size(), value);
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

const char* template_name(TemplateId id) {
  switch (id) {
    case TemplateId::List: return "list";
    case TemplateId::String: return "string";
    case TemplateId::Logo: return "logo";
    case TemplateId::GenList: return "gen_list";
    case TemplateId::GenString: return "gen_string";
    case TemplateId::GenLogo: return "gen_logo";
  }
  return "?";
}

std::string_view template_text(TemplateId id) {
  switch (id) {
    case TemplateId::List: return assets::k_list;
    case TemplateId::String: return assets::k_string;
    case TemplateId::Logo: return assets::k_logo;
    case TemplateId::GenList: return assets::k_gen_list;
    case TemplateId::GenString: return assets::k_gen_string;
    case TemplateId::GenLogo: return assets::k_gen_logo;
  }
  return {};
}

TemplateId solve_template(Domain domain) {
  switch (domain) {
    case Domain::List: return TemplateId::List;
    case Domain::String: return TemplateId::String;
    case Domain::Logo: return TemplateId::Logo;
  }
  return TemplateId::List;
}

TemplateId generation_template(Domain domain) {
  switch (domain) {
    case Domain::List: return TemplateId::GenList;
    case Domain::String: return TemplateId::GenString;
    case Domain::Logo: return TemplateId::GenLogo;
  }
  return TemplateId::GenList;
}

std::string assertion_line(Domain domain, const tasks::Example& example) {
  const char* fn = domain == Domain::String ? "edit_text" : "solve_puzzle";
  const std::string in = example.input ? example.input->repr() : "";
  const auto* out = std::get_if<Value>(&example.output);
  return std::string("assert ") + fn + "(" + in + ") == " + (out ? out->repr() : "?");
}

Prompt render_prompt(const Task& task, TemplateId id, std::size_t max_examples) {
  if (template_domain(id) != task.domain || id == generation_template(task.domain))
    throw TemplateDomainMismatch(std::string("template '") + template_name(id) + "' does not fit a " +
                                 tasks::domain_name(task.domain) + " task");
  Prompt p;
  p.template_id = template_name(id);
  p.task_id = task.id;
  const auto shown = tasks::prompt_examples(task, max_examples);
  if (task.domain == Domain::Logo) {
    p.text = substitute(template_text(id), "{GRID}", std::get<tasks::AsciiGrid>(shown.at(0).output).text());
  } else {
    std::string lines;
    for (const auto& e : shown) lines += assertion_line(task.domain, e) + "\n";
    if (!lines.empty()) lines.pop_back();
    p.text = substitute(template_text(id), "{EXAMPLES}", lines);
  }
  return p;
}

Prompt render_prompt(const Task& task) { return render_prompt(task, solve_template(task.domain)); }

Prompt render_generation_prompt(const GenerationRequest& request) {
  std::string block;
  for (std::size_t i = 0; i < request.exemplars.size(); ++i) {
    const Exemplar& e = request.exemplars[i];
    if (i) block += "\n";
    block += "```\n" + e.program + "\n```\n";
    if (request.domain == Domain::List) {
      block += "```json\n";
      for (const auto& v : e.inputs) block += v.repr() + "\n";
      block += "```\n";
    } else if (request.domain == Domain::String) {
      block += "```csv\n";
      for (const auto& v : e.inputs) block += csv_quote(v.is_str() ? v.as_str() : v.repr()) + "\n";
      block += "```\n";
    }
  }
  Prompt p;
  const TemplateId id = generation_template(request.domain);
  p.template_id = template_name(id);
  p.text = substitute(template_text(id), "{N_SHOT_BLOCK}", block);
  return p;
}

}  // namespace pbe::proposer
