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

#ifndef PBE_ENGINE_INPUT_SAMPLER_HPP_
#define PBE_ENGINE_INPUT_SAMPLER_HPP_

#include <cstdint>
#include <vector>

#include "pbe/common.hpp"
#include "pbe/tasks/task.hpp"

namespace pbe::engine {

struct ListInputConfig {
  std::size_t min_len = 0;
  std::size_t max_len = 12;
  std::int64_t min_value = -50;
  std::int64_t max_value = 50;
};

struct StringInputConfig {
  std::size_t min_words = 1;
  std::size_t max_words = 4;
};

struct InputConfig {
  ListInputConfig list;
  StringInputConfig string;
  std::size_t count = 5;  // inputs per generated program
};

/// Integer list with uniform length and uniform elements.
tasks::Value sample_list_input(Rng& rng, const ListInputConfig& config = {});

/// Short phrase of words from a fixed vocabulary, with occasional capitals,
/// digits and punctuation so that string edits have something to act on.
tasks::Value sample_string_input(Rng& rng, const StringInputConfig& config = {});

/// `config.count` inputs for the domain; empty for logo.
std::vector<tasks::Value> sample_inputs(tasks::Domain domain, Rng& rng, const InputConfig& config = {});

}  // namespace pbe::engine

#endif  // PBE_ENGINE_INPUT_SAMPLER_HPP_
