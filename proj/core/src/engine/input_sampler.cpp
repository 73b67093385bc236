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

#include "pbe/engine/input_sampler.hpp"

#include <array>
#include <cctype>
#include <string_view>

namespace pbe::engine {

namespace {

constexpr std::array<std::string_view, 24> k_words = {
    "apple", "river", "stone", "cloud", "north", "paper", "light", "green",
    "table", "music", "ocean", "tiger", "bread", "smith", "john",  "maria",
    "data",  "alpha", "delta", "quiet", "red",   "blue",  "main",  "road",
};

constexpr std::array<char, 6> k_punct = {'.', ',', '-', '!', '?', ':'};

}  // namespace

tasks::Value sample_list_input(Rng& rng, const ListInputConfig& config) {
  const auto len = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(config.min_len), static_cast<std::int64_t>(config.max_len)));
  tasks::Value::List items;
  items.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    items.push_back(tasks::Value::integer(rng.between(config.min_value, config.max_value)));
  return tasks::Value::list(std::move(items));
}

tasks::Value sample_string_input(Rng& rng, const StringInputConfig& config) {
  const auto words = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(config.min_words), static_cast<std::int64_t>(config.max_words)));
  std::string out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) out.push_back(' ');
    std::string w(k_words[rng.below(k_words.size())]);
    const double u = rng.uniform();
    if (u < 0.3) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    else if (u < 0.4) for (auto& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (rng.bernoulli(0.15)) w += std::to_string(rng.between(0, 99));
    if (rng.bernoulli(0.15)) w.push_back(k_punct[rng.below(k_punct.size())]);
    out += w;
  }
  return tasks::Value::string(std::move(out));
}

std::vector<tasks::Value> sample_inputs(tasks::Domain domain, Rng& rng, const InputConfig& config) {
  std::vector<tasks::Value> out;
  if (domain == tasks::Domain::Logo) return out;
  out.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i)
    out.push_back(domain == tasks::Domain::List ? sample_list_input(rng, config.list)
                                                : sample_string_input(rng, config.string));
  return out;
}

}  // namespace pbe::engine
