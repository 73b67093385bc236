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

#ifndef PBE_ANALYTICS_CORRELATE_HPP_
#define PBE_ANALYTICS_CORRELATE_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "pbe/common.hpp"

namespace pbe::analytics {

class InsufficientData : public Error {
 public:
  using Error::Error;
};

enum class Method { Spearman, Pearson };
const char* method_name(Method m);
Method parse_method(std::string_view name);

/// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Sample correlation of equal-length finite series. Throws InsufficientData
/// with fewer than 3 points or when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);
/// Pearson on average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

struct Correlation {
  double coefficient = 0.0;
  std::size_t n = 0;         // pairs used
  std::size_t censored = 0;  // pairs dropped for a non-finite value
};

/// Drops pairs where either value is infinite or NaN, then correlates.
Correlation correlate(std::span<const double> x, std::span<const double> y, Method method);

}  // namespace pbe::analytics

#endif  // PBE_ANALYTICS_CORRELATE_HPP_
