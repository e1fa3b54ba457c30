// Copyright 2026 The orient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "orient/construct.hpp"

namespace orient::golden {

// Every spec the verbatim (n, k, s, b) construction accepts with n <= n_max.
inline std::vector<NksbSpec> verbatim_specs(int n_max) {
  std::vector<NksbSpec> specs;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int s = 1; s <= k; ++s) {
        for (int b = 0; b < s; ++b) {
          if (k - b >= 2 && b != 1 && n == k + s - b) specs.push_back({n, k, s, b});
        }
      }
    }
  }
  return specs;
}

inline std::string two_kings_report() {
  std::string text;
  for (int n = 4; n <= 8; ++n) {
    for (auto reading : {TwoKingsReading::AllButThird, TwoKingsReading::EvenOnly}) {
      text += format_certification(two_kings_oriented(n, reading)) + "\n";
    }
  }
  return text;
}

inline std::string nksb_verbatim_report() {
  std::string text;
  for (const NksbSpec& spec : verbatim_specs(8)) {
    text += format_certification(nksb_oriented(spec, NksbMode::Verbatim)) + "\n";
  }
  return text;
}

}  // namespace orient::golden
