// Copyright 2026 The tubal-spectra Authors.
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

#include "tubal/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tubal {

void Report::add(std::string name, double residual, double threshold, CheckKind kind) {
  // NaN residuals fail.
  const bool pass = residual <= threshold;
  checks_.push_back({std::move(name), residual, threshold, pass, kind});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Report::invariants_hold() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) {
    return c.kind != CheckKind::kInvariant || c.pass;
  });
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

}  // namespace tubal
