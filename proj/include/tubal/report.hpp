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

#ifndef TUBAL_REPORT_HPP_
#define TUBAL_REPORT_HPP_

#include <string>
#include <vector>

namespace tubal {

// kInvariant checks must hold for a correct implementation. kClaim checks
// test a mathematical statement that is not guaranteed; a failing claim is a
// finding, not a bug.
enum class CheckKind { kInvariant, kClaim };

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  CheckKind kind = CheckKind::kInvariant;
};

class Report {
 public:
  // pass = residual <= threshold.
  void add(std::string name, double residual, double threshold,
           CheckKind kind = CheckKind::kInvariant);
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  bool invariants_hold() const;
  bool all_pass() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace tubal

#endif  // TUBAL_REPORT_HPP_
