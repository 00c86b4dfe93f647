// Copyright 2026 The isodet Authors
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

#include "isodet/equations.hpp"

namespace isodet {

namespace {
std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}
}  // namespace

std::string to_string(const GeneratorLabel& label) {
  using Kind = GeneratorLabel::Kind;
  switch (label.kind) {
    case Kind::minor:
      return "minor(T=" + list(label.rows) + ",S=" + list(label.cols) + ")";
    case Kind::psi_minor:
      return "psi-minor(T=" + list(label.rows) + ",S=" + list(label.cols) + ")";
    case Kind::psi_pfaffian:
      return "psi-pfaffian(S=" + list(label.cols) + ")";
    case Kind::quadratic_invariant:
      return "quadratic-invariant(" + std::to_string(label.rows.at(0)) + "," +
             std::to_string(label.cols.at(0)) + ")";
    case Kind::component: {
      std::string s = "component(";
      s += label.sign ? sign_char(*label.sign) : '?';
      return s + ",T=" + list(label.rows) +
             ",eigen=" + std::to_string(label.eigen_index) + ")";
    }
  }
  return "?";
}

}  // namespace isodet
