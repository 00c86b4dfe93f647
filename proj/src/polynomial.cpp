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

#include "isodet/polynomial.hpp"

namespace isodet {

std::string variable_name(std::size_t index, std::size_t f) {
  const std::size_t r = index / f + 1, c = index % f + 1;
  if (r < 10 && c < 10) return "x" + std::to_string(r) + std::to_string(c);
  return "x" + std::to_string(r) + "_" + std::to_string(c);
}

}  // namespace isodet
