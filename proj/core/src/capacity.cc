// Copyright 2026 The GFL Authors
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

#include "gfl/capacity.h"

#include <charconv>
#include <cstdlib>
#include <string>

#include "gfl/errors.h"

namespace gfl {

namespace {

std::size_t ParseCount(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("GFL_CAPACITY: invalid number '" +
                            std::string(text) + "'");
  }
  return value;
}

}  // namespace

Capacity Capacity::FromEnvironment() {
  const char* spec = std::getenv("GFL_CAPACITY");
  if (spec == nullptr || *spec == '\0') return Capacity{};
  return Parse(spec);
}

Capacity Capacity::Parse(std::string_view spec) {
  Capacity cap;
  if (spec.find('=') == std::string_view::npos) {
    const std::size_t n = ParseCount(spec);
    cap.game_vertices = n;
    cap.subgraph_vertices = n;
    return cap;
  }
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw PreconditionError("GFL_CAPACITY: expected key=value, got '" +
                              std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::size_t value = ParseCount(item.substr(eq + 1));
    if (key == "subgraph") {
      cap.subgraph_vertices = value;
    } else if (key == "game") {
      cap.game_vertices = value;
    } else if (key == "enumerate") {
      cap.enumerate_size = value;
    } else if (key == "brute") {
      cap.brute_force_vertices = value;
    } else if (key == "rank") {
      cap.decide_rank = static_cast<int>(value);
    } else {
      throw PreconditionError("GFL_CAPACITY: unknown key '" + std::string(key) +
                              "'");
    }
  }
  return cap;
}

}  // namespace gfl
