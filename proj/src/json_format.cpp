// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/json_format.hpp"

#include <algorithm>
#include <sstream>

namespace qcorr {

namespace {

using nlohmann::ordered_json;

// Depth of array nesting; objects count as "deep".
int array_depth(const ordered_json& j) {
  if (j.is_object()) return 100;
  if (!j.is_array()) return 0;
  int d = 0;
  for (const auto& e : j) d = std::max(d, array_depth(e));
  return d + 1;
}

void write_inline(std::ostringstream& os, const ordered_json& j) {
  if (!j.is_array()) {
    os << j.dump();
    return;
  }
  os << '[';
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) os << ", ";
    write_inline(os, j[i]);
  }
  os << ']';
}

void write(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << ordered_json(k).dump() << ": ";
      write(os, v, indent + 2);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << '}';
  } else if (j.is_array() && array_depth(j) > 2) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << ']';
  } else {
    write_inline(os, j);
  }
}

}  // namespace

std::string pretty_json(const ordered_json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace qcorr
