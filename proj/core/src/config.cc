// Copyright 2026 The HELFI Tools Authors.
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

#include "helfi/config.h"

#include "helfi/error.h"
#include "helfi/format.h"

namespace helfi {

std::string_view TrimSpace(std::string_view s) {
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<ConfigEntry> ParseKeyValues(std::string_view text,
                                        std::string_view what) {
  std::vector<ConfigEntry> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = TrimSpace(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, std::string(what) + " line " +
                                          std::to_string(number) +
                                          ": expected key=value");
    }
    std::string_view value = TrimSpace(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out.push_back({number, std::string(TrimSpace(line.substr(0, eq))),
                   std::string(value)});
  }
  return out;
}

std::vector<std::string> ParseList(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    line = line.substr(0, line.find('#'));
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::string_view(" \t\r,").find(line[i]) !=
                                    std::string_view::npos) {
        ++i;
      }
      std::size_t start = i;
      while (i < line.size() && std::string_view(" \t\r,").find(line[i]) ==
                                    std::string_view::npos) {
        ++i;
      }
      if (i > start) out.emplace_back(line.substr(start, i - start));
    }
  }
  return out;
}

std::vector<std::string> LoadList(const std::string& path) {
  return ParseList(ReadFile(path));
}

bool ParseBool(const ConfigEntry& entry) {
  if (entry.value == "true" || entry.value == "1" || entry.value == "yes") {
    return true;
  }
  if (entry.value == "false" || entry.value == "0" || entry.value == "no") {
    return false;
  }
  throw Error(ErrorCode::kConfig, "line " + std::to_string(entry.line) +
                                      ": '" + entry.key +
                                      "' expects true or false");
}

}  // namespace helfi
