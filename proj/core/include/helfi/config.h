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

#ifndef HELFI_CONFIG_H_
#define HELFI_CONFIG_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace helfi {

struct ConfigEntry {
  std::size_t line = 0;
  std::string key;
  std::string value;  // surrounding double quotes removed
};

// `key=value` lines; blank lines and `#` comments are skipped. Throws
// Error(kConfig) naming `what` on a line without '='.
std::vector<ConfigEntry> ParseKeyValues(std::string_view text,
                                        std::string_view what);

// Whitespace-separated items with `#` comments, e.g. book-order or
// inventory files.
std::vector<std::string> ParseList(std::string_view text);
std::vector<std::string> LoadList(const std::string& path);

bool ParseBool(const ConfigEntry& entry);

std::string_view TrimSpace(std::string_view s);

}  // namespace helfi

#endif  // HELFI_CONFIG_H_
