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

// Minimal UTF-8 helpers. Columns in KWIC lines and Hebrew letter skeletons
// are computed over code points, not bytes.

#ifndef HELFI_UTF8_H_
#define HELFI_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace helfi::utf8 {

// Decodes one code point starting at text[pos] and advances pos. Invalid
// sequences decode as U+FFFD consuming a single byte.
char32_t Next(std::string_view text, std::size_t& pos);

void Append(std::string& out, char32_t cp);

std::vector<char32_t> Decode(std::string_view text);
std::string Encode(const std::vector<char32_t>& cps);

std::size_t Length(std::string_view text);

// Byte offset of the given code point index (clamped to text.size()).
std::size_t ByteOffset(std::string_view text, std::size_t cp_index);

}  // namespace helfi::utf8

#endif  // HELFI_UTF8_H_
