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

#ifndef HELFI_TOOLS_COMMANDS_H_
#define HELFI_TOOLS_COMMANDS_H_

#include <string>
#include <vector>

namespace helfi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Configuration shared by every subcommand. Empty paths mean built-in
// defaults.
struct CommonOptions {
  std::string profile;
  std::string rules;
  std::string book_order;
  std::string extractors;
  std::string morph_tags;
};

struct ValidateOptions {
  std::vector<std::string> inputs;
  std::string format = "text";
};

struct ConcordOptions {
  std::vector<std::string> inputs;
  std::string headword;
  std::size_t kwic_width = 60;
  std::string format = "text";
  std::string open_marker = "[";
  std::string close_marker = "]";
  std::string collation = "codepoint";
  bool periphery = false;
};

struct SyncOptions {
  std::string input_a;
  std::string input_b;
  std::string report;
  std::string output;
  std::string prefixes;
};

struct DiffOptions {
  std::string edition_a;
  std::string edition_b;
};

struct StatsOptions {
  std::vector<std::string> inputs;
  std::string format = "text";
};

struct ServeOptions {
  std::string input;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::string save_path;
};

struct ConvertOptions {
  std::vector<std::string> inputs;
  std::string output_profile;
  bool canonicalize = false;
  std::string output;
};

int RunValidate(const CommonOptions& common, const ValidateOptions& options);
int RunConcord(const CommonOptions& common, const ConcordOptions& options);
int RunSync(const CommonOptions& common, const SyncOptions& options);
int RunDiff(const CommonOptions& common, const DiffOptions& options);
int RunStats(const CommonOptions& common, const StatsOptions& options);
int RunServe(const CommonOptions& common, const ServeOptions& options);
int RunConvert(const CommonOptions& common, const ConvertOptions& options);

}  // namespace helfi::cli

#endif  // HELFI_TOOLS_COMMANDS_H_
