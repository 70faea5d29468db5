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

#include <CLI11.hpp>

#include <iostream>

#include "commands.h"
#include "helfi/error.h"

namespace {

using helfi::cli::CommonOptions;

void AddCommonOptions(CLI::App* cmd, CommonOptions& common,
                      bool with_profile = true) {
  if (with_profile) {
    cmd->add_option("--profile", common.profile,
                    "Format profile file (separator, marker, mode)")
        ->envname("HELFI_PROFILE");
  }
  cmd->add_option("--rules", common.rules,
                  "Rule configuration file (rule.<id>=error|warning|off)")
      ->envname("HELFI_RULES");
  cmd->add_option("--book-order", common.book_order,
                  "Book-order file: book codes in canonical order");
  cmd->add_option("--extractors", common.extractors,
                  "Extractor inventory file (default: pers modus tasp case "
                  "pro)");
  cmd->add_option("--morph-tags", common.morph_tags,
                  "Morphology tag inventory file; enables the inventory check");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = helfi::cli;
  CLI::App app{"Tools for morpheme-level bitext alignments", "helfi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "helfi 0.1.0");

  CommonOptions common;
  int status = cli::kExitOk;

  cli::ValidateOptions validate;
  CLI::App* cmd = app.add_subcommand("validate", "Check alignment files");
  AddCommonOptions(cmd, common);
  cmd->add_option("inputs", validate.inputs, "Alignment files ('-' for stdin)")
      ->required();
  cmd->add_option("--format", validate.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  cmd->callback([&] { status = cli::RunValidate(common, validate); });

  cli::ConcordOptions concord;
  cmd = app.add_subcommand("concord", "Build the analytical concordance");
  AddCommonOptions(cmd, common);
  cmd->add_option("inputs", concord.inputs, "Alignment files ('-' for stdin)")
      ->required();
  cmd->add_option("--headword", concord.headword, "Only this headword");
  cmd->add_option("--kwic-width", concord.kwic_width,
                  "KWIC window width in characters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--format", concord.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();
  cmd->add_option("--open-marker", concord.open_marker,
                  "Text placed before the keyword")
      ->capture_default_str();
  cmd->add_option("--close-marker", concord.close_marker,
                  "Text placed after the keyword")
      ->capture_default_str();
  cmd->add_option("--collation", concord.collation, "Headword order")
      ->check(CLI::IsMember({"codepoint", "caseless"}))
      ->capture_default_str();
  cmd->add_flag("--periphery", concord.periphery,
                "List the multiword periphery appendix instead");
  cmd->callback([&] { status = cli::RunConcord(common, concord); });

  cli::SyncOptions sync;
  cmd = app.add_subcommand("sync", "Harmonize two Hebrew segmentations");
  cmd->add_option("input_a", sync.input_a, "First interchange file")
      ->required();
  cmd->add_option("input_b", sync.input_b, "Second interchange file")
      ->required();
  cmd->add_option("--report", sync.report,
                  "Discrepancy TSV path (default: stderr)");
  cmd->add_option("-o,--output", sync.output,
                  "Unified interchange path (default: stdout)");
  cmd->add_option("--prefixes", sync.prefixes,
                  "Prefix inventory file (default: ו ה ב כ ל מ ש)");
  cmd->callback([&] { status = cli::RunSync(common, sync); });

  cli::DiffOptions diff;
  cmd = app.add_subcommand("diff", "Compare two text editions verse by verse");
  AddCommonOptions(cmd, common);
  cmd->add_option("edition_a", diff.edition_a, "First edition")->required();
  cmd->add_option("edition_b", diff.edition_b, "Second edition")->required();
  cmd->callback([&] { status = cli::RunDiff(common, diff); });

  cli::StatsOptions stats;
  cmd = app.add_subcommand("stats", "Per-book token, link and coverage table");
  AddCommonOptions(cmd, common);
  cmd->add_option("inputs", stats.inputs, "Alignment files ('-' for stdin)")
      ->required();
  cmd->add_option("--format", stats.format, "Table format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  cmd->callback([&] { status = cli::RunStats(common, stats); });

  cli::ServeOptions serve;
  cmd = app.add_subcommand("serve", "Run the alignment editing service");
  AddCommonOptions(cmd, common);
  cmd->add_option("input", serve.input, "Alignment file to edit")->required();
  cmd->add_option("--host", serve.host, "Listen address")->capture_default_str();
  cmd->add_option("--port", serve.port, "Listen port (0 picks a free port)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  cmd->add_option("--static-dir", serve.static_dir,
                  "Directory served at / (editor bundle)");
  cmd->add_option("--save-path", serve.save_path,
                  "Where POST /save writes (default: the input file)");
  cmd->callback([&] { status = cli::RunServe(common, serve); });

  cli::ConvertOptions convert;
  cmd = app.add_subcommand("convert", "Rewrite alignment files");
  AddCommonOptions(cmd, common, false);
  cmd->add_option("inputs", convert.inputs, "Alignment files ('-' for stdin)")
      ->required();
  cmd->add_option("--input-profile", common.profile,
                  "Format profile used to read the input")
      ->envname("HELFI_PROFILE");
  cmd->add_option("--profile", convert.output_profile,
                  "Format profile used to write the output (default: strict)");
  cmd->add_flag("--canonicalize", convert.canonicalize,
                "Sort verses into canonical order");
  cmd->add_option("-o,--output", convert.output, "Output path (default: stdout)");
  cmd->callback([&] { status = cli::RunConvert(common, convert); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  } catch (const helfi::Error& e) {
    std::cerr << "helfi: " << helfi::ErrorCodeName(e.code()) << ": "
              << e.what() << '\n';
    const bool usage = e.code() == helfi::ErrorCode::kIo ||
                       e.code() == helfi::ErrorCode::kConfig;
    return usage ? cli::kExitUsage : cli::kExitFailure;
  }
  return status;
}
