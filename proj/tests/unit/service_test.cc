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

#include "helfi/service.h"

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "helfi/format.h"
#include "support/generators.h"
#include "support/mutations.h"
#include "support/oracles.h"

namespace helfi {
namespace {

namespace fs = std::filesystem;

Corpus FixtureCorpus(const std::string& text) {
  return ParseCorpusText(text, FormatProfile::Strict(),
                         std::make_shared<const CorpusConfig>())
      .corpus;
}

Corpus FixtureCorpus() {
  return FixtureCorpus(testing::ReadFixture("two_verses.tsv"));
}

std::string Text(const AlignService& service) {
  return Serialize(*service.corpus(), FormatProfile::Strict());
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kPrecondition;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("helfi-service-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string File(const std::string& name) const { return path_ / name; }
  std::size_t Entries() const {
    return static_cast<std::size_t>(
        std::distance(fs::directory_iterator(path_), fs::directory_iterator()));
  }

 private:
  static inline std::atomic<int> counter_{0};
  fs::path path_;
};

std::string ReadAll(const std::string& path) { return ReadFile(path); }

const VerseRef kPs = VerseRef::Parse("ps1:1");
const VerseRef kHb = VerseRef::Parse("hb1:1");

TEST(ApplyEditTest, InverseRestoresVerse) {
  Corpus corpus = FixtureCorpus();
  const VerseAlignment original = corpus.at(1);
  VerseAlignment v = original;
  Edit inv = ApplyEdit(v, edits::RemoveLink{1, TokenId::Parse("5"), 0}, false);
  EXPECT_EQ(v.target[1].links.ToString(), "6");
  ApplyEdit(v, inv, false);
  EXPECT_EQ(v, original);

  inv = ApplyEdit(v, edits::SetNoSource{2}, false);
  EXPECT_TRUE(v.target[2].links.IsNoSource());
  ApplyEdit(v, inv, false);
  EXPECT_EQ(v, original);

  inv = ApplyEdit(v, edits::SetLinkKind{1, TokenId::Parse("5"), LinkKind::kCore, 0},
                  false);
  EXPECT_EQ(v.target[1].links.ToString(), "5 6");
  ApplyEdit(v, inv, false);
  EXPECT_EQ(v, original);
}

TEST(ApplyEditTest, InvalidEditsLeaveVerseUntouched) {
  VerseAlignment v = FixtureCorpus().at(1);
  const VerseAlignment original = v;
  const Edit bad[] = {
      edits::RemoveLink{1, TokenId::Parse("4"), 0},
      edits::AddLink{1, TokenId::Parse("6"), LinkKind::kCore, 0, {}},
      edits::SetNoSource{99},
      edits::AddLink{0, TokenId::Parse("1"), LinkKind::kCore, 1, {}},
      edits::AddLink{0, TokenId::Parse("1"), LinkKind::kCore, 0, 5},
  };
  for (const Edit& e : bad) {
    EXPECT_EQ(CodeOf([&] { ApplyEdit(v, e, false); }), ErrorCode::kInvalidEdit);
    EXPECT_EQ(v, original);
  }
}

TEST(AlignServiceTest, StaleBaseRevisionConflicts) {
  AlignService service(FixtureCorpus(), {});
  const std::uint64_t base = service.revision();
  const std::string before = Text(service);
  EXPECT_EQ(service.ApplyEdits("a", kHb, base,
                               {edits::RemoveLink{1, TokenId::Parse("5"), 0}}),
            base + 1);
  const std::string after = Text(service);
  EXPECT_NE(before, after);
  EXPECT_EQ(CodeOf([&] {
              service.ApplyEdits("b", kHb, base, {edits::SetNoSource{0}});
            }),
            ErrorCode::kRevisionConflict);
  EXPECT_EQ(Text(service), after);
  EXPECT_EQ(service.revision(), base + 1);
}

TEST(AlignServiceTest, InvariantViolationIsRejected) {
  AlignService service(FixtureCorpus(), {});
  const std::string before = Text(service);
  try {
    service.ApplyEdits("a", kPs, 0,
                       {edits::AddLink{0, TokenId::Parse("9"), LinkKind::kCore,
                                       0, {}}});
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].rule, "R1-dangling-link");
  }
  // Extractor without links.
  EXPECT_EQ(CodeOf([&] {
              service.ApplyEdits("a", kPs, 0, {edits::SetNoSource{9}});
            }),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(CodeOf([&] { service.ApplyEdits("a", kPs, 0, {}); }),
            ErrorCode::kInvalidEdit);
  EXPECT_EQ(CodeOf([&] {
              service.ApplyEdits(
                  "a", kPs, 0,
                  {edits::SetTargetLemma{9, TargetLemma::Extractor("nosuch")}});
            }),
            ErrorCode::kInvalidEdit);
  EXPECT_EQ(Text(service), before);
  EXPECT_EQ(service.revision(), 0u);
  // Warnings may rise: unlinking Jumala's core link leaves token 6 uncovered.
  EXPECT_EQ(service.ApplyEdits("a", kHb, 0,
                               {edits::RemoveLink{1, TokenId::Parse("6"), 0}}),
            1u);
}

TEST(AlignServiceTest, UndoRedoAcrossSessions) {
  AlignService service(FixtureCorpus(), {});
  const std::string s0 = Text(service);
  service.ApplyEdits("a", kHb, 0, {edits::RemoveLink{1, TokenId::Parse("5"), 0}});
  const std::string s1 = Text(service);
  service.ApplyEdits("b", kPs, 1,
                     {edits::SetTargetLemma{3, TargetLemma::None()}});
  EXPECT_EQ(CodeOf([&] { service.Undo("c"); }), ErrorCode::kNothingToUndo);
  EXPECT_EQ(CodeOf([&] { service.Redo("a"); }), ErrorCode::kNothingToRedo);
  EXPECT_EQ(service.Undo("b"), 3u);
  EXPECT_EQ(Text(service), s1);
  EXPECT_EQ(service.Undo("a"), 4u);
  EXPECT_EQ(Text(service), s0);
  service.Redo("a");
  EXPECT_EQ(Text(service), s1);
}

TEST(AlignServiceTest, RandomEditSequencesUndoToIdenticalBytes) {
  std::mt19937 rng(1234);
  std::size_t accepted_total = 0;
  std::size_t rejected_total = 0;
  for (int seq = 0; seq < 500; ++seq) {
    AlignService service(testing::RandomCorpus(rng, 6), {});
    const std::string original = Text(service);
    std::vector<std::string> states = {original};
    const int steps = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < steps; ++s) {
      auto corpus = service.corpus();
      const VerseAlignment& v = corpus->at(rng() % corpus->size());
      std::vector<Edit> batch;
      for (int k = 1 + static_cast<int>(rng() % 3); k > 0; --k) {
        batch.push_back(testing::RandomEdit(rng, v));
      }
      const std::uint64_t rev = service.revision();
      try {
        ASSERT_EQ(service.ApplyEdits("s", v.ref, rev, batch), rev + 1);
        states.push_back(Text(service));
        ++accepted_total;
      } catch (const Error& e) {
        ASSERT_TRUE(e.code() == ErrorCode::kInvalidEdit ||
                    e.code() == ErrorCode::kInvariantViolation)
            << e.what();
        ASSERT_EQ(service.revision(), rev);
        ASSERT_EQ(Text(service), states.back());
        ++rejected_total;
      }
    }
    for (std::size_t k = states.size() - 1; k > 0; --k) {
      service.Undo("s");
      ASSERT_EQ(Text(service), states[k - 1]) << "sequence " << seq;
    }
    ASSERT_EQ(Text(service), original);
    ASSERT_EQ(CodeOf([&] { service.Undo("s"); }), ErrorCode::kNothingToUndo);
    for (std::size_t k = 1; k < states.size(); ++k) {
      service.Redo("s");
      ASSERT_EQ(Text(service), states[k]);
    }
  }
  EXPECT_GT(accepted_total, 1000u);
  EXPECT_GT(rejected_total, 100u);
}

TEST(AlignServiceTest, ConcurrentWritersOneWins) {
  AlignService service(FixtureCorpus(), {});
  std::atomic<int> wins{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      try {
        service.ApplyEdits("t" + std::to_string(t), kPs, 0,
                           {edits::SetTargetLemma{0, TargetLemma::Plain(
                                                         "autuas" +
                                                         std::to_string(t))}});
        ++wins;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kRevisionConflict) ++conflicts;
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(wins, 1);
  EXPECT_EQ(conflicts, 3);
}

TEST(AlignServiceTest, SnapshotsAreUnaffectedByLaterEdits) {
  AlignService service(FixtureCorpus(), {});
  AlignService::VerseView view = service.GetVerse(kPs);
  const VerseAlignment copy = *view.verse;
  service.ApplyEdits("a", kPs, 0, {edits::SetTargetLemma{0, TargetLemma::None()}});
  EXPECT_EQ(*view.verse, copy);
  EXPECT_EQ(view.revision, 0u);
  EXPECT_NE(*service.GetVerse(kPs).verse, copy);
}

TEST(AlignServiceTest, NavigateAndLookup) {
  AlignService service(FixtureCorpus(), {});
  EXPECT_EQ(service.Navigate(kPs, Direction::kNext), kHb);
  EXPECT_EQ(service.Navigate(kPs, Direction::kPrev), kPs);
  EXPECT_EQ(service.Navigate(kHb, Direction::kNext), kHb);
  EXPECT_EQ(CodeOf([&] { service.GetVerse(VerseRef::Parse("gen1:1")); }),
            ErrorCode::kUnknownVerse);
}

TEST(AlignServiceTest, Search) {
  AlignService service(FixtureCorpus(), {});
  auto hits = service.Search("autuas", SearchType::kLemma);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_FALSE(hits[0].source);
  EXPECT_EQ(hits[0].position, 0u);
  hits = service.Search("835", SearchType::kStrong);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_TRUE(hits[0].source);
  EXPECT_EQ(hits[0].token->ToString(), "1");
  EXPECT_EQ(service.Search("2980", SearchType::kStrong).size(), 1u);
  EXPECT_EQ(service.Search("5660", SearchType::kStrong).size(), 1u);
  EXPECT_EQ(service.Search("d", SearchType::kStrong).size(), 1u);
  hits = service.Search("Jumala", SearchType::kSurface);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].verse, kHb);
  EXPECT_TRUE(service.Search("nothing", SearchType::kSurface).empty());
  EXPECT_THROW(ParseSearchType("regex"), Error);
}

TEST(AlignServiceTest, ConcordanceAndValidate) {
  AlignService service(FixtureCorpus(), {});
  auto entry = service.Concordance("autuas");
  ASSERT_TRUE(entry);
  EXPECT_EQ(entry->total(), 1u);
  EXPECT_FALSE(service.Concordance("nosuch"));
  EXPECT_EQ(service.Validate().verses, 2u);
  EXPECT_EQ(service.Validate(kHb).verses, 1u);
  EXPECT_TRUE(service.Validate().diagnostics.empty());
}

TEST(AlignServiceSaveTest, WritesAtomically) {
  TempDir dir;
  const std::string path = dir.File("corpus.tsv");
  const std::string original = testing::ReadFixture("two_verses.tsv");
  { std::ofstream(path, std::ios::binary) << original; }

  ServiceOptions options;
  options.path = path;
  bool fail = true;
  options.write_file = [&](const std::string& tmp, std::string_view data) {
    std::ofstream out(tmp, std::ios::binary);
    if (fail) {
      out << data.substr(0, data.size() / 2);
      out.close();
      throw std::runtime_error("disk full");
    }
    out << data;
  };
  AlignService service(FixtureCorpus(original), options);
  service.ApplyEdits("a", kPs, 0, {edits::SetTargetLemma{0, TargetLemma::Plain("onnellinen")}});
  EXPECT_EQ(CodeOf([&] { service.Save(); }), ErrorCode::kIo);
  EXPECT_EQ(ReadAll(path), original);
  EXPECT_EQ(dir.Entries(), 1u);

  fail = false;
  service.Save();
  const std::string saved = ReadAll(path);
  EXPECT_EQ(saved, Text(service));
  EXPECT_NE(saved, original);
  EXPECT_EQ(FixtureCorpus(saved).at(0), service.corpus()->at(0));
  EXPECT_EQ(dir.Entries(), 1u);
}

TEST(AlignServiceSaveTest, DefaultWriterAndRandomFailures) {
  TempDir dir;
  const std::string path = dir.File("c.tsv");
  std::mt19937 rng(77);
  std::string on_disk;
  {
    AlignService first(testing::RandomCorpus(rng, 5), ServiceOptions{{}, {}, path, {}});
    first.Save();
    on_disk = ReadAll(path);
    EXPECT_EQ(on_disk, Text(first));
  }
  for (int i = 0; i < 50; ++i) {
    const bool fail = rng() % 2;
    ServiceOptions options;
    options.path = path;
    options.write_file = [&](const std::string& tmp, std::string_view data) {
      std::ofstream out(tmp, std::ios::binary);
      out << data.substr(0, fail ? rng() % (data.size() + 1) : data.size());
      if (fail) throw std::runtime_error("injected");
    };
    AlignService service(testing::RandomCorpus(rng, 5), options);
    if (fail) {
      EXPECT_THROW(service.Save(), Error);
    } else {
      service.Save();
      on_disk = Text(service);
    }
    ASSERT_EQ(ReadAll(path), on_disk);
    ASSERT_EQ(dir.Entries(), 1u);
  }
}

TEST(AlignServiceSaveTest, RefusesInvalidCorpusUnlessForced) {
  TempDir dir;
  const std::string path = dir.File("bad.tsv");
  const testing::TextMutation& r1 = testing::SingleFaultMutations()[0];
  const std::string bad =
      testing::ApplyMutation(testing::ReadFixture(r1.fixture), r1);
  AlignService service(FixtureCorpus(bad), ServiceOptions{{}, {}, path, {}});
  try {
    service.Save();
    FAIL();
  } catch (const DiagnosticError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidationFailed);
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].rule, "R1-dangling-link");
  }
  EXPECT_FALSE(fs::exists(path));
  service.Save(true);
  EXPECT_EQ(ReadAll(path), bad);
}

}  // namespace
}  // namespace helfi
