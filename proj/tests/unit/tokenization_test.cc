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

#include "helfi/tokenization.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "helfi/error.h"
#include "helfi/utf8.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace helfi {
namespace {

SegmentedWord W(std::string_view form) { return SegmentedWord::Parse(form); }

bool IsMaqefEnding(const std::string& text) {
  const std::vector<char32_t> cps = utf8::Decode(text);
  return !cps.empty() && cps.back() == kMaqef;
}

TEST(SegmentedWordTest, ParseAndRender) {
  SegmentedWord w = W("וְ+אֵי=לַם");
  ASSERT_EQ(w.segments.size(), 3u);
  EXPECT_EQ(w.segments[0].after, Boundary::kPrefix);
  EXPECT_EQ(w.segments[1].after, Boundary::kSuffix);
  EXPECT_EQ(w.ToString(), "וְ+אֵי=לַם");
  EXPECT_EQ(w.Text(), "וְאֵילַם");

  SegmentedWord m = W("כל־ הַ/גּוֹיִם");
  ASSERT_EQ(m.segments.size(), 3u);
  EXPECT_EQ(m.segments[0].after, Boundary::kSpace);
  EXPECT_EQ(m.segments[0].text, "כל־");
  EXPECT_EQ(W("כל־הַ").segments[0].after, Boundary::kMaqef);
  EXPECT_EQ(W("כל־הַ").ToString(), "כל־הַ");

  for (const char* bad : {"", "+אב", "אב=", "א//ב", "א +ב"}) {
    try {
      W(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedSegmentation) << bad;
    }
  }
}

TEST(ConsonantSkeletonTest, StripsPointsKeepsMaqef) {
  EXPECT_EQ(ConsonantSkeleton("בְּרֵאשִׁ֖ית"), "בראשית");
  EXPECT_EQ(ConsonantSkeleton("כָּל־"), "כל־");
  EXPECT_EQ(ConsonantSkeleton("abc"), "abc");
}

TEST(InsertMaqefSpaceTest, Examples) {
  EXPECT_EQ(InsertMaqefSpace(W("כל־הַ/גּוֹיִם")).ToString(), "כל־ הַ/גּוֹיִם");
  EXPECT_EQ(InsertMaqefSpace(W("אֵת=כָּם")).ToString(), "אֵת=כָּם");
  // A trailing maqef ends the word, not a token.
  EXPECT_EQ(InsertMaqefSpace(W("כָּל־")).ToString(), "כָּל־");
}

TEST(ClassifySplitTest, Examples) {
  EXPECT_EQ(ClassifySplit(W("וְ/אֲשֶׁר")).ToString(), "וְ+אֲשֶׁר");
  EXPECT_EQ(ClassifySplit(W("וְ/הַ/שָּׁמַיִם")).ToString(), "וְ+הַ+שָּׁמַיִם");
  EXPECT_EQ(ClassifySplit(W("אֵת/כָּם")).ToString(), "אֵת=כָּם");
  EXPECT_EQ(ClassifySplit(W("וְ/אֵי/לַם")).ToString(), "וְ+אֵי=לַם");
  EXPECT_EQ(ClassifySplit(W("שָׁלוֹם")).ToString(), "שָׁלוֹם");
  PrefixInventory none{{}};
  EXPECT_EQ(ClassifySplit(W("וְ/אֲשֶׁר"), none).ToString(), "וְ=אֲשֶׁר");
}

TEST(MergeSuffixesTest, Examples) {
  SegmentedWord merged = MergeSuffixes(W("אֵת/כָּם"));
  ASSERT_EQ(merged.segments.size(), 1u);
  EXPECT_EQ(merged.segments[0].text, "אֵתכָּם");
  EXPECT_EQ(merged.ToString(), "אֵת=כָּם");
  EXPECT_EQ(MergeSuffixes(W("אֵת=כָּם")), merged);
  EXPECT_EQ(MergeSuffixes(W("וְ/אֵי/לַם")).ToString(), "וְ/אֵי=לַם");
  EXPECT_EQ(MergeSuffixes(W("וְ/אֵי/לַם")).segments.size(), 2u);
}

TEST(LetterSubtokensTest, Ids) {
  auto ids = LetterSubtokens(Normalize(W("וְ/הַ/שָּׁמַיִם")), 5);
  ASSERT_EQ(ids.size(), 3u);
  EXPECT_EQ(ids[0].first.ToString(), "5a");
  EXPECT_EQ(ids[2].first.ToString(), "5c");
  EXPECT_EQ(ids[2].second, "שָּׁמַיִם");
  EXPECT_EQ(LetterSubtokens(W("שָׁלוֹם"), 2)[0].first.ToString(), "2");
  SegmentedWord many;
  for (int i = 0; i < 27; ++i) many.segments.push_back({"ב", Boundary::kPrefix, {}});
  many.segments.back().after = Boundary::kNone;
  try {
    LetterSubtokens(many, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooManySubtokens);
  }
}

TEST(NormalizersTest, IdempotentOnRandomWords) {
  std::mt19937 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const SegmentedWord w = testing::RandomWord(rng);
    const SegmentedWord m = InsertMaqefSpace(w);
    ASSERT_EQ(InsertMaqefSpace(m), m) << w.ToString();
    const SegmentedWord c = ClassifySplit(w);
    ASSERT_EQ(ClassifySplit(c), c) << w.ToString();
    const SegmentedWord s = MergeSuffixes(w);
    ASSERT_EQ(MergeSuffixes(s), s) << w.ToString();
    ASSERT_EQ(s.Text(), w.Text());
  }
}

TEST(SynchronizeTest, DiscrepancyTableRows) {
  const auto whm = ParseInterchange(testing::ReadFixture("table1_whm.txt"));
  const auto oshb = ParseInterchange(testing::ReadFixture("table1_oshb.txt"));
  ASSERT_EQ(whm.size(), 10u);
  ASSERT_EQ(oshb.size(), 10u);
  SyncResult result = SynchronizeTokenization(whm, oshb);
  EXPECT_EQ(RenderInterchange(result.unified),
            testing::ReadFixture("table1_unified.txt"));
  for (std::size_t i = 0; i < whm.size(); ++i) {
    ASSERT_EQ(whm[i].verse, testing::kTableLayers[i].verse);
    int count = 0;
    for (const Discrepancy& d : result.discrepancies) {
      if (d.location != WordLocation{whm[i].verse, whm[i].word}) continue;
      ++count;
      EXPECT_EQ(d.layer, testing::kTableLayers[i].layer) << i << ": " << d.description;
    }
    EXPECT_EQ(count, 1) << "row " << i;
  }
}

TEST(HarmonizeTest, VavConsecutiveExample) {
  Harmonized h = Harmonize(W("וַאֲשֶׁר"), W("וְ/אֲשֶׁר"), {"Mal.3:12", 1});
  ASSERT_EQ(h.unified.segments.size(), 2u);
  EXPECT_EQ(h.unified.segments[0].after, Boundary::kPrefix);
  ASSERT_EQ(h.discrepancies.size(), 1u);
  EXPECT_EQ(h.discrepancies[0].layer, 2);
  EXPECT_EQ(h.discrepancies[0].kind, DiscrepancyKind::kMissingPrefixSplit);
}

TEST(HarmonizeTest, SuffixMarkersConverge) {
  Harmonized whm = Harmonize(W("אֵת=כָּם"), W("אֵת=כָּם"), {"Mal.3:12", 2});
  Harmonized mixed = Harmonize(W("אֵת=כָּם"), W("אֵת/כָּם"), {"Mal.3:12", 2});
  EXPECT_TRUE(whm.discrepancies.empty());
  EXPECT_EQ(whm.unified, mixed.unified);
  ASSERT_EQ(mixed.discrepancies.size(), 1u);
  EXPECT_EQ(mixed.discrepancies[0].kind, DiscrepancyKind::kSuffixSplit);
  EXPECT_EQ(mixed.unified.segments.size(), 1u);
}

TEST(HarmonizeTest, DifferentTextsThrow) {
  try {
    Harmonize(W("אֵת"), W("אֵם"), {"x", 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTextMismatch);
  }
}

// Re-segments the letters of `w` with random boundaries and optionally drops
// the pointing.
SegmentedWord Resegment(std::mt19937& rng, const SegmentedWord& w) {
  SegmentedWord out;
  const bool strip = rng() % 4 == 0;
  const Boundary choices[] = {Boundary::kNone, Boundary::kPrefix,
                              Boundary::kSuffix, Boundary::kSplit,
                              Boundary::kSpace};
  std::string current;
  for (std::size_t i = 0; i < w.segments.size(); ++i) {
    const Segment& seg = w.segments[i];
    current += strip ? ConsonantSkeleton(seg.text) : seg.text;
    if (i + 1 == w.segments.size()) break;
    Boundary b = choices[rng() % 5];
    if (IsMaqefEnding(seg.text)) {
      b = rng() % 2 ? Boundary::kSpace : Boundary::kMaqef;
    }
    if (b == Boundary::kNone) continue;
    out.segments.push_back({current, b, {}});
    current.clear();
  }
  out.segments.push_back({current, Boundary::kNone, {}});
  return out;
}

void ExpectHarmonizedShape(const Harmonized& h, const std::string& skeleton) {
  ASSERT_EQ(ConsonantSkeleton(h.unified.Text()), skeleton);
  for (std::size_t i = 0; i + 1 < h.unified.segments.size(); ++i) {
    const Segment& seg = h.unified.segments[i];
    ASSERT_NE(seg.after, Boundary::kSuffix);
    ASSERT_NE(seg.after, Boundary::kSplit);
    if (IsMaqefEnding(seg.text)) ASSERT_EQ(seg.after, Boundary::kSpace);
  }
}

TEST(HarmonizeTest, SymmetricAndShapePreserving) {
  std::mt19937 rng(5);
  for (int i = 0; i < 5000; ++i) {
    const SegmentedWord a = testing::RandomWord(rng);
    const SegmentedWord b = Resegment(rng, a);
    const std::string skeleton = ConsonantSkeleton(a.Text());
    Harmonized ab = Harmonize(a, b, {"x", i});
    Harmonized ba = Harmonize(b, a, {"x", i});
    ASSERT_EQ(ab.unified, ba.unified) << a.ToString() << " | " << b.ToString();
    ASSERT_EQ(ab.discrepancies.size(), ba.discrepancies.size());
    for (std::size_t k = 0; k < ab.discrepancies.size(); ++k) {
      ASSERT_EQ(ab.discrepancies[k].kind, ba.discrepancies[k].kind);
      ASSERT_EQ(ab.discrepancies[k].layer, ba.discrepancies[k].layer);
    }
    ExpectHarmonizedShape(ab, skeleton);
    Harmonized same = Harmonize(a, a, {"x", i});
    ASSERT_TRUE(same.discrepancies.empty()) << a.ToString();
    ExpectHarmonizedShape(same, skeleton);
  }
}

TEST(HarmonizeTest, DroppedBoundariesAreEachReported) {
  std::mt19937 rng(11);
  testing::RandomWordOptions opts;
  opts.allow_split = false;
  int total_dropped = 0;
  for (int i = 0; i < 5000; ++i) {
    const SegmentedWord original = testing::RandomWord(rng, opts);
    SegmentedWord dropped;
    int drops = 0;
    for (std::size_t k = 0; k < original.segments.size(); ++k) {
      Segment seg = original.segments[k];
      const bool last = k + 1 == original.segments.size();
      const bool drop = !last && seg.after != Boundary::kMaqef && rng() % 2;
      if (!dropped.segments.empty() &&
          dropped.segments.back().after == Boundary::kNone) {
        dropped.segments.back().text += seg.text;
        dropped.segments.back().after = seg.after;
      } else {
        dropped.segments.push_back(seg);
      }
      if (!drop) continue;
      ++drops;
      Boundary& after = dropped.segments.back().after;
      after = IsMaqefEnding(seg.text) ? Boundary::kMaqef : Boundary::kNone;
    }
    total_dropped += drops;
    Harmonized truth = Harmonize(original, original, {"x", i});
    Harmonized h = Harmonize(original, dropped, {"x", i});
    ASSERT_EQ(h.unified, truth.unified)
        << original.ToString() << " | " << dropped.ToString();
    ASSERT_EQ(static_cast<int>(h.discrepancies.size()), drops)
        << original.ToString() << " | " << dropped.ToString();
  }
  EXPECT_GT(total_dropped, 1000);
}

TEST(MorphologyCountTest, ReportsMismatch) {
  EXPECT_FALSE(CheckMorphologyCount(W("אֵת/כָּם"), 2, {"x", 1}));
  auto d = CheckMorphologyCount(W("אֵת/כָּם"), 1, {"x", 1});
  ASSERT_TRUE(d);
  EXPECT_EQ(d->kind, DiscrepancyKind::kInconsistentMorphology);
  EXPECT_EQ(d->layer, 3);
  auto p = CheckMorphologyCount(W("וְ/אֲשֶׁר"), 1, {"x", 1});
  ASSERT_TRUE(p);
  EXPECT_EQ(p->layer, 2);
}

TEST(InterchangeTest, ParseRenderAndLemmaColumn) {
  const std::string text = "Gen.1:1\t1\tבְּ/רֵאשִׁית\tb/7225\n# note\n";
  auto rows = ParseInterchange(text);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].word, 1);
  EXPECT_EQ(*rows[0].lemma_count, 2u);
  EXPECT_EQ(RenderInterchange(rows), "Gen.1:1\t1\tבְּ/רֵאשִׁית\n");
  EXPECT_THROW(ParseInterchange("Gen.1:1\t0\tא\n"), Error);
  EXPECT_THROW(ParseInterchange("Gen.1:1\t1\n"), Error);
}

TEST(SynchronizeTest, MissingRowsAndMorphology) {
  auto a = ParseInterchange("v\t1\tא\nv\t2\tב\n");
  auto b = ParseInterchange("v\t1\tא\n");
  EXPECT_THROW(SynchronizeTokenization(a, b), Error);
  EXPECT_THROW(SynchronizeTokenization(b, a), Error);
  auto c = ParseInterchange("v\t1\tאֵת/כָּם\tאֵת\n");
  SyncResult r = SynchronizeTokenization(c, c);
  ASSERT_EQ(r.discrepancies.size(), 2u);
  EXPECT_EQ(r.discrepancies[0].kind, DiscrepancyKind::kInconsistentMorphology);
  EXPECT_EQ(RenderDiscrepancyTsv({r.discrepancies[0]}).substr(0, 9),
            "3\tv\t1\tinc");
}

}  // namespace
}  // namespace helfi
