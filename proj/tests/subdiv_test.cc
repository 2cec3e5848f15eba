// Copyright 2026 The Deedscan Authors.
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

#include <cmath>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "deedscan/subdiv.h"
#include "deedscan/text.h"
#include "synth.h"

namespace deedscan {
namespace {

Gazetteer GazetteerOf(const std::string &jsonl) {
  std::istringstream in(jsonl);
  return Gazetteer::Parse(in, "test");
}

const Gazetteer &Shipped() {
  static const Gazetteer *gaz =
      new Gazetteer(Gazetteer::Load(synth::DataDir() / "gazetteer.jsonl"));
  return *gaz;
}

// Jaccard over word sets blended evenly with 1 - d/max(len).
double OracleBlend(const std::string &a, const std::string &b) {
  std::istringstream ia(a), ib(b);
  std::set<std::string> sa, sb;
  for (std::string w; ia >> w;) sa.insert(w);
  for (std::string w; ib >> w;) sb.insert(w);
  std::set<std::string> all = sa;
  all.insert(sb.begin(), sb.end());
  size_t common = sa.size() + sb.size() - all.size();
  double jaccard = all.empty() ? 1.0 : static_cast<double>(common) / all.size();
  std::u32string ua = DecodeUtf8(a), ub = DecodeUtf8(b);
  size_t longest = std::max(ua.size(), ub.size());
  double edit = longest == 0 ? 1.0
                             : 1.0 - static_cast<double>(synth::RecursiveLevenshtein(ua, ub)) /
                                         static_cast<double>(longest);
  return 0.5 * jaccard + 0.5 * edit;
}

TEST(NormalizeSubdivisionTest, Examples) {
  EXPECT_EQ(NormalizeSubdivision("Oakwood Add'n No. 2"), "oakwood addition number 2");
  EXPECT_EQ(NormalizeSubdivision("OAKWOOD ADDITION NUMBER 2"), "oakwood addition number 2");
  EXPECT_EQ(NormalizeSubdivision("Oakwood  Addn,  No 2"), "oakwood addition number 2");
  EXPECT_EQ(NormalizeSubdivision("1st Rearr. of Maple-Hill"),
            "first rearrangement of maple hill");
  EXPECT_EQ(NormalizeSubdivision(""), "");
  EXPECT_EQ(NormalizeSubdivision(" ,. "), "");
}

TEST(NormalizeSubdivisionTest, CustomTable) {
  std::istringstream in("# comment\nbl\tblock\nrd road\n");
  AbbreviationTable table = AbbreviationTable::Parse(in, "t");
  EXPECT_EQ(table.size(), 2u);
  EXPECT_EQ(NormalizeSubdivision("Bl 3 Park Rd", table), "block 3 park road");
  // The shipped abbreviations do not apply to a custom table.
  EXPECT_EQ(NormalizeSubdivision("Oakwood Add'n", table), "oakwood addn");
}

TEST(NormalizeSubdivisionTest, ShippedFileMatchesDefault) {
  AbbreviationTable file = AbbreviationTable::Load(synth::DataDir() / "abbreviations.tsv");
  for (const char *name : {"Oakwood Add'n No. 2", "Mt. Curve Addtn", "St Anthony Pk",
                           "Morningside Hgts", "Prospect Pk Terr."}) {
    EXPECT_EQ(NormalizeSubdivision(name, file), NormalizeSubdivision(name)) << name;
  }
}

TEST(NormalizeSubdivisionTest, IdempotentOnRandomInput) {
  synth::Rng rng(41);
  const std::vector<std::string> words = {"Add'n", "No.", "1st", "Hgts", "St.", "Oak-wood",
                                          "PARK", "terr", "Sub", "2", "of", "(Rearr.)", "-"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::string name;
    for (size_t n = rng() % 7; n > 0; --n) name += words[rng() % words.size()] + " ";
    std::string once = NormalizeSubdivision(name);
    EXPECT_EQ(NormalizeSubdivision(once), once) << name;
    EXPECT_EQ(once.find("  "), std::string::npos);
  }
}

TEST(BlendedSimilarityTest, OakwoodNumberedPair) {
  const std::string a = "oakwood addition";
  const std::string b = "oakwood addition number 2";
  // Jaccard 2/4; edit distance 9 over 25 characters.
  ASSERT_EQ(synth::RecursiveLevenshtein(DecodeUtf8(a), DecodeUtf8(b)), 9u);
  double expected = OracleBlend(a, b);
  EXPECT_NEAR(expected, 0.5 * 0.5 + 0.5 * (1.0 - 9.0 / 25.0), 1e-12);
  EXPECT_NEAR(BlendedSimilarity(a, b), expected, 1e-12);
  EXPECT_NEAR(BlendedSimilarity(b, a), expected, 1e-12);
  EXPECT_DOUBLE_EQ(BlendedSimilarity(a, a), 1.0);
}

TEST(BlendedSimilarityTest, AgreesWithOracle) {
  synth::Rng rng(42);
  const std::vector<std::string> words = {"oak", "oakwood", "addition", "park", "hill",
                                          "heights", "number", "2", "lake", "prospect"};
  for (int trial = 0; trial < 300; ++trial) {
    auto phrase = [&] {
      std::string s;
      for (size_t n = 1 + rng() % 3; n > 0; --n) s += (s.empty() ? "" : " ") + words[rng() % words.size()];
      return s;
    };
    std::string a = phrase(), b = phrase();
    double v = BlendedSimilarity(a, b);
    EXPECT_NEAR(v, OracleBlend(a, b), 1e-12) << a << " | " << b;
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(SubdivisionMatcherTest, ExactAndNearMatches) {
  SubdivisionMatcher matcher(Shipped(), AbbreviationTable::Default());
  auto exact = matcher.Match("Morningside Heights");
  ASSERT_TRUE(exact);
  EXPECT_DOUBLE_EQ(exact->similarity, 1.0);
  EXPECT_TRUE(exact->accepted);
  EXPECT_EQ(Shipped().records()[exact->record].name, "Morningside Heights");

  auto abbrev = matcher.Match("MORNINGSIDE HGTS.");
  ASSERT_TRUE(abbrev);
  EXPECT_DOUBLE_EQ(abbrev->similarity, 1.0);

  auto unknown = matcher.Match("Zebra Meadows");
  ASSERT_TRUE(unknown);
  EXPECT_FALSE(unknown->accepted);
}

TEST(SubdivisionMatcherTest, ThresholdDecidesAcceptance) {
  Gazetteer gaz = GazetteerOf(
      R"({"class": "Subdivision", "name": "Oakwood Addition No. 2", "parent": "Hennepin"})"
      "\n");
  SubdivisionMatcher strict(gaz, AbbreviationTable::Default());
  auto m = strict.Match("Oakwood Addition");
  ASSERT_TRUE(m);
  EXPECT_NEAR(m->similarity, 0.57, 1e-12);
  EXPECT_FALSE(m->accepted);
  SubdivisionMatcher loose(gaz, AbbreviationTable::Default(), 0.5);
  EXPECT_TRUE(loose.Match("Oakwood Addition")->accepted);
}

TEST(SubdivisionMatcherTest, EmptyGazetteer) {
  Gazetteer gaz = GazetteerOf(R"({"class": "State", "name": "Minnesota"})"
                              "\n");
  SubdivisionMatcher matcher(gaz, AbbreviationTable::Default());
  EXPECT_FALSE(matcher.Match("Oakwood Addition"));
  EXPECT_TRUE(matcher.FindInDocument(Document("d", "Oakwood Addition")).empty());
}

TEST(SubdivisionMatcherTest, ExactTieGoesToLexicographicallySmaller) {
  Gazetteer gaz = GazetteerOf(
      R"({"class": "Subdivision", "name": "Xyz Ridge"})"
      "\n"
      R"({"class": "Subdivision", "name": "Abc Ridge"})"
      "\n");
  SubdivisionMatcher matcher(gaz, AbbreviationTable::Default(), 0.1);
  ASSERT_DOUBLE_EQ(OracleBlend("qqq ridge", "abc ridge"), OracleBlend("qqq ridge", "xyz ridge"));
  auto m = matcher.Match("Qqq Ridge");
  ASSERT_TRUE(m);
  EXPECT_EQ(m->canonical_name, "abc ridge");
}

TEST(SubdivisionMatcherTest, MatchIsOracleArgmax) {
  synth::Rng rng(44);
  const Gazetteer &gaz = Shipped();
  SubdivisionMatcher matcher(gaz, AbbreviationTable::Default());
  std::vector<std::string> names;
  for (size_t idx : gaz.subdivisions()) {
    names.push_back(NormalizeSubdivision(gaz.records()[idx].name));
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::string query;
    std::istringstream words(names[rng() % names.size()] + " " + names[rng() % names.size()]);
    for (std::string w; words >> w;) {
      if (rng() % 3 != 0) query += (query.empty() ? "" : " ") + w;
    }
    std::string best;
    double best_score = -1;
    for (const std::string &name : names) {
      double score = OracleBlend(query, name);
      bool better = score > best_score + 1e-12 ||
                    (std::abs(score - best_score) <= 1e-12 &&
                     (name.size() < best.size() || (name.size() == best.size() && name < best)));
      if (better) best = name, best_score = score;
    }
    auto m = matcher.Match(query);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->canonical_name, best) << query;
    EXPECT_NEAR(m->similarity, best_score, 1e-12);
    EXPECT_EQ(m->accepted, m->similarity >= matcher.threshold());
  }
}

TEST(SubdivisionMatcherTest, FindInDocumentPrefersNumberedPlat) {
  SubdivisionMatcher matcher(Shipped(), AbbreviationTable::Default());
  Document doc("d", "Lot 7, Block 2, Oakwood Add'n No. 2, according to the plat thereof");
  auto hits = matcher.FindInDocument(doc);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].match.canonical_name, "oakwood addition number 2");
  EXPECT_EQ(doc.Slice(hits[0].span), "Oakwood Add'n No. 2");

  Document plain("d", "Lot 7, Oakwood Addition, and Lot 2 of Washington Highlands.");
  auto two = matcher.FindInDocument(plain);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(plain.Slice(two[0].span), "Oakwood Addition");
  EXPECT_EQ(plain.Slice(two[1].span), "Washington Highlands");
}

TEST(SubdivisionMatcherTest, AcceptedImpliesThreshold) {
  synth::Rng rng(43);
  SubdivisionMatcher matcher(Shipped(), AbbreviationTable::Default());
  const std::vector<std::string> words = {"Oakwood", "Addition", "No.", "2", "Lake", "Harriet",
                                          "Park", "Prospect", "Terrace", "Hgts", "Lot", "the"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    for (size_t n = rng() % 12; n > 0; --n) text += words[rng() % words.size()] + " ";
    Document doc("d", text);
    auto hits = matcher.FindInDocument(doc);
    for (size_t i = 0; i < hits.size(); ++i) {
      EXPECT_TRUE(hits[i].match.accepted);
      EXPECT_GE(hits[i].match.similarity, matcher.threshold());
      if (i > 0) {
        EXPECT_LE(hits[i - 1].span.end, hits[i].span.start);
      }
    }
  }
}

}  // namespace
}  // namespace deedscan
