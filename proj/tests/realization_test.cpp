// Copyright 2026 The neuralcode Authors
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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "neuralcode/instances.hpp"
#include "neuralcode/io.hpp"
#include "neuralcode/realization.hpp"
#include "test_support.hpp"

namespace ncode {
namespace {

using testing::C;
using testing::F;
using testing::Fs;

TEST(CodeComplexRealization, Regions) {
  const auto r = code_complex_realization(C(3, {"123", "12", "23", "1", "2"}));
  ASSERT_EQ(r.regions.size(), 3U);
  EXPECT_EQ(r.regions[0], Fs({"1", "12", "123"}));
  EXPECT_EQ(r.regions[1], Fs({"2", "12", "23", "123"}));
  EXPECT_EQ(r.regions[2], Fs({"23", "123"}));
  EXPECT_EQ(r.intersection(F("12")), Fs({"12", "123"}));
  EXPECT_TRUE(r.intersection(F("13")).size() == 1);
}

TEST(CodeLink, Examples) {
  const auto code = C(5, {"2345", "123", "134", "145", "13", "14", "23", "34", "45", "3", "4"});
  EXPECT_EQ(code_link(code, F("1")), C(5, {"23", "34", "45", "3", "4"}));
  EXPECT_EQ(code_link(code, F("34")), C(5, {"0", "25", "1"}));
  EXPECT_THROW(code_link(code, Face()), Error);
}

TEST(VRegion, Examples) {
  const auto disconnected = instances::disconnected_code();
  EXPECT_EQ(v_region_contractibility(disconnected, F("3")).value, Tri::no);
  EXPECT_EQ(v_region_contractibility(disconnected, F("1")).value, Tri::yes);
  EXPECT_THROW(v_region_contractibility(disconnected, F("12")), Error);
  try {
    v_region_contractibility(disconnected, F("12"));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::empty_region);
  }
}

TEST(Cells, Counts) {
  EXPECT_EQ(enumerate_cells(1).size(), 1U);
  EXPECT_EQ(enumerate_cells(2).size(), 5U);
  EXPECT_EQ(enumerate_cells(3).size(), 19U);
  for (int n = 1; n <= 8; ++n) {
    std::size_t count = 0;
    std::size_t chambers = 0;
    for_each_cell(n, [&](const ArrangementCell& c) {
      ++count;
      if (c.zero.empty()) ++chambers;
      EXPECT_FALSE(c.positive.empty());
      EXPECT_FALSE(c.positive.intersects(c.zero));
    });
    std::size_t three = 1;
    for (int i = 0; i < n; ++i) three *= 3;
    EXPECT_EQ(count, three - (std::size_t{1} << n)) << n;
    EXPECT_EQ(chambers, (std::size_t{1} << n) - 1) << n;
  }
  EXPECT_THROW(enumerate_cells(0), Error);
  EXPECT_THROW(enumerate_cells(13), Error);
}

TEST(Cells, DistinctAndOrdered) {
  for (int n = 1; n <= 6; ++n) {
    const auto cells = enumerate_cells(n);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const auto& c : cells) seen.insert({c.positive.bits(), c.zero.bits()});
    EXPECT_EQ(seen.size(), cells.size());
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const auto a = std::make_pair(cells[i - 1].positive.bits(), cells[i - 1].zero.bits());
      const auto b = std::make_pair(cells[i].positive.bits(), cells[i].zero.bits());
      EXPECT_LT(a, b);
    }
  }
  const auto cell = ArrangementCell{F("1"), F("23")};
  EXPECT_EQ(cell.dimension(3), 0);
  EXPECT_EQ(cell_region(cell), F("1"));
}

TEST(RealizedCode, OpenReproducesCode) {
  for (const auto& code : testing::all_codes(3)) {
    EXPECT_EQ(realized_code_from_U(code), code.without_empty_word());
    EXPECT_EQ(realized_code_from_U(code.with_empty_word()), code.without_empty_word());
  }
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    const auto code = testing::random_code(rng, 5);
    EXPECT_EQ(realized_code_from_U(code), code.without_empty_word());
  }
}

TEST(RealizedCode, ClosedVariantAddsWords) {
  const auto code = C(3, {"1", "12", "13"});
  EXPECT_EQ(realized_code_from_U(code), code);
  EXPECT_EQ(realized_code_from_closed_U(code), C(3, {"1", "12", "13", "123"}));
}

TEST(RealizedCode, ClosedVariantContainsOpen) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const auto code = testing::random_code(rng, 4);
    const auto closed = realized_code_from_closed_U(code);
    for (Face w : code.nonempty_words()) EXPECT_TRUE(closed.contains(w));
    // Each closed word is a union of codewords, not necessarily a face of
    // the code's complex.
    for (Face w : closed.words()) {
      Face covered;
      for (Face c : code.words()) {
        if (c.is_subset_of(w)) covered = covered | c;
      }
      EXPECT_EQ(covered, w);
    }
  }
}

TEST(GoodCover, Examples) {
  EXPECT_EQ(good_cover_check(instances::realizable_code()).value, Tri::yes);
  const auto disconnected = good_cover_check(instances::disconnected_code());
  EXPECT_EQ(disconnected.value, Tri::no);
  EXPECT_EQ(disconnected.witness, F("3"));
  const auto connected = good_cover_check(instances::connected_not_goodcover());
  EXPECT_EQ(connected.value, Tri::no);
  EXPECT_EQ(connected.witness, F("4"));
  EXPECT_EQ(good_cover_check(instances::counterexample()).value, Tri::yes);
}

TEST(GoodCover, AgreesWithLocallyGoodOnThreeNeurons) {
  int yes = 0;
  for (const auto& code : testing::all_codes(3)) {
    const auto good = is_locally_good(code).value;
    const auto cover = good_cover_check(code).value;
    ASSERT_NE(good, Tri::unknown);
    ASSERT_NE(cover, Tri::unknown);
    EXPECT_EQ(good, cover) << emit_code(code);
    yes += good == Tri::yes;
  }
  EXPECT_GT(yes, 0);
}

TEST(GoodCover, WitnessRegionIsNotContractible) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    const auto code = testing::random_code(rng, 4);
    const auto verdict = check_good_cover(code);
    if (verdict.status.value != Tri::no) continue;
    const Face tau = *verdict.status.witness;
    EXPECT_EQ(v_region_contractibility(code, tau).value, Tri::no);
    EXPECT_TRUE(closure(code).contains(tau));
  }
}

}  // namespace
}  // namespace ncode
