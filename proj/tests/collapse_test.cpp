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

#include <algorithm>
#include <random>

#include "neuralcode/collapse.hpp"
#include "neuralcode/homology.hpp"
#include "neuralcode/instances.hpp"
#include "test_support.hpp"

namespace ncode {
namespace {

using testing::F;
using testing::Fs;
using testing::K;

bool has_step(const std::vector<CollapseStep>& steps, const char* sigma, const char* tau) {
  return std::find(steps.begin(), steps.end(), CollapseStep{F(sigma), F(tau)}) != steps.end();
}

/// Oracle: brute-force uniqueness scan over all faces.
std::vector<CollapseStep> free_pairs_oracle(const SimplicialComplex& k, CollapseMode mode) {
  std::vector<CollapseStep> out;
  for (Face sigma : k.faces()) {
    if (sigma.empty()) continue;
    std::vector<Face> containing;
    for (Face f : k.facets()) {
      if (sigma.is_subset_of(f)) containing.push_back(f);
    }
    if (containing.size() != 1) continue;
    const Face tau = containing.front();
    const bool ok = mode == CollapseMode::generalized ? true
                    : mode == CollapseMode::collapse  ? sigma != tau
                                                      : sigma.size() + 1 == tau.size();
    if (ok) out.push_back({sigma, tau});
  }
  return out;
}

TEST(FreePairs, Examples) {
  const auto k = K(4, {"123", "34"});
  const auto steps = free_pairs(k, CollapseMode::collapse);
  for (auto [s, t] : {std::pair{"1", "123"}, {"2", "123"}, {"12", "123"}, {"13", "123"}, {"23", "123"}, {"4", "34"}}) {
    EXPECT_TRUE(has_step(steps, s, t)) << s << "," << t;
  }
  EXPECT_FALSE(has_step(steps, "3", "123"));
  EXPECT_FALSE(has_step(steps, "3", "34"));
  EXPECT_EQ(steps.size(), 6U);
  EXPECT_EQ(steps.front(), (CollapseStep{F("1"), F("123")}));

  EXPECT_TRUE(free_pairs(instances::dunce_hat(), CollapseMode::collapse).empty());
  EXPECT_TRUE(free_pairs(instances::dunce_hat(), CollapseMode::strict).empty());

  const auto point = K(1, {"1"});
  EXPECT_TRUE(free_pairs(point, CollapseMode::collapse).empty());
  EXPECT_EQ(free_pairs(point, CollapseMode::generalized), (std::vector<CollapseStep>{{F("1"), F("1")}}));
}

TEST(FreePairs, MatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_complex(rng, 6);
    for (auto mode : {CollapseMode::generalized, CollapseMode::collapse, CollapseMode::strict}) {
      auto got = free_pairs(k, mode);
      auto want = free_pairs_oracle(k, mode);
      auto by_value = [](const CollapseStep& a, const CollapseStep& b) {
        return a.sigma != b.sigma ? a.sigma < b.sigma : a.tau.bits() < b.tau.bits();
      };
      std::sort(want.begin(), want.end(), by_value);
      EXPECT_EQ(got, want);
    }
  }
}

TEST(ElementaryCollapse, PaperExamples) {
  const auto k = K(4, {"123", "34"});
  EXPECT_EQ(elementary_collapse(k, {F("123"), F("123")}), K(4, {"12", "13", "23", "34"}));
  EXPECT_EQ(elementary_collapse(k, {F("1"), F("123")}, CollapseMode::collapse), K(4, {"23", "34"}));
  EXPECT_EQ(elementary_collapse(K(4, {"34"}), {F("3"), F("34")}, CollapseMode::collapse), K(4, {"4"}));

  // The full three-step collapse to a point.
  const auto end = replay(k, {{F("1"), F("123")}, {F("2"), F("23")}, {F("3"), F("34")}}, CollapseMode::collapse);
  EXPECT_TRUE(end.is_point());
  EXPECT_EQ(end, K(4, {"4"}));
}

TEST(ElementaryCollapse, IllegalSteps) {
  const auto k = K(4, {"123", "34"});
  auto expect_illegal = [&](CollapseStep step, CollapseMode mode) {
    try {
      elementary_collapse(k, step, mode);
      ADD_FAILURE() << "expected IllegalStep";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::illegal_step);
    }
  };
  expect_illegal({F("3"), F("34")}, CollapseMode::collapse);       // 3 lies in two facets
  expect_illegal({F("12"), F("12")}, CollapseMode::generalized);   // not a facet
  expect_illegal({F("123"), F("123")}, CollapseMode::collapse);    // sigma = tau
  expect_illegal({F("1"), F("123")}, CollapseMode::strict);        // codimension 2
  expect_illegal({F("4"), F("123")}, CollapseMode::generalized);   // not contained
}

TEST(IsCollapsible, Examples) {
  const auto k = K(4, {"123", "34"});
  for (auto engine : {CollapseMode::collapse, CollapseMode::strict}) {
    CollapseOptions o;
    o.engine = engine;
    const auto out = is_collapsible(k, o);
    ASSERT_EQ(out.status, Tri::yes);
    EXPECT_TRUE(replay(k, out.certificate, engine).is_point());
  }
  CollapseOptions exhaustive_only;
  exhaustive_only.engine = CollapseMode::collapse;
  exhaustive_only.greedy_restarts = 0;
  const auto first = is_collapsible(k, exhaustive_only);
  // Depth-first in free_pairs order: the first step tried is (1,123).
  EXPECT_EQ(first.certificate.front(), (CollapseStep{F("1"), F("123")}));
  EXPECT_EQ(first.certificate.size(), 3U);

  const auto dunce = is_collapsible(instances::dunce_hat());
  EXPECT_EQ(dunce.status, Tri::no);
  EXPECT_EQ(dunce.nodes_explored, 0U);
  EXPECT_FALSE(dunce.budget_exhausted);

  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(is_collapsible(SimplicialComplex::simplex(Face::full(n), n)).status, Tri::yes);
  }
  EXPECT_THROW(is_collapsible(SimplicialComplex::void_complex(2)), Error);
  CollapseOptions generalized;
  generalized.engine = CollapseMode::generalized;
  EXPECT_THROW(is_collapsible(k, generalized), Error);
}

TEST(IsCollapsible, BudgetExhaustionIsUnknown) {
  // Two disjoint solid tetrahedra plus an edge joining them form a collapsible
  // complex, but one node is not enough to find it exhaustively.
  const auto k = K(8, {"1234", "5678", "45"});
  CollapseOptions o;
  o.greedy_restarts = 0;
  o.budget = 1;
  const auto out = is_collapsible(k, o);
  EXPECT_EQ(out.status, Tri::unknown);
  EXPECT_TRUE(out.budget_exhausted);
  o.budget = 5'000'000;
  EXPECT_EQ(is_collapsible(k, o).status, Tri::yes);
}

TEST(IsCollapsible, NonAcyclicComplexesAreRejected) {
  CollapseOptions searched;
  searched.homology_prune = false;
  searched.greedy_restarts = 0;
  for (const auto& k : {instances::triangle_boundary(), instances::rp2(), K(4, {"12", "34"})}) {
    EXPECT_EQ(is_collapsible(k).status, Tri::no);
    const auto out = is_collapsible(k, searched);
    EXPECT_EQ(out.status, Tri::no);
    EXPECT_FALSE(out.budget_exhausted);
  }
}

TEST(GreedyCollapse, Examples) {
  std::vector<Face> faces;
  for (Face f : instances::solid_triangle().faces()) {
    if (!f.empty()) faces.push_back(f);
  }
  const auto sd = order_complex(faces);
  const auto out = greedy_collapse(sd, 1, 4);
  ASSERT_EQ(out.status, Tri::yes);
  EXPECT_TRUE(replay(sd, out.certificate, CollapseMode::strict).is_point());
  EXPECT_EQ(is_collapsible(sd).status, Tri::yes);

  for (std::uint64_t seed : {1U, 2U, 3U}) EXPECT_EQ(greedy_collapse(instances::dunce_hat(), seed, 3).status, Tri::unknown);

  const auto point = greedy_collapse(K(3, {"2"}), 7, 1);
  EXPECT_EQ(point.status, Tri::yes);
  EXPECT_TRUE(point.certificate.empty());

  // Deterministic for a fixed seed.
  const auto a = greedy_collapse(sd, 42, 3);
  const auto b = greedy_collapse(sd, 42, 3);
  EXPECT_EQ(a.certificate, b.certificate);
}

TEST(CollapseProperties, CertificatesReplay) {
  std::mt19937_64 rng(41);
  int yes = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto k = testing::random_complex(rng, 6);
    for (auto engine : {CollapseMode::collapse, CollapseMode::strict}) {
      CollapseOptions o;
      o.engine = engine;
      o.seed = static_cast<std::uint64_t>(trial);
      const auto out = is_collapsible(k, o);
      if (out.status != Tri::yes) continue;
      ++yes;
      EXPECT_TRUE(replay(k, out.certificate, engine).is_point());
    }
  }
  EXPECT_GT(yes, 50);
}

TEST(CollapseProperties, EnginesAgreeOnRandomComplexes) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 250; ++trial) {
    const auto k = testing::random_complex(rng, 6);
    CollapseOptions general;
    general.engine = CollapseMode::collapse;
    general.homology_prune = false;
    CollapseOptions strict = general;
    strict.engine = CollapseMode::strict;
    const auto a = is_collapsible(k, general);
    const auto b = is_collapsible(k, strict);
    ASSERT_NE(a.status, Tri::unknown);
    EXPECT_EQ(a.status, b.status) << trial;
  }
}

TEST(CollapseProperties, MemoDoesNotChangeAnswers) {
  std::mt19937_64 rng(43);
  CollapseMemo shared;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_complex(rng, 5, 6, 4);
    CollapseOptions with;
    with.homology_prune = false;
    with.greedy_restarts = 0;
    with.memo = &shared;
    CollapseOptions without = with;
    without.use_memo = false;
    without.memo = nullptr;
    EXPECT_EQ(is_collapsible(k, with).status, is_collapsible(k, without).status);
  }
  EXPECT_GT(shared.size(), 0U);
}

// Removing a whole facet from a contractible complex leaves a complex with
// nonzero reduced homology, as long as something nonempty remains.
TEST(CollapseProperties, FacetDeletionBreaksContractibility) {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto k = testing::random_complex(rng, 6);
    if (is_collapsible(k).status != Tri::yes) continue;
    for (const auto& step : free_pairs(k, CollapseMode::generalized)) {
      if (step.sigma != step.tau) continue;
      const auto after = elementary_collapse(k, step, CollapseMode::generalized);
      if (after.dimension() < 0) continue;
      ++checked;
      bool nonzero = false;
      for (int p : {2, 3}) nonzero = nonzero || !reduced_betti(after, p).all_zero();
      EXPECT_TRUE(nonzero);
    }
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace ncode
