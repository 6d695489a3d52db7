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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neuralcode/collapse.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/homology.hpp"

namespace ncode {

/// What backs a verdict.
enum class Reason {
  tree_test,             // dimension <= 1: exact tree / non-tree decision
  cone_apex,             // a vertex lies in every facet
  collapse_certificate,  // replayable collapse sequence to a point
  exhaustive_search,     // every collapse sequence was explored and none reaches a point
  nonzero_betti,         // a reduced Betti number is nonzero over some F_p
  budget,                // the collapse search ran out of nodes
  inconclusive,          // acyclic over the tested fields, yet no collapse found
  all_links_verified,    // every quantified face carries a positive certificate
};

inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::tree_test: return "tree-test";
    case Reason::cone_apex: return "cone-apex";
    case Reason::collapse_certificate: return "collapse-certificate";
    case Reason::exhaustive_search: return "exhaustive-search";
    case Reason::nonzero_betti: return "nonzero-betti";
    case Reason::budget: return "budget";
    case Reason::inconclusive: return "inconclusive";
    case Reason::all_links_verified: return "all-links-verified";
  }
  return "?";
}

struct Evidence {
  Reason reason = Reason::inconclusive;
  std::vector<CollapseStep> collapse_sequence;
  std::optional<BettiVector> betti;
  std::optional<int> apex;
  std::uint64_t nodes_explored = 0;
};

/// A three-valued verdict. On no, `witness` names the obstructing face.
struct TriStatus {
  Tri value = Tri::unknown;
  std::optional<Face> witness;
  Evidence evidence;
};

struct ContractibilityOptions {
  CollapseOptions collapse;
  std::vector<int> primes = default_primes();
};

namespace detail {

inline bool is_tree(const SimplicialComplex& graph) {
  const Face verts = graph.vertex_set();
  std::size_t edges = 0;
  // Union-find over labels.
  std::vector<int> parent(65);
  for (int i = 0; i <= 64; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Face f : graph.facets()) {
    if (f.size() != 2) continue;
    ++edges;
    const auto ls = f.labels();
    const int a = find(ls[0]);
    const int b = find(ls[1]);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return edges + 1 == static_cast<std::size_t>(verts.size());
}

}  // namespace detail

/// Contractibility verdict by the strategy ladder; the first conclusive
/// rung wins:
///   1. dim <= 0: yes iff exactly one vertex;
///   2. dim == 1: yes iff the graph is a tree (exact);
///   3. a vertex in every facet: yes (cone);
///   4. collapsible: yes;
///   5. a nonzero reduced Betti number over a tested field: no;
///   6. otherwise unknown.
inline TriStatus contractibility_status(const SimplicialComplex& complex, const ContractibilityOptions& options = {}) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "contractibility of the void complex");
  TriStatus s;
  const int dim = complex.dimension();
  if (dim <= 1) {
    const bool tree = dim == 0 ? complex.facets().size() == 1 : detail::is_tree(complex);
    s.value = tree ? Tri::yes : Tri::no;
    s.evidence.reason = Reason::tree_test;
    return s;
  }

  Face common = complex.facets().front();
  for (Face f : complex.facets()) common = common & f;
  if (!common.empty()) {
    s.value = Tri::yes;
    s.evidence.reason = Reason::cone_apex;
    s.evidence.apex = common.min_label();
    return s;
  }

  // Rungs 4 and 5 commute: a complex with nonzero reduced homology cannot
  // collapse, so the cheap rank computation runs first.
  if (auto b = first_nonzero_betti(complex, options.primes)) {
    s.value = Tri::no;
    s.evidence.reason = Reason::nonzero_betti;
    s.evidence.betti = std::move(b);
    return s;
  }
  auto collapse_options = options.collapse;
  collapse_options.homology_prune = false;
  const auto collapsed = is_collapsible(complex, collapse_options);
  s.evidence.nodes_explored = collapsed.nodes_explored;
  if (collapsed.status == Tri::yes) {
    s.value = Tri::yes;
    s.evidence.reason = Reason::collapse_certificate;
    s.evidence.collapse_sequence = collapsed.certificate;
    return s;
  }
  s.value = Tri::unknown;
  s.evidence.reason = collapsed.budget_exhausted ? Reason::budget : Reason::inconclusive;
  return s;
}

}  // namespace ncode
