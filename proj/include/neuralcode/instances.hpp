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

#include <string>
#include <vector>

#include "neuralcode/analysis.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/error.hpp"

namespace ncode::instances {

namespace detail {

inline std::vector<Face> faces_of(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Face> out;
  for (auto l : lists) out.push_back(Face(l));
  return out;
}

}  // namespace detail

/// {123, 234, 12, 23, 13, 24, 34, 1, 2, 3, 4}, a convex code on 4 neurons.
inline Code intro_code() {
  return Code(4, detail::faces_of({{1, 2, 3}, {2, 3, 4}, {1, 2}, {2, 3}, {1, 3}, {2, 4}, {3, 4}, {1}, {2}, {3}, {4}}));
}

/// The 5-neuron good-cover code that is not convex, with the empty word.
inline Code counterexample() {
  return Code(5, detail::faces_of({{2, 3, 4, 5}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {4, 5},
                                   {3}, {4}, {}}));
}

/// {124, 134, 234, 14, 24, 34}: realizable by connected open sets, yet the
/// missing vertex 4 has a circle as its link.
inline Code connected_not_goodcover() {
  return Code(4, detail::faces_of({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

/// {123, 12, 23, 1, 2}: a locally good code.
inline Code realizable_code() { return Code(3, detail::faces_of({{1, 2, 3}, {1, 2}, {2, 3}, {1}, {2}})); }

/// {13, 23, 1}: V_3 is disconnected.
/// {1,12,13}: closing the realizing regions adds the word 123.
inline Code closed_variant_code() { return Code(3, detail::faces_of({{1}, {1, 2}, {1, 3}})); }

inline Code disconnected_code() { return Code(3, detail::faces_of({{1, 3}, {2, 3}, {1}})); }

/// C_n = all subsets of [n] except [n] itself (the empty word included).
inline Code all_proper_subsets(int n) {
  check_ambient(n);
  if (n > 20) throw Error(ErrorKind::too_large, "C_n is generated for n <= 20");
  std::vector<Face> words;
  const Face top = Face::full(n);
  for_each_subset(top, [&](Face f) {
    if (f != top) words.push_back(f);
  });
  return Code(n, std::move(words));
}

/// 8 vertices, 17 triangles. Built from a triangle whose three sides are
/// glued along the loop 1-2-3 (each side subdivided at 2 and 3) with five
/// interior vertices 4..8. The edges 12, 23 and 13 lie in three triangles,
/// every other edge in two, so no edge is free.
inline SimplicialComplex dunce_hat() {
  return SimplicialComplex(8, detail::faces_of({{1, 2, 5}, {1, 2, 6}, {1, 2, 8}, {1, 3, 4}, {1, 3, 6}, {1, 3, 7},
                                                {1, 4, 7}, {1, 5, 8}, {2, 3, 4}, {2, 3, 7}, {2, 3, 8}, {2, 4, 6},
                                                {2, 5, 7}, {3, 6, 8}, {4, 5, 7}, {4, 5, 8}, {4, 6, 8}}));
}

/// The 6-vertex real projective plane (hemi-icosahedron), 10 triangles.
inline SimplicialComplex rp2() {
  return SimplicialComplex(6, detail::faces_of({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 6},
                                                {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}));
}

inline SimplicialComplex triangle_boundary() {
  return SimplicialComplex(3, detail::faces_of({{1, 2}, {1, 3}, {2, 3}}));
}

inline SimplicialComplex solid_triangle() { return SimplicialComplex(3, detail::faces_of({{1, 2, 3}})); }

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"intro-code",        "counterexample",    "realizable-code",
                                          "disconnected-code", "closed-variant",    "connected-not-goodcover",
                                          "c-n",               "cone-minus-apex",   "dunce-hat",
                                          "rp2"};
  return n;
}

}  // namespace ncode::instances
