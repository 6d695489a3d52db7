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

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "neuralcode/error.hpp"
#include "neuralcode/face.hpp"

namespace ncode {

inline void check_ambient(int n) {
  if (n < 1 || n > kMaxLabel) {
    throw Error(ErrorKind::label_out_of_range, "ambient size " + std::to_string(n) + " outside 1..64");
  }
}

/// A combinatorial neural code: a set of codewords over neurons 1..n.
/// The empty codeword may or may not be present; it is tracked like any
/// other word.
class Code {
 public:
  Code() = default;

  Code(int n, std::vector<Face> words) : n_(n), words_(std::move(words)) {
    check_ambient(n_);
    sort_faces(words_);
    for (Face w : words_) {
      if (!w.is_subset_of(Face::full(n_))) {
        throw Error(ErrorKind::label_out_of_range,
                    "codeword " + w.to_string() + " uses a label above n = " + std::to_string(n_));
      }
    }
  }

  int ambient_n() const { return n_; }
  const std::vector<Face>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool contains(Face w) const { return std::binary_search(words_.begin(), words_.end(), w); }
  bool has_empty_word() const { return !words_.empty() && words_.front().empty(); }

  /// Codewords other than the empty word.
  std::vector<Face> nonempty_words() const {
    std::vector<Face> out;
    for (Face w : words_) {
      if (!w.empty()) out.push_back(w);
    }
    return out;
  }

  Code with_empty_word() const {
    auto ws = words_;
    ws.push_back(Face{});
    return Code(n_, std::move(ws));
  }

  Code without_empty_word() const { return Code(n_, nonempty_words()); }

  friend bool operator==(const Code& a, const Code& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

 private:
  int n_ = 1;
  std::vector<Face> words_;
};

/// A downward-closed family of faces, stored by its facets.
///
/// Two degenerate values are distinct: the void complex has no faces at
/// all, while the empty-face complex contains only the empty face.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// The complex generated by `generators`. No generators gives the void
  /// complex.
  SimplicialComplex(int n, std::vector<Face> generators) : n_(n) {
    check_ambient(n_);
    for (Face g : generators) {
      if (!g.is_subset_of(Face::full(n_))) {
        throw Error(ErrorKind::label_out_of_range,
                    "face " + g.to_string() + " uses a label above n = " + std::to_string(n_));
      }
    }
    facets_ = maximal_faces(std::move(generators));
  }

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_face_only(int n) { return SimplicialComplex(n, {Face{}}); }
  static SimplicialComplex simplex(Face f, int n) { return SimplicialComplex(n, {f}); }

  int ambient_n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_face_only() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_point() const { return facets_.size() == 1 && facets_.front().size() == 1; }

  bool contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
  }

  /// -1 for both the void and the empty-face complex.
  int dimension() const {
    int d = -1;
    for (Face f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  Face vertex_set() const {
    Face u;
    for (Face f : facets_) u = u | f;
    return u;
  }

  /// Every face, including the empty face for a nonvoid complex, in face order.
  std::vector<Face> faces() const {
    std::unordered_set<Face> seen;
    for (Face f : facets_) {
      for_each_subset(f, [&](Face s) { seen.insert(s); });
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Faces of dimension k (k = -1 gives the empty face).
  std::vector<Face> faces_of_dimension(int k) const {
    std::vector<Face> out;
    for (Face f : faces()) {
      if (f.size() == k + 1) out.push_back(f);
    }
    return out;
  }

  /// f_vector()[k] is the number of k-dimensional faces, k = 0..dim.
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(dimension() + 1), 0);
    for (Face f : faces()) {
      if (!f.empty()) ++out[static_cast<std::size_t>(f.size() - 1)];
    }
    return out;
  }

  /// Facets that contain f.
  std::vector<Face> facets_containing(Face f) const {
    std::vector<Face> out;
    for (Face g : facets_) {
      if (f.is_subset_of(g)) out.push_back(g);
    }
    return out;
  }

  /// Equality of face sets; the ambient size is not compared.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  int n_ = 1;
  std::vector<Face> facets_;
};

inline std::vector<Face> maximal_codewords(const Code& code) { return maximal_faces(code.words()); }

/// Delta(C): the smallest complex containing every codeword.
inline SimplicialComplex closure(const Code& code) {
  return SimplicialComplex(code.ambient_n(), code.words());
}

inline SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) {
    throw Error(ErrorKind::not_a_face, sigma.to_string() + " is not a face of the complex");
  }
  std::vector<Face> gens;
  for (Face f : complex.facets_containing(sigma)) gens.push_back(f - sigma);
  return SimplicialComplex(complex.ambient_n(), std::move(gens));
}

inline SimplicialComplex restriction(const SimplicialComplex& complex, Face sigma) {
  std::vector<Face> gens;
  for (Face f : complex.facets()) gens.push_back(f & sigma);
  return SimplicialComplex(complex.ambient_n(), std::move(gens));
}

/// Cone on the fresh vertex `apex`; the cone over the void complex is the apex.
inline SimplicialComplex cone(const SimplicialComplex& complex, int apex) {
  if (apex < 1 || apex > kMaxLabel) {
    throw Error(ErrorKind::label_out_of_range, "apex label " + std::to_string(apex) + " outside 1..64");
  }
  if (complex.vertex_set().contains(apex)) {
    throw Error(ErrorKind::vertex_in_use, "vertex " + std::to_string(apex) + " already appears in the complex");
  }
  const int n = std::max(complex.ambient_n(), apex);
  const Face a = Face::singleton(apex);
  if (complex.is_void()) return SimplicialComplex(n, {a});
  std::vector<Face> gens;
  for (Face f : complex.facets()) gens.push_back(f | a);
  return SimplicialComplex(n, std::move(gens));
}

/// Chain complex of a family of nonempty faces ordered by inclusion.
///
/// Input faces are deduplicated and relabeled 1..m in face order (size,
/// then mask). Facets are the maximal chains.
inline SimplicialComplex order_complex(std::vector<Face> faces) {
  sort_faces(faces);
  if (faces.empty()) throw Error(ErrorKind::empty_input, "order complex of an empty family");
  if (faces.front().empty()) throw Error(ErrorKind::empty_input, "order complex input contains the empty face");
  const std::size_t m = faces.size();
  if (m > static_cast<std::size_t>(kMaxLabel)) {
    throw Error(ErrorKind::too_large, "order complex would have " + std::to_string(m) + " vertices (limit 64)");
  }

  // covers[i]: indices j whose face covers faces[i] within the family.
  std::vector<std::vector<std::size_t>> covers(m);
  std::vector<bool> has_lower(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!faces[i].is_proper_subset_of(faces[j])) continue;
      bool between = false;
      for (std::size_t k = i + 1; k < j && !between; ++k) {
        between = faces[i].is_proper_subset_of(faces[k]) && faces[k].is_proper_subset_of(faces[j]);
      }
      if (!between) {
        covers[i].push_back(j);
        has_lower[j] = true;
      }
    }
  }

  std::vector<Face> chains;
  auto extend = [&](auto&& self, std::size_t i, Face chain) -> void {
    chain = chain | Face::singleton(static_cast<int>(i) + 1);
    if (covers[i].empty()) {
      chains.push_back(chain);
      return;
    }
    for (std::size_t j : covers[i]) self(self, j, chain);
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (!has_lower[i]) extend(extend, i, Face{});
  }
  return SimplicialComplex(static_cast<int>(m), std::move(chains));
}

/// Barycentric subdivision: the order complex of the nonempty faces. Vertex
/// i of the result is the i-th nonempty face in face order. Limited to
/// complexes with at most 64 nonempty faces.
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "subdivision of the void complex");
  std::vector<Face> nonempty;
  for (Face f : complex.faces()) {
    if (!f.empty()) nonempty.push_back(f);
  }
  if (nonempty.empty()) return complex;
  return order_complex(std::move(nonempty));
}

inline bool is_k_sparse(const Code& code, int k) {
  return std::all_of(code.words().begin(), code.words().end(), [k](Face w) { return w.size() <= k; });
}

/// Smallest k for which the code is k-sparse.
inline int sparsity(const Code& code) {
  int k = 0;
  for (Face w : code.words()) k = std::max(k, w.size());
  return k;
}

/// Byte string identifying the face set: 'V' for the void complex,
/// otherwise eight little-endian bytes per facet in face order.
inline std::string canonical_key(const SimplicialComplex& complex) {
  if (complex.is_void()) return "V";
  std::string key;
  key.reserve(complex.facets().size() * 8);
  for (Face f : complex.facets()) {
    std::uint64_t b = f.bits();
    for (int i = 0; i < 8; ++i) {
      key.push_back(static_cast<char>(b & 0xFFU));
      b >>= 8;
    }
  }
  return key;
}

}  // namespace ncode
