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
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "neuralcode/error.hpp"

namespace ncode {

inline constexpr int kMaxLabel = 64;

/// A set of vertex labels drawn from 1..64, stored as one machine word.
/// Label i occupies bit i-1.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

  Face(std::initializer_list<int> labels) {
    for (int v : labels) insert(v);
  }

  static Face from_labels(const std::vector<int>& labels) {
    Face f;
    for (int v : labels) f.insert(v);
    return f;
  }

  /// Face {1, ..., n}.
  static constexpr Face full(int n) {
    return Face(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  static constexpr Face singleton(int v) { return Face(std::uint64_t{1} << (v - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxLabel && ((bits_ >> (v - 1)) & 1U) != 0;
  }

  void insert(int v) {
    if (v < 1 || v > kMaxLabel) {
      throw Error(ErrorKind::label_out_of_range, "vertex label " + std::to_string(v) + " outside 1..64");
    }
    bits_ |= std::uint64_t{1} << (v - 1);
  }

  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(Face other) const { return is_subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }

  /// Largest label, 0 for the empty face.
  constexpr int max_label() const { return 64 - std::countl_zero(bits_); }
  constexpr int min_label() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
  friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }

  /// Size first, then bit-mask value: the deterministic face order used
  /// everywhere (certificates, matrix indexing, relabeling).
  friend constexpr std::strong_ordering operator<=>(Face a, Face b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// "123" when every label is a single digit, "1,10,12" otherwise,
  /// "0" for the empty face.
  std::string to_string() const {
    if (empty()) return "0";
    const auto ls = labels();
    const bool compact = ls.back() <= 9;
    std::string out;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(ls[i]);
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f on every subset of `face` (including the empty face and `face`).
template <typename F>
void for_each_subset(Face face, F&& f) {
  const std::uint64_t mask = face.bits();
  std::uint64_t sub = mask;
  while (true) {
    f(Face(sub));
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

inline void sort_faces(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

/// The inclusion-maximal members of `faces`, in face order.
inline std::vector<Face> maximal_faces(std::vector<Face> faces) {
  sort_faces(faces);
  std::vector<Face> kept;
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
    const Face f = *it;
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [f](Face k) { return f.is_subset_of(k); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace ncode

template <>
struct std::hash<ncode::Face> {
  std::size_t operator()(ncode::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
