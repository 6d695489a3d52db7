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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neuralcode/complex.hpp"
#include "neuralcode/error.hpp"

namespace ncode {

/// Dense matrix over the prime field F_p, row-major.
struct FieldMatrix {
  int prime = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void check_prime(int p) {
  // 46337^2 < 2^31 keeps products inside 64-bit arithmetic with room to spare.
  if (!is_prime(p) || p > 46337) {
    throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not a supported prime");
  }
}

/// Augmented boundary operator from k-faces to (k-1)-faces. For k = 0 the
/// single row is the empty face. Faces are indexed in face order and the
/// coefficient for dropping the i-th smallest vertex is (-1)^i mod p.
inline FieldMatrix boundary_matrix(const SimplicialComplex& complex, int k, int p) {
  check_prime(p);
  if (complex.is_void() || k < 0 || k > complex.dimension()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "k = " + std::to_string(k) + " outside 0.." + std::to_string(complex.dimension()));
  }
  const auto all = complex.faces();
  std::vector<Face> lower;
  std::vector<Face> upper;
  for (Face f : all) {
    if (f.size() == k) lower.push_back(f);
    if (f.size() == k + 1) upper.push_back(f);
  }
  FieldMatrix m{p, lower.size(), upper.size(), std::vector<std::uint32_t>(lower.size() * upper.size(), 0)};
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto verts = upper[c].labels();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Face facet = upper[c] - Face::singleton(verts[i]);
      const auto r = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin());
      m.at(r, c) = (i % 2 == 0) ? 1U : static_cast<std::uint32_t>(p - 1);
    }
  }
  return m;
}

inline std::uint32_t inverse_mod(std::uint32_t a, int p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % static_cast<std::uint32_t>(p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % static_cast<std::uint64_t>(p);
    base = base * base % static_cast<std::uint64_t>(p);
  }
  return static_cast<std::uint32_t>(result);
}

/// Rank by Gaussian elimination over F_p.
inline std::size_t rank(FieldMatrix m) {
  const auto p = static_cast<std::uint64_t>(m.prime);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    const std::uint64_t inv = inverse_mod(m.at(r, c), m.prime);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = static_cast<std::uint32_t>(m.at(r, j) * inv % p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const std::uint64_t factor = m.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) {
        m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + (p - factor) * m.at(r, j)) % p);
      }
    }
    ++r;
  }
  return r;
}

struct BettiVector {
  int prime = 2;
  /// Reduced Betti numbers in dimensions 0..dim.
  std::vector<std::size_t> reduced;

  bool all_zero() const {
    return std::all_of(reduced.begin(), reduced.end(), [](std::size_t b) { return b == 0; });
  }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// The empty-face complex has no dimensions 0..dim, so its vector is
/// empty; its only nonzero group sits in dimension -1 (see is_acyclic).
inline BettiVector reduced_betti(const SimplicialComplex& complex, int p) {
  check_prime(p);
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "reduced homology of the void complex");
  const int dim = complex.dimension();
  BettiVector out{p, {}};
  if (dim < 0) return out;
  const auto fv = complex.f_vector();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
  for (int k = 0; k <= dim; ++k) ranks[static_cast<std::size_t>(k)] = rank(boundary_matrix(complex, k, p));
  for (int k = 0; k <= dim; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out.reduced.push_back(fv[ku] - ranks[ku] - ranks[ku + 1]);
  }
  return out;
}

inline const std::vector<int>& default_primes() {
  static const std::vector<int> primes{2, 3, 5};
  return primes;
}

/// True iff every reduced Betti number vanishes over every listed field.
/// The empty-face complex is never acyclic (reduced H_{-1} is the field).
inline bool is_acyclic(const SimplicialComplex& complex, const std::vector<int>& primes = default_primes()) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "acyclicity of the void complex");
  if (complex.dimension() < 0) return false;
  return std::all_of(primes.begin(), primes.end(), [&](int p) { return reduced_betti(complex, p).all_zero(); });
}

/// First field in `primes` with a nonzero reduced Betti number.
inline std::optional<BettiVector> first_nonzero_betti(const SimplicialComplex& complex,
                                                      const std::vector<int>& primes = default_primes()) {
  for (int p : primes) {
    auto b = reduced_betti(complex, p);
    if (!b.all_zero()) return b;
  }
  return std::nullopt;
}

inline long long euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  long long sign = 1;
  for (std::size_t c : complex.f_vector()) {
    chi += sign * static_cast<long long>(c);
    sign = -sign;
  }
  return chi;
}

}  // namespace ncode
