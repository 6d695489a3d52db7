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
#include <functional>
#include <vector>

#include "neuralcode/analysis.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/contractibility.hpp"
#include "neuralcode/error.hpp"

namespace ncode {

/// Per neuron i, the codewords whose face interiors make up V_i.
struct CodeComplexRealization {
  Code code;
  /// regions[i - 1] lists {sigma in C : i in sigma} in face order.
  std::vector<std::vector<Face>> regions;

  /// Codewords whose interiors make up V_tau = intersection of V_i, i in tau.
  std::vector<Face> intersection(Face tau) const {
    std::vector<Face> out;
    for (Face w : code.words()) {
      if (!w.empty() && tau.is_subset_of(w)) out.push_back(w);
    }
    return out;
  }
};

inline CodeComplexRealization code_complex_realization(const Code& code) {
  detail::require_nonempty(code);
  CodeComplexRealization r{code, std::vector<std::vector<Face>>(static_cast<std::size_t>(code.ambient_n()))};
  for (Face w : code.words()) {
    for (int i : w.labels()) r.regions[static_cast<std::size_t>(i - 1)].push_back(w);
  }
  return r;
}

/// {eta : eta disjoint from tau, eta | tau in C}, over the same ambient labels.
inline Code code_link(const Code& code, Face tau) {
  if (tau.empty()) throw Error(ErrorKind::invalid_argument, "code link of the empty face");
  std::vector<Face> words;
  for (Face w : code.words()) {
    if (tau.is_subset_of(w)) words.push_back(w - tau);
  }
  return Code(code.ambient_n(), std::move(words));
}

/// Contractibility of V_tau, decided on the order complex of
/// {sigma in C : tau subset of sigma}.
inline TriStatus v_region_contractibility(const Code& code, Face tau, const ContractibilityOptions& options = {}) {
  if (tau.empty()) throw Error(ErrorKind::invalid_argument, "V_tau needs a nonempty tau");
  auto gamma = code_complex_realization(code).intersection(tau);
  if (gamma.empty()) throw Error(ErrorKind::empty_region, "no codeword contains " + tau.to_string());
  return contractibility_status(order_complex(std::move(gamma)), options);
}

/// A relatively open cell of the facet-hyperplane arrangement of the
/// (n-1)-simplex: coordinates positive on `positive`, zero on `zero`,
/// negative elsewhere.
struct ArrangementCell {
  Face positive;
  Face zero;

  int dimension(int n) const { return n - 1 - zero.size(); }

  friend bool operator==(const ArrangementCell&, const ArrangementCell&) = default;
};

inline constexpr int kMaxCellAmbient = 12;

/// Visits every cell once, ordered by positive mask then zero mask.
template <typename F>
void for_each_cell(int n, F&& f) {
  if (n < 1 || n > kMaxCellAmbient) {
    throw Error(ErrorKind::too_large, "cell enumeration supports 1 <= n <= 12, got " + std::to_string(n));
  }
  const std::uint64_t full = Face::full(n).bits();
  for (std::uint64_t p = 1; p <= full; ++p) {
    const std::uint64_t rest = full & ~p;
    std::uint64_t z = 0;
    while (true) {
      f(ArrangementCell{Face(p), Face(z)});
      if (z == rest) break;
      z = (z - rest) & rest;  // next submask of `rest` in increasing order
    }
  }
}

inline std::vector<ArrangementCell> enumerate_cells(int n) {
  std::vector<ArrangementCell> out;
  for_each_cell(n, [&](const ArrangementCell& c) { out.push_back(c); });
  return out;
}

/// The region R_sigma containing the cell. The closed chambers through the
/// cell are those of P <= sigma <= P | Z; the lowest-dimensional one, P,
/// claims it.
inline Face cell_region(const ArrangementCell& cell) { return cell.positive; }

/// Calls f on every sigma with lo <= sigma <= hi.
template <typename F>
void for_each_interval(Face lo, Face hi, F&& f) {
  for_each_subset(hi - lo, [&](Face extra) { f(lo | extra); });
}

/// Code realized by the open sets U_i = int(W_i). A cell lies in U_i iff
/// i is in P and every chamber P <= tau <= P | Z adjacent to it is a region
/// of W_i, i.e. every such tau is a codeword.
inline Code realized_code_from_U(const Code& code) {
  detail::require_nonempty(code);
  const int n = code.ambient_n();
  std::vector<Face> realized;
  // n == 1: the ambient space is a point and the single cell is ({1}, {}).
  for_each_cell(n, [&](const ArrangementCell& cell) {
    bool interior = true;
    for_each_interval(cell.positive, cell.positive | cell.zero, [&](Face tau) { interior = interior && code.contains(tau); });
    if (interior) realized.push_back(cell.positive);
  });
  return Code(n, std::move(realized));
}

/// Code realized by the closures of the U_i: a cell lies in the closure of
/// W_i iff some adjacent chamber tau is a codeword containing i.
inline Code realized_code_from_closed_U(const Code& code) {
  detail::require_nonempty(code);
  const int n = code.ambient_n();
  std::vector<Face> realized;
  for_each_cell(n, [&](const ArrangementCell& cell) {
    Face word;
    for_each_interval(cell.positive, cell.positive | cell.zero, [&](Face tau) {
      if (code.contains(tau)) word = word | tau;
    });
    if (!word.empty()) realized.push_back(word);
  });
  return Code(n, std::move(realized));
}

struct RegionCheck {
  Face tau;
  std::vector<Face> gamma;
  TriStatus status;
};

struct GoodCoverVerdict {
  TriStatus status;
  std::vector<RegionCheck> checks;
};

/// Every nonempty intersection V_tau is contractible. The witness on no is
/// the first tau (face order) whose region is not.
inline GoodCoverVerdict check_good_cover(const Code& code, const AnalysisOptions& options = {}) {
  detail::require_nonempty(code);
  const auto realization = code_complex_realization(code);
  std::vector<Face> taus;
  for (Face f : closure(code).faces()) {
    if (!f.empty()) taus.push_back(f);
  }
  GoodCoverVerdict v;
  v.checks.resize(taus.size());
  parallel_for(taus.size(), options.threads, [&](std::size_t i) {
    auto gamma = realization.intersection(taus[i]);
    auto status = contractibility_status(order_complex(gamma), options.contractibility);
    v.checks[i] = RegionCheck{taus[i], std::move(gamma), std::move(status)};
  });
  std::vector<LinkCheck> as_links;
  as_links.reserve(v.checks.size());
  for (const auto& c : v.checks) as_links.push_back({c.tau, {}, c.status});
  v.status = detail::reduce_checks(as_links);
  return v;
}

inline TriStatus good_cover_check(const Code& code, const AnalysisOptions& options = {}) {
  return check_good_cover(code, options).status;
}

}  // namespace ncode
