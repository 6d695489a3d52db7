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
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "neuralcode/complex.hpp"
#include "neuralcode/error.hpp"
#include "neuralcode/homology.hpp"

namespace ncode {

/// Which removals count as a step.
///   generalized: sigma may equal tau (a d-collapse step),
///   collapse:    sigma a proper subface of tau,
///   strict:      sigma a codimension-one subface of tau.
enum class CollapseMode { generalized, collapse, strict };

inline const char* to_string(CollapseMode m) {
  switch (m) {
    case CollapseMode::generalized: return "generalized";
    case CollapseMode::collapse: return "collapse";
    case CollapseMode::strict: return "strict";
  }
  return "?";
}

struct CollapseStep {
  Face sigma;
  Face tau;

  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

enum class Tri { yes, no, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

struct CollapseOutcome {
  Tri status = Tri::unknown;
  /// Present on yes: replaying it from the input ends at a single point.
  std::vector<CollapseStep> certificate;
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

inline bool mode_admits(CollapseMode mode, Face sigma, Face tau) {
  if (sigma.empty() || !sigma.is_subset_of(tau)) return false;
  switch (mode) {
    case CollapseMode::generalized: return true;
    case CollapseMode::collapse: return sigma != tau;
    case CollapseMode::strict: return sigma.size() + 1 == tau.size();
  }
  return false;
}

/// All legal steps of `mode`, ordered by (|sigma|, sigma, tau).
inline std::vector<CollapseStep> free_pairs(const SimplicialComplex& complex, CollapseMode mode) {
  std::vector<CollapseStep> out;
  const auto& facets = complex.facets();
  for (Face tau : facets) {
    auto consider = [&](Face sigma) {
      if (!mode_admits(mode, sigma, tau)) return;
      for (Face other : facets) {
        if (other != tau && sigma.is_subset_of(other)) return;
      }
      out.push_back({sigma, tau});
    };
    if (mode == CollapseMode::strict) {
      for (int v : tau.labels()) consider(tau - Face::singleton(v));
    } else {
      for_each_subset(tau, consider);
    }
  }
  std::sort(out.begin(), out.end(), [](const CollapseStep& a, const CollapseStep& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.tau.bits() < b.tau.bits();
  });
  return out;
}

/// Removes every face containing step.sigma. Throws IllegalStep naming the
/// violated condition when the step is not legal under `mode`.
inline SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const CollapseStep& step,
                                             CollapseMode mode = CollapseMode::generalized) {
  const Face sigma = step.sigma;
  const Face tau = step.tau;
  if (sigma.empty()) throw Error(ErrorKind::illegal_step, "sigma is empty");
  if (!sigma.is_subset_of(tau)) throw Error(ErrorKind::illegal_step, "sigma is not contained in tau");
  const auto& facets = complex.facets();
  if (std::find(facets.begin(), facets.end(), tau) == facets.end()) {
    throw Error(ErrorKind::illegal_step, "tau = " + tau.to_string() + " is not a facet");
  }
  if (complex.facets_containing(sigma).size() != 1) {
    throw Error(ErrorKind::illegal_step, "tau is not the unique facet containing sigma = " + sigma.to_string());
  }
  if (!mode_admits(mode, sigma, tau)) {
    throw Error(ErrorKind::illegal_step,
                std::string("step (") + sigma.to_string() + ", " + tau.to_string() + ") is not a " +
                    to_string(mode) + " step");
  }
  std::vector<Face> gens;
  gens.reserve(facets.size() + static_cast<std::size_t>(sigma.size()));
  for (Face f : facets) {
    if (f != tau) gens.push_back(f);
  }
  for (int v : sigma.labels()) gens.push_back(tau - Face::singleton(v));
  return SimplicialComplex(complex.ambient_n(), std::move(gens));
}

/// Replays `steps` from `complex` under `mode`; returns the final complex.
inline SimplicialComplex replay(SimplicialComplex complex, const std::vector<CollapseStep>& steps,
                                CollapseMode mode) {
  for (const auto& s : steps) complex = elementary_collapse(complex, s, mode);
  return complex;
}

/// Shared record of decided intermediate complexes. Safe for concurrent use;
/// inserts never overwrite an existing entry.
class CollapseMemo {
 public:
  struct Entry {
    bool collapsible = false;
    /// On collapsible entries: steps from the recorded complex to a point.
    std::vector<CollapseStep> continuation;
  };

  std::optional<Entry> find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, Entry entry) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, std::move(entry));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Entry> table_;
};

struct CollapseOptions {
  CollapseMode engine = CollapseMode::strict;
  std::uint64_t budget = 5'000'000;
  /// Greedy front-end; 0 restarts disables it.
  int greedy_restarts = 2;
  std::uint64_t seed = 1;
  /// A complex that is not acyclic over F_2 cannot collapse; answer no
  /// without searching.
  bool homology_prune = true;
  bool use_memo = true;
  CollapseMemo* memo = nullptr;
};

/// Seeded random collapsing. Reports yes with a certificate or unknown,
/// never no.
inline CollapseOutcome greedy_collapse(const SimplicialComplex& complex, std::uint64_t seed, int restarts,
                                       CollapseMode mode = CollapseMode::strict) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "collapsibility of the void complex");
  CollapseOutcome out;
  if (complex.is_point()) {
    out.status = Tri::yes;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    SimplicialComplex current = complex;
    std::vector<CollapseStep> steps;
    while (!current.is_point()) {
      const auto pairs = free_pairs(current, mode);
      if (pairs.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      const auto& step = pairs[pick(rng)];
      current = elementary_collapse(current, step, mode);
      steps.push_back(step);
      ++out.nodes_explored;
    }
    if (current.is_point()) {
      out.status = Tri::yes;
      out.certificate = std::move(steps);
      return out;
    }
  }
  out.status = Tri::unknown;
  return out;
}

namespace detail {

enum class SearchResult { success, failure, budget };

class CollapseSearch {
 public:
  CollapseSearch(CollapseMode mode, std::uint64_t budget, CollapseMemo* memo)
      : mode_(mode), budget_(budget), memo_(memo) {}

  SearchResult run(const SimplicialComplex& start) { return visit(start); }

  const std::vector<CollapseStep>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::string key_of(const SimplicialComplex& c) const {
    return std::string(1, static_cast<char>('0' + static_cast<int>(mode_))) + canonical_key(c);
  }

  SearchResult visit(const SimplicialComplex& current) {
    if (current.is_point()) return SearchResult::success;
    std::string key;
    if (memo_ != nullptr) {
      key = key_of(current);
      if (auto hit = memo_->find(key)) {
        if (!hit->collapsible) return SearchResult::failure;
        path_.insert(path_.end(), hit->continuation.begin(), hit->continuation.end());
        return SearchResult::success;
      }
    }
    if (nodes_ >= budget_) return SearchResult::budget;
    ++nodes_;
    const std::size_t depth = path_.size();
    bool cut = false;
    for (const auto& step : free_pairs(current, mode_)) {
      path_.push_back(step);
      const auto r = visit(elementary_collapse(current, step, mode_));
      if (r == SearchResult::success) {
        if (memo_ != nullptr) {
          memo_->insert(key, {true, std::vector<CollapseStep>(path_.begin() + static_cast<std::ptrdiff_t>(depth),
                                                              path_.end())});
        }
        return r;
      }
      path_.resize(depth);
      if (r == SearchResult::budget) {
        cut = true;
        break;
      }
    }
    if (cut) return SearchResult::budget;
    if (memo_ != nullptr) memo_->insert(key, {false, {}});
    return SearchResult::failure;
  }

  CollapseMode mode_;
  std::uint64_t budget_;
  CollapseMemo* memo_;
  std::vector<CollapseStep> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Decides whether the complex collapses to a point.
///
/// Exhaustive depth-first search over legal steps in free_pairs order with
/// memoized outcomes. No is reported only once the search space is
/// exhausted (or homology rules collapsibility out); unknown means the
/// node budget ran out.
inline CollapseOutcome is_collapsible(const SimplicialComplex& complex, const CollapseOptions& options = {}) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "collapsibility of the void complex");
  if (options.engine == CollapseMode::generalized) {
    throw Error(ErrorKind::invalid_argument, "collapsibility needs the collapse or strict engine");
  }
  CollapseOutcome out;
  if (complex.is_point()) {
    out.status = Tri::yes;
    return out;
  }
  if (free_pairs(complex, options.engine).empty()) {
    out.status = Tri::no;
    return out;
  }
  if (options.homology_prune && !is_acyclic(complex, {2})) {
    out.status = Tri::no;
    return out;
  }
  if (options.greedy_restarts > 0) {
    auto greedy = greedy_collapse(complex, options.seed, options.greedy_restarts, options.engine);
    if (greedy.status == Tri::yes) return greedy;
    out.nodes_explored = greedy.nodes_explored;
  }

  CollapseMemo local;
  CollapseMemo* memo = options.use_memo ? (options.memo != nullptr ? options.memo : &local) : nullptr;
  detail::CollapseSearch search(options.engine, options.budget, memo);
  const auto result = search.run(complex);
  out.nodes_explored += search.nodes();
  switch (result) {
    case detail::SearchResult::success:
      out.status = Tri::yes;
      out.certificate = search.path();
      break;
    case detail::SearchResult::failure:
      out.status = Tri::no;
      break;
    case detail::SearchResult::budget:
      out.status = Tri::unknown;
      out.budget_exhausted = true;
      break;
  }
  return out;
}

}  // namespace ncode
