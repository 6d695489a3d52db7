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
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "neuralcode/collapse.hpp"
#include "neuralcode/complex.hpp"
#include "neuralcode/contractibility.hpp"
#include "neuralcode/error.hpp"
#include "neuralcode/homology.hpp"

namespace ncode {

struct AnalysisOptions {
  ContractibilityOptions contractibility;
  /// 1 runs every link check on the calling thread, in face order.
  unsigned threads = 1;
};

/// Runs body(i) for i in [0, n). Results must be written to slot i so the
/// reduction afterwards does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::jthread> pool;
  const unsigned count = std::min<std::size_t>(threads, n);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
}

/// All nonempty intersections of nonempty sets of facets (facets included),
/// in face order.
inline std::vector<Face> facet_intersections(const SimplicialComplex& complex) {
  std::vector<Face> closed = complex.facets();
  std::erase_if(closed, [](Face f) { return f.empty(); });
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Face meet = closed[i] & closed[j];
      if (!meet.empty() && std::find(closed.begin(), closed.end(), meet) == closed.end()) {
        closed.push_back(meet);
      }
    }
  }
  sort_faces(closed);
  return closed;
}

struct LinkCheck {
  Face face;
  SimplicialComplex link;
  TriStatus status;
};

/// A criterion verdict together with the per-face checks behind it.
struct LocalVerdict {
  TriStatus status;
  std::vector<LinkCheck> checks;
};

namespace detail {

/// No at the first no-face, else unknown at the first unknown face, else yes.
inline TriStatus reduce_checks(const std::vector<LinkCheck>& checks) {
  for (Tri wanted : {Tri::no, Tri::unknown}) {
    for (const auto& c : checks) {
      if (c.status.value == wanted) {
        TriStatus s = c.status;
        s.witness = c.face;
        return s;
      }
    }
  }
  TriStatus s;
  s.value = Tri::yes;
  s.evidence.reason = Reason::all_links_verified;
  return s;
}

inline TriStatus collapse_verdict(const SimplicialComplex& link, const ContractibilityOptions& options) {
  auto collapse_options = options.collapse;
  collapse_options.homology_prune = false;
  TriStatus s;
  if (auto b = first_nonzero_betti(link, options.primes); b || link.dimension() < 0) {
    s.value = Tri::no;
    s.evidence.reason = Reason::nonzero_betti;
    s.evidence.betti = std::move(b);
    return s;
  }
  const auto outcome = is_collapsible(link, collapse_options);
  s.evidence.nodes_explored = outcome.nodes_explored;
  switch (outcome.status) {
    case Tri::yes:
      s.value = Tri::yes;
      s.evidence.reason = Reason::collapse_certificate;
      s.evidence.collapse_sequence = outcome.certificate;
      break;
    case Tri::no:
      s.value = Tri::no;
      s.evidence.reason = Reason::exhaustive_search;
      break;
    case Tri::unknown:
      s.value = Tri::unknown;
      s.evidence.reason = Reason::budget;
      break;
  }
  return s;
}

template <typename Decide>
std::vector<LinkCheck> check_links(const SimplicialComplex& complex, const std::vector<Face>& faces,
                                   unsigned threads, Decide&& decide) {
  std::vector<LinkCheck> checks(faces.size());
  parallel_for(faces.size(), threads, [&](std::size_t i) {
    auto lk = link(complex, faces[i]);
    auto status = decide(lk);
    checks[i] = LinkCheck{faces[i], std::move(lk), std::move(status)};
  });
  return checks;
}

inline void require_nonempty(const Code& code) {
  if (code.empty()) throw Error(ErrorKind::empty_input, "the code has no codewords");
}

}  // namespace detail

/// Link contractibility for every facet intersection. Faces whose link is
/// not contractible are mandatory; undecided ones are reported separately.
struct MandatoryResult {
  std::vector<Face> found;
  std::vector<Face> unknown;
  std::vector<LinkCheck> checks;
};

inline MandatoryResult mandatory_codewords(const Code& code, const AnalysisOptions& options = {}) {
  detail::require_nonempty(code);
  const auto complex = closure(code);
  MandatoryResult out;
  out.checks = detail::check_links(complex, facet_intersections(complex), options.threads,
                                   [&](const SimplicialComplex& lk) {
                                     return contractibility_status(lk, options.contractibility);
                                   });
  for (const auto& c : out.checks) {
    if (c.status.value == Tri::no) out.found.push_back(c.face);
    if (c.status.value == Tri::unknown) out.unknown.push_back(c.face);
  }
  return out;
}

/// Locally good: every facet intersection missing from the code has a
/// contractible link. The empty codeword plays no role.
inline LocalVerdict check_locally_good(const Code& code, const AnalysisOptions& options = {}) {
  detail::require_nonempty(code);
  const auto complex = closure(code);
  std::vector<Face> missing;
  for (Face f : facet_intersections(complex)) {
    if (!code.contains(f)) missing.push_back(f);
  }
  LocalVerdict v;
  v.checks = detail::check_links(complex, missing, options.threads, [&](const SimplicialComplex& lk) {
    return contractibility_status(lk, options.contractibility);
  });
  v.status = detail::reduce_checks(v.checks);
  return v;
}

inline TriStatus is_locally_good(const Code& code, const AnalysisOptions& options = {}) {
  return check_locally_good(code, options).status;
}

/// Nonempty faces of Delta(C) that are not codewords, in face order.
inline std::vector<Face> missing_faces(const Code& code) {
  std::vector<Face> out;
  for (Face f : closure(code).faces()) {
    if (!f.empty() && !code.contains(f)) out.push_back(f);
  }
  return out;
}

/// Locally great: every nonempty face of Delta(C) missing from the code has
/// a collapsible link.
inline LocalVerdict check_locally_great(const Code& code, const AnalysisOptions& options = {}) {
  detail::require_nonempty(code);
  const auto complex = closure(code);
  LocalVerdict v;
  v.checks = detail::check_links(complex, missing_faces(code), options.threads, [&](const SimplicialComplex& lk) {
    return detail::collapse_verdict(lk, options.contractibility);
  });
  v.status = detail::reduce_checks(v.checks);
  return v;
}

inline TriStatus is_locally_great(const Code& code, const AnalysisOptions& options = {}) {
  return check_locally_great(code, options).status;
}

inline bool is_max_intersection_complete(const Code& code) {
  detail::require_nonempty(code);
  const auto meets = facet_intersections(closure(code));
  return std::all_of(meets.begin(), meets.end(), [&](Face f) { return code.contains(f); });
}

/// Every nonempty face of cone(complex, apex) except the apex itself, with
/// apex = ambient_n + 1.
inline Code cone_minus_apex(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "cone over the void complex has no missing apex");
  const int apex = complex.ambient_n() + 1;
  if (apex > kMaxLabel) throw Error(ErrorKind::too_large, "no free label for the apex");
  const auto coned = cone(complex, apex);
  std::vector<Face> words;
  for (Face f : coned.faces()) {
    if (!f.empty() && f != Face::singleton(apex)) words.push_back(f);
  }
  return Code(apex, std::move(words));
}

struct AnalysisReport {
  Code code;
  int sparsity = 0;
  bool max_intersection_complete = false;
  LocalVerdict locally_good;
  LocalVerdict locally_great;
  std::vector<Face> mandatory_found;
  std::vector<Face> mandatory_unknown;
  std::vector<std::string> implication_notes;
  /// Set when decided verdicts contradict "locally great implies locally good".
  std::optional<std::string> inconsistency;
};

inline std::vector<std::string> implication_notes(const AnalysisReport& r) {
  std::vector<std::string> notes{
      "chain: convex => locally great => good-cover <=> locally good => connected",
      "locally great does not imply convex; locally good does not imply locally great; "
      "connected does not imply locally good",
      "connectedness is not decided by this tool",
  };
  if (r.locally_good.status.value == Tri::no) {
    notes.push_back("locally_good = no: missing mandatory codeword " + r.locally_good.status.witness->to_string() +
                    ", so the code is not a good-cover code");
  }
  if (r.locally_great.status.value == Tri::no && r.locally_good.status.value != Tri::no) {
    notes.push_back("locally_great = no while locally_good != no: a local obstruction of the second kind (" +
                    r.locally_great.status.witness->to_string() + ")");
  }
  if (r.locally_good.status.value == Tri::unknown) {
    notes.push_back("locally_good = unknown: some link is acyclic over the tested fields but has no collapse");
  }
  return notes;
}

/// Full classification: sparsity, max-intersection completeness, both local
/// criteria and the mandatory codewords, sharing one collapse memo.
inline AnalysisReport classify(const Code& code, AnalysisOptions options = {}) {
  detail::require_nonempty(code);
  CollapseMemo memo;
  if (options.contractibility.collapse.memo == nullptr) options.contractibility.collapse.memo = &memo;

  AnalysisReport r;
  r.code = code;
  r.sparsity = sparsity(code);
  r.max_intersection_complete = is_max_intersection_complete(code);
  r.locally_great = check_locally_great(code, options);
  r.locally_good = check_locally_good(code, options);
  auto mandatory = mandatory_codewords(code, options);
  r.mandatory_found = std::move(mandatory.found);
  r.mandatory_unknown = std::move(mandatory.unknown);

  const Tri good = r.locally_good.status.value;
  const Tri great = r.locally_great.status.value;
  if (great == Tri::yes && good != Tri::yes) {
    r.inconsistency = std::string("locally_great = yes but locally_good = ") + to_string(good);
  }
  if (good == Tri::no && great != Tri::no) {
    r.inconsistency = std::string("locally_good = no but locally_great = ") + to_string(great);
  }
  r.implication_notes = implication_notes(r);
  return r;
}

}  // namespace ncode
