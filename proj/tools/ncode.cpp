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

// ncode: classify combinatorial neural codes with replayable certificates.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neuralcode/neuralcode.hpp"
#include "neuralcode/report.hpp"

namespace {

using nlohmann::json;
using namespace ncode;

constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct GlobalFlags {
  std::uint64_t budget = 5'000'000;
  std::vector<int> primes{2, 3, 5};
  std::uint64_t seed = 1;
  bool deterministic = false;
  bool json = false;
  bool strict = false;
  unsigned threads = 0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisOptions analysis_options(const GlobalFlags& g) {
  AnalysisOptions o;
  o.contractibility.primes = g.primes;
  o.contractibility.collapse.budget = g.budget;
  o.contractibility.collapse.seed = g.seed;
  if (g.deterministic) {
    o.threads = 1;
  } else {
    o.threads = g.threads != 0 ? g.threads : std::max(1U, std::thread::hardware_concurrency());
  }
  return o;
}

/// Worst verdict seen, mapped to the --strict exit code.
struct ExitTracker {
  bool saw_no = false;
  bool saw_unknown = false;

  void add(Tri t) {
    saw_no = saw_no || t == Tri::no;
    saw_unknown = saw_unknown || t == Tri::unknown;
  }

  int code(bool strict) const {
    if (!strict) return 0;
    if (saw_no) return kExitNo;
    if (saw_unknown) return kExitUnknown;
    return 0;
  }
};

std::string faces_text(const std::vector<Face>& faces) {
  std::string out = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i > 0) out += ", ";
    out += faces[i].to_string();
  }
  return out + "}";
}

std::string steps_text(const std::vector<CollapseStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += " ";
    out += "(" + s.sigma.to_string() + "," + s.tau.to_string() + ")";
  }
  return out.empty() ? "(none)" : out;
}

std::string evidence_text(const Evidence& e) {
  std::string out = to_string(e.reason);
  if (e.reason == Reason::collapse_certificate) out += " " + steps_text(e.collapse_sequence);
  if (e.betti) {
    out += " F_" + std::to_string(e.betti->prime) + " reduced betti (";
    for (std::size_t i = 0; i < e.betti->reduced.size(); ++i) {
      out += (i > 0 ? "," : "") + std::to_string(e.betti->reduced[i]);
    }
    out += ")";
  }
  if (e.apex) out += " apex " + std::to_string(*e.apex);
  return out;
}

std::string status_text(const TriStatus& s) {
  std::string out = to_string(s.value);
  if (s.witness) out += " (witness " + s.witness->to_string() + ")";
  return out + " [" + evidence_text(s.evidence) + "]";
}

void print_checks(std::ostream& os, const std::vector<LinkCheck>& checks) {
  for (const auto& c : checks) {
    os << "    " << c.face.to_string() << ": link " << faces_text(c.link.facets()) << " -> "
       << status_text(c.status) << "\n";
  }
}

void emit(const GlobalFlags& g, const json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_classify(const GlobalFlags& g, const std::string& path) {
  const Code code = parse_code(read_file(path));
  const auto start = std::chrono::steady_clock::now();
  const auto report = classify(code, analysis_options(g));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream os;
  os << "code: " << faces_text(code.words()) << " on n = " << code.ambient_n() << "\n";
  os << "sparsity: " << report.sparsity << "\n";
  os << "max_intersection_complete: " << (report.max_intersection_complete ? "true" : "false") << "\n";
  os << "locally_good: " << status_text(report.locally_good.status) << "\n";
  print_checks(os, report.locally_good.checks);
  os << "locally_great: " << status_text(report.locally_great.status) << "\n";
  print_checks(os, report.locally_great.checks);
  os << "mandatory found: " << faces_text(report.mandatory_found) << "\n";
  os << "mandatory unknown: " << faces_text(report.mandatory_unknown) << "\n";
  for (const auto& note : report.implication_notes) os << "note: " << note << "\n";
  if (report.inconsistency) os << "INTERNAL INCONSISTENCY: " << *report.inconsistency << "\n";

  emit(g, report::classification(report, g.deterministic ? std::nullopt : std::optional<double>(ms)), os.str());
  if (report.inconsistency) return kExitInternal;
  ExitTracker t;
  t.add(report.locally_good.status.value);
  t.add(report.locally_great.status.value);
  return t.code(g.strict);
}

int run_mandatory(const GlobalFlags& g, const std::string& path) {
  const Code code = parse_code(read_file(path));
  const auto result = mandatory_codewords(code, analysis_options(g));
  std::vector<Face> absent;
  for (Face f : result.found) {
    if (!code.contains(f)) absent.push_back(f);
  }
  json j{{"schema_version", report::kSchemaVersion},
         {"input", report::to_json(code)},
         {"found", report::to_json(result.found)},
         {"unknown", report::to_json(result.unknown)},
         {"missing_from_code", report::to_json(absent)}};
  json checks = json::array();
  for (const auto& c : result.checks) checks.push_back(report::to_json(c));
  j["links"] = std::move(checks);

  std::ostringstream os;
  os << "mandatory found: " << faces_text(result.found) << "\n";
  os << "mandatory unknown: " << faces_text(result.unknown) << "\n";
  os << "mandatory but missing from the code: " << faces_text(absent) << "\n";
  print_checks(os, result.checks);
  emit(g, j, os.str());

  ExitTracker t;
  t.add(absent.empty() ? Tri::yes : Tri::no);
  if (!result.unknown.empty()) t.add(Tri::unknown);
  return t.code(g.strict);
}

int run_links(const GlobalFlags& g, const std::string& path, const std::string& face_token) {
  const Code code = parse_code(read_file(path));
  const Face sigma = parse_document(face_token).words.front();
  const auto complex = closure(code);
  const auto lk = link(complex, sigma);
  const auto options = analysis_options(g);
  const auto contractible = contractibility_status(lk, options.contractibility);
  const auto collapsible = detail::collapse_verdict(lk, options.contractibility);

  json j{{"schema_version", report::kSchemaVersion},
         {"input", report::to_json(code)},
         {"face", report::to_json(sigma)},
         {"in_code", code.contains(sigma)},
         {"link_facets", report::to_json(lk.facets())},
         {"contractible", report::to_json(contractible)},
         {"collapsible", report::to_json(collapsible)}};
  std::ostringstream os;
  os << "link of " << sigma.to_string() << ": " << faces_text(lk.facets()) << "\n";
  os << "contractible: " << status_text(contractible) << "\n";
  os << "collapsible: " << status_text(collapsible) << "\n";
  emit(g, j, os.str());
  ExitTracker t;
  t.add(contractible.value);
  return t.code(g.strict);
}

int run_collapse(const GlobalFlags& g, const std::string& path, const std::string& engine, bool greedy) {
  const auto complex = parse_complex(read_file(path));
  CollapseOptions o;
  o.engine = engine == "collapse" ? CollapseMode::collapse : CollapseMode::strict;
  o.budget = g.budget;
  o.seed = g.seed;
  o.greedy_restarts = greedy ? 2 : 0;
  const auto outcome = is_collapsible(complex, o);
  json j = report::to_json(outcome);
  j["schema_version"] = report::kSchemaVersion;
  j["engine"] = to_string(o.engine);
  j["facets"] = report::to_json(complex.facets());
  std::ostringstream os;
  os << "collapsible (" << to_string(o.engine) << " engine): " << to_string(outcome.status) << "\n";
  if (outcome.status == Tri::yes) os << "certificate: " << steps_text(outcome.certificate) << "\n";
  os << "nodes explored: " << outcome.nodes_explored << (outcome.budget_exhausted ? " (budget exhausted)" : "")
     << "\n";
  emit(g, j, os.str());
  ExitTracker t;
  t.add(outcome.status);
  return t.code(g.strict);
}

int run_homology(const GlobalFlags& g, const std::string& path) {
  const auto complex = parse_complex(read_file(path));
  json arr = json::array();
  std::ostringstream os;
  os << "f-vector:";
  for (auto c : complex.f_vector()) os << " " << c;
  os << "\n";
  for (int p : g.primes) {
    const auto b = reduced_betti(complex, p);
    arr.push_back(report::to_json(b));
    os << "reduced betti over F_" << p << ":";
    for (auto x : b.reduced) os << " " << x;
    os << "\n";
  }
  json j{{"schema_version", report::kSchemaVersion},
         {"facets", report::to_json(complex.facets())},
         {"f_vector", complex.f_vector()},
         {"betti", arr},
         {"acyclic", is_acyclic(complex, g.primes)}};
  emit(g, j, os.str());
  return 0;
}

/// All codes on n neurons without the empty word, in mask order.
std::vector<Code> all_codes(int n) {
  std::vector<Face> faces;
  for_each_subset(Face::full(n), [&](Face f) {
    if (!f.empty()) faces.push_back(f);
  });
  std::sort(faces.begin(), faces.end());
  std::vector<Code> out;
  const std::uint64_t count = std::uint64_t{1} << faces.size();
  for (std::uint64_t m = 1; m < count; ++m) {
    std::vector<Face> words;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if ((m >> i) & 1U) words.push_back(faces[i]);
    }
    out.emplace_back(n, std::move(words));
  }
  return out;
}

int run_realize_verify(const GlobalFlags& g, const std::optional<std::string>& path, int exhaustive, bool closed) {
  std::vector<Code> codes;
  if (path) codes.push_back(parse_code(read_file(*path)));
  if (exhaustive > 0) {
    if (exhaustive > 4) throw Error(ErrorKind::too_large, "--exhaustive supports n <= 4");
    auto more = all_codes(exhaustive);
    codes.insert(codes.end(), more.begin(), more.end());
  }
  if (codes.empty()) throw CLI::ValidationError("realize-verify", "give a code file or --exhaustive N");

  json results = json::array();
  std::ostringstream os;
  std::size_t mismatches = 0;
  for (const auto& code : codes) {
    const Code realized = closed ? realized_code_from_closed_U(code) : realized_code_from_U(code);
    const Code expected = code.without_empty_word();
    const bool match = realized == expected;
    mismatches += match ? 0 : 1;
    results.push_back({{"input", report::to_json(code)}, {"realized", report::to_json(realized)}, {"match", match}});
    os << faces_text(code.words()) << " -> " << faces_text(realized.words()) << ": " << (match ? "match" : "mismatch")
       << "\n";
  }
  os << codes.size() - mismatches << "/" << codes.size() << " match\n";
  json j{{"schema_version", report::kSchemaVersion},
         {"variant", closed ? "closed" : "open"},
         {"checked", codes.size()},
         {"mismatches", mismatches},
         {"results", results}};
  emit(g, j, os.str());
  ExitTracker t;
  t.add(mismatches == 0 ? Tri::yes : Tri::no);
  return t.code(g.strict);
}

int run_goodcover(const GlobalFlags& g, const std::string& path) {
  const Code code = parse_code(read_file(path));
  const auto v = check_good_cover(code, analysis_options(g));
  json j = report::to_json(v);
  j["schema_version"] = report::kSchemaVersion;
  j["input"] = report::to_json(code);
  std::ostringstream os;
  os << "good cover (V_tau contractible for every tau): " << status_text(v.status) << "\n";
  for (const auto& c : v.checks) {
    os << "    V_" << c.tau.to_string() << " from " << faces_text(c.gamma) << " -> " << status_text(c.status) << "\n";
  }
  emit(g, j, os.str());
  ExitTracker t;
  t.add(v.status.value);
  return t.code(g.strict);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

/// Vertex i of the output is the i-th nonempty face of the input, in face order.
int run_subdivide(const std::string& path, const std::string& out_path) {
  const auto complex = parse_complex(read_file(path));
  write_output(emit_complex(barycentric_subdivision(complex)), out_path);
  return 0;
}

int run_generate(const std::string& name, const std::vector<std::string>& args, const std::string& out_path) {
  std::string text;
  if (name == "intro-code") {
    text = emit_code(instances::intro_code());
  } else if (name == "counterexample") {
    text = emit_code(instances::counterexample());
  } else if (name == "realizable-code") {
    text = emit_code(instances::realizable_code());
  } else if (name == "disconnected-code") {
    text = emit_code(instances::disconnected_code());
  } else if (name == "closed-variant") {
    text = emit_code(instances::closed_variant_code());
  } else if (name == "connected-not-goodcover") {
    text = emit_code(instances::connected_not_goodcover());
  } else if (name == "c-n") {
    if (args.empty()) throw CLI::ValidationError("generate c-n", "needs N");
    int n = 0;
    try {
      n = std::stoi(args.front());
    } catch (const std::exception&) {
      throw CLI::ValidationError("generate c-n", "N must be an integer");
    }
    text = emit_code(instances::all_proper_subsets(n));
  } else if (name == "cone-minus-apex") {
    if (args.empty()) throw CLI::ValidationError("generate cone-minus-apex", "needs a complex file or instance name");
    const std::string& src = args.front();
    SimplicialComplex base;
    if (src == "dunce-hat") {
      base = instances::dunce_hat();
    } else if (src == "rp2") {
      base = instances::rp2();
    } else {
      base = parse_complex(read_file(src));
    }
    text = emit_code(cone_minus_apex(base));
  } else if (name == "dunce-hat") {
    text = emit_complex(instances::dunce_hat());
  } else if (name == "rp2") {
    text = emit_complex(instances::rp2());
  } else {
    throw CLI::ValidationError("generate", "unknown instance '" + name + "'");
  }
  write_output(text, out_path);
  return 0;
}

std::vector<int> parse_primes(const std::string& list) {
  std::vector<int> primes;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    int p = 0;
    try {
      p = std::stoi(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--primes", "'" + item + "' is not an integer");
    }
    if (!is_prime(p)) throw CLI::ValidationError("--primes", item + " is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw CLI::ValidationError("--primes", "empty list");
  return primes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide local obstructions of combinatorial neural codes, with certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  std::string primes = "2,3,5";
  app.add_option("--budget", g.budget, "collapse search node limit per complex")->capture_default_str();
  app.add_option("--primes", primes, "comma-separated homology fields")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for the greedy collapse front-end")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)")->capture_default_str();
  app.add_flag("--deterministic", g.deterministic, "single-threaded, stable certificates, no timings");
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_flag("--strict", g.strict, "exit 1 on a no verdict, 2 on an unknown verdict");

  std::string file;
  std::string face;
  std::string engine = "strict";
  bool no_greedy = false;
  int exhaustive = 0;
  bool closed = false;
  std::string name;
  std::vector<std::string> gen_args;
  std::string out_path;

  auto* classify_cmd = app.add_subcommand("classify", "locally good / locally great report for a code file");
  classify_cmd->add_option("file", file, "code file")->required();
  auto* mandatory_cmd = app.add_subcommand("mandatory", "mandatory codewords of a code file");
  mandatory_cmd->add_option("file", file, "code file")->required();
  auto* links_cmd = app.add_subcommand("links", "link of one face of the code's complex");
  links_cmd->add_option("file", file, "code file")->required();
  links_cmd->add_option("--face", face, "face, e.g. 24 or 2,4")->required();
  auto* collapse_cmd = app.add_subcommand("collapse", "collapsibility of a complex file");
  collapse_cmd->add_option("file", file, "complex file (one facet per line)")->required();
  collapse_cmd->add_option("--engine", engine, "strict or collapse")
      ->check(CLI::IsMember({"strict", "collapse"}))
      ->capture_default_str();
  collapse_cmd->add_flag("--no-greedy", no_greedy, "skip the randomized front-end");
  auto* homology_cmd = app.add_subcommand("homology", "reduced Betti numbers of a complex file");
  homology_cmd->add_option("file", file, "complex file")->required();
  auto* realize_cmd = app.add_subcommand("realize-verify", "check the open-region realization reproduces the code");
  realize_cmd->add_option("file", file, "code file");
  realize_cmd->add_option("--exhaustive", exhaustive, "also check every code on N <= 4 neurons");
  realize_cmd->add_flag("--closed", closed, "use closures of the regions instead");
  auto* goodcover_cmd = app.add_subcommand("goodcover", "contractibility of every region intersection");
  goodcover_cmd->add_option("file", file, "code file")->required();
  auto* subdivide_cmd = app.add_subcommand("subdivide", "barycentric subdivision of a complex file");
  subdivide_cmd->add_option("file", file, "complex file")->required();
  subdivide_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  auto* generate_cmd = app.add_subcommand("generate", "write a named instance");
  generate_cmd->add_option("name", name, "intro-code | counterexample | realizable-code | disconnected-code | "
                                         "closed-variant | connected-not-goodcover | c-n N | "
                                         "cone-minus-apex FILE | dunce-hat | rp2")
      ->required();
  generate_cmd->add_option("args", gen_args, "instance argument");
  generate_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    g.primes = parse_primes(primes);
    if (classify_cmd->parsed()) return run_classify(g, file);
    if (mandatory_cmd->parsed()) return run_mandatory(g, file);
    if (links_cmd->parsed()) return run_links(g, file, face);
    if (collapse_cmd->parsed()) return run_collapse(g, file, engine, !no_greedy);
    if (homology_cmd->parsed()) return run_homology(g, file);
    if (realize_cmd->parsed()) {
      return run_realize_verify(g, file.empty() ? std::nullopt : std::optional<std::string>(file), exhaustive, closed);
    }
    if (goodcover_cmd->parsed()) return run_goodcover(g, file);
    if (subdivide_cmd->parsed()) return run_subdivide(file, out_path);
    if (generate_cmd->parsed()) return run_generate(name, gen_args, out_path);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::inconsistent ? kExitInternal : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
