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
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "neuralcode/complex.hpp"
#include "neuralcode/error.hpp"

namespace ncode {

/// Raw contents of a code or complex file.
///
/// One word per line; '#' starts a comment. A line "n = 7" (or "n: 7")
/// declares the ambient size. Word forms:
///   "2 3 4 5" or "2,3,4,5"   separated labels
///   "2345"                   compact digits, one label per digit
///   "0111"                   binary string over neurons 1..n
///   "0" or "empty"           the empty word
/// Binary and label forms may not be mixed in one file.
struct CodeFileDocument {
  std::optional<int> declared_n;
  std::vector<Face> words;
  int inferred_n = 1;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] inline void parse_fail(ErrorKind kind, int line, const std::string& msg) {
  throw Error(kind, "line " + std::to_string(line) + ": " + msg);
}

inline int parse_label(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    parse_fail(ErrorKind::parse_error, line, "'" + tok + "' is not a positive integer label");
  }
  if (tok.size() > 3) parse_fail(ErrorKind::label_out_of_range, line, "label " + tok + " exceeds 64");
  const int v = std::stoi(tok);
  if (v == 0) parse_fail(ErrorKind::parse_error, line, "label 0 is not allowed (labels start at 1)");
  if (v > kMaxLabel) parse_fail(ErrorKind::label_out_of_range, line, "label " + tok + " exceeds 64");
  return v;
}

inline std::optional<int> parse_declaration(const std::string& text, int line) {
  if (text.size() < 2 || (text[0] != 'n' && text[0] != 'N')) return std::nullopt;
  std::string rest = trim(std::string_view(text).substr(1));
  if (rest.empty() || (rest[0] != '=' && rest[0] != ':')) return std::nullopt;
  rest = trim(std::string_view(rest).substr(1));
  const int n = parse_label(rest, line);
  return n;
}

}  // namespace detail

inline CodeFileDocument parse_document(std::string_view text) {
  CodeFileDocument doc;
  enum class Form { none, labels, binary };
  Form form = Form::none;
  std::size_t binary_width = 0;
  int max_label = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string tok = detail::trim(raw);
    if (tok.empty()) continue;

    if (auto n = detail::parse_declaration(tok, line)) {
      if (doc.declared_n) detail::parse_fail(ErrorKind::parse_error, line, "ambient size declared twice");
      if (!doc.words.empty()) detail::parse_fail(ErrorKind::parse_error, line, "ambient size must precede words");
      doc.declared_n = *n;
      continue;
    }
    if (tok == "0" || tok == "empty") {
      doc.words.push_back(Face{});
      continue;
    }

    const bool is_binary = tok.size() >= 2 && tok.find_first_not_of("01") == std::string::npos;
    const Form this_form = is_binary ? Form::binary : Form::labels;
    if (form != Form::none && form != this_form) {
      detail::parse_fail(ErrorKind::mixed_notation, line, "binary and label notation mixed in one file");
    }
    form = this_form;

    Face word;
    if (is_binary) {
      if (binary_width != 0 && tok.size() != binary_width) {
        detail::parse_fail(ErrorKind::parse_error, line, "binary words must all have length " + std::to_string(binary_width));
      }
      binary_width = tok.size();
      if (binary_width > static_cast<std::size_t>(kMaxLabel)) {
        detail::parse_fail(ErrorKind::label_out_of_range, line, "binary word longer than 64");
      }
      for (std::size_t i = 0; i < tok.size(); ++i) {
        if (tok[i] == '1') word.insert(static_cast<int>(i) + 1);
      }
    } else if (tok.find_first_of(", \t") != std::string::npos) {
      std::string cleaned = tok;
      std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
      std::istringstream parts(cleaned);
      std::string part;
      while (parts >> part) {
        const int v = detail::parse_label(part, line);
        if (word.contains(v)) detail::parse_fail(ErrorKind::parse_error, line, "label " + part + " repeated");
        word.insert(v);
      }
    } else {
      for (char c : tok) {
        if (c < '1' || c > '9') {
          detail::parse_fail(ErrorKind::parse_error, line, "'" + tok + "' is not a compact digit word");
        }
        const int v = c - '0';
        if (word.contains(v)) detail::parse_fail(ErrorKind::parse_error, line, "label " + std::string(1, c) + " repeated");
        word.insert(v);
      }
    }
    max_label = std::max(max_label, word.max_label());
    doc.words.push_back(word);
  }

  if (doc.words.empty()) throw Error(ErrorKind::parse_error, "no codewords (an empty code is not permitted)");
  doc.inferred_n = std::max(1, form == Form::binary ? static_cast<int>(binary_width) : max_label);
  if (doc.declared_n) {
    if (form == Form::binary && static_cast<int>(binary_width) != *doc.declared_n) {
      throw Error(ErrorKind::parse_error, "binary words have length " + std::to_string(binary_width) +
                                              " but n = " + std::to_string(*doc.declared_n));
    }
    if (max_label > *doc.declared_n) {
      throw Error(ErrorKind::label_out_of_range,
                  "label " + std::to_string(max_label) + " exceeds declared n = " + std::to_string(*doc.declared_n));
    }
  }
  return doc;
}

inline Code parse_code(std::string_view text) {
  auto doc = parse_document(text);
  return Code(doc.declared_n.value_or(doc.inferred_n), std::move(doc.words));
}

/// Facet-per-line complex file; any generating set is accepted.
inline SimplicialComplex parse_complex(std::string_view text) {
  auto doc = parse_document(text);
  return SimplicialComplex(doc.declared_n.value_or(doc.inferred_n), std::move(doc.words));
}

inline std::string format_word(Face w, int n) {
  if (w.empty()) return "0";
  if (n <= 9) return w.to_string();
  // Comma-separated; a lone label keeps a trailing comma so it is not read
  // as compact digits.
  std::string out;
  for (int v : w.labels()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  if (w.size() == 1) out += ',';
  return out;
}

/// Writes a document parse_code reads back to an equal Code.
inline std::string emit_code(const Code& code) {
  std::string out = "n = " + std::to_string(code.ambient_n()) + "\n";
  for (Face w : code.words()) out += format_word(w, code.ambient_n()) + "\n";
  return out;
}

inline std::string emit_complex(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::void_complex, "the void complex has no facet file");
  std::string out = "n = " + std::to_string(complex.ambient_n()) + "\n";
  for (Face f : complex.facets()) out += format_word(f, complex.ambient_n()) + "\n";
  return out;
}

}  // namespace ncode
