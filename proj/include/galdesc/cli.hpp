// Copyright 2026 The galdesc Authors.
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

// Line-oriented document format and its interpreter. One declaration or
// command per line; '#' starts a comment.
//
//   field <name> = GF(p^n) | GF(p^n, modulus=<poly>) | GF(p) | QQ | Cyclo(m)
//                | Ext(QQ|GF(p), modulus=<poly>[, irreducible=assert])
//   group <name> = Aut(<field>/<field>)
//                | [<label>: t -> <poly>, ...] over <field>
//   algebra <name> = <field>[x, y, ...] [/ (<poly>, ...)]
//   datum <name> on <algebra> [under <group>] : <label> => { x -> <poly>, ... } ...
//   datum <name> = canonical(<algebra>, <group>)
//   module <name> on <group> [dim n] : <label> => [[<elem>, ...], ...] ...
//   map <name> = <field> -> <field> | <field> -> <field>^n
//
//   descend <datum> | restrict <algebra> over <field> to <field> | fixed <module>
//   amitsur <map> [rmax=<n>] | validate <name>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "galdesc/points.hpp"

namespace galdesc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;

struct Diagnostic {
  std::string severity = "error";
  std::size_t line = 0;
  std::size_t column = 0;
  std::string code;
  std::string message;

  std::string render(const std::string& source) const;
};

class DiagnosticError : public std::runtime_error {
 public:
  DiagnosticError(Diagnostic d, int exit_code)
      : std::runtime_error(d.message), diag_(std::move(d)), exit_code_(exit_code) {}
  const Diagnostic& diagnostic() const { return diag_; }
  int exit_code() const { return exit_code_; }

 private:
  Diagnostic diag_;
  int exit_code_;
};

/// Declarations are evaluated while parsing, so a Document holds live objects.
class Document {
 public:
  struct Impl;
  explicit Document(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

 private:
  std::shared_ptr<Impl> impl_;
};

/// Throws DiagnosticError (exit 2 for syntax and resolution, 1 when a
/// declaration is rejected by the library).
Document parse(const std::string& text);

struct Options {
  bool oracle = false;
  std::size_t point_budget = kDefaultPointBudget;
  std::string source = "<input>";
};

struct Result {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

Result run(const Document& doc, const Options& opts);

/// parse + run with diagnostics rendered into Result::err.
Result run_text(const std::string& text, const Options& opts);

}  // namespace galdesc::cli
