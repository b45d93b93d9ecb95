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

#include "galdesc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "galdesc/descent.hpp"
#include "galdesc/flat.hpp"
#include "galdesc/poly_parse.hpp"
#include "galdesc/semilinear.hpp"
#include "galdesc/weil.hpp"

namespace galdesc::cli {

std::string Diagnostic::render(const std::string& source) const {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + severity + "[" + code + "]: " +
         message;
}

namespace {

struct Loc {
  std::size_t line = 0;
  std::size_t col = 0;
};

[[noreturn]] void parse_fail(Loc at, const std::string& msg, const std::string& code = "SyntaxError") {
  throw DiagnosticError(Diagnostic{"error", at.line, at.col, code, msg}, kExitParse);
}

std::string bare_message(const Error& e) {
  const std::string w = e.what();
  const std::string prefix = std::string(errc_name(e.code())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

[[noreturn]] void library_fail(Loc at, const Error& e) {
  throw DiagnosticError(Diagnostic{"error", at.line, at.col, std::string(errc_name(e.code())), bare_message(e)},
                        e.code() == Errc::BudgetExceeded ? kExitBudget : kExitValidation);
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Span {
  std::string text;
  Loc loc;
};

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  Loc loc() {
    skip_ws();
    return {line_, pos_ + 1};
  }
  std::size_t mark() const { return pos_; }
  void reset(std::size_t m) { pos_ = m; }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    if (ident_char(tok.back()) && pos_ + tok.size() < s_.size() && ident_char(s_[pos_ + tok.size()])) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string ident(const std::string& what = "a name") {
    skip_ws();
    const std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    }
    if (b == pos_) fail("expected " + what);
    return std::string(s_.substr(b, pos_ - b));
  }
  // group element names such as frob^2
  std::string label() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && (ident_char(s_[pos_]) || s_[pos_] == '^')) ++pos_;
    if (b == pos_) fail("expected a group element label");
    return std::string(s_.substr(b, pos_ - b));
  }
  long integer() {
    skip_ws();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_ || pos_ - b > 9) {
      pos_ = b;
      fail("expected a small positive integer");
    }
    return std::stol(std::string(s_.substr(b, pos_ - b)));
  }
  /// Raw text up to the first stop character outside brackets.
  Span until(std::string_view stops) {
    const Loc at = loc();
    const std::size_t b = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    std::string t(s_.substr(b, pos_ - b));
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty()) parse_fail(at, "expected an expression");
    return {t, at};
  }
  [[noreturn]] void fail(const std::string& msg) { parse_fail(loc(), msg); }
  void finish() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

template <class Fn>
auto guarded(const Span& s, Fn&& fn) {
  try {
    return fn();
  } catch (const SyntaxError& e) {
    parse_fail({s.loc.line, s.loc.col + e.offset()}, e.what());
  } catch (const Error& e) {
    library_fail(s.loc, e);
  }
}

enum class Kind { Field, Group, Algebra, Datum, Module, Map };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Field: return "field";
    case Kind::Group: return "group";
    case Kind::Algebra: return "algebra";
    case Kind::Datum: return "datum";
    case Kind::Module: return "module";
    case Kind::Map: return "map";
  }
  return "?";
}

struct Entry {
  Kind kind;
  bool rational;
  Loc loc;
};

template <class K>
struct Scope {
  using Scalar = K;
  std::map<std::string, FieldPtr<K>> fields;
  std::map<std::string, GaloisGroup<K>> groups;
  std::map<std::string, AffineAlgebra<K>> algebras;
  std::map<std::string, std::string> algebra_field;
  std::map<std::string, AffineDescentDatum<K>> data;
  std::map<std::string, SemilinearModule<K>> modules;
  std::map<std::string, AlgebraMap<K>> maps;
  std::vector<std::pair<FieldPtr<K>, GaloisGroup<K>>> builtin_groups;
};

enum class CommandKind { Descend, Restrict, Fixed, Amitsur, Validate };

struct Command {
  CommandKind kind;
  Loc loc;
  std::vector<std::string> args;
  std::size_t rmax = 3;
};

template <class K>
GaloisGroup<K> automorphisms(const Scope<K>& s, const FieldPtr<K>& f) {
  for (const auto& [ff, g] : s.builtin_groups) {
    if (ff == f) return g;
  }
  if (f->degree() == 1) return GaloisGroup<K>::from_elements(f, {Automorphism<K>(f->gen(), "id")});
  if constexpr (std::is_same_v<K, Zp>) {
    return frobenius_group(f);
  } else {
    if (f->degree() == 2) {
      // the other root of t^2 + b t + c is -t - b
      const Elem<K> other = -f->gen() - f->from_base(f->modulus().coeffs()[1]);
      return GaloisGroup<K>::from_elements(
          f, {Automorphism<K>(f->gen(), "id"), verify_automorphism(f, other, "conj")});
    }
    throw Error(Errc::Unsupported, "automorphisms of " + f->name() + " must be listed explicitly");
  }
}

}  // namespace

struct Document::Impl {
  Scope<Rational> q;
  Scope<Zp> z;
  std::map<std::string, Entry> names;
  std::optional<Command> command;

  template <class Fn>
  void with(bool rational, Fn&& fn) {
    if (rational) {
      fn(q);
    } else {
      fn(z);
    }
  }
  template <class Fn>
  void with(bool rational, Fn&& fn) const {
    if (rational) {
      fn(q);
    } else {
      fn(z);
    }
  }
};

namespace {

class Parser {
 public:
  explicit Parser(Document::Impl& doc) : doc_(doc) {}

  void line(std::string_view text, std::size_t lineno) {
    const auto hash = text.find('#');
    if (hash != std::string_view::npos) text = text.substr(0, hash);
    Cursor c(text, lineno);
    if (c.at_end()) return;
    const Loc at = c.loc();
    const std::string head = c.ident("a declaration or command");
    if (doc_.command) parse_fail(at, "nothing may follow the command", "TrailingStatement");
    if (head == "field") return field(c);
    if (head == "group") return group(c);
    if (head == "algebra") return algebra(c);
    if (head == "datum") return datum(c);
    if (head == "module") return module(c);
    if (head == "map") return map(c);
    command(c, head, at);
  }

 private:
  std::string declare(Cursor& c) {
    const Loc at = c.loc();
    std::string name = c.ident();
    if (doc_.names.count(name)) parse_fail(at, "'" + name + "' is already declared", "Redeclared");
    pending_ = at;
    return name;
  }

  void add(const std::string& name, Kind k, bool rational) { doc_.names[name] = Entry{k, rational, pending_}; }

  const Entry& ref(Cursor& c, Kind kind, std::string& name) {
    const Loc at = c.loc();
    name = c.ident();
    auto it = doc_.names.find(name);
    if (it == doc_.names.end() && kind == Kind::Field && name == "QQ") {
      doc_.q.fields.emplace(name, prime_field<Rational>(BaseField::rationals()));
      doc_.names[name] = Entry{Kind::Field, true, at};
      it = doc_.names.find(name);
    }
    if (it == doc_.names.end()) parse_fail(at, "unknown name '" + name + "'", "UnknownName");
    if (it->second.kind != kind) {
      parse_fail(at, "'" + name + "' is a " + kind_name(it->second.kind) + ", expected a " + kind_name(kind),
                 "WrongKind");
    }
    return it->second;
  }

  void field(Cursor& c) {
    const std::string name = declare(c);
    c.expect("=");
    const Loc at = c.loc();
    try {
      if (c.accept("QQ")) {
        c.finish();
        doc_.q.fields.emplace(name, prime_field<Rational>(BaseField::rationals()));
        return add(name, Kind::Field, true);
      }
      if (c.accept("Cyclo")) {
        c.expect("(");
        const long m = c.integer();
        c.expect(")");
        c.finish();
        auto [f, g] = cyclotomic_group(static_cast<int>(m));
        doc_.q.fields.emplace(name, f);
        doc_.q.builtin_groups.emplace_back(f, g);
        return add(name, Kind::Field, true);
      }
      if (c.accept("GF")) {
        c.expect("(");
        const long p = c.integer();
        long n = 1;
        if (c.accept("^")) n = c.integer();
        std::optional<Span> modulus;
        if (c.accept(",")) {
          c.expect("modulus");
          c.expect("=");
          modulus = c.until(")");
        }
        c.expect(")");
        c.finish();
        const BaseField b = BaseField::prime(static_cast<std::uint64_t>(p));
        FieldPtr<Zp> f;
        if (modulus) {
          auto u = guarded(*modulus, [&] { return parse_upoly<Zp>(b, modulus->text); });
          if (u.degree() != n) {
            throw Error(Errc::InvalidArgument, "modulus of degree " + std::to_string(u.degree()) + " for GF(" +
                                                   std::to_string(p) + "^" + std::to_string(n) + ")");
          }
          f = n == 1 ? prime_field<Zp>(b) : make_extension<Zp>(b, u);
        } else {
          f = n == 1 ? prime_field<Zp>(b) : finite_field(static_cast<std::uint64_t>(p), static_cast<std::size_t>(n));
        }
        doc_.z.fields.emplace(name, f);
        return add(name, Kind::Field, false);
      }
      if (c.accept("Ext")) {
        c.expect("(");
        std::optional<BaseField> b;
        if (c.accept("QQ")) {
          b = BaseField::rationals();
        } else if (c.accept("GF")) {
          c.expect("(");
          b = BaseField::prime(static_cast<std::uint64_t>(c.integer()));
          c.expect(")");
        } else {
          c.fail("expected QQ or GF(p)");
        }
        c.expect(",");
        c.expect("modulus");
        c.expect("=");
        const Span mod = c.until(",)");
        bool asserted = false;
        if (c.accept(",")) {
          c.expect("irreducible");
          c.expect("=");
          c.expect("assert");
          asserted = true;
        }
        c.expect(")");
        c.finish();
        if (b->is_finite()) {
          auto u = guarded(mod, [&] { return parse_upoly<Zp>(*b, mod.text); });
          doc_.z.fields.emplace(name, make_extension<Zp>(*b, u, asserted));
          return add(name, Kind::Field, false);
        }
        auto u = guarded(mod, [&] { return parse_upoly<Rational>(*b, mod.text); });
        doc_.q.fields.emplace(name, make_extension<Rational>(*b, u, asserted));
        return add(name, Kind::Field, true);
      }
    } catch (const Error& e) {
      library_fail(at, e);
    }
    c.fail("expected GF, QQ, Cyclo or Ext");
  }

  void group(Cursor& c) {
    const std::string name = declare(c);
    c.expect("=");
    const Loc at = c.loc();
    if (c.accept("Aut")) {
      c.expect("(");
      std::string fname, kname;
      const Entry& fe = ref(c, Kind::Field, fname);
      c.expect("/");
      const Loc kat = c.loc();
      const Entry& ke = ref(c, Kind::Field, kname);
      c.expect(")");
      c.finish();
      if (fe.rational != ke.rational) parse_fail(kat, "'" + kname + "' has another characteristic", "WrongField");
      doc_.with(fe.rational, [&](auto& s) {
        const auto& f = s.fields.at(fname);
        const auto& k = s.fields.at(kname);
        try {
          if (k->degree() != 1 || !(k->base() == f->base())) {
            throw Error(Errc::Unsupported, "automorphism groups are taken over the prime field of " + f->name());
          }
          s.groups.emplace(name, automorphisms(s, f));
        } catch (const Error& e) {
          library_fail(at, e);
        }
      });
      return add(name, Kind::Group, fe.rational);
    }
    c.expect("[");
    struct Item {
      std::string label;
      Span image;
    };
    std::vector<Item> items;
    while (true) {
      std::string label;
      const std::size_t m = c.mark();
      if (!c.accept("t")) {
        label = c.label();
        c.expect(":");
        c.expect("t");
      } else if (c.accept(":")) {
        c.reset(m);
        label = c.label();
        c.expect(":");
        c.expect("t");
      }
      c.expect("->");
      items.push_back({label, c.until(",]")});
      if (!c.accept(",")) break;
    }
    c.expect("]");
    c.expect("over");
    std::string fname;
    const Entry& fe = ref(c, Kind::Field, fname);
    c.finish();
    doc_.with(fe.rational, [&](auto& s) {
      using K = typename std::decay_t<decltype(s)>::Scalar;
      const auto& f = s.fields.at(fname);
      std::vector<Automorphism<K>> elems;
      for (std::size_t i = 0; i < items.size(); ++i) {
        auto img = guarded(items[i].image, [&] { return parse_elem(f, items[i].image.text); });
        std::string label = items[i].label;
        if (label.empty()) label = img == f->gen() ? "id" : "g" + std::to_string(i);
        elems.push_back(guarded(items[i].image, [&] { return verify_automorphism(f, img, label); }));
      }
      try {
        s.groups.emplace(name, GaloisGroup<K>::from_elements(f, std::move(elems)));
      } catch (const Error& e) {
        library_fail(at, e);
      }
    });
    add(name, Kind::Group, fe.rational);
  }

  void algebra(Cursor& c) {
    const std::string name = declare(c);
    c.expect("=");
    std::string fname;
    const Loc fat = c.loc();
    const Entry& fe = ref(c, Kind::Field, fname);
    c.expect("[");
    std::vector<std::string> vars;
    do {
      vars.push_back(c.ident("a variable"));
    } while (c.accept(","));
    c.expect("]");
    std::vector<Span> rels;
    if (c.accept("/")) {
      c.expect("(");
      do {
        rels.push_back(c.until(",)"));
      } while (c.accept(","));
      c.expect(")");
    }
    c.finish();
    doc_.with(fe.rational, [&](auto& s) {
      using K = typename std::decay_t<decltype(s)>::Scalar;
      RingPtr<K> ring;
      try {
        ring = make_ring(s.fields.at(fname), vars);
      } catch (const Error& e) {
        library_fail(fat, e);
      }
      std::vector<MultiPoly<K>> gens;
      for (const auto& r : rels) gens.push_back(guarded(r, [&] { return parse_poly(ring, r.text); }));
      s.algebras.emplace(name, make_algebra(ring, std::move(gens)));
      s.algebra_field.emplace(name, fname);
    });
    add(name, Kind::Algebra, fe.rational);
  }

  void datum(Cursor& c) {
    const std::string name = declare(c);
    const Loc at = c.loc();
    if (c.accept("=")) {
      c.expect("canonical");
      c.expect("(");
      std::string aname, gname;
      const Entry& ae = ref(c, Kind::Algebra, aname);
      c.expect(",");
      const Loc gat = c.loc();
      const Entry& ge = ref(c, Kind::Group, gname);
      c.expect(")");
      c.finish();
      if (ae.rational != ge.rational) parse_fail(gat, "'" + gname + "' has another characteristic", "WrongField");
      doc_.with(ae.rational, [&](auto& s) {
        try {
          s.data.emplace(name, canonical_datum(s.algebras.at(aname), s.groups.at(gname)));
        } catch (const Error& e) {
          library_fail(at, e);
        }
      });
      return add(name, Kind::Datum, ae.rational);
    }
    c.expect("on");
    std::string aname, gname;
    const Entry& ae = ref(c, Kind::Algebra, aname);
    std::optional<Loc> gat;
    if (c.accept("under")) {
      gat = c.loc();
      const Entry& ge = ref(c, Kind::Group, gname);
      if (ge.rational != ae.rational) parse_fail(*gat, "'" + gname + "' has another characteristic", "WrongField");
    }
    c.expect(":");
    struct Item {
      std::string label;
      Loc loc;
      std::vector<std::pair<std::string, Span>> images;
      std::vector<Loc> var_locs;
    };
    std::vector<Item> items;
    while (!c.at_end()) {
      Item it;
      it.loc = c.loc();
      it.label = c.label();
      c.expect("=>");
      c.expect("{");
      do {
        it.var_locs.push_back(c.loc());
        std::string v = c.ident("a variable");
        c.expect("->");
        it.images.emplace_back(v, c.until(",}"));
      } while (c.accept(","));
      c.expect("}");
      items.push_back(std::move(it));
    }
    if (items.empty()) c.fail("expected at least one '<label> => { ... }'");
    doc_.with(ae.rational, [&](auto& s) {
      using K = typename std::decay_t<decltype(s)>::Scalar;
      const auto& a = s.algebras.at(aname);
      std::optional<GaloisGroup<K>> g;
      try {
        g = gname.empty() ? automorphisms(s, a.field()) : s.groups.at(gname);
      } catch (const Error& e) {
        library_fail(at, e);
      }
      if (gat && !g->field()->same_as(*a.field())) parse_fail(*gat, "'" + gname + "' acts on another field", "WrongField");
      std::vector<std::optional<std::vector<MultiPoly<K>>>> theta(g->order());
      for (const auto& it : items) {
        auto idx = g->find(it.label);
        if (!idx) parse_fail(it.loc, "no element '" + it.label + "' in the group", "UnknownLabel");
        if (theta[*idx]) parse_fail(it.loc, "'" + it.label + "' is given twice", "Redeclared");
        std::vector<std::optional<MultiPoly<K>>> im(a.nvars());
        for (std::size_t k = 0; k < it.images.size(); ++k) {
          const auto& [v, span] = it.images[k];
          auto vi = a.ring->index_of(v);
          if (!vi) parse_fail(it.var_locs[k], "'" + v + "' is not a variable of " + aname, "UnknownName");
          if (im[*vi]) parse_fail(it.var_locs[k], "'" + v + "' is mapped twice", "Redeclared");
          im[*vi] = guarded(span, [&] { return parse_poly(a.ring, span.text); });
        }
        std::vector<MultiPoly<K>> images;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
          if (!im[i]) parse_fail(it.loc, "no image for " + a.ring->vars[i] + " under " + it.label, "MissingImage");
          images.push_back(*im[i]);
        }
        theta[*idx] = std::move(images);
      }
      if (!theta[0]) {
        std::vector<MultiPoly<K>> ident;
        for (std::size_t i = 0; i < a.nvars(); ++i) ident.push_back(MultiPoly<K>::variable(a.ring, i));
        theta[0] = std::move(ident);
      }
      // the rest by theta_su = theta_s o s(theta_u)
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t x = 0; x < theta.size(); ++x)
          for (std::size_t y = 0; y < theta.size(); ++y) {
            const std::size_t xy = g->compose(x, y);
            if (theta[x] && theta[y] && !theta[xy]) {
              theta[xy] = compose_images((*g)[x], *theta[x], *theta[y]);
              grew = true;
            }
          }
      }
      AffineDescentDatum<K> d{a, *g, {}};
      for (std::size_t x = 0; x < theta.size(); ++x) {
        if (!theta[x]) {
          library_fail(at, Error(Errc::InvalidArgument, "the listed elements do not generate the group; nothing for " +
                                                            (*g)[x].name()));
        }
        d.maps.push_back({x, *theta[x]});
      }
      s.data.emplace(name, std::move(d));
    });
    add(name, Kind::Datum, ae.rational);
  }

  void module(Cursor& c) {
    const std::string name = declare(c);
    const Loc at = c.loc();
    c.expect("on");
    std::string gname;
    const Entry& ge = ref(c, Kind::Group, gname);
    std::optional<std::size_t> dim;
    if (c.accept("dim")) dim = static_cast<std::size_t>(c.integer());
    c.expect(":");
    struct Item {
      std::string label;
      Loc loc;
      std::vector<std::vector<Span>> rows;
    };
    std::vector<Item> items;
    while (!c.at_end()) {
      Item it;
      it.loc = c.loc();
      it.label = c.label();
      c.expect("=>");
      c.expect("[");
      do {
        c.expect("[");
        std::vector<Span> row;
        do {
          row.push_back(c.until(",]"));
        } while (c.accept(","));
        c.expect("]");
        it.rows.push_back(std::move(row));
      } while (c.accept(","));
      c.expect("]");
      items.push_back(std::move(it));
    }
    if (items.empty()) c.fail("expected at least one '<label> => [[...]]'");
    doc_.with(ge.rational, [&](auto& s) {
      using K = typename std::decay_t<decltype(s)>::Scalar;
      const auto& g = s.groups.at(gname);
      const auto& f = g.field();
      const std::size_t n = dim.value_or(items.front().rows.size());
      std::vector<std::optional<Matrix<Elem<K>>>> cs(g.order());
      for (const auto& it : items) {
        auto idx = g.find(it.label);
        if (!idx) parse_fail(it.loc, "no element '" + it.label + "' in " + gname, "UnknownLabel");
        if (cs[*idx]) parse_fail(it.loc, "'" + it.label + "' is given twice", "Redeclared");
        if (it.rows.size() != n) parse_fail(it.loc, "expected " + std::to_string(n) + " rows", "ShapeMismatch");
        Matrix<Elem<K>> m(n, n, f->zero());
        for (std::size_t i = 0; i < n; ++i) {
          if (it.rows[i].size() != n) parse_fail(it.loc, "expected " + std::to_string(n) + " columns", "ShapeMismatch");
          for (std::size_t j = 0; j < n; ++j) {
            const Span& e = it.rows[i][j];
            m(i, j) = guarded(e, [&] { return parse_elem(f, e.text); });
          }
        }
        cs[*idx] = std::move(m);
      }
      if (!cs[0]) cs[0] = Matrix<Elem<K>>::identity(n, f->zero());
      // c_su = c_s s(c_u)
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t x = 0; x < cs.size(); ++x)
          for (std::size_t y = 0; y < cs.size(); ++y) {
            const std::size_t xy = g.compose(x, y);
            if (cs[x] && cs[y] && !cs[xy]) {
              cs[xy] = *cs[x] * g[x](*cs[y]);
              grew = true;
            }
          }
      }
      std::vector<Matrix<Elem<K>>> all;
      for (std::size_t x = 0; x < cs.size(); ++x) {
        if (!cs[x]) {
          library_fail(at, Error(Errc::InvalidArgument, "the listed elements do not generate the group; nothing for " +
                                                            g[x].name()));
        }
        all.push_back(*cs[x]);
      }
      try {
        s.modules.emplace(name, SemilinearModule<K>(g, n, std::move(all)));
      } catch (const Error& e) {
        library_fail(at, e);
      }
    });
    add(name, Kind::Module, ge.rational);
  }

  void map(Cursor& c) {
    const std::string name = declare(c);
    c.expect("=");
    const Loc at = c.loc();
    std::string sname, tname;
    const Entry& se = ref(c, Kind::Field, sname);
    c.expect("->");
    const Loc tat = c.loc();
    const Entry& te = ref(c, Kind::Field, tname);
    std::optional<long> power;
    if (c.accept("^")) power = c.integer();
    c.finish();
    if (se.rational != te.rational) parse_fail(tat, "'" + tname + "' has another characteristic", "WrongField");
    doc_.with(se.rational, [&](auto& s) {
      using K = typename std::decay_t<decltype(s)>::Scalar;
      const auto& src = s.fields.at(sname);
      const auto& tgt = s.fields.at(tname);
      try {
        if (src->degree() != 1) throw Error(Errc::Unsupported, "maps start at a prime field");
        if (power) {
          if (tgt->degree() != 1) throw Error(Errc::Unsupported, "powers are taken of the prime field");
          s.maps.emplace(name, structure_map(split_algebra<K>(src->base(), static_cast<std::size_t>(*power))));
        } else {
          s.maps.emplace(name, structure_map(field_algebra(tgt)));
        }
      } catch (const Error& e) {
        library_fail(at, e);
      }
    });
    add(name, Kind::Map, se.rational);
  }

  void command(Cursor& c, const std::string& head, Loc at) {
    Command cmd{CommandKind::Validate, at, {}, 3};
    std::string n;
    if (head == "descend") {
      cmd.kind = CommandKind::Descend;
      ref(c, Kind::Datum, n);
      cmd.args = {n};
    } else if (head == "restrict") {
      cmd.kind = CommandKind::Restrict;
      std::string f, k;
      const Entry& ae = ref(c, Kind::Algebra, n);
      c.expect("over");
      const Loc fat = c.loc();
      const Entry& fe = ref(c, Kind::Field, f);
      c.expect("to");
      const Loc kat = c.loc();
      const Entry& ke = ref(c, Kind::Field, k);
      if (fe.rational != ae.rational) parse_fail(fat, "'" + f + "' has another characteristic", "WrongField");
      if (ke.rational != ae.rational) parse_fail(kat, "'" + k + "' has another characteristic", "WrongField");
      cmd.args = {n, f, k};
    } else if (head == "fixed") {
      cmd.kind = CommandKind::Fixed;
      ref(c, Kind::Module, n);
      cmd.args = {n};
    } else if (head == "amitsur") {
      cmd.kind = CommandKind::Amitsur;
      ref(c, Kind::Map, n);
      cmd.args = {n};
      if (c.accept("rmax")) {
        c.expect("=");
        cmd.rmax = static_cast<std::size_t>(c.integer());
      }
    } else if (head == "validate") {
      cmd.kind = CommandKind::Validate;
      const Loc nat = c.loc();
      n = c.ident();
      if (!doc_.names.count(n)) parse_fail(nat, "unknown name '" + n + "'", "UnknownName");
      cmd.args = {n};
    } else {
      parse_fail(at, "unknown statement '" + head + "'", "UnknownStatement");
    }
    c.finish();
    doc_.command = std::move(cmd);
  }

  Document::Impl& doc_;
  Loc pending_;
};

// ---- reports ----

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class K>
std::string field_source(const FieldPtr<K>& f) {
  if (f->degree() == 1) return f->base().is_finite() ? "GF(" + std::to_string(f->base().characteristic()) + ")" : "QQ";
  if (f->name().rfind("Cyclo(", 0) == 0) return f->name();
  if (f->base().is_finite()) {
    return "GF(" + std::to_string(f->base().characteristic()) + "^" + std::to_string(f->degree()) +
           ", modulus=" + to_string(f->modulus()) + ")";
  }
  return "Ext(QQ, modulus=" + to_string(f->modulus()) + ", irreducible=assert)";
}

// variables sorted by name, reduced grevlex basis (already sorted by degree, then lex)
template <class K>
std::pair<RingPtr<K>, std::vector<MultiPoly<K>>> canonical_form(const AffineAlgebra<K>& a) {
  auto vars = a.ring->vars;
  std::sort(vars.begin(), vars.end());
  const auto ring = make_ring(a.field(), vars);
  std::vector<MultiPoly<K>> gens;
  for (const auto& g : a.relations.gens) gens.push_back(change_ring(g, ring));
  if (gens.empty()) return {ring, {}};
  return {ring, buchberger(make_ideal(ring, gens), MonomialOrder::grevlex()).polys};
}

template <class K>
std::string presentation(const std::string& name, const std::string& field, const AffineAlgebra<K>& a) {
  const auto [ring, rels] = canonical_form(a);
  std::string s = "algebra " + name + " = " + field + "[" + join(ring->vars) + "]";
  if (rels.empty()) return s;
  std::vector<std::string> parts;
  for (const auto& r : rels) parts.push_back(to_string(r));
  return s + "/(" + join(parts) + ")";
}

// the base field line, omitted for QQ which is always in scope
template <class K>
std::string base_name(std::ostream& out, const FieldPtr<K>& k) {
  if (!k->is_finite()) return "QQ";
  out << "field k = " << field_source(k) << "\n";
  return "k";
}

template <class K>
std::string group_string(const GaloisGroup<K>& g) {
  std::vector<std::string> names;
  for (const auto& e : g.elements()) names.push_back(e.name());
  return "{" + join(names) + "} on " + g.field()->name();
}

template <class K>
std::string vector_string(const std::vector<Elem<K>>& v) {
  std::vector<std::string> parts;
  for (const auto& e : v) parts.push_back(to_string(e));
  return "[" + join(parts) + "]";
}

template <class K>
std::string mapping_string(const std::vector<std::string>& from, const std::vector<MultiPoly<K>>& to) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < from.size(); ++i) parts.push_back(from[i] + " -> " + to_string(to[i]));
  return join(parts);
}

template <class K>
std::size_t count_algebra(const AffineAlgebra<K>& a, std::size_t budget) {
  return count_points(a.relations.gens, a.nvars(), a.field(), budget);
}

class Runner {
 public:
  Runner(const Document::Impl& doc, const Options& opts) : doc_(doc), opts_(opts) {}

  void run(const Command& cmd) {
    const Entry& e = doc_.names.at(cmd.args.front());
    doc_.with(e.rational, [&](const auto& s) {
      switch (cmd.kind) {
        case CommandKind::Descend: return descend(s, cmd);
        case CommandKind::Restrict: return restrict(s, cmd);
        case CommandKind::Fixed: return fixed(s, cmd);
        case CommandKind::Amitsur: return amitsur(s, cmd);
        case CommandKind::Validate: return validate(s, cmd, e.kind);
      }
    });
  }

  std::string output() const { return out_.str(); }
  bool oracle_failed() const { return oracle_failed_; }

 private:
  void oracle(const std::string& what, bool ok) {
    out_ << "  oracle: " << what << (ok ? " PASS" : " FAIL") << "\n";
    oracle_failed_ = oracle_failed_ || !ok;
  }
  void checks(const VerificationReport& r) {
    for (const auto& line : r.checks) out_ << "    " << line << "\n";
  }

  template <class K>
  void descend(const Scope<K>& s, const Command& cmd) {
    const auto& d = s.data.at(cmd.args[0]);
    out_ << "== descend " << cmd.args[0] << " ==\n";
    out_ << "  group: " << group_string(d.group) << "\n";
    const auto rep = validate_datum(d);
    out_ << "  datum: valid\n";
    checks(rep);
    const auto model = descend_algebra(d);
    const auto k = d.group.field()->base_field();
    out_ << presentation("model", base_name(out_, k), model.algebra0) << "\n";
    out_ << "  splitting: " << mapping_string(model.algebra0.ring->vars, model.splitting) << "\n";
    out_ << "  inverse: " << mapping_string(d.algebra.ring->vars, model.inverse) << "\n";
    const bool ok = splits(model, d);
    out_ << "  splits: " << (ok ? "PASS" : "FAIL") << "\n";
    oracle_failed_ = oracle_failed_ || !ok;
    if (!opts_.oracle) return;

    // inverse o splitting and splitting o inverse are identities modulo the relations
    const auto gb_a = buchberger(d.algebra.relations, MonomialOrder::grevlex());
    std::vector<MultiPoly<K>> lifted;
    for (const auto& g : model.algebra0.relations.gens) lifted.push_back(change_ring(g, model.split_ring));
    const auto gb_m = buchberger(make_ideal(model.split_ring, lifted), MonomialOrder::grevlex());
    bool round = true;
    for (std::size_t i = 0; i < d.algebra.nvars(); ++i) {
      const auto back = substitute(model.inverse[i], model.splitting, d.algebra.ring);
      round = round && normal_form(back - MultiPoly<K>::variable(d.algebra.ring, i), gb_a).is_zero();
    }
    for (std::size_t j = 0; j < model.split_ring->nvars(); ++j) {
      const auto back = substitute(change_ring(model.splitting[j], d.algebra.ring), model.inverse, model.split_ring);
      round = round && normal_form(back - MultiPoly<K>::variable(model.split_ring, j), gb_m).is_zero();
    }
    oracle("splitting and inverse compose to the identity on both sides", round);
    if (!k->is_finite()) {
      out_ << "  oracle: " << k->name() << " is infinite; no point enumeration\n";
      return;
    }
    const std::size_t n0 = count_algebra(model.algebra0, opts_.point_budget);
    const std::size_t fixed = derive_point_action(d, opts_.point_budget).fixed_points().size();
    oracle("points of model over " + k->name() + ": " + std::to_string(n0) + " == fixed points on " +
               d.algebra.field()->name() + "-points: " + std::to_string(fixed),
           n0 == fixed);
  }

  template <class K>
  void restrict(const Scope<K>& s, const Command& cmd) {
    const auto& a = s.algebras.at(cmd.args[0]);
    const auto& f = s.fields.at(cmd.args[1]);
    const auto& k = s.fields.at(cmd.args[2]);
    out_ << "== restrict " << cmd.args[0] << " over " << cmd.args[1] << " to " << cmd.args[2] << " ==\n";
    if (!a.field()->same_as(*f)) throw Error(Errc::ShapeMismatch, cmd.args[0] + " is not over " + cmd.args[1]);
    if (k->degree() != 1 || !(k->base() == f->base())) {
      throw Error(Errc::Unsupported, "restriction goes down to the prime field of " + f->name());
    }
    std::vector<Elem<K>> roots;
    if (f->is_finite()) {
      roots = find_embeddings(f, f);
    } else {
      try {
        const auto g = automorphisms(s, f);
        if (g.is_full())
          for (const auto& e : g.elements()) roots.push_back(e.image());
      } catch (const Error&) {
      }
    }
    const bool closed = roots.size() == f->degree();
    const auto data = closed ? make_separable_data(f, f, roots) : SeparableExtensionData<K>{f, f, {}};
    const auto r = weil_restrict(a, data);
    out_ << "  extension: " << f->name() << " of degree " << f->degree() << " over " << k->name()
         << ", modulus " << to_string(f->modulus()) << "\n";
    out_ << "  substitution: " << mapping_string(a.ring->vars, r.substitution) << "\n";
    out_ << "  components: " << r.restricted.relations.gens.size() << "\n";
    out_ << presentation(cmd.args[0] + "_res", base_name(out_, k), r.restricted) << "\n";
    if (!opts_.oracle) return;
    if (closed) {
      const auto e = etale_splitting(data);
      oracle("etale splitting: " + std::to_string(e.idempotents.size()) + " orthogonal idempotents summing to 1", true);
    } else {
      out_ << "  oracle: no Galois closure known for " << f->name() << "; etale splitting skipped\n";
    }
    if (!f->is_finite()) {
      out_ << "  oracle: " << k->name() << " is infinite; no point enumeration\n";
      return;
    }
    const std::size_t nr = count_algebra(r.restricted, opts_.point_budget);
    const std::size_t nv = count_algebra(a, opts_.point_budget);
    oracle("points over " + k->name() + ": " + std::to_string(nr) + " == points of source over " + f->name() + ": " +
               std::to_string(nv),
           nr == nv);
    try {
      const auto rep = conjugate_product_check(a, r, data, opts_.point_budget);
      oracle(rep.checks.front(), true);
    } catch (const Error& e) {
      if (e.code() != Errc::CountMismatch) throw;
      oracle(bare_message(e), false);
    }
  }

  template <class K>
  void fixed(const Scope<K>& s, const Command& cmd) {
    const auto& m = s.modules.at(cmd.args[0]);
    const auto& f = m.field();
    out_ << "== fixed " << cmd.args[0] << " ==\n";
    out_ << "  module: dimension " << m.dim() << " over " << f->name() << ", group " << group_string(m.group()) << "\n";
    out_ << "  action: valid\n";
    checks(validate_action(m));
    const auto w = fixed_subspace(m);
    out_ << "  fixed subspace over " << w.field.name() << ": dimension " << w.dim << "\n";
    std::vector<std::string> basis;
    for (const auto& v : *w.embedding) basis.push_back(vector_string(v));
    out_ << "  basis: " << (basis.empty() ? "(none)" : join(basis, "; ")) << "\n";
    if (!opts_.oracle) return;
    oracle("counit " + f->name() + " (x) M -> V invertible", is_invertible(counit_check(m)));
    if (!f->is_finite()) {
      out_ << "  oracle: " << f->name() << " is infinite; no enumeration\n";
      return;
    }
    // count k-coordinate vectors fixed by every group element
    const std::size_t p = f->base().characteristic();
    const std::size_t coords = m.dim() * f->degree();
    double total = 1;
    for (std::size_t i = 0; i < coords; ++i) total *= static_cast<double>(p);
    if (total > static_cast<double>(opts_.point_budget)) {
      throw Error(Errc::BudgetExceeded, f->name() + "^" + std::to_string(m.dim()) + " exceeds the point budget");
    }
    std::vector<Matrix<K>> acts;
    for (std::size_t g = 1; g < m.group().order(); ++g) acts.push_back(m.action_matrix(g));
    std::vector<long> idx(coords, 0);
    std::size_t count = 0;
    while (true) {
      std::vector<K> v;
      for (long x : idx) v.push_back(scalar_from_int<K>(f->base(), x));
      const auto col = Matrix<K>::column_vector(v, f->base_zero());
      bool fixed = true;
      for (const auto& a : acts) fixed = fixed && (a * col == col);
      count += fixed;
      std::size_t i = 0;
      while (i < coords && ++idx[i] == static_cast<long>(p)) idx[i++] = 0;
      if (i == coords) break;
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < w.dim; ++i) expect *= p;
    oracle("fixed vectors in " + f->name() + "^" + std::to_string(m.dim()) + ": " + std::to_string(count) +
               " == " + std::to_string(p) + "^" + std::to_string(w.dim),
           count == expect);
  }

  template <class K>
  void amitsur(const Scope<K>& s, const Command& cmd) {
    const auto& f = s.maps.at(cmd.args[0]);
    out_ << "== amitsur " << cmd.args[0] << " rmax=" << cmd.rmax << " ==\n";
    out_ << "  map: " << f.source.name << " -> " << f.target.name << ", dim " << f.target.dim << "\n";
    const auto ff = check_faithfully_flat(f);
    out_ << "  " << ff.checks.front() << "\n";
    const auto c = amitsur_complex(f, cmd.rmax);
    for (std::size_t j = 0; j < c.d.size(); ++j) {
      out_ << "  d" << j << ": " << c.d[j].cols() << " -> " << c.d[j].rows() << ", rank " << rank(c.d[j]) << "\n";
    }
    const auto ex = check_exactness(c);
    for (const auto& line : ex.report.checks) out_ << "  exact at " << line << "\n";
    if (!opts_.oracle) return;
    oracle("d0 f = 0", (c.d[0] * c.augmentation).is_zero());
    for (std::size_t j = 1; j < c.d.size(); ++j) {
      oracle("d" + std::to_string(j) + " d" + std::to_string(j - 1) + " = 0", (c.d[j] * c.d[j - 1]).is_zero());
    }
    for (std::size_t n : {1, 3}) {
      const auto coef = check_exactness(c, n);
      oracle("exact with coefficients " + f.source.name + "^" + std::to_string(n) + ", first kernel " +
                 std::to_string(coef.degrees.front().kernel),
             coef.degrees.front().kernel == n);
    }
    Matrix<K> first(1, f.target.dim, f.target.zero());
    first(0, 0) = f.target.one();
    std::optional<AlgebraMap<K>> section;
    try {
      section = make_algebra_map(f.target, f.source, first);
    } catch (const Error&) {
    }
    if (section) {
      verify_contracting_homotopy(c, *section);
      oracle("contracting homotopy from the first coordinate", true);
    } else {
      out_ << "  oracle: no section to " << f.source.name << "; homotopy skipped\n";
    }
  }

  template <class K>
  void validate(const Scope<K>& s, const Command& cmd, Kind kind) {
    const std::string& n = cmd.args[0];
    out_ << "== validate " << n << " ==\n";
    switch (kind) {
      case Kind::Field: {
        const auto& f = s.fields.at(n);
        out_ << "field " << n << " = " << field_source(f) << "\n";
        out_ << "  " << f->name() << ": degree " << f->degree() << " over " << f->base().name() << "\n";
        return;
      }
      case Kind::Group: {
        const auto& g = s.groups.at(n);
        if (!g.satisfies_group_axioms()) throw Error(Errc::NotClosed, "group axioms fail");
        out_ << "  group " << group_string(g) << ", order " << g.order() << "\n";
        out_ << "  fixed field dimension " << check_fixed_field(g).size() << "\n";
        out_ << "  " << (g.is_full() ? "full automorphism group" : "proper subgroup") << "\n";
        return;
      }
      case Kind::Algebra: {
        const auto& a = s.algebras.at(n);
        const std::string& fname = s.algebra_field.at(n);
        out_ << "field " << fname << " = " << field_source(a.field()) << "\n";
        out_ << presentation(n, fname, a) << "\n";
        const auto rels = canonical_form(a).second;
        const bool unit = rels.size() == 1 && rels.front().is_constant();
        out_ << "  " << (unit ? "unit ideal: the scheme is empty" : "proper ideal") << "\n";
        return;
      }
      case Kind::Datum: {
        const auto& d = s.data.at(n);
        out_ << "  group: " << group_string(d.group) << "\n";
        const auto rep = validate_datum(d);
        out_ << "  datum: valid\n";
        checks(rep);
        return;
      }
      case Kind::Module: {
        const auto rep = validate_action(s.modules.at(n));
        out_ << "  action: valid\n";
        checks(rep);
        return;
      }
      case Kind::Map: {
        const auto rep = check_faithfully_flat(s.maps.at(n));
        out_ << "  " << rep.checks.front() << "\n";
        return;
      }
    }
  }

  const Document::Impl& doc_;
  const Options& opts_;
  std::ostringstream out_;
  bool oracle_failed_ = false;
};

}  // namespace

Document parse(const std::string& text) {
  auto impl = std::make_shared<Document::Impl>();
  Parser p(*impl);
  std::size_t lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) p.line(line, ++lineno);
  if (!impl->command) parse_fail({lineno + 1, 1}, "the document has no command", "MissingCommand");
  return Document(impl);
}

Result run(const Document& doc, const Options& opts) {
  Result res;
  const Command& cmd = *doc.impl().command;
  Runner r(doc.impl(), opts);
  try {
    r.run(cmd);
  } catch (const Error& e) {
    res.out = r.output();
    res.exit_code = e.code() == Errc::BudgetExceeded ? kExitBudget : kExitValidation;
    res.err = Diagnostic{"error", cmd.loc.line, cmd.loc.col, std::string(errc_name(e.code())), bare_message(e)}
                  .render(opts.source) + "\n";
    return res;
  }
  res.out = r.output();
  if (r.oracle_failed()) {
    res.exit_code = kExitValidation;
    res.err = Diagnostic{"error", cmd.loc.line, cmd.loc.col, "OracleMismatch", "an oracle check failed"}
                  .render(opts.source) + "\n";
  }
  return res;
}

Result run_text(const std::string& text, const Options& opts) {
  try {
    return run(parse(text), opts);
  } catch (const DiagnosticError& e) {
    return Result{e.exit_code(), "", e.diagnostic().render(opts.source) + "\n"};
  }
}

}  // namespace galdesc::cli
