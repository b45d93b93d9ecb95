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

#include <gtest/gtest.h>

#include <random>

#include "galdesc/galois.hpp"
#include "galdesc/groebner.hpp"
#include "galdesc/poly_parse.hpp"
#include "test_util.hpp"

namespace galdesc {
namespace {

using testing::error_code;
using testing::gaussian;

RingPtr<Rational> qring(std::vector<std::string> vars) {
  return make_ring(prime_field<Rational>(BaseField::rationals()), std::move(vars));
}

template <class K>
Ideal<K> ideal_of(const RingPtr<K>& r, std::initializer_list<const char*> gens) {
  Ideal<K> i{r, {}};
  for (const char* g : gens) i.gens.push_back(parse_poly(r, g));
  return i;
}

template <class K>
std::vector<std::string> strings(const GroebnerBasis<K>& gb) {
  std::vector<std::string> out;
  for (const auto& p : gb.polys) out.push_back(to_string(p));
  return out;
}

TEST(Parse, RoundTripsThroughText) {
  auto r = qring({"x", "y"});
  auto p = parse_poly(r, "(x + y)^2 - 1/2*y + 3");
  EXPECT_EQ(to_string(p), "x^2 + 2*x*y + y^2 - 1/2*y + 3");
  EXPECT_EQ(parse_poly(r, to_string(p)), p);
  auto f = gaussian();
  auto ri = make_ring(f, {"x"});
  EXPECT_EQ(to_string(parse_poly(ri, "t*x - t^2")), "(t)*x + 1");
}

TEST(Parse, ErrorsCarryOffsets) {
  auto r = qring({"x", "y"});
  try {
    parse_poly(r, "x + z");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_poly(r, "x / y"), SyntaxError);
  EXPECT_THROW(parse_poly(r, "x +"), SyntaxError);
  EXPECT_THROW(parse_poly(r, "t"), SyntaxError);
  EXPECT_THROW(make_ring(prime_field<Rational>(BaseField::rationals()), {"x", "x"}), Error);
}

TEST(Buchberger, Examples) {
  auto r = qring({"x", "y"});
  EXPECT_EQ(strings(buchberger(ideal_of(r, {"x"}), MonomialOrder::lex())), std::vector<std::string>{"x"});
  auto gb = buchberger(ideal_of(r, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
  // Reduced and monic: 2y^2 - 1 is normalized to y^2 - 1/2.
  EXPECT_EQ(strings(gb), (std::vector<std::string>{"x - y", "y^2 - 1/2"}));
  auto unit = buchberger(ideal_of(r, {"1"}), MonomialOrder::grevlex());
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(buchberger(Ideal<Rational>{r, {}}, MonomialOrder::lex()).is_zero_ideal());
}

TEST(Buchberger, BudgetIsEnforced) {
  auto r = qring({"x", "y", "z"});
  auto i = ideal_of(r, {"x^3 - y*z + 1", "y^3 - x*z - 2", "z^3 - x*y + 3"});
  EXPECT_EQ(error_code([&] { buchberger(i, MonomialOrder::lex(), 10); }), Errc::BudgetExceeded);
}

TEST(NormalForm, Examples) {
  auto r = qring({"x", "y"});
  auto gb = buchberger(ideal_of(r, {"x^2 + y^2 - 1", "x - y"}), MonomialOrder::lex());
  EXPECT_TRUE(normal_form(parse_poly(r, "(x - y)*(x + 7*y^3)"), gb).is_zero());
  EXPECT_EQ(normal_form(parse_poly(r, "5"), gb), parse_poly(r, "5"));
  EXPECT_EQ(normal_form(parse_poly(r, "x^2"), gb), parse_poly(r, "1/2"));
}

TEST(IdealEqual, Examples) {
  auto r = qring({"x"});
  EXPECT_TRUE(ideal_equal(ideal_of(r, {"x^2", "x^3"}), ideal_of(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(ideal_of(r, {"x^2 - 1"}), ideal_of(r, {"x^2 - 1"})));
  auto ri = make_ring(gaussian(), {"x", "y"});
  EXPECT_FALSE(ideal_equal(ideal_of(ri, {"x + y + t"}), ideal_of(ri, {"(x + y)^2 + 1"})));
  EXPECT_EQ(error_code([&] { ideal_equal(ideal_of(r, {"x"}), ideal_of(qring({"y"}), {"y"})); }),
            Errc::ShapeMismatch);
}

TEST(Eliminate, Examples) {
  auto r = qring({"x", "y"});
  auto e1 = eliminate(ideal_of(r, {"x - y^2"}), {"y"});
  EXPECT_TRUE(e1.gens.empty());
  EXPECT_EQ(e1.ring->vars, std::vector<std::string>{"y"});
  auto e2 = eliminate(ideal_of(r, {"x - y", "x + y"}), {"y"});
  ASSERT_EQ(e2.gens.size(), 1u);
  EXPECT_EQ(to_string(e2.gens[0]), "y");
  auto e3 = eliminate(ideal_of(r, {"1"}), {"y"});
  ASSERT_EQ(e3.gens.size(), 1u);
  EXPECT_EQ(to_string(e3.gens[0]), "1");
}

TEST(ApplySemilinear, Examples) {
  auto f = gaussian();
  auto r = make_ring(f, {"x", "y"});
  Automorphism<Rational> id(f->gen(), "id");
  auto conj = verify_automorphism(f, -f->gen(), "conj");
  std::vector<MultiPoly<Rational>> same{parse_poly(r, "x"), parse_poly(r, "y")};
  std::vector<MultiPoly<Rational>> swap{parse_poly(r, "y"), parse_poly(r, "x")};
  auto p = parse_poly(r, "t*x^2 + 3*y - t + 1");
  EXPECT_EQ(apply_semilinear(id, same, p), p);
  EXPECT_EQ(apply_semilinear(conj, same, parse_poly(r, "t*x")), parse_poly(r, "-t*x"));
  EXPECT_EQ(apply_semilinear(conj, swap, parse_poly(r, "x*y - 1")), parse_poly(r, "x*y - 1"));
}

// Random polynomial with up to `terms` terms of total degree <= deg.
template <class K>
MultiPoly<K> random_poly(const RingPtr<K>& r, std::mt19937_64& rng, int deg, int terms, bool homogeneous = false) {
  MultiPoly<K> p(r);
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->nvars(), 0);
    int left = deg;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      m[i] = std::uniform_int_distribution<int>(0, left)(rng);
      left -= m[i];
    }
    m.back() = homogeneous ? left : std::uniform_int_distribution<int>(0, left)(rng);
    std::vector<K> c;
    for (std::size_t j = 0; j < r->field->degree(); ++j) c.push_back(random_scalar<K>(r->field->base(), rng));
    p.add_term(m, r->field->from_coeffs(c));
  }
  return p;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

// Oracle: the degree-d part of a homogeneous ideal is spanned by m * g with
// deg(m * g) = d, so membership of a homogeneous p is a rank test over F_p.
bool homogeneous_member(const Ideal<Zp>& ideal, const MultiPoly<Zp>& p, int d) {
  const auto mons = monomials_of_degree(ideal.ring->nvars(), d);
  auto coords = [&](const MultiPoly<Zp>& q) {
    std::vector<Zp> v;
    for (const auto& m : mons) v.push_back(q.coeff(m).coeff(0));
    return v;
  };
  std::vector<std::vector<Zp>> cols;
  for (const auto& g : ideal.gens) {
    const int dg = g.total_degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(ideal.ring->nvars(), d - dg)) {
      cols.push_back(coords(MultiPoly<Zp>::term(ideal.ring, m, ideal.ring->field->one()) * g));
    }
  }
  const Zp zero = ideal.ring->field->base_zero();
  const std::size_t r0 = rank(from_columns(cols, mons.size(), zero));
  cols.push_back(coords(p));
  return rank(from_columns(cols, mons.size(), zero)) == r0;
}

TEST(Properties, NormalFormMatchesMembershipOracle) {
  std::mt19937_64 rng(3);
  std::size_t members = 0, non_members = 0;
  for (std::uint64_t p : {2, 3}) {
    auto r = make_ring(finite_field(p, 1), {"x", "y", "z"});
    for (int trial = 0; trial < 12; ++trial) {
      Ideal<Zp> ideal{r, {}};
      for (int k = 0; k < 2; ++k) {
        auto g = random_poly(r, rng, 2, 3, true);
        if (!g.is_zero()) ideal.gens.push_back(g);
      }
      if (ideal.gens.empty()) continue;
      auto gb = buchberger(ideal, MonomialOrder::grevlex());
      for (int d = 2; d <= 4; ++d) {
        for (int s = 0; s < 6; ++s) {
          MultiPoly<Zp> q(r);
          if (s % 2 == 0) {
            // Force a member: combination of generators.
            for (const auto& g : ideal.gens) q += random_poly(r, rng, d - 2, 2, true) * g;
          } else {
            q = random_poly(r, rng, d, 3, true);
          }
          const bool oracle = homogeneous_member(ideal, q, d);
          ASSERT_EQ(normal_form(q, gb).is_zero(), oracle) << to_string(ideal) << " " << to_string(q);
          (oracle ? members : non_members)++;
        }
      }
    }
  }
  EXPECT_GT(members, 10u);
  EXPECT_GT(non_members, 10u);
}

TEST(Properties, BasisIsOrderIndependent) {
  std::mt19937_64 rng(5);
  int corpus = 0;
  for (std::uint64_t p : {5, 7}) {
    auto r = make_ring(finite_field(p, 1), {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial, ++corpus) {
      Ideal<Zp> ideal{r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)}};
      auto lex = buchberger(ideal, MonomialOrder::lex());
      auto grl = buchberger(ideal, MonomialOrder::grevlex());
      ASSERT_TRUE(ideal_equal(Ideal<Zp>{r, lex.polys}, Ideal<Zp>{r, grl.polys}));
      ASSERT_TRUE(ideal_equal(Ideal<Zp>{r, lex.polys}, ideal));
      for (const auto& g : ideal.gens) ASSERT_TRUE(normal_form(g, lex).is_zero());
    }
  }
  auto rq = qring({"x", "y"});
  for (auto gens : {ideal_of(rq, {"x^2 + y^2 - 1", "x - y"}), ideal_of(rq, {"x*y - 1", "x^2 - y"}),
                    ideal_of(rq, {"x^3 - 2", "y^2 - x"}), ideal_of(rq, {"x^2 - 2*x*y", "y^3 + 1/3*x"})}) {
    ++corpus;
    auto lex = buchberger(gens, MonomialOrder::lex());
    auto grl = buchberger(gens, MonomialOrder::grevlex());
    ASSERT_TRUE(ideal_equal(Ideal<Rational>{rq, lex.polys}, Ideal<Rational>{rq, grl.polys}));
  }
  EXPECT_GE(corpus, 20);
}

TEST(Properties, EliminationStaysInsideTheIdeal) {
  std::mt19937_64 rng(9);
  auto r = make_ring(finite_field(3, 1), {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal<Zp> ideal{r, {random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 2)}};
    auto e = eliminate(ideal, {"y", "z"});
    ASSERT_EQ(e.ring->vars, (std::vector<std::string>{"y", "z"}));
    auto gb = buchberger(ideal, MonomialOrder::grevlex());
    for (const auto& g : e.gens) {
      auto lifted = change_ring(g, r);
      ASSERT_LE(lifted.degree_in(0), 0);
      ASSERT_TRUE(normal_form(lifted, gb).is_zero());
    }
  }
}

TEST(Properties, SemilinearApplicationIsARingMap) {
  std::mt19937_64 rng(13);
  auto f = gaussian();
  auto r = make_ring(f, {"x", "y"});
  auto conj = verify_automorphism(f, -f->gen(), "conj");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiPoly<Rational>> images{random_poly(r, rng, 2, 2), random_poly(r, rng, 2, 2)};
    auto p = random_poly(r, rng, 2, 3);
    auto q = random_poly(r, rng, 2, 3);
    ASSERT_EQ(apply_semilinear(conj, images, p + q),
              apply_semilinear(conj, images, p) + apply_semilinear(conj, images, q));
    ASSERT_EQ(apply_semilinear(conj, images, p * q),
              apply_semilinear(conj, images, p) * apply_semilinear(conj, images, q));
  }
}

}  // namespace
}  // namespace galdesc
