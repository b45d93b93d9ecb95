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

#include "galdesc/groebner.hpp"
#include "galdesc/poly_parse.hpp"
#include "galdesc/weil.hpp"
#include "test_util.hpp"

namespace galdesc {
namespace {

using testing::error_code;
using testing::gaussian;
using testing::gf;

template <class K>
AffineAlgebra<K> algebra(const FieldPtr<K>& f, std::vector<std::string> vars, std::initializer_list<const char*> rel) {
  auto r = make_ring(f, std::move(vars));
  std::vector<MultiPoly<K>> g;
  for (const char* t : rel) g.push_back(parse_poly(r, t));
  return make_algebra(r, g);
}

template <class K>
SeparableExtensionData<K> self_data(const FieldPtr<K>& ext) {
  return make_separable_data(ext, ext, find_embeddings(ext, ext));
}

SeparableExtensionData<Rational> gaussian_data() {
  auto f = gaussian();
  return make_separable_data(f, f, {f->gen(), -f->gen()});
}

template <class K>
std::size_t points(const AffineAlgebra<K>& a, const FieldPtr<K>& over) {
  return count_points(a.relations.gens, a.nvars(), over);
}

FieldPtr<Zp> f4() { return gf(2, {1, 1, 1}); }

TEST(WeilRestrict, AffineLine) {
  auto f = f4();
  auto r = weil_restrict(algebra(f, {"X"}, {}), self_data(f));
  EXPECT_EQ(r.restricted.ring->vars, (std::vector<std::string>{"X_0", "X_1"}));
  EXPECT_TRUE(r.restricted.relations.gens.empty());
  EXPECT_EQ(points(r.restricted, r.restricted.field()), 4u);
}

TEST(WeilRestrict, MultiplicativeGroupOverF4) {
  auto f = f4();
  auto v = algebra(f, {"X", "Y"}, {"X*Y - 1"});
  auto r = weil_restrict(v, self_data(f));
  EXPECT_EQ(r.restricted.relations.gens.size(), 2u);
  EXPECT_EQ(points(r.restricted, r.restricted.field()), 3u);
  EXPECT_EQ(points(v, f), 3u);
  ASSERT_EQ(r.substitution.size(), 2u);
  EXPECT_EQ(r.substitution[0], parse_poly(r.expanded_ring, "X_0 + t*X_1"));
}

TEST(WeilRestrict, SquareRootOfI) {
  auto data = gaussian_data();
  auto r = weil_restrict(algebra(data.ext, {"X"}, {"X^2 - t"}), data);
  const auto& ring = r.restricted.ring;
  ASSERT_EQ(r.restricted.relations.gens.size(), 2u);
  EXPECT_EQ(r.restricted.relations.gens[0], parse_poly(ring, "X_0^2 - X_1^2"));
  EXPECT_EQ(r.restricted.relations.gens[1], parse_poly(ring, "2*X_0*X_1 - 1"));
}

TEST(WeilRestrict, Bookkeeping) {
  auto f = gf(2, {1, 1, 0, 1});
  auto v = algebra(f, {"a", "b", "c"}, {"a*b - c", "a^2 + t", "0"});
  auto r = weil_restrict(v, self_data(f));
  EXPECT_EQ(r.restricted.nvars(), 9u);
  EXPECT_EQ(r.restricted.relations.gens.size(), 9u);
}

TEST(SeparableData, Errors) {
  auto f = f4();
  EXPECT_EQ(error_code([&] { make_separable_data(f, f, {f->gen(), f->gen()}); }), Errc::NotSeparable);
  EXPECT_EQ(error_code([&] { make_separable_data(f, f, {f->one(), f->gen()}); }), Errc::NotARoot);
  EXPECT_EQ(error_code([&] { make_separable_data(f, f, {f->gen()}); }), Errc::InvalidArgument);
  SeparableExtensionData<Zp> bad{f, f, {f->gen(), f->gen()}};
  EXPECT_EQ(error_code([&] { etale_splitting(bad); }), Errc::NotSeparable);
}

TEST(UniversalPoints, MultiplicativeGroup) {
  auto f = f4();
  auto v = algebra(f, {"X", "Y"}, {"X*Y - 1"});
  auto r = weil_restrict(v, self_data(f));
  auto rep = verify_universal_points(v, r, TestAlgebra<Zp>{{prime_field<Zp>(f->base())}, {}});
  EXPECT_NE(rep.checks.back().find("3 == 3"), std::string::npos);
  rep = verify_universal_points(v, r, TestAlgebra<Zp>{{f}, {}});
  EXPECT_NE(rep.checks.back().find("9 == 9"), std::string::npos);
  // F_2 x F_4
  rep = verify_universal_points(v, r, TestAlgebra<Zp>{{prime_field<Zp>(f->base()), f}, {}});
  EXPECT_NE(rep.checks.back().find("27 == 27"), std::string::npos);
}

TEST(UniversalPoints, EmptyScheme) {
  auto f = f4();
  auto v = algebra(f, {"X"}, {"1"});
  auto r = weil_restrict(v, self_data(f));
  auto rep = verify_universal_points(v, r, TestAlgebra<Zp>{{prime_field<Zp>(f->base())}, {}});
  EXPECT_NE(rep.checks.back().find("0 == 0"), std::string::npos);
}

TEST(UniversalPoints, RationalSamples) {
  auto data = gaussian_data();
  auto v = algebra(data.ext, {"X"}, {"X^2 - t"});
  auto r = weil_restrict(v, data);
  auto q2 = make_extension<Rational>(BaseField::rationals(), testing::qpoly({-2, 0, 1}));
  const auto half = q2->from_base(Rational(1, 2)) * q2->gen();
  TestAlgebra<Rational> a{{q2}, {{{half, half}, {-half, -half}, {half, -half}, {q2->one(), q2->zero()}}}};
  auto rep = verify_universal_points(v, r, a);
  EXPECT_NE(rep.checks.front().find("R has 2 points"), std::string::npos);
  EXPECT_NE(rep.checks.front().find("sampled"), std::string::npos);
  EXPECT_EQ(error_code([&] { verify_universal_points(v, r, TestAlgebra<Rational>{{q2}, {}}); }),
            Errc::InvalidArgument);
}

TEST(EtaleSplitting, GaussianIdempotents) {
  auto data = gaussian_data();
  auto s = etale_splitting(data);
  ASSERT_EQ(s.idempotents.size(), 2u);
  // (x + i)/(2i) = 1/2 - (i/2) x
  const auto& f = data.omega;
  EXPECT_EQ(s.idempotents[0][0], f->from_base(Rational(1, 2)));
  EXPECT_EQ(s.idempotents[0][1], f->from_base(Rational(-1, 2)) * f->gen());
  EXPECT_EQ(s.idempotents[1][0], f->from_base(Rational(1, 2)));
  EXPECT_EQ(s.idempotents[1][1], f->from_base(Rational(1, 2)) * f->gen());
}

TEST(EtaleSplitting, F4AndDegreeOne) {
  auto f = f4();
  auto s = etale_splitting(self_data(f));
  ASSERT_EQ(s.idempotents.size(), 2u);
  EXPECT_NE(s.idempotents[0], s.idempotents[1]);
  auto q = prime_field<Rational>(BaseField::rationals());
  auto one = etale_splitting(make_separable_data(q, gaussian(), {gaussian()->zero()}));
  ASSERT_EQ(one.idempotents.size(), 1u);
  EXPECT_EQ(one.idempotents[0].size(), 1u);
  EXPECT_TRUE((one.idempotents[0][0] - one.idempotents[0][0].field()->one()).is_zero());
}

TEST(EtaleSplitting, ProductIdentities) {
  // checked again outside the library on Omega[x]/(f)
  for (auto f : {f4(), gf(3, {1, 0, 1}), gf(2, {1, 1, 0, 1})}) {
    auto data = self_data(f);
    auto s = etale_splitting(data);
    const std::size_t d = data.degree();
    auto fx = make_ring(f, {"x"});
    auto mod = MultiPoly<Zp>(fx);
    for (std::size_t j = 0; j <= d; ++j)
      mod += MultiPoly<Zp>::term(fx, {static_cast<int>(j)}, f->from_base(f->modulus().coeffs()[j]));
    GroebnerBasis<Zp> gb = buchberger(Ideal<Zp>{fx, {mod}}, MonomialOrder::grevlex());
    auto as_poly = [&](const std::vector<Elem<Zp>>& e) {
      MultiPoly<Zp> p(fx);
      for (std::size_t j = 0; j < e.size(); ++j) p += MultiPoly<Zp>::term(fx, {static_cast<int>(j)}, e[j]);
      return p;
    };
    MultiPoly<Zp> sum(fx);
    for (std::size_t a = 0; a < d; ++a) {
      sum += as_poly(s.idempotents[a]);
      for (std::size_t b = 0; b < d; ++b) {
        auto prod = normal_form(as_poly(s.idempotents[a]) * as_poly(s.idempotents[b]), gb);
        EXPECT_EQ(prod, a == b ? as_poly(s.idempotents[a]) : MultiPoly<Zp>(fx));
      }
    }
    EXPECT_EQ(sum, MultiPoly<Zp>::from_int(fx, 1));
  }
}

TEST(ConjugateProduct, Examples) {
  auto f = f4();
  auto data = self_data(f);
  auto check = [&](const AffineAlgebra<Zp>& v) {
    return conjugate_product_check(v, weil_restrict(v, data), data).checks.front();
  };
  EXPECT_NE(check(algebra(f, {"X", "Y"}, {"X*Y - 1"})).find("= 9 = 3 * 3"), std::string::npos);
  EXPECT_NE(check(algebra(f, {"X"}, {})).find("= 16 = 4 * 4"), std::string::npos);
  EXPECT_NE(check(algebra(f, {"X"}, {"1"})).find("= 0 = 0 * 0"), std::string::npos);
  // X^2 = t has one root over F_4, so does its conjugate
  EXPECT_NE(check(algebra(f, {"X"}, {"X^2 - t"})).find("= 1 = 1 * 1"), std::string::npos);
}

// (q, d) corpus: #R(F_q) against #V(F_{q^d}) computed directly over the extension.
TEST(Properties, PointCountIdentity) {
  for (auto f : {f4(), gf(3, {1, 0, 1}), gf(2, {1, 1, 0, 1}), gf(5, {2, 0, 1})}) {
    auto data = self_data(f);
    auto k = prime_field<Zp>(f->base());
    const std::vector<AffineAlgebra<Zp>> corpus = {
        algebra(f, {"X"}, {}),
        algebra(f, {"X", "Y"}, {"X*Y - 1"}),
        algebra(f, {"X", "Y"}, {"X^2 + Y^2 - 1"}),
        algebra(f, {"X"}, {"X^2 - t"}),
        algebra(f, {"X", "Y"}, {"Y^2 - X^3 - t"}),
        algebra(f, {"X"}, {"1"}),
    };
    for (const auto& v : corpus) {
      auto r = weil_restrict(v, data);
      EXPECT_EQ(r.restricted.nvars(), v.nvars() * data.degree());
      EXPECT_EQ(r.restricted.relations.gens.size(), v.relations.gens.size() * data.degree());
      EXPECT_EQ(points(r.restricted, k), points(v, f)) << f->name() << " " << to_string(v.relations);
    }
  }
}

TEST(Properties, Functoriality) {
  for (auto f : {f4(), gf(3, {1, 0, 1})}) {
    auto data = self_data(f);
    auto k = prime_field<Zp>(f->base());
    auto v1 = algebra(f, {"X", "Y"}, {"X*Y - 1"});
    auto v2 = algebra(f, {"U", "V"}, {"U^2 + V^2 - 1"});
    auto prod = algebra(f, {"X", "Y", "U", "V"}, {"X*Y - 1", "U^2 + V^2 - 1"});
    EXPECT_EQ(points(weil_restrict(prod, data).restricted, k),
              points(weil_restrict(v1, data).restricted, k) * points(weil_restrict(v2, data).restricted, k));
  }
}

TEST(Properties, NormOneTorus) {
  for (auto f : {f4(), gf(3, {1, 0, 1}), gf(5, {2, 0, 1}), gf(7, {1, 0, 1})}) {
    auto data = self_data(f);
    auto k = prime_field<Zp>(f->base());
    auto ring = make_ring(k, {"X_0", "X_1"});
    auto norm = norm_polynomial(data, ring, {0, 1});
    // inside the restriction of Gm: X_0, X_1 with a unit norm
    auto r = weil_restrict(algebra(f, {"X"}, {}), data);
    EXPECT_EQ(r.restricted.ring->vars, ring->vars);
    const std::size_t q = f->base().characteristic();
    EXPECT_EQ(count_points({norm - MultiPoly<Zp>::from_int(ring, 1)}, 2, k), q + 1);
    EXPECT_EQ(count_points({norm}, 2, k), 1u);
  }
}

}  // namespace
}  // namespace galdesc
