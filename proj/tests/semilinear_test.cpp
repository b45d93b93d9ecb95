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

#include "galdesc/semilinear.hpp"
#include "test_util.hpp"

namespace galdesc {
namespace {

using testing::elem;
using testing::error_code;
using testing::gaussian;
using testing::gaussian_group;
using testing::gf;
using testing::qpoly;

template <class K>
GaloisGroup<K> involution_group(const FieldPtr<K>& f, const Elem<K>& image) {
  return GaloisGroup<K>::from_elements(
      f, {Automorphism<K>(f->gen(), "id"), verify_automorphism(f, image, "conj")});
}

template <class K>
Matrix<Elem<K>> scalar_matrix(const Elem<K>& a) {
  return Matrix<Elem<K>>::from_rows({{a}}, a);
}

TEST(ValidateAction, TrivialIsValid) {
  auto g = gaussian_group();
  auto m = extend_scalars(KSpace<Rational>{BaseField::rationals(), 2, std::nullopt}, g);
  EXPECT_EQ(validate_action(m).checks.size(), 3u);
}

TEST(ValidateAction, GaussianUnitCocycle) {
  auto g = gaussian_group();
  const auto& f = g.field();
  SemilinearModule<Rational> m(g, 1, {scalar_matrix(f->one()), scalar_matrix(elem(f, {0, 1}))});
  EXPECT_NO_THROW(validate_action(m));
}

TEST(ValidateAction, NormTwoIsNotACocycle) {
  auto g = gaussian_group();
  const auto& f = g.field();
  SemilinearModule<Rational> m(g, 1, {scalar_matrix(f->one()), scalar_matrix(elem(f, {1, 1}))});
  EXPECT_EQ(error_code([&] { validate_action(m); }), Errc::CocycleViolation);
}

TEST(ValidateAction, IdentityAndSingular) {
  auto g = gaussian_group();
  const auto& f = g.field();
  SemilinearModule<Rational> bad_id(g, 1, {scalar_matrix(elem(f, {0, 1})), scalar_matrix(f->one())});
  EXPECT_EQ(error_code([&] { validate_action(bad_id); }), Errc::IdentityNotTrivial);
  SemilinearModule<Rational> singular(g, 1, {scalar_matrix(f->one()), scalar_matrix(f->zero())});
  EXPECT_EQ(error_code([&] { validate_action(singular); }), Errc::SingularMatrix);
}

TEST(FixedSubspace, TrivialGivesStandardBasis) {
  auto g = gaussian_group();
  auto m = extend_scalars(KSpace<Rational>{BaseField::rationals(), 2, std::nullopt}, g);
  auto w = fixed_subspace(m);
  ASSERT_EQ(w.dim, 2u);
  auto p = counit_check(m);
  EXPECT_EQ(p, (Matrix<Elem<Rational>>::identity(2, g.field()->zero())));
}

TEST(FixedSubspace, GaussianLine) {
  auto g = gaussian_group();
  const auto& f = g.field();
  SemilinearModule<Rational> m(g, 1, {scalar_matrix(f->one()), scalar_matrix(elem(f, {0, 1}))});
  auto w = fixed_subspace(m);
  ASSERT_EQ(w.dim, 1u);
  const Elem<Rational> v = (*w.embedding)[0][0];
  // a + bi = i (a - bi) forces a = b.
  EXPECT_FALSE(v.is_zero());
  EXPECT_EQ(v.coeff(0), v.coeff(1));
  EXPECT_TRUE(is_invertible(counit_check(m)));
}

TEST(FixedSubspace, GF9Swap) {
  auto f = gf(3, {1, 0, 1});
  auto g = frobenius_group(f);
  auto swap = Matrix<Elem<Zp>>::from_rows({{f->zero(), f->one()}, {f->one(), f->zero()}}, f->zero());
  SemilinearModule<Zp> m(g, 2, {Matrix<Elem<Zp>>::identity(2, f->zero()), swap});
  validate_action(m);
  // Oracle: brute force over all 81 vectors of GF(9)^2.
  std::size_t fixed = 0;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) {
      OmegaVector<Zp> v{f->element_at(a), f->element_at(b)};
      if (m.act(1, v) == v) ++fixed;
    }
  EXPECT_EQ(fixed, 9u);
  EXPECT_EQ(fixed_subspace(m).dim, 2u);
}

TEST(ExtendScalars, Shapes) {
  auto g = gaussian_group();
  auto zero = extend_scalars(KSpace<Rational>{BaseField::rationals(), 0, std::nullopt}, g);
  EXPECT_EQ(zero.dim(), 0u);
  EXPECT_EQ(fixed_subspace(zero).dim, 0u);
  auto f9 = gf(3, {1, 0, 1});
  auto m = extend_scalars(KSpace<Zp>{BaseField::prime(3), 3, std::nullopt}, frobenius_group(f9));
  EXPECT_EQ(m.dim(), 3u);
  EXPECT_EQ(m.cocycle(1), (Matrix<Elem<Zp>>::identity(3, f9->zero())));
}

TEST(DescendSubspace, Everything) {
  auto g = gaussian_group();
  const auto& f = g.field();
  KSpace<Rational> v0{BaseField::rationals(), 2, std::nullopt};
  auto w0 = descend_subspace(v0, g, {{f->one(), f->zero()}, {f->zero(), f->one()}});
  EXPECT_EQ(w0.dim, 2u);
}

TEST(DescendSubspace, SqrtTwoLineIsNotStable) {
  auto f = make_extension<Rational>(BaseField::rationals(), qpoly({-2, 0, 1}), true);
  auto g = involution_group(f, elem(f, {0, -1}));
  KSpace<Rational> v0{BaseField::rationals(), 2, std::nullopt};
  EXPECT_EQ(error_code([&] { descend_subspace(v0, g, {{f->one(), f->gen()}}); }), Errc::NotStable);
}

TEST(DescendSubspace, GaussianPairSpansAll) {
  auto g = gaussian_group();
  const auto& f = g.field();
  KSpace<Rational> v0{BaseField::rationals(), 2, std::nullopt};
  OmegaVector<Rational> w{elem(f, {1, 1}), elem(f, {1, -1})};
  auto w0 = descend_subspace(v0, g, {w, g[1](w)});
  EXPECT_EQ(w0.dim, 2u);
}

template <class K>
void speiser_trial(const FieldPtr<K>& f, const GaloisGroup<K>& g, std::mt19937_64& rng, std::size_t n) {
  auto b = random_invertible(f, n, rng);
  auto m = coboundary_module(g, b);
  validate_action(m);
  auto w = fixed_subspace(m);
  ASSERT_EQ(w.dim, n);
  auto p = counit_check(m);
  ASSERT_TRUE(is_invertible(p));
  for (std::size_t s = 0; s < g.order(); ++s) ASSERT_EQ(m.cocycle(s) * g[s](p), p);
  // The fixed vectors are b^-1 u with u rational, so b * P has entries in k.
  auto bp = b * p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ASSERT_TRUE(bp(i, j).is_base());
}

TEST(Properties, SpeiserOnRandomCoboundaries) {
  std::mt19937_64 rng(7);
  std::size_t trials = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::size_t deg : {2, 3}) {
      auto f = finite_field(p, deg);
      auto g = frobenius_group(f);
      for (std::size_t n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 4; ++rep, ++trials) speiser_trial(f, g, rng, n);
    }
  }
  auto gq = gaussian_group();
  auto [z5, g5] = cyclotomic_group(5);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int rep = 0; rep < 4; ++rep, trials += 2) {
      speiser_trial(gq.field(), gq, rng, n);
      speiser_trial(z5, g5, rng, n);
    }
  EXPECT_GE(trials, 100u);
}

TEST(Properties, RoundTripFromKSpace) {
  auto f = finite_field(5, 3);
  auto g = frobenius_group(f);
  for (std::size_t d = 0; d <= 4; ++d) {
    auto w = fixed_subspace(extend_scalars(KSpace<Zp>{BaseField::prime(5), d, std::nullopt}, g));
    ASSERT_EQ(w.dim, d);
    Matrix<Zp> coords(d, d, f->base_zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        ASSERT_TRUE((*w.embedding)[j][i].is_base());
        coords(i, j) = (*w.embedding)[j][i].coeff(0);
      }
    EXPECT_EQ(rank(coords), d);
  }
}

// Random Omega-combinations of k-rational vectors u, transported by b^-1.
template <class K>
void stable_subspace_trial(const FieldPtr<K>& f, const GaloisGroup<K>& g, std::mt19937_64& rng, std::size_t n,
                           std::size_t r) {
  auto b = random_invertible(f, n, rng);
  auto binv = *inverse(b);
  auto m = coboundary_module(g, b);
  std::vector<OmegaVector<K>> us;
  for (std::size_t j = 0; j < r; ++j) {
    OmegaVector<K> u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(f->from_base(random_scalar<K>(f->base(), rng)));
    us.push_back(u);
  }
  std::vector<OmegaVector<K>> spanning;
  for (std::size_t j = 0; j < r + 1; ++j) {
    OmegaVector<K> v(n, f->zero());
    for (const auto& u : us) {
      auto c = random_element(f, rng);
      for (std::size_t i = 0; i < n; ++i) v[i] += c * u[i];
    }
    spanning.push_back((binv * Matrix<Elem<K>>::column_vector(v, f->zero())).column(0));
  }
  auto expected = rank(from_columns(us, n, f->zero()));
  auto w0 = descend_subspace(m, spanning);
  ASSERT_EQ(w0.dim, expected);
  if (expected > 0) ASSERT_GE(w0.dim, 1u);
  // Every rational vector b^-1 u of W lies in the k-span of the result.
  std::vector<std::vector<K>> cols;
  for (const auto& v : *w0.embedding) {
    cols.push_back(flatten((b * Matrix<Elem<K>>::column_vector(v, f->zero())).column(0)));
  }
  const std::size_t base_rank = rank(from_columns(cols, n * f->degree(), f->base_zero()));
  for (const auto& u : us) {
    auto with_u = cols;
    with_u.push_back(flatten(u));
    ASSERT_EQ(rank(from_columns(with_u, n * f->degree(), f->base_zero())), base_rank);
  }
}

TEST(Properties, StableSubspacesDescend) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5}) {
    auto f = finite_field(p, 2);
    auto g = frobenius_group(f);
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t r = 1; r <= n; ++r) stable_subspace_trial(f, g, rng, n, r);
  }
  auto gq = gaussian_group();
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 1; r <= n; ++r) stable_subspace_trial(gq.field(), gq, rng, n, r);
}

}  // namespace
}  // namespace galdesc
