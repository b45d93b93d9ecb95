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

#include "galdesc/descent.hpp"
#include "galdesc/points.hpp"
#include "galdesc/poly_parse.hpp"
#include "test_util.hpp"

namespace galdesc {
namespace {

using testing::error_code;
using testing::gaussian;
using testing::gaussian_group;

template <class K>
std::vector<MultiPoly<K>> polys(const RingPtr<K>& r, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly<K>> out;
  for (const char* t : texts) out.push_back(parse_poly(r, t));
  return out;
}

template <class K>
AffineAlgebra<K> algebra(const FieldPtr<K>& f, std::vector<std::string> vars, std::initializer_list<const char*> rel) {
  auto r = make_ring(f, std::move(vars));
  return make_algebra(r, polys(r, rel));
}

// Datum with the given images for the non-identity elements, in group order.
template <class K>
AffineDescentDatum<K> datum(const AffineAlgebra<K>& a, const GaloisGroup<K>& g,
                            std::vector<std::vector<std::string>> images) {
  AffineDescentDatum<K> d{a, g, {}};
  std::vector<MultiPoly<K>> ident;
  for (std::size_t i = 0; i < a.nvars(); ++i) ident.push_back(MultiPoly<K>::variable(a.ring, i));
  d.maps.push_back({0, ident});
  for (std::size_t s = 1; s < g.order(); ++s) {
    std::vector<MultiPoly<K>> im;
    for (const auto& t : images[s - 1]) im.push_back(parse_poly(a.ring, t));
    d.maps.push_back({s, im});
  }
  return d;
}

template <class K>
AffineDescentDatum<K> swap_datum(const GaloisGroup<K>& g) {
  return datum(algebra(g.field(), {"x", "y"}, {"x*y - 1"}), g, {{"y", "x"}});
}

template <class K>
std::size_t model_points(const Model<K>& m) {
  return count_points(m.algebra0.relations.gens, m.algebra0.nvars(), m.algebra0.field());
}

template <class K>
bool same_ideal(const RingPtr<K>& r, const Ideal<K>& i, std::initializer_list<const char*> gens) {
  return ideal_equal(i, Ideal<K>{r, polys(r, gens)});
}

TEST(ValidateDatum, Examples) {
  auto g = gaussian_group();
  auto line = algebra(g.field(), {"x"}, {});
  EXPECT_NO_THROW(validate_datum(canonical_datum(algebra(prime_field<Rational>(BaseField::rationals()), {"x"}, {}), g)));
  EXPECT_NO_THROW(validate_datum(swap_datum(g)));
  EXPECT_EQ(error_code([&] { validate_datum(datum(line, g, {{"x + 1"}})); }), Errc::CocycleViolation);
  auto torus = algebra(g.field(), {"x", "y"}, {"x*y - 1"});
  EXPECT_EQ(error_code([&] { validate_datum(datum(torus, g, {{"x + 1", "y"}})); }), Errc::NotWellDefined);
  auto bad_id = datum(line, g, {{"x"}});
  bad_id.maps[0].images[0] = parse_poly(line.ring, "2*x");
  EXPECT_EQ(error_code([&] { validate_datum(bad_id); }), Errc::CocycleViolation);
}

TEST(DescendAlgebra, CanonicalLine) {
  auto g = gaussian_group();
  auto a0 = algebra(prime_field<Rational>(BaseField::rationals()), {"x"}, {});
  auto d = canonical_datum(a0, g);
  auto m = descend_algebra(d);
  EXPECT_EQ(m.algebra0.ring->vars, (std::vector<std::string>{"T1_0", "T1_1"}));
  // t_{1,1} = t x + (-t) x vanishes; T1_0 = 2x is free.
  EXPECT_TRUE(same_ideal(m.algebra0.ring, m.algebra0.relations, {"T1_1"}));
  EXPECT_EQ(to_string(m.splitting[0]), "2*x");
  EXPECT_TRUE(splits(m, d));
}

TEST(DescendAlgebra, GaussianSwapIsACircle) {
  auto g = gaussian_group();
  auto d = swap_datum(g);
  auto m = descend_algebra(d);
  // s = x + y, u = i (x - y): s^2 + u^2 = 4xy = 4.
  EXPECT_TRUE(same_ideal(m.algebra0.ring, m.algebra0.relations,
                         {"T2_0 - T1_0", "T2_1 + T1_1", "T1_0^2 + T1_1^2 - 4"}));
  EXPECT_TRUE(splits(m, d));
}

TEST(DescendAlgebra, NonSplitTorusPointCounts) {
  for (std::uint64_t q : {3, 5, 7}) {
    auto f = finite_field(q, 2);
    auto g = frobenius_group(f);
    auto m = descend_algebra(swap_datum(g));
    // Oracle: count by brute force over GF(q) and compare with the classical q + 1.
    EXPECT_EQ(model_points(m), q + 1) << q;
    auto split = descend_algebra(canonical_datum(algebra(finite_field(q, 1), {"x", "y"}, {"x*y - 1"}), g));
    EXPECT_EQ(model_points(split), q - 1) << q;
  }
}

TEST(DescendAlgebra, DegenerateInputs) {
  auto g = gaussian_group();
  auto k = prime_field<Rational>(BaseField::rationals());
  auto point = descend_algebra(canonical_datum(algebra(k, {}, {}), g));
  EXPECT_EQ(point.algebra0.nvars(), 0u);
  EXPECT_TRUE(point.algebra0.relations.gens.empty());
  auto empty = descend_algebra(canonical_datum(algebra(k, {"x"}, {"1"}), g));
  EXPECT_TRUE(buchberger(empty.algebra0.relations, MonomialOrder::grevlex()).is_unit());
}

TEST(CanonicalDatum, Examples) {
  auto f9 = finite_field(3, 2);
  auto g = frobenius_group(f9);
  auto d = canonical_datum(algebra(finite_field(3, 1), {"x", "y"}, {"x*y - 1"}), g);
  EXPECT_EQ(d.maps.size(), 2u);
  EXPECT_EQ(to_string(d.images(1)[0]), "x");
  EXPECT_NO_THROW(validate_datum(d));
  EXPECT_TRUE(splits(canonical_model(algebra(finite_field(3, 1), {"x", "y"}, {"x*y - 1"}), g), d));
  EXPECT_EQ(error_code([&] { canonical_datum(algebra(f9, {"x"}, {}), g); }), Errc::ShapeMismatch);
}

TEST(Splits, NaiveSplitTorusModelFails) {
  auto g = gaussian_group();
  auto d = swap_datum(g);
  auto k = prime_field<Rational>(BaseField::rationals());
  auto naive = canonical_model(algebra(k, {"x", "y"}, {"x*y - 1"}), g);
  EXPECT_FALSE(splits(naive, d));
  EXPECT_TRUE(splits(naive, canonical_datum(naive.algebra0, g)));
}

TEST(DescendIdeal, Examples) {
  auto g = gaussian_group();
  auto k = prime_field<Rational>(BaseField::rationals());
  auto m = canonical_model(algebra(k, {"x", "y"}, {}), g);
  auto r = m.split_ring;
  EXPECT_EQ(error_code([&] { descend_ideal(m, g, Ideal<Rational>{r, polys(r, {"y - t*x"})}); }), Errc::NotStable);
  auto w0 = descend_ideal(m, g, Ideal<Rational>{r, polys(r, {"(y - t*x)*(y + t*x)"})});
  EXPECT_TRUE(same_ideal(m.algebra0.ring, w0, {"x^2 + y^2"}));
  auto back = descend_ideal(m, g, Ideal<Rational>{r, polys(r, {"x^3 - y", "x*y - 2"})});
  EXPECT_TRUE(same_ideal(m.algebra0.ring, back, {"x^3 - y", "x*y - 2"}));
}

TEST(DescendMorphism, Examples) {
  auto g = gaussian_group();
  auto k = prime_field<Rational>(BaseField::rationals());
  auto a0 = algebra(k, {"x"}, {});
  auto d = canonical_datum(a0, g);
  auto m = canonical_model(a0, g);
  auto id = descend_morphism(d, m, d, m, polys(d.algebra.ring, {"x"}));
  EXPECT_EQ(to_string(id[0]), "x");
  auto sq = descend_morphism(d, m, d, m, polys(d.algebra.ring, {"x^2"}));
  EXPECT_EQ(to_string(sq[0]), "x^2");
  EXPECT_EQ(error_code([&] { descend_morphism(d, m, d, m, polys(d.algebra.ring, {"t*x"})); }),
            Errc::NotEquivariant);
  // Against the computed model the same map reads T1_0 -> T1_0^2 / 2.
  auto dm = descend_algebra(d);
  auto sq2 = descend_morphism(d, dm, d, dm, polys(d.algebra.ring, {"x^2"}));
  EXPECT_EQ(to_string(sq2[0]), "1/2*T1_0^2");
}

EmbeddingFamily<Rational> sqrt_i_family(const FieldPtr<Rational>& omega, const RingPtr<Rational>& r) {
  // Omega[x]/(x^2 + t) -> Omega[x]/(x^2 - t) by x -> t x, and back by x -> -t x.
  EmbeddingFamily<Rational> fam;
  fam.roots = {omega->gen(), -omega->gen()};
  fam.phi = {{polys(r, {"x"}), polys(r, {"-t*x"})}, {polys(r, {"t*x"}), polys(r, {"x"})}};
  return fam;
}

TEST(DescendFromEmbeddings, TrivialExtension) {
  auto g = gaussian_group();
  auto k = prime_field<Rational>(BaseField::rationals());
  auto v = algebra(k, {"x", "y"}, {"x^2 - y^3"});
  auto r = make_ring(g.field(), {"x", "y"});
  EmbeddingFamily<Rational> fam{{g.field()->zero()}, {{polys(r, {"x", "y"})}}};
  auto res = descend_from_embeddings(v, g, fam);
  EXPECT_TRUE(splits(res.model, res.datum));
  EXPECT_TRUE(splits(canonical_model(v, g), res.datum));
}

TEST(DescendFromEmbeddings, SquareRootOfI) {
  auto [omega, g] = cyclotomic_group(4);
  auto v = algebra(gaussian(), {"x"}, {"x^2 - t"});
  auto r = make_ring(omega, {"x"});
  auto res = descend_from_embeddings(v, g, sqrt_i_family(omega, r));
  EXPECT_EQ(to_string(res.datum.images(1)[0]), "(t)*x");
  // (1 + i) x squares to 2 i x^2 = -2: the model is QQ(sqrt(-2)), of dimension 2.
  EXPECT_TRUE(same_ideal(res.model.algebra0.ring, res.model.algebra0.relations, {"T1_0 - T1_1", "T1_0^2 + 2"}));
  EXPECT_TRUE(splits(res.model, res.datum));
}

TEST(DescendFromEmbeddings, CorruptedFamiliesAreRejected) {
  auto [omega, g] = cyclotomic_group(4);
  auto v = algebra(gaussian(), {"x"}, {"x^2 - t"});
  auto r = make_ring(omega, {"x"});
  auto fam = sqrt_i_family(omega, r);
  fam.phi[0][1] = polys(r, {"t*x"});
  EXPECT_EQ(error_code([&] { descend_from_embeddings(v, g, fam); }), Errc::ConditionAViolated);
  // Translations x -> x + 1 and x -> x - 1 compose to the identity but are
  // not conjugate to each other.
  auto line = algebra(gaussian(), {"x"}, {});
  EmbeddingFamily<Rational> shift{fam.roots, {{polys(r, {"x"}), polys(r, {"x + 1"})}, {polys(r, {"x - 1"}), polys(r, {"x"})}}};
  EXPECT_EQ(error_code([&] { descend_from_embeddings(line, g, shift); }), Errc::ConditionBViolated);
  shift.phi[0][1] = polys(r, {"x + t"});
  shift.phi[1][0] = polys(r, {"x - t"});
  EXPECT_NO_THROW(descend_from_embeddings(line, g, shift));
}

TEST(PointAction, Examples) {
  auto f9 = finite_field(3, 2);
  auto g = frobenius_group(f9);
  auto line = derive_point_action(canonical_datum(algebra(finite_field(3, 1), {"x"}, {}), g));
  ASSERT_EQ(line.points.size(), 9u);
  for (std::size_t p = 0; p < 9; ++p) {
    const auto a = line.points[p][0];
    EXPECT_EQ(line.points[line.perm[1][p]][0], a * a * a);
  }
  auto torus = derive_point_action(swap_datum(g));
  EXPECT_EQ(torus.points.size(), 8u);
  EXPECT_EQ(torus.fixed_points().size(), 4u);
  auto empty = derive_point_action(canonical_datum(algebra(finite_field(3, 1), {"x"}, {"1"}), g));
  EXPECT_TRUE(empty.points.empty());
}

struct Corpus {
  std::vector<AffineDescentDatum<Zp>> finite;
  std::vector<AffineDescentDatum<Rational>> rational;
};

Corpus corpus() {
  Corpus c;
  for (std::uint64_t q : {2, 3, 5}) {
    auto g = frobenius_group(finite_field(q, 2));
    c.finite.push_back(swap_datum(g));
    c.finite.push_back(canonical_datum(algebra(finite_field(q, 1), {"x", "y"}, {"y^2 - x^3 - 1"}), g));
    // t^(q-1) has norm one, so x -> t^(q-1) x is a cocycle.
    c.finite.push_back(datum(algebra(g.field(), {"x"}, {}), g, {{"t^" + std::to_string(q - 1) + "*x"}}));
  }
  {
    auto g = frobenius_group(finite_field(2, 3));
    auto a = algebra(g.field(), {"x", "y", "z"}, {"x*y*z - 1"});
    c.finite.push_back(datum(a, g, {{"y", "z", "x"}, {"z", "x", "y"}}));
  }
  auto gq = gaussian_group();
  c.rational.push_back(swap_datum(gq));
  c.rational.push_back(datum(algebra(gq.field(), {"x"}, {}), gq, {{"t*x"}}));
  c.rational.push_back(
      canonical_datum(algebra(prime_field<Rational>(BaseField::rationals()), {"x", "y"}, {"x^2 + y^2 - 1"}), gq));
  return c;
}

TEST(Properties, DescendedModelsSplitTheirData) {
  auto c = corpus();
  for (const auto& d : c.finite) {
    ASSERT_NO_THROW(validate_datum(d));
    ASSERT_TRUE(splits(descend_algebra(d), d)) << to_string(d.algebra.relations);
  }
  for (const auto& d : c.rational) ASSERT_TRUE(splits(descend_algebra(d), d));
}

TEST(Properties, FixedPointsAreModelPoints) {
  for (const auto& d : corpus().finite) {
    auto act = derive_point_action(d);
    ASSERT_EQ(act.fixed_points().size(), model_points(descend_algebra(d))) << to_string(d.algebra.relations);
  }
}

TEST(Properties, ExtensionRoundTrip) {
  auto g = frobenius_group(finite_field(3, 2));
  auto k = finite_field(3, 1);
  for (auto a0 : {algebra(k, {"x", "y"}, {"x*y - 1"}), algebra(k, {"x"}, {"x^3 - x - 1"}),
                  algebra(k, {"x", "y"}, {"y^2 - x^3 - x", "x*y"})}) {
    auto d = canonical_datum(a0, g);
    auto m = descend_algebra(d);
    ASSERT_TRUE(splits(m, d));
    // A0's relations pulled to Omega[T] lie in Omega J, and J pushed to A lies in I.
    Ideal<Zp> oj{m.split_ring, {}};
    for (const auto& p : m.algebra0.relations.gens) oj.gens.push_back(change_ring(p, m.split_ring));
    auto gbj = buchberger(oj, MonomialOrder::grevlex());
    for (const auto& p : a0.relations.gens) ASSERT_TRUE(normal_form(substitute(p, m.inverse, m.split_ring), gbj).is_zero());
    auto gbi = buchberger(d.algebra.relations, MonomialOrder::grevlex());
    for (const auto& p : m.algebra0.relations.gens)
      ASSERT_TRUE(normal_form(substitute(p, m.splitting, d.algebra.ring), gbi).is_zero());
  }
}

TEST(Properties, IdealDescentIsExact) {
  std::mt19937_64 rng(17);
  auto g = frobenius_group(finite_field(5, 2));
  auto k = finite_field(5, 1);
  auto m = canonical_model(algebra(k, {"x", "y"}, {}), g);
  for (int trial = 0; trial < 8; ++trial) {
    Ideal<Zp> i0{m.algebra0.ring, {}};
    for (int j = 0; j < 2; ++j) {
      MultiPoly<Zp> p(m.algebra0.ring);
      for (int e = 0; e < 3; ++e) {
        Monomial mono{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
        p.add_term(mono, k->from_int(static_cast<long>(rng() % 5)));
      }
      i0.gens.push_back(p);
    }
    Ideal<Zp> w{m.split_ring, {}};
    for (const auto& p : i0.gens) w.gens.push_back(change_ring(p, m.split_ring).scaled(g.field()->gen()));
    auto back = descend_ideal(m, g, w);
    ASSERT_TRUE(ideal_equal(back, i0));
  }
}

TEST(Properties, CorruptedDataFailValidation) {
  auto gq = gaussian_group();
  auto d = swap_datum(gq);
  d.maps[1].images[0] = d.maps[1].images[0] + parse_poly(d.algebra.ring, "t");
  EXPECT_THROW(validate_datum(d), Error);
  auto f = frobenius_group(finite_field(2, 3));
  auto a = algebra(f.field(), {"x", "y", "z"}, {});
  auto cyc = datum(a, f, {{"y", "z", "x"}, {"z", "x", "y"}});
  ASSERT_NO_THROW(validate_datum(cyc));
  for (std::size_t s = 1; s < 3; ++s) {
    auto bad = cyc;
    bad.maps[s].images[1] = bad.maps[s].images[1] + parse_poly(a.ring, "t*x");
    EXPECT_THROW(validate_datum(bad), Error) << s;
  }
}

}  // namespace
}  // namespace galdesc
