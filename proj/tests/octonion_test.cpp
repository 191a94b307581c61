#include <gtest/gtest.h>

#include "exjordan/octonion.hpp"
#include "exjordan/rng.hpp"

using namespace exj;

namespace {
Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = rng.coeff();
  return o;
}
}  // namespace

TEST(Zorn, BasisProducts) {
  EXPECT_EQ(zorn_mul(Octonion::e(1), Octonion::e(2)), Octonion::estar(3));
  EXPECT_EQ(zorn_mul(Octonion::e(2), Octonion::e(3)), Octonion::estar(1));
  // the covector wedge enters the product with a minus sign
  EXPECT_EQ(zorn_mul(Octonion::estar(1), Octonion::estar(2)), -Octonion::e(3));
  EXPECT_EQ(zorn_mul(Octonion::eps1(), Octonion::e(1)), Octonion::e(1));
  EXPECT_EQ(zorn_mul(Octonion::e(1), Octonion::eps1()), Octonion::zero());
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Octonion x = random_octonion(rng);
    EXPECT_EQ(zorn_mul(Octonion::one(), x), x);
    EXPECT_EQ(zorn_mul(x, Octonion::one()), x);
  }
}

TEST(Zorn, ConjNormTrace) {
  EXPECT_EQ(onorm(Octonion::one()), Rat(1));
  EXPECT_EQ(onorm(Octonion::eps1()), Rat(0));
  Octonion diag = Octonion::eps1().scaled(Rat(3)) + Octonion::eps2().scaled(Rat(5));
  EXPECT_EQ(onorm(diag), Rat(15));
  EXPECT_EQ(otrace(diag), Rat(8));
  EXPECT_EQ(bilinear(Octonion::e(1), Octonion::estar(1)), Rat(-1));
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    Octonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_EQ(conj(conj(x)), x);
    EXPECT_EQ(bilinear(x, x), 2 * onorm(x));
    EXPECT_EQ(bilinear(x, y), onorm(x + y) - onorm(x) - onorm(y));
    EXPECT_EQ(conj(zorn_mul(x, y)), zorn_mul(conj(y), conj(x)));
  }
}

TEST(Zorn, CompositionAlgebraIdentities) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    EXPECT_EQ(onorm(zorn_mul(x, y)), onorm(x) * onorm(y));
    EXPECT_EQ(otrace(zorn_mul(x, zorn_mul(y, z))), otrace(zorn_mul(zorn_mul(x, y), z)));
    EXPECT_EQ(zorn_mul(conj(x), zorn_mul(x, y)), y.scaled(onorm(x)));
    EXPECT_EQ(zorn_mul(zorn_mul(conj(x), x), y), y.scaled(onorm(x)));
  }
}

TEST(CayleyDickson, ProductAndNorm) {
  // the first factor embeds
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    CDOctonion p;
    for (int i = 0; i < 4; ++i) p.c[i] = rng.coeff();
    EXPECT_EQ(cd_mul(CDOctonion::one(), p), p);
    EXPECT_EQ(cd_mul(p, CDOctonion::one()), p);
  }
  // (0,1)^2 = (gamma 1* 1, 0) = (1, 0) at gamma = 1
  CDOctonion u;
  u.c[4] = 1;
  u.c[7] = 1;
  EXPECT_EQ(cd_mul(u, u), CDOctonion::one());
  CDOctonion mismatched;
  mismatched.gamma = 2;
  EXPECT_THROW(cd_mul(u, mismatched), std::invalid_argument);
  for (int t = 0; t < 1000; ++t) {
    CDOctonion a, b;
    for (int i = 0; i < 8; ++i) {
      a.c[i] = rng.coeff();
      b.c[i] = rng.coeff();
    }
    EXPECT_EQ(cd_norm(cd_mul(a, b)), cd_norm(a) * cd_norm(b));
    EXPECT_EQ(cd_trace(cd_conj(a)), cd_trace(a));
  }
}

TEST(CayleyDickson, ZornIsomorphism) {
  EXPECT_EQ(cd_to_zorn(CDOctonion::one()), Octonion::one());
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    CDOctonion a, b;
    for (int i = 0; i < 8; ++i) {
      a.c[i] = rng.coeff();
      b.c[i] = rng.coeff();
    }
    EXPECT_EQ(cd_to_zorn(cd_mul(a, b)), zorn_mul(cd_to_zorn(a), cd_to_zorn(b)));
    EXPECT_EQ(onorm(cd_to_zorn(a)), cd_norm(a));
    EXPECT_EQ(cd_to_zorn(cd_conj(a)), conj(cd_to_zorn(a)));
    EXPECT_EQ(zorn_to_cd(cd_to_zorn(a)), a);
  }
  EXPECT_THROW(cd_to_zorn(CDOctonion({}, Rat(2))), std::invalid_argument);
}

TEST(Annihilator, KnownSpans) {
  ThetaSubspace want_tl = theta_span(
      {Octonion::eps2(), Octonion::e(1), Octonion::e(2), Octonion::estar(3)});
  EXPECT_EQ(annihilator(theta_span({Octonion::estar(3)}), Side::Right), want_tl);
  ThetaSubspace want_eps = theta_span(
      {Octonion::estar(1), Octonion::estar(2), Octonion::estar(3), Octonion::eps2()});
  EXPECT_EQ(annihilator(theta_span({Octonion::eps1()}), Side::Right), want_eps);
}

TEST(Annihilator, IsotropicLinesHaveDimFour) {
  Rng rng(6);
  int found = 0;
  while (found < 40) {
    Octonion x = random_octonion(rng);
    if (x.is_zero() || onorm(x) != 0) continue;
    ++found;
    ThetaSubspace l = theta_span({x});
    EXPECT_EQ(annihilator(l, Side::Right).dim(), 4);
    EXPECT_EQ(annihilator(l, Side::Left).dim(), 4);
  }
}

TEST(Annihilator, AlwaysIsotropic) {
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<Octonion> gens;
    for (int i = 0; i <= t % 3; ++i) gens.push_back(random_octonion(rng));
    ThetaSubspace w = theta_span(gens);
    if (w.dim() == 0) continue;
    for (Side s : {Side::Left, Side::Right}) {
      ThetaSubspace a = annihilator(w, s);
      for (int i = 0; i < a.dim(); ++i) {
        Octonion bi = Octonion::from_row(a.basis().row(i));
        EXPECT_EQ(onorm(bi), Rat(0));
        for (int j = i + 1; j < a.dim(); ++j)
          EXPECT_EQ(bilinear(bi, Octonion::from_row(a.basis().row(j))), Rat(0));
      }
    }
  }
}

TEST(Classify, LinesAndTwoSpaces) {
  auto line_tl = classify_isotropic(theta_span({Octonion::e(2)}));
  EXPECT_TRUE(line_tl.traceless);
  auto line_eps = classify_isotropic(theta_span({Octonion::eps1()}));
  EXPECT_FALSE(line_eps.traceless);

  // span{phi, v} with phi(v) = 0: traceless and null
  auto c1 = classify_isotropic(theta_span({Octonion::estar(3), Octonion::e(2)}));
  EXPECT_EQ(c1.orbit_class, 1);
  EXPECT_TRUE(c1.left_null && c1.right_null);
  auto c2 = classify_isotropic(theta_span({Octonion::e(1), Octonion::e(2)}));
  EXPECT_EQ(c2.orbit_class, 2);
  auto c5 = classify_isotropic(
      theta_span({Octonion::eps1(), Octonion::e(2) + Octonion::estar(3)}));
  EXPECT_EQ(c5.orbit_class, 5);
  EXPECT_FALSE(c5.left_null || c5.right_null);

  try {
    classify_isotropic(theta_span({Octonion::one()}));
    FAIL() << "expected a classification error";
  } catch (const ClassificationError& e) {
    EXPECT_FALSE(e.witness.empty());
  }
  EXPECT_THROW(classify_isotropic(theta_span(
                   {Octonion::e(1), Octonion::e(2), Octonion::e(3)})),
               std::invalid_argument);
}

TEST(NullTriples, CompletionAndCyclicity) {
  ThetaSubspace v1 = theta_span({Octonion::estar(3), Octonion::e(1)});
  auto [v2, v3] = complete_null_triple(v1);
  const ThetaSubspace* trip[3] = {&v1, &v2, &v3};
  for (int i = 0; i < 3; ++i)
    EXPECT_EQ(product_space(*trip[i], *trip[(i + 1) % 3]).dim(), 0);
  auto [w2, w3] = complete_null_triple(v2);
  EXPECT_EQ(w2, v3);
  EXPECT_EQ(w3, v1);
  // containment V1 . V2-perp inside V3*
  ThetaSubspace v2perp = theta_perp(v2);
  EXPECT_TRUE(conj_space(v3).contains(product_space(v1, v2perp)));
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
