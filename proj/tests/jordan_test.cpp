#include <gtest/gtest.h>

#include "exjordan/jordan.hpp"
#include "exjordan/rng.hpp"

using namespace exj;

namespace {
JordanElement random_jordan(Rng& rng) {
  std::vector<Rat> v(27);
  for (auto& x : v) x = rng.coeff();
  return JordanElement::from_row(v);
}
Rat trilinear_from_norm(const JordanElement& x, const JordanElement& y,
                        const JordanElement& z) {
  return jnorm(x + y + z) - jnorm(x + y) - jnorm(x + z) - jnorm(y + z) + jnorm(x) +
         jnorm(y) + jnorm(z);
}
}  // namespace

TEST(Norm, Values) {
  EXPECT_EQ(jnorm(JordanElement::identity()), Rat(1));
  EXPECT_EQ(jnorm(JordanElement::e11()), Rat(0));
  EXPECT_EQ(jnorm(JordanElement::diag(Rat(1), Rat(2), Rat(3))), Rat(6));
}

TEST(Trilinear, NormalizationAndPairing) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    JordanElement x = random_jordan(rng);
    EXPECT_EQ(trilinear(x, x, x), 6 * jnorm(x));
  }
  EXPECT_EQ(jpairing(JordanElement::e11(), JordanElement::e22()), Rat(0));
  EXPECT_EQ(trilinear(JordanElement::e11(), JordanElement::e22(), JordanElement::e33()),
            Rat(1));
  // the pairing self-value decomposes over the coordinates
  Rng rng2(22);
  for (int t = 0; t < 50; ++t) {
    JordanElement x = random_jordan(rng2);
    Rat want = x.c1 * x.c1 + x.c2 * x.c2 + x.c3 * x.c3 + bilinear(x.a1, x.a1) +
               bilinear(x.a2, x.a2) + bilinear(x.a3, x.a3);
    EXPECT_EQ(jpairing(x, x), want);
  }
}

TEST(Adjoint, CoordinateFormulaAndIdentities) {
  EXPECT_EQ(adjoint(JordanElement::diag(Rat(2), Rat(3), Rat(5))),
            JordanElement::diag(Rat(15), Rat(10), Rat(6)));
  EXPECT_TRUE(adjoint(JordanElement::e11()).is_zero());
  EXPECT_EQ(cross(JordanElement::e11(), JordanElement::e22()), JordanElement::e33());
  EXPECT_EQ(cross(JordanElement::e11(), JordanElement::e33()), JordanElement::e22());
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    JordanElement x = random_jordan(rng);
    EXPECT_EQ(adjoint(adjoint(x)), x.scaled(jnorm(x)));
    EXPECT_EQ(jpairing(adjoint(x), x), 3 * jnorm(x));
    EXPECT_EQ(cross(x, x), adjoint(x).scaled(Rat(2)));
  }
}

TEST(Adjoint, MatchesNormPolarizationOnBasisPairs) {
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j) {
      JordanElement cr = cross(JordanElement::basis(i), JordanElement::basis(j));
      for (int k = 0; k < 27; ++k) {
        ASSERT_EQ(jpairing(cr, JordanElement::basis(k)),
                  trilinear_from_norm(JordanElement::basis(i), JordanElement::basis(j),
                                      JordanElement::basis(k)))
            << i << "," << j << "," << k;
      }
    }
}

TEST(Singular, WitnessesAndExamples) {
  ThetaSubspace omega = theta_span({Octonion::estar(3), Octonion::e(2)});
  EXPECT_TRUE(is_totally_singular(v_of_two_space(omega)).totally_singular);
  auto w = is_totally_singular(
      jordan_span({JordanElement::e11(), JordanElement::e22()}));
  EXPECT_FALSE(w.totally_singular);
  EXPECT_EQ(cross(w.first, w.second), JordanElement::e33());
  EXPECT_TRUE(is_totally_singular(JSubspace::zero(27)).totally_singular);
}

TEST(Filtration, Profiles) {
  ThetaSubspace omega = theta_span({Octonion::estar(3), Octonion::e(2)});
  auto [p1, p2] = filtration_profile(v_of_two_space(omega));
  EXPECT_EQ(p1, (Profile{0, 2, 2, 0, 2, 0}));
  EXPECT_EQ(p2, (Profile{0, 2, 0, 2, 2, 0}));
  auto [q1, q2] = filtration_profile(jordan_span({JordanElement::e33()}));
  EXPECT_EQ(q1[0], 1);
  EXPECT_EQ(q2[0], 1);
  // the full space climbs by the coordinate sizes
  auto [f1, f2] = filtration_profile(JSubspace::full(27));
  EXPECT_EQ(f1, (Profile{1, 8, 8, 1, 8, 1}));
  EXPECT_EQ(f2, (Profile{1, 8, 1, 8, 8, 1}));
}

TEST(CayleyDicksonDecomposition, NormIdentity) {
  Rng rng(24);
  // pure H3(D) elements have zero matrix part and matching norms
  for (int t = 0; t < 20; ++t) {
    JordanElement x;
    x.c1 = rng.coeff();
    x.c2 = rng.coeff();
    x.c3 = rng.coeff();
    CDOctonion p;
    for (int i = 0; i < 4; ++i) p.c[i] = rng.coeff();
    x.a2 = cd_to_zorn(p);
    auto d = cd_decompose(x);
    EXPECT_TRUE(d.v.is_zero());
    EXPECT_EQ(jnorm(x), h3d_norm(d.h));
    EXPECT_EQ(cd_compose(d), x);
  }
  for (int t = 0; t < 1000; ++t) {
    JordanElement x = random_jordan(rng);
    ASSERT_TRUE(cd_norm_check(x));
  }
}

TEST(CayleyDicksonDecomposition, SingularSixSpaceIsBottomRowZero) {
  ThetaSubspace omega = theta_span({cd_to_zorn(CDOctonion::basis(4)),
                                    cd_to_zorn(CDOctonion::basis(5))});
  JSubspace vo = v_of_two_space(omega);
  ASSERT_EQ(vo.dim(), 6);
  for (int b = 0; b < 6; ++b) {
    auto d = cd_decompose(JordanElement::from_row(vo.basis().row(b)));
    EXPECT_TRUE(d.h.is_zero());
    for (int j = 0; j < 6; ++j) EXPECT_EQ(d.v.at(1, j), Rat(0));
  }
}

namespace {
Rat decomposed_norm(const JordanElement& x) {
  auto d = cd_decompose(x);
  auto s = cd_sandwich(d);
  if (s[1] != 0 || s[2] != 0 || s[0] != s[3]) ADD_FAILURE() << "sandwich not scalar";
  return h3d_norm(d.h) + s[0];
}
template <typename F>
Rat polarize3(F f, const JordanElement& x, const JordanElement& y,
              const JordanElement& z) {
  return f(x + y + z) - f(x + y) - f(x + z) - f(y + z) + f(x) + f(y) + f(z);
}
}  // namespace

TEST(CayleyDicksonDecomposition, NormIdentityOnAllBasisTriples) {
  // both sides are cubic forms; equality of all polarizations on basis
  // triples certifies the identity as polynomials
  for (int i = 0; i < 27; ++i)
    for (int j = i; j < 27; ++j)
      for (int k = j; k < 27; ++k) {
        JordanElement ei = JordanElement::basis(i), ej = JordanElement::basis(j),
                      ek = JordanElement::basis(k);
        ASSERT_EQ(polarize3(jnorm, ei, ej, ek), polarize3(decomposed_norm, ei, ej, ek))
            << i << "," << j << "," << k;
      }
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
