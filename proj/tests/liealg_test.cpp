#include <gtest/gtest.h>

#include "exjordan/liealg.hpp"
#include "exjordan/orbits.hpp"
#include "exjordan/rng.hpp"

using namespace exj;

TEST(AlgebraBasis, Dimensions) {
  EXPECT_EQ(algebra_basis(AlgebraKind::g2_derivations).dim(), 14);
  EXPECT_EQ(algebra_basis(AlgebraKind::e6).dim(), 78);
  EXPECT_EQ(algebra_basis(AlgebraKind::n_radical).dim(), 24);
}

TEST(AlgebraBasis, BasesAreLinearlyIndependent) {
  for (AlgebraKind k :
       {AlgebraKind::g2_derivations, AlgebraKind::e6, AlgebraKind::n_radical}) {
    const auto& alg = algebra_basis(k);
    EXPECT_EQ(alg.flat_span().dim(), alg.dim()) << algebra_kind_name(k);
  }
}

TEST(AlgebraBasis, ModularRankCrossCheck) {
  Mat sys = e6_constraint_matrix();
  EXPECT_EQ(modular_rank(sys, 10007), 729 - 78);
  EXPECT_EQ(modular_rank(sys, 1000003), 729 - 78);
}

TEST(AlgebraBasis, ConstraintAnnihilation) {
  // e6 basis against the raw constraint matrix: exactly zero
  Mat sys = e6_constraint_matrix();
  const auto& e6 = algebra_basis(AlgebraKind::e6);
  for (int b = 0; b < e6.dim(); b += 13) {
    auto flat = LieAlgebraBasis::flatten(e6.basis[size_t(b)]);
    for (int r = 0; r < sys.rows(); ++r) ASSERT_EQ(dot(sys.row(r), flat), Rat(0));
  }
}

TEST(AlgebraBasis, DerivationLeibniz) {
  Rng rng(51);
  const auto& g2 = algebra_basis(AlgebraKind::g2_derivations);
  for (const Mat& d : g2.basis)
    for (int t = 0; t < 10; ++t) {
      Octonion x, y;
      for (int i = 0; i < 8; ++i) {
        x.c[i] = rng.coeff();
        y.c[i] = rng.coeff();
      }
      Octonion lhs = Octonion::from_row(apply_row(zorn_mul(x, y).to_row(), d));
      Octonion rhs = zorn_mul(Octonion::from_row(apply_row(x.to_row(), d)), y) +
                     zorn_mul(x, Octonion::from_row(apply_row(y.to_row(), d)));
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(AlgebraBasis, BracketClosure) {
  for (AlgebraKind k : {AlgebraKind::g2_derivations, AlgebraKind::n_radical}) {
    const auto& alg = algebra_basis(k);
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = i + 1; j < alg.dim(); ++j)
        ASSERT_TRUE(alg.contains(bracket(alg.basis[size_t(i)], alg.basis[size_t(j)])))
            << algebra_kind_name(k) << " " << i << "," << j;
  }
  const auto& e6 = algebra_basis(AlgebraKind::e6);
  Rng rng(52);
  for (int t = 0; t < 150; ++t) {
    int i = int(rng.uniform(0, 77)), j = int(rng.uniform(0, 77));
    ASSERT_TRUE(e6.contains(bracket(e6.basis[size_t(i)], e6.basis[size_t(j)])));
  }
}

TEST(AlgebraBasis, PhiPrimeAndEmbeddedDerivationsInE6) {
  Rng rng(53);
  const auto& e6 = algebra_basis(AlgebraKind::e6);
  for (int t = 0; t < 15; ++t) {
    std::vector<Rat> g(27), v(27);
    for (auto& x : g) x = rng.coeff();
    for (auto& x : v) x = rng.coeff();
    EXPECT_TRUE(e6.contains(
        phi_prime(JordanElement::from_row(g), JordanElement::from_row(v))));
  }
  for (const Mat& d : algebra_basis(AlgebraKind::g2_derivations).basis)
    EXPECT_TRUE(e6.contains(g2_embed_derivation(d)));
}

TEST(AlgebraBasis, LieHDirectSum) {
  const auto& ops = lie_h_basis();
  ASSERT_EQ(ops.size(), 38u);
  std::vector<std::vector<Rat>> rows;
  for (const auto& m : ops) rows.push_back(LieAlgebraBasis::flatten(m));
  EXPECT_EQ(Subspace::span_of(rows, 729).dim(), 38);
}

TEST(G2RootVectors, TwelveNilpotents) {
  const auto& roots = g2_root_vectors();
  ASSERT_EQ(roots.size(), 12u);
  const auto& g2 = algebra_basis(AlgebraKind::g2_derivations);
  for (const Mat& r : roots) {
    EXPECT_TRUE(g2.contains(r));
    Mat p = r;
    int k = 1;
    while (!p.is_zero() && k <= 8) {
      p = p * r;
      ++k;
    }
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(check_automorphism(exp_derivation(r)).ok);
  }
}

TEST(Stabilizers, ClosedOrbitDimensions) {
  const auto& cat = catalog();
  auto closed = stabilizer_subalgebra(cat[0].rep, lie_h_basis());
  EXPECT_EQ(closed.dim, 27);
  // the G2 and N parts split as 9 + 18
  std::vector<Mat> g2_embedded;
  for (const auto& d : algebra_basis(AlgebraKind::g2_derivations).basis)
    g2_embedded.push_back(g2_embed_derivation(d));
  EXPECT_EQ(stabilizer_subalgebra(cat[0].rep, g2_embedded).dim, 9);
  EXPECT_EQ(stabilizer_subalgebra(cat[0].rep, algebra_basis(AlgebraKind::n_radical).basis).dim,
            18);
  // the whole space is stabilized by everything
  EXPECT_EQ(stabilizer_subalgebra(JSubspace::full(27), lie_h_basis()).dim, 38);
}

TEST(Stabilizers, PointwiseFixersVanishOnTheTwoSpecialOrbits) {
  const auto& nrad = algebra_basis(AlgebraKind::n_radical);
  for (const auto& d : catalog()) {
    if (d.shape.family == OrbitFamily::right411 && d.shape.line_slot == 2)
      EXPECT_EQ(fixing_subalgebra(d.rep, nrad.basis).dim, 0) << d.shape.name();
  }
}

TEST(Stabilizers, OrbitDimensionTable) {
  // frozen output of the exact stabilizer solves
  static const int expected[17] = {11, 13, 13, 13, 15, 9, 10, 20, 21,
                                   9, 10, 16, 17, 5, 6, 16, 17};
  const auto& cat = catalog();
  int maxdim = -1, argmax = 0;
  for (int i = 0; i < 17; ++i) {
    auto st = stabilizer_subalgebra(cat[size_t(i)].rep, lie_h_basis());
    int od = 38 - st.dim;
    EXPECT_EQ(od, expected[i]) << "orbit " << i + 1;
    EXPECT_GE(od, 0);
    EXPECT_LE(od, 21);
    if (od > maxdim) {
      maxdim = od;
      argmax = i + 1;
    }
  }
  // the open orbit is the right (4,1,1) orbit with the eps1 line in the a2
  // slot, not one of the (2,2,2) orbits
  EXPECT_EQ(maxdim, 21);
  EXPECT_EQ(argmax, 9);
  // among the five (2,2,2) orbits the class-5 space sits on top
  EXPECT_EQ(expected[4], *std::max_element(expected, expected + 5));
}

TEST(Stabilizers, G2PartDimensionsMatchTheStabilizerKinds) {
  // G2-part stabilizer dimensions behind each recorded kind:
  // both parabolics 9, M(e3*)U(e3*)' 7, GL1.U0 5, SL3 8, classes 3/4 give 7
  std::vector<Mat> g2_embedded;
  for (const auto& d : algebra_basis(AlgebraKind::g2_derivations).basis)
    g2_embedded.push_back(g2_embed_derivation(d));
  for (const auto& d : catalog()) {
    int dim = stabilizer_subalgebra(d.rep, g2_embedded).dim;
    int want = 0;
    switch (d.g2_stabilizer_kind) {
      case G2StabilizerKind::heisenberg_parabolic: want = 9; break;
      case G2StabilizerKind::line_parabolic: want = 9; break;
      case G2StabilizerKind::sl3: want = 8; break;
      case G2StabilizerKind::levi_times_u_prime: want = 7; break;
      case G2StabilizerKind::gl1_u0: want = 5; break;
      case G2StabilizerKind::other: want = 7; break;
    }
    EXPECT_EQ(dim, want) << d.shape.name();
  }
}

TEST(Stabilizers, OrbitDimensionHelper) {
  EXPECT_EQ(orbit_dimension(catalog()[0].rep), 11);
  EXPECT_EQ(orbit_dimension(JSubspace::full(27)), 0);
}

TEST(Stabilizers, FlagVarietyDimension) {
  auto pstab = stabilizer_subalgebra(catalog()[0].rep, algebra_basis(AlgebraKind::e6).basis);
  EXPECT_EQ(pstab.dim, 57);
  EXPECT_EQ(78 - pstab.dim, 21);
}

TEST(Stabilizers, BasisElementsActuallyStabilize) {
  const auto& cat = catalog();
  auto st = stabilizer_subalgebra(cat[2].rep, lie_h_basis());
  for (const Mat& f : st.basis) {
    Subspace moved(cat[2].rep.basis() * f);
    for (int b = 0; b < moved.dim(); ++b)
      EXPECT_TRUE(cat[2].rep.contains(moved.basis().row(b)));
  }
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
