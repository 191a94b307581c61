#include <gtest/gtest.h>

#include "exjordan/orbits.hpp"
#include "exjordan/rng.hpp"

using namespace exj;

namespace {
Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (int i = 0; i < 8; ++i) o.c[i] = rng.coeff();
  return o;
}
HeisenbergElement random_heis(Rng& rng) {
  return HeisenbergElement(random_octonion(rng), random_octonion(rng),
                           random_octonion(rng));
}
Octonion sample_in(const ThetaSubspace& s, Rng& rng) {
  Octonion o;
  for (int b = 0; b < s.dim(); ++b)
    o = o + Octonion::from_row(s.basis().row(b)).scaled(rng.coeff());
  return o;
}
}  // namespace

TEST(Catalog, SeventeenSingularSixSpaces) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 17u);
  for (const auto& d : cat) {
    EXPECT_EQ(d.rep.dim(), 6) << d.shape.name();
    EXPECT_TRUE(is_totally_singular(d.rep).totally_singular) << d.shape.name();
  }
  // the closed orbit is V(Omega) for the distinguished two-space
  EXPECT_EQ(cat[0].rep, v_of_two_space(omega_cd()));
  EXPECT_EQ(cat[0].profile1, (Profile{0, 2, 2, 0, 2, 0}));
  EXPECT_EQ(cat[0].g2_stabilizer_kind, G2StabilizerKind::heisenberg_parabolic);
  EXPECT_EQ(cat[1].g2_stabilizer_kind, G2StabilizerKind::levi_times_u_prime);
  EXPECT_EQ(cat[4].g2_stabilizer_kind, G2StabilizerKind::gl1_u0);
}

TEST(Catalog, InvariantTripleSeparatesOrbits) {
  const auto& cat = catalog();
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      bool same = cat[i].profile1 == cat[j].profile1 &&
                  cat[i].profile2 == cat[j].profile2 &&
                  cat[i].shape.family == cat[j].shape.family &&
                  cat[i].isotropic_class == cat[j].isotropic_class;
      EXPECT_FALSE(same) << cat[i].id << " vs " << cat[j].id;
    }
}

TEST(StabilizerPredicate, ClosedOrbitCases) {
  const auto& d = catalog()[0];
  ThetaSubspace omega = omega_cd();
  Rng rng(61);
  // x in Omega acts trivially via (x, 0; 0)
  for (int t = 0; t < 20; ++t) {
    HeisenbergElement u(sample_in(omega, rng), Octonion::zero(), Octonion::zero());
    auto p = stabilizer_predicate(d, u);
    EXPECT_TRUE(p.acts_trivially);
    EXPECT_TRUE(p.stabilizes);
    EXPECT_TRUE(stabilizer_direct(d, u).acts_trivially);
  }
  // perp but non-member stabilizes without acting trivially
  ThetaSubspace perp = theta_perp(omega);
  for (int t = 0; t < 20; ++t) {
    HeisenbergElement u(sample_in(perp, rng), sample_in(perp, rng), sample_in(perp, rng));
    auto p = stabilizer_predicate(d, u);
    auto q = stabilizer_direct(d, u);
    EXPECT_EQ(p.stabilizes, q.stabilizes);
    EXPECT_TRUE(p.stabilizes);
  }
}

TEST(StabilizerPredicate, FourOneOneCases) {
  const auto& cat = catalog();
  Rng rng(62);
  // c2 = c3 = a1 = 0 shape: trivial action iff z = x = 0 and V(a3) y = 0.
  // On the left orbits V(a3) is the line, so the y-locus is its 4-dim
  // right annihilator; on the right orbits it is zero.
  for (const auto& d : cat) {
    if (!d.has_c1) continue;
    ThetaSubspace ylocus = annihilator(d.v_a3, Side::Right);
    if (d.shape.family == OrbitFamily::left411) {
      EXPECT_EQ(ylocus.dim(), 4);
    }
    for (int t = 0; t < 10; ++t) {
      HeisenbergElement u(Octonion::zero(), sample_in(ylocus, rng), Octonion::zero());
      auto p = stabilizer_predicate(d, u);
      auto q = stabilizer_direct(d, u);
      EXPECT_TRUE(p.acts_trivially) << d.shape.name();
      EXPECT_TRUE(q.acts_trivially) << d.shape.name();
    }
    // a violating element is refused by both routes
    HeisenbergElement bad(Octonion::zero(), Octonion::zero(), Octonion::one());
    auto p = stabilizer_predicate(d, bad);
    auto q = stabilizer_direct(d, bad);
    EXPECT_EQ(p.acts_trivially, q.acts_trivially);
    EXPECT_FALSE(p.acts_trivially);
  }
}

TEST(StabilizerPredicate, AgreesWithDirectActionOnRandomElements) {
  Rng rng(63);
  for (const auto& d : catalog()) {
    for (int t = 0; t < 25; ++t) {
      HeisenbergElement u = random_heis(rng);
      if (t % 3 == 0) {
        // bias towards stabilizing elements
        u.x = sample_in(d.v_a3.dim() ? d.v_a3 : theta_perp(d.v_a1), rng);
      }
      auto p = stabilizer_predicate(d, u);
      auto q = stabilizer_direct(d, u);
      ASSERT_EQ(p.stabilizes, q.stabilizes) << d.shape.name();
      ASSERT_EQ(p.acts_trivially, q.acts_trivially) << d.shape.name();
    }
  }
}

TEST(TrivialActors, DimensionsAndClosedOrbitSpan) {
  static const int expected_fix[17] = {6, 6, 6, 6, 6, 11, 11, 0, 0,
                                       11, 11, 4, 4, 15, 15, 4, 4};
  const auto& cat = catalog();
  for (int i = 0; i < 17; ++i)
    EXPECT_EQ(trivially_acting_subgroup(cat[size_t(i)]).dim(), expected_fix[i])
        << "orbit " << i + 1;

  ThetaSubspace om = omega_cd();
  std::vector<std::vector<Rat>> rows;
  for (int slot = 0; slot < 3; ++slot)
    for (int b = 0; b < om.dim(); ++b) {
      std::vector<Rat> r(24);
      for (int i = 0; i < 8; ++i) r[8 * slot + i] = om.basis().at(b, i);
      rows.push_back(std::move(r));
    }
  EXPECT_EQ(trivially_acting_subgroup(cat[0]), Subspace::span_of(rows, 24));

  // non-closed (2,2,2) orbits meet the trace functional
  for (int i = 1; i < 5; ++i) {
    Subspace s = trivially_acting_subgroup(cat[size_t(i)]);
    bool tracer = false;
    for (int b = 0; b < s.dim(); ++b) {
      auto r = s.basis().row(b);
      if (r[0] + r[7] != 0 || r[8] + r[15] != 0) tracer = true;
    }
    EXPECT_TRUE(tracer) << "orbit " << i + 1;
  }
}

TEST(TrivialActors, MatchesTheInfinitesimalFixerAndClosesUnderTheGroupLaw) {
  // the solved parameter space has the same dimension as the pointwise
  // fixer inside Lie(N) (so it is the whole trivially-acting subgroup, not
  // just a piece), and it is closed under the Heisenberg multiplication
  const auto& nrad = algebra_basis(AlgebraKind::n_radical);
  for (const auto& d : catalog()) {
    Subspace s = trivially_acting_subgroup(d);
    EXPECT_EQ(s.dim(), fixing_subalgebra(d.rep, nrad.basis).dim) << d.shape.name();
    auto elem = [&](int b) {
      auto r = s.basis().row(b);
      HeisenbergElement u;
      for (int i = 0; i < 8; ++i) {
        u.x.c[i] = r[i];
        u.y.c[i] = r[8 + i];
        u.z.c[i] = r[16 + i];
      }
      return u;
    };
    for (int a = 0; a < s.dim(); ++a)
      for (int b = 0; b < s.dim(); ++b) {
        HeisenbergElement p = heis_mul(elem(a), elem(b));
        std::vector<Rat> params(24);
        for (int i = 0; i < 8; ++i) {
          params[i] = p.x.c[i];
          params[8 + i] = p.y.c[i];
          params[16 + i] = p.z.c[i];
        }
        ASSERT_TRUE(s.contains(params)) << d.shape.name();
      }
  }
}

TEST(TrivialActors, XiVanishingFlags) {
  const auto& cat = catalog();
  int count = 0;
  for (const auto& d : cat) {
    bool xi = xi_nontrivial_on_trivial_actors(d);
    bool expected_false = d.id == 1 || d.id == 8 || d.id == 9;
    EXPECT_EQ(xi, !expected_false) << d.shape.name();
    if (xi) ++count;
  }
  EXPECT_EQ(count, 14);
}

TEST(LeviImage, IdentityAndUnipotentShape) {
  EXPECT_EQ(levi_image(Mat::identity(27)), Mat::identity(6));
  Rng rng(64);
  ThetaSubspace perp = theta_perp(omega_cd());
  for (int t = 0; t < 20; ++t) {
    Octonion x = sample_in(perp, rng), y = sample_in(perp, rng), z = sample_in(perp, rng);
    Mat w = levi_image(HeisenbergElement(x, y, z));
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(w.at(i, i), Rat(1));
      for (int j = 0; j < i; ++j) EXPECT_EQ(w.at(i, j), Rat(0));
    }
    CDOctonion xc = zorn_to_cd(x), yc = zorn_to_cd(y);
    EXPECT_EQ(w.at(0, 2), xc.c[0]);
    EXPECT_EQ(w.at(0, 3), xc.c[1]);
    EXPECT_EQ(w.at(1, 2), xc.c[2]);
    EXPECT_EQ(w.at(1, 3), xc.c[3]);
    EXPECT_EQ(w.at(2, 4), yc.c[0]);
    EXPECT_EQ(w.at(2, 5), yc.c[1]);
    EXPECT_EQ(w.at(3, 4), yc.c[2]);
    EXPECT_EQ(w.at(3, 5), yc.c[3]);
  }
}

TEST(LeviImage, Gl2LeviGivesDiagonalBlocks) {
  Rng rng(65);
  for (int t = 0; t < 20; ++t) {
    Mat h(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h.at(i, j) = rng.coeff();
    } while (det(h) == 0);
    Mat img = levi_image(g2_embed(gl2_levi_action(inverse(h))));
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          ASSERT_EQ(img.at(2 * b + i, 2 * b + j), h.at(i, j));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (i / 2 != j / 2) {
          ASSERT_EQ(img.at(i, j), Rat(0));
        }
  }
}

TEST(LeviImage, RejectsNonStabilizingElements) {
  Rng rng(66);
  // a generic Heisenberg element does not stabilize V(Omega)
  HeisenbergElement u = random_heis(rng);
  while (stabilizer_direct(catalog()[0], u).stabilizes) u = random_heis(rng);
  EXPECT_THROW(levi_image(u), std::invalid_argument);
}

TEST(VbarJacobian, AbsoluteValues) {
  EXPECT_EQ(vbar_jacobian(Mat::identity(2)), Rat(1));
  for (long t : {2L, 3L, -5L}) {
    Mat g(2, 2);
    g.at(0, 0) = t;
    g.at(1, 1) = 1;
    EXPECT_EQ(rat_abs(vbar_jacobian(g)), Rat(1, std::abs(t) * std::abs(t) * std::abs(t)));
  }
  Rng rng(67);
  for (int t = 0; t < 100; ++t) {
    Mat g(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.at(i, j) = rng.coeff();
    } while (det(g) == 0);
    Rat d3 = rat_abs(det(g));
    EXPECT_EQ(rat_abs(vbar_jacobian(g)) * d3 * d3 * d3, Rat(1));
  }
  EXPECT_THROW(vbar_jacobian(Mat(2, 2)), std::invalid_argument);
}

TEST(Complement, SplitAndTraceVanishing) {
  auto r = complement_check();
  EXPECT_EQ(r.perp_dim, 18);
  EXPECT_EQ(r.bar_dim, 6);
  EXPECT_TRUE(r.direct_sum_is_theta);
  EXPECT_TRUE(r.trace_vanishes_on_omega);
  EXPECT_TRUE(r.trace_vanishes_on_obar);
  EXPECT_TRUE(r.perp_star_containments);
}

TEST(G2Invariance, ProfilesAndSingularityPreserved) {
  Rng rng(68);
  const auto& cat = catalog();
  for (int t = 0; t < 4; ++t) {
    JordanOperator g = g2_embed(random_g2_element(rng));
    for (const auto& d : cat) {
      JSubspace moved = d.rep.image(g);
      ASSERT_EQ(moved.dim(), 6);
      ASSERT_TRUE(is_totally_singular(moved).totally_singular);
      auto [p1, p2] = filtration_profile(moved);
      ASSERT_EQ(p1, d.profile1);
      ASSERT_EQ(p2, d.profile2);
    }
  }
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
