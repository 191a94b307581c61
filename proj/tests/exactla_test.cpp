#include <gtest/gtest.h>

#include "exjordan/io.hpp"
#include "exjordan/matrix.hpp"
#include "exjordan/rng.hpp"

using namespace exj;

namespace {

Mat from_longs(int rows, int cols, std::initializer_list<long> vals) {
  Mat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

Mat random_matrix(Rng& rng, int rows, int cols, int denom_bound = 1) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long num = rng.uniform(-9, 9);
      long den = denom_bound > 1 ? rng.uniform(1, denom_bound) : 1;
      m.at(i, j) = rat(num, den);
    }
  return m;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rat(2, 4), rat(1, 2));
  EXPECT_EQ(rat(3, -6), rat(-1, 2));
  EXPECT_GT(rat(3, -6).get_den(), 0);
  EXPECT_EQ(rat_to_string(rat(-4, 6)), "-2/3");
  EXPECT_EQ(rat_to_string(rat(5)), "5");
  EXPECT_EQ(rat_from_string("7/21"), rat(1, 3));
  EXPECT_THROW(rat(1, 0), std::invalid_argument);
  EXPECT_THROW(rat_from_string("abc"), std::invalid_argument);
}

TEST(KernelBasis, InjectiveMapHasEmptyKernel) {
  EXPECT_EQ(kernel_basis(Mat::identity(2)).rows(), 0);
}

TEST(KernelBasis, SingleRelation) {
  Mat m = from_longs(1, 2, {1, 1});
  Mat k = kernel_basis(m);
  ASSERT_EQ(k.rows(), 1);
  EXPECT_EQ(k.at(0, 0), Rat(1));
  EXPECT_EQ(k.at(0, 1), Rat(-1));
}

TEST(KernelBasis, RankPlusKernelEqualsColumns) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    int rows = int(rng.uniform(1, 8)), cols = int(rng.uniform(1, 8));
    Mat m = random_matrix(rng, rows, cols, 3);
    Mat k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.rows(), cols);
    for (int b = 0; b < k.rows(); ++b)
      for (int i = 0; i < rows; ++i) EXPECT_EQ(dot(m.row(i), k.row(b)), Rat(0));
  }
}

TEST(KernelBasis, CanonicalEchelonOutput) {
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    Mat m = random_matrix(rng, 3, 6);
    Mat k = kernel_basis(m);
    // rerunning rref leaves the basis unchanged: it is already canonical
    Subspace s(k);
    EXPECT_EQ(s.basis(), k);
  }
}

TEST(KernelBasis, LargeSparsePathMatchesDensePath) {
  // block-diagonal copies of a small system push the entry count over the
  // sparse threshold; the kernel must match the dense answer blockwise
  Mat small = from_longs(3, 4, {1, 2, 0, 1, 0, 0, 1, -1, 1, 2, 1, 0});
  Mat small_k = kernel_basis(small);
  const int copies = 220;  // 660 x 880 = 580800 entries
  Mat big(3 * copies, 4 * copies);
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) big.at(3 * c + i, 4 * c + j) = small.at(i, j);
  Mat k = kernel_basis(big);
  ASSERT_EQ(k.rows(), small_k.rows() * copies);
  EXPECT_EQ(rank(small) * copies + k.rows(), 4 * copies);
  for (int b = 0; b < k.rows(); ++b)
    for (int i = 0; i < big.rows(); ++i) EXPECT_EQ(dot(big.row(i), k.row(b)), Rat(0));
}

TEST(RankDetRref, Basics) {
  EXPECT_EQ(rank(Mat::identity(5)), 5);
  Mat d = from_longs(2, 2, {2, 0, 0, 3});
  EXPECT_EQ(det(d), Rat(6));
  Mat inv = from_longs(3, 3, {2, 1, 0, 1, 1, 0, 0, 3, 1});
  auto rr = rref(inv);
  EXPECT_EQ(rr.reduced, Mat::identity(3));
  EXPECT_THROW(det(Mat(2, 3)), std::invalid_argument);
}

TEST(RankDetRref, BareissMatchesCofactorOnRandomMatrices) {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_matrix(rng, 3, 3, 4);
    Rat want = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    EXPECT_EQ(det(m), want);
  }
}

TEST(ModularRank, Examples) {
  EXPECT_EQ(modular_rank(Mat::identity(3), 5), 3);
  Mat m = from_longs(2, 2, {2, 4, 1, 2});
  EXPECT_EQ(modular_rank(m, 7), 1);
  Mat q(1, 1);
  q.at(0, 0) = rat(1, 7);
  EXPECT_THROW(modular_rank(q, 7), BadPrimeError);
}

namespace {
uint64_t random_prime_above_1000(Rng& rng) {
  for (;;) {
    uint64_t p = uint64_t(rng.uniform(1001, 2000000)) | 1;
    bool prime = p > 1;
    for (uint64_t d = 3; d * d <= p && prime; d += 2)
      if (p % d == 0) prime = false;
    if (prime) return p;
  }
}
}  // namespace

TEST(ModularRank, AgreesWithExactRankAtRandomPrimes) {
  Rng rng(14);
  for (int t = 0; t < 25; ++t) {
    Mat m = random_matrix(rng, int(rng.uniform(1, 7)), int(rng.uniform(1, 7)), 3);
    int r = rank(m);
    for (int s = 0; s < 2; ++s) EXPECT_EQ(modular_rank(m, random_prime_above_1000(rng)), r);
  }
}

TEST(Subspace, CanonicalEqualityAndOps) {
  Subspace a = Subspace::span_of({{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(2), Rat(0)}}, 3);
  Subspace b = Subspace::span_of({{Rat(3), Rat(0), Rat(0)}, {Rat(5), Rat(1), Rat(0)}}, 3);
  EXPECT_EQ(a, b);  // same plane, canonical representation
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.contains({Rat(7), Rat(-2), Rat(0)}));
  EXPECT_FALSE(a.contains({Rat(0), Rat(0), Rat(1)}));
  Subspace z = Subspace::span_of({{Rat(0), Rat(0), Rat(1)}}, 3);
  EXPECT_EQ(sum(a, z), Subspace::full(3));
  EXPECT_EQ(intersect(a, z).dim(), 0);
  Subspace line = Subspace::span_of({{Rat(1), Rat(1), Rat(1)}}, 3);
  EXPECT_EQ(intersect(sum(line, z), a).dim(), 1);
}

TEST(Subspace, ResidualVanishesExactlyOnMembers) {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_matrix(rng, 3, 5);
    Subspace s(m);
    std::vector<Rat> combo(5);
    for (int b = 0; b < 3; ++b) {
      Rat co = rng.coeff();
      for (int j = 0; j < 5; ++j) combo[j] += co * m.at(b, j);
    }
    auto r = s.residual(combo);
    for (const auto& x : r) EXPECT_EQ(x, Rat(0));
  }
}

TEST(MatrixIO, RoundTripAndFormat) {
  Mat m(2, 2);
  m.at(0, 0) = rat(1, 2);
  m.at(0, 1) = rat(-3);
  m.at(1, 0) = rat(0);
  m.at(1, 1) = rat(22, 7);
  auto j = mat_to_json(m);
  EXPECT_EQ(j["entries"][0], "1/2");
  EXPECT_EQ(j["entries"][1], "-3");  // denominator omitted when 1
  EXPECT_EQ(mat_from_json(j), m);
  Subspace s(m);
  auto js = subspace_to_json(s, {"u", "v"});
  EXPECT_EQ(js["ambient"], 2);
  EXPECT_EQ(subspace_from_json(js), s);
}

TEST(MatrixIO, MalformedDocumentsRaise) {
  nlohmann::json j;
  j["rows"] = 2;
  j["cols"] = 2;
  j["entries"] = {"1", "2", "3"};  // wrong length
  EXPECT_THROW(mat_from_json(j), std::invalid_argument);
  j["entries"] = {"1", "x", "3", "4"};
  EXPECT_THROW(mat_from_json(j), std::invalid_argument);
  j["entries"] = {"1", "0", "0", "1"};
  j["ambient"] = 5;  // inconsistent header
  EXPECT_THROW(subspace_from_json(j), std::invalid_argument);
}

TEST(Subspace, ImageUnderRightAction) {
  Subspace line = Subspace::span_of({{Rat(1), Rat(0)}}, 2);
  Mat rot(2, 2);
  rot.at(0, 1) = 1;
  rot.at(1, 0) = 1;
  EXPECT_EQ(line.image(rot), Subspace::span_of({{Rat(0), Rat(1)}}, 2));
  EXPECT_EQ(Subspace::full(2).image(rot), Subspace::full(2));
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
