#include <gtest/gtest.h>

#include "braidvar/errors.hpp"
#include "braidvar/matrix.hpp"
#include "identities.hpp"
#include "support.hpp"

using namespace braidvar;
using braidvar::test::Gen;
using braidvar::test::v;

TEST(Matrix, BraidMatrixFactorizations) {
  for (int n : {2, 3, 4}) {
    for (int i = 1; i < n; ++i) {
      const Scalar z = v("z1");
      EXPECT_EQ(braid_matrix(i, z, n), permutation_matrix(i, n) * handleslide_matrix(i, i + 1, z, n));
      EXPECT_EQ(braid_matrix(i, z, n), handleslide_matrix(i + 1, i, z, n) * permutation_matrix(i, n));
    }
  }
}

TEST(Matrix, ComposeReversesTheWord) {
  const Scalar z1 = v("z1"), z2 = v("z2");
  std::vector<Atom> word{Letter{1, z1}, Letter{2, z2}};
  EXPECT_EQ(compose(word, 3), braid_matrix(2, z2, 3) * braid_matrix(1, z1, 3));
  EXPECT_EQ(compose_letters({1, 2}, {z1, z2}, 3), compose(word, 3));
  std::vector<Atom> a_form{Handleslide{1, 2, z1}, Crossing{1}};
  EXPECT_EQ(compose(a_form, 2), braid_matrix(1, z1, 2));
}

TEST(Matrix, InverseAndErrors) {
  SquareMatrix m = braid_matrix(1, v("z1"), 3) * marked_point_matrix(2, v("z2"), 3);
  EXPECT_EQ(m * m.inverse(), SquareMatrix::identity(3));
  EXPECT_THROW(SquareMatrix(2).inverse(), DomainError);
  EXPECT_THROW(marked_point_matrix(1, Scalar(0L), 2), DomainError);
  EXPECT_THROW(chi_matrix(2, 1, Scalar(1L), Scalar(1L), 3), DomainError);
}

TEST(Matrix, PushDiagonalLeftKeepsMonodromy) {
  Gen g(21);
  const std::uint32_t p = 11;
  for (int it = 0; it < 200; ++it) {
    const int n = g.uniform(2, 4);
    std::vector<Atom> word;
    const int len = g.uniform(1, 6);
    for (int k = 0; k < len; ++k) {
      const int i = g.uniform(1, n - 1);
      switch (g.uniform(0, 2)) {
        case 0: word.emplace_back(Letter{i, g.residues(1, p)[0]}); break;
        case 1: word.emplace_back(Scaling{i, g.units(1, p)[0]}); break;
        default: word.emplace_back(MarkedPoint{g.uniform(1, n), g.units(1, p)[0]}); break;
      }
    }
    auto [d, letters] = push_diagonal_left(word, n);
    std::vector<Atom> pure(letters.begin(), letters.end());
    ASSERT_TRUE(d.is_diagonal());
    ASSERT_EQ(compose(word, n), d * compose(pure, n));
  }
}

TEST(MatrixIdentities, AllHoldSymbolically) {
  auto ids = braidvar::test::matrix_identities();
  EXPECT_GE(ids.size(), 30u);
  for (const auto& id : ids) EXPECT_TRUE(id.holds()) << id.name;
}

TEST(MatrixIdentities, DiagonalPastCrossingSwapsEntries) {
  // B_i(z) chi(a,b) = chi(a,b) B_i(a b^-1 z) fails; the entries trade places.
  const int n = 3;
  const Scalar z = v("z1"), a = v("a1"), b = v("b1");
  EXPECT_NE(braid_matrix(1, z, n) * chi_matrix(1, 2, a, b, n), chi_matrix(1, 2, a, b, n) * braid_matrix(1, a / b * z, n));
}
