#include <gtest/gtest.h>

#include "kumlift/lattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kumlift;

namespace {

RatMatrix random_int_matrix(gen::Rng& rng, std::size_t r, std::size_t c, long bound) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < r * c; ++i) e.emplace_back(rng.uniform(-bound, bound));
  return {r, c, e};
}

Integer gcd_of_minors(const RatMatrix& m, std::size_t k) {
  Integer g = 0;
  for (const auto& r : oracle::subsets(m.rows(), k))
    for (const auto& c : oracle::subsets(m.cols(), k)) {
      const Integer v = oracle::minor(m, r, c).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  return g;
}

}  // namespace

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"1/0", "abc", "1/-2", "", "/", "1.5", "2/"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(RatMatrix, EntriesStayInLowestTerms) {
  const RatMatrix m(1, 2, {Rational(2, 4), Rational(3, -6)});
  EXPECT_EQ(m(0, 0).get_den(), 2);
  EXPECT_EQ(m(0, 1), Rational(-1, 2));
  EXPECT_GT(m(0, 1).get_den(), 0);
}

TEST(RatMatrix, DeterminantMatchesLeibniz) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RatMatrix m = random_int_matrix(rng, n, n, 4);
    EXPECT_EQ(m.determinant(), oracle::det(m));
  }
}

TEST(RatMatrix, InverseIsTwoSided) {
  gen::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix m = random_int_matrix(rng, 4, 4, 5);
    if (m.determinant() == 0) {
      EXPECT_THROW(m.inverse(), std::domain_error);
      continue;
    }
    EXPECT_EQ(m * m.inverse(), RatMatrix::identity(4));
    EXPECT_EQ(m.inverse() * m, RatMatrix::identity(4));
  }
}

TEST(RatMatrix, BlockAssemblyRoundTrips) {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix m = block2x2(a, -a, a.transpose(), RatMatrix::identity(2));
  EXPECT_EQ(m.block(0, 2, 2, 2), -a);
  EXPECT_EQ(m.block(2, 0, 2, 2), a.transpose());
  EXPECT_EQ(kron(RatMatrix::identity(2), a), block_diag({a, a}));
}

TEST(Snf, DiagonalTwoThree) {
  const auto dec = snf(RatMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(dec.D, (RatMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(dec.U * dec.source * dec.V, dec.D);
}

TEST(Snf, IdentityAndZeroAreFixed) {
  EXPECT_EQ(snf(RatMatrix::identity(4)).D, RatMatrix::identity(4));
  EXPECT_EQ(snf(RatMatrix::zero(2, 2)).D, RatMatrix::zero(2, 2));
}

TEST(Snf, RejectsNonIntegerInput) {
  EXPECT_THROW(snf(RatMatrix(1, 1, {Rational(1, 2)})), std::invalid_argument);
}

TEST(Snf, RandomMatricesSatisfyAllInvariants) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 4));
    const RatMatrix m = random_int_matrix(rng, r, c, 5);
    const auto dec = snf(m);
    ASSERT_EQ(dec.U * m * dec.V, dec.D);
    ASSERT_TRUE(dec.U.is_integral() && dec.V.is_integral());
    ASSERT_EQ(abs(oracle::det(dec.U)), 1);
    ASSERT_EQ(abs(oracle::det(dec.V)), 1);
    const auto d = dec.diagonal();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(sgn(dec.D(i, j)), 0);
    Integer product = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      ASSERT_GE(d[k], 0);
      if (k + 1 < d.size() && d[k] == 0) ASSERT_EQ(d[k + 1], 0) << "zeros must come last";
      if (k + 1 < d.size() && d[k + 1] != 0) ASSERT_TRUE(mpz_divisible_p(d[k + 1].get_mpz_t(), d[k].get_mpz_t()));
      // d_1 ... d_k is the gcd of the k x k minors.
      product *= d[k];
      ASSERT_EQ(product, gcd_of_minors(m, k + 1));
    }
  }
}

TEST(LatticeSolve, Examples) {
  const RatMatrix m{{2, 0}, {0, 3}};
  EXPECT_EQ(*lattice_solve(m, RatMatrix{{4}, {9}}), (RatMatrix{{2}, {3}}));
  EXPECT_FALSE(lattice_solve(m, RatMatrix{{1}, {0}}));
  EXPECT_FALSE(lattice_solve(RatMatrix{{1, 1}, {0, 2}}, RatMatrix{{0}, {1}}));
  EXPECT_FALSE(oracle::brute_solve(RatMatrix{{1, 1}, {0, 2}}, RatMatrix{{0}, {1}}, 10));
  EXPECT_THROW(lattice_solve(m, RatMatrix{{1}}), std::invalid_argument);
}

TEST(LatticeSolve, AgreesWithEnumeration) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 3));
    const RatMatrix m = random_int_matrix(rng, r, c, 5);
    RatMatrix b = random_int_matrix(rng, r, 1, 6);
    if (rng.coin()) b = m * random_int_matrix(rng, c, 1, 2);
    const auto x = lattice_solve(m, b);
    if (x) {
      ASSERT_TRUE(x->is_integral());
      ASSERT_EQ(m * *x, b);
    } else {
      ASSERT_FALSE(oracle::brute_solve(m, b, 6)) << m.to_string() << " " << b.to_string();
    }
  }
}

TEST(LatticeSolve, HandlesRationalData) {
  const RatMatrix m(2, 2, {Rational(1, 2), 0, 0, Rational(1, 3)});
  EXPECT_EQ(*lattice_solve(m, RatMatrix(2, 1, {Rational(3, 2), Rational(-2, 3)})), (RatMatrix{{3}, {-2}}));
  EXPECT_FALSE(lattice_solve(m, RatMatrix(2, 1, {Rational(1, 4), 0})));
}

TEST(SublatticeIndex, Examples) {
  const RatMatrix z2 = RatMatrix::identity(2);
  EXPECT_EQ(*sublattice_index(z2, Rational(2) * z2), 4);
  EXPECT_EQ(*sublattice_index(z2, z2), 1);
  const RatMatrix m{{1, 0}, {1, 3}};
  EXPECT_EQ(*sublattice_index(z2, m), 3);
  EXPECT_EQ(oracle::coset_count_2d(m), 3);
  EXPECT_FALSE(sublattice_index(Rational(2) * z2, z2));
  EXPECT_THROW(sublattice_index(z2, RatMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST(SublatticeIndex, CovolumeIdentityAndCosetCount) {
  gen::Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix l = random_int_matrix(rng, 2, 2, 3);
    const RatMatrix c = random_int_matrix(rng, 2, 2, 3);
    if (l.determinant() == 0 || c.determinant() == 0) continue;
    const RatMatrix m = l * c;
    const auto idx = sublattice_index(l, m);
    ASSERT_TRUE(idx);
    ASSERT_EQ(Rational(*idx) * abs(l.determinant()), abs(m.determinant()));
    ASSERT_EQ(*sublattice_index(RatMatrix::identity(2), c), oracle::coset_count_2d(c));
    ASSERT_EQ(finite_quotient(l, m).order(), *idx);
  }
}

TEST(FiniteQuotient, Examples) {
  const RatMatrix z2 = RatMatrix::identity(2);
  const auto two = finite_quotient(z2, Rational(2) * z2);
  EXPECT_EQ(two.invariant_factors, (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(finite_quotient(z2, z2).trivial());

  const RatMatrix m{{1, 0}, {1, 3}};
  const auto three = finite_quotient(z2, m);
  ASSERT_EQ(three.invariant_factors, (std::vector<Integer>{3}));
  const RatMatrix g = three.generators.front();
  EXPECT_TRUE(lattice_solve(m, Rational(3) * g));
  EXPECT_FALSE(lattice_solve(m, g));
  EXPECT_FALSE(lattice_solve(m, Rational(2) * g));
  // In coordinates of the sublattice the generator is a third.
  EXPECT_EQ((m.inverse() * g).denominator_lcm(), 3);

  EXPECT_THROW(finite_quotient(Rational(2) * z2, z2), std::invalid_argument);
}

TEST(FiniteQuotient, GeneratorOrdersAreExact) {
  gen::Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const RatMatrix c = random_int_matrix(rng, 3, 3, 3);
    if (c.determinant() == 0) continue;
    const auto q = finite_quotient(RatMatrix::identity(3), c);
    ASSERT_EQ(q.order(), abs(c.determinant().get_num()));
    for (std::size_t k = 0; k < q.generators.size(); ++k) {
      const long d = q.invariant_factors[k].get_si();
      ASSERT_GE(d, 2);
      ASSERT_TRUE(lattice_solve(c, Rational(d) * q.generators[k]));
      for (long j = 1; j < d; ++j) ASSERT_FALSE(lattice_solve(c, Rational(j) * q.generators[k]));
    }
  }
}

TEST(IntegerKernel, IsSaturatedAndAnnihilated) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const RatMatrix m = random_int_matrix(rng, 2, 4, 4);
    const RatMatrix k = integer_kernel(m);
    ASSERT_EQ(k.cols(), 4 - m.rank());
    ASSERT_TRUE((m * k).is_zero());
    if (k.cols() > 0) ASSERT_TRUE(is_saturated(k));
  }
  EXPECT_FALSE(is_saturated(RatMatrix{{2}, {0}}));
}
