#include <gtest/gtest.h>

#include "kumlift/torus.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace kumlift;
using gen::J0;

TEST(MakeTorus, AcceptsComplexStructures) {
  const ComplexTorus e = make_torus(1, J0);
  EXPECT_EQ(e.lattice_rank(), 2u);
  const ComplexTorus a = make_torus(2, block_diag({J0, J0}));
  EXPECT_EQ(a.J * a.J, -RatMatrix::identity(4));
  EXPECT_NO_THROW(make_torus(1, gen::J1));
}

TEST(MakeTorus, RejectsBadInput) {
  EXPECT_THROW(make_torus(1, RatMatrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(make_torus(2, J0), std::invalid_argument);
  EXPECT_THROW(make_torus(0, RatMatrix()), std::invalid_argument);
}

TEST(DualTorus, ComplexStructureIsNegativeTranspose) {
  const ComplexTorus e = gen::curve();
  const ComplexTorus ed = dual_torus(e);
  EXPECT_EQ(ed.J, -J0.transpose());
  EXPECT_EQ(ed.J, J0);
  EXPECT_EQ(ed.J * ed.J, -RatMatrix::identity(2));
  EXPECT_EQ(ed.dual_level, 1);
  const ComplexTorus edd = dual_torus(ed);
  EXPECT_EQ(edd.J, e.J);
  EXPECT_EQ(edd, e);
  const ComplexTorus e1 = gen::curve_j1();
  EXPECT_EQ(dual_torus(e1).J, -gen::J1.transpose());
  EXPECT_EQ(dual_torus(dual_torus(e1)), e1);
}

TEST(DualTorus, SurfaceIsBlockwise) {
  const ComplexTorus a = gen::surface();
  EXPECT_EQ(dual_torus(a).J, block_diag({-J0.transpose(), -J0.transpose()}));
}

TEST(MakeHom, ChecksComplexLinearity) {
  const ComplexTorus e = gen::curve();
  const ComplexTorus ed = dual_torus(e);
  const TorusHom n = make_hom(e, e, Rational(3) * RatMatrix::identity(2));
  EXPECT_TRUE(n.integral());
  // With the dual structure equal to J0, the identity is a valid map and the
  // reflection is not.
  EXPECT_NO_THROW(make_hom(ed, e, RatMatrix::identity(2)));
  EXPECT_THROW(make_hom(ed, e, RatMatrix{{1, 0}, {0, -1}}), std::invalid_argument);
  EXPECT_THROW(make_hom(e, e, RatMatrix::identity(3)), std::invalid_argument);
  EXPECT_FALSE(make_hom(e, e, RatMatrix(2, 2, {Rational(1, 2), 0, 0, Rational(1, 2)})).integral());
}

TEST(DualHom, TransposesWithLevelSigns) {
  const ComplexTorus e = gen::curve();
  const ComplexTorus ed = dual_torus(e);
  const TorusHom n = scalar_hom(e, 2);
  EXPECT_EQ(dual_hom(n).M, n.M);
  EXPECT_EQ(dual_hom(n).source, ed);

  const TorusHom mixed = make_hom(ed, e, RatMatrix{{1, 2}, {-2, 1}});
  EXPECT_EQ(dual_hom(mixed).M, Rational(kDoubleDualSign) * mixed.M.transpose());
  EXPECT_EQ(dual_hom(mixed, 1).M, mixed.M.transpose());
}

TEST(DualHom, IsAnInvolution) {
  gen::Rng rng(21);
  for (const ComplexTorus& x : {gen::curve(), gen::curve_j1(), gen::surface(), gen::surface_mixed()}) {
    const ComplexTorus xd = dual_torus(x);
    for (int trial = 0; trial < 10; ++trial)
      for (const auto& [s, t] : {std::pair{x, x}, std::pair{xd, x}, std::pair{x, xd}, std::pair{xd, xd}}) {
        const TorusHom f = make_hom(s, t, gen::random_hom(rng, s, t, 3));
        const TorusHom ff = dual_hom(dual_hom(f));
        ASSERT_EQ(ff.M, f.M);
        ASSERT_EQ(ff.source, f.source);
        ASSERT_EQ(ff.target, f.target);
        // The dual is again complex-linear.
        ASSERT_NO_THROW(make_hom(dual_hom(f).source, dual_hom(f).target, dual_hom(f).M));
      }
  }
}

TEST(DualHom, SummationDualIsDiagonal) {
  const ComplexTorus a = gen::surface();
  const TorusHom sigma = summation_hom(a, 3);
  const TorusHom sd = dual_hom(sigma);
  EXPECT_EQ(sd.M, vstack(std::vector<RatMatrix>(3, RatMatrix::identity(4))));
  EXPECT_EQ(sd.target, dual_torus(product_torus({a, a, a})));
}

TEST(IsogenyDegree, Examples) {
  EXPECT_EQ(isogeny_degree(scalar_hom(gen::curve(), 2)), 4);
  EXPECT_EQ(isogeny_degree(scalar_hom(gen::surface(), 2)), 16);
  EXPECT_THROW(isogeny_degree(scalar_hom(gen::curve(), 0)), std::domain_error);
  const ComplexTorus e = gen::curve();
  EXPECT_THROW(isogeny_degree(make_hom(e, e, RatMatrix(2, 2, {Rational(1, 2), 0, 0, Rational(1, 2)}))),
               std::domain_error);
}

TEST(KernelGroup, Examples) {
  const auto two = kernel_group(scalar_hom(gen::curve(), 2));
  EXPECT_EQ(two.invariant_factors, (std::vector<Integer>{2, 2}));
  std::vector<RatMatrix> gens = two.generators;
  std::sort(gens.begin(), gens.end(), [](const RatMatrix& x, const RatMatrix& y) { return x(0, 0) > y(0, 0); });
  EXPECT_EQ(gens[0], RatMatrix(2, 1, {Rational(1, 2), 0}));
  EXPECT_EQ(gens[1], RatMatrix(2, 1, {0, Rational(1, 2)}));
  EXPECT_TRUE(kernel_group(identity_hom(gen::surface())).trivial());
  EXPECT_EQ(kernel_group(scalar_hom(gen::surface(), 3)).invariant_factors, (std::vector<Integer>(4, 3)));
}

TEST(KernelGroup, OrderEqualsDegreeForRandomIsogenies) {
  gen::Rng rng(22);
  for (const ComplexTorus& x : {gen::curve(), gen::curve_j1(), gen::surface(), gen::surface_mixed()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const TorusHom f = gen::random_isogeny(rng, x, 3, x.g == 1 ? 16 : 81);
      const auto k = kernel_group(f);
      ASSERT_EQ(k.order(), isogeny_degree(f));
      ASSERT_EQ(k.order(), abs(oracle::det(f.M)));
      for (const auto& t : k.generators) ASSERT_TRUE((f.M * t).is_integral());
    }
  }
}

TEST(TorsionPoint, NormalizesAndTracksOrder) {
  const auto p = make_torsion_point(gen::curve(), RatMatrix(2, 1, {Rational(-1, 2), Rational(7, 3)}));
  EXPECT_EQ(p.v, RatMatrix(2, 1, {Rational(1, 2), Rational(1, 3)}));
  EXPECT_EQ(p.order, 6);
}

TEST(PointPreimage, Examples) {
  const ComplexTorus e = gen::curve();
  const auto p = make_torsion_point(e, RatMatrix(2, 1, {Rational(1, 2), 0}));
  EXPECT_EQ(point_preimage(scalar_hom(e, 2), p).v, RatMatrix(2, 1, {Rational(1, 4), 0}));
  EXPECT_EQ(point_preimage(identity_hom(e), p).v, p.v);
}

TEST(PointPreimage, MapsBackOntoThePoint) {
  gen::Rng rng(23);
  const ComplexTorus a = gen::surface();
  for (int trial = 0; trial < 30; ++trial) {
    const TorusHom f = gen::random_isogeny(rng, a, 3, 81);
    std::vector<Rational> v;
    for (int i = 0; i < 4; ++i) v.emplace_back(rng.uniform(0, 5), 6);
    const auto p = make_torsion_point(a, RatMatrix(4, 1, v));
    const auto b = point_preimage(f, p);
    ASSERT_TRUE((f.M * b.v - p.v).is_integral());
  }
}

TEST(KernelSubtorus, BasisAndStructure) {
  const ComplexTorus a = gen::surface();
  const TorusHom sigma = summation_hom(a, 2);
  const Subtorus n = kernel_subtorus(sigma);
  EXPECT_EQ(n.torus.lattice_rank(), 4u);
  EXPECT_TRUE((sigma.M * n.inclusion.M).is_zero());
  for (std::size_t k = 0; k < 4; ++k) {
    RatMatrix expected(8, 1);
    expected = expected.with(k, 0, 1).with(4 + k, 0, -1);
    EXPECT_EQ(n.inclusion.M.col(k), expected);
  }
  EXPECT_EQ(n.inclusion.M * n.torus.J, sigma.source.J * n.inclusion.M);
  EXPECT_TRUE(is_saturated(n.inclusion.M));
  EXPECT_THROW(summation_hom(a, 1), std::invalid_argument);
}

TEST(KernelSubtorus, ImageIsSaturatedInTheKernel) {
  for (int n = 2; n <= 4; ++n) {
    const TorusHom sigma = summation_hom(gen::surface_mixed(), n);
    const Subtorus sub = kernel_subtorus(sigma);
    const RatMatrix ker = integer_kernel(sigma.M);
    // Both bases span the same lattice: each lies in the other.
    for (std::size_t j = 0; j < ker.cols(); ++j) ASSERT_TRUE(lattice_solve(sub.inclusion.M, ker.col(j)));
    for (std::size_t j = 0; j < sub.inclusion.M.cols(); ++j) ASSERT_TRUE(lattice_solve(ker, sub.inclusion.M.col(j)));
  }
}

TEST(HomLattice, BasisElementsCommute) {
  for (const ComplexTorus& x : {gen::curve(), gen::curve_j1(), gen::surface_mixed()})
    for (const auto& m : hom_lattice_basis(x, dual_torus(x))) EXPECT_EQ(m * x.J, dual_torus(x).J * m);
  EXPECT_EQ(hom_lattice_basis(gen::curve(), gen::curve()).size(), 2u);
  EXPECT_EQ(hom_lattice_basis(gen::surface(), gen::surface()).size(), 8u);
}
