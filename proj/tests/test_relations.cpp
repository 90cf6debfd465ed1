#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scs/coordinates.hpp"
#include "scs/errors.hpp"
#include "scs/families.hpp"
#include "scs/relations.hpp"
#include "scs/sampling.hpp"

using namespace scs;
using oracle::q;

namespace {

SymVector c_vec(std::vector<Scalar> v) { return SymVector(SymKind::C, std::move(v)); }
SymVector d_vec(std::vector<Scalar> v) { return SymVector(SymKind::D, std::move(v)); }

SymVector t52_c() { return c_vec({q(1), q(0), q(-1), q(3, 2), q(-1, 4), q(-69, 8)}); }

bool all_zero(const std::vector<Scalar>& r) {
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool contains(const RelationSet& rs, const Polynomial& p) {
  for (const auto& g : rs.polys)
    if (g == p) return true;
  return false;
}

FamilyCoordinates coords(FamilyName f, int n, Scalar lambda, Scalar mu = q(0), Scalar x = q(1), Scalar w = q(1)) {
  return family_coordinates(FamilySpec{f, n, lambda, mu, x, w});
}

}  // namespace

TEST(MatrixClassNames, RoundTrip) {
  for (MatrixClass c : {MatrixClass::Symmetric, MatrixClass::Skew, MatrixClass::General})
    EXPECT_EQ(class_from_string(to_string(c)), c);
  EXPECT_FALSE(class_from_string("hermitian").has_value());
}

TEST(Generators, SymmetricFour) {
  const BranchUnion u = generators(MatrixClass::Symmetric, 4);
  ASSERT_EQ(u.branches.size(), 1u);
  const RelationSet& rs = u.branches[0];
  EXPECT_EQ(rs.vars, SymKind::C);
  ASSERT_EQ(rs.polys.size(), 2u);
  EXPECT_EQ(rs.polys[0], Polynomial::parse("4*c2^3 - c3^2", SymKind::C, 4));
  EXPECT_EQ(rs.polys[1], Polynomial::parse("6*c2^2 - c4", SymKind::C, 4));
}

TEST(Generators, SymmetricCountsAndBaseCase) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(generators(MatrixClass::Symmetric, n).branches[0].polys.size(), std::size_t(n - 2));
  EXPECT_TRUE(generators(MatrixClass::Symmetric, 2).branches[0].polys.empty());
}

TEST(Generators, SkewSixContainsEulerQuadric) {
  const BranchUnion u = generators(MatrixClass::Skew, 6);
  ASSERT_EQ(u.branches.size(), 1u);
  const RelationSet& rs = u.branches[0];
  EXPECT_TRUE(contains(rs, Polynomial::parse("16*c2*c4 - 2*c6", SymKind::C, 6)));
  for (int k : {1, 3, 5}) EXPECT_TRUE(contains(rs, Polynomial::variable(SymKind::C, 6, k)));
  // odd c1, c3, c5 plus (i,j) = (1,1), (1,2).
  EXPECT_EQ(rs.polys.size(), 5u);
  EXPECT_TRUE(contains(rs, Polynomial::parse("2*c2^2 - c4", SymKind::C, 6)));
}

TEST(Generators, SkewSmallCases) {
  EXPECT_EQ(generators(MatrixClass::Skew, 2).branches[0].polys,
            std::vector<Polynomial>{Polynomial::variable(SymKind::C, 2, 1)});
  EXPECT_EQ(generators(MatrixClass::Skew, 3).branches[0].polys.size(), 2u);
  const BranchUnion u = generators(MatrixClass::Skew, 4);
  ASSERT_EQ(u.branches.size(), 2u);
  EXPECT_TRUE(contains(u.branches[0], Polynomial::parse("-2*c2^2 + c4", SymKind::C, 4)));
  EXPECT_TRUE(contains(u.branches[1], Polynomial::parse("6*c2^2 + c4", SymKind::C, 4)));
  EXPECT_EQ(u.branches[0].branch, "skewones");
  EXPECT_EQ(u.branches[1].branch, "exceptional4");
}

TEST(Generators, GeneralCases) {
  EXPECT_TRUE(generators(MatrixClass::General, 3).branches[0].polys.empty());
  const BranchUnion four = generators(MatrixClass::General, 4);
  ASSERT_EQ(four.branches.size(), 2u);
  EXPECT_EQ(four.branches[0].polys[0], Polynomial::parse("2*c2^3 + c3^2 - c2*c4", SymKind::C, 4));
  EXPECT_EQ(four.branches[1].polys, (std::vector<Polynomial>{Polynomial::parse("c3", SymKind::C, 4),
                                                             Polynomial::parse("6*c2^2 + c4", SymKind::C, 4)}));
  const BranchUnion five = generators(MatrixClass::General, 5);
  ASSERT_EQ(five.branches.size(), 1u);
  EXPECT_EQ(five.branches[0].vars, SymKind::D);
  EXPECT_EQ(five.branches[0].branch, "hankel");
  EXPECT_EQ(five.branches[0].polys.size(), 4u);
  EXPECT_EQ(generators(MatrixClass::General, 8).branches[0].polys.size(), 35u);
}

TEST(Generators, UnsupportedDimensions) {
  EXPECT_THROW(generators(MatrixClass::General, 2), DimensionError);
  EXPECT_THROW(generators(MatrixClass::Symmetric, 1), DimensionError);
  EXPECT_THROW(generators(MatrixClass::Skew, 0), DimensionError);
}

TEST(Generators, GeneralFourMatchesHankelDeterminant) {
  // det [[1,d1,d2],[d1,d2,d3],[d2,d3,d4]] = -(2c2^3 + c3^2 - c2c4) after d = d(c).
  Sampler s(41);
  const Polynomial g = generators(MatrixClass::General, 4).branches[0].polys[0];
  for (int trial = 0; trial < 20; ++trial) {
    const SymVector c = s.sym_vector(SymKind::C, 4);
    const SymVector d = d_from_c_sym(c);
    SquareMatrix h(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h(i, j) = d[i + j];
    EXPECT_EQ(determinant(h), -g.evaluate(c));
  }
}

TEST(Evaluate, Examples) {
  const RelationSet sym6 = generators(MatrixClass::Symmetric, 6).branches[0];
  EXPECT_TRUE(all_zero(evaluate(sym6, coords(FamilyName::Ones, 6, q(1)).c)));
  const RelationSet hankel5 = generators(MatrixClass::General, 5).branches[0];
  EXPECT_TRUE(all_zero(evaluate(hankel5, d_vec({q(1), q(0), q(1), q(3, 2), q(13, 4), q(51, 8)}))));
  EXPECT_TRUE(all_zero(evaluate(hankel5, t52_c())));
  const RelationSet sym3 = generators(MatrixClass::Symmetric, 3).branches[0];
  EXPECT_EQ(evaluate(sym3, c_vec({q(1), q(0), q(1), q(3)})), std::vector<Scalar>{q(-5)});
  EXPECT_THROW(evaluate(sym3, t52_c()), DimensionError);
}

TEST(Hyperdet, SymmetricMatricesVanish) {
  Sampler s(42);
  for (int trial = 0; trial < 10; ++trial) {
    const SubsetVector d = principal_minors(s.symmetric_matrix(3));
    EXPECT_EQ(hyperdet_checks(d).det_in_c, q(0));
  }
}

TEST(Hyperdet, NonSymmetricSample) {
  const SquareMatrix a{{q(1), q(2), q(0)}, {q(-1), q(3), q(1)}, {q(2), q(1, 2), q(0)}};
  const HyperdetResult r = hyperdet_checks(principal_minors(a));
  EXPECT_EQ(r.det_in_c, q(16));
  EXPECT_EQ(oracle::hyperdet_from_minors(principal_minors(a)), q(16));
  EXPECT_FALSE(r.sdet.has_value());
}

TEST(Hyperdet, MatchesCayleyInMinorCoordinates) {
  Sampler s(43);
  for (int trial = 0; trial < 20; ++trial) {
    const SubsetVector d = s.subset_vector(SubsetKind::PM, 3);
    EXPECT_EQ(hyperdet_checks(d).det_in_c, oracle::hyperdet_from_minors(d));
  }
}

TEST(Hyperdet, SymmetrizedDiscriminant) {
  // c = (1, 0, 1, 2): -4 + 4 = 0, realized by the all-ones matrix minus the identity.
  SquareMatrix a(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = q(i == j ? 0 : 1);
  const HyperdetResult r = hyperdet_checks(principal_minors(a));
  ASSERT_TRUE(r.sdet.has_value());
  EXPECT_EQ(*r.sdet, q(0));
  EXPECT_EQ(r.det_in_c, q(0));
  EXPECT_THROW(hyperdet_checks(SubsetVector(4, SubsetKind::PM)), DimensionError);
}

TEST(Regression, TenGenerators) {
  const RelationSet rs = regression_generators_n5();
  ASSERT_EQ(rs.polys.size(), 10u);
  EXPECT_EQ(rs.polys.front(), Polynomial::parse("3*c3^3-4*c2*c3*c4+c2^2*c5", SymKind::C, 5));
  EXPECT_EQ(rs.polys.back(), Polynomial::parse("12*c2^5+2*c3^2*c4-3*c2*c4^2+c2*c3*c5", SymKind::C, 5));
  const auto res = evaluate(rs, t52_c());
  EXPECT_EQ(res.front(), q(0));
  EXPECT_EQ(res.back(), q(0));
  EXPECT_TRUE(all_zero(res));
  EXPECT_TRUE(all_zero(evaluate(rs, c_vec({q(1), q(0), q(0), q(0), q(0), q(0)}))));
  const auto& strings = regression_generator_strings_n5();
  ASSERT_EQ(strings.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(Polynomial::parse(strings[i], SymKind::C, 5), rs.polys[i]);
}

TEST(Properties, WeightedHomogeneity) {
  Sampler s(44);
  for (MatrixClass cls : {MatrixClass::Symmetric, MatrixClass::Skew, MatrixClass::General})
    for (int n = 3; n <= 9; ++n)
      for (const auto& rs : generators(cls, n).branches)
        for (const auto& p : rs.polys) {
          ASSERT_TRUE(p.homogeneous_weight().has_value()) << p.to_string();
          const int w = *p.homogeneous_weight();
          const SymVector v = s.sym_vector(rs.vars, n);
          const Scalar lambda(s.nonzero_rational());
          std::vector<Scalar> scaled;
          for (int k = 0; k <= n; ++k) scaled.push_back(lambda.pow(k) * v[k]);
          EXPECT_EQ(p.evaluate(SymVector(rs.vars, scaled)), lambda.pow(w) * p.evaluate(v)) << p.to_string();
        }
}

TEST(Properties, SymmetricVanishOnOnes) {
  Sampler s(45);
  for (int n = 3; n <= 10; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto fc = coords(FamilyName::Ones, n, Scalar(s.rational()), Scalar(s.rational()));
      EXPECT_TRUE(all_zero(evaluate(generators(MatrixClass::Symmetric, n).branches[0], fc.c))) << n;
    }
}

TEST(Properties, SkewVanishOnSkewOnes) {
  Sampler s(46);
  for (int n = 5; n <= 10; ++n)
    for (int trial = 0; trial < 3; ++trial)
      EXPECT_TRUE(all_zero(evaluate(generators(MatrixClass::Skew, n).branches[0],
                                    coords(FamilyName::SkewOnes, n, Scalar(s.rational())).c)));
  const BranchUnion four = generators(MatrixClass::Skew, 4);
  EXPECT_TRUE(all_zero(evaluate(four.branches[0], coords(FamilyName::SkewOnes, 4, q(3, 2)).c)));
  EXPECT_TRUE(all_zero(evaluate(four.branches[1], coords(FamilyName::Exceptional4, 4, q(3, 2)).c)));
  EXPECT_FALSE(all_zero(evaluate(four.branches[1], coords(FamilyName::SkewOnes, 4, q(3, 2)).c)));
}

TEST(Properties, HankelVanishOnGeneralFamilies) {
  Sampler s(47);
  for (int n = 5; n <= 10; ++n) {
    const RelationSet rs = generators(MatrixClass::General, n).branches[0];
    for (int trial = 0; trial < 3; ++trial) {
      const Scalar lambda(s.nonzero_rational()), mu(s.rational()), x(s.nonzero_rational());
      const auto t = coords(FamilyName::Toeplitz, n, lambda, q(0), x);
      if (!t.d.has_value()) continue;
      EXPECT_TRUE(all_zero(evaluate(rs, shift_d(*t.d, mu))));
      EXPECT_TRUE(all_zero(evaluate(rs, *coords(FamilyName::NCycle, n, q(1), mu, q(1), lambda).d)));
      EXPECT_TRUE(all_zero(evaluate(rs, *coords(FamilyName::Ones, n, lambda, mu).d)));
    }
  }
}

TEST(Properties, RegressionVanishOnToeplitzFive) {
  const RelationSet rs = regression_generators_n5();
  for (const Scalar x : {q(2), q(3), q(1, 2), q(-5, 3)})
    EXPECT_TRUE(all_zero(evaluate(rs, coords(FamilyName::Toeplitz, 5, q(1), q(0), x).c))) << x;
}

TEST(Properties, ProofIdentityAgainstBruteForce) {
  // (1 + x^2) d_k(x T_n(x) + y I) = (x^2 + y)^k + (y - 1)^k x^2.
  Sampler s(48);
  for (int trial = 0; trial < 5; ++trial) {
    const Scalar x(s.nonzero_rational()), y(s.rational());
    for (int n = 2; n <= 7; ++n) {
      const SquareMatrix m = family_matrix(FamilySpec{FamilyName::Toeplitz, n, x, y, x, q(1)});
      const auto r = symmetrize(principal_minors(m));
      ASSERT_TRUE(std::holds_alternative<SymVector>(r));
      const SymVector& d = std::get<SymVector>(r);
      for (int k = 0; k <= n; ++k)
        EXPECT_EQ((q(1) + x * x) * d[k], (x * x + y).pow(k) + (y - q(1)).pow(k) * x * x) << x << " " << y;
    }
  }
}
