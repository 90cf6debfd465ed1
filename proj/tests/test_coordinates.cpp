#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "scs/coordinates.hpp"
#include "scs/errors.hpp"
#include "scs/families.hpp"
#include "scs/sampling.hpp"

using namespace scs;
using oracle::q;

namespace {

// A printed term: coefficient times a product of variables with the given
// indices, e.g. {-6, {1, 1, 2}} is -6 c1^2 c2.
struct Printed {
  long coeff;
  std::vector<int> parts;
};

std::map<std::vector<int>, Integer> as_map(const std::vector<SymTerm>& terms) {
  std::map<std::vector<int>, Integer> out;
  for (const auto& t : terms) out[t.alpha.parts()] = t.coefficient;
  return out;
}

std::map<std::vector<int>, Integer> as_map(const std::vector<Printed>& printed) {
  std::map<std::vector<int>, Integer> out;
  for (const auto& p : printed) out[IntPartition(p.parts).parts()] += p.coeff;
  return out;
}

// "12 3 4" -> the set partition {1,2}{3}{4}, printed canonically.
std::string blocks(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  SetPartition p;
  while (in >> word) {
    Subset b = 0;
    for (char ch : word) b |= Subset{1} << (ch - '1');
    p.blocks.push_back(b);
    p.ground |= b;
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](Subset a, Subset b) { return lowest_element(a) < lowest_element(b); });
  return p.to_string();
}

std::map<std::string, Integer> subset_map(const std::vector<SubsetTerm>& terms) {
  std::map<std::string, Integer> out;
  for (const auto& t : terms) out[t.partition.to_string()] = t.coefficient;
  return out;
}

SymVector c_vec(std::vector<Scalar> v) { return SymVector(SymKind::C, std::move(v)); }
SymVector d_vec(std::vector<Scalar> v) { return SymVector(SymKind::D, std::move(v)); }

}  // namespace

TEST(SubsetExpansion, DOfFourFromCycleSums) {
  // D_1234 = -C_1234 + (C_123 C_4 + ...) + (C_12 C_34 + ...) - (C_12 C_3 C_4 + ...) + C_1 C_2 C_3 C_4.
  const std::vector<std::pair<long, std::string>> printed = {
      {-1, "1234"},   {1, "123 4"},  {1, "124 3"},  {1, "134 2"},   {1, "234 1"},
      {1, "12 34"},   {1, "13 24"},  {1, "14 23"},  {-1, "12 3 4"}, {-1, "13 2 4"},
      {-1, "14 2 3"}, {-1, "23 1 4"}, {-1, "24 1 3"}, {-1, "34 1 2"}, {1, "1 2 3 4"}};
  std::map<std::string, Integer> want;
  for (const auto& [c, b] : printed) want[blocks(b)] = c;
  ASSERT_EQ(want.size(), 15u);
  const auto terms = subset_expansion(0b1111, Direction::CToD);
  EXPECT_EQ(terms.size(), 15u);
  EXPECT_EQ(subset_map(terms), want);
}

TEST(SubsetExpansion, COfFourFromMinors) {
  const std::vector<std::pair<long, std::string>> printed = {
      {-1, "1234"},   {1, "123 4"},   {1, "124 3"},   {1, "134 2"},   {1, "234 1"},
      {1, "12 34"},   {1, "13 24"},   {1, "14 23"},   {-2, "12 3 4"}, {-2, "13 2 4"},
      {-2, "14 2 3"}, {-2, "23 1 4"}, {-2, "24 1 3"}, {-2, "34 1 2"}, {6, "1 2 3 4"}};
  std::map<std::string, Integer> want;
  for (const auto& [c, b] : printed) want[blocks(b)] = c;
  EXPECT_EQ(subset_map(subset_expansion(0b1111, Direction::DToC)), want);
}

TEST(SubsetExpansion, FollowsSetPartitionOrder) {
  const auto terms = subset_expansion(0b10110, Direction::CToD);
  const auto parts = set_partitions(0b10110);
  ASSERT_EQ(terms.size(), parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_EQ(terms[i].partition.blocks, parts[i].blocks);
}

TEST(SymExpansion, DInTermsOfC) {
  const std::vector<std::vector<Printed>> d = {
      {},
      {{1, {1}}},
      {{1, {1, 1}}, {-1, {2}}},
      {{1, {1, 1, 1}}, {-3, {1, 2}}, {1, {3}}},
      {{1, {1, 1, 1, 1}}, {-6, {1, 1, 2}}, {3, {2, 2}}, {4, {1, 3}}, {-1, {4}}},
      {{1, {1, 1, 1, 1, 1}}, {-10, {1, 1, 1, 2}}, {15, {1, 2, 2}}, {10, {1, 1, 3}}, {-10, {2, 3}}, {-5, {1, 4}},
       {1, {5}}},
      {{1, {1, 1, 1, 1, 1, 1}},
       {-15, {1, 1, 1, 1, 2}},
       {45, {1, 1, 2, 2}},
       {20, {1, 1, 1, 3}},
       {-15, {2, 2, 2}},
       {-60, {1, 2, 3}},
       {-15, {1, 1, 4}},
       {10, {3, 3}},
       {15, {2, 4}},
       {6, {1, 5}},
       {-1, {6}}},
  };
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(as_map(sym_expansion(s, Direction::CToD)), as_map(d[static_cast<std::size_t>(s)])) << s;
}

TEST(SymExpansion, CInTermsOfD) {
  const std::vector<std::vector<Printed>> c = {
      {},
      {{1, {1}}},
      {{1, {1, 1}}, {-1, {2}}},
      {{2, {1, 1, 1}}, {-3, {1, 2}}, {1, {3}}},
      {{6, {1, 1, 1, 1}}, {-12, {1, 1, 2}}, {3, {2, 2}}, {4, {1, 3}}, {-1, {4}}},
      {{24, {1, 1, 1, 1, 1}}, {-60, {1, 1, 1, 2}}, {30, {1, 2, 2}}, {20, {1, 1, 3}}, {-10, {2, 3}}, {-5, {1, 4}},
       {1, {5}}},
      {{120, {1, 1, 1, 1, 1, 1}},
       {-360, {1, 1, 1, 1, 2}},
       {270, {1, 1, 2, 2}},
       {120, {1, 1, 1, 3}},
       {-30, {2, 2, 2}},
       {-120, {1, 2, 3}},
       {-30, {1, 1, 4}},
       {10, {3, 3}},
       {15, {2, 4}},
       {6, {1, 5}},
       {-1, {6}}},
  };
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(as_map(sym_expansion(s, Direction::DToC)), as_map(c[static_cast<std::size_t>(s)])) << s;
}

TEST(SymExpansion, DSixInPartitionOrder) {
  const std::vector<long> want = {-1, 6, 15, -15, 10, -60, 20, -15, 45, -15, 1};
  const auto terms = sym_expansion(6, Direction::CToD);
  ASSERT_EQ(terms.size(), want.size());
  const auto parts = integer_partitions(6);
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(terms[i].alpha, parts[i]);
    EXPECT_EQ(terms[i].coefficient, want[i]) << parts[i].to_string();
  }
}

TEST(SymExpansion, CFourAsPrintedInPartitionForm) {
  // c_4 = -d_4 + 4 d_3 d_1 + 3 d_2^2 - 12 d_2 d_1^2 + 6 d_1^4.
  const std::vector<long> want = {-1, 4, 3, -12, 6};
  const auto terms = sym_expansion(4, Direction::DToC);
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(terms[i].coefficient, want[i]);
}

TEST(SymExpansion, MatchesSubsetExpansionCollapsedByShape) {
  for (int s = 1; s <= 7; ++s)
    for (Direction dir : {Direction::CToD, Direction::DToC}) {
      std::map<std::vector<int>, Integer> collapsed;
      for (const auto& t : subset_expansion(full_set(s), dir)) collapsed[t.partition.shape().parts()] += t.coefficient;
      EXPECT_EQ(as_map(sym_expansion(s, dir)), collapsed) << s;
    }
}

TEST(DFromCSubset, SingletonsOnly) {
  SubsetVector c(4, SubsetKind::CS);
  for (int i = 0; i < 4; ++i) c[Subset{1} << i] = q(3, 2);
  const SubsetVector d = d_from_c_subset(c);
  EXPECT_EQ(d.kind(), SubsetKind::PM);
  for (Subset S = 0; S <= full_set(4); ++S) EXPECT_EQ(d[S], q(3, 2).pow(subset_size(S)));
}

TEST(DFromCSubset, NaturalityAtFive) {
  Sampler s(21);
  for (int trial = 0; trial < 5; ++trial) {
    const SquareMatrix a = s.matrix(5);
    EXPECT_EQ(d_from_c_subset(cycle_sums(a)), principal_minors(a));
    EXPECT_EQ(c_from_d_subset(principal_minors(a)), cycle_sums(a));
  }
}

TEST(SubsetTransforms, RoundTrip) {
  Sampler s(22);
  for (int n = 1; n <= 6; ++n) {
    const SubsetVector x = s.subset_vector(SubsetKind::CS, n);
    EXPECT_EQ(c_from_d_subset(d_from_c_subset(x)), x);
    const SubsetVector y = s.subset_vector(SubsetKind::PM, n);
    EXPECT_EQ(d_from_c_subset(c_from_d_subset(y)), y);
  }
}

TEST(SubsetTransforms, RejectWrongKind) {
  EXPECT_THROW(d_from_c_subset(SubsetVector(2, SubsetKind::PM)), ContractViolation);
  EXPECT_THROW(c_from_d_subset(SubsetVector(2, SubsetKind::CS)), ContractViolation);
}

TEST(DFromCSym, Examples) {
  EXPECT_EQ(d_from_c_sym(c_vec({q(1), q(0), q(1), q(0), q(0)})), d_vec({q(1), q(0), q(-1), q(0), q(3)}));
  EXPECT_EQ(d_from_c_sym(c_vec({q(1), q(0), q(-1), q(3, 2), q(-1, 4), q(-69, 8)})),
            d_vec({q(1), q(0), q(1), q(3, 2), q(13, 4), q(51, 8)}));
}

TEST(CFromDSym, Examples) {
  EXPECT_EQ(c_from_d_sym(d_vec({q(1), q(0), q(-1), q(0), q(3)})), c_vec({q(1), q(0), q(1), q(0), q(0)}));
  const SymVector c = c_from_d_sym(d_vec({q(1), q(0), q(1), q(0), q(1), q(0)}));
  EXPECT_EQ(c, c_vec({q(1), q(0), q(-1), q(0), q(2), q(0)}));
}

TEST(SymTransforms, RoundTrip) {
  Sampler s(23);
  for (int n = 1; n <= 10; ++n) {
    const SymVector c = s.sym_vector(SymKind::C, n);
    EXPECT_EQ(c_from_d_sym(d_from_c_sym(c)), c);
    const SymVector d = s.sym_vector(SymKind::D, n);
    EXPECT_EQ(d_from_c_sym(c_from_d_sym(d)), d);
  }
}

TEST(SymTransforms, ToKind) {
  const SymVector c = c_vec({q(1), q(2), q(3)});
  EXPECT_EQ(to_kind(c, SymKind::C), c);
  EXPECT_EQ(to_kind(c, SymKind::D), d_from_c_sym(c));
  EXPECT_THROW(d_from_c_sym(d_vec({q(1)})), ContractViolation);
}

TEST(SymTransforms, CommuteWithSymmetrization) {
  Sampler s(24);
  for (int n = 2; n <= 6; ++n) {
    FamilySpec spec{FamilyName::Toeplitz, n, q(1), Scalar(s.rational()), q(3), q(1)};
    const SquareMatrix a = conjugate(family_matrix(spec), s.group_element(n, false));
    const SubsetVector c = cycle_sums(a);
    const auto cs = symmetrize(c);
    ASSERT_TRUE(std::holds_alternative<SymVector>(cs));
    const auto ds = symmetrize(d_from_c_subset(c));
    ASSERT_TRUE(std::holds_alternative<SymVector>(ds));
    EXPECT_EQ(std::get<SymVector>(ds), d_from_c_sym(std::get<SymVector>(cs)));
  }
}

TEST(ShiftIdentity, DiagonalModification) {
  Sampler s(25);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 4;
    const SquareMatrix a = s.matrix(n);
    const Scalar lambda(s.nonzero_rational());
    const SubsetVector d0 = principal_minors(a), d1 = principal_minors(apply_shift(a, lambda));
    const SubsetVector c0 = cycle_sums(a), c1 = cycle_sums(apply_shift(a, lambda));
    for (Subset S = 1; S <= full_set(n); ++S) {
      const int k = subset_size(S);
      if (k >= 2) EXPECT_EQ(c1[S], c0[S]);
      if (k == 1) EXPECT_EQ(c1[S], c0[S] - lambda);
      // d_S(A - lambda I) = sum over T subset of S of (-lambda)^{|S|-|T|} d_T(A).
      Scalar want(0);
      for (Subset T = S;; T = (T - 1) & S) {
        want += (-lambda).pow(k - subset_size(T)) * d0[T];
        if (T == 0) break;
      }
      EXPECT_EQ(d1[S], want);
    }
  }
}

TEST(ShiftIdentity, SymmetrizedBinomialForm) {
  const SymVector d = d_vec({q(1), q(0), q(1), q(3, 2), q(13, 4), q(51, 8)});
  const Scalar lambda = q(2, 3);
  const SymVector shifted = shift_d(d, -lambda);
  FamilySpec spec{FamilyName::Toeplitz, 5, q(1), q(0), q(2), q(1)};
  const auto r = symmetrize(principal_minors(apply_shift(family_matrix(spec), lambda)));
  ASSERT_TRUE(std::holds_alternative<SymVector>(r));
  EXPECT_EQ(shifted, std::get<SymVector>(r));
  for (int k = 0; k <= 5; ++k) {
    Scalar want(0);
    for (int i = 0; i <= k; ++i) want += Scalar(binomial(k, i)) * (-lambda).pow(i) * d[k - i];
    EXPECT_EQ(shifted[k], want);
  }
}
