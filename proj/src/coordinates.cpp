#include "scs/coordinates.hpp"

#include <functional>

#include "scs/errors.hpp"

namespace scs {

namespace {

constexpr int kMaxSubsetTransformDim = 12;

Integer sign_of(int exponent) { return (exponent % 2 == 0) ? Integer(1) : Integer(-1); }

Integer subset_coefficient(int set_size, int blocks, Direction dir) {
  Integer coeff = sign_of(set_size - blocks);
  if (dir == Direction::DToC) coeff *= factorial(blocks - 1);
  return coeff;
}

SubsetVector transform_subset(const SubsetVector& in, SubsetKind expected, Direction dir) {
  if (in.kind() != expected) {
    throw ContractViolation(std::string("subset transform expects a ") + to_string(expected) + " vector");
  }
  const int n = in.n();
  if (n > kMaxSubsetTransformDim) {
    throw DimensionError("subset transforms support n <= " + std::to_string(kMaxSubsetTransformDim));
  }
  SubsetVector out(n, expected == SubsetKind::PM ? SubsetKind::CS : SubsetKind::PM);
  std::vector<Scalar> by_blocks(static_cast<std::size_t>(n) + 1);

  // Enumerate set partitions of S by repeatedly choosing the block that holds
  // the smallest remaining element; by_blocks[k] collects the products over
  // partitions with k blocks.
  std::function<void(Subset, const Scalar&, int)> rec = [&](Subset remaining, const Scalar& prefix, int k) {
    if (remaining == 0) {
      by_blocks[static_cast<std::size_t>(k)] += prefix;
      return;
    }
    const Subset anchor = lowest_element(remaining);
    const Subset rest = remaining & ~anchor;
    // All subsets of `rest`, including the empty one.
    Subset sub = rest;
    while (true) {
      const Subset block = anchor | sub;
      const Scalar& value = in[block];
      if (!value.is_zero()) rec(remaining & ~block, prefix * value, k + 1);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };

  const Subset count = Subset{1} << n;
  for (Subset s = 1; s < count; ++s) {
    const int size = subset_size(s);
    for (auto& v : by_blocks) v = Scalar(0);
    rec(s, Scalar(1), 0);
    Scalar total(0);
    for (int k = 1; k <= size; ++k) {
      const auto& part = by_blocks[static_cast<std::size_t>(k)];
      if (!part.is_zero()) total += Scalar(subset_coefficient(size, k, dir)) * part;
    }
    if (!in.is_exact() && total.is_exact()) total = Scalar::approx(total.to_complex());
    out[s] = std::move(total);
  }
  return out;
}

SymVector transform_sym(const SymVector& in, SymKind expected, Direction dir) {
  if (in.kind() != expected) {
    throw ContractViolation(std::string("symmetrized transform expects a ") + to_string(expected) + " vector");
  }
  const int n = in.n();
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  out[0] = Scalar(1);
  for (int s = 1; s <= n; ++s) {
    Scalar total(0);
    for (const auto& term : sym_expansion(s, dir)) {
      Scalar monomial(term.coefficient);
      for (int part : term.alpha.parts()) {
        monomial *= in[part];
        if (monomial.is_zero()) break;
      }
      total += monomial;
    }
    if (!in.is_exact() && total.is_exact()) total = Scalar::approx(total.to_complex());
    out[static_cast<std::size_t>(s)] = std::move(total);
  }
  return SymVector(expected == SymKind::C ? SymKind::D : SymKind::C, std::move(out));
}

}  // namespace

std::vector<SubsetTerm> subset_expansion(Subset s, Direction dir) {
  std::vector<SubsetTerm> terms;
  const int size = subset_size(s);
  for (auto& p : set_partitions(s)) {
    Integer coeff = subset_coefficient(size, p.size(), dir);
    terms.push_back(SubsetTerm{std::move(p), std::move(coeff)});
  }
  return terms;
}

std::vector<SymTerm> sym_expansion(int s, Direction dir) {
  std::vector<SymTerm> terms;
  for (auto& alpha : integer_partitions(s)) {
    Integer coeff = sign_of(s - alpha.length()) * p_alpha(alpha);
    if (dir == Direction::DToC) coeff *= factorial(alpha.length() - 1);
    terms.push_back(SymTerm{std::move(alpha), std::move(coeff)});
  }
  return terms;
}

SubsetVector d_from_c_subset(const SubsetVector& c) { return transform_subset(c, SubsetKind::CS, Direction::CToD); }

SubsetVector c_from_d_subset(const SubsetVector& d) { return transform_subset(d, SubsetKind::PM, Direction::DToC); }

SymVector d_from_c_sym(const SymVector& c) { return transform_sym(c, SymKind::C, Direction::CToD); }

SymVector c_from_d_sym(const SymVector& d) { return transform_sym(d, SymKind::D, Direction::DToC); }

SymVector to_kind(const SymVector& v, SymKind target) {
  if (v.kind() == target) return v;
  return target == SymKind::D ? d_from_c_sym(v) : c_from_d_sym(v);
}

SymVector shift_d(const SymVector& d, const Scalar& shift) {
  if (d.kind() != SymKind::D) throw ContractViolation("shift_d expects a d vector");
  const int n = d.n();
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Scalar total(0);
    Scalar power(1);
    for (int i = 0; i <= k; ++i) {
      total += Scalar(binomial(k, i)) * power * d[k - i];
      power *= shift;
    }
    out[static_cast<std::size_t>(k)] = std::move(total);
  }
  return SymVector(SymKind::D, std::move(out));
}

}  // namespace scs
