#pragma once

#include <vector>

#include "scs/combinatorics.hpp"
#include "scs/matrix.hpp"

namespace scs {

// Changes of coordinates between principal minors and cycle-sums. The
// subset-level maps sum over the set-partition lattice of each S; the
// symmetrized maps collapse those sums by block shape, so they run over
// integer partitions weighted by p_alpha.
//
//   D_S = sum_{S_1..S_k in Pi_S} (-1)^{|S|-k}        C_{S_1} ... C_{S_k}
//   C_S = sum_{S_1..S_k in Pi_S} (-1)^{|S|-k} (k-1)! D_{S_1} ... D_{S_k}

enum class Direction { CToD, DToC };

struct SubsetTerm {
  SetPartition partition;
  Integer coefficient;
};

struct SymTerm {
  IntPartition alpha;  // the monomial v^alpha = prod v_{a_i}
  Integer coefficient;
};

/// The expansion of D_S (CToD) or C_S (DToC) as a list of signed products,
/// one per set partition of S, in set_partitions order.
std::vector<SubsetTerm> subset_expansion(Subset s, Direction dir);

/// The expansion of d_s (CToD) or c_s (DToC), one term per partition of s,
/// in integer_partitions order.
std::vector<SymTerm> sym_expansion(int s, Direction dir);

SubsetVector d_from_c_subset(const SubsetVector& c);
SubsetVector c_from_d_subset(const SubsetVector& d);

SymVector d_from_c_sym(const SymVector& c);
SymVector c_from_d_sym(const SymVector& d);

// Dispatches on v.kind(): returns v itself when it already has `target`.
SymVector to_kind(const SymVector& v, SymKind target);

/// d_k(A + shift I) from d(A): sum_i binom(k,i) shift^i d_{k-i}.
SymVector shift_d(const SymVector& d, const Scalar& shift);

}  // namespace scs
