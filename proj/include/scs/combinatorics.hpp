#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scs/scalar.hpp"

namespace scs {

/// Subsets of [n] = {1..n} as bitmasks: bit i stands for element i+1.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline Subset lowest_element(Subset s) { return s & (~s + 1); }
inline Subset full_set(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

// "{1,3,4}"
std::string subset_to_string(Subset s);

/// Integer partition stored as weakly decreasing positive parts.
class IntPartition {
 public:
  IntPartition() = default;
  // Parts may be given in any order; they are sorted decreasingly.
  // Throws DomainError on a nonpositive part.
  explicit IntPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;  // s, the number partitioned
  int length() const { return static_cast<int>(parts_.size()); }  // number of parts
  // (m_1, ..., m_s): m_i = number of parts equal to i.
  std::vector<int> type_counts() const;
  std::string to_string() const;  // exponent notation, e.g. "3^1 2^1 1^1"

  friend bool operator==(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Set partition of a ground set; each block is a nonempty bitmask.
struct SetPartition {
  Subset ground = 0;
  std::vector<Subset> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  IntPartition shape() const;
  std::string to_string() const;  // "{1,2}{3}"
};

/// All partitions of s, each once, in lexicographically descending order of
/// their part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<IntPartition> integer_partitions(int s);

/// All set partitions of a nonempty subset, each once. Order: restricted
/// growth strings over the elements in increasing order, lexicographically
/// ascending; so the one-block partition comes first and the all-singletons
/// partition last. Blocks are listed in order of their smallest element.
std::vector<SetPartition> set_partitions(Subset ground);

Integer bell_number(int s);
Integer factorial(int n);
Integer binomial(int n, int k);

/// Number of set partitions of [s] whose block sizes form alpha:
/// s! / prod_i (i!^{m_i} m_i!).
Integer p_alpha(const IntPartition& alpha);

/// E(k, i): permutations of [k] with exactly i-1 descents. Zero when i is
/// outside 1..k.
Integer eulerian_number(int k, int i);

/// E_m(t) = sum_{i=1}^{m} E(m,i) t^i, with E_0(t) = 1.
///
/// Note the convention: no constant term for m >= 1. This is the index shift
/// of the usual Eulerian polynomial (which sums t^{i-1}), E_m(t) = t A_m(t),
/// and it is the form in which the cycle-sums of the Toeplitz SCS matrix are
/// expressed.
Scalar eulerian_poly(int m, const Scalar& t);

/// Euler zigzag number E_k: alternating permutations of [k]; E_0 = 1.
Integer euler_number(int k);

}  // namespace scs
