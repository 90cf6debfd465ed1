#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scs/combinatorics.hpp"
#include "scs/scalar.hpp"

namespace scs {

inline constexpr int kMaxMinorsDim = 16;
inline constexpr int kMaxCycleSumDim = 12;
inline constexpr double kDefaultSymmetryTol = 1e-12;

/// Dense n x n matrix of Scalars, row-major, indices 0-based.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n);  // zero matrix; throws DimensionError for n < 1
  SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static SquareMatrix identity(int n);
  static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int n() const { return n_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_exact() const;
  // Principal submatrix on the rows/columns in `rows` (bitmask, bit i = index i).
  SquareMatrix principal_submatrix(Subset rows) const;

  SquareMatrix& operator+=(const SquareMatrix& rhs);
  SquareMatrix& operator-=(const SquareMatrix& rhs);
  SquareMatrix& operator*=(const Scalar& s);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const Scalar& s) { return a *= s; }
  friend SquareMatrix operator*(const Scalar& s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Scalar> a_;
};

enum class SubsetKind { PM, CS };
enum class SymKind { D, C };

const char* to_string(SubsetKind k);
const char* to_string(SymKind k);

/// Values indexed by all 2^n subsets of [n]; the entry at the empty set is 1.
class SubsetVector {
 public:
  SubsetVector(int n, SubsetKind kind);  // all entries 0 except the empty set
  SubsetVector(int n, SubsetKind kind, std::vector<Scalar> values);  // checks size and v[0] == 1

  int n() const { return n_; }
  SubsetKind kind() const { return kind_; }
  const Scalar& operator[](Subset s) const { return values_[s]; }
  Scalar& operator[](Subset s) { return values_[s]; }
  const std::vector<Scalar>& values() const { return values_; }
  bool is_exact() const;

  friend bool operator==(const SubsetVector&, const SubsetVector&) = default;

 private:
  int n_;
  SubsetKind kind_;
  std::vector<Scalar> values_;
};

/// Symmetrized coordinates (v_0, ..., v_n) with v_0 = 1.
class SymVector {
 public:
  SymVector(SymKind kind, std::vector<Scalar> values);  // throws unless v_0 == 1

  int n() const { return static_cast<int>(values_.size()) - 1; }
  SymKind kind() const { return kind_; }
  const Scalar& operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<Scalar>& values() const { return values_; }
  bool is_exact() const;
  std::string to_string() const;

  friend bool operator==(const SymVector&, const SymVector&) = default;

 private:
  SymKind kind_;
  std::vector<Scalar> values_;
};

struct SymmetryViolation {
  Subset first;
  Subset second;
  Scalar first_value;
  Scalar second_value;
};

using SymmetrizeResult = std::variant<SymVector, SymmetryViolation>;

/// Exact determinant for exact entries (fraction-free Bareiss elimination
/// with row pivoting), partial-pivot Gaussian elimination otherwise.
Scalar determinant(const SquareMatrix& a);

/// D_S for every S; cost 2^n determinants, so n <= 16.
SubsetVector principal_minors(const SquareMatrix& a);

/// C_S for every S by enumerating each cyclic order of S that starts at
/// min S. C_{i} = a_ii, C_{} = 1. The cost is sum_S (|S|-1)!, so n <= 12.
SubsetVector cycle_sums(const SquareMatrix& a);

/// Common value of each size class. Exact vectors must agree exactly;
/// vectors with an approximate entry use approx_equal with `tol`. On failure
/// returns the first pair (in bitmask order) that disagrees.
SymmetrizeResult symmetrize(const SubsetVector& v, double tol = kDefaultSymmetryTol);

struct ScsReport {
  bool scs = false;
  std::optional<SymVector> d;
  std::optional<SymVector> c;
};

/// True with both symmetrized vectors iff minors and cycle-sums symmetrize.
/// Also checks that the symmetrized transform maps d onto c; a mismatch is
/// reported as ContractViolation.
ScsReport is_scs(const SquareMatrix& a, double tol = kDefaultSymmetryTol);

}  // namespace scs
