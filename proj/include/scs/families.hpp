#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scs/matrix.hpp"

namespace scs {

enum class FamilyName { Ones, SkewOnes, Exceptional4, Toeplitz, NCycle, Diagonal };

const char* to_string(FamilyName f);
// "ones", "skewones", "exceptional4", "toeplitz", "ncycle", "diagonal"
std::optional<FamilyName> family_from_string(const std::string& s);

/// A canonical SCS matrix lambda * B + mu * I where B is
///   Ones          the all-ones matrix
///   SkewOnes      +1 above the diagonal, -1 below
///   Exceptional4  the 4x4 skew matrix with c_4 = -6
///   Toeplitz      T_n(x), entry (i,j) = sgn(j-i) x^{j-i-sgn(j-i)}
///   NCycle        a_{i,i+1} = 1, a_{n,1} = w, zero elsewhere
///   Diagonal      the zero matrix (so the family is mu * I)
struct FamilySpec {
  FamilyName name = FamilyName::Ones;
  int n = 1;
  Scalar lambda = Scalar(1);
  Scalar mu = Scalar(0);
  Scalar x = Scalar(1);
  Scalar w = Scalar(1);

  void validate() const;  // DimensionError for n < 1, DomainError otherwise
};

/// Element P_sigma D of the scalar permutation group. Acts on matrices by
/// conjugation: (g A g^{-1})_{sigma(i), sigma(j)} = d_i a_ij / d_j.
struct GroupElement {
  std::vector<int> perm;  // sigma, 0-based: perm[i] = sigma(i)
  std::vector<Scalar> diag;

  static GroupElement identity(int n);
  int n() const { return static_cast<int>(perm.size()); }
  void validate() const;  // bijection, nonzero diagonal
  GroupElement inverse() const;
};

SquareMatrix family_matrix(const FamilySpec& spec);

struct FamilyCoordinates {
  std::optional<SymVector> d;  // absent at the Toeplitz pole x^2 = -1
  SymVector c;
  std::string note;            // why d is absent
};

/// Closed forms for the symmetrized coordinates of family_matrix(spec).
FamilyCoordinates family_coordinates(const FamilySpec& spec);

SquareMatrix apply_shift(const SquareMatrix& a, const Scalar& lambda);  // a - lambda I
SquareMatrix apply_scale(const SquareMatrix& a, const Scalar& lambda);  // lambda a
SquareMatrix conjugate(const SquareMatrix& a, const GroupElement& g);   // g a g^{-1}

/// T = g (scale (A - shift I)) g^{-1}, with zero diagonal, unit
/// superdiagonal, subdiagonal -1, c_1(T) = 0 and c_2(T) = -1.
struct NormalizedForm {
  SquareMatrix t;
  Scalar shift;        // c_1(A)
  Scalar scale;        // 1 / sqrt(-c_2(A))
  bool exact_scale;    // false when sqrt(-c_2) left Q(i)
  GroupElement conjugation;
};

/// Throws DomainError when A is not SCS, c_2 = 0, or a superdiagonal entry
/// of the shifted, scaled matrix vanishes.
NormalizedForm normalize(const SquareMatrix& a);

// Rebuilds A from its normalized form.
SquareMatrix denormalize(const NormalizedForm& f);

enum class ScsBranch { NilpotentLike, NCycleLike, SkewLike, ToeplitzLike };
const char* to_string(ScsBranch b);

/// Branch from symmetrized cycle-sums (c_1 is ignored: it only records a
/// diagonal shift). Throws DomainError when c_2 = 0 but some c_k with
/// 3 <= k < n is nonzero, which no SCS matrix has.
ScsBranch classify_coordinates(const SymVector& c, double tol = 0.0);

/// Throws DomainError for a non-SCS input.
ScsBranch classify_scs(const SquareMatrix& a);

}  // namespace scs
