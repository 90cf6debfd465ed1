#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scs/matrix.hpp"
#include "scs/polynomial.hpp"

namespace scs {

enum class MatrixClass { Symmetric, Skew, General };

const char* to_string(MatrixClass c);  // "symmetric", "skew", "general"
std::optional<MatrixClass> class_from_string(const std::string& s);

/// One branch of a zero set: the polynomials that must vanish together.
struct RelationSet {
  MatrixClass cls;
  int n;
  std::string branch;  // stable identifier, e.g. "binomials", "hankel"
  SymKind vars;
  std::vector<Polynomial> polys;
};

/// A zero set given as a union of branches: a vector lies in it iff every
/// polynomial of at least one branch vanishes.
struct BranchUnion {
  MatrixClass cls;
  int n;
  std::vector<RelationSet> branches;
};

/// Defining relations for the symmetrized coordinates of SCS matrices of the
/// given class.
///
///   Symmetric  n = 2: no relations. n >= 3: 4c2^3 - c3^2 and
///              (s-1)! c2 c_{s-2} - (s-3)! c_s for 4 <= s <= n.
///   Skew       n = 2: c1. n = 3: c1, c3. n = 4: c1, c3 with c4 - 2c2^2 or
///              c4 + 6c2^2. n >= 5: every odd c_k (k <= n) and
///              E_{2(i+j)-1} c_{2i} c_{2j} - E_{2i-1} E_{2j-1} c_{2(i+j)} for
///              1 <= i <= j, 2(i+j) <= n.
///   General    n = 3: no relations. n = 4: 2c2^3 + c3^2 - c2c4, or c3 and
///              6c2^2 + c4. n >= 5: the 3x3 minors of the Hankel matrix with
///              rows (d0..d_{n-2}), (d1..d_{n-1}), (d2..d_n), in d-variables.
///
/// Throws DimensionError for n < 2, and for General with n = 2.
BranchUnion generators(MatrixClass cls, int n);

/// Residuals p(v), converting v to the set's coordinate system first.
/// Throws DimensionError when v.n() != rs.n.
std::vector<Scalar> evaluate(const RelationSet& rs, const SymVector& v);

struct HyperdetResult {
  Scalar det_in_c;            // -4 C12 C13 C23 + C123^2 on c_from_d_subset(D)
  std::optional<Scalar> sdet;  // -4 c2^3 + c3^2 when the cycle-sums symmetrize
};

/// Cayley's 2x2x2 hyperdeterminant in cycle-sum form and its symmetrized
/// discriminant, for a principal-minor vector with n = 3.
HyperdetResult hyperdet_checks(const SubsetVector& d);

/// The ten cycle-sum generators (1 cubic, 8 quartics, 1 quintic) of the
/// general n = 5 zero set.
RelationSet regression_generators_n5();

// Same list as printed strings.
const std::vector<std::string>& regression_generator_strings_n5();

}  // namespace scs
