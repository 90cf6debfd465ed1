#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scs/families.hpp"
#include "scs/relations.hpp"

namespace scs {

inline constexpr double kDefaultWitnessTol = 1e-9;

enum class Verdict { Yes, No };
const char* to_string(Verdict v);  // "YES", "NO"

struct ViolatedRelation {
  std::string branch;
  std::size_t index;  // position within the branch
  Polynomial poly;
  Scalar value;
};

struct Decision {
  MatrixClass cls;
  int n;
  SymKind input_kind;
  SymVector c;  // the input in cycle-sum coordinates
  Verdict verdict;
  std::optional<std::string> satisfied_branch;
  // For NO: the first nonvanishing polynomial of every branch.
  std::vector<ViolatedRelation> violated;
  bool exact;  // false when the input had an approximate entry
  double tol;  // used only when !exact
};

/// Realizability of v (c or d coordinates) by an SCS matrix of class cls.
/// Exact inputs get an exact verdict. An approximate residual counts as zero
/// when |p(v)| <= tol * max(1, sum of |terms|).
///
///   Symmetric n = 2 and General n = 3 are always YES; Skew n = 2 needs
///   c1 = 0. All other cases test the branches of generators(cls, n).
///
/// Throws DimensionError for unsupported n (see generators).
Decision decide(MatrixClass cls, const SymVector& v, double tol = kDefaultWitnessTol);

enum class WitnessMode {
  ExactPreferred,  // exact arithmetic; radicals outside Q(i) fall back to doubles
  ApproxOK,        // build in double precision throughout
};

/// W = g (family_matrix(family)) g^{-1} + shift I.
struct Construction {
  std::string branch;
  FamilySpec family;
  Scalar shift;
  GroupElement conjugation;
};

struct VerifyReport {
  bool pass = false;
  std::vector<Scalar> residuals;   // per k, C_S(W) - c_k for the worst S with |S| = k
  std::vector<double> normalized;  // |residual_k| / max(1, |c_k|)
  double max_normalized = 0.0;
  std::optional<int> worst_k;      // first k with the largest failing residual
  std::string message;
};

struct Witness {
  SquareMatrix matrix;
  Construction construction;
  VerifyReport report;
  bool exact;
};

struct WitnessFailure {
  std::string branch;
  std::string reason;
  std::vector<Scalar> residuals;
};

using WitnessResult = std::variant<Witness, WitnessFailure>;

/// Builds and verifies a matrix of class cls whose symmetrized cycle-sums
/// are v. Throws ContractViolation when decide(cls, v) is NO.
///
///   Symmetric     lambda = c3 / (2 c2), W = lambda ones + (c1 - lambda) I
///                 (n = 2: lambda = sqrt(c2)); c2 = 0 gives W = c1 I.
///   Skew          W = sqrt(-c2) skewones, or the exceptional 4x4 on its branch.
///   General       by branch of the c-vector after dropping c1:
///                 nilpotent -> c1 I; ncycle -> NCycle(c_n) + c1 I;
///                 skew      -> as for Skew, plus c1 I;
///                 toeplitz  -> lambda T_n(x) + c1 I with lambda = sqrt(-c2),
///                              t = c3 / lambda^3, x = (t + sqrt(t^2 + 4)) / 2.
///                 When t^2 + 4 = 0 the symmetric construction is used if the
///                 symmetric relations hold; otherwise a WitnessFailure.
WitnessResult witness(MatrixClass cls, const SymVector& v, WitnessMode mode = WitnessMode::ExactPreferred,
                      double tol = kDefaultWitnessTol);

/// Recomputes every cycle-sum of w by enumeration and compares C_S with
/// c_{|S|}, so a non-SCS w is located by the size of a bad subset. Exact
/// w and v must agree exactly; otherwise every normalized residual must be
/// at most tol. Throws DimensionError beyond the cycle-sum cap.
VerifyReport verify_witness(const SquareMatrix& w, const SymVector& v, double tol = kDefaultWitnessTol);

}  // namespace scs
