#include "scs/solver.hpp"

#include <algorithm>
#include <cmath>

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"

namespace scs {

const char* to_string(Verdict v) { return v == Verdict::Yes ? "YES" : "NO"; }

Decision decide(MatrixClass cls, const SymVector& v, double tol) {
  const BranchUnion gens = generators(cls, v.n());
  Decision out{cls, v.n(), v.kind(), to_kind(v, SymKind::C), Verdict::No, std::nullopt, {}, v.is_exact(), tol};
  for (const auto& branch : gens.branches) {
    const SymVector point = to_kind(v, branch.vars);
    std::optional<ViolatedRelation> violation;
    for (std::size_t i = 0; i < branch.polys.size() && !violation; ++i) {
      const Polynomial& p = branch.polys[i];
      const Scalar value = p.evaluate(point);
      const bool vanishes =
          out.exact ? value.is_zero() : magnitude(value) <= tol * std::max(1.0, p.term_scale(point));
      if (!vanishes) violation = ViolatedRelation{branch.branch, i, p, value};
    }
    if (!violation) {
      out.verdict = Verdict::Yes;
      out.satisfied_branch = branch.branch;
      out.violated.clear();
      return out;
    }
    out.violated.push_back(std::move(*violation));
  }
  return out;
}

VerifyReport verify_witness(const SquareMatrix& w, const SymVector& v, double tol) {
  if (w.n() != v.n()) {
    throw DimensionError("witness is " + std::to_string(w.n()) + "x" + std::to_string(w.n()) + ", target has n=" +
                         std::to_string(v.n()));
  }
  const SymVector target = to_kind(v, SymKind::C);
  const bool exact = w.is_exact() && target.is_exact();
  VerifyReport report;
  const SubsetVector cs = cycle_sums(w);
  // Per size k, the subset whose cycle-sum deviates most from c_k.
  std::vector<Scalar> residual(static_cast<std::size_t>(v.n() + 1));
  std::vector<double> size(static_cast<std::size_t>(v.n() + 1), -1.0);
  std::vector<Subset> where(static_cast<std::size_t>(v.n() + 1), 0);
  for (Subset s = 0; s <= full_set(v.n()); ++s) {
    const auto k = static_cast<std::size_t>(subset_size(s));
    Scalar r = cs[s] - target[static_cast<int>(k)];
    const double m = magnitude(r);
    if (m > size[k] || (exact && size[k] == 0.0 && !r.is_zero())) {
      size[k] = m;
      where[k] = s;
      residual[k] = std::move(r);
    }
  }
  double worst = -1.0;
  for (int k = 0; k <= v.n(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double normalized = size[i] / std::max(1.0, magnitude(target[k]));
    const bool ok = exact ? residual[i].is_zero() : normalized <= tol;
    if (!ok && normalized > worst) {
      worst = normalized;
      report.worst_k = k;
    }
    report.max_normalized = std::max(report.max_normalized, normalized);
    report.normalized.push_back(normalized);
    report.residuals.push_back(residual[i]);
  }
  report.pass = !report.worst_k.has_value();
  if (!report.pass) {
    const auto i = static_cast<std::size_t>(*report.worst_k);
    report.message = "cycle-sum C" + subset_to_string(where[i]) + " = " + cs[where[i]].to_string() +
                     " does not match c_" + std::to_string(*report.worst_k) + " = " + target[*report.worst_k].to_string();
  }
  return report;
}
namespace {

SymVector approximate(const SymVector& v) {
  std::vector<Scalar> out;
  for (const auto& s : v.values()) out.push_back(s.is_one() ? s : Scalar::approx(s.to_complex()));
  return SymVector(v.kind(), std::move(out));
}

class Builder {
 public:
  Builder(const SymVector& c, bool exact, double tol) : c_(c), exact_(exact), tol_(tol), n_(c.n()) {}

  bool zero(const Scalar& s) const { return exact_ ? s.is_zero() : magnitude(s) <= tol_; }
  bool zero_c(int k) const { return k > n_ || zero(c_[k]); }

  Construction base(std::string branch, FamilySpec spec) const {
    spec.n = n_;
    return Construction{std::move(branch), std::move(spec), c_[1], GroupElement::identity(n_)};
  }

  Construction symmetric() const {
    if (zero_c(2)) return base("diagonal", FamilySpec{FamilyName::Diagonal});
    const Scalar lambda = n_ == 2 ? principal_sqrt(c_[2]) : c_[3] / (Scalar(2) * c_[2]);
    FamilySpec spec{FamilyName::Ones};
    spec.lambda = lambda;
    spec.mu = -lambda;
    return base("ones", spec);
  }

  Construction skew() const {
    FamilySpec spec{FamilyName::SkewOnes};
    spec.lambda = principal_sqrt(-c_[2]);
    if (n_ == 4 && !zero_c(2) && zero(c_[4] + Scalar(6) * c_[2] * c_[2])) {
      spec.name = FamilyName::Exceptional4;
      return base("exceptional4", spec);
    }
    return base("skewones", spec);
  }

  // Returns nullopt for the tangential-degenerate case t^2 + 4 = 0.
  std::optional<Construction> toeplitz() const {
    const Scalar lambda = principal_sqrt(-c_[2]);
    const Scalar t = c_[3] / lambda.pow(3);
    const Scalar disc = t * t + Scalar(4);
    if (zero(disc)) return std::nullopt;
    FamilySpec spec{FamilyName::Toeplitz};
    spec.lambda = lambda;
    spec.x = (t + principal_sqrt(disc)) / Scalar(2);
    return base("toeplitz", spec);
  }

  Construction ncycle() const {
    FamilySpec spec{FamilyName::NCycle};
    spec.w = c_[n_];
    return base("ncycle", spec);
  }

  Construction nilpotent() const { return base("nilpotent", FamilySpec{FamilyName::Diagonal}); }

 private:
  const SymVector& c_;
  bool exact_;
  double tol_;
  int n_;
};

SquareMatrix build(const Construction& con) {
  SquareMatrix w = conjugate(family_matrix(con.family), con.conjugation);
  for (int i = 0; i < w.n(); ++i) w(i, i) += con.shift;
  return w;
}

}  // namespace

WitnessResult witness(MatrixClass cls, const SymVector& v, WitnessMode mode, double tol) {
  const Decision dec = decide(cls, v, tol);
  if (dec.verdict != Verdict::Yes) {
    throw ContractViolation(std::string("witness requested for a ") + to_string(cls) + " vector that decides NO");
  }
  const SymVector c = mode == WitnessMode::ApproxOK ? approximate(dec.c) : dec.c;
  const Builder b(c, c.is_exact(), tol);

  std::optional<Construction> con;
  switch (cls) {
    case MatrixClass::Symmetric: con = b.symmetric(); break;
    case MatrixClass::Skew: con = b.skew(); break;
    case MatrixClass::General: {
      ScsBranch branch;
      try {
        branch = classify_coordinates(c, c.is_exact() ? 0.0 : tol);
      } catch (const DomainError& e) {
        return WitnessFailure{"unclassified", e.what(), {}};
      }
      switch (branch) {
        case ScsBranch::NilpotentLike: con = b.nilpotent(); break;
        case ScsBranch::NCycleLike: con = b.ncycle(); break;
        case ScsBranch::SkewLike: con = b.skew(); break;
        case ScsBranch::ToeplitzLike:
          con = b.toeplitz();
          if (!con) {
            if (decide(MatrixClass::Symmetric, dec.c, tol).verdict != Verdict::Yes) {
              return WitnessFailure{"tangential-degenerate",
                                    "c3^2 = 4 c2^3 and the symmetric relations fail; no construction applies",
                                    {}};
            }
            con = b.symmetric();
          }
          break;
      }
      break;
    }
  }

  SquareMatrix w = build(*con);
  VerifyReport report = verify_witness(w, dec.c, tol);
  if (!report.pass) return WitnessFailure{con->branch, "verification failed: " + report.message, report.residuals};
  const bool exact = w.is_exact();
  return Witness{std::move(w), std::move(*con), std::move(report), exact};
}

}  // namespace scs
