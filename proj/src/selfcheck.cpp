#include "scs/selfcheck.hpp"

#include <algorithm>
#include <functional>

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"
#include "scs/sampling.hpp"
#include "scs/solver.hpp"

namespace scs {

namespace {

constexpr int kMaxSampledDim = 8;

int cap(const SelfcheckOptions& o) { return std::clamp(o.n, 1, kMaxSampledDim); }

// Runs `trial` o.trials times. A trial returns an empty string on success and
// a description otherwise; exceptions count as failures.
SuiteResult run_suite(const std::string& name, const SelfcheckOptions& o, std::uint64_t salt,
                      const std::function<std::string(Sampler&, int)>& trial) {
  SuiteResult r{name, o.trials, 0, ""};
  Sampler s(o.seed * 0x9E3779B97F4A7C15ULL + salt);
  for (int t = 0; t < o.trials; ++t) {
    std::string problem;
    try {
      problem = trial(s, t);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) {
      if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(t) + ": " + problem;
    }
  }
  return r;
}

std::string compare_subset(const SubsetVector& got, const SubsetVector& want, const std::string& what) {
  const Subset count = Subset{1} << want.n();
  for (Subset s = 0; s < count; ++s) {
    if (!(got[s] == want[s])) {
      return what + " differs at " + subset_to_string(s) + ": " + got[s].to_string() + " vs " + want[s].to_string();
    }
  }
  return "";
}

std::string compare_sym(const SymVector& got, const SymVector& want, const std::string& what) {
  if (!(got == want)) return what + ": " + got.to_string() + " vs " + want.to_string();
  return "";
}

FamilySpec random_spec(Sampler& s, int n) {
  static const FamilyName names[] = {FamilyName::Ones, FamilyName::SkewOnes, FamilyName::Exceptional4,
                                     FamilyName::Toeplitz, FamilyName::NCycle, FamilyName::Diagonal};
  FamilySpec spec;
  spec.n = n;
  do {
    spec.name = names[s.uniform_int(0, 5)];
  } while ((spec.name == FamilyName::Exceptional4 && n != 4) || (spec.name == FamilyName::NCycle && n < 3));
  spec.lambda = Scalar(s.rational());
  spec.mu = Scalar(s.rational());
  spec.x = Scalar(s.nonzero_rational());
  spec.w = Scalar(s.rational());
  return spec;
}

}  // namespace

SuiteResult check_naturality(const SelfcheckOptions& o) {
  return run_suite("naturality", o, 1, [&](Sampler& s, int) {
    const SquareMatrix a = s.matrix(s.uniform_int(1, std::min(cap(o), 6)));
    return compare_subset(d_from_c_subset(cycle_sums(a)), principal_minors(a), "d_from_c_subset(C) vs D");
  });
}

SuiteResult check_subset_round_trip(const SelfcheckOptions& o) {
  return run_suite("subset-round-trip", o, 2, [&](Sampler& s, int) {
    const int n = s.uniform_int(0, std::min(cap(o), 6));
    const SubsetVector c = s.subset_vector(SubsetKind::CS, n);
    const SubsetVector d = s.subset_vector(SubsetKind::PM, n);
    std::string p = compare_subset(c_from_d_subset(d_from_c_subset(c)), c, "c -> d -> c");
    return p.empty() ? compare_subset(d_from_c_subset(c_from_d_subset(d)), d, "d -> c -> d") : p;
  });
}

SuiteResult check_sym_round_trip(const SelfcheckOptions& o) {
  return run_suite("sym-round-trip", o, 3, [&](Sampler& s, int) {
    const int n = s.uniform_int(0, std::max(cap(o), 10));
    const SymVector c = s.sym_vector(SymKind::C, n);
    const SymVector d = s.sym_vector(SymKind::D, n);
    std::string p = compare_sym(c_from_d_sym(d_from_c_sym(c)), c, "c -> d -> c");
    return p.empty() ? compare_sym(d_from_c_sym(c_from_d_sym(d)), d, "d -> c -> d") : p;
  });
}

SuiteResult check_symmetrize_commutes(const SelfcheckOptions& o) {
  return run_suite("symmetrize-commutes", o, 4, [&](Sampler& s, int) {
    const int n = s.uniform_int(1, cap(o));
    const SquareMatrix a = conjugate(family_matrix(random_spec(s, n)), s.group_element(n, false));
    const SubsetVector cs = cycle_sums(a);
    const SubsetVector pm = principal_minors(a);
    const auto sym_c = symmetrize(cs);
    const auto sym_d = symmetrize(pm);
    if (!std::holds_alternative<SymVector>(sym_c) || !std::holds_alternative<SymVector>(sym_d)) {
      return std::string("family matrix did not symmetrize");
    }
    const auto via_subset = symmetrize(d_from_c_subset(cs));
    if (!std::holds_alternative<SymVector>(via_subset)) return std::string("transformed vector did not symmetrize");
    std::string p = compare_sym(std::get<SymVector>(via_subset), d_from_c_sym(std::get<SymVector>(sym_c)),
                                "symmetrize(d_from_c_subset) vs d_from_c_sym(symmetrize)");
    return p.empty() ? compare_sym(std::get<SymVector>(sym_d), d_from_c_sym(std::get<SymVector>(sym_c)),
                                   "symmetrized minors vs transform")
                     : p;
  });
}

SuiteResult check_family_closed_forms(const SelfcheckOptions& o) {
  return run_suite("family-closed-forms", o, 5, [&](Sampler& s, int) {
    const FamilySpec spec = random_spec(s, s.uniform_int(1, cap(o)));
    const SquareMatrix m = family_matrix(spec);
    const FamilyCoordinates f = family_coordinates(spec);
    const auto c = symmetrize(cycle_sums(m));
    const auto d = symmetrize(principal_minors(m));
    const std::string label = std::string(to_string(spec.name)) + " n=" + std::to_string(spec.n);
    if (!std::holds_alternative<SymVector>(c) || !std::holds_alternative<SymVector>(d)) {
      return label + " is not SCS";
    }
    std::string p = compare_sym(f.c, std::get<SymVector>(c), label + " c");
    if (p.empty() && f.d) p = compare_sym(*f.d, std::get<SymVector>(d), label + " d");
    return p;
  });
}

SuiteResult check_spmap_round_trip(const SelfcheckOptions& o) {
  return run_suite("spmap-round-trip", o, 6, [&](Sampler& s, int t) {
    static const MatrixClass classes[] = {MatrixClass::Symmetric, MatrixClass::Skew, MatrixClass::General};
    const MatrixClass cls = classes[t % 3];
    const YesInstance inst = random_yes_instance(s, cls, s.uniform_int(3, std::max(3, cap(o))));
    const std::string label = std::string(to_string(cls)) + " " + inst.c.to_string();
    const Decision dec = decide(cls, inst.c);
    if (dec.verdict != Verdict::Yes) return label + " decided NO";
    const WitnessResult w = witness(cls, inst.c);
    if (const auto* f = std::get_if<WitnessFailure>(&w)) return label + " witness failed: " + f->reason;
    if (!std::get<Witness>(w).exact) return label + " witness is not exact";
    return std::string();
  });
}

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& o) {
  return {check_naturality(o),          check_subset_round_trip(o),   check_sym_round_trip(o),
          check_symmetrize_commutes(o), check_family_closed_forms(o), check_spmap_round_trip(o)};
}

}  // namespace scs
