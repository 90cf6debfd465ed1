#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scs {

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // description of the first failing trial

  bool pass() const { return failures == 0; }
};

struct SelfcheckOptions {
  int n = 5;                // largest dimension sampled
  int trials = 20;          // trials per suite
  std::uint64_t seed = 1;
};

// Oracle-equivalence suites. Each suite draws from its own generator seeded
// from options.seed, so a suite's outcome does not depend on the others.
SuiteResult check_naturality(const SelfcheckOptions& o);          // d_from_c_subset(C(A)) = D(A)
SuiteResult check_subset_round_trip(const SelfcheckOptions& o);   // c_from_d_subset . d_from_c_subset = id
SuiteResult check_sym_round_trip(const SelfcheckOptions& o);      // same for the symmetrized maps
SuiteResult check_symmetrize_commutes(const SelfcheckOptions& o); // symmetrize . transform = transform . symmetrize
SuiteResult check_family_closed_forms(const SelfcheckOptions& o); // closed forms = brute force
SuiteResult check_spmap_round_trip(const SelfcheckOptions& o);    // decide YES + verified witness

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& o);

}  // namespace scs
