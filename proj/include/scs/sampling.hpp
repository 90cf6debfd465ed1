#pragma once

#include <cstdint>
#include <random>

#include "scs/families.hpp"
#include "scs/relations.hpp"

namespace scs {

/// Seeded source of small exact test data. Rationals are p/q with
/// |p| <= num_bound and 1 <= q <= den_bound.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int uniform_int(int lo, int hi);  // inclusive
  bool coin() { return uniform_int(0, 1) == 1; }

  Rational rational(int num_bound = 5, int den_bound = 4);
  Rational nonzero_rational(int num_bound = 5, int den_bound = 4);

  SquareMatrix matrix(int n);
  SquareMatrix symmetric_matrix(int n);
  SquareMatrix skew_matrix(int n);
  SymVector sym_vector(SymKind kind, int n);
  SubsetVector subset_vector(SubsetKind kind, int n);

  // Random permutation; diagonal entries are random signs when signs_only,
  // otherwise random nonzero rationals.
  GroupElement group_element(int n, bool signs_only);

 private:
  std::mt19937_64 rng_;
};

/// A matrix of the given class with the SCS property, obtained from a
/// canonical family by random shift, scale and conjugation that stay inside
/// the class, together with its brute-force symmetrized cycle-sums.
struct YesInstance {
  MatrixClass cls;
  FamilySpec family;
  SquareMatrix matrix;
  SymVector c;
};

YesInstance random_yes_instance(Sampler& s, MatrixClass cls, int n);

}  // namespace scs
