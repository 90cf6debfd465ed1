#include "scs/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "scs/errors.hpp"

namespace scs {

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational(int num_bound, int den_bound) {
  Rational q(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
  q.canonicalize();
  return q;
}

Rational Sampler::nonzero_rational(int num_bound, int den_bound) {
  Rational q;
  do {
    q = rational(num_bound, den_bound);
  } while (q == 0);
  return q;
}

SquareMatrix Sampler::matrix(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Scalar(rational());
  return m;
}

SquareMatrix Sampler::symmetric_matrix(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = Scalar(rational());
      m(j, i) = m(i, j);
    }
  }
  return m;
}

SquareMatrix Sampler::skew_matrix(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = Scalar(rational());
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

SymVector Sampler::sym_vector(SymKind kind, int n) {
  std::vector<Scalar> v{Scalar(1)};
  for (int k = 1; k <= n; ++k) v.emplace_back(rational());
  return SymVector(kind, std::move(v));
}

SubsetVector Sampler::subset_vector(SubsetKind kind, int n) {
  SubsetVector v(n, kind);
  const Subset count = Subset{1} << n;
  for (Subset s = 1; s < count; ++s) v[s] = Scalar(rational());
  return v;
}

GroupElement Sampler::group_element(int n, bool signs_only) {
  GroupElement g;
  g.perm.resize(static_cast<std::size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  std::shuffle(g.perm.begin(), g.perm.end(), rng_);
  for (int i = 0; i < n; ++i) {
    g.diag.emplace_back(signs_only ? Rational(coin() ? 1 : -1) : nonzero_rational(3, 3));
  }
  return g;
}

namespace {

FamilySpec pick_family(Sampler& s, MatrixClass cls, int n) {
  FamilySpec spec;
  spec.n = n;
  spec.lambda = Scalar(s.nonzero_rational());
  switch (cls) {
    case MatrixClass::Symmetric:
      spec.name = s.uniform_int(0, 4) == 0 ? FamilyName::Diagonal : FamilyName::Ones;
      spec.mu = Scalar(s.rational());
      break;
    case MatrixClass::Skew:
      spec.name = n == 4 && s.coin() ? FamilyName::Exceptional4 : FamilyName::SkewOnes;
      break;
    case MatrixClass::General: {
      static const Rational grid[] = {Rational(2), Rational(3), Rational(1, 2), Rational(-2)};
      const int pick = s.uniform_int(0, 9);
      if (pick < 5) {
        spec.name = FamilyName::Toeplitz;
        spec.x = Scalar(pick < 4 ? grid[pick] : s.nonzero_rational());
      } else if (pick == 5) {
        spec.name = FamilyName::SkewOnes;
      } else if (pick == 6) {
        spec.name = FamilyName::Ones;
      } else if (pick == 7 && n >= 3) {
        spec.name = FamilyName::NCycle;
        spec.w = Scalar(s.nonzero_rational());
      } else if (pick <= 8) {
        spec.name = FamilyName::Diagonal;
      } else {
        spec.name = n == 4 ? FamilyName::Exceptional4 : FamilyName::Toeplitz;
        spec.x = Scalar(s.nonzero_rational());
      }
      spec.mu = Scalar(s.rational());
      break;
    }
  }
  return spec;
}

}  // namespace

YesInstance random_yes_instance(Sampler& s, MatrixClass cls, int n) {
  const FamilySpec spec = pick_family(s, cls, n);
  const GroupElement g = s.group_element(n, cls != MatrixClass::General);
  SquareMatrix m = apply_scale(conjugate(family_matrix(spec), g), Scalar(s.nonzero_rational(3, 2)));
  if (cls != MatrixClass::Skew) m = apply_shift(m, Scalar(s.rational()));
  auto c = symmetrize(cycle_sums(m));
  if (!std::holds_alternative<SymVector>(c)) throw ContractViolation("random family instance is not SCS");
  return YesInstance{cls, spec, std::move(m), std::get<SymVector>(std::move(c))};
}

}  // namespace scs
