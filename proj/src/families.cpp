#include "scs/families.hpp"

#include <algorithm>

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"

namespace scs {

const char* to_string(FamilyName f) {
  switch (f) {
    case FamilyName::Ones: return "ones";
    case FamilyName::SkewOnes: return "skewones";
    case FamilyName::Exceptional4: return "exceptional4";
    case FamilyName::Toeplitz: return "toeplitz";
    case FamilyName::NCycle: return "ncycle";
    case FamilyName::Diagonal: return "diagonal";
  }
  return "?";
}

std::optional<FamilyName> family_from_string(const std::string& s) {
  for (auto f : {FamilyName::Ones, FamilyName::SkewOnes, FamilyName::Exceptional4, FamilyName::Toeplitz,
                 FamilyName::NCycle, FamilyName::Diagonal}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (n < 1) throw DimensionError("family dimension must be at least 1");
  if (name == FamilyName::Toeplitz && x.is_zero()) throw DomainError("toeplitz family requires x != 0");
  if (name == FamilyName::Exceptional4 && n != 4) throw DomainError("exceptional4 family requires n = 4");
  if (name == FamilyName::NCycle && n < 3) throw DomainError("ncycle family requires n >= 3");
}

GroupElement GroupElement::identity(int n) {
  GroupElement g;
  for (int i = 0; i < n; ++i) {
    g.perm.push_back(i);
    g.diag.emplace_back(1);
  }
  return g;
}

void GroupElement::validate() const {
  if (perm.size() != diag.size()) throw DomainError("group element: permutation and diagonal sizes differ");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= n() || seen[static_cast<std::size_t>(p)]) {
      throw DomainError("group element: permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (const auto& d : diag) {
    if (d.is_zero()) throw DomainError("group element: singular diagonal");
  }
}

GroupElement GroupElement::inverse() const {
  validate();
  GroupElement inv;
  inv.perm.assign(perm.size(), 0);
  inv.diag.assign(diag.size(), Scalar(1));
  for (int i = 0; i < n(); ++i) {
    const auto target = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
    inv.perm[target] = i;
    inv.diag[target] = diag[static_cast<std::size_t>(i)].inverse();
  }
  return inv;
}

namespace {

SquareMatrix base_matrix(const FamilySpec& spec) {
  const int n = spec.n;
  SquareMatrix b(n);
  switch (spec.name) {
    case FamilyName::Ones:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = Scalar(1);
      break;
    case FamilyName::SkewOnes:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = Scalar(i < j ? 1 : (i > j ? -1 : 0));
      break;
    case FamilyName::Exceptional4:
      b = SquareMatrix{{0, 1, 1, 1}, {-1, 0, 1, -1}, {-1, -1, 0, 1}, {-1, 1, -1, 0}};
      break;
    case FamilyName::Toeplitz:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int k = j - i;
          if (k > 0) b(i, j) = spec.x.pow(k - 1);
          if (k < 0) b(i, j) = -spec.x.pow(k + 1);
        }
      }
      break;
    case FamilyName::NCycle:
      for (int i = 0; i + 1 < n; ++i) b(i, i + 1) = Scalar(1);
      b(n - 1, 0) = spec.w;
      break;
    case FamilyName::Diagonal:
      break;
  }
  return b;
}

SymVector sym(SymKind kind, std::vector<Scalar> v) { return SymVector(kind, std::move(v)); }

}  // namespace

SquareMatrix family_matrix(const FamilySpec& spec) {
  spec.validate();
  SquareMatrix m = spec.lambda * base_matrix(spec);
  for (int i = 0; i < spec.n; ++i) m(i, i) += spec.mu;
  return m;
}

FamilyCoordinates family_coordinates(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  const auto size = static_cast<std::size_t>(n) + 1;
  const Scalar& lambda = spec.lambda;
  const Scalar& mu = spec.mu;
  std::vector<Scalar> c(size, Scalar(0));
  c[0] = Scalar(1);
  c[1] = mu;

  switch (spec.name) {
    case FamilyName::Ones: {
      // c_k = (k-1)! lambda^k, d_k = mu^{k-1} (mu + k lambda).
      std::vector<Scalar> d(size);
      d[0] = Scalar(1);
      c[1] = lambda + mu;
      for (int k = 1; k <= n; ++k) {
        d[static_cast<std::size_t>(k)] = mu.pow(k - 1) * (mu + Scalar(k) * lambda);
        if (k >= 2) c[static_cast<std::size_t>(k)] = Scalar(factorial(k - 1)) * lambda.pow(k);
      }
      return {sym(SymKind::D, std::move(d)), sym(SymKind::C, std::move(c)), ""};
    }
    case FamilyName::SkewOnes: {
      // Even s: c_s = (-1)^{s/2} E_{s-1} lambda^s and d_s = lambda^s; odd s vanish.
      std::vector<Scalar> d(size, Scalar(0));
      d[0] = Scalar(1);
      for (int s = 2; s <= n; s += 2) {
        const Scalar sign((s / 2) % 2 == 0 ? 1 : -1);
        c[static_cast<std::size_t>(s)] = sign * Scalar(euler_number(s - 1)) * lambda.pow(s);
        d[static_cast<std::size_t>(s)] = lambda.pow(s);
      }
      return {shift_d(sym(SymKind::D, std::move(d)), mu), sym(SymKind::C, std::move(c)), ""};
    }
    case FamilyName::Toeplitz: {
      // c_s = lambda^s x^{-s} E_{s-1}(-x^2);
      // d_s = lambda^s ((x^2)^{s-1} + (-1)^s) / (x^{s-2} (x^2 + 1)).
      const Scalar& x = spec.x;
      const Scalar x2 = x * x;
      for (int s = 2; s <= n; ++s) {
        c[static_cast<std::size_t>(s)] = lambda.pow(s) * x.pow(-s) * eulerian_poly(s - 1, -x2);
      }
      const Scalar pole = x2 + Scalar(1);
      if (pole.is_zero()) {
        return {std::nullopt, sym(SymKind::C, std::move(c)), "toeplitz minors have a pole at x^2 = -1"};
      }
      std::vector<Scalar> d(size, Scalar(0));
      d[0] = Scalar(1);
      for (int s = 2; s <= n; ++s) {
        const Scalar alternating(s % 2 == 0 ? 1 : -1);
        d[static_cast<std::size_t>(s)] = lambda.pow(s) * (x2.pow(s - 1) + alternating) / (x.pow(s - 2) * pole);
      }
      return {shift_d(sym(SymKind::D, std::move(d)), mu), sym(SymKind::C, std::move(c)), ""};
    }
    case FamilyName::Exceptional4: {
      c[2] = -lambda.pow(2);
      c[4] = Scalar(-6) * lambda.pow(4);
      SymVector cv = sym(SymKind::C, std::move(c));
      return {d_from_c_sym(cv), cv, ""};
    }
    case FamilyName::NCycle: {
      c[static_cast<std::size_t>(n)] = lambda.pow(n) * spec.w;
      SymVector cv = sym(SymKind::C, std::move(c));
      return {d_from_c_sym(cv), cv, ""};
    }
    case FamilyName::Diagonal: {
      std::vector<Scalar> d(size);
      for (int k = 0; k <= n; ++k) d[static_cast<std::size_t>(k)] = mu.pow(k);
      return {sym(SymKind::D, std::move(d)), sym(SymKind::C, std::move(c)), ""};
    }
  }
  throw ContractViolation("unknown family");
}

SquareMatrix apply_shift(const SquareMatrix& a, const Scalar& lambda) {
  SquareMatrix m = a;
  for (int i = 0; i < m.n(); ++i) m(i, i) -= lambda;
  return m;
}

SquareMatrix apply_scale(const SquareMatrix& a, const Scalar& lambda) { return lambda * a; }

SquareMatrix conjugate(const SquareMatrix& a, const GroupElement& g) {
  g.validate();
  if (g.n() != a.n()) throw DimensionError("group element and matrix sizes differ");
  SquareMatrix m(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      m(g.perm[si], g.perm[sj]) = g.diag[si] * a(i, j) / g.diag[sj];
    }
  }
  return m;
}

NormalizedForm normalize(const SquareMatrix& a) {
  const ScsReport report = is_scs(a, a.is_exact() ? 0.0 : 1e-9);
  if (!report.scs) throw DomainError("normalize: matrix is not SCS");
  const SymVector& c = *report.c;
  if (a.n() < 2 || c[2].is_zero()) throw DomainError("normalize: c_2 = 0");

  const Scalar root = principal_sqrt(-c[2]);
  NormalizedForm f{a, c[1], root.inverse(), root.is_exact(), GroupElement::identity(a.n())};
  const SquareMatrix shifted = apply_scale(apply_shift(a, f.shift), f.scale);
  for (int k = 1; k < a.n(); ++k) {
    const Scalar& super = shifted(k - 1, k);
    if (super.is_zero()) {
      throw DomainError("normalize: superdiagonal entry (" + std::to_string(k) + "," + std::to_string(k + 1) +
                        ") vanishes");
    }
    f.conjugation.diag[static_cast<std::size_t>(k)] = f.conjugation.diag[static_cast<std::size_t>(k - 1)] * super;
  }
  f.t = conjugate(shifted, f.conjugation);
  return f;
}

SquareMatrix denormalize(const NormalizedForm& f) {
  SquareMatrix a = apply_scale(conjugate(f.t, f.conjugation.inverse()), f.scale.inverse());
  return apply_shift(a, -f.shift);
}

const char* to_string(ScsBranch b) {
  switch (b) {
    case ScsBranch::NilpotentLike: return "nilpotent";
    case ScsBranch::NCycleLike: return "ncycle";
    case ScsBranch::SkewLike: return "skew";
    case ScsBranch::ToeplitzLike: return "toeplitz";
  }
  return "?";
}

ScsBranch classify_coordinates(const SymVector& cin, double tol) {
  const SymVector c = to_kind(cin, SymKind::C);
  const int n = c.n();
  auto zero = [&](int k) {
    if (k > n) return true;
    return c[k].is_exact() ? c[k].is_zero() : magnitude(c[k]) <= tol;
  };
  if (!zero(2)) return zero(3) ? ScsBranch::SkewLike : ScsBranch::ToeplitzLike;
  int last_nonzero = 0;
  for (int k = 3; k <= n; ++k) {
    if (!zero(k)) {
      if (k < n) {
        throw DomainError("c_2 = 0 but c_" + std::to_string(k) + " != 0 with " + std::to_string(k) + " < n");
      }
      last_nonzero = k;
    }
  }
  return last_nonzero == 0 ? ScsBranch::NilpotentLike : ScsBranch::NCycleLike;
}

ScsBranch classify_scs(const SquareMatrix& a) {
  const ScsReport report = is_scs(a, a.is_exact() ? 0.0 : 1e-9);
  if (!report.scs) throw DomainError("classify_scs: matrix is not SCS");
  return classify_coordinates(*report.c, a.is_exact() ? 0.0 : 1e-9);
}

}  // namespace scs
