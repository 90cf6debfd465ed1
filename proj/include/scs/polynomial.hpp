#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scs/matrix.hpp"

namespace scs {

/// Sparse polynomial with rational coefficients in the symmetrized
/// coordinates v_0, ..., v_n of one system (c or d). The variable v_k has
/// weight k, so v_0 (always 1 on evaluation) has weight 0.
class Polynomial {
 public:
  using Exponents = std::vector<int>;  // length n + 1, indexed by k

  Polynomial(SymKind vars, int n);
  static Polynomial constant(SymKind vars, int n, const Rational& value);
  static Polynomial variable(SymKind vars, int n, int k);

  /// Parses sums of terms like "3*c3^3-4*c2*c3*c4+c2^2*c5". Variables are
  /// "c<k>" or "d<k>" (also "c_k"); all must belong to `vars` and satisfy
  /// 0 <= k <= n. Throws ParseError.
  static Polynomial parse(const std::string& text, SymKind vars, int n);

  SymKind vars() const { return vars_; }
  int n() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  static int weight(const Exponents& e);
  // The common weight of all monomials; nullopt if they differ or p = 0.
  std::optional<int> homogeneous_weight() const;
  bool is_weighted_homogeneous() const { return is_zero() || homogeneous_weight().has_value(); }

  /// Evaluates at v, which must be in this polynomial's coordinate system and
  /// of the same n. Throws ContractViolation / DimensionError otherwise.
  Scalar evaluate(const SymVector& v) const;
  // Sum of the moduli of the evaluated terms: the scale against which an
  // approximate residual is judged.
  double term_scale(const SymVector& v) const;

  std::string to_string() const;  // "c2^2*c5 - 4*c2*c3*c4 + 3*c3^3", "0" if empty

 private:
  void check_compatible(const Polynomial& rhs) const;
  void add_term(const Exponents& e, const Rational& coeff);

  SymKind vars_;
  int n_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace scs
