#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

namespace scs {

using Rational = mpq_class;
using Integer = mpz_class;

// a + b*i with rational parts.
struct Gaussian {
  Rational re;
  Rational im;
};

enum class ScalarKind { Rational, Gaussian, Approx };

/// Field element used throughout the toolkit.
///
/// Exact values are either rationals or Gaussian rationals; a Gaussian with
/// zero imaginary part is always demoted to a rational, so every exact value
/// has exactly one representation. Any operation with an approximate operand
/// yields an approximate (double precision complex) result.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& z) : Scalar(Rational(z)) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(long num, long den);
  static Scalar gaussian(const Rational& re, const Rational& im);
  static Scalar approx(double re, double im = 0.0);
  static Scalar approx(std::complex<double> z) { return approx(z.real(), z.imag()); }
  // Parses "p", "-p", "p/q". Throws ParseError.
  static Scalar parse_rational(const std::string& text);

  ScalarKind kind() const { return static_cast<ScalarKind>(value_.index()); }
  bool is_exact() const { return kind() != ScalarKind::Approx; }
  bool is_rational() const { return kind() == ScalarKind::Rational; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const Gaussian& as_gaussian() const { return std::get<Gaussian>(value_); }
  // Real and imaginary parts as exact rationals; throws for approx values.
  Rational real_part() const;
  Rational imag_part() const;
  std::complex<double> to_complex() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  // throws DomainError on zero divisor
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Structural equality: exact values compare exactly, approximate values
  // compare bitwise, and an exact value never equals an approximate one.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(long e) const;
  Scalar inverse() const { return Scalar(1) / *this; }

  std::string to_string() const;

 private:
  std::variant<Rational, Gaussian, std::complex<double>> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Modulus as a double.
double magnitude(const Scalar& s);

// |a-b| <= tol * max(1, |a|, |b|): absolute for small values, relative for
// large ones.
bool approx_equal(const Scalar& a, const Scalar& b, double tol);

// Equal exactly when both are exact, otherwise approx_equal.
bool same_value(const Scalar& a, const Scalar& b, double tol);

// Square root inside Q(i) when one exists (principal branch: positive real
// part, or nonnegative imaginary part on the imaginary axis).
std::optional<Scalar> exact_sqrt(const Scalar& s);

// Exact root when available, otherwise the principal complex root in
// double precision.
Scalar principal_sqrt(const Scalar& s);

std::optional<Rational> exact_rational_sqrt(const Rational& q);

}  // namespace scs
