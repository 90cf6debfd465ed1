#include "scs/scalar.hpp"

#include <cmath>
#include <sstream>

#include "scs/errors.hpp"

namespace scs {

namespace {

using Complex = std::complex<double>;

Scalar make_exact(Rational re, Rational im) {
  if (im == 0) return Scalar(re);
  return Scalar::gaussian(re, im);
}

}  // namespace

Scalar::Scalar(const Rational& q) : value_(q) { std::get<Rational>(value_).canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::gaussian(const Rational& re, const Rational& im) {
  Scalar s;
  if (im == 0) {
    s.value_ = re;
  } else {
    s.value_ = Gaussian{re, im};
  }
  return s;
}

Scalar Scalar::approx(double re, double im) {
  Scalar s;
  s.value_ = Complex(re, im);
  return s;
}

Scalar Scalar::parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw ParseError("not a rational literal: \"" + text + "\"");
  }
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  return Scalar(Rational(n, d));
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::Rational: return as_rational() == 0;
    case ScalarKind::Gaussian: return false;
    case ScalarKind::Approx: return std::get<Complex>(value_) == Complex(0.0, 0.0);
  }
  return false;
}

bool Scalar::is_one() const {
  return kind() == ScalarKind::Rational && as_rational() == 1;
}

Rational Scalar::real_part() const {
  switch (kind()) {
    case ScalarKind::Rational: return as_rational();
    case ScalarKind::Gaussian: return as_gaussian().re;
    case ScalarKind::Approx: break;
  }
  throw ContractViolation("real_part() of an approximate scalar");
}

Rational Scalar::imag_part() const {
  switch (kind()) {
    case ScalarKind::Rational: return Rational(0);
    case ScalarKind::Gaussian: return as_gaussian().im;
    case ScalarKind::Approx: break;
  }
  throw ContractViolation("imag_part() of an approximate scalar");
}

Complex Scalar::to_complex() const {
  switch (kind()) {
    case ScalarKind::Rational: return {as_rational().get_d(), 0.0};
    case ScalarKind::Gaussian: return {as_gaussian().re.get_d(), as_gaussian().im.get_d()};
    case ScalarKind::Approx: return std::get<Complex>(value_);
  }
  return {};
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (kind() == ScalarKind::Rational && rhs.kind() == ScalarKind::Rational) {
    std::get<Rational>(value_) += rhs.as_rational();
  } else if (is_exact() && rhs.is_exact()) {
    *this = make_exact(real_part() + rhs.real_part(), imag_part() + rhs.imag_part());
  } else {
    value_ = to_complex() + rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (kind() == ScalarKind::Rational && rhs.kind() == ScalarKind::Rational) {
    std::get<Rational>(value_) -= rhs.as_rational();
  } else if (is_exact() && rhs.is_exact()) {
    *this = make_exact(real_part() - rhs.real_part(), imag_part() - rhs.imag_part());
  } else {
    value_ = to_complex() - rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (kind() == ScalarKind::Rational && rhs.kind() == ScalarKind::Rational) {
    std::get<Rational>(value_) *= rhs.as_rational();
  } else if (is_exact() && rhs.is_exact()) {
    const Rational a = real_part(), b = imag_part();
    const Rational c = rhs.real_part(), d = rhs.imag_part();
    *this = make_exact(a * c - b * d, a * d + b * c);
  } else {
    value_ = to_complex() * rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (kind() == ScalarKind::Rational && rhs.kind() == ScalarKind::Rational) {
    std::get<Rational>(value_) /= rhs.as_rational();
  } else if (is_exact() && rhs.is_exact()) {
    const Rational a = real_part(), b = imag_part();
    const Rational c = rhs.real_part(), d = rhs.imag_part();
    const Rational norm = c * c + d * d;
    *this = make_exact((a * c + b * d) / norm, (b * c - a * d) / norm);
  } else {
    value_ = to_complex() / rhs.to_complex();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::Rational: return Scalar(Rational(-as_rational()));
    case ScalarKind::Gaussian: return gaussian(-as_gaussian().re, -as_gaussian().im);
    case ScalarKind::Approx: return approx(-std::get<Complex>(value_));
  }
  return {};
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ScalarKind::Rational: return a.as_rational() == b.as_rational();
    case ScalarKind::Gaussian:
      return a.as_gaussian().re == b.as_gaussian().re && a.as_gaussian().im == b.as_gaussian().im;
    case ScalarKind::Approx: return a.to_complex() == b.to_complex();
  }
  return false;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case ScalarKind::Rational: os << as_rational().get_str(); break;
    case ScalarKind::Gaussian: {
      const auto& g = as_gaussian();
      os << g.re.get_str() << (g.im < 0 ? "-" : "+") << Rational(abs(g.im)).get_str() << "i";
      break;
    }
    case ScalarKind::Approx: {
      const Complex z = to_complex();
      os.precision(17);
      os << "~(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
      break;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

double magnitude(const Scalar& s) { return std::abs(s.to_complex()); }

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  const Complex x = a.to_complex(), y = b.to_complex();
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

bool same_value(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return approx_equal(a, b, tol);
}

std::optional<Rational> exact_rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(sqrt(num), sqrt(den));
}

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (!s.is_exact()) return std::nullopt;
  const Rational a = s.real_part();
  const Rational b = s.imag_part();
  if (b == 0) {
    if (a >= 0) {
      if (auto r = exact_rational_sqrt(a)) return Scalar(*r);
      return std::nullopt;
    }
    if (auto r = exact_rational_sqrt(Rational(-a))) return Scalar::gaussian(0, *r);
    return std::nullopt;
  }
  // (p + qi)^2 = a + bi  =>  p^2 = (a + |z|)/2, q = b / 2p.
  const auto modulus = exact_rational_sqrt(Rational(a * a + b * b));
  if (!modulus) return std::nullopt;
  const auto p = exact_rational_sqrt(Rational((a + *modulus) / 2));
  if (!p || *p == 0) return std::nullopt;
  return Scalar::gaussian(*p, Rational(b / (2 * *p)));
}

Scalar principal_sqrt(const Scalar& s) {
  if (auto r = exact_sqrt(s)) return *r;
  return Scalar::approx(std::sqrt(s.to_complex()));
}

}  // namespace scs
