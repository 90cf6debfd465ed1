#include "scs/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "scs/errors.hpp"

namespace scs {

Polynomial::Polynomial(SymKind vars, int n) : vars_(vars), n_(n) {
  if (n < 0) throw DimensionError("polynomial ring needs n >= 0");
}

Polynomial Polynomial::constant(SymKind vars, int n, const Rational& value) {
  Polynomial p(vars, n);
  p.add_term(Exponents(static_cast<std::size_t>(n) + 1, 0), value);
  return p;
}

Polynomial Polynomial::variable(SymKind vars, int n, int k) {
  if (k < 0 || k > n) throw DimensionError("variable index " + std::to_string(k) + " outside 0..n");
  Polynomial p(vars, n);
  Exponents e(static_cast<std::size_t>(n) + 1, 0);
  e[static_cast<std::size_t>(k)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (rhs.vars_ != vars_ || rhs.n_ != n_) throw ContractViolation("polynomials live in different rings");
}

void Polynomial::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, q] : rhs.terms_) add_term(e, q);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, q] : rhs.terms_) add_term(e, -q);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, q] : terms_) q *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.vars_, a.n_);
  for (const auto& [ea, qa] : a.terms_) {
    for (const auto& [eb, qb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, qa * qb);
    }
  }
  return out;
}

int Polynomial::weight(const Exponents& e) {
  int w = 0;
  for (std::size_t k = 0; k < e.size(); ++k) w += static_cast<int>(k) * e[k];
  return w;
}

std::optional<int> Polynomial::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = weight(terms_.begin()->first);
  for (const auto& [e, q] : terms_) {
    if (weight(e) != w) return std::nullopt;
  }
  return w;
}

namespace {

void check_point(const Polynomial& p, const SymVector& v) {
  if (v.kind() != p.vars()) {
    throw ContractViolation(std::string("polynomial in ") + to_string(p.vars()) + " evaluated at a " +
                            to_string(v.kind()) + " vector");
  }
  if (v.n() != p.n()) {
    throw DimensionError("polynomial ring has n=" + std::to_string(p.n()) + ", vector has n=" + std::to_string(v.n()));
  }
}

Scalar monomial_value(const Polynomial::Exponents& e, const Rational& coeff, const SymVector& v) {
  Scalar value(coeff);
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (e[k] != 0) value *= v[static_cast<int>(k)].pow(e[k]);
  }
  return value;
}

}  // namespace

Scalar Polynomial::evaluate(const SymVector& v) const {
  check_point(*this, v);
  Scalar total(0);
  for (const auto& [e, q] : terms_) total += monomial_value(e, q, v);
  if (!v.is_exact() && total.is_exact()) total = Scalar::approx(total.to_complex());
  return total;
}

double Polynomial::term_scale(const SymVector& v) const {
  check_point(*this, v);
  double scale = 0.0;
  for (const auto& [e, q] : terms_) scale += magnitude(monomial_value(e, q, v));
  return scale;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const char var = vars_ == SymKind::C ? 'c' : 'd';
  std::ostringstream os;
  bool first = true;
  // Lexicographically descending exponents: c2^3 before c2*c4 before c3^2.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, q] = *it;
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << (wrote ? "*" : "") << var << k;
      if (e[k] > 1) os << "^" << e[k];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, SymKind vars, int n) : text_(text), vars_(vars), n_(n) {}

  Polynomial parse() {
    Polynomial out(vars_, n_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, coeff] = term();
      Polynomial m = Polynomial::constant(vars_, n_, negative ? Rational(-coeff) : coeff);
      for (std::size_t k = 0; k < e.size(); ++k) {
        for (int r = 0; r < e[k]; ++r) m = m * Polynomial::variable(vars_, n_, static_cast<int>(k));
      }
      out += m;
      skip_space();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + text_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::pair<Polynomial::Exponents, Rational> term() {
    Polynomial::Exponents e(static_cast<std::size_t>(n_) + 1, 0);
    Rational coeff(1);
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        lit += "/" + digits();
      }
      coeff = Scalar::parse_rational(lit).as_rational();
      skip_space();
      if (at_end() || peek() != '*') return {e, coeff};
      ++pos_;
      skip_space();
    }
    while (need_factor) {
      factor(e);
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_space();
      }
    }
    return {e, coeff};
  }

  int small_int() {
    const std::string d = digits();
    if (d.size() > 4) fail("integer too large");
    return std::stoi(d);
  }

  void factor(Polynomial::Exponents& e) {
    const char expected = vars_ == SymKind::C ? 'c' : 'd';
    if (at_end() || peek() != expected) fail(std::string("expected variable ") + expected + "<k>");
    ++pos_;
    if (!at_end() && peek() == '_') ++pos_;
    const int k = small_int();
    if (k > n_) fail("variable index " + std::to_string(k) + " exceeds n=" + std::to_string(n_));
    int power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      power = small_int();
    }
    e[static_cast<std::size_t>(k)] += power;
  }

  const std::string& text_;
  SymKind vars_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, SymKind vars, int n) { return PolyParser(text, vars, n).parse(); }

}  // namespace scs
