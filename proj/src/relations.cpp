#include "scs/relations.hpp"

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"

namespace scs {

const char* to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Symmetric: return "symmetric";
    case MatrixClass::Skew: return "skew";
    case MatrixClass::General: return "general";
  }
  return "?";
}

std::optional<MatrixClass> class_from_string(const std::string& s) {
  for (auto c : {MatrixClass::Symmetric, MatrixClass::Skew, MatrixClass::General}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

namespace {

class Ring {
 public:
  Ring(SymKind vars, int n) : vars_(vars), n_(n) {}
  Polynomial v(int k) const { return Polynomial::variable(vars_, n_, k); }
  Polynomial k(const Integer& value) const { return Polynomial::constant(vars_, n_, Rational(value)); }
  Polynomial parse(const std::string& text) const { return Polynomial::parse(text, vars_, n_); }

 private:
  SymKind vars_;
  int n_;
};

RelationSet make_set(MatrixClass cls, int n, std::string branch, SymKind vars, std::vector<Polynomial> polys) {
  return RelationSet{cls, n, std::move(branch), vars, std::move(polys)};
}

BranchUnion symmetric_generators(int n) {
  const Ring r(SymKind::C, n);
  std::vector<Polynomial> polys;
  if (n >= 3) {
    polys.push_back(r.k(4) * r.v(2) * r.v(2) * r.v(2) - r.v(3) * r.v(3));
    for (int s = 4; s <= n; ++s) {
      polys.push_back(r.k(factorial(s - 1)) * r.v(2) * r.v(s - 2) - r.k(factorial(s - 3)) * r.v(s));
    }
  }
  return {MatrixClass::Symmetric, n, {make_set(MatrixClass::Symmetric, n, "binomials", SymKind::C, polys)}};
}

BranchUnion skew_generators(int n) {
  const Ring r(SymKind::C, n);
  std::vector<Polynomial> odd;
  for (int k = 1; k <= n; k += 2) odd.push_back(r.v(k));
  if (n == 4) {
    auto ones = odd;
    ones.push_back(r.parse("-2*c2^2+c4"));
    auto exceptional = odd;
    exceptional.push_back(r.parse("6*c2^2+c4"));
    return {MatrixClass::Skew,
            n,
            {make_set(MatrixClass::Skew, n, "skewones", SymKind::C, ones),
             make_set(MatrixClass::Skew, n, "exceptional4", SymKind::C, exceptional)}};
  }
  std::vector<Polynomial> polys = odd;
  for (int i = 1; 2 * (i + i) <= n; ++i) {
    for (int j = i; 2 * (i + j) <= n; ++j) {
      polys.push_back(r.k(euler_number(2 * (i + j) - 1)) * r.v(2 * i) * r.v(2 * j) -
                      r.k(euler_number(2 * i - 1) * euler_number(2 * j - 1)) * r.v(2 * (i + j)));
    }
  }
  return {MatrixClass::Skew, n, {make_set(MatrixClass::Skew, n, "euler", SymKind::C, polys)}};
}

// Determinant of a 3x3 matrix of polynomials by cofactor expansion.
Polynomial det3(const std::vector<std::vector<Polynomial>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

BranchUnion general_generators(int n) {
  if (n == 3) return {MatrixClass::General, n, {make_set(MatrixClass::General, n, "free", SymKind::C, {})}};
  if (n == 4) {
    const Ring r(SymKind::C, n);
    return {MatrixClass::General,
            n,
            {make_set(MatrixClass::General, n, "toeplitz", SymKind::C, {r.parse("2*c2^3+c3^2-c2*c4")}),
             make_set(MatrixClass::General, n, "exceptional4", SymKind::C, {r.v(3), r.parse("6*c2^2+c4")})}};
  }
  const Ring r(SymKind::D, n);
  const int cols = n - 1;
  std::vector<Polynomial> minors;
  for (int a = 0; a < cols; ++a) {
    for (int b = a + 1; b < cols; ++b) {
      for (int c = b + 1; c < cols; ++c) {
        std::vector<std::vector<Polynomial>> m;
        for (int row = 0; row < 3; ++row) m.push_back({r.v(row + a), r.v(row + b), r.v(row + c)});
        minors.push_back(det3(m));
      }
    }
  }
  return {MatrixClass::General, n, {make_set(MatrixClass::General, n, "hankel", SymKind::D, minors)}};
}

}  // namespace

BranchUnion generators(MatrixClass cls, int n) {
  if (n < 2) throw DimensionError("relations need n >= 2");
  switch (cls) {
    case MatrixClass::Symmetric: return symmetric_generators(n);
    case MatrixClass::Skew:
      if (n == 2) {
        return {cls, n, {make_set(cls, n, "euler", SymKind::C, {Polynomial::variable(SymKind::C, n, 1)})}};
      }
      return skew_generators(n);
    case MatrixClass::General:
      if (n == 2) throw DimensionError("the general class is supported for n >= 3");
      return general_generators(n);
  }
  throw ContractViolation("unknown matrix class");
}

std::vector<Scalar> evaluate(const RelationSet& rs, const SymVector& v) {
  if (v.n() != rs.n) {
    throw DimensionError("relation set has n=" + std::to_string(rs.n) + ", vector has n=" + std::to_string(v.n()));
  }
  const SymVector point = to_kind(v, rs.vars);
  std::vector<Scalar> out;
  out.reserve(rs.polys.size());
  for (const auto& p : rs.polys) out.push_back(p.evaluate(point));
  return out;
}

HyperdetResult hyperdet_checks(const SubsetVector& d) {
  if (d.kind() != SubsetKind::PM) throw ContractViolation("hyperdet_checks expects principal minors");
  if (d.n() != 3) throw DimensionError("hyperdet_checks needs n = 3");
  const SubsetVector c = c_from_d_subset(d);
  HyperdetResult out;
  out.det_in_c = Scalar(-4) * c[0b011] * c[0b101] * c[0b110] + c[0b111] * c[0b111];
  auto sym = symmetrize(c);
  if (const auto* v = std::get_if<SymVector>(&sym)) {
    out.sdet = Scalar(-4) * (*v)[2].pow(3) + (*v)[3] * (*v)[3];
  }
  return out;
}

const std::vector<std::string>& regression_generator_strings_n5() {
  static const std::vector<std::string> gens = {
      "3*c3^3-4*c2*c3*c4+c2^2*c5",
      "6*c2*c3^2*c5-2*c2^2*c4*c5+c4^2*c5-c3*c5^2",
      "6*c2^2*c3*c5+c3*c4*c5-c2*c5^2",
      "2*c2^3*c5+c3^2*c5-c2*c4*c5",
      "6*c2*c3^2*c4-2*c2^2*c4^2+c4^3-c3*c4*c5",
      "6*c2^2*c3*c4+c3*c4^2-c2*c4*c5",
      "2*c2^3*c4+c3^2*c4-c2*c4^2",
      "6*c2^2*c3^2+c3^2*c4-c2*c3*c5",
      "6*c2^3*c3+c2*c3*c4-c2^2*c5",
      "12*c2^5+2*c3^2*c4-3*c2*c4^2+c2*c3*c5",
  };
  return gens;
}

RelationSet regression_generators_n5() {
  std::vector<Polynomial> polys;
  for (const auto& g : regression_generator_strings_n5()) polys.push_back(Polynomial::parse(g, SymKind::C, 5));
  return make_set(MatrixClass::General, 5, "regression-n5", SymKind::C, std::move(polys));
}

}  // namespace scs
