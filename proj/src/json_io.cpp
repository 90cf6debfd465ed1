#include "scs/json_io.hpp"

#include "scs/errors.hpp"

namespace scs {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
  std::string text = j.dump();
  if (text.size() > 80) text = text.substr(0, 77) + "...";
  throw ParseError(what + ": " + text);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>()).as_rational();
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  bad("expected a rational as \"p/q\" or an integer", j);
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

Json to_json(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::Rational: return rational_text(s.as_rational());
    case ScalarKind::Gaussian:
      return Json{{"re", rational_text(s.as_gaussian().re)}, {"im", rational_text(s.as_gaussian().im)}};
    case ScalarKind::Approx: {
      const auto z = s.to_complex();
      return Json{{"approx", Json::array({z.real(), z.imag()})}};
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Scalar(rational_from_json(j));
  if (j.is_object()) {
    if (j.contains("approx")) {
      const Json& a = j.at("approx");
      if (j.size() != 1 || !a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
        bad("expected {\"approx\":[re,im]}", j);
      }
      return Scalar::approx(a[0].get<double>(), a[1].get<double>());
    }
    if (j.size() == 2 && j.contains("re") && j.contains("im")) {
      return Scalar::gaussian(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
    }
  }
  bad("not a scalar (use \"p/q\", {\"re\":..,\"im\":..} or {\"approx\":[re,im]})", j);
}

Scalar scalar_from_text(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError("malformed scalar \"" + text + "\": " + e.what());
    }
    return scalar_from_json(j);
  }
  return Scalar::parse_rational(text);
}

Json to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"entries", std::move(rows)}};
}

SquareMatrix matrix_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) bad("matrix object needs \"entries\"", j);
    rows = &j.at("entries");
  }
  if (!rows->is_array() || rows->empty()) bad("matrix entries must be a nonempty array of rows", *rows);
  const int n = static_cast<int>(rows->size());
  if (j.is_object() && j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<int>() != n) bad("\"n\" does not match the row count", j);
  }
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : *rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      bad("every row must be an array of length " + std::to_string(n), row);
    }
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(v));
    out.push_back(std::move(r));
  }
  return SquareMatrix::from_rows(out);
}

Json to_json(const SymVector& v) {
  Json a = Json::array();
  for (const auto& s : v.values()) a.push_back(to_json(s));
  return a;
}

SymVector sym_from_json(const Json& j, SymKind kind) {
  if (!j.is_array() || j.empty()) bad("expected an array (v_0, ..., v_n) with v_0 = 1", j);
  std::vector<Scalar> v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  if (!(v[0] == Scalar(1))) bad("the first entry v_0 must be 1", j);
  return SymVector(kind, std::move(v));
}

std::string subset_key(Subset s, int n) {
  std::string key = "0b";
  for (int i = n - 1; i >= 0; --i) key += (s >> i) & 1U ? '1' : '0';
  return key;
}

Subset subset_from_key(const std::string& key, int n) {
  if (key.size() != static_cast<std::size_t>(n) + 2 || key.rfind("0b", 0) != 0) {
    throw ParseError("subset key \"" + key + "\" must be 0b followed by " + std::to_string(n) + " bits");
  }
  Subset s = 0;
  for (std::size_t i = 2; i < key.size(); ++i) {
    if (key[i] != '0' && key[i] != '1') throw ParseError("subset key \"" + key + "\" has a non-binary digit");
    s = (s << 1) | static_cast<Subset>(key[i] - '0');
  }
  return s;
}

Json to_json(const SubsetVector& v) {
  Json values = Json::object();
  const Subset count = Subset{1} << v.n();
  for (Subset s = 0; s < count; ++s) values[subset_key(s, v.n())] = to_json(v[s]);
  return Json{{"n", v.n()}, {"kind", to_string(v.kind())}, {"values", std::move(values)}};
}

SubsetVector subset_from_json(const Json& j, SubsetKind kind) {
  if (!j.is_object() || !j.contains("n") || !j.contains("values")) bad("expected {\"n\":N,\"values\":{...}}", j);
  if (!j.at("n").is_number_integer()) bad("\"n\" must be an integer", j.at("n"));
  const int n = j.at("n").get<int>();
  if (n < 0 || n > kMaxMinorsDim) bad("\"n\" out of range", j.at("n"));
  const Json& values = j.at("values");
  if (!values.is_object()) bad("\"values\" must be an object keyed by 0b... bitmasks", values);
  std::vector<Scalar> v(std::size_t{1} << n, Scalar(0));
  v[0] = Scalar(1);
  for (const auto& [key, value] : values.items()) v[subset_from_key(key, n)] = scalar_from_json(value);
  if (!(v[0] == Scalar(1))) bad("the value at the empty set must be 1", values);
  return SubsetVector(n, kind, std::move(v));
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(Json{{"coeff", rational_text(it->second)}, {"exponents", it->first}});
  Json out{{"text", p.to_string()}};
  const auto w = p.homogeneous_weight();
  out["weight"] = w ? Json(*w) : Json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const RelationSet& rs) {
  Json polys = Json::array();
  for (const auto& p : rs.polys) polys.push_back(to_json(p));
  return Json{{"branch", rs.branch}, {"vars", to_string(rs.vars)}, {"polynomials", std::move(polys)}};
}

Json to_json(const FamilySpec& spec) {
  return Json{{"name", to_string(spec.name)}, {"n", spec.n},          {"lambda", to_json(spec.lambda)},
              {"mu", to_json(spec.mu)},       {"x", to_json(spec.x)}, {"w", to_json(spec.w)}};
}

Json to_json(const GroupElement& g) {
  Json perm = Json::array();
  for (int p : g.perm) perm.push_back(p + 1);
  Json diag = Json::array();
  for (const auto& d : g.diag) diag.push_back(to_json(d));
  return Json{{"perm", std::move(perm)}, {"diag", std::move(diag)}};
}

Json to_json(const SymmetryViolation& v, int n) {
  return Json{{"first", subset_key(v.first, n)},
              {"second", subset_key(v.second, n)},
              {"first_value", to_json(v.first_value)},
              {"second_value", to_json(v.second_value)}};
}

Json to_json(const Decision& d) {
  Json violated = Json::array();
  for (const auto& v : d.violated) {
    violated.push_back(Json{{"branch", v.branch},
                            {"index", v.index},
                            {"polynomial", v.poly.to_string()},
                            {"value", to_json(v.value)}});
  }
  Json out{{"class", to_string(d.cls)},
           {"n", d.n},
           {"coords", to_string(d.input_kind)},
           {"verdict", to_string(d.verdict)},
           {"exact", d.exact}};
  if (!d.exact) out["tol"] = d.tol;
  out["branch"] = d.satisfied_branch ? Json(*d.satisfied_branch) : Json(nullptr);
  out["violated"] = std::move(violated);
  out["c"] = to_json(d.c);
  return out;
}

Json to_json(const VerifyReport& r) {
  Json residuals = Json::array();
  for (const auto& s : r.residuals) residuals.push_back(to_json(s));
  Json out{{"pass", r.pass}, {"residuals", std::move(residuals)}, {"max_normalized_residual", r.max_normalized}};
  if (r.worst_k) out["worst_k"] = *r.worst_k;
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

Json to_json(const Witness& w) {
  return Json{{"branch", w.construction.branch},
              {"exact", w.exact},
              {"family", to_json(w.construction.family)},
              {"shift", to_json(w.construction.shift)},
              {"conjugation", to_json(w.construction.conjugation)},
              {"matrix", to_json(w.matrix)},
              {"verification", to_json(w.report)}};
}

Json to_json(const WitnessFailure& f) {
  Json residuals = Json::array();
  for (const auto& s : f.residuals) residuals.push_back(to_json(s));
  return Json{{"branch", f.branch}, {"reason", f.reason}, {"residuals", std::move(residuals)}};
}

Json to_json(const SuiteResult& r) {
  Json out{{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"pass", r.pass()}};
  if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
  return out;
}

}  // namespace scs
