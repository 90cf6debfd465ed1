#pragma once

#include <json.hpp>

#include "scs/families.hpp"
#include "scs/relations.hpp"
#include "scs/selfcheck.hpp"
#include "scs/solver.hpp"

namespace scs {

using Json = nlohmann::ordered_json;

// Scalars: "p/q" (or a JSON integer) for rationals, {"re":"p/q","im":"p/q"}
// for Gaussian rationals, {"approx":[re,im]} for floating values.
// Parsers throw ParseError with the offending JSON text.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
// Scalar given on the command line: a rational literal or a JSON scalar.
Scalar scalar_from_text(const std::string& text);

// {"n":N,"entries":[[...],...]}; a bare array of rows is also accepted.
Json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j);

// (v_0, ..., v_n) as an array, v_0 included.
Json to_json(const SymVector& v);
SymVector sym_from_json(const Json& j, SymKind kind);

// "0b" followed by n binary digits, most significant first; bit i stands
// for element i+1.
std::string subset_key(Subset s, int n);
Subset subset_from_key(const std::string& key, int n);

// {"n":N,"kind":"PM"|"CS","values":{"0b..":...}}. On input "kind" is
// ignored, missing entries are 0, and a missing empty set is 1.
Json to_json(const SubsetVector& v);
SubsetVector subset_from_json(const Json& j, SubsetKind kind);

Json to_json(const Polynomial& p);
Json to_json(const RelationSet& rs);
Json to_json(const FamilySpec& spec);
Json to_json(const GroupElement& g);  // perm 1-based
Json to_json(const SymmetryViolation& v, int n);
Json to_json(const Decision& d);
Json to_json(const VerifyReport& r);
Json to_json(const Witness& w);
Json to_json(const WitnessFailure& f);
Json to_json(const SuiteResult& r);

}  // namespace scs
