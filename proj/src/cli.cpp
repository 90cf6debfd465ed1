#include "scs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scs/coordinates.hpp"
#include "scs/errors.hpp"
#include "scs/json_io.hpp"

namespace scs {

namespace {

// Inline JSON when the argument starts with '[' or '{', "-" for standard
// input, otherwise a file path.
Json read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  std::string text;
  std::string source;
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    text = arg;
    source = "inline JSON";
  } else if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
    source = "standard input";
  } else {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open input file \"" + arg + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    source = "\"" + arg + "\"";
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SymKind kind_of(const std::string& coords) { return coords == "d" ? SymKind::D : SymKind::C; }

MatrixClass class_of(const std::string& name) { return *class_from_string(name); }

Json symmetrized(const SubsetVector& v, const char* key, int& code) {
  const auto sym = symmetrize(v);
  if (const auto* good = std::get_if<SymVector>(&sym)) return Json{{key, to_json(*good)}};
  code = kExitNo;
  return Json{{key, nullptr}, {"violation", to_json(std::get<SymmetryViolation>(sym), v.n())}};
}

struct Options {
  bool pretty = false;
  std::string input;
  bool subset = false;
  bool symmetrized = false;
  std::string dir;
  std::string level = "sym";
  std::string name;
  int n = 0;
  std::string lambda = "1", mu = "0", x = "1", w = "1";
  std::string emit = "both";
  std::string cls;
  std::string coords = "c";
  std::string mode = "exact";
  double tol = kDefaultWitnessTol;
  std::string evaluate;
  bool regression = false;
  int trials = 20;
  std::uint64_t seed = 1;
};

int cmd_minors_or_cycles(const Options& o, bool minors, Json& result) {
  const SquareMatrix a = matrix_from_json(read_input(o.input));
  const SubsetVector v = minors ? principal_minors(a) : cycle_sums(a);
  int code = kExitOk;
  result = o.symmetrized ? symmetrized(v, minors ? "d" : "c", code) : to_json(v);
  return code;
}

int cmd_transform(const Options& o, Json& result) {
  const Json in = read_input(o.input);
  const bool c2d = o.dir == "c2d";
  if (o.level == "subset") {
    const SubsetVector v = subset_from_json(in, c2d ? SubsetKind::CS : SubsetKind::PM);
    result = to_json(c2d ? d_from_c_subset(v) : c_from_d_subset(v));
  } else {
    const SymVector v = sym_from_json(in, c2d ? SymKind::C : SymKind::D);
    result = Json{{c2d ? "d" : "c", to_json(c2d ? d_from_c_sym(v) : c_from_d_sym(v))}};
  }
  return kExitOk;
}

int cmd_family(const Options& o, Json& result) {
  FamilySpec spec;
  spec.name = *family_from_string(o.name);
  spec.n = o.n;
  spec.lambda = scalar_from_text(o.lambda);
  spec.mu = scalar_from_text(o.mu);
  spec.x = scalar_from_text(o.x);
  spec.w = scalar_from_text(o.w);
  spec.validate();
  result = Json::object();
  if (o.emit == "matrix") {
    result = to_json(family_matrix(spec));
    return kExitOk;
  }
  if (o.emit == "both") {
    result["family"] = to_json(spec);
    result["matrix"] = to_json(family_matrix(spec));
  }
  const FamilyCoordinates f = family_coordinates(spec);
  result["d"] = f.d ? to_json(*f.d) : Json(nullptr);
  result["c"] = to_json(f.c);
  if (!f.note.empty()) result["note"] = f.note;
  return kExitOk;
}

int cmd_decide(const Options& o, Json& result) {
  const SymVector v = sym_from_json(read_input(o.input), kind_of(o.coords));
  const Decision d = decide(class_of(o.cls), v, o.tol);
  result = to_json(d);
  return d.verdict == Verdict::Yes ? kExitOk : kExitNo;
}

int cmd_witness(const Options& o, Json& result) {
  const SymVector v = sym_from_json(read_input(o.input), kind_of(o.coords));
  const MatrixClass cls = class_of(o.cls);
  const Decision d = decide(cls, v, o.tol);
  result = to_json(d);
  if (d.verdict != Verdict::Yes) {
    result["witness"] = nullptr;
    return kExitNo;
  }
  const WitnessMode mode = o.mode == "approx" ? WitnessMode::ApproxOK : WitnessMode::ExactPreferred;
  const WitnessResult w = witness(cls, v, mode, o.tol);
  if (const auto* good = std::get_if<Witness>(&w)) {
    result["witness"] = to_json(*good);
    return kExitOk;
  }
  result["witness"] = nullptr;
  result["failure"] = to_json(std::get<WitnessFailure>(w));
  return kExitNo;
}

int cmd_relations(const Options& o, Json& result) {
  const MatrixClass cls = class_of(o.cls);
  std::vector<RelationSet> sets;
  if (o.regression) {
    if (cls != MatrixClass::General || o.n != 5) throw DomainError("--regression-n5 needs --class general --n 5");
    sets.push_back(regression_generators_n5());
  } else {
    sets = generators(cls, o.n).branches;
  }
  std::optional<SymVector> point;
  if (!o.evaluate.empty()) point = sym_from_json(read_input(o.evaluate), kind_of(o.coords));

  result = Json{{"class", to_string(cls)}, {"n", o.n}};
  Json branches = Json::array();
  bool any = false;
  for (const auto& rs : sets) {
    Json b = to_json(rs);
    if (point) {
      const std::vector<Scalar> residuals = evaluate(rs, *point);
      Json values = Json::array();
      bool all_zero = true;
      for (const auto& r : residuals) {
        values.push_back(to_json(r));
        all_zero = all_zero && r.is_zero();
      }
      b["residuals"] = std::move(values);
      b["satisfied"] = all_zero;
      any = any || all_zero;
    }
    branches.push_back(std::move(b));
  }
  result["branches"] = std::move(branches);
  if (!point) return kExitOk;
  result["satisfied"] = any;
  return any ? kExitOk : kExitNo;
}

int cmd_selfcheck(const Options& o, Json& result) {
  const SelfcheckOptions so{o.n, o.trials, o.seed};
  Json suites = Json::array();
  bool pass = true;
  for (const auto& r : run_selfcheck(so)) {
    suites.push_back(to_json(r));
    pass = pass && r.pass();
  }
  result = Json{{"n", o.n}, {"trials", o.trials}, {"seed", o.seed}, {"suites", std::move(suites)}, {"pass", pass}};
  return pass ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Principal minors, cycle-sums and symmetrized assignment problems in exact arithmetic", "scs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "Indent the JSON output");

  const std::vector<std::string> classes{"symmetric", "skew", "general"};
  const std::vector<std::string> families{"ones", "skewones", "exceptional4", "toeplitz", "ncycle", "diagonal"};
  const auto input_help = "Inline JSON, a file path, or - for standard input";

  auto add_matrix_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, std::string("Matrix {\"n\":N,\"entries\":[[...]]}. ") + input_help)
        ->required();
    auto* s1 = sub->add_flag("--subset", o.subset, "Every subset value (default)");
    auto* s2 = sub->add_flag("--symmetrized", o.symmetrized, "Common value per subset size");
    s1->excludes(s2);
    return sub;
  };
  CLI::App* minors = add_matrix_cmd("minors", "Principal minors D_S of a matrix");
  CLI::App* cycles = add_matrix_cmd("cyclesums", "Cycle-sums C_S of a matrix");

  CLI::App* transform = app.add_subcommand("transform", "Convert between minor and cycle-sum coordinates");
  transform->add_option("--dir", o.dir, "c2d or d2c")->required()->check(CLI::IsMember({"c2d", "d2c"}));
  transform->add_option("--level", o.level, "subset or sym")->check(CLI::IsMember({"subset", "sym"}));
  transform->add_option("input", o.input, input_help)->required();

  CLI::App* family = app.add_subcommand("family", "Canonical SCS matrices and their coordinates");
  family->add_option("--name", o.name, "Family name")->required()->check(CLI::IsMember(families));
  family->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  family->add_option("--lambda", o.lambda, "Scale (rational literal or JSON scalar)");
  family->add_option("--mu", o.mu, "Diagonal shift");
  family->add_option("--x", o.x, "Toeplitz parameter");
  family->add_option("--w", o.w, "n-cycle weight");
  family->add_option("--emit", o.emit, "matrix, coords or both")->check(CLI::IsMember({"matrix", "coords", "both"}));

  auto add_vector_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--class", o.cls, "symmetric, skew or general")->required()->check(CLI::IsMember(classes));
    sub->add_option("--coords", o.coords, "Input coordinates, c or d")->check(CLI::IsMember({"c", "d"}));
    sub->add_option("--tol", o.tol, "Tolerance for approximate input")->check(CLI::PositiveNumber);
    sub->add_option("input", o.input, std::string("Vector (v_0, ..., v_n). ") + input_help)->required();
    return sub;
  };
  CLI::App* decide_cmd = add_vector_cmd("decide", "Decide realizability of a symmetrized vector");
  CLI::App* witness_cmd = add_vector_cmd("witness", "Construct and verify a realizing matrix");
  witness_cmd->add_option("--mode", o.mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));

  CLI::App* relations = app.add_subcommand("relations", "Defining relations of each matrix class");
  relations->add_option("--class", o.cls, "symmetric, skew or general")->required()->check(CLI::IsMember(classes));
  relations->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  relations->add_option("--evaluate", o.evaluate, std::string("Vector to evaluate at. ") + input_help);
  relations->add_option("--coords", o.coords, "Coordinates of --evaluate, c or d")
      ->check(CLI::IsMember({"c", "d"}));
  relations->add_flag("--regression-n5", o.regression, "The ten cycle-sum generators for general n = 5");

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the oracle-equivalence suites");
  selfcheck->add_option("--n", o.n, "Largest sampled dimension")->check(CLI::Range(1, 10));
  selfcheck->add_option("--trials", o.trials, "Trials per suite")->check(CLI::Range(1, 100000));
  selfcheck->add_option("--seed", o.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (selfcheck->parsed() && o.n == 0) o.n = 5;

  Json result;
  int code = kExitOk;
  try {
    if (minors->parsed()) code = cmd_minors_or_cycles(o, true, result);
    if (cycles->parsed()) code = cmd_minors_or_cycles(o, false, result);
    if (transform->parsed()) code = cmd_transform(o, result);
    if (family->parsed()) code = cmd_family(o, result);
    if (decide_cmd->parsed()) code = cmd_decide(o, result);
    if (witness_cmd->parsed()) code = cmd_witness(o, result);
    if (relations->parsed()) code = cmd_relations(o, result);
    if (selfcheck->parsed()) code = cmd_selfcheck(o, result);
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kExitContract;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitContract;
  }
  out << (o.pretty ? result.dump(2) : result.dump()) << "\n";
  return code;
}

}  // namespace scs
