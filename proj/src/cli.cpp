#include "nilalg/cli.hpp"

#include "nilalg/algebra.hpp"
#include "nilalg/catalog.hpp"
#include "nilalg/charseq.hpp"
#include "nilalg/constraints.hpp"
#include "nilalg/document.hpp"
#include "nilalg/error.hpp"
#include "nilalg/grading.hpp"
#include "nilalg/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace nilalg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where the algebra comes from: a document or a catalog family.
struct Source {
  std::string file;
  std::string family;
  int n = 0;
  int p = 0;
  int variant = 1;
  std::string s;
  std::string alpha;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* file = cmd->add_option("--file", src.file, "AlgebraDocument JSON file");
  auto* family = cmd->add_option("--family", src.family, "null | filiform | quasi | degree-p | p-filiform");
  file->excludes(family);
  cmd->add_option("--n", src.n, "dimension");
  cmd->add_option("--p", src.p, "number of f-vectors");
  cmd->add_option("--variant", src.variant, "table variant 1..4");
  cmd->add_option("--s", src.s, "s-profile, comma separated");
  cmd->add_option("--alpha", src.alpha, "parameter num/den (quasi, variant 2)");
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a rational");
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + " must list at least one value");
  return out;
}

FamilySpec family_from_flags(const Source& src) {
  FamilySpec spec;
  spec.family = parse_family(src.family);
  spec.n = src.n;
  spec.p = src.p;
  spec.variant = src.variant;
  if (!src.alpha.empty()) spec.alpha = parse_rational_list(src.alpha, "--alpha").front();
  if (!src.s.empty()) spec.s = parse_int_list(src.s, "--s");
  if (spec.family == Family::PFiliformGraded) {
    const auto m = static_cast<std::size_t>(std::max(spec.n - spec.p, 0));
    if (spec.s.size() < m) spec.s.resize(m, 0);
  }
  validate(spec);
  return spec;
}

struct Loaded {
  Algebra algebra;
  std::optional<FamilySpec> spec;
};

Loaded load(const Source& src, std::ostream& err) {
  if (!src.family.empty()) {
    FamilySpec spec = family_from_flags(src);
    return {build(spec), spec};
  }
  if (src.file.empty()) throw UsageError("one of --file or --family is required");
  std::ifstream in(src.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + src.file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  AlgebraDocument doc = parse_document(buffer.str());
  for (const auto& w : doc.warnings) err << "warning: " << src.file << ": " << w << "\n";
  return {std::move(doc.algebra), document_family(doc)};
}

std::string seq_str(const std::vector<Index>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string seq_str(const std::vector<int>& v) { return seq_str(std::vector<Index>(v.begin(), v.end())); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).fraction_str());
  return out;
}

std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- subcommands ------------------------------------------------------------

int cmd_check(const Source& src, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  const auto defects = associativity_defects(in.algebra);
  const auto index = defects.empty() ? nilindex(in.algebra) : std::nullopt;
  if (json) {
    Json j = Json::object();
    j["associative"] = defects.empty();
    j["defects"] = defects.size();
    if (!defects.empty()) j["first_defect"] = {defects.front().i, defects.front().j, defects.front().k};
    if (index) {
      j["nilindex"] = *index;
    } else if (defects.empty()) {
      j["nilindex"] = nullptr;
    }
    print_json(out, j);
  } else if (!defects.empty()) {
    out << "not associative, " << defects.size() << " defects, first " << triple_str(defects.front()) << "\n";
  } else if (index) {
    out << "associative, nilindex " << *index << "\n";
  } else {
    out << "associative, not nilpotent\n";
  }
  return defects.empty() && index ? kExitOk : kExitCheckFailed;
}

int cmd_series(const Source& src, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  const PowerSeries series = power_series(in.algebra);
  const auto index = nilindex(series);
  if (json) {
    Json j = Json::object();
    j["dims"] = series.dims();
    j["reaches_zero"] = series.reaches_zero;
    j["nilindex"] = nullptr;
    if (index) j["nilindex"] = *index;
    print_json(out, j);
  } else {
    out << "dims " << seq_str(series.dims()) << "\n";
    out << (index ? "nilindex " + std::to_string(*index) : std::string("not nilpotent")) << "\n";
  }
  return kExitOk;
}

int cmd_charseq(const Source& src, int trials, std::uint64_t seed, bool json, std::ostream& out,
                std::ostream& err) {
  if (trials < 0) throw UsageError("--trials must be non-negative");
  const Loaded in = load(src, err);
  const CharSeqEstimate est = estimate_char_seq(in.algebra, trials, seed);
  if (json) {
    Json j = Json::object();
    j["sequence"] = est.sequence.parts();
    j["witness"] = vector_json(est.witness);
    j["samples"] = est.samples;
    j["seed"] = seed;
    j["trials"] = trials;
    print_json(out, j);
  } else {
    out << est.sequence.str() << "\n";
  }
  return kExitOk;
}

int cmd_grading(const Source& src, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  const Gradation g = natural_gradation(in.algebra);
  const std::vector<int> degrees = filtration_degrees(in.algebra);
  const bool certified = natural_graded_witness(in.algebra, degrees);
  if (json) {
    Json j = Json::object();
    j["dims"] = g.dims;
    j["degrees"] = degrees;
    j["certified"] = certified;
    j["graded"] = algebra_to_json(graded_structure(in.algebra, g));
    print_json(out, j);
  } else {
    out << "components " << seq_str(g.dims) << "\n";
    out << "basis degrees " << seq_str(degrees) << "\n";
    out << "presented basis certifies natural grading: " << (certified ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_positions(const Source& src, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  const GradationPositions pos = gradation_positions(in.algebra, split_from_labels(in.algebra));
  if (json) {
    print_json(out, Json{{"r", pos.r}});
  } else {
    out << "r = " << seq_str(pos.r) << "\n";
  }
  return kExitOk;
}

int cmd_catalog(const Source& src, std::ostream& out) {
  if (src.family.empty()) throw UsageError("catalog needs --family");
  out << emit_family(family_from_flags(src));
  return kExitOk;
}

int cmd_invariants(const Source& src, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  const AnnihilatorInvariants inv = annihilator_invariants(in.algebra);
  if (json) {
    print_json(out, Json{{"left", inv.left}, {"right", inv.right}, {"two_sided", inv.two_sided},
                         {"commutator", inv.commutator}});
  } else {
    out << "left " << inv.left << ", right " << inv.right << ", two-sided " << inv.two_sided << ", commutator "
        << inv.commutator << "\n";
  }
  return kExitOk;
}

int cmd_constraints(const Source& src, const std::string& scope_name, const std::string& grid_text,
                    std::uint64_t budget, bool json, std::ostream& out, std::ostream& err) {
  const Loaded in = load(src, err);
  if (!in.spec || in.spec->family != Family::PFiliformGraded) {
    throw UsageError("constraints needs a p-filiform family (flags or document metadata)");
  }
  BScope scope = BScope::Theorem;
  if (scope_name == "ansatz") {
    scope = BScope::Ansatz;
  } else if (scope_name != "theorem") {
    throw UsageError("--scope must be theorem or ansatz");
  }
  const std::vector<Rational> grid = parse_rational_list(grid_text, "--grid");
  const ConstraintSystem system = associator_constraints(*in.spec, scope);
  const std::vector<Assignment> solutions = enumerate_solutions(system, grid, budget);

  auto assignment_strings = [](const Assignment& a) {
    std::vector<std::string> out;
    for (const auto& v : a) out.push_back(v.str());
    return out;
  };
  if (json) {
    Json j = constraints_to_json(system);
    j["family"] = family_to_json(*in.spec);
    j["scope"] = scope_name;
    Json g = Json::array();
    for (const auto& v : grid) g.push_back(v.fraction_str());
    j["grid"] = std::move(g);
    Json sols = Json::array();
    for (const auto& a : solutions) sols.push_back(assignment_strings(a));
    j["solutions"] = std::move(sols);
    print_json(out, j);
    return kExitOk;
  }
  out << "unknowns (" << system.unknowns.size() << ")";
  for (const auto& u : system.unknowns) out << " " << u;
  out << "\nequations (" << system.equations.size() << ")\n";
  for (const auto& e : system.equation_strings()) out << "  " << e << "\n";
  out << "solutions (" << solutions.size() << ")\n";
  for (const auto& a : solutions) {
    out << " ";
    for (const auto& v : assignment_strings(a)) out << " " << v;
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(int n_max, int trials, std::optional<std::uint64_t> seed, bool json, std::ostream& out) {
  VerifyOptions options;
  options.n_max = n_max;
  options.trials = trials;
  if (seed) {
    options.seed_a = *seed;
    options.seed_b = *seed + 1;
  }
  const std::vector<CriterionResult> results = verify_theorems(options);
  bool all = true;
  Json j = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (json) {
      j.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases},
                       {"failures", r.failures}});
    } else {
      out << r.line() << "\n";
    }
  }
  if (json) print_json(out, j);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact structure-constant toolkit for nilpotent associative algebras", "nilalg"};
  app.require_subcommand(1);

  Source src;
  bool json = false;
  int trials = 100;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> verify_seed;
  int n_max = 9;
  std::string scope = "theorem";
  std::string grid = "-1,0,1";
  std::uint64_t budget = kDefaultGridBudget;

  auto with_source = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_source(cmd, src);
    cmd->add_flag("--json", json, "machine-readable report");
    return cmd;
  };
  CLI::App* check = with_source("check", "associativity, nilpotency and nilindex");
  CLI::App* series = with_source("series", "dimensions of the power series A^i");
  CLI::App* charseq = with_source("charseq", "sampled characteristic sequence C(A)");
  charseq->add_option("--seed", seed, "random seed")->required();
  charseq->add_option("--trials", trials, "random samples beyond the basis")->capture_default_str();
  CLI::App* grading = with_source("grading", "natural gradation components");
  CLI::App* positions = with_source("positions", "degrees r_s of the f-vectors");
  CLI::App* catalog = with_source("catalog", "emit a family instance as JSON");
  CLI::App* invariants = with_source("invariants", "annihilator and commutator dimensions");
  CLI::App* constraints = with_source("constraints", "associativity constraints on b-coefficients");
  constraints->add_option("--scope", scope, "theorem | ansatz")->capture_default_str();
  constraints->add_option("--grid", grid, "comma separated grid values")->capture_default_str();
  constraints->add_option("--budget", budget, "maximum grid points enumerated")->capture_default_str();
  CLI::App* verify = app.add_subcommand("verify-theorems", "run every property suite");
  verify->add_option("--n-max", n_max, "largest dimension")->capture_default_str();
  verify->add_option("--trials", trials, "random samples per characteristic sequence")->capture_default_str();
  verify->add_option("--seed", verify_seed, "first of two sampling seeds");
  verify->add_flag("--json", json, "machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
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

  try {
    if (check->parsed()) return cmd_check(src, json, out, err);
    if (series->parsed()) return cmd_series(src, json, out, err);
    if (charseq->parsed()) return cmd_charseq(src, trials, seed, json, out, err);
    if (grading->parsed()) return cmd_grading(src, json, out, err);
    if (positions->parsed()) return cmd_positions(src, json, out, err);
    if (catalog->parsed()) return cmd_catalog(src, out);
    if (invariants->parsed()) return cmd_invariants(src, json, out, err);
    if (constraints->parsed()) return cmd_constraints(src, scope, grid, budget, json, out, err);
    if (verify->parsed()) return cmd_verify(n_max, trials, verify_seed, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    const bool bad_input = e.code() == ErrorCode::Schema || e.code() == ErrorCode::InvalidFamily;
    return bad_input ? kExitUsage : kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace nilalg
