#include "nilalg/verification.hpp"

#include "nilalg/algebra.hpp"
#include "nilalg/charseq.hpp"
#include "nilalg/cli.hpp"
#include "nilalg/constraints.hpp"
#include "nilalg/document.hpp"
#include "nilalg/error.hpp"
#include "nilalg/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace nilalg {

namespace {

constexpr std::size_t kMaxReported = 5;

struct Tally {
  CriterionResult result;

  Tally(int id, std::string title) {
    result.id = id;
    result.title = std::move(title);
  }

  void check(bool ok, const std::function<std::string()>& why) {
    ++result.cases;
    if (ok) return;
    if (result.failures.size() < kMaxReported) result.failures.push_back(why());
    ++failed;
  }

  CriterionResult finish() {
    result.passed = failed == 0 && result.cases > 0;
    if (failed > static_cast<int>(result.failures.size())) {
      result.failures.push_back("... " + std::to_string(failed - static_cast<int>(result.failures.size())) +
                                " more");
    }
    return result;
  }

  int failed = 0;
};

std::string dims_str(const std::vector<Index>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + ")";
}

const std::vector<Rational>& quasi_alphas() {
  static const std::vector<Rational> alphas{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  return alphas;
}

FamilySpec spec_of(Family family, int n, int variant = 1) {
  FamilySpec spec;
  spec.family = family;
  spec.n = n;
  spec.variant = variant;
  return spec;
}

std::vector<FamilySpec> quasi_instances(int n_max) {
  std::vector<FamilySpec> out;
  for (int n = 6; n <= std::min(10, n_max); ++n) {
    for (int v = 1; v <= 4; ++v) {
      if (v != 2) {
        out.push_back(spec_of(Family::QuasiFiliform, n, v));
        continue;
      }
      for (const Rational& alpha : quasi_alphas()) {
        FamilySpec spec = spec_of(Family::QuasiFiliform, n, 2);
        spec.alpha = alpha;
        out.push_back(spec);
      }
    }
  }
  return out;
}

CriterionResult catalog_associativity(const VerifyOptions& o) {
  Tally tally(1, "catalog associativity");
  for (const FamilySpec& spec : catalog_instances(o.n_max)) {
    const auto defects = associativity_defects(build(spec));
    tally.check(defects.empty(), [&] {
      const Triple& t = defects.front();
      return describe(spec) + ": " + std::to_string(defects.size()) + " defects, first (" + std::to_string(t.i) +
             "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
    });
  }
  return tally.finish();
}

CriterionResult null_filiform_invariants(const VerifyOptions& o) {
  Tally tally(2, "null-filiform invariants");
  for (int n = 1; n <= std::min(8, o.n_max); ++n) {
    const PowerSeries series = power_series(null_filiform(n));
    std::vector<Index> expected;
    for (int i = 1; i <= n + 1; ++i) expected.push_back(n + 1 - i);
    const auto index = nilindex(series);
    tally.check(index == n + 1 && series.dims() == expected, [&] {
      return "mu_0^" + std::to_string(n) + ": nilindex " + (index ? std::to_string(*index) : "none") + ", dims " +
             dims_str(series.dims());
    });
  }
  return tally.finish();
}

CriterionResult characteristic_sequences(const VerifyOptions& o) {
  Tally tally(3, "characteristic sequences");
  auto run = [&](const FamilySpec& spec, const CharacteristicSequence& expected) {
    const Algebra a = build(spec);
    const CharacteristicSequence first = char_seq_algebra(a, o.trials, o.seed_a);
    const CharacteristicSequence second = char_seq_algebra(a, o.trials, o.seed_b);
    tally.check(first == second && first == expected, [&] {
      return describe(spec) + ": got " + first.str() + " / " + second.str() + ", expected " + expected.str();
    });
  };
  for (int n = 1; n <= std::min(10, o.n_max); ++n) run(spec_of(Family::NullFiliform, n), CharacteristicSequence({n}));
  for (int n = 4; n <= std::min(10, o.n_max); ++n) {
    for (int v = 1; v <= 4; ++v) run(spec_of(Family::Filiform, n, v), CharacteristicSequence::p_filiform(n, 1));
  }
  for (const FamilySpec& spec : quasi_instances(o.n_max)) run(spec, CharacteristicSequence::p_filiform(spec.n, 2));
  for (const FamilySpec& spec : main_family_instances(o.n_max)) {
    run(spec, CharacteristicSequence::p_filiform(spec.n, spec.p));
  }
  return tally.finish();
}

CriterionResult natural_grading(const VerifyOptions& o) {
  Tally tally(4, "natural grading");
  for (const FamilySpec& spec : main_family_instances(o.n_max)) {
    const Algebra a = build(spec);
    const PFiliformLayout layout(spec.n, spec.p, spec.s);
    std::vector<Index> expected;
    for (int i = 1; i <= layout.chain_length(); ++i) expected.push_back(layout.s(i) + 1);
    const Gradation g = natural_gradation(a);
    const bool witness = natural_graded_witness(a, layout.degrees());
    tally.check(witness && g.dims == expected, [&] {
      return describe(spec) + ": witness " + (witness ? "yes" : "no") + ", dims " + dims_str(g.dims) +
             ", expected " + dims_str(expected);
    });
  }
  return tally.finish();
}

CriterionResult theorem_regressions(const VerifyOptions& o) {
  Tally tally(5, "theorem regressions");
  for (const FamilySpec& spec : main_family_instances(o.n_max)) {
    const Algebra a = build(spec);
    const BasisSplit split = split_from_labels(a);

    // Positions of the f-vectors.
    const GradationPositions pos = gradation_positions(a, split);
    bool bounded = true;
    for (std::size_t s = 0; s < pos.r.size(); ++s) bounded = bounded && pos.r[s] <= static_cast<int>(s) + 1;
    tally.check(bounded, [&] { return describe(spec) + ": some r_s exceeds s"; });

    // The profile recovered from the algebra, not from the spec.
    const Gradation g = natural_gradation(a);
    std::vector<int> profile;
    for (Index d : g.dims) profile.push_back(static_cast<int>(d) - 1);
    bool ordered = !profile.empty() && profile.front() < spec.p &&
                   std::accumulate(profile.begin(), profile.end(), 0) == spec.p;
    for (std::size_t i = 1; i < profile.size(); ++i) ordered = ordered && profile[i] <= profile[i - 1];
    for (int s : profile) ordered = ordered && s >= 0;
    tally.check(ordered, [&] { return describe(spec) + ": recovered profile violates 0 <= s_m <= ... <= s_1 < p"; });

    // f_i f_j = 0 for i, j <= s_1.
    const int s1 = profile.empty() ? 0 : profile.front();
    bool vanish = true;
    for (int i = 1; i <= s1; ++i) {
      for (int j = 1; j <= s1; ++j) {
        vanish = vanish && a.product_terms(split.f_list[static_cast<std::size_t>(i - 1)],
                                           split.f_list[static_cast<std::size_t>(j - 1)]).empty();
      }
    }
    tally.check(vanish, [&] { return describe(spec) + ": some f_i f_j with i, j <= s_1 is nonzero"; });
  }
  return tally.finish();
}

CriterionResult excluded_jordan_form_regression(const VerifyOptions& o) {
  Tally tally(6, "excluded Jordan form");
  for (int n = 4; n <= o.n_max; ++n) {
    for (int p = 1; n - p >= 3; ++p) {
      const int m = n - p;
      const std::string name = "excluded(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
      const Algebra a = excluded_jordan_form(n, p);
      const auto defects = associativity_defects(a);
      const bool has_chain_defect = std::find(defects.begin(), defects.end(), Triple{1, 1, m - 1}) != defects.end();
      tally.check(has_chain_defect, [&] { return name + ": associator (e1 e1) e_{m-1} - e1 (e1 e_{m-1}) vanishes"; });

      // Put a free coefficient c on e1 e_m = c f1; associativity must force c = 0.
      SymbolicAlgebra with_c(n, {"c"});
      for (const auto& [key, terms] : a.products()) {
        std::vector<std::pair<int, Poly>> poly_terms;
        for (const Term& t : terms) poly_terms.emplace_back(t.index, Poly(t.coeff));
        with_c.set_product(key.first, key.second, std::move(poly_terms));
      }
      with_c.set_product(1, m, {{m + 1, Poly::variable(0)}});
      const ConstraintSystem system = associator_constraints(with_c);
      const bool has_c = std::find(system.equations.begin(), system.equations.end(), Poly::variable(0)) !=
                         system.equations.end();
      const auto solutions = enumerate_solutions(system, {Rational(-1), Rational(0), Rational(1)});
      const bool forced = has_c && std::all_of(solutions.begin(), solutions.end(),
                                               [](const Assignment& s) { return s.front().is_zero(); });
      tally.check(forced, [&] {
        std::string eqs;
        for (const auto& e : system.equation_strings()) eqs += " [" + e + "]";
        return name + ": c = 0 not forced, equations" + eqs;
      });
    }
  }
  return tally.finish();
}

CriterionResult constraint_soundness(const VerifyOptions&) {
  Tally tally(7, "constraint soundness and completeness");
  const std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
  for (const FamilySpec& spec : constraint_instances()) {
    const ConstraintSystem system = associator_constraints(spec);
    const std::size_t u = system.unknowns.size();
    tally.check(u > 0, [&] { return describe(spec) + ": no b-unknowns"; });
    if (u == 0) continue;

    const std::vector<Assignment> solved = enumerate_solutions(system, grid);
    std::vector<Assignment> brute;
    std::vector<std::size_t> odometer(u, 0);
    while (true) {
      Assignment a;
      for (std::size_t i : odometer) a.push_back(grid[i]);
      if (verify_solution(spec, a)) brute.push_back(std::move(a));
      std::size_t pos = u;
      while (pos > 0 && ++odometer[pos - 1] == grid.size()) odometer[--pos] = 0;
      if (pos == 0) break;
    }
    const Assignment zero(u, Rational(0));
    tally.check(solved == brute, [&] {
      return describe(spec) + ": solver found " + std::to_string(solved.size()) + ", brute force " +
             std::to_string(brute.size());
    });
    tally.check(std::find(solved.begin(), solved.end(), zero) != solved.end(),
                [&] { return describe(spec) + ": b = 0 missing from the solution set"; });
  }
  return tally.finish();
}

CriterionResult invariant_discrimination(const VerifyOptions&) {
  Tally tally(8, "invariant discrimination");
  std::set<std::vector<Index>> seen;
  std::string listing;
  for (int v = 1; v <= 4; ++v) {
    const AnnihilatorInvariants inv = annihilator_invariants(filiform_variant(6, v));
    const std::vector<Index> key{inv.commutator, inv.left, inv.right, inv.two_sided};
    listing += " " + dims_str(key);
    tally.check(seen.insert(key).second, [&] { return "mu_{1," + std::to_string(v) + "}^6 repeats" + listing; });
  }
  return tally.finish();
}

CriterionResult round_trip_and_determinism(const VerifyOptions& o) {
  Tally tally(9, "round trip and determinism");
  std::vector<FamilySpec> specs = catalog_instances(o.n_max);
  for (int n = 4; n <= o.n_max; ++n) {
    for (int p = 1; n > p + 2; ++p) {
      FamilySpec spec = spec_of(Family::DegreeP, n);
      spec.p = p;
      specs.push_back(spec);
    }
  }
  for (const FamilySpec& spec : specs) {
    const Algebra a = build(spec);
    const std::string text = emit_family(spec);
    const AlgebraDocument doc = parse_document(text);
    const auto recorded = document_family(doc);
    tally.check(doc.algebra == a && recorded && *recorded == spec && emit(doc.algebra, doc.metadata) == text,
                [&] { return describe(spec) + ": emit/parse round trip differs"; });
  }

  // Sampling through the command front end, twice with the same seed.
  const std::vector<std::vector<std::string>> commands{
      {"charseq", "--family", "quasi", "--n", "7", "--variant", "2", "--alpha", "1/2", "--seed", "11", "--json"},
      {"charseq", "--family", "p-filiform", "--n", "8", "--p", "3", "--s", "2,1", "--seed", "5", "--trials", "40"},
      {"charseq", "--family", "filiform", "--n", "9", "--variant", "4", "--seed", "3", "--json"},
  };
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = run_command(args, out1, err1);
    const int c2 = run_command(args, out2, err2);
    tally.check(c1 == 0 && c1 == c2 && out1.str() == out2.str() && !out1.str().empty(), [&] {
      std::string joined;
      for (const auto& a : args) joined += " " + a;
      return "not reproducible:" + joined;
    });
  }
  return tally.finish();
}

}  // namespace

std::string CriterionResult::line() const {
  std::string out = std::string(passed ? "PASS" : "FAIL") + " " + std::to_string(id) + " " + title + " (" +
                    std::to_string(cases) + " cases)";
  for (const auto& f : failures) out += "\n       " + f;
  return out;
}

std::vector<FamilySpec> main_family_instances(int n_max) {
  std::vector<FamilySpec> out;
  for (int n = 4; n <= std::min(9, n_max); ++n) {
    for (FamilySpec& spec : p_filiform_shapes(n)) out.push_back(std::move(spec));
  }
  return out;
}

std::vector<FamilySpec> catalog_instances(int n_max) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= std::min(10, n_max); ++n) out.push_back(spec_of(Family::NullFiliform, n));
  for (int n = 4; n <= std::min(10, n_max); ++n) {
    for (int v = 1; v <= 4; ++v) out.push_back(spec_of(Family::Filiform, n, v));
  }
  for (FamilySpec& spec : quasi_instances(n_max)) out.push_back(std::move(spec));
  for (FamilySpec& spec : main_family_instances(n_max)) out.push_back(std::move(spec));
  return out;
}

std::vector<FamilySpec> constraint_instances() {
  FamilySpec a;
  a.family = Family::PFiliformGraded;
  a.n = 8;
  a.p = 4;
  a.s = {2, 2, 0, 0};
  FamilySpec b = a;
  b.n = 10;
  b.p = 6;
  b.s = {2, 2, 1, 1};
  return {a, b};
}

CriterionResult verify_criterion(int id, const VerifyOptions& options) {
  switch (id) {
    case 1: return catalog_associativity(options);
    case 2: return null_filiform_invariants(options);
    case 3: return characteristic_sequences(options);
    case 4: return natural_grading(options);
    case 5: return theorem_regressions(options);
    case 6: return excluded_jordan_form_regression(options);
    case 7: return constraint_soundness(options);
    case 8: return invariant_discrimination(options);
    case 9: return round_trip_and_determinism(options);
    default: throw Error(ErrorCode::InvalidArgument, "criteria are numbered 1..9");
  }
}

std::vector<CriterionResult> verify_theorems(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(verify_criterion(id, options));
  return out;
}

}  // namespace nilalg
