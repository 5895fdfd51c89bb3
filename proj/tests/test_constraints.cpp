#include "generators.hpp"
#include "nilalg/catalog.hpp"
#include "nilalg/constraints.hpp"

#include <doctest.h>

#include <functional>

using namespace nilalg;

namespace {

FamilySpec pfil(int n, int p, std::vector<int> s) {
  FamilySpec spec;
  spec.family = Family::PFiliformGraded;
  spec.n = n;
  spec.p = p;
  s.resize(static_cast<std::size_t>(n - p), 0);
  spec.s = std::move(s);
  return spec;
}

Poly x(int id) { return Poly::variable(id); }

ConstraintSystem system_of(std::vector<std::string> unknowns, std::vector<Poly> equations) {
  return ConstraintSystem{std::move(unknowns), std::move(equations)};
}

Assignment ints(std::initializer_list<int> xs) {
  Assignment a;
  for (int v : xs) a.push_back(Rational(v));
  return a;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::Schema;
}

const std::vector<Rational> kUnitGrid{Rational(-1), Rational(0), Rational(1)};

}  // namespace

TEST_SUITE("constraints") {

TEST_CASE("polynomial arithmetic") {
  const Poly p = x(0) * x(1) + Poly(Rational(2)) * x(0) - Poly(Rational(3));
  CHECK(p.degree() == 2);
  CHECK(p.terms().size() == 3);
  CHECK(p.str({"a", "b"}) == "a*b + 2*a - 3");
  CHECK((p - p).is_zero());
  CHECK(Poly(Rational(0)).is_zero());
  CHECK(Poly().degree() == 0);
  CHECK(x(1) * x(0) == x(0) * x(1));
  CHECK((x(0) + x(1)) * (x(0) - x(1)) == x(0) * x(0) - x(1) * x(1));
  CHECK(p.evaluate(ints({2, 5})) == Rational(11));
  CHECK_THROWS_AS(p.evaluate(ints({1})), Error);
  CHECK((Poly(Rational(-2)) * x(0) * x(0) + x(1)).monic().str({"a", "b"}) == "a*a - 1/2*b");
  CHECK((Poly(Rational(-4)) * x(2)).monic() == x(2));
  CHECK(Poly(Rational(-1, 3)).str({}) == "-1/3");
}

TEST_CASE("grlex order puts degree first") {
  GrlexLess less;
  CHECK(less(Monomial{5}, Monomial{0, 0}));
  CHECK(less(Monomial{}, Monomial{0}));
  CHECK(less(Monomial{0, 1}, Monomial{0, 2}));
  CHECK_FALSE(less(Monomial{1}, Monomial{1}));
}

TEST_CASE("symbolic algebra substitution") {
  SymbolicAlgebra s(3, {"c"});
  s.set_product(1, 1, {{2, x(0)}, {3, Poly(Rational(1))}});
  s.set_product(1, 2, {{3, x(0) * x(0) - x(0)}});
  CHECK(s.unknown_id("c") == 0);
  CHECK_THROWS_AS(s.unknown_id("d"), Error);
  CHECK_THROWS_AS(s.set_product(1, 4, {}), Error);
  CHECK_THROWS_AS(s.set_product(1, 1, {{2, x(1)}}), Error);

  const Algebra at_one = s.instantiate(ints({1}));
  CHECK(at_one.product_terms(1, 1) == std::vector<Term>{{2, Rational(1)}, {3, Rational(1)}});
  CHECK(at_one.product_terms(1, 2).empty());
  const Algebra at_zero = s.instantiate(ints({0}));
  CHECK(at_zero.product_terms(1, 1) == std::vector<Term>{{3, Rational(1)}});
  CHECK_THROWS_AS(s.instantiate({}), Error);

  const Algebra mu = filiform_variant(6, 3);
  CHECK(SymbolicAlgebra::from_algebra(mu).instantiate({}).products() == mu.products());
}

TEST_CASE("symbolic associator matches the numeric one") {
  gen::Engine rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    const Algebra a = gen::strictly_triangular_algebra(rng, 4, 50);
    const SymbolicAlgebra s = SymbolicAlgebra::from_algebra(a);
    const auto numeric = associativity_defects(a);
    std::vector<Triple> symbolic;
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        for (int k = 1; k <= 4; ++k) {
          const auto coords = symbolic_associator(s, i, j, k);
          if (std::any_of(coords.begin(), coords.end(), [](const Poly& p) { return !p.is_zero(); })) {
            symbolic.push_back({i, j, k});
          }
        }
      }
    }
    CHECK(symbolic == numeric);
  }
}

TEST_CASE("associator constraints: no unknowns gives an empty system") {
  const ConstraintSystem empty = associator_constraints(pfil(8, 4, {2, 1, 1}));
  CHECK(empty.unknowns.empty());
  CHECK(empty.equations.empty());
  CHECK(associator_constraints(pfil(6, 3, {2, 1})).unknowns.empty());
  CHECK(enumerate_solutions(empty, kUnitGrid) == std::vector<Assignment>{Assignment{}});
}

TEST_CASE("associator constraints on the n=8, p=4, s=(2,2) family") {
  const FamilySpec spec = pfil(8, 4, {2, 2});
  const ConstraintSystem cs = associator_constraints(spec);
  CHECK(cs.unknowns == std::vector<std::string>{"b_{1,1}^{1,1}", "b_{1,2}^{1,1}", "b_{2,1}^{1,1}", "b_{2,2}^{1,1}"});
  CHECK(cs.equation_strings() == std::vector<std::string>{"b_{1,1}^{1,1} = 0", "b_{1,2}^{1,1} = 0",
                                                          "b_{2,1}^{1,1} = 0", "b_{2,2}^{1,1} = 0"});
  // Frozen from the symbolic oracle: only b = 0 survives on {-1,0,1}^4.
  CHECK(enumerate_solutions(cs, kUnitGrid) == std::vector<Assignment>{ints({0, 0, 0, 0})});
}

TEST_CASE("associator constraints with e- and f-parts") {
  const FamilySpec spec = pfil(10, 6, {2, 2, 1, 1});
  const auto unknowns = b_unknowns(spec);
  REQUIRE(unknowns.size() == 2);
  CHECK(unknowns[0].name == "b_{2,2}^{1,1}");
  CHECK(unknowns[0].component == 0);
  CHECK(unknowns[1].name == "b_{2,2,1}^{1,1}");
  CHECK(unknowns[1].key == BKey{2, 2, 1, 1});
  const ConstraintSystem cs = associator_constraints(spec);
  CHECK(enumerate_solutions(cs, kUnitGrid) == std::vector<Assignment>{ints({0, 0})});
  CHECK(code_of([] { b_unknowns(FamilySpec{Family::Filiform, 5, 0, 1, std::nullopt, {}, {}}); }) ==
        ErrorCode::InvalidFamily);
}

TEST_CASE("zero b satisfies every system; equations have degree at most 2") {
  for (int n = 5; n <= 10; ++n) {
    for (const FamilySpec& spec : p_filiform_shapes(n)) {
      for (BScope scope : {BScope::Theorem, BScope::Ansatz}) {
        const ConstraintSystem cs = associator_constraints(spec, scope);
        const Assignment zero(cs.unknowns.size(), Rational(0));
        for (const Poly& eq : cs.equations) {
          CHECK(eq.degree() <= 2);
          CHECK(eq.evaluate(zero).is_zero());
        }
      }
      CHECK(verify_solution(spec, Assignment(b_unknowns(spec).size(), Rational(0))));
    }
  }
}

TEST_CASE("ansatz: e_{k+t+3} coefficients kill the e-parts") {
  // m = 5, (k,t) = (1,1): e1 (f f) = b e_5, so each e-part must vanish.
  const FamilySpec spec = pfil(9, 4, {2, 2});
  const auto unknowns = b_unknowns(spec, BScope::Ansatz);
  const ConstraintSystem cs = associator_constraints(spec, BScope::Ansatz);
  int e_parts = 0;
  for (std::size_t id = 0; id < unknowns.size(); ++id) {
    const BUnknown& u = unknowns[id];
    if (u.component != 0 || u.key.k + u.key.t + 3 > 5) continue;
    ++e_parts;
    CAPTURE(u.name);
    CHECK(std::find(cs.equations.begin(), cs.equations.end(), x(static_cast<int>(id))) != cs.equations.end());
  }
  CHECK(e_parts == 4);
  CHECK(b_unknowns(spec, BScope::Theorem).empty());
}

TEST_CASE("symbolic family instantiates to the numeric family") {
  const FamilySpec spec = pfil(10, 6, {2, 2, 1, 1});
  const SymbolicAlgebra s = symbolic_family(spec);
  for (const Assignment& a : {ints({0, 0}), ints({1, 0}), ints({-1, 2})}) {
    CHECK(s.instantiate(a).products() == p_filiform_family(with_assignment(spec, a)).products());
  }
  const FamilySpec with = with_assignment(spec, ints({3, -1}));
  REQUIRE(with.b.size() == 1);
  CHECK(with.b.begin()->second == BValue{Rational(3), {Rational(-1)}});
  CHECK_THROWS_AS(with_assignment(spec, ints({1})), Error);
}

TEST_CASE("verify_solution rejects a non-solution") {
  CHECK_FALSE(verify_solution(pfil(8, 4, {2, 2}), ints({0, 1, 0, 0})));
  CHECK_FALSE(verify_solution(pfil(10, 6, {2, 2, 1, 1}), ints({0, 1})));
  CHECK(verify_solution(pfil(10, 6, {2, 2, 1, 1}), ints({0, 0})));
}

TEST_CASE("enumerate_solutions examples") {
  CHECK(enumerate_solutions(system_of({"a", "b"}, {}), {Rational(0), Rational(1)}) ==
        std::vector<Assignment>{ints({0, 0}), ints({0, 1}), ints({1, 0}), ints({1, 1})});
  CHECK(enumerate_solutions(system_of({"a", "b"}, {x(0) * x(1)}), {Rational(0), Rational(1)}) ==
        std::vector<Assignment>{ints({0, 0}), ints({0, 1}), ints({1, 0})});
}

TEST_CASE("linear elimination") {
  const std::vector<Rational> bits{Rational(0), Rational(1)};
  // a + b = 1
  CHECK(enumerate_solutions(system_of({"a", "b"}, {x(0) + x(1) - Poly(Rational(1))}), bits) ==
        std::vector<Assignment>{ints({0, 1}), ints({1, 0})});
  // a = 2b: the pivot value must stay on the grid.
  CHECK(enumerate_solutions(system_of({"a", "b"}, {x(0) - Poly(Rational(2)) * x(1)}), bits) ==
        std::vector<Assignment>{ints({0, 0})});
  // Inconsistent.
  CHECK(enumerate_solutions(system_of({"a"}, {Poly(Rational(1))}), bits).empty());
  // Mixed: a = b and a*c = 1.
  CHECK(enumerate_solutions(system_of({"a", "b", "c"}, {x(0) - x(1), x(0) * x(2) - Poly(Rational(1))}), kUnitGrid) ==
        std::vector<Assignment>{ints({-1, -1, -1}), ints({1, 1, 1})});
  // Grid order, not numeric order, and repeated grid values collapse.
  CHECK(enumerate_solutions(system_of({"a"}, {}), {Rational(1), Rational(-1), Rational(1)}) ==
        std::vector<Assignment>{ints({1}), ints({-1})});
}

TEST_CASE("budget") {
  std::vector<std::string> names;
  std::vector<Poly> zeros;
  for (int i = 0; i < 13; ++i) {
    names.push_back("u" + std::to_string(i));
    zeros.push_back(x(i));
  }
  CHECK(code_of([&] { enumerate_solutions(system_of(names, {}), kUnitGrid); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { enumerate_solutions(system_of({"a", "b"}, {}), kUnitGrid, 8); }) == ErrorCode::BudgetExceeded);
  CHECK(enumerate_solutions(system_of({"a", "b"}, {}), kUnitGrid, 9).size() == 9);
  // Linear equations are eliminated before the budget applies.
  CHECK(enumerate_solutions(system_of(names, zeros), kUnitGrid).size() == 1);
}

TEST_CASE("soundness and completeness against brute force on random systems") {
  gen::Engine rng(5150);
  for (int iter = 0; iter < 40; ++iter) {
    const int u = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int i = 0; i < u; ++i) names.push_back("x" + std::to_string(i));
    std::vector<Poly> eqs;
    const int count = static_cast<int>(rng() % 3);
    for (int e = 0; e < count; ++e) {
      Poly p(Rational(static_cast<int>(rng() % 3) - 1));
      for (int i = 0; i < u; ++i) {
        if (rng() % 2) p += Poly(Rational(static_cast<int>(rng() % 3) - 1)) * x(i);
        if (rng() % 4 == 0) p += x(i) * x(static_cast<int>(rng() % static_cast<std::uint64_t>(u)));
      }
      if (!p.is_zero()) eqs.push_back(p);
    }
    const ConstraintSystem cs = system_of(names, eqs);
    std::vector<Assignment> brute;
    std::vector<std::size_t> odo(static_cast<std::size_t>(u), 0);
    while (true) {
      Assignment a;
      for (std::size_t i : odo) a.push_back(kUnitGrid[i]);
      if (std::all_of(eqs.begin(), eqs.end(), [&](const Poly& p) { return p.evaluate(a).is_zero(); })) brute.push_back(a);
      std::size_t pos = odo.size();
      while (pos > 0 && ++odo[pos - 1] == kUnitGrid.size()) odo[--pos] = 0;
      if (pos == 0) break;
    }
    CAPTURE(iter);
    CHECK(enumerate_solutions(cs, kUnitGrid) == brute);
  }
}

TEST_CASE("excluded Jordan form with a free coefficient") {
  const Algebra a = excluded_jordan_form(5, 2);  // m = 3: no constant defects
  SymbolicAlgebra s(5, {"c"});
  for (const auto& [key, terms] : a.products()) {
    std::vector<std::pair<int, Poly>> poly_terms;
    for (const Term& t : terms) poly_terms.emplace_back(t.index, Poly(t.coeff));
    s.set_product(key.first, key.second, std::move(poly_terms));
  }
  s.set_product(1, 3, {{4, x(0)}});
  const ConstraintSystem cs = associator_constraints(s);
  CHECK(cs.equation_strings() == std::vector<std::string>{"c = 0"});
}

}  // TEST_SUITE
