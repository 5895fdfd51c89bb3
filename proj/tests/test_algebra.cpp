#include "generators.hpp"
#include "nilalg/algebra.hpp"
#include "nilalg/catalog.hpp"

#include <doctest.h>

using namespace nilalg;

namespace {

Vector e(int n, int i) { return basis_vector(n, i - 1); }

using Dims = std::vector<Index>;

}  // namespace

TEST_SUITE("algebra_core") {

TEST_CASE("make_algebra builds the three-dimensional null-filiform table") {
  const Algebra a = make_algebra(3, {{{1, 1}, {{2, Rational(1)}}}, {{1, 2}, {{3, Rational(1)}}}, {{2, 1}, {{3, Rational(1)}}}});
  CHECK(a.products() == null_filiform(3).products());
  CHECK(a.dim() == 3);
  CHECK_FALSE(a.has_labels());
  CHECK(a.label(2) == "e2");
}

TEST_CASE("make_algebra validation") {
  CHECK(make_algebra(2, {}).products().empty());
  try {
    make_algebra(1, {{{1, 1}, {{1, Rational(0)}}}});
    FAIL("zero coefficient accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ZeroCoefficient);
  }
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::Schema;  // sentinel: nothing thrown
  };
  CHECK(code_of([] { make_algebra(2, {{{1, 3}, {{1, Rational(1)}}}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { make_algebra(2, {{{1, 1}, {{0, Rational(1)}}}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { make_algebra(2, {{{1, 1}, {{2, Rational(1)}, {2, Rational(3)}}}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_algebra(2, {}, {"x"}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_algebra(2, {}, {"x", "x"}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_algebra(-1, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("terms are kept sorted and empty products dropped") {
  const Algebra a = make_algebra(3, {{{1, 1}, {{3, Rational(2)}, {2, Rational(-1)}}}, {{2, 2}, {}}});
  REQUIRE(a.products().size() == 1);
  const auto& t = a.product_terms(1, 1);
  CHECK(t == std::vector<Term>{{2, Rational(-1)}, {3, Rational(2)}});
  CHECK(a.product_terms(2, 2).empty());
}

TEST_CASE("multiply examples") {
  const Algebra mu = null_filiform(3);
  CHECK(same_entries(multiply(mu, e(3, 1), e(3, 2)), e(3, 3)));
  CHECK(is_zero_vector(multiply(mu, Vector::Zero(3), e(3, 1) + e(3, 3))));
  CHECK(same_entries(multiply(mu, e(3, 1) + e(3, 2), e(3, 1)), e(3, 2) + e(3, 3)));
  CHECK_THROWS_AS(multiply(mu, e(2, 1), e(3, 1)), Error);
}

TEST_CASE("multiply is bilinear") {
  gen::Engine rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Algebra a = gen::strictly_triangular_algebra(rng, n, 60);
    const Vector x = gen::vector(rng, n), x2 = gen::vector(rng, n), y = gen::vector(rng, n);
    const Rational c = gen::small_rational(rng);
    CHECK(same_entries(multiply(a, x + x2, y), multiply(a, x, y) + multiply(a, x2, y)));
    CHECK(same_entries(multiply(a, y, x + x2), multiply(a, y, x) + multiply(a, y, x2)));
    CHECK(same_entries(multiply(a, c * x, y), c * multiply(a, x, y)));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(same_entries(multiply(a, e(n, i), e(n, j)), a.basis_product(i, j)));
    }
  }
}

TEST_CASE("associativity_defects examples") {
  for (int n = 3; n <= 8; ++n) CHECK(associativity_defects(null_filiform(n)).empty());
  CHECK(associativity_defects(zero_algebra(4)).empty());
  const Algebra bad = make_algebra(3, {{{1, 1}, {{2, Rational(1)}}}, {{2, 1}, {{3, Rational(1)}}}});
  CHECK(associativity_defects(bad) == std::vector<Triple>{{1, 1, 1}});
  CHECK_FALSE(is_associative(bad));
}

TEST_CASE("power_series examples") {
  CHECK(power_series(null_filiform(4)).dims() == Dims{4, 3, 2, 1, 0});
  CHECK(power_series(zero_algebra(5)).dims() == Dims{5, 0});
  CHECK(power_series(filiform_variant(6, 1)).dims() == Dims{6, 4, 3, 2, 1, 0});
  CHECK(power_series(filiform_variant(5, 2)).dims() == Dims{5, 3, 2, 1, 0});
  CHECK(power_series(degree_p_filiform(5, 2)).dims() == Dims{5, 2, 1, 0});
  const PowerSeries s = power_series(null_filiform(4));
  CHECK(s.reaches_zero);
  CHECK(s.power(1) == RationalSubspace::full(4));
  CHECK(s.power(9).is_zero_space());
}

TEST_CASE("power series uses the two-sided sum") {
  // A A^2 alone is zero here; A^3 comes entirely from A^2 A.
  const Algebra a = make_algebra(4, {{{1, 1}, {{2, Rational(1)}}}, {{2, 3}, {{4, Rational(1)}}}});
  // A^2 = <e2, e4>; A^3 = A A^2 + A^2 A = <e4> (from e2 e3).
  CHECK(power_series(a).dims() == Dims{4, 2, 1, 0});
}

TEST_CASE("nilindex examples") {
  for (int n = 1; n <= 8; ++n) CHECK(nilindex(null_filiform(n)) == n + 1);
  CHECK(nilindex(zero_algebra(3)) == 2);
  CHECK(nilindex(zero_algebra(0)) == 1);
  const Algebra idem = make_algebra(1, {{{1, 1}, {{1, Rational(1)}}}});
  CHECK_FALSE(nilindex(idem).has_value());
  CHECK_FALSE(power_series(idem).reaches_zero);
}

TEST_CASE("series properties on random associative nilpotent algebras") {
  gen::Engine rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const Algebra a = gen::associative_nilpotent(rng);
    const int n = a.dim();
    const PowerSeries s = power_series(a);
    CAPTURE(iter);
    REQUIRE(s.reaches_zero);
    const Dims d = s.dims();
    CHECK(d.front() == n);
    for (std::size_t i = 1; i < d.size(); ++i) {
      CHECK(d[i] < d[i - 1]);
      CHECK(s.terms[i - 1].contains(s.terms[i]));
    }
    int nonzero = 0;
    for (Index x : d) nonzero += x > 0 ? 1 : 0;
    CHECK(nilindex(s) == nonzero + 1);
  }
}

TEST_CASE("annihilator invariants") {
  CHECK(annihilator_invariants(zero_algebra(4)) == AnnihilatorInvariants{4, 4, 4, 0});
  // Frozen from the elimination oracle: (left, right, two-sided, commutator).
  CHECK(annihilator_invariants(filiform_variant(6, 1)) == AnnihilatorInvariants{2, 2, 2, 0});
  CHECK(annihilator_invariants(filiform_variant(6, 2)) == AnnihilatorInvariants{1, 1, 1, 0});
  CHECK(annihilator_invariants(filiform_variant(6, 3)) == AnnihilatorInvariants{2, 2, 1, 1});
  CHECK(annihilator_invariants(filiform_variant(6, 4)) == AnnihilatorInvariants{1, 1, 1, 1});
  // e1 e6 - e6 e1 = e5 in the third table.
  const Algebra mu13 = filiform_variant(6, 3);
  CHECK(same_entries(mu13.basis_product(1, 6) - mu13.basis_product(6, 1), e(6, 5)));
}

}  // TEST_SUITE
