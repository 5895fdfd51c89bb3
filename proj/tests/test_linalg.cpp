#include "generators.hpp"
#include "nilalg/linalg.hpp"

#include <doctest.h>

#include <cstdint>

using namespace nilalg;

namespace {

// Integers mod a small prime: a second exact field to instantiate the
// templates with.
struct F7 {
  int v = 0;
  F7() = default;
  F7(int x) : v(((x % 7) + 7) % 7) {}  // NOLINT(google-explicit-constructor)
  friend F7 operator+(F7 a, F7 b) { return F7(a.v + b.v); }
  friend F7 operator-(F7 a, F7 b) { return F7(a.v - b.v); }
  friend F7 operator*(F7 a, F7 b) { return F7(a.v * b.v); }
  friend F7 operator/(F7 a, F7 b) {
    int inv = 1;
    for (int k = 0; k < 5; ++k) inv = inv * b.v % 7;  // b^5 = b^-1
    return a * F7(inv);
  }
  F7 operator-() const { return F7(-v); }
  F7& operator+=(F7 b) { return *this = *this + b; }
  F7& operator-=(F7 b) { return *this = *this - b; }
  F7& operator*=(F7 b) { return *this = *this * b; }
  bool operator==(const F7&) const = default;
};

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

Vector vec(std::initializer_list<int> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (int x : xs) v(i++) = Rational(x);
  return v;
}

}  // namespace

TEST_SUITE("exact_linalg") {

TEST_CASE("row_reduce examples") {
  const auto id = row_reduce<Rational>(Matrix::Identity(3, 3));
  CHECK(id.rank == 3);
  CHECK(same_entries(id.matrix, Matrix::Identity(3, 3)));

  const auto zero = row_reduce<Rational>(Matrix::Zero(2, 2));
  CHECK(zero.rank == 0);
  CHECK(is_zero_vector(zero.matrix.reshaped()));

  const auto dep = row_reduce<Rational>(mat({{1, 2}, {2, 4}}));
  CHECK(dep.rank == 1);
  CHECK(same_entries(dep.matrix, mat({{1, 2}, {0, 0}})));
  CHECK(dep.pivots == std::vector<Index>{0});
}

TEST_CASE("row_reduce picks the leftmost column and topmost row") {
  Matrix m(3, 3);
  m << Rational(0), Rational(2), Rational(4),  //
      Rational(0), Rational(1), Rational(1, 2), //
      Rational(3), Rational(0), Rational(0);
  const auto ech = row_reduce<Rational>(m);
  CHECK(ech.pivots == std::vector<Index>{0, 1, 2});
  CHECK(same_entries(ech.matrix, Matrix::Identity(3, 3)));

  Matrix half(2, 3);
  half << Rational(0), Rational(2), Rational(1), Rational(0), Rational(4), Rational(2);
  const auto h = row_reduce<Rational>(half);
  Matrix expected(2, 3);
  expected << Rational(0), Rational(1), Rational(1, 2), Rational(0), Rational(0), Rational(0);
  CHECK(h.rank == 1);
  CHECK(h.pivots == std::vector<Index>{1});
  CHECK(same_entries(h.matrix, expected));
}

TEST_CASE("kernel examples") {
  CHECK(kernel<Rational>(Matrix::Identity(3, 3)).dim() == 0);
  CHECK(kernel<Rational>(Matrix::Zero(2, 2)) == RationalSubspace::full(2));
  const auto k = kernel<Rational>(mat({{1, 1}, {0, 0}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({1, -1})));
  CHECK(is_zero_vector(mat({{1, 1}, {0, 0}}) * k.basis_vector(0)));
}

TEST_CASE("join examples") {
  gen::Engine rng(7);
  const auto v = RationalSubspace::span(gen::sparse_matrix(rng, 3, 5));
  CHECK(join(v, v) == v);
  CHECK(join(v, RationalSubspace::zero(5)) == v);

  const auto axes = join(RationalSubspace::span(3, {vec({1, 0, 0})}), RationalSubspace::span(3, {vec({0, 1, 0})}));
  CHECK(axes.dim() == 2);
  CHECK(axes == RationalSubspace::span(mat({{1, 0, 0}, {0, 1, 0}})));

  CHECK_THROWS_AS(join(RationalSubspace::zero(2), RationalSubspace::zero(3)), Error);
}

TEST_CASE("contains examples") {
  gen::Engine rng(8);
  const auto v = RationalSubspace::span(gen::sparse_matrix(rng, 2, 4));
  CHECK(v.contains(Vector::Zero(4)));
  CHECK(RationalSubspace::zero(4).contains(Vector::Zero(4)));
  CHECK_FALSE(RationalSubspace::span(3, {vec({0, 1, 0})}).contains(vec({1, 0, 0})));
  CHECK(RationalSubspace::span(mat({{1, 0, 0}, {0, 1, 0}})).contains(vec({1, 2, 0})));
  CHECK(contains(RationalSubspace::full(2), vec({5, -3})));
  CHECK_THROWS_AS(v.contains(vec({1, 2})), Error);
}

TEST_CASE("solve_in_span returns coefficients or nothing") {
  const std::vector<Vector> gens{vec({1, 1, 0}), vec({0, 1, 1})};
  const auto c = solve_in_span(gens, vec({2, 5, 3}));
  REQUIRE(c.has_value());
  CHECK(same_entries(*c, vec({2, 3})));
  CHECK_FALSE(solve_in_span(gens, vec({1, 0, 0})).has_value());
  const auto empty = solve_in_span(std::vector<Vector>{}, Vector(Vector::Zero(3)));
  REQUIRE(empty.has_value());
  CHECK(empty->size() == 0);
}

TEST_CASE("sparse_aware_product agrees with the dense product") {
  gen::Engine rng(9);
  for (int iter = 0; iter < 30; ++iter) {
    const Matrix a = gen::sparse_matrix(rng, 4, 5);
    const Matrix b = gen::sparse_matrix(rng, 5, 3);
    const Matrix dense = a * b;
    CHECK(same_entries(sparse_aware_product(a, b), dense));
  }
  CHECK_THROWS_AS(sparse_aware_product<Rational>(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), Error);
}

TEST_CASE("row reduction properties on random matrices") {
  gen::Engine rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const auto rows = static_cast<Index>(1 + rng() % 6);
    const auto cols = static_cast<Index>(1 + rng() % 7);
    const Matrix m = gen::sparse_matrix(rng, rows, cols, static_cast<int>(rng() % 80));
    CAPTURE(iter);
    const auto once = row_reduce<Rational>(m);
    CHECK(row_reduce<Rational>(once.matrix) == once);
    CHECK(once.rank + kernel<Rational>(m).dim() == cols);
    CHECK(RationalSubspace::span(once.matrix) == RationalSubspace::span(m));
    for (std::size_t i = 1; i < once.pivots.size(); ++i) CHECK(once.pivots[i - 1] < once.pivots[i]);

    const auto k = kernel<Rational>(m);
    for (Index r = 0; r < k.dim(); ++r) CHECK(is_zero_vector(m * k.basis_vector(r)));
  }
}

TEST_CASE("join is associative, commutative, idempotent; canonical form is basis independent") {
  gen::Engine rng(77);
  for (int iter = 0; iter < 100; ++iter) {
    const auto n = static_cast<Index>(1 + rng() % 8);
    auto draw = [&] { return RationalSubspace::span(gen::sparse_matrix(rng, static_cast<Index>(rng() % 4), n, 60)); };
    const auto a = draw(), b = draw(), c = draw();
    CAPTURE(iter);
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(join(a, b) == join(b, a));
    CHECK(join(a, a) == a);
    CHECK(join(a, b).dim() >= std::max(a.dim(), b.dim()));
    CHECK(join(a, b).contains(a));

    if (a.dim() > 0) {
      const Matrix mixed = gen::invertible(rng, a.dim()) * a.basis();
      CHECK(RationalSubspace::span(mixed) == a);
    }
  }
}

TEST_CASE("templates instantiate over another exact field") {
  static_assert(ExactField<F7>);
  MatrixX<F7> m(3, 3);
  m << F7(1), F7(2), F7(3), F7(2), F7(4), F7(6), F7(0), F7(1), F7(5);
  const auto ech = row_reduce<F7>(m);
  CHECK(ech.rank == 2);
  const auto k = kernel<F7>(m);
  CHECK(k.dim() == 1);
  const VectorX<F7> w = m * k.basis_vector(0);
  CHECK(is_zero_vector(w));
  // 13 = 6 mod 7, so these rows are proportional only mod 7.
  MatrixX<F7> singular_mod_7(2, 2);
  singular_mod_7 << F7(1), F7(2), F7(3), F7(13);
  CHECK(rank<F7>(singular_mod_7) == 1);
  CHECK(rank<Rational>(mat({{1, 2}, {3, 13}})) == 2);
}

}  // TEST_SUITE
