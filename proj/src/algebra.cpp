#include "nilalg/algebra.hpp"

#include "nilalg/error.hpp"

#include <algorithm>
#include <set>

namespace nilalg {

namespace {

void check_length(const Algebra& algebra, const Vector& v, const char* what) {
  if (v.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                                  ", algebra has dimension " + std::to_string(algebra.dim()));
  }
}

// (sum_t c_t e_t) * e_k accumulated into out.
void accumulate_right(const Algebra& algebra, const std::vector<Term>& left, int k, Vector& out) {
  for (const Term& t : left) {
    for (const Term& u : algebra.product_terms(t.index, k)) {
      out(u.index - 1) += t.coeff * u.coeff;
    }
  }
}

// e_i * (sum_t c_t e_t) accumulated into out.
void accumulate_left(const Algebra& algebra, int i, const std::vector<Term>& right, Vector& out) {
  for (const Term& t : right) {
    for (const Term& u : algebra.product_terms(i, t.index)) {
      out(u.index - 1) += t.coeff * u.coeff;
    }
  }
}

}  // namespace

std::string Algebra::label(int i) const {
  if (!labels_.empty()) return labels_[static_cast<std::size_t>(i - 1)];
  return "e" + std::to_string(i);
}

Vector Algebra::basis_product(int i, int j) const {
  Vector v = Vector::Constant(dim_, Rational(0));
  for (const Term& t : product_terms(i, j)) v(t.index - 1) = t.coeff;
  return v;
}

Algebra make_algebra(int dim, const ProductTable& products, std::vector<std::string> labels) {
  if (dim < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != dim) {
      throw Error(ErrorCode::InvalidArgument, "label count " + std::to_string(labels.size()) +
                                                  " does not match dimension " + std::to_string(dim));
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty() || !seen.insert(l).second) {
        throw Error(ErrorCode::InvalidArgument, "basis labels must be nonempty and distinct");
      }
    }
  }
  auto in_range = [dim](int idx) { return idx >= 1 && idx <= dim; };

  Algebra a;
  a.dim_ = dim;
  a.labels_ = std::move(labels);
  a.dense_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), {});
  for (const auto& [key, terms] : products) {
    const auto [i, j] = key;
    if (!in_range(i) || !in_range(j)) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "product (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1," + std::to_string(dim) + "]");
    }
    std::vector<Term> sorted = terms;
    std::sort(sorted.begin(), sorted.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      if (!in_range(sorted[t].index)) {
        throw Error(ErrorCode::IndexOutOfRange, "result index " + std::to_string(sorted[t].index) + " in product (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ") out of range");
      }
      if (sorted[t].coeff.is_zero()) {
        throw Error(ErrorCode::ZeroCoefficient,
                    "zero coefficient in product (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (t > 0 && sorted[t].index == sorted[t - 1].index) {
        throw Error(ErrorCode::InvalidArgument, "repeated result index " + std::to_string(sorted[t].index) +
                                                    " in product (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    if (sorted.empty()) continue;
    a.dense_[static_cast<std::size_t>((i - 1) * dim + (j - 1))] = sorted;
    a.products_.emplace(key, std::move(sorted));
  }
  return a;
}

Vector multiply(const Algebra& algebra, const Vector& x, const Vector& y) {
  check_length(algebra, x, "left factor");
  check_length(algebra, y, "right factor");
  Vector out = Vector::Constant(algebra.dim(), Rational(0));
  for (const auto& [key, terms] : algebra.products()) {
    const Rational& xi = x(key.first - 1);
    const Rational& yj = y(key.second - 1);
    if (xi.is_zero() || yj.is_zero()) continue;
    const Rational w = xi * yj;
    for (const Term& t : terms) out(t.index - 1) += w * t.coeff;
  }
  return out;
}

std::vector<Triple> associativity_defects(const Algebra& algebra) {
  const int n = algebra.dim();
  std::vector<Triple> defects;
  Vector lhs(n);
  Vector rhs(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto& ij = algebra.product_terms(i, j);
      for (int k = 1; k <= n; ++k) {
        const auto& jk = algebra.product_terms(j, k);
        if (ij.empty() && jk.empty()) continue;
        lhs.setConstant(Rational(0));
        rhs.setConstant(Rational(0));
        accumulate_right(algebra, ij, k, lhs);
        accumulate_left(algebra, i, jk, rhs);
        if (!same_entries(lhs, rhs)) defects.push_back({i, j, k});
      }
    }
  }
  return defects;
}

RationalSubspace product_space(const Algebra& algebra, const RationalSubspace& a, const RationalSubspace& b) {
  const Index n = algebra.dim();
  std::vector<Vector> products;
  products.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (Index r = 0; r < a.dim(); ++r) {
    const Vector u = a.basis_vector(r);
    for (Index s = 0; s < b.dim(); ++s) {
      Vector w = multiply(algebra, u, b.basis_vector(s));
      if (!is_zero_vector(w)) products.push_back(std::move(w));
    }
  }
  return RationalSubspace::span(n, products);
}

std::vector<Index> PowerSeries::dims() const {
  std::vector<Index> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

const RationalSubspace& PowerSeries::power(int i) const {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "powers start at 1");
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(i - 1), terms.size() - 1);
  return terms[idx];
}

PowerSeries power_series(const Algebra& algebra) {
  const Index n = algebra.dim();
  PowerSeries series;
  series.terms.push_back(RationalSubspace::full(n));
  if (n == 0) {
    series.reaches_zero = true;
    return series;
  }
  // Memoized A^k A^l; the series is short (at most n + 1 terms).
  std::map<std::pair<int, int>, RationalSubspace> cache;
  auto pair_product = [&](int k, int l) -> const RationalSubspace& {
    auto it = cache.find({k, l});
    if (it == cache.end()) {
      it = cache
               .emplace(std::make_pair(k, l),
                        product_space(algebra, series.terms[static_cast<std::size_t>(k - 1)],
                                      series.terms[static_cast<std::size_t>(l - 1)]))
               .first;
    }
    return it->second;
  };
  for (int i = 1;; ++i) {
    RationalSubspace next = RationalSubspace::zero(n);
    for (int k = 1; k <= i; ++k) next = join(next, pair_product(k, i + 1 - k));
    if (next.is_zero_space()) {
      series.terms.push_back(std::move(next));
      series.reaches_zero = true;
      return series;
    }
    if (next == series.terms.back()) return series;
    series.terms.push_back(std::move(next));
  }
}

std::optional<int> nilindex(const PowerSeries& series) {
  if (!series.reaches_zero) return std::nullopt;
  return static_cast<int>(series.terms.size());
}

std::optional<int> nilindex(const Algebra& algebra) { return nilindex(power_series(algebra)); }

AnnihilatorInvariants annihilator_invariants(const Algebra& algebra) {
  const int n = algebra.dim();
  // Row block j of `left` encodes x -> x e_j, of `right` x -> e_j x.
  Matrix left = Matrix::Constant(n * n, n, Rational(0));
  Matrix right = Matrix::Constant(n * n, n, Rational(0));
  for (const auto& [key, terms] : algebra.products()) {
    const auto [i, j] = key;
    for (const Term& t : terms) {
      left((j - 1) * n + (t.index - 1), i - 1) = t.coeff;
      right((i - 1) * n + (t.index - 1), j - 1) = t.coeff;
    }
  }
  Matrix both(2 * n * n, n);
  both << left, right;

  std::vector<Vector> commutators;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Vector c = algebra.basis_product(i, j) - algebra.basis_product(j, i);
      if (!is_zero_vector(c)) commutators.push_back(std::move(c));
    }
  }

  AnnihilatorInvariants inv;
  inv.left = kernel<Rational>(left).dim();
  inv.right = kernel<Rational>(right).dim();
  inv.two_sided = kernel<Rational>(both).dim();
  inv.commutator = RationalSubspace::span(n, commutators).dim();
  return inv;
}

}  // namespace nilalg
