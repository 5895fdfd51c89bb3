#include "nilalg/grading.hpp"

#include "nilalg/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nilalg {

namespace {

PowerSeries nilpotent_series(const Algebra& algebra) {
  PowerSeries series = power_series(algebra);
  if (!series.reaches_zero) throw Error(ErrorCode::NotNilpotent, "algebra is not nilpotent");
  return series;
}

// dim A^d for d >= 1, zero past the end of the series.
Index power_dim(const PowerSeries& series, int d) {
  if (d > static_cast<int>(series.terms.size())) return 0;
  return series.terms[static_cast<std::size_t>(d - 1)].dim();
}

}  // namespace

Gradation natural_gradation(const Algebra& algebra) {
  const PowerSeries series = nilpotent_series(algebra);
  const int n = algebra.dim();
  Gradation g;
  for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
    const RationalSubspace& upper = series.terms[i];
    RationalSubspace covered = series.terms[i + 1];
    std::vector<Vector> chosen;
    auto try_add = [&](const Vector& v) {
      if (covered.dim() == upper.dim()) return;
      if (!upper.contains(v) || covered.contains(v)) return;
      covered = join(covered, RationalSubspace::span(n, {v}));
      chosen.push_back(v);
    };
    for (int b = 0; b < n; ++b) try_add(basis_vector(n, b));
    for (Index r = 0; r < upper.dim(); ++r) try_add(upper.basis_vector(r));
    g.components.push_back(RationalSubspace::span(n, chosen));
    g.dims.push_back(static_cast<Index>(chosen.size()));
    g.bases.push_back(std::move(chosen));
  }
  return g;
}

Algebra graded_structure(const Algebra& algebra, const Gradation& gradation) {
  const PowerSeries series = nilpotent_series(algebra);
  const int n = algebra.dim();
  const std::size_t levels = gradation.bases.size();
  auto inconsistent = [](const std::string& why) { return Error(ErrorCode::InconsistentGradation, why); };
  if (levels + 1 != series.terms.size()) throw inconsistent("component count does not match the filtration length");

  // Flattened new basis with its degree.
  std::vector<Vector> flat;
  std::vector<int> degree;
  std::vector<std::string> labels;
  std::vector<int> offset;
  for (std::size_t i = 0; i < levels; ++i) {
    const auto& basis = gradation.bases[i];
    const RationalSubspace& upper = series.terms[i];
    const RationalSubspace& lower = series.terms[i + 1];
    if (static_cast<Index>(basis.size()) != upper.dim() - lower.dim()) {
      throw inconsistent("component " + std::to_string(i + 1) + " has the wrong dimension");
    }
    RationalSubspace covered = lower;
    offset.push_back(static_cast<int>(flat.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Vector& v = basis[b];
      if (v.size() != n || !upper.contains(v) || covered.contains(v)) {
        throw inconsistent("component " + std::to_string(i + 1) + " is not a complement of A^" + std::to_string(i + 2));
      }
      covered = join(covered, RationalSubspace::span(n, {v}));
      flat.push_back(v);
      degree.push_back(static_cast<int>(i) + 1);
      // Reuse the original label when the component vector is a basis vector.
      std::string label = "g" + std::to_string(i + 1) + "_" + std::to_string(b + 1);
      for (int e = 0; e < n; ++e) {
        if (same_entries(v, basis_vector(n, e))) label = algebra.label(e + 1);
      }
      labels.push_back(std::move(label));
    }
  }
  if (labels.size() != std::set<std::string>(labels.begin(), labels.end()).size()) {
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = "g" + std::to_string(i + 1);
  }

  ProductTable table;
  for (std::size_t p = 0; p < flat.size(); ++p) {
    for (std::size_t q = 0; q < flat.size(); ++q) {
      const int target = degree[p] + degree[q];
      if (target > static_cast<int>(levels)) continue;
      const Vector w = multiply(algebra, flat[p], flat[q]);
      if (is_zero_vector(w)) continue;
      const auto& component = gradation.bases[static_cast<std::size_t>(target - 1)];
      const RationalSubspace& tail = series.terms[static_cast<std::size_t>(target)];
      std::vector<Vector> generators = component;
      for (Index r = 0; r < tail.dim(); ++r) generators.push_back(tail.basis_vector(r));
      const auto coeffs = solve_in_span(generators, w);
      if (!coeffs) throw inconsistent("product leaves the filtration");
      std::vector<Term> terms;
      for (std::size_t c = 0; c < component.size(); ++c) {
        const Rational& value = (*coeffs)(static_cast<Index>(c));
        if (!value.is_zero()) terms.push_back({offset[static_cast<std::size_t>(target - 1)] + static_cast<int>(c) + 1, value});
      }
      if (!terms.empty()) table[{static_cast<int>(p) + 1, static_cast<int>(q) + 1}] = std::move(terms);
    }
  }
  return make_algebra(n, table, algebra.has_labels() ? labels : std::vector<std::string>{});
}

bool check_homogeneous(const Algebra& algebra, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "one degree per basis vector required");
  }
  for (int d : degrees) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "degrees must be >= 1");
  }
  for (const auto& [key, terms] : algebra.products()) {
    const int expected = degrees[static_cast<std::size_t>(key.first - 1)] + degrees[static_cast<std::size_t>(key.second - 1)];
    for (const Term& t : terms) {
      if (degrees[static_cast<std::size_t>(t.index - 1)] != expected) return false;
    }
  }
  return true;
}

bool natural_graded_witness(const Algebra& algebra, const std::vector<int>& degrees) {
  if (!check_homogeneous(algebra, degrees)) return false;
  const PowerSeries series = nilpotent_series(algebra);
  const int top = std::max(degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()),
                           static_cast<int>(series.terms.size()));
  for (int d = 1; d <= top; ++d) {
    const auto count = std::count(degrees.begin(), degrees.end(), d);
    if (count != power_dim(series, d) - power_dim(series, d + 1)) return false;
  }
  return true;
}

std::vector<int> filtration_degrees(const Algebra& algebra) {
  const PowerSeries series = nilpotent_series(algebra);
  const int n = algebra.dim();
  std::vector<int> degrees(static_cast<std::size_t>(n), 1);
  for (int b = 0; b < n; ++b) {
    const Vector e = basis_vector(n, b);
    for (std::size_t d = 1; d < series.terms.size() && series.terms[d].contains(e); ++d) {
      degrees[static_cast<std::size_t>(b)] = static_cast<int>(d) + 1;
    }
  }
  return degrees;
}

BasisSplit split_from_labels(const Algebra& algebra) {
  if (!algebra.has_labels()) throw Error(ErrorCode::InvalidSplit, "algebra has no basis labels to split on");
  BasisSplit split;
  for (int i = 1; i <= algebra.dim(); ++i) {
    (algebra.label(i).front() == 'f' ? split.f_list : split.e_chain).push_back(i);
  }
  return split;
}

GradationPositions gradation_positions(const Algebra& algebra, const BasisSplit& split) {
  const int n = algebra.dim();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  auto mark = [&](int idx) {
    if (idx < 1 || idx > n) throw Error(ErrorCode::InvalidSplit, "split index " + std::to_string(idx) + " out of range");
    ++seen[static_cast<std::size_t>(idx - 1)];
  };
  for (int i : split.e_chain) mark(i);
  for (int i : split.f_list) mark(i);
  if (split.e_chain.empty() || std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw Error(ErrorCode::InvalidSplit, "split must partition the basis with a nonempty e-chain");
  }
  const std::vector<int> degrees = filtration_degrees(algebra);
  if (!natural_graded_witness(algebra, degrees)) {
    throw Error(ErrorCode::NotNaturallyGraded, "presented basis does not certify a natural grading");
  }
  GradationPositions pos;
  for (int f : split.f_list) pos.r.push_back(degrees[static_cast<std::size_t>(f - 1)]);
  std::sort(pos.r.begin(), pos.r.end());
  return pos;
}

}  // namespace nilalg
