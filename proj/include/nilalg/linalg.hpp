#ifndef NILALG_LINALG_HPP
#define NILALG_LINALG_HPP

// Exact dense linear algebra over any field whose arithmetic is exact.
// Everything here is templated on the scalar; the rest of the library uses
// the Rational instantiation through the Matrix / Vector aliases.

#include "nilalg/error.hpp"
#include "nilalg/rational.hpp"

#include <Eigen/Core>

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilalg {

template <class S>
concept ExactField = std::regular<S> && requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  S(0);
  S(1);
};

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using Index = Eigen::Index;

static_assert(ExactField<Rational>);

template <class S>
bool is_zero(const S& s) {
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else {
    return s == S(0);
  }
}

template <class Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return false;
  }
  return true;
}

/// Shape-checked equality (Eigen's operator== requires equal shapes).
template <class A, class B>
bool same_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

template <ExactField S>
VectorX<S> unit_vector(Index n, Index i) {
  VectorX<S> v = VectorX<S>::Constant(n, S(0));
  v(i) = S(1);
  return v;
}

inline Vector basis_vector(Index n, Index i) { return unit_vector<Rational>(n, i); }

/// Reduced row-echelon form together with the rank and pivot columns.
template <ExactField S>
struct RowEchelon {
  MatrixX<S> matrix;
  Index rank = 0;
  std::vector<Index> pivots;

  bool operator==(const RowEchelon& other) const {
    return rank == other.rank && pivots == other.pivots && same_entries(matrix, other.matrix);
  }
};

/// Gauss-Jordan elimination. The pivot in each column is the topmost
/// nonzero entry at or below the current row, columns are scanned left to
/// right, so the result is a deterministic function of the input.
template <ExactField S>
RowEchelon<S> row_reduce(MatrixX<S> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    if (m(r, c) != S(1)) {
      const S inv = S(1) / m(r, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(r, j) *= inv;
      }
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S factor = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RowEchelon<S>{std::move(m), r, std::move(pivots)};
}

template <ExactField S>
Index rank(const MatrixX<S>& m) {
  return row_reduce<S>(m).rank;
}

/// Product that skips zero entries; the matrices in this library are sparse
/// enough that this beats a blocked product on exact scalars.
template <ExactField S>
MatrixX<S> sparse_aware_product(const MatrixX<S>& a, const MatrixX<S>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  MatrixX<S> out = MatrixX<S>::Constant(a.rows(), b.cols(), S(0));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

/// A linear subspace of S^n stored as the nonzero rows of its reduced
/// row-echelon basis. The representation is canonical, so equality of
/// subspaces is equality of members.
template <ExactField S>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim) {
    return Subspace(ambient_dim, MatrixX<S>(0, ambient_dim), {});
  }

  static Subspace full(Index ambient_dim) {
    return span(MatrixX<S>::Identity(ambient_dim, ambient_dim));
  }

  /// Row space of `rows`.
  static Subspace span(const MatrixX<S>& rows) {
    RowEchelon<S> ech = row_reduce<S>(rows);
    return Subspace(rows.cols(), MatrixX<S>(ech.matrix.topRows(ech.rank)), std::move(ech.pivots));
  }

  static Subspace span(Index ambient_dim, const std::vector<VectorX<S>>& vectors) {
    MatrixX<S> rows(static_cast<Index>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim) {
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
      }
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(rows);
  }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero_space() const { return dim() == 0; }

  /// Canonical basis, one vector per row.
  const MatrixX<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  VectorX<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// v minus its component along the canonical basis; zero iff v lies in the
  /// subspace.
  VectorX<S> residual(VectorX<S> v) const {
    check_length(v.size());
    for (Index r = 0; r < dim(); ++r) {
      const S coeff = v(pivots_[static_cast<std::size_t>(r)]);
      if (is_zero(coeff)) continue;
      for (Index j = 0; j < ambient_dim_; ++j) {
        if (!is_zero(basis_(r, j))) v(j) -= coeff * basis_(r, j);
      }
    }
    return v;
  }

  bool contains(const VectorX<S>& v) const { return is_zero_vector(residual(v)); }

  bool contains(const Subspace& other) const {
    check_length(other.ambient_dim());
    for (Index r = 0; r < other.dim(); ++r) {
      if (!contains(other.basis_vector(r))) return false;
    }
    return true;
  }

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && same_entries(basis_, other.basis_);
  }

 private:
  Subspace(Index ambient_dim, MatrixX<S> basis, std::vector<Index> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_length(Index n) const {
    if (n != ambient_dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "length " + std::to_string(n) + " does not match ambient dimension " +
                      std::to_string(ambient_dim_));
    }
  }

  Index ambient_dim_ = 0;
  MatrixX<S> basis_;
  std::vector<Index> pivots_;
};

using RationalSubspace = Subspace<Rational>;

/// Null space {v : m v = 0}.
template <ExactField S>
Subspace<S> kernel(const MatrixX<S>& m) {
  const RowEchelon<S> ech = row_reduce<S>(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<S>> generators;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<S> v = VectorX<S>::Constant(cols, S(0));
    v(free) = S(1);
    for (Index r = 0; r < ech.rank; ++r) {
      v(ech.pivots[static_cast<std::size_t>(r)]) = -ech.matrix(r, free);
    }
    generators.push_back(std::move(v));
  }
  return Subspace<S>::span(cols, generators);
}

/// Smallest subspace containing both arguments.
template <ExactField S>
Subspace<S> join(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "join of subspaces with different ambient dimension");
  }
  MatrixX<S> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<S>::span(rows);
}

template <ExactField S>
bool contains(const Subspace<S>& space, const VectorX<S>& v) {
  return space.contains(v);
}

/// Coefficients c with sum_i c_i * vectors[i] == target, or nullopt when the
/// target is outside the span. For dependent inputs the free coefficients
/// are set to zero.
template <ExactField S>
std::optional<VectorX<S>> solve_in_span(const std::vector<VectorX<S>>& vectors, const VectorX<S>& target) {
  const Index n = target.size();
  const auto k = static_cast<Index>(vectors.size());
  MatrixX<S> augmented(n, k + 1);
  for (Index j = 0; j < k; ++j) {
    if (vectors[static_cast<std::size_t>(j)].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "solve_in_span: vector length mismatch");
    }
    augmented.col(j) = vectors[static_cast<std::size_t>(j)];
  }
  augmented.col(k) = target;
  const RowEchelon<S> ech = row_reduce<S>(augmented);
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  VectorX<S> coeffs = VectorX<S>::Constant(k, S(0));
  for (Index r = 0; r < ech.rank; ++r) {
    coeffs(ech.pivots[static_cast<std::size_t>(r)]) = ech.matrix(r, k);
  }
  return coeffs;
}

}  // namespace nilalg

#endif  // NILALG_LINALG_HPP
