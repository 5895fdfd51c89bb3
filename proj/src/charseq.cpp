#include "nilalg/charseq.hpp"

#include "nilalg/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nilalg {

CharacteristicSequence::CharacteristicSequence(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::InvalidArgument, "characteristic sequence parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "characteristic sequence must be non-increasing");
    }
  }
}

int CharacteristicSequence::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string CharacteristicSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

CharacteristicSequence CharacteristicSequence::p_filiform(int n, int p) {
  if (p < 0 || n - p < 1) throw Error(ErrorCode::InvalidArgument, "p-filiform sequence needs 0 <= p < n");
  std::vector<int> parts{n - p};
  parts.resize(static_cast<std::size_t>(p) + 1, 1);
  return CharacteristicSequence(std::move(parts));
}

Ordering lex_compare(const CharacteristicSequence& a, const CharacteristicSequence& b) {
  const auto& x = a.parts();
  const auto& y = b.parts();
  const std::size_t len = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int xi = i < x.size() ? x[i] : 0;
    const int yi = i < y.size() ? y[i] : 0;
    if (xi != yi) return xi < yi ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

Matrix left_mult_matrix(const Algebra& algebra, const Vector& x) {
  const int n = algebra.dim();
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "element length does not match algebra dimension");
  }
  Matrix m = Matrix::Constant(n, n, Rational(0));
  for (const auto& [key, terms] : algebra.products()) {
    const Rational& xi = x(key.first - 1);
    if (xi.is_zero()) continue;
    for (const Term& t : terms) m(t.index - 1, key.second - 1) += xi * t.coeff;
  }
  return m;
}

CharacteristicSequence nilpotent_jordan_profile(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "Jordan profile needs a square matrix");
  const Index n = m.rows();
  // rowspace(m^{k+1}) = rowspace(m^k) * m, so iterate on the reduced basis.
  std::vector<Index> ranks{n};
  Matrix rows = m;
  while (ranks.back() > 0) {
    RowEchelon<Rational> ech = row_reduce<Rational>(rows);
    if (ech.rank == ranks.back()) {
      throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    }
    ranks.push_back(ech.rank);
    rows = sparse_aware_product<Rational>(Matrix(ech.matrix.topRows(ech.rank)), m);
  }
  // at_least[k-1] = number of blocks of size >= k.
  std::vector<Index> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  at_least.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = at_least.size() - 1; k >= 1; --k) {
    const Index exact = at_least[k - 1] - at_least[k];
    parts.insert(parts.end(), static_cast<std::size_t>(exact), static_cast<int>(k));
  }
  return CharacteristicSequence(std::move(parts));
}

namespace {

const RationalSubspace& square_of(const PowerSeries& series) {
  if (series.terms.size() < 2) {
    // Series stopped at A^2 = A.
    return series.terms.front();
  }
  return series.terms[1];
}

CharacteristicSequence profile_outside_square(const Algebra& algebra, const RationalSubspace& square,
                                              const Vector& x) {
  if (square.contains(x)) throw Error(ErrorCode::ElementInSquare, "element lies in A^2");
  return nilpotent_jordan_profile(left_mult_matrix(algebra, x));
}

}  // namespace

CharacteristicSequence char_seq_element(const Algebra& algebra, const Vector& x) {
  if (x.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "element length does not match algebra dimension");
  }
  const RationalSubspace square =
      product_space(algebra, RationalSubspace::full(algebra.dim()), RationalSubspace::full(algebra.dim()));
  return profile_outside_square(algebra, square, x);
}

CharSeqEstimate estimate_char_seq(const Algebra& algebra, int trials, std::uint64_t seed) {
  if (trials < 0) throw Error(ErrorCode::InvalidArgument, "trials must be non-negative");
  const PowerSeries series = power_series(algebra);
  if (!series.reaches_zero) throw Error(ErrorCode::NotNilpotent, "algebra is not nilpotent");
  const RationalSubspace& square = square_of(series);
  const int n = algebra.dim();
  if (square.dim() == n) throw Error(ErrorCode::InvalidArgument, "A = A^2, no element outside the square");

  CharSeqEstimate best;
  bool have_best = false;
  auto consider = [&](const Vector& x) {
    CharacteristicSequence c = profile_outside_square(algebra, square, x);
    ++best.samples;
    if (!have_best || lex_compare(c, best.sequence) == Ordering::Greater) {
      best.sequence = std::move(c);
      best.witness = x;
      have_best = true;
    }
  };

  for (int i = 0; i < n; ++i) {
    Vector e = basis_vector(n, i);
    if (!square.contains(e)) consider(e);
  }

  // Plain modular reduction of the raw engine output keeps the stream
  // identical across standard libraries.
  std::mt19937_64 engine(seed);
  constexpr int kMaxRejections = 10000;
  for (int t = 0; t < trials; ++t) {
    Vector x(n);
    int rejections = 0;
    do {
      if (rejections++ > kMaxRejections) {
        throw Error(ErrorCode::InvalidArgument, "could not sample an element outside A^2");
      }
      for (int i = 0; i < n; ++i) x(i) = Rational(static_cast<std::int64_t>(engine() % 19) - 9);
    } while (square.contains(x));
    consider(x);
  }
  return best;
}

bool is_p_filiform(const Algebra& algebra, int p, int trials, std::uint64_t seed) {
  const int n = algebra.dim();
  if (p < 0 || p >= n) return false;
  return char_seq_algebra(algebra, trials, seed) == CharacteristicSequence::p_filiform(n, p);
}

}  // namespace nilalg
