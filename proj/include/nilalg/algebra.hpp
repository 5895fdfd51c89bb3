#ifndef NILALG_ALGEBRA_HPP
#define NILALG_ALGEBRA_HPP

#include "nilalg/linalg.hpp"
#include "nilalg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilalg {

/// One summand c * e_index of a basis product (1-based index).
struct Term {
  int index = 0;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// (i, j) -> e_i e_j as a list of terms, 1-based. Missing keys are zero.
using ProductTable = std::map<std::pair<int, int>, std::vector<Term>>;

/// Finite-dimensional algebra given by structure constants.
///
/// The sparse table is the canonical value (terms sorted by index, no zero
/// coefficients, no empty entries); a dense copy is kept for fast lookup.
/// Instances are immutable.
class Algebra {
 public:
  Algebra() = default;

  int dim() const { return dim_; }
  const ProductTable& products() const { return products_; }

  /// Explicit labels, empty when none were supplied.
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  /// Label of basis vector i (1-based); "e<i>" when unlabeled.
  std::string label(int i) const;

  /// Terms of e_i e_j (1-based).
  const std::vector<Term>& product_terms(int i, int j) const {
    return dense_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
  }

  /// e_i e_j as a dense coordinate vector (1-based).
  Vector basis_product(int i, int j) const;

  bool operator==(const Algebra& other) const {
    return dim_ == other.dim_ && products_ == other.products_ && labels_ == other.labels_;
  }

  friend Algebra make_algebra(int dim, const ProductTable& products, std::vector<std::string> labels);

 private:
  int dim_ = 0;
  ProductTable products_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> dense_;
};

/// Validates and canonicalizes a table. Throws IndexOutOfRange for indices
/// outside [1, dim], ZeroCoefficient for explicit zero terms, and
/// InvalidArgument for repeated result indices or malformed labels.
Algebra make_algebra(int dim, const ProductTable& products, std::vector<std::string> labels = {});

/// Bilinear extension of the table.
Vector multiply(const Algebra& algebra, const Vector& x, const Vector& y);

/// Basis triple (i, j, k), 1-based.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

/// Every basis triple with (e_i e_j) e_k != e_i (e_j e_k), in lexicographic
/// order. By trilinearity the algebra is associative iff this is empty.
std::vector<Triple> associativity_defects(const Algebra& algebra);

inline bool is_associative(const Algebra& algebra) { return associativity_defects(algebra).empty(); }

/// span{u v : u in a, v in b}.
RationalSubspace product_space(const Algebra& algebra, const RationalSubspace& a, const RationalSubspace& b);

/// The series A^1 = A, A^{i+1} = sum_{k=1..i} A^k A^{i+1-k}.
///
/// terms[i] holds A^{i+1}. Computation stops at the first zero term (which is
/// kept, and `reaches_zero` is set) or at the first term equal to its
/// predecessor (which is dropped).
struct PowerSeries {
  std::vector<RationalSubspace> terms;
  bool reaches_zero = false;

  std::vector<Index> dims() const;
  /// A^i for i >= 1; beyond the stored terms this is the last term.
  const RationalSubspace& power(int i) const;
};

PowerSeries power_series(const Algebra& algebra);

/// Smallest k with A^k = 0, or nullopt when the algebra is not nilpotent.
std::optional<int> nilindex(const Algebra& algebra);
std::optional<int> nilindex(const PowerSeries& series);

struct AnnihilatorInvariants {
  Index left = 0;        // {x : x A = 0}
  Index right = 0;       // {x : A x = 0}
  Index two_sided = 0;   // both
  Index commutator = 0;  // span{xy - yx}

  bool operator==(const AnnihilatorInvariants&) const = default;
  auto operator<=>(const AnnihilatorInvariants&) const = default;
};

AnnihilatorInvariants annihilator_invariants(const Algebra& algebra);

}  // namespace nilalg

#endif  // NILALG_ALGEBRA_HPP
