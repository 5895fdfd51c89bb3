#ifndef NILALG_GRADING_HPP
#define NILALG_GRADING_HPP

#include "nilalg/algebra.hpp"
#include "nilalg/linalg.hpp"

#include <vector>

namespace nilalg {

/// Decomposition A = A_1 + A_2 + ... where A_i is a chosen complement of
/// A^{i+1} inside A^i (components[0] is A_1).
struct Gradation {
  std::vector<RationalSubspace> components;
  std::vector<std::vector<Vector>> bases;  // chosen complement vectors, per component
  std::vector<Index> dims;
};

/// Complements are picked greedily: first the presented basis vectors in
/// order, then the canonical basis rows of A^i. Throws NotNilpotent.
Gradation natural_gradation(const Algebra& algebra);

/// gr A on the concatenated component bases: u in A_i, v in A_j multiply to
/// the A_{i+j} part of uv modulo A^{i+j+1}. Throws InconsistentGradation when
/// `gradation` does not come from this algebra's filtration.
Algebra graded_structure(const Algebra& algebra, const Gradation& gradation);

/// True iff every product e_i e_j lies in the span of basis vectors of degree
/// degrees[i] + degrees[j]. Degrees are >= 1, one per basis vector.
bool check_homogeneous(const Algebra& algebra, const std::vector<int>& degrees);

/// Homogeneous table plus, for every d, #{basis vectors of degree d} ==
/// dim A^d - dim A^{d+1}. Together these force A^d = span{deg >= d}, so the
/// identity map on the presented basis is an isomorphism A -> gr A.
bool natural_graded_witness(const Algebra& algebra, const std::vector<int>& degrees);

/// Largest d with e_i in A^d, per basis vector.
std::vector<int> filtration_degrees(const Algebra& algebra);

/// Partition of the basis (1-based) into the e-chain and the ordered f-list.
struct BasisSplit {
  std::vector<int> e_chain;
  std::vector<int> f_list;
};

/// Split by label prefix: labels starting with 'f' form the f-list.
BasisSplit split_from_labels(const Algebra& algebra);

struct GradationPositions {
  std::vector<int> r;  // r_1 <= ... <= r_p

  bool operator==(const GradationPositions&) const = default;
};

/// Degrees of the f-vectors in the certified natural grading, sorted.
/// Throws InvalidSplit or NotNaturallyGraded.
GradationPositions gradation_positions(const Algebra& algebra, const BasisSplit& split);

}  // namespace nilalg

#endif  // NILALG_GRADING_HPP
