#ifndef NILALG_CHARSEQ_HPP
#define NILALG_CHARSEQ_HPP

#include "nilalg/algebra.hpp"
#include "nilalg/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilalg {

/// Jordan block sizes of a nilpotent operator, non-increasing, all positive.
class CharacteristicSequence {
 public:
  CharacteristicSequence() = default;
  /// Throws InvalidArgument unless parts are positive and non-increasing.
  explicit CharacteristicSequence(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  std::string str() const;  // "(5,1,1)"

  bool operator==(const CharacteristicSequence&) const = default;

  /// (n - p, 1, ..., 1) with p ones.
  static CharacteristicSequence p_filiform(int n, int p);

 private:
  std::vector<int> parts_;
};

enum class Ordering { Less, Equal, Greater };

/// Lexicographic order; a shorter sequence is padded with zeros.
Ordering lex_compare(const CharacteristicSequence& a, const CharacteristicSequence& b);

/// Matrix of z -> x z; column j is x e_j.
Matrix left_mult_matrix(const Algebra& algebra, const Vector& x);

/// Block sizes from the rank drops rank(m^{k-1}) - rank(m^k). Throws
/// NotNilpotent when the rank sequence stalls above zero.
CharacteristicSequence nilpotent_jordan_profile(const Matrix& m);

/// C(x). Throws ElementInSquare when x lies in A^2.
CharacteristicSequence char_seq_element(const Algebra& algebra, const Vector& x);

struct CharSeqEstimate {
  CharacteristicSequence sequence;
  Vector witness;   // an element attaining `sequence`
  int samples = 0;  // number of elements tried
};

/// Lexicographic maximum of C(x) over every basis vector outside A^2 plus
/// `trials` pseudo-random integer vectors (entries in [-9, 9]) outside A^2,
/// drawn from a generator seeded with `seed`. The result is attained, so it
/// is a certified lower bound for C(A); generic elements reach the maximum.
CharSeqEstimate estimate_char_seq(const Algebra& algebra, int trials, std::uint64_t seed);

inline CharacteristicSequence char_seq_algebra(const Algebra& algebra, int trials, std::uint64_t seed) {
  return estimate_char_seq(algebra, trials, seed).sequence;
}

bool is_p_filiform(const Algebra& algebra, int p, int trials, std::uint64_t seed);

}  // namespace nilalg

#endif  // NILALG_CHARSEQ_HPP
