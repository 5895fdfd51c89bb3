#ifndef NILALG_CONSTRAINTS_HPP
#define NILALG_CONSTRAINTS_HPP

#include "nilalg/algebra.hpp"
#include "nilalg/catalog.hpp"
#include "nilalg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilalg {

/// Multiset of unknown ids, kept sorted.
using Monomial = std::vector<int>;

/// Graded lexicographic order on monomials.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Polynomial with rational coefficients in numbered unknowns. No stored
/// term has a zero coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(google-explicit-constructor)
  static Poly variable(int id);

  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Scaled so the grlex-largest term has coefficient 1.
  Poly monic() const;
  Rational evaluate(const std::vector<Rational>& values) const;
  std::string str(const std::vector<std::string>& names) const;

  bool operator==(const Poly&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational, GrlexLess> terms_;
};

/// Structure constants that may contain unknowns: (i, j) -> [(k, poly)].
class SymbolicAlgebra {
 public:
  SymbolicAlgebra(int dim, std::vector<std::string> unknowns);
  /// Constant table with no unknowns.
  static SymbolicAlgebra from_algebra(const Algebra& algebra);

  int dim() const { return dim_; }
  const std::vector<std::string>& unknowns() const { return unknowns_; }
  int unknown_id(const std::string& name) const;

  /// Sets e_i e_j (1-based) to sum of coeff * e_k, replacing any entry.
  void set_product(int i, int j, std::vector<std::pair<int, Poly>> terms);
  const std::vector<std::pair<int, Poly>>& product(int i, int j) const;

  /// Substitutes every unknown.
  Algebra instantiate(const std::vector<Rational>& values) const;

 private:
  int dim_;
  std::vector<std::string> unknowns_;
  std::vector<std::vector<std::pair<int, Poly>>> table_;
};

/// Coordinates of (e_i e_j) e_k - e_i (e_j e_k), 1-based triple.
std::vector<Poly> symbolic_associator(const SymbolicAlgebra& algebra, int i, int j, int k);

struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<Poly> equations;  // each must vanish; monic, distinct

  std::vector<std::string> equation_strings() const;
};

/// Every nonzero associator coordinate over all basis triples, normalized
/// to monic and de-duplicated in discovery order.
ConstraintSystem associator_constraints(const SymbolicAlgebra& algebra);

/// Which f*f products carry unknown coefficients.
enum class BScope {
  /// Only the surviving products of the final table: k + t = n-p-2, k, t >= 1.
  Theorem,
  /// The intermediate ansatz: every k, t >= 1 with k + t <= n-p-2, each
  /// product landing in A_{k+t+2} = <e_{k+t+2}, f_{S_{k+t+1}+l}>.
  Ansatz,
};

/// One scalar unknown: the e-part (component 0) or the l-th f-part of the
/// product indexed by key.
struct BUnknown {
  BKey key;
  int component = 0;
  std::string name;  // "b_{i,j}^{k,t}" or "b_{i,j,l}^{k,t}"
};

std::vector<BUnknown> b_unknowns(const FamilySpec& spec, BScope scope = BScope::Theorem);

/// The p-filiform family table with every b-coefficient in `scope` left as a
/// formal unknown. The spec's own b map is ignored.
SymbolicAlgebra symbolic_family(const FamilySpec& spec, BScope scope = BScope::Theorem);

ConstraintSystem associator_constraints(const FamilySpec& spec, BScope scope = BScope::Theorem);

using Assignment = std::vector<Rational>;  // aligned with ConstraintSystem::unknowns

inline constexpr std::uint64_t kDefaultGridBudget = 1'000'000;

/// All assignments with every value drawn from `grid` that satisfy every
/// equation, in lexicographic grid order. Linear equations are eliminated
/// first; the remaining free unknowns are enumerated, and BudgetExceeded is
/// thrown when |grid|^free exceeds `budget`.
std::vector<Assignment> enumerate_solutions(const ConstraintSystem& system, std::vector<Rational> grid,
                                            std::uint64_t budget = kDefaultGridBudget);

/// Spec with its b map replaced by the assignment (theorem scope unknowns).
FamilySpec with_assignment(const FamilySpec& spec, const Assignment& assignment);

/// Builds the algebra through p_filiform_family and checks associativity on
/// the numeric table.
bool verify_solution(const FamilySpec& spec, const Assignment& assignment);

}  // namespace nilalg

#endif  // NILALG_CONSTRAINTS_HPP
