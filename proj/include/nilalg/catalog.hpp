#ifndef NILALG_CATALOG_HPP
#define NILALG_CATALOG_HPP

#include "nilalg/algebra.hpp"
#include "nilalg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilalg {

enum class Family {
  NullFiliform,     // mu_0^n
  Filiform,         // mu_{1,v}^n, v = 1..4
  QuasiFiliform,    // mu_{2,v}^n(alpha), v = 1..4
  DegreeP,          // mu_0^{n-p} + F^p
  PFiliformGraded,  // naturally graded p-filiform family
};

std::string to_string(Family family);
/// Accepts "null", "filiform", "quasi", "degree-p", "p-filiform".
Family parse_family(const std::string& name);

/// Index of a surviving f*f product: f_{S_k+i} f_{S_t+j} with k + t = n-p-2,
/// k, t >= 1, where S_k = s_1 + ... + s_k.
struct BKey {
  int i = 0;
  int j = 0;
  int k = 0;
  int t = 0;

  auto operator<=>(const BKey&) const = default;
};

/// Coefficients of f_{S_k+i} f_{S_t+j} = e * e_{n-p} + sum_l f[l-1] * f_{S_{n-p-1}+l}.
/// `f` may be shorter than s_{n-p}; missing entries are zero.
struct BValue {
  Rational e;
  std::vector<Rational> f;

  bool operator==(const BValue&) const = default;
};

using BCoefficients = std::map<BKey, BValue>;

struct FamilySpec {
  Family family = Family::NullFiliform;
  int n = 0;
  int p = 0;
  int variant = 1;
  std::optional<Rational> alpha;  // QuasiFiliform variant 2 only
  std::vector<int> s;             // PFiliformGraded; zero-padded to length n-p
  BCoefficients b;                // PFiliformGraded only

  bool operator==(const FamilySpec&) const = default;
};

/// Throws InvalidFamily describing the first violated constraint.
void validate(const FamilySpec& spec);

/// Dispatches to the constructor for spec.family after validation.
Algebra build(const FamilySpec& spec);

/// Short human name, e.g. "mu_{1,3}^6" or "pfil(n=7,p=3,s=2,1,0,0)".
std::string describe(const FamilySpec& spec);

Algebra zero_algebra(int n);
Algebra null_filiform(int n);
Algebra filiform_variant(int n, int variant);
/// alpha is required for variant 2 and rejected otherwise.
Algebra quasi_filiform_variant(int n, int variant, std::optional<Rational> alpha = std::nullopt);
Algebra degree_p_filiform(int n, int p);
/// Block-diagonal product; labels are concatenated when both sides have them.
Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra p_filiform_family(const FamilySpec& spec);

/// Index bookkeeping for the adapted basis (e_1..e_m, f_1..f_p), m = n - p.
/// All indices are 1-based and refer to the algebra's basis.
class PFiliformLayout {
 public:
  PFiliformLayout(int n, int p, std::vector<int> s);

  int n() const { return n_; }
  int p() const { return p_; }
  int chain_length() const { return m_; }
  const std::vector<int>& profile() const { return s_; }

  /// s_i, zero outside 1..m.
  int s(int i) const { return i >= 1 && i <= m_ ? s_[static_cast<std::size_t>(i - 1)] : 0; }
  /// s_1 + ... + s_k (S_0 = 0).
  int prefix(int k) const;

  int e(int i) const { return i; }
  int f(int q) const { return m_ + q; }

  /// Degree of each basis vector in the natural grading.
  std::vector<int> degrees() const;
  std::vector<std::string> labels() const;

  /// Admissible (i, j) for a given (k, t): s_{k+2} < i <= s_{k+1},
  /// s_{t+2} < j <= s_{t+1}.
  std::vector<std::pair<int, int>> b_index_pairs(int k, int t) const;

 private:
  int n_;
  int p_;
  int m_;
  std::vector<int> s_;
};

/// All (p, s) with 0 <= s_m <= ... <= s_1 < p, s_1 >= 1, sum s = p for this n,
/// as PFiliformGraded specs with empty b.
std::vector<FamilySpec> p_filiform_shapes(int n);

/// The table L_{e_1} would force under the second Jordan form: basis
/// (e_1..e_m, f_1..f_p), e_1 e_i = e_{i+1} for 2 <= i <= m-1, e_1 e_m = f_1,
/// everything else zero. Requires m = n - p >= 3 and p >= 1.
Algebra excluded_jordan_form(int n, int p);

}  // namespace nilalg

#endif  // NILALG_CATALOG_HPP
