#include "nilalg/constraints.hpp"

#include "nilalg/error.hpp"
#include "nilalg/linalg.hpp"

#include <algorithm>
#include <set>

namespace nilalg {

// ---- Poly -------------------------------------------------------------------

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

Poly Poly::variable(int id) {
  Poly p;
  p.terms_.emplace(Monomial{id}, Rational(1));
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  const Rational lead = terms_.rbegin()->second;
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c / lead);
  return out;
}

Rational Poly::evaluate(const std::vector<Rational>& values) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int id : m) {
      if (id < 0 || id >= static_cast<int>(values.size())) {
        throw Error(ErrorCode::InvalidArgument, "assignment does not cover unknown " + std::to_string(id));
      }
      term *= values[static_cast<std::size_t>(id)];
    }
    total += term;
  }
  return total;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Largest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (!unit || m.empty()) out += mag.str();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (v > 0 || !unit) out += "*";
      out += m[v] < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(m[v])] : "x" + std::to_string(m[v]);
    }
  }
  return out;
}

// ---- SymbolicAlgebra --------------------------------------------------------

SymbolicAlgebra::SymbolicAlgebra(int dim, std::vector<std::string> unknowns)
    : dim_(dim), unknowns_(std::move(unknowns)), table_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
}

SymbolicAlgebra SymbolicAlgebra::from_algebra(const Algebra& algebra) {
  SymbolicAlgebra out(algebra.dim(), {});
  for (const auto& [key, terms] : algebra.products()) {
    std::vector<std::pair<int, Poly>> poly_terms;
    for (const Term& t : terms) poly_terms.emplace_back(t.index, Poly(t.coeff));
    out.set_product(key.first, key.second, std::move(poly_terms));
  }
  return out;
}

int SymbolicAlgebra::unknown_id(const std::string& name) const {
  auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
  if (it == unknowns_.end()) throw Error(ErrorCode::InvalidArgument, "unknown '" + name + "' not declared");
  return static_cast<int>(it - unknowns_.begin());
}

void SymbolicAlgebra::set_product(int i, int j, std::vector<std::pair<int, Poly>> terms) {
  auto in_range = [this](int idx) { return idx >= 1 && idx <= dim_; };
  if (!in_range(i) || !in_range(j)) throw Error(ErrorCode::IndexOutOfRange, "product index out of range");
  std::vector<std::pair<int, Poly>> kept;
  for (auto& [k, poly] : terms) {
    if (!in_range(k)) throw Error(ErrorCode::IndexOutOfRange, "result index out of range");
    for (const auto& [m, c] : poly.terms()) {
      for (int id : m) {
        if (id < 0 || id >= static_cast<int>(unknowns_.size())) {
          throw Error(ErrorCode::InvalidArgument, "coefficient uses an undeclared unknown");
        }
      }
    }
    if (!poly.is_zero()) kept.emplace_back(k, std::move(poly));
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  table_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))] = std::move(kept);
}

const std::vector<std::pair<int, Poly>>& SymbolicAlgebra::product(int i, int j) const {
  return table_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
}

Algebra SymbolicAlgebra::instantiate(const std::vector<Rational>& values) const {
  if (values.size() != unknowns_.size()) {
    throw Error(ErrorCode::InvalidArgument, "assignment must give a value to every unknown");
  }
  ProductTable table;
  for (int i = 1; i <= dim_; ++i) {
    for (int j = 1; j <= dim_; ++j) {
      std::vector<Term> terms;
      for (const auto& [k, poly] : product(i, j)) {
        Rational c = poly.evaluate(values);
        if (!c.is_zero()) terms.push_back({k, std::move(c)});
      }
      if (!terms.empty()) table[{i, j}] = std::move(terms);
    }
  }
  return make_algebra(dim_, table);
}

std::vector<Poly> symbolic_associator(const SymbolicAlgebra& algebra, int i, int j, int k) {
  const int n = algebra.dim();
  std::vector<Poly> diff(static_cast<std::size_t>(n));
  for (const auto& [t, c] : algebra.product(i, j)) {
    for (const auto& [u, d] : algebra.product(t, k)) diff[static_cast<std::size_t>(u - 1)] += c * d;
  }
  for (const auto& [t, c] : algebra.product(j, k)) {
    for (const auto& [u, d] : algebra.product(i, t)) diff[static_cast<std::size_t>(u - 1)] -= c * d;
  }
  return diff;
}

// ---- constraint systems -----------------------------------------------------

std::vector<std::string> ConstraintSystem::equation_strings() const {
  std::vector<std::string> out;
  for (const Poly& p : equations) out.push_back(p.str(unknowns) + " = 0");
  return out;
}

ConstraintSystem associator_constraints(const SymbolicAlgebra& algebra) {
  ConstraintSystem system;
  system.unknowns = algebra.unknowns();
  std::set<std::map<Monomial, Rational, GrlexLess>> seen;
  const int n = algebra.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (Poly& coord : symbolic_associator(algebra, i, j, k)) {
          if (coord.is_zero()) continue;
          Poly eq = coord.monic();
          if (seen.insert(eq.terms()).second) system.equations.push_back(std::move(eq));
        }
      }
    }
  }
  return system;
}

std::vector<BUnknown> b_unknowns(const FamilySpec& spec, BScope scope) {
  if (spec.family != Family::PFiliformGraded) {
    throw Error(ErrorCode::InvalidFamily, "b-coefficients exist for the p-filiform family only");
  }
  FamilySpec shape = spec;
  shape.b.clear();
  validate(shape);
  const PFiliformLayout layout(spec.n, spec.p, spec.s);
  const int m = layout.chain_length();
  std::vector<BUnknown> out;
  for (int k = 1; k <= m - 3; ++k) {
    for (int t = 1; k + t <= m - 2; ++t) {
      if (scope == BScope::Theorem && k + t != m - 2) continue;
      const int target = k + t + 2;
      for (const auto& [i, j] : layout.b_index_pairs(k, t)) {
        const std::string idx = std::to_string(i) + "," + std::to_string(j);
        const std::string sup = "^{" + std::to_string(k) + "," + std::to_string(t) + "}";
        out.push_back({BKey{i, j, k, t}, 0, "b_{" + idx + "}" + sup});
        for (int l = 1; l <= layout.s(target); ++l) {
          out.push_back({BKey{i, j, k, t}, l, "b_{" + idx + "," + std::to_string(l) + "}" + sup});
        }
      }
    }
  }
  return out;
}

SymbolicAlgebra symbolic_family(const FamilySpec& spec, BScope scope) {
  const std::vector<BUnknown> unknowns = b_unknowns(spec, scope);
  FamilySpec base = spec;
  base.b.clear();
  const Algebra numeric = p_filiform_family(base);
  const PFiliformLayout layout(spec.n, spec.p, spec.s);

  std::vector<std::string> names;
  for (const auto& u : unknowns) names.push_back(u.name);
  SymbolicAlgebra out(numeric.dim(), names);
  for (const auto& [key, terms] : numeric.products()) {
    std::vector<std::pair<int, Poly>> poly_terms;
    for (const Term& t : terms) poly_terms.emplace_back(t.index, Poly(t.coeff));
    out.set_product(key.first, key.second, std::move(poly_terms));
  }

  std::map<BKey, std::vector<std::pair<int, Poly>>> products;
  for (std::size_t id = 0; id < unknowns.size(); ++id) {
    const BUnknown& u = unknowns[id];
    const int target = u.key.k + u.key.t + 2;
    const int result = u.component == 0 ? layout.e(target) : layout.f(layout.prefix(target - 1) + u.component);
    products[u.key].emplace_back(result, Poly::variable(static_cast<int>(id)));
  }
  for (auto& [key, terms] : products) {
    out.set_product(layout.f(layout.prefix(key.k) + key.i), layout.f(layout.prefix(key.t) + key.j), std::move(terms));
  }
  return out;
}

ConstraintSystem associator_constraints(const FamilySpec& spec, BScope scope) {
  return associator_constraints(symbolic_family(spec, scope));
}

std::vector<Assignment> enumerate_solutions(const ConstraintSystem& system, std::vector<Rational> grid,
                                            std::uint64_t budget) {
  {
    std::vector<Rational> unique;
    for (auto& v : grid) {
      if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(std::move(v));
    }
    grid = std::move(unique);
  }
  const int u = static_cast<int>(system.unknowns.size());
  auto grid_index = [&](const Rational& v) -> int {
    auto it = std::find(grid.begin(), grid.end(), v);
    return it == grid.end() ? -1 : static_cast<int>(it - grid.begin());
  };

  // Eliminate the linear equations: row [a_0 .. a_{u-1} | -c] for sum a x + c = 0.
  std::vector<Poly> linear;
  for (const Poly& eq : system.equations) {
    if (eq.degree() <= 1) linear.push_back(eq);
  }
  Matrix rows = Matrix::Constant(static_cast<Index>(linear.size()), u + 1, Rational(0));
  for (std::size_t r = 0; r < linear.size(); ++r) {
    for (const auto& [m, c] : linear[r].terms()) {
      if (m.empty()) {
        rows(static_cast<Index>(r), u) = -c;
      } else {
        rows(static_cast<Index>(r), m.front()) = c;
      }
    }
  }
  const RowEchelon<Rational> ech = row_reduce<Rational>(rows);
  if (!ech.pivots.empty() && ech.pivots.back() == u) return {};  // inconsistent
  std::vector<bool> is_pivot(static_cast<std::size_t>(u), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> free_vars;
  for (int x = 0; x < u; ++x) {
    if (!is_pivot[static_cast<std::size_t>(x)]) free_vars.push_back(x);
  }

  std::uint64_t combos = 1;
  for (std::size_t f = 0; f < free_vars.size(); ++f) {
    if (grid.empty()) {
      combos = 0;
      break;
    }
    if (combos > budget / grid.size()) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(grid.size()) + "^" + std::to_string(free_vars.size()) +
                                                 " grid points exceed the budget of " + std::to_string(budget));
    }
    combos *= grid.size();
  }
  if (combos > budget) throw Error(ErrorCode::BudgetExceeded, "grid exceeds the budget");
  if (grid.empty() && u > 0) return {};

  std::vector<std::pair<std::vector<int>, Assignment>> found;
  std::vector<std::size_t> odometer(free_vars.size(), 0);
  Assignment values(static_cast<std::size_t>(u));
  for (std::uint64_t step = 0; step < combos; ++step) {
    for (std::size_t f = 0; f < free_vars.size(); ++f) {
      values[static_cast<std::size_t>(free_vars[f])] = grid[odometer[f]];
    }
    bool in_grid = true;
    for (Index r = 0; r < ech.rank && in_grid; ++r) {
      const Index pivot = ech.pivots[static_cast<std::size_t>(r)];
      Rational v = ech.matrix(r, u);
      for (int f : free_vars) {
        if (!ech.matrix(r, f).is_zero()) v -= ech.matrix(r, f) * values[static_cast<std::size_t>(f)];
      }
      in_grid = grid_index(v) >= 0;
      values[static_cast<std::size_t>(pivot)] = std::move(v);
    }
    if (in_grid && std::all_of(system.equations.begin(), system.equations.end(),
                               [&](const Poly& eq) { return eq.evaluate(values).is_zero(); })) {
      std::vector<int> key;
      for (const auto& v : values) key.push_back(grid_index(v));
      found.emplace_back(std::move(key), values);
    }
    for (std::size_t f = free_vars.size(); f-- > 0;) {
      if (++odometer[f] < grid.size()) break;
      odometer[f] = 0;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Assignment> out;
  for (auto& [key, assignment] : found) out.push_back(std::move(assignment));
  return out;
}

FamilySpec with_assignment(const FamilySpec& spec, const Assignment& assignment) {
  const std::vector<BUnknown> unknowns = b_unknowns(spec, BScope::Theorem);
  if (assignment.size() != unknowns.size()) {
    throw Error(ErrorCode::InvalidArgument, "assignment has " + std::to_string(assignment.size()) +
                                                " values for " + std::to_string(unknowns.size()) + " unknowns");
  }
  FamilySpec out = spec;
  out.b.clear();
  for (std::size_t id = 0; id < unknowns.size(); ++id) {
    const BUnknown& u = unknowns[id];
    BValue& value = out.b[u.key];
    if (u.component == 0) {
      value.e = assignment[id];
    } else {
      if (static_cast<int>(value.f.size()) < u.component) value.f.resize(static_cast<std::size_t>(u.component));
      value.f[static_cast<std::size_t>(u.component - 1)] = assignment[id];
    }
  }
  return out;
}

bool verify_solution(const FamilySpec& spec, const Assignment& assignment) {
  return is_associative(p_filiform_family(with_assignment(spec, assignment)));
}

}  // namespace nilalg
