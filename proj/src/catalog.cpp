#include "nilalg/catalog.hpp"

#include "nilalg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nilalg {

namespace {

Error invalid(const std::string& why) { return Error(ErrorCode::InvalidFamily, why); }

std::vector<std::string> e_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

// e_i e_j = e_{i+j} for 2 <= i + j <= top.
void add_chain(ProductTable& table, int top) {
  for (int i = 1; i < top; ++i) {
    for (int j = 1; i + j <= top; ++j) table[{i, j}] = {{i + j, Rational(1)}};
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::NullFiliform: return "null";
    case Family::Filiform: return "filiform";
    case Family::QuasiFiliform: return "quasi";
    case Family::DegreeP: return "degree-p";
    case Family::PFiliformGraded: return "p-filiform";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::NullFiliform, Family::Filiform, Family::QuasiFiliform, Family::DegreeP,
                   Family::PFiliformGraded}) {
    if (to_string(f) == name) return f;
  }
  throw invalid("unknown family '" + name + "' (expected null, filiform, quasi, degree-p, p-filiform)");
}

PFiliformLayout::PFiliformLayout(int n, int p, std::vector<int> s) : n_(n), p_(p), m_(n - p), s_(std::move(s)) {
  if (p < 0 || m_ < 1) throw invalid("p-filiform family needs 0 <= p < n");
  if (static_cast<int>(s_.size()) > m_) {
    throw invalid("s-profile has " + std::to_string(s_.size()) + " entries, at most n-p = " + std::to_string(m_) + " allowed");
  }
  s_.resize(static_cast<std::size_t>(m_), 0);
}

int PFiliformLayout::prefix(int k) const {
  int total = 0;
  for (int i = 1; i <= k && i <= m_; ++i) total += s(i);
  return total;
}

std::vector<int> PFiliformLayout::degrees() const {
  std::vector<int> deg;
  for (int i = 1; i <= m_; ++i) deg.push_back(i);
  for (int k = 1; k <= m_; ++k) deg.insert(deg.end(), static_cast<std::size_t>(s(k)), k);
  return deg;
}

std::vector<std::string> PFiliformLayout::labels() const {
  std::vector<std::string> labels = e_labels(m_);
  for (int q = 1; q <= p_; ++q) labels.push_back("f" + std::to_string(q));
  return labels;
}

std::vector<std::pair<int, int>> PFiliformLayout::b_index_pairs(int k, int t) const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = s(k + 2) + 1; i <= s(k + 1); ++i) {
    for (int j = s(t + 2) + 1; j <= s(t + 1); ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

void validate(const FamilySpec& spec) {
  const bool has_pfil_fields = !spec.s.empty() || !spec.b.empty();
  if (spec.family != Family::PFiliformGraded && has_pfil_fields) {
    throw invalid("s-profile and b-coefficients apply to the p-filiform family only");
  }
  if (spec.alpha && !(spec.family == Family::QuasiFiliform && spec.variant == 2)) {
    throw invalid("alpha applies to the quasi-filiform variant 2 only");
  }
  switch (spec.family) {
    case Family::NullFiliform:
      if (spec.n < 1) throw invalid("null-filiform needs n >= 1");
      return;
    case Family::Filiform:
      if (spec.n <= 3) throw invalid("filiform needs n > 3");
      if (spec.variant < 1 || spec.variant > 4) throw invalid("filiform variant must be 1..4");
      return;
    case Family::QuasiFiliform:
      if (spec.n <= 5) throw invalid("quasi-filiform needs n > 5");
      if (spec.variant < 1 || spec.variant > 4) throw invalid("quasi-filiform variant must be 1..4");
      if (spec.variant == 2 && !spec.alpha) throw invalid("quasi-filiform variant 2 needs alpha");
      return;
    case Family::DegreeP:
      if (spec.p < 0 || spec.n <= spec.p + 2) throw invalid("degree-p filiform needs 0 <= p and n > p + 2");
      return;
    case Family::PFiliformGraded: break;
  }

  const PFiliformLayout layout(spec.n, spec.p, spec.s);
  const int m = layout.chain_length();
  for (int i = 1; i <= m; ++i) {
    if (layout.s(i) < 0) throw invalid("s-profile entries must be non-negative");
    if (i > 1 && layout.s(i) > layout.s(i - 1)) throw invalid("s-profile must be non-increasing");
  }
  if (layout.prefix(m) != spec.p) throw invalid("s-profile must sum to p = " + std::to_string(spec.p));
  if (layout.s(1) < 1) throw invalid("s-profile needs s_1 >= 1");
  if (layout.s(1) >= spec.p) throw invalid("s-profile needs s_1 < p");
  for (const auto& [key, value] : spec.b) {
    const auto [i, j, k, t] = key;
    if (k < 1 || t < 1 || k + t != m - 2) {
      throw invalid("b-coefficient (k,t) = (" + std::to_string(k) + "," + std::to_string(t) +
                    ") must satisfy k, t >= 1 and k + t = n - p - 2");
    }
    if (i <= layout.s(k + 2) || i > layout.s(k + 1) || j <= layout.s(t + 2) || j > layout.s(t + 1)) {
      throw invalid("b-coefficient index (i,j) = (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside s_{k+2} < i <= s_{k+1}, s_{t+2} < j <= s_{t+1}");
    }
    if (static_cast<int>(value.f.size()) > layout.s(m)) {
      throw invalid("b-coefficient has more f-components than s_{n-p} = " + std::to_string(layout.s(m)));
    }
  }
}

Algebra build(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::NullFiliform: return null_filiform(spec.n);
    case Family::Filiform: return filiform_variant(spec.n, spec.variant);
    case Family::QuasiFiliform: return quasi_filiform_variant(spec.n, spec.variant, spec.alpha);
    case Family::DegreeP: return degree_p_filiform(spec.n, spec.p);
    case Family::PFiliformGraded: return p_filiform_family(spec);
  }
  throw invalid("unknown family");
}

std::string describe(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::NullFiliform: return "mu_0^" + std::to_string(spec.n);
    case Family::Filiform: return "mu_{1," + std::to_string(spec.variant) + "}^" + std::to_string(spec.n);
    case Family::QuasiFiliform: {
      std::string out = "mu_{2," + std::to_string(spec.variant) + "}^" + std::to_string(spec.n);
      if (spec.alpha) out += "(" + spec.alpha->str() + ")";
      return out;
    }
    case Family::DegreeP:
      return "mu_0^" + std::to_string(spec.n - spec.p) + "+F^" + std::to_string(spec.p);
    case Family::PFiliformGraded: {
      const PFiliformLayout layout(spec.n, spec.p, spec.s);
      std::string out = "pfil(n=" + std::to_string(spec.n) + ",p=" + std::to_string(spec.p) + ",s=(" +
                        join_ints(layout.profile()) + ")";
      if (!spec.b.empty()) out += ",b=" + std::to_string(spec.b.size());
      return out + ")";
    }
  }
  return "?";
}

Algebra zero_algebra(int n) {
  if (n < 0) throw invalid("dimension must be non-negative");
  return make_algebra(n, {}, e_labels(n));
}

Algebra null_filiform(int n) {
  if (n < 1) throw invalid("null-filiform needs n >= 1");
  ProductTable table;
  add_chain(table, n);
  return make_algebra(n, table, e_labels(n));
}

Algebra filiform_variant(int n, int variant) {
  FamilySpec spec{Family::Filiform, n, 0, variant, std::nullopt, {}, {}};
  validate(spec);
  ProductTable table;
  add_chain(table, n - 1);
  if (variant == 2 || variant == 4) table[{n, n}] = {{n - 1, Rational(1)}};
  if (variant == 3 || variant == 4) table[{1, n}] = {{n - 1, Rational(1)}};
  return make_algebra(n, table, e_labels(n));
}

Algebra quasi_filiform_variant(int n, int variant, std::optional<Rational> alpha) {
  FamilySpec spec{Family::QuasiFiliform, n, 0, variant, alpha, {}, {}};
  validate(spec);
  ProductTable table;
  add_chain(table, n - 2);
  const int a = n - 1;
  switch (variant) {
    case 1:
      table[{a, 1}] = {{n, Rational(1)}};
      break;
    case 2:
      table[{1, a}] = {{n, Rational(1)}};
      if (!alpha->is_zero()) table[{a, 1}] = {{n, *alpha}};
      break;
    case 3:
      table[{1, a}] = {{n, Rational(1)}};
      table[{a, 1}] = {{n, Rational(1)}};
      table[{a, a}] = {{n, Rational(1)}};
      break;
    case 4:
      table[{1, a}] = {{n, Rational(1)}};
      table[{a, a}] = {{n, Rational(1)}};
      break;
    default: break;
  }
  return make_algebra(n, table, e_labels(n));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const int shift = a.dim();
  ProductTable table = a.products();
  for (const auto& [key, terms] : b.products()) {
    std::vector<Term> shifted;
    for (const Term& t : terms) shifted.push_back({t.index + shift, t.coeff});
    table[{key.first + shift, key.second + shift}] = std::move(shifted);
  }
  // A zero-dimensional summand has nothing to label and keeps the other's labels.
  auto labelled = [](const Algebra& x) { return x.has_labels() || x.dim() == 0; };
  std::vector<std::string> labels;
  if (labelled(a) && labelled(b)) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size()) labels.clear();
  }
  return make_algebra(a.dim() + b.dim(), table, std::move(labels));
}

Algebra degree_p_filiform(int n, int p) {
  validate(FamilySpec{Family::DegreeP, n, p, 1, std::nullopt, {}, {}});
  const Algebra sum = direct_sum(null_filiform(n - p), zero_algebra(p));
  std::vector<std::string> labels = e_labels(n - p);
  for (int q = 1; q <= p; ++q) labels.push_back("f" + std::to_string(q));
  return make_algebra(n, sum.products(), std::move(labels));
}

Algebra p_filiform_family(const FamilySpec& spec) {
  if (spec.family != Family::PFiliformGraded) throw invalid("p_filiform_family needs the p-filiform family");
  validate(spec);
  const PFiliformLayout layout(spec.n, spec.p, spec.s);
  const int m = layout.chain_length();
  ProductTable table;
  add_chain(table, m);
  // f_{S_k+i} e_j = f_{S_{k+j}+i} for 1 <= i <= s_{k+j+1}; k starts at 0 so
  // that the f-vectors of A_1 generate the higher blocks.
  for (int k = 0; k <= m - 2; ++k) {
    for (int j = 1; j <= m - k; ++j) {
      for (int i = 1; i <= layout.s(k + j + 1); ++i) {
        table[{layout.f(layout.prefix(k) + i), layout.e(j)}] = {{layout.f(layout.prefix(k + j) + i), Rational(1)}};
      }
    }
  }
  for (const auto& [key, value] : spec.b) {
    std::vector<Term> terms;
    if (!value.e.is_zero()) terms.push_back({layout.e(m), value.e});
    for (std::size_t l = 0; l < value.f.size(); ++l) {
      if (!value.f[l].is_zero()) {
        terms.push_back({layout.f(layout.prefix(m - 1) + static_cast<int>(l) + 1), value.f[l]});
      }
    }
    if (terms.empty()) continue;
    table[{layout.f(layout.prefix(key.k) + key.i), layout.f(layout.prefix(key.t) + key.j)}] = std::move(terms);
  }
  return make_algebra(spec.n, table, layout.labels());
}

std::vector<FamilySpec> p_filiform_shapes(int n) {
  std::vector<FamilySpec> out;
  for (int p = 2; p <= n - 2; ++p) {
    const int m = n - p;
    // Non-increasing profiles of p with at most m parts, largest part < p.
    std::vector<int> current;
    auto extend = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        FamilySpec spec{Family::PFiliformGraded, n, p, 1, std::nullopt, current, {}};
        spec.s.resize(static_cast<std::size_t>(m), 0);
        out.push_back(std::move(spec));
        return;
      }
      if (static_cast<int>(current.size()) == m) return;
      for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        self(self, remaining - part, part);
        current.pop_back();
      }
    };
    extend(extend, p, p - 1);
  }
  return out;
}

Algebra excluded_jordan_form(int n, int p) {
  const int m = n - p;
  if (p < 1 || m < 3) throw invalid("excluded Jordan form needs p >= 1 and n - p >= 3");
  ProductTable table;
  for (int i = 2; i <= m - 1; ++i) table[{1, i}] = {{i + 1, Rational(1)}};
  table[{1, m}] = {{m + 1, Rational(1)}};
  std::vector<std::string> labels = e_labels(m);
  for (int q = 1; q <= p; ++q) labels.push_back("f" + std::to_string(q));
  return make_algebra(n, table, std::move(labels));
}

}  // namespace nilalg
