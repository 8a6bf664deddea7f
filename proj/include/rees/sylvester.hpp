#ifndef REES_SYLVESTER_HPP
#define REES_SYLVESTER_HPP

// Sylvester forms and the elimination pipelines built from them.
//
// A Sylvester form of f_1..f_n relative to a_1..a_n (every f_i in the ideal of
// the a_j) is det(A) where f_i = sum_j A_ij a_j. The pipelines below chain
// such forms, starting from the symmetric algebra forms f, g, until a form of
// base degree 0 (the implicit equation) appears.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/poly.hpp"
#include "rees/syzygy.hpp"
#include "rees/text.hpp"

namespace rees {

class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedStratum : public std::invalid_argument {
 public:
  UnsupportedStratum(unsigned d, unsigned mu)
      : std::invalid_argument("unsupported (d, mu) stratum (" + std::to_string(d) + ", " + std::to_string(mu) +
                              "); supported: mu = 1 (any d), (4, 2), (5, 2), (2p, p), (2p+1, p)") {}
};

enum class PipelineCase { Deg4Balanced, Mu1Chain, Deg5Mu2, EvenDeterminant, OddDeterminant };

inline std::string case_name(PipelineCase c) {
  switch (c) {
    case PipelineCase::Deg4Balanced:
      return "deg4-balanced";
    case PipelineCase::Mu1Chain:
      return "mu1-chain";
    case PipelineCase::Deg5Mu2:
      return "deg5-23";
    case PipelineCase::EvenDeterminant:
      return "even-determinant";
    case PipelineCase::OddDeterminant:
      return "odd-determinant";
  }
  return "?";
}

template <class Field>
using PolyMatrix = std::vector<std::vector<Polynomial<Field>>>;

/// One Sylvester form: inputs[i] = sum_j matrix[i][j] * divisors[j], result = det(matrix).
template <class Field>
struct SylvesterStep {
  std::string label;
  std::vector<std::string> input_labels;
  std::vector<Polynomial<Field>> inputs;
  std::vector<Polynomial<Field>> divisors;
  PolyMatrix<Field> matrix;
  Polynomial<Field> result;

  /// Re-multiplies the matrix identity.
  bool verify() const {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      Polynomial<Field> sum(inputs[i].ring());
      for (std::size_t j = 0; j < divisors.size(); ++j) sum += matrix[i][j] * divisors[j];
      if (sum != inputs[i]) return false;
    }
    return true;
  }

  std::string describe() const {
    std::ostringstream out;
    out << label << " = det(";
    for (std::size_t i = 0; i < input_labels.size(); ++i) out << (i ? "," : "") << input_labels[i];
    out << ")_(";
    for (std::size_t j = 0; j < divisors.size(); ++j) out << (j ? "," : "") << to_string(divisors[j]);
    out << ")";
    return out.str();
  }
};

template <class Field>
struct NamedForm {
  std::string label;
  Polynomial<Field> form;
};

template <class Field>
struct EliminationResult {
  PipelineCase kind;
  unsigned degree = 0;
  unsigned mu = 0;
  std::vector<NamedForm<Field>> generators;  // L, in construction order
  Polynomial<Field> implicit_equation;       // F, monic
  std::vector<SylvesterStep<Field>> steps;

  std::vector<Polynomial<Field>> generator_forms() const {
    std::vector<Polynomial<Field>> out;
    for (const auto& g : generators) out.push_back(g.form);
    return out;
  }
};

/// Determinant by cofactor expansion along rows, memoized on the set of used columns.
template <class Field>
Polynomial<Field> determinant(const PolyMatrix<Field>& m, const Ring<Field>& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial<Field>::constant(ring, 1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::map<std::uint32_t, Polynomial<Field>> memo;
  // minor formed by rows [row, n) and the columns not in `used`
  auto minor = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial<Field> {
    if (row == n) return Polynomial<Field>::constant(ring, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial<Field> acc(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        Polynomial<Field> term = m[row][c] * self(self, row + 1, used | (1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0, 0);
}

/// Coefficient matrix of fs over the monomial divisors as: each term goes to the
/// first divisor (in list order) that divides it.
template <class Field>
PolyMatrix<Field> coefficient_matrix(const std::vector<Polynomial<Field>>& fs, const std::vector<Polynomial<Field>>& as) {
  using Term = typename Polynomial<Field>::Term;
  std::vector<Monomial> mons;
  for (const auto& a : as) {
    if (a.size() != 1 || !a.leading_coefficient().is_one()) {
      throw std::invalid_argument("Sylvester divisors must be monomials");
    }
    mons.push_back(a.leading_term().monomial);
  }
  PolyMatrix<Field> m;
  for (const auto& f : fs) {
    std::vector<std::vector<Term>> row(as.size());
    for (const auto& t : f.terms()) {
      std::size_t j = 0;
      while (j < mons.size() && !mons[j].divides(t.monomial)) ++j;
      if (j == mons.size()) throw NotInPairIdeal();
      row[j].push_back({t.monomial / mons[j], t.coeff});
    }
    std::vector<Polynomial<Field>> polys;
    for (auto& r : row) polys.push_back(Polynomial<Field>::from_terms(f.ring(), std::move(r)));
    m.push_back(std::move(polys));
  }
  return m;
}

template <class Field>
Polynomial<Field> basic_sylvester(const Polynomial<Field>& F, const Polynomial<Field>& G, const Polynomial<Field>& u,
                                  const Polynomial<Field>& v, SplitPriority priority = SplitPriority::First) {
  auto [a, b] = divide_by_pair(F, u, v, priority);
  auto [c, d] = divide_by_pair(G, u, v, priority);
  return a * d - b * c;
}

template <class Field>
Polynomial<Field> sylvester_general(const std::vector<Polynomial<Field>>& fs, const std::vector<Polynomial<Field>>& as) {
  if (fs.size() != as.size() || fs.empty()) throw std::invalid_argument("sylvester_general: need n forms and n divisors");
  return determinant(coefficient_matrix(fs, as), fs.front().ring());
}

/// The pairs (s^i, t^(n+1-i)), i = 1..n, whose intersection is (s,t)^n.
template <class Field>
std::vector<std::pair<Polynomial<Field>, Polynomial<Field>>> power_decomposition(unsigned n, const Ring<Field>& ring) {
  if (n < 1) throw std::invalid_argument("power_decomposition: n must be at least 1");
  std::vector<std::pair<Polynomial<Field>, Polynomial<Field>>> out;
  for (unsigned i = 1; i <= n; ++i) {
    out.emplace_back(Polynomial<Field>::variable(ring, "s", i), Polynomial<Field>::variable(ring, "t", n + 1 - i));
  }
  return out;
}

namespace detail {

template <class Field>
class PipelineBuilder {
 public:
  PipelineBuilder(const SymmetricForms<Field>& sf, PipelineCase kind, SplitPriority priority)
      : priority_(priority) {
    result_.kind = kind;
    result_.degree = sf.degree;
    result_.mu = sf.mu;
    add("f", sf.f);
    add("g", sf.g);
  }

  const Ring<Field>& ring() const { return result_.generators.front().form.ring(); }
  const Polynomial<Field>& get(const std::string& label) const { return forms_.at(label); }

  Polynomial<Field> base_monomial(unsigned a, unsigned b) const {
    return Polynomial<Field>::variable(ring(), "s", a) * Polynomial<Field>::variable(ring(), "t", b);
  }

  /// Records label = det(inputs)_(divisors); throws DegenerateInput on a zero
  /// result or a bidegree other than `expected`.
  const Polynomial<Field>& step(const std::string& label, const std::vector<std::string>& inputs,
                                const std::vector<Polynomial<Field>>& divisors, Bidegree expected, bool keep = true) {
    SylvesterStep<Field> s;
    s.label = label;
    s.input_labels = inputs;
    for (const auto& in : inputs) s.inputs.push_back(get(in));
    s.divisors = divisors;
    try {
      if (divisors.size() == 2) {
        auto [a, b] = divide_by_pair(s.inputs[0], divisors[0], divisors[1], priority_);
        auto [c, d] = divide_by_pair(s.inputs[1], divisors[0], divisors[1], priority_);
        s.matrix = {{a, b}, {c, d}};
        s.result = a * d - b * c;
      } else {
        s.matrix = coefficient_matrix(s.inputs, divisors);
        s.result = determinant(s.matrix, ring());
      }
    } catch (const NotInPairIdeal&) {
      throw DegenerateInput(s.describe() + ": an input is not in the ideal of the divisors");
    }
    if (s.result.is_zero()) throw DegenerateInput(s.describe() + " vanishes (non-generic input)");
    if (!is_biform(s.result) || !(bidegree(s.result) == expected)) {
      throw DegenerateInput(s.describe() + " has unexpected bidegree (non-generic input)");
    }
    forms_[label] = s.result;
    if (keep) result_.generators.push_back({label, s.result});
    result_.steps.push_back(std::move(s));
    return forms_[label];
  }

  EliminationResult<Field> finish(const std::string& equation) {
    auto F = get(equation);
    result_.implicit_equation = F.monic();
    for (auto& g : result_.generators) {
      if (g.label == equation) g.form = result_.implicit_equation;
    }
    return std::move(result_);
  }

 private:
  void add(const std::string& label, const Polynomial<Field>& p) {
    forms_[label] = p;
    result_.generators.push_back({label, p});
  }

  SplitPriority priority_;
  EliminationResult<Field> result_;
  std::map<std::string, Polynomial<Field>> forms_;
};

template <class Field>
void require_stratum(const SymmetricForms<Field>& sf, bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": wrong (d, mu) = (" + std::to_string(sf.degree) + ", " +
                                       std::to_string(sf.mu) + ")");
}

}  // namespace detail

/// d = 4, mu = 2: h1 over (s^2, t), h2 over (s, t^2), F = det Theta with [h1 h2] = [s t] Theta.
template <class Field>
EliminationResult<Field> pipeline_deg4_balanced(const SymmetricForms<Field>& sf,
                                                SplitPriority priority = SplitPriority::First) {
  detail::require_stratum(sf, sf.degree == 4 && sf.mu == 2, "pipeline_deg4_balanced");
  detail::PipelineBuilder<Field> b(sf, PipelineCase::Deg4Balanced, priority);
  b.step("h1", {"f", "g"}, {b.base_monomial(2, 0), b.base_monomial(0, 1)}, {1, 2});
  b.step("h2", {"f", "g"}, {b.base_monomial(1, 0), b.base_monomial(0, 2)}, {1, 2});
  b.step("F", {"h1", "h2"}, {b.base_monomial(1, 0), b.base_monomial(0, 1)}, {0, 4});
  return b.finish("F");
}

/// mu = 1: h1 = det(f,g), h_{i+1} = det(f,h_i), all over (s,t); h_{d-1} is the equation.
template <class Field>
EliminationResult<Field> pipeline_mu1_chain(const SymmetricForms<Field>& sf,
                                            SplitPriority priority = SplitPriority::First) {
  detail::require_stratum(sf, sf.mu == 1 && sf.degree >= 2, "pipeline_mu1_chain");
  detail::PipelineBuilder<Field> b(sf, PipelineCase::Mu1Chain, priority);
  unsigned d = sf.degree;
  auto s = b.base_monomial(1, 0), t = b.base_monomial(0, 1);
  std::string prev = "g";
  for (unsigned i = 1; i <= d - 1; ++i) {
    std::string label = "h" + std::to_string(i);
    b.step(label, {"f", prev}, {s, t}, {d - 1 - i, i + 1});
    prev = label;
  }
  return b.finish(prev);
}

/// d = 5, mu = 2: h1 over (s^2,t), h2 over (s,t^2), c1, c2 from [f; h1], c3, c4 from
/// [f; h2], and F = det of [f; h1; h2] over (s^2, st, t^2). c3 coincides with c2.
template <class Field>
EliminationResult<Field> pipeline_deg5_23(const SymmetricForms<Field>& sf,
                                          SplitPriority priority = SplitPriority::First) {
  detail::require_stratum(sf, sf.degree == 5 && sf.mu == 2, "pipeline_deg5_23");
  detail::PipelineBuilder<Field> b(sf, PipelineCase::Deg5Mu2, priority);
  auto s2_t = std::vector{b.base_monomial(2, 0), b.base_monomial(0, 1)};
  auto s_t2 = std::vector{b.base_monomial(1, 0), b.base_monomial(0, 2)};
  b.step("h1", {"f", "g"}, s2_t, {2, 2});
  b.step("h2", {"f", "g"}, s_t2, {2, 2});
  b.step("c1", {"f", "h1"}, s2_t, {1, 3});
  const auto& c2 = b.step("c2", {"f", "h1"}, s_t2, {1, 3});
  const auto& c3 = b.step("c3", {"f", "h2"}, s2_t, {1, 3}, false);
  if (c3 != c2 && priority == SplitPriority::First) throw std::logic_error("pipeline_deg5_23: c3 differs from c2");
  b.step("c4", {"f", "h2"}, s_t2, {1, 3});
  b.step("F", {"f", "h1", "h2"}, {b.base_monomial(2, 0), b.base_monomial(1, 1), b.base_monomial(0, 2)}, {0, 5});
  return b.finish("F");
}

/// d = 2p, mu = p: h_i over (s^i, t^(p+1-i)), F = det A with [h_1..h_p] = [s^(p-1)..t^(p-1)] A.
template <class Field>
EliminationResult<Field> pipeline_even(const SymmetricForms<Field>& sf, SplitPriority priority = SplitPriority::First) {
  detail::require_stratum(sf, sf.degree % 2 == 0 && 2 * sf.mu == sf.degree && sf.mu >= 1, "elimination_even");
  unsigned p = sf.mu;
  detail::PipelineBuilder<Field> b(sf, PipelineCase::EvenDeterminant, priority);
  std::vector<std::string> hs;
  for (unsigned i = 1; i <= p; ++i) {
    hs.push_back("h" + std::to_string(i));
    b.step(hs.back(), {"f", "g"}, {b.base_monomial(i, 0), b.base_monomial(0, p + 1 - i)}, {p - 1, 2});
  }
  std::vector<Polynomial<Field>> row;
  for (unsigned i = p; i-- > 0;) row.push_back(b.base_monomial(i, p - 1 - i));
  b.step("F", hs, row, {0, 2 * p});
  return b.finish("F");
}

/// d = 2p+1, mu = p: h_i as in the even case, F = det B with [f, h_1..h_p] = [s^p..t^p] B.
template <class Field>
EliminationResult<Field> pipeline_odd(const SymmetricForms<Field>& sf, SplitPriority priority = SplitPriority::First) {
  detail::require_stratum(sf, sf.degree % 2 == 1 && 2 * sf.mu + 1 == sf.degree && sf.mu >= 1, "elimination_odd");
  unsigned p = sf.mu;
  detail::PipelineBuilder<Field> b(sf, PipelineCase::OddDeterminant, priority);
  std::vector<std::string> rows{"f"};
  for (unsigned i = 1; i <= p; ++i) {
    rows.push_back("h" + std::to_string(i));
    b.step(rows.back(), {"f", "g"}, {b.base_monomial(i, 0), b.base_monomial(0, p + 1 - i)}, {p, 2});
  }
  std::vector<Polynomial<Field>> row;
  for (unsigned i = p + 1; i-- > 0;) row.push_back(b.base_monomial(i, p - i));
  b.step("F", rows, row, {0, 2 * p + 1});
  return b.finish("F");
}

template <class Field>
Polynomial<Field> elimination_even(const SymmetricForms<Field>& sf, unsigned p) {
  if (sf.mu != p) throw std::invalid_argument("elimination_even: mu differs from p");
  return pipeline_even(sf).implicit_equation;
}

template <class Field>
Polynomial<Field> elimination_odd(const SymmetricForms<Field>& sf, unsigned p) {
  if (sf.mu != p) throw std::invalid_argument("elimination_odd: mu differs from p");
  return pipeline_odd(sf).implicit_equation;
}

/// Chooses the pipeline for the (d, mu) stratum of sf.
template <class Field>
EliminationResult<Field> implicitize(const SymmetricForms<Field>& sf) {
  unsigned d = sf.degree, mu = sf.mu;
  if (mu == 1) return pipeline_mu1_chain(sf);
  if (d == 4 && mu == 2) return pipeline_deg4_balanced(sf);
  if (d == 5 && mu == 2) return pipeline_deg5_23(sf);
  if (d == 2 * mu) return pipeline_even(sf);
  if (d == 2 * mu + 1) return pipeline_odd(sf);
  throw UnsupportedStratum(d, mu);
}

template <class Field>
EliminationResult<Field> implicitize(const Polynomial<Field>& f1, const Polynomial<Field>& f2,
                                     const Polynomial<Field>& f3) {
  return implicitize(symmetric_algebra_forms(mu_basis(f1, f2, f3)));
}

/// F(f1, f2, f3), computed in f's ring.
template <class Field>
Polynomial<Field> evaluate_on_parametrization(const Polynomial<Field>& F, const std::array<Polynomial<Field>, 3>& fs) {
  auto T = fiber_indices(F.ring());
  std::map<std::string, Polynomial<Field>> at;
  for (std::size_t i = 0; i < 3; ++i) at.emplace(F.ring()->name(T[i]), fs[i].in_ring(F.ring()));
  return evaluate(F, at);
}

}  // namespace rees

#endif  // REES_SYLVESTER_HPP
