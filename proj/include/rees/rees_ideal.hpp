#ifndef REES_REES_IDEAL_HPP
#define REES_REES_IDEAL_HPP

// The defining ideal of the Rees algebra as a saturation of the symmetric
// algebra ideal (f, g), verification of Sylvester candidates against it,
// reduction numbers, and the Cohen-Macaulay tests.

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/groebner.hpp"
#include "rees/linalg.hpp"
#include "rees/sylvester.hpp"
#include "rees/syzygy.hpp"

namespace rees {

enum class SaturatingElement { S, T, RandomLinear, FirstForm };

template <class Field>
Polynomial<Field> saturating_polynomial(const SymmetricForms<Field>& sf, SaturatingElement which,
                                        std::uint64_t seed = 1) {
  const auto& ring = sf.ring();
  switch (which) {
    case SaturatingElement::S:
      return Polynomial<Field>::variable(ring, "s");
    case SaturatingElement::T:
      return Polynomial<Field>::variable(ring, "t");
    case SaturatingElement::RandomLinear: {
      std::mt19937_64 rng(seed);
      while (true) {
        auto a = ring->field().random(rng), b = ring->field().random(rng);
        if (a.is_zero() || b.is_zero()) continue;
        return Polynomial<Field>::variable(ring, "s").scaled(a) + Polynomial<Field>::variable(ring, "t").scaled(b);
      }
    }
    case SaturatingElement::FirstForm:
      return parametrization(sf)[0];
  }
  throw std::logic_error("saturating_polynomial");
}

/// M = (f, g) : x^infinity. I is (s,t)-primary, so any x in (s,t) gives the same ideal.
template <class Field>
Ideal<Field> rees_ideal_oracle(const SymmetricForms<Field>& sf, SaturatingElement which = SaturatingElement::S) {
  Ideal<Field> sym(sf.ring(), {sf.f, sf.g});
  return saturate(sym, saturating_polynomial(sf, which));
}

template <class Field>
bool verify_candidate(const EliminationResult<Field>& result, const Ideal<Field>& oracle) {
  return ideal_equal(Ideal<Field>(oracle.ring(), result.generator_forms()), oracle);
}

template <class Field>
bool verify_candidate(const EliminationResult<Field>& result, const SymmetricForms<Field>& sf) {
  return verify_candidate(result, rees_ideal_oracle(sf));
}

/// Irreducible implicit equation from the oracle: the generator of M intersected with k[T].
template <class Field>
Polynomial<Field> implicit_equation_by_elimination(const Ideal<Field>& oracle) {
  auto cut = eliminate(oracle, oracle.ring()->mask(Block::Base));
  if (cut.generators().size() != 1) throw std::logic_error("elimination ideal is not principal");
  return cut.generators()[0].monic();
}

/// Least-degree form in T1, T2, T3 vanishing on (f1, f2, f3), by linear algebra on
/// the coefficients of its pullback. Works in any ring with base {s,t} and a 3-variable fiber block.
template <class Field>
Polynomial<Field> implicit_equation_by_interpolation(const std::array<Polynomial<Field>, 3>& fs,
                                                     const Ring<Field>& ring) {
  unsigned d = fs[0].total_degree();
  auto T = fiber_indices(ring);
  const Field& field = ring->field();
  for (unsigned k = 1; k <= d; ++k) {
    std::vector<Monomial> mons;
    for (unsigned a = k + 1; a-- > 0;) {
      for (unsigned b = k - a + 1; b-- > 0;) {
        Monomial m;
        m.set(T[0], a);
        m.set(T[1], b);
        m.set(T[2], k - a - b);
        mons.push_back(m);
      }
    }
    DenseMatrix<Field> matrix(field, k * d + 1, mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      auto value = Polynomial<Field>::constant(ring, 1);
      for (std::size_t i = 0; i < 3; ++i) value *= fs[i].in_ring(ring).pow(mons[j][T[i]]);
      auto v = base_coefficient_vector(value, k * d);
      for (std::size_t r = 0; r < v.size(); ++r) matrix(r, j) = v[r];
    }
    auto kernel = row_space_basis(field, mons.size(), matrix.kernel());
    if (kernel.empty()) continue;
    if (kernel.size() > 1) throw std::logic_error("implicit equation is not unique in its degree");
    std::vector<typename Polynomial<Field>::Term> terms;
    for (std::size_t j = 0; j < mons.size(); ++j) terms.push_back({mons[j], kernel[0][j]});
    return Polynomial<Field>::from_terms(ring, std::move(terms)).monic();
  }
  throw std::logic_error("no implicit equation of degree <= d");
}

// ---------------------------------------------------------------------------
// Reduction numbers

class ReductionCapExceeded : public std::runtime_error {
 public:
  explicit ReductionCapExceeded(unsigned cap)
      : std::runtime_error("J not a reduction (no r <= " + std::to_string(cap) + " with I^(r+1) = J I^r)") {}
};

namespace detail {

/// Generators of I^(r+1) from those of I^r, as products over non-decreasing index sequences.
template <class Field>
struct PowerGenerators {
  std::vector<Polynomial<Field>> base;
  std::vector<Polynomial<Field>> current;  // generators of I^r
  std::vector<std::size_t> last;           // largest factor index used in each generator
  unsigned r = 0;

  explicit PowerGenerators(std::vector<Polynomial<Field>> gens, const Ring<Field>& ring) : base(std::move(gens)) {
    current.push_back(Polynomial<Field>::constant(ring, 1));
    last.push_back(0);
  }

  std::pair<std::vector<Polynomial<Field>>, std::vector<std::size_t>> next() const {
    std::vector<Polynomial<Field>> out;
    std::vector<std::size_t> out_last;
    for (std::size_t k = 0; k < current.size(); ++k) {
      for (std::size_t i = last[k]; i < base.size(); ++i) {
        out.push_back(current[k] * base[i]);
        out_last.push_back(i);
      }
    }
    return {out, out_last};
  }

  void advance() {
    auto [gens, l] = next();
    current = std::move(gens);
    last = std::move(l);
    ++r;
  }
};

}  // namespace detail

/// Least r with I^(r+1) contained in J I^r. Searches up to `cap` (default 2d),
/// then up to d^2 (the multiplicity bound) before giving up.
template <class Field>
unsigned reduction_number(const std::vector<Polynomial<Field>>& ideal, const std::vector<Polynomial<Field>>& reduction,
                          std::optional<unsigned> cap = std::nullopt, bool* used_fallback = nullptr) {
  if (ideal.empty() || reduction.empty()) throw std::invalid_argument("reduction_number: empty ideal");
  const Ring<Field>& ring = ideal.front().ring();
  unsigned d = ideal.front().total_degree();
  unsigned first_cap = cap.value_or(2 * d);
  unsigned hard_cap = std::max(first_cap, d * d);
  if (used_fallback) *used_fallback = false;

  Ideal<Field> I(ring, ideal);
  for (const auto& a : reduction) {
    if (!I.contains(a)) throw std::invalid_argument("reduction_number: J is not contained in I");
  }
  detail::PowerGenerators<Field> powers(ideal, ring);
  for (unsigned r = 0; r <= hard_cap; ++r) {
    if (r > first_cap && used_fallback) *used_fallback = true;
    std::vector<Polynomial<Field>> jr;
    for (const auto& a : reduction) {
      for (const auto& m : powers.current) jr.push_back(a * m);
    }
    Ideal<Field> JIr(ring, std::move(jr));
    auto [higher, unused] = powers.next();
    bool ok = true;
    for (const auto& g : higher) {
      if (!JIr.contains(g)) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
    powers.advance();
  }
  throw ReductionCapExceeded(hard_cap);
}

/// Two random k-combinations of the forms with gcd 1 (a minimal reduction of I).
template <class Field, class Rng>
std::array<Polynomial<Field>, 2> minimal_reduction(const std::array<Polynomial<Field>, 3>& fs, Rng& rng,
                                                   unsigned attempts = 20) {
  const Field& field = fs[0].field();
  auto combo = [&] {
    Polynomial<Field> out(fs[0].ring());
    for (const auto& f : fs) out += f.scaled(field.random(rng));
    return out;
  };
  for (unsigned i = 0; i < attempts; ++i) {
    auto a = combo(), b = combo();
    if (a.is_zero() || b.is_zero()) continue;
    if (gcd_binary_forms(a, b).is_constant()) return {a, b};
  }
  throw std::runtime_error("could not draw a regular pair from the input forms");
}

// ---------------------------------------------------------------------------
// Cohen-Macaulayness

template <class Field>
std::array<std::vector<Polynomial<Field>>, 2> column_contents(const HilbertBurchMatrix<Field>& phi) {
  std::array<std::vector<Polynomial<Field>>, 2> out;
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& c = phi.column(j);
    out[j] = minimal_generators<Field>({c[0], c[1], c[2]});
  }
  return out;
}

/// Both column contents equal one 2-generated ideal.
template <class Field>
bool is_rees_cm(const HilbertBurchMatrix<Field>& phi) {
  auto contents = column_contents(phi);
  if (contents[0].size() != 2 || contents[1].size() != 2) return false;
  const auto& ring = contents[0][0].ring();
  return ideal_equal(Ideal<Field>(ring, contents[0]), Ideal<Field>(ring, contents[1]));
}

class InconsistentVerdict : public std::logic_error {
 public:
  explicit InconsistentVerdict(const std::string& what) : std::logic_error(what) {}
};

struct CmVerdict {
  bool cm = false;
  unsigned reduction_number = 0;
  unsigned attempts = 0;
};

/// Content criterion checked against r_J(I) <= 1 for a random minimal reduction J.
template <class Field, class Rng>
CmVerdict cm_cross_check(const std::array<Polynomial<Field>, 3>& fs, Rng& rng) {
  bool content_cm = is_rees_cm(mu_basis(fs[0], fs[1], fs[2]));
  std::vector<Polynomial<Field>> I(fs.begin(), fs.end());
  for (unsigned attempt = 1; attempt <= 5; ++attempt) {
    auto J = minimal_reduction(fs, rng);
    try {
      unsigned r = reduction_number<Field>(I, {J[0], J[1]});
      if (content_cm != (r <= 1)) {
        throw InconsistentVerdict("content criterion says " + std::string(content_cm ? "CM" : "not CM") +
                                  " but the reduction number is " + std::to_string(r));
      }
      return {content_cm, r, attempt};
    } catch (const ReductionCapExceeded&) {
      continue;
    }
  }
  throw std::runtime_error("cm_cross_check: no reduction found in 5 attempts");
}

}  // namespace rees

#endif  // REES_REES_IDEAL_HPP
