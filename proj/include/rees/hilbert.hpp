#ifndef REES_HILBERT_HPP
#define REES_HILBERT_HPP

// Multiplicity and first Hilbert coefficient of I = (f1, f2, f3) in k[s,t],
// and the birationality test e1(I) = e1(m^d).

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "rees/groebner.hpp"
#include "rees/rees_ideal.hpp"
#include "rees/syzygy.hpp"

namespace rees {

struct HilbertCoefficients {
  unsigned e0 = 0;
  long e1 = 0;
  unsigned r = 0;        // reduction number of I' = I/(a1) with respect to a2
  std::size_t length = 0;  // lambda(R/((a1) + I^r))
};

struct BirationalityVerdict {
  bool birational = false;
  long e1 = 0;
  long e1_power = 0;
  std::optional<unsigned> implicit_degree;
  std::optional<unsigned> map_degree;
};

/// e1(m^d) for m the maximal ideal of a polynomial ring in n variables.
inline long e1_power_of_maximal(long d, long n) {
  if (d < 1 || n < 1) throw std::invalid_argument("e1_power_of_maximal: need d, n >= 1");
  long dn = 1;
  for (long i = 0; i < n - 1; ++i) dn *= d;  // d^(n-1)
  return (n - 1) * (dn * d - dn) / 2;
}

namespace detail {

template <class Field>
std::array<Polynomial<Field>, 3> to_base_ring(const std::array<Polynomial<Field>, 3>& fs) {
  auto base = make_base_ring(fs[0].field());
  std::array<Polynomial<Field>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!fs[i].uses_only(fs[i].ring()->mask(Block::Base))) {
      throw InvalidParametrization("forms must be in s, t only");
    }
    out[i] = fs[i].in_ring(base);
  }
  check_forms(out);
  if (!gcd_binary_forms(gcd_binary_forms(out[0], out[1]), out[2]).is_constant()) {
    throw InvalidParametrization("base ideal has codimension < 2 (forms share a common factor)");
  }
  return out;
}

}  // namespace detail

template <class Field>
unsigned e0(const std::array<Polynomial<Field>, 3>& forms, std::uint64_t seed = 1) {
  auto fs = detail::to_base_ring(forms);
  std::mt19937_64 rng(seed);
  auto J = minimal_reduction(fs, rng);
  auto len = quotient_dimension(Ideal<Field>(J[0].ring(), {J[0], J[1]}));
  unsigned d = fs[0].total_degree();
  if (len != d * d) throw std::logic_error("e0: lambda(R/J) != d^2");
  return static_cast<unsigned>(len);
}

/// e1 = e0 r - lambda(R/((a1) + I^r)), r the least integer with I^(r+1) in (a1) + a2 I^r.
template <class Field>
HilbertCoefficients e1(const std::array<Polynomial<Field>, 3>& forms, std::uint64_t seed = 1) {
  auto fs = detail::to_base_ring(forms);
  const auto& ring = fs[0].ring();
  unsigned d = fs[0].total_degree();
  std::mt19937_64 rng(seed);
  auto J = minimal_reduction(fs, rng);
  const auto& a1 = J[0];
  const auto& a2 = J[1];

  HilbertCoefficients out;
  out.e0 = static_cast<unsigned>(quotient_dimension(Ideal<Field>(ring, {a1, a2})));
  if (out.e0 != d * d) throw std::logic_error("e1: lambda(R/J) != d^2");

  detail::PowerGenerators<Field> powers({fs.begin(), fs.end()}, ring);
  unsigned cap = d * d;
  for (unsigned r = 0;; ++r) {
    if (r > cap) throw ReductionCapExceeded(cap);
    std::vector<Polynomial<Field>> gens{a1};
    for (const auto& m : powers.current) gens.push_back(a2 * m);
    Ideal<Field> target(ring, std::move(gens));
    auto [higher, unused] = powers.next();
    bool ok = true;
    for (const auto& g : higher) {
      if (!target.contains(g)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<Polynomial<Field>> quotient{a1};
      quotient.insert(quotient.end(), powers.current.begin(), powers.current.end());
      out.r = r;
      out.length = quotient_dimension(Ideal<Field>(ring, std::move(quotient)));
      out.e1 = static_cast<long>(out.e0) * r - static_cast<long>(out.length);
      return out;
    }
    powers.advance();
  }
}

/// Image of a rational polynomial in GF(p) (same variable names). Throws DivisionByZero
/// when p divides a denominator.
inline Polynomial<PrimeField> reduce_mod(const Polynomial<RationalField>& f, const Ring<PrimeField>& target) {
  std::vector<Polynomial<PrimeField>::Term> terms;
  for (const auto& t : f.terms()) {
    terms.push_back({t.monomial, reduce_mod(t.coeff, target->field())});
  }
  return Polynomial<PrimeField>::from_terms(target, std::move(terms));
}

struct CheckedE1 {
  HilbertCoefficients exact;
  unsigned prime = 0;
  unsigned unlucky_primes = 0;
};

/// Exact e1 over Q, confirmed by a modular run; a disagreeing prime is skipped.
inline CheckedE1 e1_checked(const std::array<Polynomial<RationalField>, 3>& fs, std::uint64_t seed = 1,
                            unsigned prime = 32003) {
  CheckedE1 out;
  out.exact = e1(fs, seed);
  for (unsigned p = prime;; p = next_prime(p + 1)) {
    if (out.unlucky_primes > 8) throw std::runtime_error("e1_checked: no agreeing prime");
    auto ring = make_base_ring(PrimeField(p));
    try {
      std::array<Polynomial<PrimeField>, 3> red;
      for (std::size_t i = 0; i < 3; ++i) red[i] = reduce_mod(fs[i], ring);
      if (e1(red, seed).e1 == out.exact.e1) {
        out.prime = p;
        return out;
      }
    } catch (const DivisionByZero&) {
    } catch (const InvalidParametrization&) {
    }
    ++out.unlucky_primes;
  }
}

/// Number of preimages of a general image point: deg gcd_i (c_k f_i - c_i f_k) for c = f(P).
template <class Field>
unsigned map_degree_by_fiber(const std::array<Polynomial<Field>, 3>& forms, std::uint64_t seed = 1) {
  auto fs = detail::to_base_ring(forms);
  const auto& ring = fs[0].ring();
  const Field& field = ring->field();
  std::mt19937_64 rng(seed);
  std::optional<unsigned> best;
  for (int attempt = 0; attempt < 12 && !(best && attempt >= 3); ++attempt) {
    std::vector<typename Field::value_type> point{field.random(rng), field.one()};
    std::array<typename Field::value_type, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = evaluate_at(fs[i], point);
    std::size_t k = 0;
    while (k < 3 && c[k].is_zero()) ++k;
    if (k == 3) continue;
    Polynomial<Field> g(ring);
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == k) continue;
      auto h = fs[i].scaled(c[k]) - fs[k].scaled(c[i]);
      g = g.is_zero() ? h : (h.is_zero() ? g : gcd_binary_forms(g, h));
    }
    if (g.is_zero()) continue;
    unsigned deg = g.total_degree();
    if (!best || deg < *best) best = deg;
  }
  if (!best) throw std::runtime_error("map_degree_by_fiber: no usable point");
  return *best;
}

/// Birationality onto the image via e1(I) = e1(m^d); the implicit degree and map
/// degree come from the least-degree relation among the forms.
template <class Field>
BirationalityVerdict is_birational(const std::array<Polynomial<Field>, 3>& forms, std::uint64_t seed = 1) {
  auto fs = detail::to_base_ring(forms);
  unsigned d = fs[0].total_degree();
  BirationalityVerdict v;
  v.e1 = e1(fs, seed).e1;
  v.e1_power = e1_power_of_maximal(d, 2);
  v.birational = v.e1 == v.e1_power;
  auto ring = make_rees_ring(fs[0].field());
  auto E = implicit_equation_by_interpolation(fs, ring);
  unsigned deg = E.total_degree();
  if (d % deg != 0) throw std::logic_error("implicit degree does not divide d");
  v.implicit_degree = deg;
  v.map_degree = d / deg;
  return v;
}

struct ReesAnalysis {
  unsigned degree = 0;
  unsigned mu = 0;
  unsigned e0 = 0;
  long e1 = 0;
  unsigned reduction_number = 0;  // of I with respect to a random minimal reduction
  bool cm = false;
  BirationalityVerdict birationality;
};

/// All numerical invariants of one parametrization; the CM flag is cross-checked.
template <class Field>
ReesAnalysis analyze(const std::array<Polynomial<Field>, 3>& forms, std::uint64_t seed = 1) {
  ReesAnalysis a;
  auto phi = mu_basis(forms[0], forms[1], forms[2]);
  a.degree = phi.degree();
  a.mu = phi.mu();
  auto h = e1(forms, seed);
  a.e0 = h.e0;
  a.e1 = h.e1;
  std::mt19937_64 rng(seed);
  auto cm = cm_cross_check(forms, rng);
  a.cm = cm.cm;
  a.reduction_number = cm.reduction_number;
  a.birationality = is_birational(forms, seed);
  return a;
}

}  // namespace rees

#endif  // REES_HILBERT_HPP
