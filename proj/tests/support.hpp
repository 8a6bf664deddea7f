#ifndef REES_TESTS_SUPPORT_HPP
#define REES_TESTS_SUPPORT_HPP

// Generators for test inputs: random forms, random parametrizations with a
// prescribed Hilbert-Burch column-degree pair, improper (composed)
// parametrizations, and specialization of generic-model formulas.

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rees/syzygy.hpp"
#include "rees/text.hpp"

namespace rees::testing {

template <class Field, class Rng>
Polynomial<Field> random_form(const Ring<Field>& ring, unsigned d, Rng& rng) {
  std::vector<typename Field::value_type> v;
  for (unsigned i = 0; i <= d; ++i) v.push_back(ring->field().random(rng));
  return base_form_from_vector(ring, d, v);
}

/// Random nonzero k-linear form in T1, T2, T3.
template <class Field, class Rng>
Polynomial<Field> random_linear_fiber_form(const Ring<Field>& ring, Rng& rng) {
  auto T = fiber_indices(ring);
  while (true) {
    Polynomial<Field> out(ring);
    for (auto i : T) out += Polynomial<Field>::variable(ring, i).scaled(ring->field().random(rng));
    if (!out.is_zero()) return out;
  }
}

template <class Field>
struct Instance {
  std::array<Polynomial<Field>, 3> forms;
  SymmetricForms<Field> sf;
};

template <class Field>
Instance<Field> instance_from_forms(const std::array<Polynomial<Field>, 3>& fs) {
  return {fs, symmetric_algebra_forms(mu_basis(fs[0], fs[1], fs[2]))};
}

/// Parametrization whose Hilbert-Burch matrix has column degrees (mu, d - mu):
/// the forms are the minors of a random matrix with those column degrees.
/// Returns nothing for a degenerate draw.
template <class Field, class Rng>
std::optional<Instance<Field>> random_instance(const Ring<Field>& ring, unsigned d, unsigned mu, Rng& rng) {
  typename HilbertBurchMatrix<Field>::Column a, b;
  for (auto& e : a) e = random_form(ring, mu, rng);
  for (auto& e : b) e = random_form(ring, d - mu, rng);
  std::array<Polynomial<Field>, 3> fs{a[1] * b[2] - a[2] * b[1], -(a[0] * b[2] - a[2] * b[0]),
                                      a[0] * b[1] - a[1] * b[0]};
  try {
    auto inst = instance_from_forms(fs);
    if (inst.sf.mu != mu || inst.sf.degree != d) return std::nullopt;
    return inst;
  } catch (const InvalidParametrization&) {
    return std::nullopt;
  }
}

/// f_i = q_i(a, b) with a, b random forms of degree k and q_i random binary forms of
/// degree m: a parametrization of degree k*m whose map has degree k (for generic draws).
template <class Field, class Rng>
std::optional<Instance<Field>> composed_instance(const Ring<Field>& ring, unsigned k, unsigned m, Rng& rng) {
  auto a = random_form(ring, k, rng), b = random_form(ring, k, rng);
  std::vector<Polynomial<Field>> apow{Polynomial<Field>::constant(ring, 1)}, bpow{Polynomial<Field>::constant(ring, 1)};
  for (unsigned i = 0; i < m; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  std::array<Polynomial<Field>, 3> fs;
  for (auto& f : fs) {
    f = Polynomial<Field>(ring);
    for (unsigned i = 0; i <= m; ++i) f += (apow[m - i] * bpow[i]).scaled(ring->field().random(rng));
  }
  try {
    return instance_from_forms(fs);
  } catch (const InvalidParametrization&) {
    return std::nullopt;
  }
}

/// Parses `text` in a ring with the given variable names, then substitutes
/// `images` (by name) into the target ring; unnamed variables map to the
/// target variable of the same name.
template <class Field>
Polynomial<Field> specialize(const std::string& text, const std::vector<std::string>& names,
                             const std::map<std::string, Polynomial<Field>>& images, const Ring<Field>& target) {
  auto generic = make_ring(target->field(), names, std::vector<Block>(names.size(), Block::Aux));
  auto p = parse_polynomial(text, generic);
  std::vector<Polynomial<Field>> img;
  for (const auto& n : names) {
    auto it = images.find(n);
    img.push_back(it != images.end() ? it->second : Polynomial<Field>::variable(target, n));
  }
  return substitute(p, img, target);
}

}  // namespace rees::testing

#endif  // REES_TESTS_SUPPORT_HPP
