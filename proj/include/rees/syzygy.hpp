#ifndef REES_SYZYGY_HPP
#define REES_SYZYGY_HPP

// Hilbert-Burch matrix (mu-basis) of three binary forms of equal degree, found
// degree by degree as the kernel of coefficient-matching linear systems, and
// the two symmetric-algebra forms it presents.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/linalg.hpp"
#include "rees/poly.hpp"

namespace rees {

class InvalidParametrization : public std::invalid_argument {
 public:
  explicit InvalidParametrization(const std::string& what) : std::invalid_argument(what) {}
};

/// 3x2 syzygy matrix of I = (f1, f2, f3) with column degrees (mu, d - mu), mu <= d - mu.
/// Columns are normalized so the leading coefficient of the first nonzero entry is 1.
template <class Field>
class HilbertBurchMatrix {
 public:
  using Column = std::array<Polynomial<Field>, 3>;

  HilbertBurchMatrix(Column first, Column second, unsigned degree)
      : columns_{std::move(first), std::move(second)}, degree_(degree) {
    for (const auto& col : columns_) {
      if (col[0].is_zero() && col[1].is_zero() && col[2].is_zero()) {
        throw InvalidParametrization("Hilbert-Burch matrix has a zero column");
      }
    }
    column_degrees_ = {column_degree(columns_[0]), column_degree(columns_[1])};
    if (column_degrees_[0] > column_degrees_[1]) {
      std::swap(columns_[0], columns_[1]);
      std::swap(column_degrees_[0], column_degrees_[1]);
    }
    if (column_degrees_[0] + column_degrees_[1] != degree_) {
      throw InvalidParametrization("column degrees do not add up to the input degree");
    }
    if (column_degrees_[0] < 1) throw InvalidParametrization("syzygy of degree 0");
  }

  const Column& column(std::size_t j) const { return columns_[j]; }
  const Polynomial<Field>& entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  unsigned degree() const { return degree_; }
  unsigned mu() const { return column_degrees_[0]; }
  unsigned column_degree(std::size_t j) const { return column_degrees_[j]; }
  bool balanced() const { return column_degrees_[0] == degree_ / 2; }

  /// Signed 2x2 minors (Delta1, Delta2, Delta3); they equal (f1, f2, f3) up to one scalar.
  std::array<Polynomial<Field>, 3> minors() const {
    const auto& a = columns_[0];
    const auto& b = columns_[1];
    return {a[1] * b[2] - a[2] * b[1], -(a[0] * b[2] - a[2] * b[0]), a[0] * b[1] - a[1] * b[0]};
  }

 private:
  static unsigned column_degree(const Column& col) {
    std::optional<unsigned> deg;
    for (const auto& e : col) {
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw InvalidParametrization("syzygy entry is not homogeneous");
      unsigned d = e.total_degree();
      if (deg && *deg != d) throw InvalidParametrization("syzygy column has mixed degrees");
      deg = d;
    }
    return *deg;
  }

  std::array<Column, 2> columns_;
  std::array<unsigned, 2> column_degrees_{};
  unsigned degree_;
};

namespace detail {

template <class Field>
void check_forms(const std::array<Polynomial<Field>, 3>& fs) {
  for (const auto& f : fs) {
    if (f.is_zero()) throw InvalidParametrization("zero form");
    if (!f.uses_only(f.ring()->mask(Block::Base)) || !f.is_homogeneous()) {
      throw InvalidParametrization("input forms must be homogeneous in s,t");
    }
  }
  if (fs[0].total_degree() != fs[1].total_degree() || fs[0].total_degree() != fs[2].total_degree()) {
    throw InvalidParametrization("input forms have different degrees");
  }
}

/// Kernel of (a, b, c) -> a*f1 + b*f2 + c*f3 on triples of forms of degree e,
/// as coefficient vectors of length 3(e+1).
template <class Field>
std::vector<std::vector<typename Field::value_type>> syzygies_in_degree(const std::array<Polynomial<Field>, 3>& fs,
                                                                         unsigned e) {
  const Field& field = fs[0].field();
  unsigned d = fs[0].total_degree();
  std::size_t s = fs[0].ring()->index("s");
  DenseMatrix<Field> m(field, e + d + 1, 3 * (e + 1));
  for (std::size_t k = 0; k < 3; ++k) {
    for (unsigned j = 0; j <= e; ++j) {
      unsigned s_exp = e - j;  // j-th monomial of degree e is s^(e-j) t^j
      for (const auto& term : fs[k].terms()) {
        unsigned row = (e + d) - (s_exp + term.monomial[s]);
        m(row, k * (e + 1) + j) += term.coeff;
      }
    }
  }
  return row_space_basis(field, 3 * (e + 1), m.kernel());
}

template <class Field>
typename HilbertBurchMatrix<Field>::Column column_from_vector(const Ring<Field>& ring, unsigned e,
                                                               const std::vector<typename Field::value_type>& v) {
  typename HilbertBurchMatrix<Field>::Column col;
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<typename Field::value_type> part(v.begin() + static_cast<std::ptrdiff_t>(k * (e + 1)),
                                                 v.begin() + static_cast<std::ptrdiff_t>((k + 1) * (e + 1)));
    col[k] = base_form_from_vector(ring, e, part);
  }
  return col;
}

template <class Field>
typename HilbertBurchMatrix<Field>::Column normalize_column(typename HilbertBurchMatrix<Field>::Column col) {
  for (const auto& e : col) {
    if (e.is_zero()) continue;
    auto inv = e.leading_coefficient().inverse();
    for (auto& x : col) x = x.scaled(inv);
    break;
  }
  return col;
}

}  // namespace detail

template <class Field>
HilbertBurchMatrix<Field> mu_basis(const Polynomial<Field>& f1, const Polynomial<Field>& f2, const Polynomial<Field>& f3) {
  using Coeff = typename Field::value_type;
  std::array<Polynomial<Field>, 3> fs{f1, f2, f3};
  detail::check_forms(fs);
  const Ring<Field>& ring = f1.ring();
  const Field& field = ring->field();
  unsigned d = f1.total_degree();

  if (!detail::syzygies_in_degree(fs, 0).empty()) {
    throw InvalidParametrization("not minimally generated by 3 forms (forms are linearly dependent)");
  }
  if (!gcd_binary_forms(gcd_binary_forms(f1, f2), f3).is_constant()) {
    throw InvalidParametrization("base ideal has codimension < 2 (forms share a common factor)");
  }

  unsigned mu = 0;
  std::vector<Coeff> first;
  std::optional<std::vector<Coeff>> second;
  unsigned second_degree = 0;
  for (unsigned e = 1; e <= d && !second; ++e) {
    auto kernel = detail::syzygies_in_degree(fs, e);
    if (kernel.empty()) continue;
    if (mu == 0) {
      mu = e;
      first = kernel[0];
      if (kernel.size() >= 2) {
        second = kernel[1];
        second_degree = e;
      }
      continue;
    }
    // multiples p * z1 with deg p = e - mu span the non-minimal part
    auto z1 = detail::column_from_vector(ring, mu, first);
    std::vector<std::vector<Coeff>> multiples;
    for (const auto& m : base_monomials(ring, e - mu)) {
      std::vector<Coeff> v;
      for (const auto& entry : z1) {
        auto cv = base_coefficient_vector(entry.times_monomial(m, field.one()), e);
        v.insert(v.end(), cv.begin(), cv.end());
      }
      multiples.push_back(std::move(v));
    }
    DenseMatrix<Field> span(field, 0, 3 * (e + 1));
    for (const auto& v : multiples) span.append_row(v);
    auto pivots = span.rref();
    std::vector<std::vector<Coeff>> fresh;
    for (auto v : kernel) {
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        Coeff c = v[pivots[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * span(r, j);
      }
      fresh.push_back(std::move(v));
    }
    auto basis = row_space_basis(field, 3 * (e + 1), fresh);
    if (!basis.empty()) {
      second = basis[0];
      second_degree = e;
    }
  }
  if (!second) throw InvalidParametrization("no second syzygy found up to the input degree");

  HilbertBurchMatrix<Field> phi(detail::normalize_column<Field>(detail::column_from_vector(ring, mu, first)),
                                detail::normalize_column<Field>(detail::column_from_vector(ring, second_degree, *second)),
                                d);

  // Hilbert-Burch closure: the minors reproduce (f1, f2, f3) up to one scalar
  auto minors = phi.minors();
  std::optional<Coeff> scale;
  for (std::size_t k = 0; k < 3; ++k) {
    if (minors[k].is_zero()) throw std::logic_error("mu_basis: vanishing minor");
    Coeff c = minors[k].leading_coefficient() / fs[k].leading_coefficient();
    if (!scale) scale = c;
    if (minors[k] != fs[k].scaled(*scale)) throw std::logic_error("mu_basis: minors do not reproduce the input forms");
  }
  return phi;
}

/// Verifies [f1 f2 f3] * phi = 0.
template <class Field>
bool is_syzygy_matrix(const HilbertBurchMatrix<Field>& phi, const std::array<Polynomial<Field>, 3>& fs) {
  for (std::size_t j = 0; j < 2; ++j) {
    auto sum = fs[0] * phi.entry(0, j) + fs[1] * phi.entry(1, j) + fs[2] * phi.entry(2, j);
    if (!sum.is_zero()) return false;
  }
  return true;
}

/// f = [T1 T2 T3] * column 1 and g = [T1 T2 T3] * column 2.
template <class Field>
struct SymmetricForms {
  Polynomial<Field> f;
  Polynomial<Field> g;
  unsigned mu = 0;
  unsigned degree = 0;

  const Ring<Field>& ring() const { return f.ring(); }

  /// From two biforms of bidegrees (mu, 1) and (d - mu, 1).
  static SymmetricForms from_forms(Polynomial<Field> f, Polynomial<Field> g) {
    Bidegree bf = bidegree(f), bg = bidegree(g);
    if (bf.fiber != 1 || bg.fiber != 1) throw InvalidParametrization("symmetric algebra forms must be linear in T");
    if (bf.base > bg.base) std::swap(f, g), std::swap(bf, bg);
    return {std::move(f), std::move(g), bf.base, bf.base + bg.base};
  }
};

template <class Field>
std::array<std::size_t, 3> fiber_indices(const Ring<Field>& ring) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->block(i) == Block::Fiber) idx.push_back(i);
  }
  if (idx.size() != 3) throw std::invalid_argument("fiber block must have exactly 3 variables");
  return {idx[0], idx[1], idx[2]};
}

template <class Field>
SymmetricForms<Field> symmetric_algebra_forms(const HilbertBurchMatrix<Field>& phi) {
  const Ring<Field>& ring = phi.entry(0, 0).is_zero() ? (phi.entry(1, 0).is_zero() ? phi.entry(2, 0).ring()
                                                                                    : phi.entry(1, 0).ring())
                                                      : phi.entry(0, 0).ring();
  auto T = fiber_indices(ring);
  std::array<Polynomial<Field>, 2> forms{Polynomial<Field>(ring), Polynomial<Field>(ring)};
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 3; ++i) forms[j] += Polynomial<Field>::variable(ring, T[i]) * phi.entry(i, j);
  }
  return {forms[0], forms[1], phi.mu(), phi.degree()};
}

/// The Hilbert-Burch matrix read back off f and g (coefficients of T1, T2, T3).
template <class Field>
HilbertBurchMatrix<Field> presentation_matrix(const SymmetricForms<Field>& sf) {
  auto T = fiber_indices(sf.ring());
  std::array<typename HilbertBurchMatrix<Field>::Column, 2> cols;
  const std::array<const Polynomial<Field>*, 2> forms{&sf.f, &sf.g};
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < 3; ++i) cols[j][i] = Polynomial<Field>(sf.ring());
    for (auto& [mono, coeff] : fiber_coefficients(*forms[j])) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (mono == Monomial::variable(T[i])) cols[j][i] = coeff;
      }
    }
  }
  return HilbertBurchMatrix<Field>(cols[0], cols[1], sf.degree);
}

/// (f1, f2, f3) as the signed minors of the presentation matrix.
template <class Field>
std::array<Polynomial<Field>, 3> parametrization(const SymmetricForms<Field>& sf) {
  return presentation_matrix(sf).minors();
}

}  // namespace rees

#endif  // REES_SYZYGY_HPP
