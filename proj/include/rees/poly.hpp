#ifndef REES_POLY_HPP
#define REES_POLY_HPP

// Sparse polynomials over a bigraded ring k[s,t][T1,T2,T3] (plus optional
// auxiliary variables used by the Groebner machinery).
//
// Terms are stored strictly descending in graded reverse lexicographic order
// on the full variable list, with no zero coefficients. Other monomial orders
// live in groebner.hpp and are applied there.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rees/arith.hpp"
#include "rees/linalg.hpp"

namespace rees {

inline constexpr std::size_t kMaxVariables = 12;

/// Bit i set selects variable i.
using VarMask = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }

  void set(std::size_t i, unsigned e) {
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<std::uint16_t>(e);
  }

  unsigned degree() const { return degree_; }

  unsigned degree_in(VarMask mask) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (mask & (VarMask{1} << i)) d += exp_[i];
    }
    return d;
  }

  /// Variables with a positive exponent.
  VarMask support() const {
    VarMask m = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] != 0) m |= VarMask{1} << i;
    }
    return m;
  }

  /// The part of this monomial in the selected variables.
  Monomial restricted(VarMask mask) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (mask & (VarMask{1} << i)) m.set(i, exp_[i]);
    }
    return m;
  }

  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    m.degree_ = 0;
    for (auto e : m.exp_) m.degree_ += e;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp_ != b.exp_; }

  /// Graded reverse lexicographic comparison: negative, zero or positive.
  friend int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? 1 : -1;
    }
    return 0;
  }

  friend int compare_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] > b.exp_[i] ? 1 : -1;
    }
    return 0;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
};

enum class Block { Base, Fiber, Aux };

template <class Field>
class RingContext {
 public:
  RingContext(Field field, std::vector<std::string> names, std::vector<Block> blocks)
      : field_(std::move(field)), names_(std::move(names)), blocks_(std::move(blocks)) {
    if (names_.size() != blocks_.size()) throw std::invalid_argument("ring: names and blocks differ in length");
    if (names_.size() > kMaxVariables) throw std::invalid_argument("ring: too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("ring: duplicate variable " + names_[i]);
      }
    }
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Block block(std::size_t i) const { return blocks_[i]; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("ring has no variable " + std::string(name));
    return *i;
  }

  VarMask mask(Block b) const {
    VarMask m = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i] == b) m |= VarMask{1} << i;
    }
    return m;
  }

  VarMask all() const { return names_.size() == 32 ? ~VarMask{0} : (VarMask{1} << names_.size()) - 1; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.blocks_ == b.blocks_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<Block> blocks_;
};

template <class Field>
using Ring = std::shared_ptr<const RingContext<Field>>;

template <class Field>
Ring<Field> make_ring(Field field, std::vector<std::string> names, std::vector<Block> blocks) {
  return std::make_shared<const RingContext<Field>>(std::move(field), std::move(names), std::move(blocks));
}

/// k[s,t,T1,T2,T3]; the ring every pipeline runs in.
template <class Field>
Ring<Field> make_rees_ring(Field field) {
  return make_ring(std::move(field), {"s", "t", "T1", "T2", "T3"},
                   {Block::Base, Block::Base, Block::Fiber, Block::Fiber, Block::Fiber});
}

/// k[s,t].
template <class Field>
Ring<Field> make_base_ring(Field field) {
  return make_ring(std::move(field), {"s", "t"}, {Block::Base, Block::Base});
}

/// `ring` with one more auxiliary variable appended.
template <class Field>
Ring<Field> with_aux_variable(const Ring<Field>& ring, const std::string& name) {
  std::vector<std::string> names = ring->names();
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < ring->size(); ++i) blocks.push_back(ring->block(i));
  std::string n = name;
  while (ring->index_of(n)) n += "_";
  names.push_back(n);
  blocks.push_back(Block::Aux);
  return make_ring(ring->field(), std::move(names), std::move(blocks));
}

template <class Field>
bool same_ring(const Ring<Field>& a, const Ring<Field>& b) {
  return a == b || (a && b && *a == *b);
}

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

template <class Field>
class Polynomial {
 public:
  using Coeff = typename Field::value_type;

  struct Term {
    Monomial monomial;
    Coeff coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.monomial == b.monomial && a.coeff == b.coeff; }
  };

  Polynomial() = default;
  explicit Polynomial(Ring<Field> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring<Field> ring, const Coeff& c) {
    return monomial(std::move(ring), Monomial{}, c);
  }
  static Polynomial constant(Ring<Field> ring, long c) {
    Coeff v = ring->field().from_int(c);
    return constant(std::move(ring), v);
  }
  static Polynomial monomial(Ring<Field> ring, const Monomial& m, const Coeff& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(Ring<Field> ring, std::size_t index, unsigned power = 1) {
    Coeff one = ring->field().one();
    return monomial(std::move(ring), Monomial::variable(index, power), one);
  }
  static Polynomial variable(Ring<Field> ring, std::string_view name, unsigned power = 1) {
    std::size_t i = ring->index(name);
    return variable(std::move(ring), i, power);
  }
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(Ring<Field> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return compare_grevlex(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Ring<Field>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Coeff& leading_coefficient() const { return leading_term().coeff; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  unsigned degree_in(VarMask mask) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(mask));
    return d;
  }
  unsigned degree_in(std::size_t var) const { return degree_in(VarMask{1} << var); }

  VarMask support() const {
    VarMask m = 0;
    for (const auto& t : terms_) m |= t.monomial.support();
    return m;
  }
  bool uses_only(VarMask mask) const { return (support() & ~mask) == 0; }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    }
    return true;
  }
  bool is_homogeneous_in(VarMask mask) const {
    for (const auto& t : terms_) {
      if (t.monomial.degree_in(mask) != terms_.front().monomial.degree_in(mask)) return false;
    }
    return true;
  }

  /// Coefficient of an exact monomial (zero when absent).
  Coeff coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coeff;
    }
    return field().zero();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  Polynomial scaled(const Coeff& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coeff * c});
    return out;
  }

  Polynomial times_monomial(const Monomial& m, const Coeff& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
    return out;
  }

  /// Same terms, viewed in another ring whose variables agree on every index used here.
  Polynomial in_ring(const Ring<Field>& target) const {
    if (same_ring(ring_, target)) return with_ring(target);
    if (!(ring_->field() == target->field())) throw RingMismatch();
    VarMask used = support();
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (!(used & (VarMask{1} << i))) continue;
      if (i >= target->size() || target->name(i) != ring_->name(i)) throw RingMismatch();
    }
    return with_ring(target);
  }

  Polynomial operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, -t.coeff});
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Ring<Field> ring = common_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(ring);
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff).with_ring(ring);
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff).with_ring(ring);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) prod.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
    }
    return from_terms(ring, std::move(prod));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.terms_.empty()) return true;
    return same_ring(a.ring_, b.ring_);
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  Polynomial with_ring(const Ring<Field>& r) const {
    Polynomial p = *this;
    p.ring_ = r;
    return p;
  }

  static Ring<Field> common_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_) return a.ring_;
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
    return a.ring_;
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial out(common_ring(a, b));
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size()   ? -1
              : j == b.terms_.size() ? 1
                                     : compare_grevlex(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        out.terms_.push_back({t.monomial, subtract ? -t.coeff : t.coeff});
      } else {
        Coeff s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) out.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Ring<Field> ring_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Bigrading

struct Bidegree {
  unsigned base = 0;
  unsigned fiber = 0;
  friend bool operator==(const Bidegree& a, const Bidegree& b) { return a.base == b.base && a.fiber == b.fiber; }
};

class NotBiform : public std::invalid_argument {
 public:
  NotBiform() : std::invalid_argument("not a biform") {}
};

template <class Field>
Bidegree bidegree(const Polynomial<Field>& f) {
  if (f.is_zero()) throw std::invalid_argument("bidegree of the zero polynomial");
  VarMask base = f.ring()->mask(Block::Base), fiber = f.ring()->mask(Block::Fiber);
  const Monomial& lead = f.terms().front().monomial;
  Bidegree b{lead.degree_in(base), lead.degree_in(fiber)};
  for (const auto& t : f.terms()) {
    if (t.monomial.degree_in(base) != b.base || t.monomial.degree_in(fiber) != b.fiber) throw NotBiform();
  }
  return b;
}

template <class Field>
bool is_biform(const Polynomial<Field>& f) {
  if (f.is_zero()) return false;
  try {
    bidegree(f);
    return true;
  } catch (const NotBiform&) {
    return false;
  }
}

/// f written as a sum of (base coefficient) * (fiber monomial), grouped by the fiber monomial.
/// Coefficients carry only base-block (and auxiliary) variables.
template <class Field>
std::vector<std::pair<Monomial, Polynomial<Field>>> fiber_coefficients(const Polynomial<Field>& f) {
  using Term = typename Polynomial<Field>::Term;
  VarMask fiber = f.ring()->mask(Block::Fiber);
  std::vector<std::pair<Monomial, std::vector<Term>>> groups;
  for (const auto& t : f.terms()) {
    Monomial fm = t.monomial.restricted(fiber);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == fm; });
    if (it == groups.end()) {
      groups.push_back({fm, {}});
      it = std::prev(groups.end());
    }
    it->second.push_back({t.monomial / fm, t.coeff});
  }
  std::vector<std::pair<Monomial, Polynomial<Field>>> out;
  for (auto& g : groups) out.emplace_back(g.first, Polynomial<Field>::from_terms(f.ring(), std::move(g.second)));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_grevlex(a.first, b.first) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous forms in the base block

/// Base-block monomials of degree `deg`, descending grevlex (s^deg first).
template <class Field>
std::vector<Monomial> base_monomials(const Ring<Field>& ring, unsigned deg) {
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (ring->block(i) == Block::Base) base.push_back(i);
  }
  std::vector<Monomial> out;
  if (base.size() != 2) throw std::invalid_argument("base block must be exactly {s, t}");
  for (unsigned a = deg + 1; a-- > 0;) {
    Monomial m;
    m.set(base[0], a);
    m.set(base[1], deg - a);
    out.push_back(m);
  }
  return out;
}

/// Coefficient vector of a base form of degree `deg` against base_monomials(deg).
template <class Field>
std::vector<typename Field::value_type> base_coefficient_vector(const Polynomial<Field>& f, unsigned deg) {
  std::size_t s = f.ring()->index("s");
  std::vector<typename Field::value_type> v(deg + 1, f.field().zero());
  for (const auto& t : f.terms()) v[deg - t.monomial[s]] = t.coeff;
  return v;
}

template <class Field>
Polynomial<Field> base_form_from_vector(const Ring<Field>& ring, unsigned deg,
                                        const std::vector<typename Field::value_type>& v) {
  using Term = typename Polynomial<Field>::Term;
  std::vector<Monomial> mons = base_monomials(ring, deg);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < mons.size(); ++i) terms.push_back({mons[i], v[i]});
  return Polynomial<Field>::from_terms(ring, std::move(terms));
}

/// Minimal homogeneous generating set of the ideal of k[s,t] generated by `gens`.
/// Processed by ascending degree; each degree's new generators are returned in
/// reduced echelon form (monic, sorted by leading monomial).
template <class Field>
std::vector<Polynomial<Field>> minimal_generators(const std::vector<Polynomial<Field>>& gens) {
  using Coeff = typename Field::value_type;
  std::vector<Polynomial<Field>> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.uses_only(g.ring()->mask(Block::Base)) || !g.is_homogeneous()) {
      throw std::invalid_argument("minimal_generators: expected homogeneous forms in s,t");
    }
    nonzero.push_back(g);
  }
  if (nonzero.empty()) return {};
  const Ring<Field>& ring = nonzero.front().ring();
  const Field& field = ring->field();
  unsigned lo = ~0u, hi = 0;
  for (const auto& g : nonzero) {
    lo = std::min(lo, g.total_degree());
    hi = std::max(hi, g.total_degree());
  }
  std::vector<Polynomial<Field>> accepted;
  for (unsigned e = lo; e <= hi; ++e) {
    // span of the ideal generated so far, in degree e
    std::vector<std::vector<Coeff>> span;
    for (const auto& a : accepted) {
      for (const auto& m : base_monomials(ring, e - a.total_degree())) {
        span.push_back(base_coefficient_vector(a.times_monomial(m, field.one()), e));
      }
    }
    DenseMatrix<Field> old(field, 0, e + 1);
    for (const auto& v : span) old.append_row(v);
    std::vector<std::size_t> old_pivots = old.rref();
    std::vector<std::vector<Coeff>> fresh;
    for (const auto& g : nonzero) {
      if (g.total_degree() != e) continue;
      std::vector<Coeff> v = base_coefficient_vector(g, e);
      for (std::size_t r = 0; r < old_pivots.size(); ++r) {
        Coeff c = v[old_pivots[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= e; ++j) v[j] -= c * old(r, j);
      }
      fresh.push_back(std::move(v));
    }
    for (const auto& v : row_space_basis(field, e + 1, fresh)) {
      accepted.push_back(base_form_from_vector(ring, e, v));
    }
  }
  return accepted;
}

/// Minimal generators of the ideal of k[s,t] generated by all base coefficients of the fs.
template <class Field>
std::vector<Polynomial<Field>> content_ideal(const std::vector<Polynomial<Field>>& fs) {
  std::vector<Polynomial<Field>> coeffs;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    bidegree(f);
    for (auto& [mono, c] : fiber_coefficients(f)) coeffs.push_back(std::move(c));
  }
  return minimal_generators(coeffs);
}

namespace detail {

template <class Coeff>
void trim(std::vector<Coeff>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Dense univariate polynomials, index = exponent.
template <class Field>
std::vector<typename Field::value_type> univariate_gcd(std::vector<typename Field::value_type> a,
                                                       std::vector<typename Field::value_type> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
      auto q = a.back() * inv;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    auto inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

}  // namespace detail

/// Monic gcd of two forms in s,t (dehomogenize at t = 1, Euclid in s, re-homogenize,
/// restore the common s^a t^b factor). gcd(0, g) is g made monic.
template <class Field>
Polynomial<Field> gcd_binary_forms(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  using Coeff = typename Field::value_type;
  for (const auto* p : {&f, &g}) {
    if (!p->is_zero() && (!p->uses_only(p->ring()->mask(Block::Base)) || !p->is_homogeneous())) {
      throw std::invalid_argument("gcd_binary_forms: expected homogeneous forms in s,t");
    }
  }
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  const Ring<Field>& ring = f.ring();
  std::size_t s = ring->index("s"), t = ring->index("t");
  struct Split {
    unsigned s_power, t_power;
    std::vector<Coeff> dense;  // in s after stripping s^a t^b and setting t = 1
  };
  auto split = [&](const Polynomial<Field>& p) {
    unsigned n = p.total_degree();
    unsigned lo = n, hi = 0;
    for (const auto& term : p.terms()) {
      lo = std::min(lo, term.monomial[s]);
      hi = std::max(hi, term.monomial[s]);
    }
    Split out{lo, n - hi, std::vector<Coeff>(hi - lo + 1, p.field().zero())};
    for (const auto& term : p.terms()) out.dense[term.monomial[s] - lo] = term.coeff;
    return out;
  };
  Split a = split(f), b = split(g);
  std::vector<Coeff> u = detail::univariate_gcd<Field>(a.dense, b.dense);
  unsigned k = static_cast<unsigned>(u.size() - 1);
  unsigned ps = std::min(a.s_power, b.s_power), pt = std::min(a.t_power, b.t_power);
  using Term = typename Polynomial<Field>::Term;
  std::vector<Term> terms;
  for (unsigned i = 0; i <= k; ++i) {
    Monomial m;
    m.set(s, i + ps);
    m.set(t, k - i + pt);
    terms.push_back({m, u[i]});
  }
  return Polynomial<Field>::from_terms(ring, std::move(terms)).monic();
}

class NotInPairIdeal : public std::invalid_argument {
 public:
  NotInPairIdeal() : std::invalid_argument("f not in (u,v)") {}
};

/// Which generator receives a term divisible by both.
enum class SplitPriority { First, Second };

/// f = q1*u + q2*v for base monomials u, v. Each term goes to u when divisible
/// by u (or to v first under SplitPriority::Second).
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divide_by_pair(const Polynomial<Field>& f, const Polynomial<Field>& u,
                                                               const Polynomial<Field>& v,
                                                               SplitPriority priority = SplitPriority::First) {
  auto as_monomial = [](const Polynomial<Field>& m) {
    if (m.size() != 1 || !m.leading_coefficient().is_one()) {
      throw std::invalid_argument("divide_by_pair: divisors must be monomials");
    }
    return m.leading_term().monomial;
  };
  Monomial mu = as_monomial(u), mv = as_monomial(v);
  using Term = typename Polynomial<Field>::Term;
  std::vector<Term> q1, q2;
  for (const auto& t : f.terms()) {
    bool du = mu.divides(t.monomial), dv = mv.divides(t.monomial);
    if (du && (!dv || priority == SplitPriority::First)) {
      q1.push_back({t.monomial / mu, t.coeff});
    } else if (dv) {
      q2.push_back({t.monomial / mv, t.coeff});
    } else {
      throw NotInPairIdeal();
    }
  }
  return {Polynomial<Field>::from_terms(f.ring(), std::move(q1)), Polynomial<Field>::from_terms(f.ring(), std::move(q2))};
}

// ---------------------------------------------------------------------------
// Substitution and division

/// Replace variable i of f's ring by images[i] (all images in one target ring).
template <class Field>
Polynomial<Field> substitute(const Polynomial<Field>& f, const std::vector<Polynomial<Field>>& images,
                             const Ring<Field>& target) {
  if (images.size() < f.ring()->size()) throw std::invalid_argument("substitute: missing images");
  // cache powers per variable
  std::vector<std::vector<Polynomial<Field>>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial<Field>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial<Field>::constant(target, target->field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var].in_ring(target));
    return cache[e];
  };
  Polynomial<Field> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<Field> term = Polynomial<Field>::constant(target, t.coeff);
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

/// Substitute the named variables and keep the others (result stays in f's ring).
template <class Field>
Polynomial<Field> evaluate(const Polynomial<Field>& f, const std::map<std::string, Polynomial<Field>>& assignment) {
  std::vector<Polynomial<Field>> images;
  for (std::size_t i = 0; i < f.ring()->size(); ++i) {
    auto it = assignment.find(f.ring()->name(i));
    images.push_back(it != assignment.end() ? it->second.in_ring(f.ring()) : Polynomial<Field>::variable(f.ring(), i));
  }
  return substitute(f, images, f.ring());
}

/// Value of f at a point (one field value per ring variable).
template <class Field>
typename Field::value_type evaluate_at(const Polynomial<Field>& f, const std::vector<typename Field::value_type>& point) {
  auto acc = f.field().zero();
  for (const auto& t : f.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < f.ring()->size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

/// Multivariate division by a single polynomial in grevlex: f = q*g + r.
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divide_with_remainder(Polynomial<Field> f, const Polynomial<Field>& g) {
  using Term = typename Polynomial<Field>::Term;
  if (g.is_zero()) throw DivisionByZero();
  const Term& lead = g.leading_term();
  auto inv = lead.coeff.inverse();
  std::vector<Term> quotient, remainder;
  while (!f.is_zero()) {
    const Term& t = f.leading_term();
    if (lead.monomial.divides(t.monomial)) {
      Term q{t.monomial / lead.monomial, t.coeff * inv};
      f -= g.times_monomial(q.monomial, q.coeff);
      quotient.push_back(std::move(q));
    } else {
      remainder.push_back(t);
      f = Polynomial<Field>::from_terms(f.ring(), std::vector<Term>(f.terms().begin() + 1, f.terms().end()));
    }
  }
  return {Polynomial<Field>::from_terms(g.ring(), std::move(quotient)),
          Polynomial<Field>::from_terms(g.ring(), std::move(remainder))};
}

class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("division leaves a remainder") {}
};

template <class Field>
Polynomial<Field> divide_exact(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  auto [q, r] = divide_with_remainder(f, g);
  if (!r.is_zero()) throw InexactDivision();
  return q;
}

}  // namespace rees

#endif  // REES_POLY_HPP
