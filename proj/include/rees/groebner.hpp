#ifndef REES_GROEBNER_HPP
#define REES_GROEBNER_HPP

// Buchberger's algorithm and the ideal operations built on it: normal form,
// membership, equality, colon, saturation, elimination and the length of a
// finite-colength quotient.

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rees/poly.hpp"

namespace rees {

enum class OrderKind { Grevlex, Lex, Elimination };

/// Grevlex, lex, or a block order that compares the eliminated variables first
/// (grevlex within each block).
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  VarMask eliminated = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(VarMask vars) { return {OrderKind::Elimination, vars}; }

  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::Grevlex:
        return compare_grevlex(a, b);
      case OrderKind::Lex:
        return compare_lex(a, b);
      case OrderKind::Elimination: {
        unsigned da = a.degree_in(eliminated), db = b.degree_in(eliminated);
        if (da != db) return da > db ? 1 : -1;
        int c = compare_grevlex(a.restricted(eliminated), b.restricted(eliminated));
        if (c != 0) return c;
        return compare_grevlex(a.restricted(~eliminated), b.restricted(~eliminated));
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != OrderKind::Elimination || a.eliminated == b.eliminated);
  }
};

namespace detail {

/// Terms sorted strictly descending under some MonomialOrder.
template <class Field>
using TermList = std::vector<typename Polynomial<Field>::Term>;

template <class Field>
TermList<Field> to_term_list(const Polynomial<Field>& p, const MonomialOrder& order) {
  TermList<Field> terms = p.terms();
  if (order.kind != OrderKind::Grevlex) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return order.compare(a.monomial, b.monomial) > 0; });
  }
  return terms;
}

/// p[from..] - coeff * mono * g, dropping the cancelled leading term.
template <class Field>
TermList<Field> sub_multiple(const TermList<Field>& p, std::size_t from, const TermList<Field>& g, const Monomial& mono,
                             const typename Field::value_type& coeff, const MonomialOrder& order) {
  TermList<Field> out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * mono;
    int c = i == p.size() ? -1 : order.compare(p[i].monomial, gm);
    if (c > 0) {
      out.push_back(p[i++]);
    } else if (c < 0) {
      out.push_back({gm, -(g[j].coeff * coeff)});
      ++j;
    } else {
      auto v = p[i].coeff - g[j].coeff * coeff;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Field>
void make_monic(TermList<Field>& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  auto inv = p.front().coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

/// Full reduction of p by the elements of `basis` (all monic).
template <class Field>
TermList<Field> reduce(TermList<Field> p, const std::vector<TermList<Field>>& basis, const std::vector<bool>* usable,
                       const MonomialOrder& order) {
  TermList<Field> remainder;
  std::size_t head = 0;
  while (head < p.size()) {
    const auto& lead = p[head];
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      if (usable && !(*usable)[k]) continue;
      if (!basis[k].empty() && basis[k].front().monomial.divides(lead.monomial)) break;
    }
    if (k == basis.size()) {
      remainder.push_back(lead);
      ++head;
      continue;
    }
    const auto& g = basis[k];
    Monomial q = lead.monomial / g.front().monomial;
    auto c = lead.coeff;  // g is monic
    p = sub_multiple<Field>(p, head, g, q, c, order);
    head = 0;
  }
  return remainder;
}

template <class Field>
Polynomial<Field> from_term_list(const Ring<Field>& ring, TermList<Field> terms) {
  return Polynomial<Field>::from_terms(ring, std::move(terms));
}

}  // namespace detail

template <class Field>
class GroebnerBasis {
 public:
  using TermList = detail::TermList<Field>;

  GroebnerBasis(Ring<Field> ring, MonomialOrder order, std::vector<TermList> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
    for (const auto& e : elements_) polys_.push_back(detail::from_term_list(ring_, e));
  }

  const Ring<Field>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<Field>>& elements() const { return polys_; }
  const std::vector<TermList>& term_lists() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  Monomial leading_monomial(std::size_t i) const { return elements_[i].front().monomial; }

  bool is_unit_ideal() const { return elements_.size() == 1 && elements_[0].front().monomial.is_one(); }

 private:
  Ring<Field> ring_;
  MonomialOrder order_;
  std::vector<TermList> elements_;
  std::vector<Polynomial<Field>> polys_;
};

/// Reduced Groebner basis of the ideal generated by `generators`: Buchberger
/// with the normal selection strategy and the Gebauer-Moeller criteria.
template <class Field>
GroebnerBasis<Field> buchberger(const Ring<Field>& ring, const std::vector<Polynomial<Field>>& generators,
                                const MonomialOrder& order) {
  using TermList = detail::TermList<Field>;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<TermList> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto update = [&](TermList h) {
    std::size_t hi = basis.size();
    const Monomial hm = h.front().monomial;
    basis.push_back(std::move(h));
    active.push_back(true);

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g]) continue;
      Monomial gm = basis[g].front().monomial;
      cands.push_back({g, Monomial::lcm(hm, gm), hm.coprime(gm)});
    }
    // chain criterion among the new pairs
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (cands[b].lcm.divides(cands[a].lcm) && (cands[b].lcm != cands[a].lcm || b < a)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // pairs with equal lcm: keep one; drop all of a class when any member is coprime
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool drop = cands[a].coprime;
      for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
        if (b != a && cands[b].coprime && cands[b].lcm == cands[a].lcm) drop = true;
      }
      if (!drop) kept.push_back(cands[a]);
    }
    // old pairs made redundant by h
    std::vector<Pair> next;
    for (auto& p : pairs) {
      if (hm.divides(p.lcm)) {
        Monomial l1 = Monomial::lcm(basis[p.i].front().monomial, hm);
        Monomial l2 = Monomial::lcm(basis[p.j].front().monomial, hm);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      next.push_back(std::move(p));
    }
    for (auto& c : kept) next.push_back({c.g, hi, c.lcm});
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g] && hm.divides(basis[g].front().monomial)) active[g] = false;
    }
  };

  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (!same_ring(f.ring(), ring)) throw RingMismatch();
    TermList t = detail::reduce<Field>(detail::to_term_list(f, order), basis, &active, order);
    if (t.empty()) continue;
    detail::make_monic<Field>(t);
    update(std::move(t));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k].lcm;
      const auto& b = pairs[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && order.compare(a, b) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const TermList& gi = basis[p.i];
    const TermList& gj = basis[p.j];
    auto one = ring->field().one();
    TermList s;
    {
      Monomial mi = p.lcm / gi.front().monomial;
      TermList left;
      left.reserve(gi.size());
      for (const auto& t : gi) left.push_back({t.monomial * mi, t.coeff});
      s = detail::sub_multiple<Field>(left, 0, gj, p.lcm / gj.front().monomial, one, order);
    }
    s = detail::reduce<Field>(std::move(s), basis, &active, order);
    if (s.empty()) continue;
    detail::make_monic<Field>(s);
    update(std::move(s));
  }

  // minimal basis, then interreduce
  std::vector<TermList> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (active[k]) minimal.push_back(basis[k]);
  }
  std::vector<TermList> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    TermList head{minimal[k].front()};
    TermList tail(minimal[k].begin() + 1, minimal[k].end());
    std::vector<bool> others(minimal.size(), true);
    others[k] = false;
    TermList r = detail::reduce<Field>(std::move(tail), minimal, &others, order);
    head.insert(head.end(), r.begin(), r.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const TermList& a, const TermList& b) { return order.compare(a.front().monomial, b.front().monomial) > 0; });
  return GroebnerBasis<Field>(ring, order, std::move(reduced));
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& basis) {
  if (f.is_zero()) return f.in_ring(basis.ring());
  auto r = detail::reduce<Field>(detail::to_term_list(f.in_ring(basis.ring()), basis.order()), basis.term_lists(),
                                 nullptr, basis.order());
  return detail::from_term_list(basis.ring(), std::move(r));
}

/// Every S-polynomial of the basis reduces to zero and the basis is reduced.
template <class Field>
bool verify_groebner_basis(const GroebnerBasis<Field>& basis) {
  const auto& els = basis.term_lists();
  const auto& order = basis.order();
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!els[i].front().coeff.is_one()) return false;
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : els[j]) {
        if (els[i].front().monomial.divides(t.monomial)) return false;
      }
    }
  }
  auto one = basis.ring()->field().one();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      Monomial l = Monomial::lcm(els[i].front().monomial, els[j].front().monomial);
      detail::TermList<Field> left;
      Monomial mi = l / els[i].front().monomial;
      for (const auto& t : els[i]) left.push_back({t.monomial * mi, t.coeff});
      auto s = detail::sub_multiple<Field>(left, 0, els[j], l / els[j].front().monomial, one, order);
      if (!detail::reduce<Field>(std::move(s), els, nullptr, order).empty()) return false;
    }
  }
  return true;
}

template <class Field>
class Ideal {
 public:
  Ideal(Ring<Field> ring, std::vector<Polynomial<Field>> generators)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!g.is_zero()) generators_.push_back(g.in_ring(ring_));
    }
  }

  const Ring<Field>& ring() const { return ring_; }
  const std::vector<Polynomial<Field>>& generators() const { return generators_; }

  /// Reduced Groebner basis; computed once per order and shared by copies of this ideal.
  const GroebnerBasis<Field>& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& b : cache_->bases) {
      if (b->order() == order) return *b;
    }
    auto gb = std::make_shared<const GroebnerBasis<Field>>(buchberger(ring_, generators_, order));
    cache_->bases.push_back(gb);
    return *gb;
  }

  bool contains(const Polynomial<Field>& f) const { return normal_form(f, basis()).is_zero(); }

  bool is_zero() const { return generators_.empty(); }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::shared_ptr<const GroebnerBasis<Field>>> bases;
  };

  Ring<Field> ring_;
  std::vector<Polynomial<Field>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <class Field>
bool ideal_membership(const Polynomial<Field>& f, const Ideal<Field>& ideal) {
  return ideal.contains(f);
}

/// I is contained in J.
template <class Field>
bool ideal_contained(const Ideal<Field>& i, const Ideal<Field>& j) {
  for (const auto& g : i.generators()) {
    if (!j.contains(g)) return false;
  }
  return true;
}

template <class Field>
bool ideal_equal(const Ideal<Field>& i, const Ideal<Field>& j) {
  return ideal_contained(i, j) && ideal_contained(j, i);
}

/// The ideal generated by the reduced grevlex basis of `ideal`.
template <class Field>
Ideal<Field> reduced_ideal(const Ideal<Field>& ideal) {
  return Ideal<Field>(ideal.ring(), ideal.basis().elements());
}

/// I intersected with the subring free of `vars`.
template <class Field>
Ideal<Field> eliminate(const Ideal<Field>& ideal, VarMask vars) {
  const auto& gb = ideal.basis(MonomialOrder::elimination(vars));
  std::vector<Polynomial<Field>> kept;
  for (const auto& g : gb.elements()) {
    if ((g.support() & vars) == 0) kept.push_back(g);
  }
  return Ideal<Field>(ideal.ring(), std::move(kept));
}

/// I intersected with (f), from an auxiliary variable w: (w*I + (1-w)*f) with w eliminated.
template <class Field>
Ideal<Field> intersect_principal(const Ideal<Field>& ideal, const Polynomial<Field>& f) {
  Ring<Field> ext = with_aux_variable(ideal.ring(), "w");
  std::size_t w = ext->size() - 1;
  auto wv = Polynomial<Field>::variable(ext, w);
  auto one = Polynomial<Field>::constant(ext, ext->field().one());
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(wv * g.in_ring(ext));
  gens.push_back((one - wv) * f.in_ring(ext));
  Ideal<Field> big(ext, std::move(gens));
  Ideal<Field> cut = eliminate(big, VarMask{1} << w);
  std::vector<Polynomial<Field>> back;
  for (const auto& g : cut.generators()) back.push_back(g.in_ring(ideal.ring()));
  return Ideal<Field>(ideal.ring(), std::move(back));
}

/// I : f = {g : g*f in I}.
template <class Field>
Ideal<Field> colon(const Ideal<Field>& ideal, const Polynomial<Field>& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  if (f.is_constant()) return ideal;
  Ideal<Field> cut = intersect_principal(ideal, f);
  std::vector<Polynomial<Field>> quotients;
  for (const auto& g : cut.generators()) quotients.push_back(divide_exact(g, f.in_ring(ideal.ring())));
  return Ideal<Field>(ideal.ring(), std::move(quotients));
}

enum class SaturationMethod {
  IteratedColon,  // I : f, (I : f) : f, ... until stable
  Rabinowitsch,   // I + (1 - w*f), w eliminated
};

template <class Field>
Ideal<Field> saturate(const Ideal<Field>& ideal, const Polynomial<Field>& f,
                      SaturationMethod method = SaturationMethod::IteratedColon) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  if (method == SaturationMethod::Rabinowitsch) {
    Ring<Field> ext = with_aux_variable(ideal.ring(), "w");
    std::size_t w = ext->size() - 1;
    std::vector<Polynomial<Field>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ext));
    gens.push_back(Polynomial<Field>::constant(ext, ext->field().one()) -
                   Polynomial<Field>::variable(ext, w) * f.in_ring(ext));
    Ideal<Field> cut = eliminate(Ideal<Field>(ext, std::move(gens)), VarMask{1} << w);
    std::vector<Polynomial<Field>> back;
    for (const auto& g : cut.generators()) back.push_back(g.in_ring(ideal.ring()));
    return reduced_ideal(Ideal<Field>(ideal.ring(), std::move(back)));
  }
  Ideal<Field> current = reduced_ideal(ideal);
  while (true) {
    Ideal<Field> next = reduced_ideal(colon(current, f));
    if (ideal_contained(next, current)) return current;
    current = std::move(next);
  }
}

class NotFiniteColength : public std::domain_error {
 public:
  NotFiniteColength() : std::domain_error("not finite colength") {}
};

/// Standard monomials of a zero-dimensional ideal, by walking the staircase of
/// its leading monomials.
template <class Field>
std::size_t quotient_dimension(const Ideal<Field>& ideal) {
  const auto& gb = ideal.basis();
  std::size_t n = ideal.ring()->size();
  if (gb.is_unit_ideal()) return 0;
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < gb.size(); ++i) leads.push_back(gb.leading_monomial(i));
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads) {
      if (m.support() == (VarMask{1} << v) && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (bound[v] == 0) throw NotFiniteColength();
  }
  std::size_t count = 0;
  Monomial m;
  // depth-first over the box, pruning once a prefix is already divisible
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      for (const auto& l : leads) {
        if (l.divides(m)) return;
      }
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      bool dead = false;
      for (const auto& l : leads) {
        if (l.divides(m)) {
          dead = true;
          break;
        }
      }
      if (dead) break;
      self(self, v + 1);
    }
    m.set(v, 0);
  };
  walk(walk, 0);
  return count;
}

}  // namespace rees

#endif  // REES_GROEBNER_HPP
