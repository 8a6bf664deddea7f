// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Runtime budgets are part of each criterion and are enforced here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "models.hpp"
#include "rees/groebner.hpp"
#include "rees/hilbert.hpp"
#include "rees/rees_ideal.hpp"
#include "rees/sylvester.hpp"
#include "rees/text.hpp"
#include "support.hpp"

using namespace rees;
using namespace rees::testing;
using namespace rees::testing::models;

namespace {

using Q = RationalField;
using Fp = PrimeField;
using Clock = std::chrono::steady_clock;

// budgets in seconds
constexpr double kGoldenEach = 1.0;
constexpr double kReproofEach = 10.0;
constexpr double kEliminationEach = 5.0;
constexpr double kE1Total = 5.0;
constexpr double kTriangleBatch = 300.0;
constexpr double kCmBatch = 300.0;
constexpr double kCrossPipeline = 60.0;
constexpr double kOracleSelfTest = 60.0;

constexpr unsigned kReproofPerStratum = 25;
constexpr unsigned kTriangleInstances = 50;
constexpr unsigned kCmInstances = 50;
constexpr unsigned kCrossPerCase = 10;
constexpr unsigned kMonomialIdeals = 100;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

template <class Field>
bool proportional(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

template <class Field>
const Polynomial<Field>& form(const EliminationResult<Field>& r, const std::string& label) {
  for (const auto& g : r.generators) {
    if (g.label == label) return g.form;
  }
  for (const auto& s : r.steps) {
    if (s.label == label) return s.result;
  }
  throw std::out_of_range(label);
}

template <class Field>
bool divisible(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  return divide_with_remainder(a, b).second.is_zero();
}

// 1 --------------------------------------------------------------------------

template <class Field>
void golden_for_field(Outcome& out, const std::string& tag, std::mt19937_64& rng) {
  auto ring = make_rees_ring(Field{});
  auto timed = [&](const std::string& name, const std::function<bool()>& check) {
    auto t0 = Clock::now();
    bool ok = check();
    double dt = seconds_since(t0);
    if (!ok) out.fail(tag + " " + name + " mismatch");
    if (dt > kGoldenEach) out.fail(tag + " " + name + " took " + std::to_string(dt) + " s");
  };
  timed("degree-4 F", [&] {
    auto S = deg4_model(ring, rng);
    auto r = pipeline_deg4_balanced(forms_of(S, kDeg4F, kDeg4G));
    return proportional(r.implicit_equation, S(kDeg4Equation));
  });
  timed("mu=1 h1,h2,h3", [&] {
    auto S = mu1_model(ring, rng, true);
    auto r = pipeline_mu1_chain(forms_of(S, kMu1F, kMu1G));
    bool exact = proportional(form(r, "h1"), S(kMu1H1)) && proportional(form(r, "h2"), S(kMu1H2)) &&
                 proportional(form(r, "h3"), S(kMu1H3));
    auto G = mu1_model(ring, rng, false);
    auto f = G(kMu1F);
    auto q = pipeline_mu1_chain(forms_of(G, kMu1F, kMu1G));
    bool general = proportional(form(q, "h3"), G(kMu1H3)) && divisible(form(q, "h1") - G(kMu1H1), f) &&
                   divisible(form(q, "h2") - G(kMu1H2), f);
    return exact && general;
  });
  timed("degree-5 F", [&] {
    auto S = deg5_model(ring, rng);
    auto r = pipeline_deg5_23(forms_of(S, kDeg5F, kDeg5G));
    return proportional(r.implicit_equation, S(kDeg5Equation));
  });
}

Outcome criterion_golden() {
  Outcome out;
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 3; ++rep) {
    golden_for_field<Fp>(out, "GF(32003)", rng);
    golden_for_field<Q>(out, "Q", rng);
  }
  out.detail = "3 displays x {Q, GF(32003)} x 3 specializations";
  return out;
}

// 2 --------------------------------------------------------------------------

Outcome criterion_reproof() {
  Outcome out;
  std::mt19937_64 rng(202);
  auto ring = make_rees_ring(Fp(32003));
  std::ostringstream detail;
  double slowest = 0;
  for (auto [d, mu] : {std::pair{4u, 2u}, {4u, 1u}, {5u, 1u}, {5u, 2u}}) {
    unsigned verified = 0, aborted = 0, draws = 0;
    while (verified < kReproofPerStratum && draws < 20 * kReproofPerStratum) {
      ++draws;
      auto inst = random_instance(ring, d, mu, rng);
      if (!inst) {
        ++aborted;
        continue;
      }
      auto t0 = Clock::now();
      std::optional<EliminationResult<Fp>> L;
      try {
        L = implicitize(inst->sf);
      } catch (const DegenerateInput&) {
        ++aborted;
        continue;
      }
      bool ok = verify_candidate(*L, inst->sf);
      double dt = seconds_since(t0);
      slowest = std::max(slowest, dt);
      if (!ok) out.fail("(" + std::to_string(d) + "," + std::to_string(mu) + ") L != oracle");
      if (dt > kReproofEach) out.fail("instance took " + std::to_string(dt) + " s");
      ++verified;
    }
    if (verified < kReproofPerStratum) out.fail("too few non-degenerate draws");
    detail << "(" << d << "," << mu << "): " << verified << " ok, abort rate " << aborted << "/" << draws << "; ";
  }
  detail << "slowest " << slowest << " s";
  out.detail = detail.str();
  return out;
}

// 3 --------------------------------------------------------------------------

Outcome criterion_elimination() {
  Outcome out;
  std::mt19937_64 rng(303);
  auto ring = make_rees_ring(Fp(32003));
  struct Draw {
    unsigned d, mu, k, m;  // k > 0: composed instance of degree k*m
  };
  std::vector<Draw> draws;
  for (unsigned d = 2; d <= 7; ++d) draws.push_back({d, 1, 0, 0});
  for (auto [d, mu] : {std::pair{4u, 2u}, {5u, 2u}, {6u, 3u}, {7u, 3u}}) draws.push_back({d, mu, 0, 0});
  draws.push_back({4, 2, 2, 2});
  draws.push_back({6, 3, 3, 2});
  unsigned runs = 0, improper = 0;
  double slowest = 0;
  for (int rep = 0; rep < 3; ++rep) {
    for (const auto& dr : draws) {
      auto inst = dr.k ? composed_instance(ring, dr.k, dr.m, rng) : random_instance(ring, dr.d, dr.mu, rng);
      if (!inst) continue;
      auto t0 = Clock::now();
      EliminationResult<Fp> L;
      try {
        L = implicitize(inst->sf);
      } catch (const DegenerateInput&) {
        continue;
      } catch (const UnsupportedStratum&) {
        continue;
      }
      ++runs;
      unsigned d = inst->sf.degree;
      const auto& F = L.implicit_equation;
      if (!evaluate_on_parametrization(F, inst->forms).is_zero()) out.fail("F(f) != 0 at d = " + std::to_string(d));
      auto E = implicit_equation_by_interpolation(inst->forms, ring);
      unsigned m = map_degree_by_fiber(inst->forms, 7 + rep);
      if (E.total_degree() * m != d) out.fail("deg E * map degree != d at d = " + std::to_string(d));
      if (F != E.pow(m).monic()) out.fail("F is not E^(map degree) at d = " + std::to_string(d));
      improper += m > 1;
      double dt = seconds_since(t0);
      slowest = std::max(slowest, dt);
      if (dt > kEliminationEach) out.fail("instance took " + std::to_string(dt) + " s");
    }
  }
  if (improper == 0) out.fail("no improper instance exercised");
  out.detail = std::to_string(runs) + " runs (d = 2..7), " + std::to_string(improper) +
               " improper; slowest " + std::to_string(slowest) + " s";
  return out;
}

// 4 --------------------------------------------------------------------------

Outcome criterion_e1() {
  Outcome out;
  auto t0 = Clock::now();
  auto ring = make_rees_ring(Q{});
  auto P = [&](const char* s) { return parse_polynomial(s, ring); };
  struct Case {
    const char *a, *b, *c;
    long expected;
  };
  std::ostringstream detail;
  for (auto c : {Case{"s^2", "st", "t^2", 1}, Case{"s^4", "s^3t", "t^4", 6}, Case{"s^4", "s^2t^2", "t^4", 4}}) {
    long v = e1<Q>({P(c.a), P(c.b), P(c.c)}).e1;
    detail << "e1(" << c.a << "," << c.b << "," << c.c << ") = " << v << "; ";
    if (v != c.expected) out.fail(std::string("e1 of ") + c.b + " family is " + std::to_string(v));
  }
  if (e1_power_of_maximal(4, 2) != 6) out.fail("e1(m^4) != 6");
  if (e1_power_of_maximal(5, 2) != 10) out.fail("e1(m^5) != 10");
  double dt = seconds_since(t0);
  if (dt > kE1Total) out.fail("took " + std::to_string(dt) + " s");
  detail << "e1(m^4) = " << e1_power_of_maximal(4, 2) << ", e1(m^5) = " << e1_power_of_maximal(5, 2);
  out.detail = detail.str();
  return out;
}

// 5 --------------------------------------------------------------------------

Outcome criterion_triangle() {
  Outcome out;
  auto t0 = Clock::now();
  std::mt19937_64 rng(505);
  auto ring = make_rees_ring(Fp(32003));
  unsigned n = 0, improper = 0;
  for (unsigned rep = 0; n < kTriangleInstances && rep < 4 * kTriangleInstances; ++rep) {
    std::optional<Instance<Fp>> inst;
    switch (rep % 5) {
      case 0: inst = composed_instance(ring, 2, 2, rng); break;
      case 1: inst = composed_instance(ring, 2 + rep % 2, rep % 2 ? 2 : 3, rng); break;
      case 2: inst = random_instance(ring, 4, 2, rng); break;
      case 3: inst = random_instance(ring, 3 + rep % 3, 1, rng); break;
      default: inst = random_instance(ring, 5, 2, rng); break;
    }
    if (!inst) continue;
    ++n;
    unsigned d = inst->sf.degree;
    long e = e1(inst->forms, rep + 1).e1;
    bool e1_says = e == e1_power_of_maximal(d, 2);
    unsigned degE = implicit_equation_by_interpolation(inst->forms, ring).total_degree();
    unsigned m = map_degree_by_fiber(inst->forms, rep + 1);
    if (e1_says != (degE == d) || (degE == d) != (m == 1)) {
      out.fail("d = " + std::to_string(d) + ": e1 = " + std::to_string(e) + ", deg F = " + std::to_string(degE) +
               ", map degree = " + std::to_string(m));
    }
    improper += !e1_says;
  }
  if (n < kTriangleInstances) out.fail("only " + std::to_string(n) + " instances");
  auto q = make_rees_ring(Q{});
  auto P = [&](const char* s) { return parse_polynomial(s, q); };
  auto improper_quartic = is_birational<Q>({P("s^4"), P("s^2t^2"), P("t^4")});
  if (improper_quartic.birational || improper_quartic.map_degree != 2u) out.fail("(s^4,s^2t^2,t^4) not improper");
  if (!is_birational<Q>({P("s^2"), P("st"), P("t^2")}).birational) out.fail("(s^2,st,t^2) not birational");
  double dt = seconds_since(t0);
  if (dt > kTriangleBatch) out.fail("batch took " + std::to_string(dt) + " s");
  out.detail = std::to_string(n) + " instances, " + std::to_string(improper) + " improper; named verdicts checked; " +
               std::to_string(dt) + " s";
  return out;
}

// 6 --------------------------------------------------------------------------

Outcome criterion_cm() {
  Outcome out;
  auto t0 = Clock::now();
  std::mt19937_64 rng(606);
  auto ring = make_rees_ring(Fp(32003));
  unsigned n = 0, cm = 0;
  for (unsigned rep = 0; n < kCmInstances && rep < 4 * kCmInstances; ++rep) {
    std::optional<Instance<Fp>> inst;
    switch (rep % 5) {
      case 0: inst = composed_instance(ring, 2, 2, rng); break;
      case 1: inst = random_instance(ring, 4, 2, rng); break;
      case 2: inst = random_instance(ring, 3 + rep % 3, 1, rng); break;
      case 3: inst = composed_instance(ring, 3, 2, rng); break;
      default: inst = random_instance(ring, 2 + rep % 2, 1, rng); break;
    }
    if (!inst) continue;
    ++n;
    try {
      cm += cm_cross_check(inst->forms, rng).cm;
    } catch (const InconsistentVerdict& e) {
      out.fail(e.what());
    } catch (const std::runtime_error& e) {
      out.fail(e.what());
    }
  }
  if (n < kCmInstances) out.fail("only " + std::to_string(n) + " instances");
  auto q = make_rees_ring(Q{});
  auto P = [&](const char* s) { return parse_polynomial(s, q); };
  std::mt19937_64 wrng(607);
  if (!cm_cross_check<Q>({P("s^4"), P("s^2t^2"), P("t^4")}, wrng).cm) out.fail("(s^4,s^2t^2,t^4) not CM");
  if (cm_cross_check<Q>({P("s^4"), P("s^3t"), P("t^4")}, wrng).cm) out.fail("(s^4,s^3t,t^4) CM");
  double dt = seconds_since(t0);
  if (dt > kCmBatch) out.fail("batch took " + std::to_string(dt) + " s");
  out.detail = std::to_string(n) + " instances (" + std::to_string(cm) + " CM, " + std::to_string(n - cm) +
               " not CM) + 2 witnesses; " + std::to_string(dt) + " s";
  return out;
}

// 7 --------------------------------------------------------------------------

Outcome criterion_cross_pipeline() {
  Outcome out;
  auto t0 = Clock::now();
  std::mt19937_64 rng(707);
  auto ring = make_rees_ring(Fp(32003));
  unsigned even = 0, odd = 0;
  while (even < kCrossPerCase || odd < kCrossPerCase) {
    if (even < kCrossPerCase) {
      if (auto a = random_instance(ring, 4, 2, rng)) {
        if (!proportional(elimination_even(a->sf, 2), pipeline_deg4_balanced(a->sf).implicit_equation)) {
          out.fail("even p=2 differs from degree-4 F");
        }
        ++even;
      }
    }
    if (odd < kCrossPerCase) {
      if (auto b = random_instance(ring, 5, 2, rng)) {
        if (!proportional(elimination_odd(b->sf, 2), pipeline_deg5_23(b->sf).implicit_equation)) {
          out.fail("odd p=2 differs from degree-5 F");
        }
        ++odd;
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt > kCrossPipeline) out.fail("took " + std::to_string(dt) + " s");
  out.detail = std::to_string(even) + " even + " + std::to_string(odd) + " odd instances; " + std::to_string(dt) + " s";
  return out;
}

// 8 --------------------------------------------------------------------------

template <class Rng>
Polynomial<Fp> random_poly(const Ring<Fp>& ring, Rng& rng, unsigned terms, unsigned max_exp, VarMask vars) {
  std::uniform_int_distribution<unsigned> expo(0, max_exp);
  Polynomial<Fp> p(ring);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (vars & (VarMask{1} << i)) m.set(i, expo(rng));
    }
    p += Polynomial<Fp>::monomial(ring, m, ring->field().random(rng));
  }
  return p;
}

Outcome criterion_oracles() {
  Outcome out;
  auto t0 = Clock::now();
  std::mt19937_64 rng(808);
  auto ring = make_rees_ring(Fp(32003));
  VarMask vars = ring->mask(Block::Base) | (VarMask{1} << 2) | (VarMask{1} << 3);

  unsigned bases = 0;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Polynomial<Fp>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(ring, rng, 3, 1, vars));
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(ring->mask(Block::Base))}) {
      auto gb = buchberger(ring, gens, order);
      if (!verify_groebner_basis(gb)) out.fail("S-polynomial does not reduce to zero");
      for (const auto& g : gens) {
        if (!normal_form(g, gb).is_zero()) out.fail("generator not reduced to zero");
      }
      ++bases;
    }
  }

  unsigned saturations = 0;
  auto s = Polynomial<Fp>::variable(ring, "s");
  for (int rep = 0; rep < 10; ++rep) {
    auto inst = random_instance(ring, 3 + rep % 3, 1 + rep % 2, rng);
    if (!inst) continue;
    auto M = rees_ideal_oracle(inst->sf);
    if (!ideal_equal(colon(M, s), M)) out.fail("saturation not a fixed point of colon");
    if (!ideal_equal(saturate(M, s), M)) out.fail("saturation not idempotent");
    ++saturations;
  }

  auto base = make_base_ring(Q{});
  std::uniform_int_distribution<unsigned> expo(0, 6), extra(0, 4);
  for (unsigned rep = 0; rep < kMonomialIdeals; ++rep) {
    unsigned a = 1 + expo(rng), b = 1 + expo(rng);
    std::vector<Monomial> gens{Monomial::variable(0, a), Monomial::variable(1, b)};
    for (unsigned k = extra(rng); k > 0; --k) {
      Monomial m;
      m.set(0, expo(rng));
      m.set(1, expo(rng));
      gens.push_back(m);
    }
    std::vector<Polynomial<Q>> polys;
    for (const auto& m : gens) polys.push_back(Polynomial<Q>::monomial(base, m, Rational(1)));
    std::size_t direct = 0;
    for (unsigned i = 0; i < a; ++i) {
      for (unsigned j = 0; j < b; ++j) {
        Monomial m;
        m.set(0, i);
        m.set(1, j);
        bool inside = false;
        for (const auto& g : gens) inside = inside || g.divides(m);
        direct += !inside;
      }
    }
    if (quotient_dimension(Ideal<Q>(base, polys)) != direct) out.fail("staircase count mismatch");
  }
  double dt = seconds_since(t0);
  if (dt > kOracleSelfTest) out.fail("took " + std::to_string(dt) + " s");
  out.detail = std::to_string(bases) + " Groebner bases, " + std::to_string(saturations) + " saturations, " +
               std::to_string(kMonomialIdeals) + " monomial ideals; " + std::to_string(dt) + " s";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden formulas under specialization", criterion_golden},
      {2, "Rees ideal equals saturation oracle on random strata", criterion_reproof},
      {3, "F(f) = 0 and deg F * map degree = d", criterion_elimination},
      {4, "e1 suite", criterion_e1},
      {5, "birationality consistency triangle", criterion_triangle},
      {6, "CM content criterion vs reduction number", criterion_cm},
      {7, "cross-pipeline agreement", criterion_cross_pipeline},
      {8, "oracle self-tests", criterion_oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0),
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
