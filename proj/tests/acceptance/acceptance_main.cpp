#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blocklie/algebra.hpp"
#include "blocklie/isomorphism.hpp"
#include "blocklie/realizations.hpp"
#include "blocklie/sampling.hpp"
#include "blocklie/simplicity.hpp"
#include "support.hpp"

namespace blocklie {
namespace {

using testing::Config;
using testing::gv;
using testing::q;
using testing::z;

struct Outcome {
  bool pass = true;
  std::string detail;
};

AlgebraElement jacobiator(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v,
                          const AlgebraElement& w) {
  return bracket(alg, bracket(alg, u, v), w) + bracket(alg, bracket(alg, v, w), u) +
         bracket(alg, bracket(alg, w, u), v);
}

// (x^{sigma+delta} - x^sigma) * sum over permutations of sgn * d1(a) d2(b) d4(c)
AlgebraElement obstruction(const Algebra& alg, const AlgebraElement& u, const AlgebraElement& v,
                           const AlgebraElement& w) {
  const AlgebraElement* e[3] = {&u, &v, &w};
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  AlgebraElement det;
  for (int k = 0; k < 6; ++k) {
    const AlgebraElement t =
        elem_mul(alg, elem_mul(alg, derive(alg, 1, *e[perm[k][0]]), derive(alg, 2, *e[perm[k][1]])),
                 derive(alg, 4, *e[perm[k][2]]));
    if (k < 3) det += t; else det -= t;
  }
  return elem_mul(alg, alg.x(alg.sigma() + alg.delta()) - alg.x(alg.sigma()), det);
}

Outcome criterion1(const std::vector<Config>& configs) {
  Outcome out;
  std::size_t anti_bad = 0, jac_bad = 0, unexplained = 0, triples = 0;
  double slowest = 0;
  for (const auto& cfg : configs) {
    const auto start = std::chrono::steady_clock::now();
    const Algebra alg = cfg.algebra();
    Sampler sampler(alg, 101, {}, cfg.indeterminates);
    for (int trial = 0; trial < 1000; ++trial) {
      const AlgebraElement u = sampler.element(), v = sampler.element(), w = sampler.element();
      ++triples;
      if (!(bracket(alg, u, v) == -bracket(alg, v, u)) || !bracket(alg, u, u).is_zero()) ++anti_bad;
      const AlgebraElement jac = jacobiator(alg, u, v, w);
      if (!jac.is_zero()) {
        ++jac_bad;
        if (!(jac == obstruction(alg, u, v, w))) ++unexplained;
      }
    }
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::ostringstream d;
  d << configs.size() << " configs x 1000 triples; anticommutativity failures " << anti_bad
    << "; Jacobi failures " << jac_bad << "/" << triples << " ("
    << (unexplained == 0 ? "all equal (x^{sigma+delta} - x^sigma) det(d1,d2,d4)"
                         : std::to_string(unexplained) + " not matching the obstruction")
    << "); slowest config " << static_cast<int>(slowest) << " s";
  out.pass = anti_bad == 0 && jac_bad == 0 && slowest <= 60;
  out.detail = d.str();
  return out;
}

Outcome criterion2(const std::vector<Config>& configs) {
  std::size_t bad = 0, pairs = 0;
  for (const auto& cfg : configs) {
    const Algebra alg = cfg.algebra();
    Sampler sampler(alg, 202, {}, cfg.indeterminates);
    for (int trial = 0; trial < 1000; ++trial) {
      const AlgebraElement u = sampler.element(), v = sampler.element();
      const AlgebraElement uv = bracket(alg, u, v, BracketPath::expanded);
      ++pairs;
      if (!(uv == bracket(alg, u, v, BracketPath::definition)) ||
          !(uv == partial_bracket(alg, 1, u, v) + partial_bracket(alg, 2, u, v))) {
        ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion3(const std::vector<Config>& configs) {
  std::size_t bad2 = 0, bad3 = 0, n2 = 0, n3 = 0;
  for (const auto& cfg : configs) {
    const Algebra alg = cfg.algebra();
    Sampler sampler(alg, 303, {}, cfg.indeterminates);
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial m = sampler.monomial();
      AlgebraElement expect = alg.x(m.alpha, m.i, alg.projection(m.alpha, 4));
      if (m.i[3] > 0) {
        TExps lower = m.i;
        --lower[3];
        expect += alg.x(m.alpha, lower, FieldElement(static_cast<long>(m.i[3])));
      }
      ++n2;
      if (!(bracket(alg, alg.one(), alg.x(m.alpha, m.i)) == expect)) ++bad2;
    }
    const AlgebraElement xs = alg.x(-alg.sigma());
    for (int found = 0, tries = 0; found < 200 && tries < 200000; ++tries) {
      const Monomial m = sampler.monomial();
      if (!alg.projection(m.alpha, 4).is_zero() || m.i[3] != 0) continue;
      ++found;
      AlgebraElement expect = alg.x(m.alpha, m.i, -alg.projection(m.alpha, 2));
      if (m.i[1] > 0) {
        TExps lower = m.i;
        --lower[1];
        expect -= alg.x(m.alpha, lower, FieldElement(static_cast<long>(m.i[1])));
      }
      ++n3;
      if (!(bracket(alg, xs, alg.x(m.alpha, m.i)) == expect)) ++bad3;
    }
  }
  std::ostringstream d;
  d << "ad_1 on " << n2 << " monomials (" << bad2 << " mismatches), ad_{x^-sigma} on " << n3
    << " monomials with beta4 = j4 = 0 (" << bad3 << " mismatches)";
  return {bad2 == 0 && bad3 == 0 && n3 >= 200 * configs.size(), d.str()};
}

Outcome criterion4() {
  const Algebra alg = testing::z4_algebra();
  Sampler sampler(alg, 404);
  std::size_t bad_pairs = 0, bad_span = 0, span_checks = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const AlgebraElement u = sampler.element(), v = sampler.element();
    if (!derived_membership(alg, bracket(alg, u, v))) ++bad_pairs;
  }
  std::vector<AlgebraElement> span;
  for (int k = 0; k < 50; ++k) span.push_back(sampler.spanning_element());
  for (std::size_t a = 0; a < span.size(); ++a) {
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      ++span_checks;
      if (!derived_membership(alg, bracket(alg, span[a], span[b]))) ++bad_span;
    }
  }
  const bool rejects = !derived_membership(alg, alg.x(alg.sigma()));
  std::ostringstream d;
  d << "Z4, J = 0: 500 random brackets (" << bad_pairs << " rejected), " << span_checks
    << " spanning-set brackets (" << bad_span << " rejected), x^sigma "
    << (rejects ? "rejected" : "accepted");
  return {bad_pairs == 0 && bad_span == 0 && rejects, d.str()};
}

Outcome criterion5(const std::vector<Config>& configs) {
  std::size_t failures = 0, runs = 0, steps = 0;
  std::set<std::string> routes;
  std::string first_error;
  for (const auto& cfg : configs) {
    const Algebra alg = cfg.algebra();
    Sampler sampler(alg, 505, {}, cfg.indeterminates);
    for (int trial = 0; trial < 200; ++trial) {
      const AlgebraElement u = sampler.derived_element();
      ++runs;
      try {
        const ReductionTrace tr = reduce_to_one(alg, u);
        const ReplayReport rep = replay(alg, tr);
        steps += tr.steps.size();
        for (const char* r : {"case1", "case2", "subcase-i;", "subcase-ii"}) {
          if ((tr.route + ";").find(r) != std::string::npos) routes.insert(r);
        }
        if (!rep.ok || !tr.result.scalar_value() || !tr.result.scalar_value()->is_one()) {
          ++failures;
          if (first_error.empty()) first_error = cfg.name + ": " + rep.error;
        }
      } catch (const std::exception& e) {
        ++failures;
        if (first_error.empty()) first_error = cfg.name + ": " + e.what();
      }
    }
  }
  std::ostringstream d;
  d << runs << " reductions, " << failures << " failures, " << steps << " replayed steps; routes";
  for (const auto& r : routes) d << " " << (r.back() == ';' ? r.substr(0, r.size() - 1) : r);
  if (!first_error.empty()) d << "; first error: " << first_error;
  return {failures == 0 && routes.size() == 4, d.str()};
}

Outcome criterion6(const std::vector<Config>& configs) {
  const std::vector<IsoParams> candidates = {
      IsoParams::identity(),
      {0L, 2L, 0L, 2L},
      {0L, -1L, 0L, -1L},
      {1L, 1L, 0L, 1L},
      {0L, 1L, 1L, 1L},
      {q(1, 2), 3L, -1L, 3L},
      {0L, q(1, 2), 0L, q(1, 2)},
      {2L, -3L, q(5, 3), -3L},
      {0L, 4L, 0L, 1L},
  };
  std::size_t tuples = 0, counterexamples = 0, theta_bad = 0, forced = 0;
  std::string problem;
  for (const auto& cfg : configs) {
    const Algebra src = cfg.algebra();
    std::size_t used = 0;
    for (const auto& p : candidates) {
      if (used == 5) break;
      if (!param_violations(p, src.j()).empty()) continue;
      Chi chi;
      try {
        chi = chi_construct(src.gamma(), p);
      } catch (const ChiUnsolvable&) {
        continue;
      }
      std::vector<GroupVector> gens;
      for (const auto& b : src.gamma().basis()) gens.push_back(tau_apply(p, b));
      const Algebra dst(testing::make_spec(gens, src.delta3(), src.j()));
      ++used;
      if (p.a1.is_zero() && src.j().n(2) && !src.j().n(1)) ++forced;
      if (p.a3.is_zero() && src.j().n(4) && !src.j().n(3)) ++forced;
      const HomReport r = hom_verify(src, dst, p, chi, 500, 600 + tuples, cfg.indeterminates);
      ++tuples;
      if (!r.ok) {
        ++counterexamples;
        if (problem.empty()) problem = cfg.name + " " + p.to_string();
      }
      const Theta theta(src, dst, p, chi);
      if (!(theta(src.one()) == dst.x(dst.zero_alpha(), {}, p.a4.inverse()))) ++theta_bad;
    }
    if (used < 5 && problem.empty()) problem = cfg.name + ": fewer than 5 admissible tuples";
    if (used < 5) ++counterexamples;
  }
  const Algebra z4 = testing::z4_algebra();
  const Chi bad = chi_solve(z4.gamma(), FieldElement(2L), FieldElement(2L));
  const HomReport control = hom_verify(z4, z4, IsoParams::identity(), bad, 500, 699);
  std::ostringstream d;
  d << tuples << " tuples x 500 samples, " << counterexamples << " failing; " << forced
    << " tuples under a forced a1 = 0 or a3 = 0; theta(1) = a4^-1 mismatches " << theta_bad
    << "; corrupted chi " << (control.ok ? "not caught" : "caught within 500 samples");
  if (!problem.empty()) d << "; " << problem;
  return {counterexamples == 0 && theta_bad == 0 && forced > 0 && !control.ok, d.str()};
}

Outcome criterion7() {
  std::ostringstream d;
  bool pass = true;
  for (int c = 1; c <= 3; ++c) {
    for (long m : {1L, -1L, 2L}) {
      const CrosscheckReport r = crosscheck(make_realization(c, m), 200, 700 + c);
      pass = pass && r.ok;
      if (!r.ok) d << "case " << c << " m " << m << " failed: " << r.detail << "; ";
    }
  }
  d << "cases 1-3 (m = 1, -1, 2) " << (pass ? "agree" : "disagree") << " on 200 samples each; case 4:";
  std::vector<std::string> passing;
  for (auto [reading, name] : {std::pair{Case4Reading::printed, "printed"}, std::pair{Case4Reading::symmetric, "symmetric"}}) {
    const CrosscheckReport r = crosscheck(make_realization(4, 1, reading), 200, 707);
    d << " " << name << " " << (r.ok ? "passes" : "fails");
    if (r.ok) passing.push_back(name);
  }
  if (passing.size() == 1) d << "; selected reading: " << passing.front();
  return {pass && passing.size() == 1, d.str()};
}

bool constant(const std::vector<std::size_t>& s) {
  return std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x == s.front(); });
}

bool increasing(const std::vector<std::size_t>& s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] <= s[k - 1]) return false;
  }
  return true;
}

// Bound: dim span{x^{alpha, i - k 1_[4]}} over the terms of v.
bool bounded_by_support(const std::vector<std::size_t>& s, const AlgebraElement& v) {
  std::size_t bound = 0;
  for (const auto& [m, c] : v.terms()) bound += m.i[3] + 1;
  return std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x <= bound; });
}

Outcome criterion8(const std::vector<Config>& configs) {
  std::size_t const_checks = 0, const_bad = 0, stable_checks = 0, stable_bad = 0;
  for (const auto& cfg : configs) {
    const Algebra alg = cfg.algebra();
    Sampler sampler(alg, 808, {}, cfg.indeterminates);
    bool pi4 = false;
    for (const auto& b : alg.gamma().basis()) pi4 = pi4 || !b.coords[3].is_zero();
    for (int found = 0, tries = 0; pi4 && found < 10 && tries < 10000; ++tries) {
      const Monomial m = sampler.monomial();
      if (m.i[3] != 0) continue;
      ++found;
      ++const_checks;
      if (!constant(ad_span_probe(alg, alg.one(), alg.x(m.alpha, m.i), 8))) ++const_bad;
    }
    for (int found = 0, tries = 0; found < 10 && tries < 10000; ++tries) {
      const Monomial m = sampler.monomial();
      if (!alg.projection(m.alpha, 4).is_zero() || m.i[1] != 0 || m.i[3] != 0) continue;
      ++found;
      ++const_checks;
      if (!constant(ad_span_probe(alg, alg.x(-alg.sigma()), alg.x(m.alpha, m.i), 8))) ++const_bad;
    }
    for (int trial = 0; pi4 && trial < 10; ++trial) {
      const AlgebraElement v = sampler.element();
      ++stable_checks;
      if (!bounded_by_support(ad_span_probe(alg, alg.one(), v, 8), v)) ++stable_bad;
    }
  }
  std::size_t inc_checks = 0, inc_bad = 0;
  const Algebra z4 = testing::z4_algebra();
  const std::vector<std::pair<AlphaVec, AlphaVec>> witnesses = {
      {testing::av({0, 0, 1, 1}), testing::av({0, 0, 0, 1})},
      {testing::av({0, 1, 0, 0}), testing::av({1, 0, 0, 0})},
  };
  for (const auto& [u, v] : witnesses) {
    ++inc_checks;
    if (!increasing(ad_span_probe(z4, z4.x(u), z4.x(v), 8))) ++inc_bad;
  }
  std::ostringstream d;
  d << const_checks << " eigen-argument probes for u = 1 (pi4 != 0) and u = x^-sigma on ker pi4 (" << const_bad
    << " not constant), " << stable_checks << " random-argument probes for u = 1 (" << stable_bad
    << " exceeding the t4-flag bound), " << inc_checks << " witnesses incl. u = x^(0,0,1,1) to depth 8 ("
    << inc_bad << " not strictly increasing)";
  return {const_bad == 0 && stable_bad == 0 && inc_bad == 0, d.str()};
}

Outcome criterion9(const std::vector<Config>& configs) {
  std::size_t accepted = 0, rejected = 0;
  for (int c = 1; c <= 4; ++c) {
    const CaseData d = case_data(c, 1);
    if (validate_spec(d.generators, d.delta3, d.j).valid()) ++accepted;
  }
  const auto a = z("a"), b = z("b"), c = z("c");
  const std::vector<GroupVector> case4{gv(1L, 0L, 1L, 0L), gv(0L, 1L, b, 0L), gv(0L, 0L, c, 0L), gv(a, 0L, 0L, 1L)};
  if (!validate_spec(case4, b, JPattern::of(false, false, false, true)).valid()) ++rejected;
  if (!validate_spec({gv(1L, 0L, 0L, 0L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L), JPattern{}).valid()) ++rejected;
  if (!validate_spec({gv(1L, 0L, 0L, 0L), gv(0L, 1L, 0L, 1L), gv(0L, 0L, 1L, 0L)}, FieldElement(1L), JPattern{})
           .valid()) {
    ++rejected;
  }
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<long> coord(-50, 50);
  std::size_t points = 0, bad = 0;
  for (const auto& cfg : configs) {
    const Algebra alg = cfg.algebra();
    for (int trial = 0; trial < 1000; ++trial) {
      IntVec v(alg.rank());
      for (auto& x : v) x = coord(rng);
      ++points;
      const auto back = alg.gamma().coordinates_of(alg.gamma().element(v));
      if (!back || *back != v) ++bad;
    }
  }
  std::ostringstream d;
  d << accepted << "/4 data sets accepted, " << rejected << "/3 invalid variants rejected, " << points
    << " lattice points round-tripped (" << bad << " mismatches)";
  return {accepted == 4 && rejected == 3 && bad == 0, d.str()};
}

}  // namespace
}  // namespace blocklie

int main(int argc, char** argv) {
  using namespace blocklie;
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    if (std::string(argv[k]) == "--criterion" && k + 1 < argc) only = std::atoi(argv[++k]);
  }
  const std::vector<testing::Config> configs = testing::standard_configs();
  const std::vector<std::function<Outcome()>> checks = {
      [&] { return criterion1(configs); }, [&] { return criterion2(configs); },
      [&] { return criterion3(configs); }, [] { return criterion4(); },
      [&] { return criterion5(configs); }, [&] { return criterion6(configs); },
      [] { return criterion7(); },         [&] { return criterion8(configs); },
      [&] { return criterion9(configs); },
  };
  bool all = true;
  for (std::size_t n = 1; n <= checks.size(); ++n) {
    if (only != 0 && static_cast<std::size_t>(only) != n) continue;
    Outcome o;
    try {
      o = checks[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
