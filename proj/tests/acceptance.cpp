// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seifert/census.hpp"
#include "seifert/chern_lattice.hpp"
#include "seifert/continued_fraction.hpp"
#include "seifert/farey.hpp"
#include "seifert/homology.hpp"
#include "seifert/int_matrix.hpp"
#include "seifert/seifert.hpp"
#include "seifert/sign_orbits.hpp"
#include "seifert/surgery.hpp"
#include "seifert/verify.hpp"

using namespace seifert;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Verdict census_cross_validation() {
  Verdict v;
  const auto instances = sweep_instances(12);
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  std::vector<std::string> failures;
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      const SeifertData& m = instances[i];
      const CensusResult c = count_total(m);
      const OrbitCounts o = count_orbits(m);
      if (Integer(o.mixed) != c.phi || Integer(o.equal) != c.psi || c.total != c.phi + c.psi) {
        std::lock_guard<std::mutex> guard(lock);
        failures.push_back(m.str());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < worker_count(); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (!failures.empty()) v.fail(std::to_string(failures.size()) + " mismatches, first " + failures.front());
  else v.detail = std::to_string(instances.size()) + " instances";
  return v;
}

Verdict mp_family() {
  Verdict v;
  for (long p = 2; p <= 64; ++p) {
    const CensusResult c = count_total(parse_seifert(-1, q(1, 2), q(1, 2), q(1, p)));
    if (c.total != 3) v.fail("p = " + std::to_string(p) + " gives " + c.total.get_str());
  }
  if (v.pass) v.detail = "total 3 for p = 2..64";
  return v;
}

Verdict d_invariants() {
  Verdict v;
  for (long p = 2; p <= 64; ++p) {
    const IntMatrix qf = d_plumbing(p);
    const auto ks = initial_vectors(p);
    const Rational k2[4] = {Rational(-p - 2), Rational(-p - 2), Rational(-4), Rational(0)};
    for (std::size_t i = 0; i < 4; ++i) {
      if (k_squared(qf, ks[i]) != k2[i]) v.fail("K^2 at p = " + std::to_string(p));
    }
    const auto d = d_invariants_mp(p);
    if (d[0] != Rational(0) || d[1] != Rational(0) || d[2] != q(p - 2, 4) || d[3] != q(p + 2, 4)) {
      v.fail("d at p = " + std::to_string(p));
    }
  }
  if (v.pass) v.detail = "p = 2..64";
  return v;
}

Verdict homology() {
  Verdict v;
  for (long p = 2; p <= 64; ++p) {
    const IntVector expected = p % 2 ? IntVector{4} : IntVector{2, 2};
    const IntMatrix l = mp_linking_matrix(p);
    const IntMatrix qf = d_plumbing(p);
    if (cokernel_invariants(l) != expected || cokernel_invariants(qf) != expected) {
      v.fail("cokernel at p = " + std::to_string(p));
    }
    if (abs(determinant(l)) != 4 || abs(determinant(qf)) != 4) v.fail("det at p = " + std::to_string(p));
  }
  if (v.pass) v.detail = "Z/4 for odd p, Z/2+Z/2 for even p";
  return v;
}

Verdict d3_values() {
  Verdict v;
  for (long p = 2; p <= 64; ++p) {
    const Rational expected = q(2 - p, 4);
    if (d3_from_diagram(xi_diagram(p, false)) != expected || d3_from_diagram(xi_diagram(p, true)) != expected) {
      v.fail("p = " + std::to_string(p));
    }
  }
  if (v.pass) v.detail = "(2-p)/4 for both structures, p = 2..64";
  return v;
}

Verdict stein_lattice_counts() {
  Verdict v;
  for (long p = 2; p <= 10; ++p) {
    for (long k = 2; k <= 10; ++k) {
      for (long l = 2; l <= 10; ++l) {
        if (count_stein_classes_pkl(p, k, l) != 2 * (k - 1) * (l - 1) + (p - 1) * (k + l - 2)) {
          v.fail("pkl at " + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(l));
        }
      }
    }
  }
  for (long p = 2; p <= 20; ++p) {
    for (long k = 2; k <= 20; ++k) {
      if (count_stein_classes_pk(p, k) != 2 * (k - 1) + p - 1) {
        v.fail("pk at " + std::to_string(p) + "," + std::to_string(k));
      }
    }
  }
  if (v.pass) v.detail = "729 + 361 parameter sets";
  return v;
}

const CobordismVariant kVariants[] = {CobordismVariant::pklm, CobordismVariant::pkm, CobordismVariant::pkl,
                                      CobordismVariant::pk};

Verdict cobordism_classes() {
  Verdict v;
  long pairs = 0;
  for (auto var : kVariants) {
    for (long p = 2; p <= 5; ++p) {
      for (long k = 2; k <= 5; ++k) {
        for (long l = 2; l <= 5; ++l) {
          for (long m = 2; m <= 5; ++m) {
            const CobordismParams params{p, var, k, l, m};
            const long expected = (k - 1) * (has_y(var) ? l - 1 : 1) * (has_z(var) ? m : 1);
            if (count_cobordism_classes(params) != expected) v.fail("classes for " + to_string(var));
            if (!has_y(var) && l > 2) continue;
            if (!has_z(var) && m > 2) continue;
            const CobordismLattice lattice(params);
            const auto tuples = all_tuples(params);
            for (const auto& a : tuples) {
              for (const auto& b : tuples) {
                ++pairs;
                if (lattice.equal(a, b) != cobordism_condition(a, b)) v.fail("predicate for " + to_string(var));
              }
            }
          }
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(pairs) + " ordered pairs";
  return v;
}

Verdict fillability() {
  Verdict v;
  for (long p = 2; p <= 200; ++p) {
    const FillabilitySearch s = fillability_search(p);
    if (s.obstructed != ((p - 2) % 8 != 0)) v.fail("p = " + std::to_string(p));
    if (s.witness) {
      long total = 0;
      for (long n : *s.witness) total += 4 * n * (n + 1);
      if (total != p - 2) v.fail("bad witness at p = " + std::to_string(p));
    }
  }
  if (v.pass) v.detail = "p = 2..200";
  return v;
}

Verdict slope_machinery() {
  Verdict v;
  long legs = 0;
  std::vector<Rational> all, upper;
  for (long alpha = 2; alpha <= 50; ++alpha) {
    for (long beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const Rational r = q(beta, alpha);
      all.push_back(r);
      if (2 * beta >= alpha) upper.push_back(r);
      const ContinuedFraction c = negative_expansion(-r.reciprocal());
      const LayerSlopes s = leg_layer_slopes(c);
      if (!(s.u_slope == Slope(evaluate(c.reversed())))) v.fail("boundary slope for " + r.str());
      for (const Layer& layer : s.layers) {
        if (farey_determinant(layer.outer, layer.inner) != layer.basic_slices) v.fail("layer count for " + r.str());
        for (std::size_t i = 0; i + 1 < layer.path.size(); ++i) {
          if (!farey_adjacent(layer.path[i], layer.path[i + 1])) v.fail("adjacency for " + r.str());
        }
      }
      ++legs;
    }
  }
  long instances = 0;
  auto check = [&](const SeifertData& m) {
    const auto z = z_slopes(m);
    if (!(z[0] == Slope(Rational(0)) && z[1] == Slope(Rational(-1)) && z[2] == Slope(Rational(-1)))) {
      v.fail("z slopes for " + m.str());
    }
    ++instances;
  };
  for (const auto& r : upper) check(parse_seifert(-1, r, q(1, 2), q(1, 2)));
  for (const auto& r : upper) check(parse_seifert(-1, q(49, 50), r, q(1, 3)));
  for (const auto& r : all) check(parse_seifert(-1, q(1, 2), q(1, 2), r));
  if (v.pass) v.detail = std::to_string(legs) + " legs, " + std::to_string(instances) + " z-slope instances";
  return v;
}

Verdict spinc_distinctness() {
  Verdict v;
  for (long p = 2; p <= 64; ++p) {
    const IntMatrix qf = d_plumbing(p);
    const auto ks = initial_vectors(p);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!spinc_distinct(qf, ks[i], ks[j])) v.fail("K" + std::to_string(i + 1) + " ~ K" + std::to_string(j + 1));
      }
    }
    const bool even = p % 2 == 0;
    if (chern_class_zero(qf, ks[0]) != even || chern_class_zero(qf, ks[1]) != even || !chern_class_zero(qf, ks[2]) ||
        !chern_class_zero(qf, ks[3])) {
      v.fail("c1 pattern at p = " + std::to_string(p));
    }
  }
  if (v.pass) v.detail = "pairwise distinct, c1(K3) = c1(K4) = 0, c1(K1), c1(K2) zero iff p even";
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::mt19937_64 gen(42);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };

  for (int trial = 0; trial < 1000; ++trial) {
    const auto r = static_cast<std::size_t>(uniform(1, 8));
    const auto c = static_cast<std::size_t>(uniform(1, 8));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-9, 9);
    }
    const SmithForm s = smith_normal_form(m);
    const IntMatrix d = s.left * m * s.right;
    bool ok = abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) ok = ok && d(i, j) == (i == j ? s.factors[i] : Integer(0));
    }
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
      ok = ok && (s.factors[i] == 0 ? s.factors[i + 1] == 0 : s.factors[i + 1] % s.factors[i] == 0);
    }
    if (!ok) v.fail("SNF on " + m.str());
  }

  int shifts = 0;
  while (shifts < 1000) {
    const auto n = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix qf(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) qf(i, j) = qf(j, i) = uniform(-4, 4);
    }
    if (determinant(qf) == 0) continue;
    CharVector k(n), shifted(n);
    IntVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      k[i] = 2 * uniform(-3, 3) + (qf(i, i) % 2 != 0 ? 1 : 0);
      x[i] = uniform(-4, 4);
    }
    const IntVector qx = qf.apply(x);
    Integer kx = 0, xqx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      shifted[i] = k[i] + 2 * qx[i];
      kx += k[i] * x[i];
      xqx += x[i] * qx[i];
    }
    if (k_squared(qf, shifted) != k_squared(qf, k) + Rational(Integer(4 * kx + 4 * xqx))) v.fail("shift identity");
    ++shifts;
  }

  for (long p = 2; p <= 64; ++p) {
    SurgeryDiagram d = xi_diagram(p);
    SurgeryDiagram negated = d;
    for (auto& comp : negated.components) comp.rot = -comp.rot;
    if (d3_from_diagram(d) != d3_from_diagram(negated)) v.fail("rot negation at p = " + std::to_string(p));
  }

  for (auto var : kVariants) {
    for (int trial = 0; trial < 40; ++trial) {
      const CobordismParams params{uniform(2, 5), var, uniform(2, 5), uniform(2, 5), uniform(2, 5)};
      const CobordismLattice lattice(params);
      const auto tuples = all_tuples(params);
      const long last = static_cast<long>(tuples.size()) - 1;
      for (int t = 0; t < 100; ++t) {
        const RotTuple& a = tuples[static_cast<std::size_t>(uniform(0, last))];
        const RotTuple& b = tuples[static_cast<std::size_t>(uniform(0, last))];
        const RotTuple& c = tuples[static_cast<std::size_t>(uniform(0, last))];
        if (!lattice.equal(a, a)) v.fail("reflexivity");
        if (lattice.equal(a, b) != lattice.equal(b, a)) v.fail("symmetry");
        if (lattice.equal(a, b) && lattice.equal(b, c) && !lattice.equal(a, c)) v.fail("transitivity");
      }
    }
  }
  if (v.pass) v.detail = "SNF x1000, shift identity x1000, rot negation, equivalence laws";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"census cross-validation (alpha <= 12)", census_cross_validation},
      {"M_p family has three structures", mp_family},
      {"d-invariants and K^2", d_invariants},
      {"first homology of M_p", homology},
      {"d3 of both structures", d3_values},
      {"Stein lattice counts", stein_lattice_counts},
      {"cobordism spin^c predicate and class counts", cobordism_classes},
      {"fillability congruence", fillability},
      {"slope machinery (denominator <= 50)", slope_machinery},
      {"spin^c distinctness and Chern classes", spinc_distinctness},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << v.detail << " ("
         << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!v.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
