#include "seifert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "seifert/census.hpp"
#include "seifert/chern_lattice.hpp"
#include "seifert/error.hpp"
#include "seifert/homology.hpp"
#include "seifert/surgery.hpp"

namespace seifert {

namespace {

constexpr std::size_t kMaxExamples = 5;

// Outcome of one named check on one case: empty when it passed.
using Outcome = std::optional<std::string>;
using CheckFn = std::function<Outcome()>;

Outcome guarded(const CheckFn& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

Outcome expect(bool ok, const std::string& what) { return ok ? Outcome{} : Outcome{what}; }

class Ledger {
 public:
  CheckTally& tally(const std::string& name) {
    for (auto& t : tallies_) {
      if (t.name == name) return t;
    }
    tallies_.push_back({name, 0, 0, {}});
    return tallies_.back();
  }

  void record(const std::string& name, const std::string& label, const Outcome& outcome) {
    CheckTally& t = tally(name);
    ++t.cases;
    if (outcome) {
      ++t.failures;
      if (t.examples.size() < kMaxExamples) t.examples.push_back(label + ": " + *outcome);
    }
  }

  void run(const std::string& name, const std::string& label, const CheckFn& fn) { record(name, label, guarded(fn)); }

  std::vector<CheckTally> take() { return std::move(tallies_); }

 private:
  std::vector<CheckTally> tallies_;
};

struct InstanceOutcome {
  std::vector<std::pair<std::string, Outcome>> results;
};

InstanceOutcome check_instance(const SeifertData& m, std::uint64_t cap) {
  InstanceOutcome out;
  auto add = [&](const std::string& name, const CheckFn& fn) { out.results.emplace_back(name, guarded(fn)); };

  add("orbits_match_census", [&]() -> Outcome {
    const OrbitCounts orbits = count_orbits(m, {cap, 1});
    const CensusResult c = count_total(m);
    return expect(Integer(orbits.mixed) == c.phi && Integer(orbits.equal) == c.psi && c.total == c.phi + c.psi,
                  "orbits (" + std::to_string(orbits.mixed) + "," + std::to_string(orbits.equal) + ") vs census (" +
                      c.phi.get_str() + "," + c.psi.get_str() + ")");
  });
  add("lower_bounds_meet_census", [&]() -> Outcome {
    const Integer phi = phi_lower_bound(m);
    const Integer psi = psi_lower_bound(m);
    return expect(phi == count_phi(m) && psi == count_psi(m),
                  "lower bounds (" + phi.get_str() + "," + psi.get_str() + ")");
  });
  add("z_slopes", [&]() -> Outcome {
    const auto z = z_slopes(m);
    return expect(z[0] == Slope(0, 1) && z[1] == Slope(-1, 1) && z[2] == Slope(-1, 1),
                  "z slopes " + z[0].str() + "," + z[1].str() + "," + z[2].str());
  });
  add("z_source_bounds", [&]() -> Outcome {
    const Rational s1 = z_source_slope(m.legs[0]);
    bool ok = Rational(0) <= s1 && s1 < Rational(1);
    for (int i = 1; i < 3; ++i) {
      const Rational s = z_source_slope(m.legs[i]);
      // The analogue of the leg-1 estimate gives -1 <= s, with equality
      // exactly when r = (alpha-1)/alpha.
      ok = ok && Rational(-1) <= s && s < Rational(0);
    }
    return expect(ok, "source slope outside its strip");
  });
  add("leg_data", [&]() -> Outcome {
    for (const auto& leg : m.legs) {
      const auto& g = leg.gluing;
      if (evaluate(leg.expansion) != -leg.r.reciprocal()) return "expansion of leg " + std::to_string(leg.index);
      if (g.beta * g.alpha_prime - g.alpha * g.beta_prime != 1) return "gluing identity on leg " + std::to_string(leg.index);
      if (leg.slopes.u_slope != Slope(Rational(-g.alpha, g.alpha_prime))) return "u slope on leg " + std::to_string(leg.index);
      if (leg.slopes.u_slope != Slope(evaluate(leg.expansion.reversed()))) return "reversal on leg " + std::to_string(leg.index);
      for (const auto& layer : leg.slopes.layers) {
        if (farey_determinant(layer.outer, layer.inner) != layer.basic_slices) return "layer determinant";
        for (std::size_t i = 0; i + 1 < layer.path.size(); ++i) {
          if (!farey_adjacent(layer.path[i], layer.path[i + 1])) return "basic slice not adjacent";
        }
      }
    }
    return std::nullopt;
  });
  return out;
}

void check_mp_family(Ledger& ledger, long p) {
  const std::string label = "p=" + std::to_string(p);
  ledger.run("mp_census", label, [&]() -> Outcome {
    const SeifertData m = parse_seifert(-1, Rational(1, 2), Rational(1, 2), Rational(Integer(1), Integer(p)));
    const CensusResult c = count_total(m);
    const OrbitCounts o = count_orbits(m);
    return expect(c.total == 3 && o.mixed == 2 && o.equal == 1, "total " + c.total.get_str());
  });
  ledger.run("mp_homology", label, [&]() -> Outcome {
    const IntMatrix l = mp_linking_matrix(p);
    const IntMatrix q = d_plumbing(p);
    const IntVector expected = p % 2 ? IntVector{4} : IntVector{2, 2};
    return expect(abs(determinant(l)) == 4 && abs(determinant(q)) == 4 && cokernel_invariants(l) == expected &&
                      cokernel_invariants(q) == expected && inertia(l).signature() == -1,
                  "cokernel mismatch");
  });
  ledger.run("mp_d_invariants", label, [&]() -> Outcome {
    const IntMatrix q = d_plumbing(p);
    const auto ks = initial_vectors(p);
    const Rational k2[4] = {Rational(-p - 2), Rational(-p - 2), Rational(-4), Rational(0)};
    for (std::size_t i = 0; i < 4; ++i) {
      if (k_squared(q, ks[i]) != k2[i]) return "K^2 of K" + std::to_string(i + 1);
      if (!is_initial_vector(q, ks[i])) return "K" + std::to_string(i + 1) + " is not initial";
    }
    const auto d = d_invariants_mp(p);
    return expect(d[0] == Rational(0) && d[1] == Rational(0) && d[2] == Rational(Integer(p - 2), Integer(4)) &&
                      d[3] == Rational(Integer(p + 2), Integer(4)),
                  "d invariants");
  });
  ledger.run("mp_spinc", label, [&]() -> Outcome {
    const IntMatrix q = d_plumbing(p);
    const auto ks = initial_vectors(p);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!spinc_distinct(q, ks[i], ks[j])) return "K" + std::to_string(i + 1) + " ~ K" + std::to_string(j + 1);
      }
    }
    const bool even = p % 2 == 0;
    const bool zero[4] = {even, even, true, true};
    for (std::size_t i = 0; i < 4; ++i) {
      if (chern_class_zero(q, ks[i]) != zero[i]) return "c1 of K" + std::to_string(i + 1);
    }
    return std::nullopt;
  });
  ledger.run("mp_d3", label, [&]() -> Outcome {
    const Rational expected(Integer(2 - p), Integer(4));
    return expect(d3_from_diagram(xi_diagram(p, false)) == expected && d3_from_diagram(xi_diagram(p, true)) == expected,
                  "d3 differs from (2-p)/4");
  });
}

void check_lattices(Ledger& ledger, const VerifyOptions& options) {
  for (long p = 2; p <= options.stein_max; ++p) {
    for (long k = 2; k <= options.stein_max; ++k) {
      for (long l = 2; l <= options.stein_max; ++l) {
        ledger.run("stein_pkl", "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(l) + ")",
                   [&] { return expect(count_stein_classes_pkl(p, k, l) == stein_classes_pkl_formula(p, k, l), "count"); });
      }
    }
  }
  for (long p = 2; p <= 2 * options.stein_max; ++p) {
    for (long k = 2; k <= 2 * options.stein_max; ++k) {
      ledger.run("stein_pk", "(" + std::to_string(p) + "," + std::to_string(k) + ")",
                 [&] { return expect(count_stein_classes_pk(p, k) == stein_classes_pk_formula(p, k), "count"); });
    }
  }
  const long n = options.lattice_max;
  for (auto variant : {CobordismVariant::pklm, CobordismVariant::pkm, CobordismVariant::pkl, CobordismVariant::pk}) {
    const long l_max = has_y(variant) ? n : 2;
    const long m_max = has_z(variant) ? n : 2;
    for (long p = 2; p <= n; ++p) {
      for (long k = 2; k <= n; ++k) {
        for (long l = 2; l <= l_max; ++l) {
          for (long m = 2; m <= m_max; ++m) {
            const CobordismParams params{p, variant, k, l, m};
            const std::string label = to_string(variant) + "(" + std::to_string(p) + "," + std::to_string(k) + "," +
                                      std::to_string(l) + "," + std::to_string(m) + ")";
            ledger.run("cobordism_predicate", label, [&]() -> Outcome {
              const CobordismLattice lattice(params);
              const auto tuples = all_tuples(params);
              for (const auto& a : tuples) {
                for (const auto& b : tuples) {
                  if (lattice.equal(a, b) != cobordism_condition(a, b)) return "predicate and conditions disagree";
                }
              }
              return std::nullopt;
            });
            ledger.run("cobordism_classes", label, [&] {
              return expect(count_cobordism_classes(params) == cobordism_classes_formula(params), "class count");
            });
          }
        }
      }
    }
  }
}

}  // namespace

bool VerifyResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.failures == 0; });
}

std::vector<SeifertData> sweep_instances(long max_denominator) {
  std::vector<Rational> values;
  for (long a = 2; a <= max_denominator; ++a) {
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) == 1) values.emplace_back(Integer(b), Integer(a));
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  const Rational half(1, 2);
  std::vector<SeifertData> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i; j < values.size() && values[j] >= half; ++j) {
      for (std::size_t k = j; k < values.size(); ++k) out.push_back(parse_seifert(-1, values[i], values[j], values[k]));
    }
  }
  return out;
}

VerifyResult run_verification(const VerifyOptions& options) {
  if (options.max_denominator < 2) throw ValidationError("max denominator must be at least 2");
  const std::vector<SeifertData> instances = sweep_instances(options.max_denominator);
  std::vector<InstanceOutcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) outcomes[i] = check_instance(instances[i], options.cap);
  };
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  Ledger ledger;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const auto& [name, outcome] : outcomes[i].results) ledger.record(name, instances[i].str(), outcome);
  }
  for (long p = 2; p <= options.p_max; ++p) check_mp_family(ledger, p);
  for (long p = 2; p <= options.fill_max; ++p) {
    ledger.run("fillability_congruence", "p=" + std::to_string(p),
               [&] { return expect(fillability_obstruction(p) == ((p - 2) % 8 != 0), "search disagrees with congruence"); });
  }
  check_lattices(ledger, options);

  VerifyResult result;
  result.instances = instances.size();
  result.checks = ledger.take();
  return result;
}

}  // namespace seifert
