#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seifert/seifert.hpp"
#include "seifert/sign_orbits.hpp"

namespace seifert {

// Every M(-1; r1, r2, r3) with r1 >= r2 >= r3, r2 >= 1/2 and all denominators
// at most max_denominator, ordered by (r1, r2, r3) descending.
std::vector<SeifertData> sweep_instances(long max_denominator);

struct VerifyOptions {
  long max_denominator = 12;
  unsigned jobs = 1;
  long p_max = 64;         // M_p family checks run for p = 2..p_max
  long fill_max = 200;     // fillability congruence for p = 2..fill_max
  long lattice_max = 5;    // cobordism lattice sweeps over parameters 2..lattice_max
  long stein_max = 10;     // pkl enumeration over 2..stein_max (pk over twice that)
  std::uint64_t cap = kDefaultStateCap;
};

struct CheckTally {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;  // first few failure descriptions
};

struct VerifyResult {
  std::uint64_t instances = 0;
  std::vector<CheckTally> checks;
  bool ok() const;
};

// Runs every cross-module assertion; instance checks are spread over
// options.jobs threads and merged in input order, so the result is
// independent of the job count.
VerifyResult run_verification(const VerifyOptions& options);

}  // namespace seifert
