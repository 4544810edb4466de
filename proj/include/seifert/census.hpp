#pragma once

#include <string>

#include "seifert/rational.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

enum class PhiBranch { r2_gt_half, r1_gt_r2_eq_half, r1_eq_r2_eq_half };
enum class PsiBranch { r3_generic, r3_reciprocal };

std::string to_string(PhiBranch b);
std::string to_string(PsiBranch b);

// Number of tight contact structures up to isotopy, split by whether the
// outermost basic slices of legs 1 and 2 have different signs (phi) or the
// same sign (psi).
struct CensusResult {
  Integer h;
  Integer phi;
  Integer psi;
  Integer total;
  PhiBranch branch_phi;
  PsiBranch branch_psi;
};

PhiBranch phi_branch(const SeifertData& m);
PsiBranch psi_branch(const SeifertData& m);

// Product over the listed legs of (a_j - 1) for j >= first_layer. Coefficients
// past the end contribute a factor 1.
Integer tail_product(const SeifertData& m, std::initializer_list<int> legs, std::size_t first_layer);

// (a_1^3 - 1) * prod_i prod_{j>=2} (a_j^i - 1)
Integer count_h(const SeifertData& m);
Integer count_phi(const SeifertData& m);
Integer count_psi(const SeifertData& m);
CensusResult count_total(const SeifertData& m);

}  // namespace seifert
