#include "seifert/census.hpp"

#include "seifert/error.hpp"

namespace seifert {

std::string to_string(PhiBranch b) {
  switch (b) {
    case PhiBranch::r2_gt_half: return "r2_gt_half";
    case PhiBranch::r1_gt_r2_eq_half: return "r1_gt_r2_eq_half";
    case PhiBranch::r1_eq_r2_eq_half: return "r1_eq_r2_eq_half";
  }
  return "?";
}

std::string to_string(PsiBranch b) {
  return b == PsiBranch::r3_generic ? "r3_generic" : "r3_reciprocal";
}

PhiBranch phi_branch(const SeifertData& m) {
  const Rational half(1, 2);
  if (m.r2 > half) return PhiBranch::r2_gt_half;
  if (m.r1 > half) return PhiBranch::r1_gt_r2_eq_half;
  return PhiBranch::r1_eq_r2_eq_half;
}

PsiBranch psi_branch(const SeifertData& m) {
  // r3 = 1/a0 exactly when the expansion of -1/r3 has a single coefficient.
  return m.r3.num() == 1 ? PsiBranch::r3_reciprocal : PsiBranch::r3_generic;
}

Integer tail_product(const SeifertData& m, std::initializer_list<int> legs, std::size_t first_layer) {
  Integer product = 1;
  for (int i : legs) {
    const LegData& leg = leg_params(m, i);
    for (std::size_t j = first_layer; j <= leg.k(); ++j) product *= leg.a(j) - 1;
  }
  return product;
}

Integer count_h(const SeifertData& m) {
  return (m.legs[2].a(1) - 1) * tail_product(m, {1, 2, 3}, 2);
}

Integer count_phi(const SeifertData& m) {
  const Integer a11 = m.legs[0].a(1);
  const Integer a21 = m.legs[1].a(1);
  const Integer a30 = m.legs[2].a(0);
  const Integer a31 = m.legs[2].a(1);
  switch (phi_branch(m)) {
    case PhiBranch::r2_gt_half:
      return (2 * (a11 - 1) * (a21 - 1) + (a30 - 1) * (a11 + a21 - 2)) * count_h(m);
    case PhiBranch::r1_gt_r2_eq_half:
      return (2 * (a11 - 1) + (a30 - 1)) * (a31 - 1) * tail_product(m, {1, 3}, 2);
    case PhiBranch::r1_eq_r2_eq_half:
      return 2 * tail_product(m, {3}, 1);
  }
  throw ConsistencyError("unreachable phi branch");
}

Integer count_psi(const SeifertData& m) {
  const Integer a11 = m.legs[0].a(1);
  const Integer a21 = m.legs[1].a(1);
  const Integer a31 = m.legs[2].a(1);
  if (psi_branch(m) == PsiBranch::r3_generic) {
    return (a11 - 1) * (a21 - 1) * a31 * tail_product(m, {1, 2, 3}, 2);
  }
  return tail_product(m, {1, 2}, 1);
}

CensusResult count_total(const SeifertData& m) {
  CensusResult r{count_h(m), count_phi(m), count_psi(m), 0, phi_branch(m), psi_branch(m)};
  r.total = r.phi + r.psi;
  if (r.phi < 2 || r.psi < 1) throw ConsistencyError("census below its structural minimum");
  return r;
}

}  // namespace seifert
