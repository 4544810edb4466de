#include "seifert/seifert.hpp"

#include <algorithm>

#include "seifert/error.hpp"

namespace seifert {

namespace {

LegData make_leg(int index, const Rational& r) {
  const Integer alpha = r.den();
  const Integer beta = index == 1 ? r.num() - r.den() : r.num();
  LegData leg{index, r, gluing_data(alpha, beta), negative_expansion(-r.reciprocal()), {}, {}};
  for (std::size_t j = 0; j <= leg.k(); ++j) {
    leg.layer_bounds.push_back(j == 0 ? leg.expansion[0] - 1 : leg.expansion[j] - 2);
  }
  leg.slopes = leg_layer_slopes(leg.expansion);
  // -alpha/alpha' must agree with the reversed expansion.
  const Slope expected(-leg.gluing.alpha, leg.gluing.alpha_prime);
  if (!(leg.slopes.u_slope == expected)) {
    throw ConsistencyError("leg " + std::to_string(index) + ": u-slope " + leg.slopes.u_slope.str() +
                           " != -alpha/alpha' = " + expected.str());
  }
  return leg;
}

}  // namespace

std::string SeifertData::str() const {
  return "M(" + e0.get_str() + "; " + r1.str() + ", " + r2.str() + ", " + r3.str() + ")";
}

SeifertData parse_seifert(const Integer& e0, const Rational& r1, const Rational& r2,
                          const Rational& r3) {
  if (e0 != -1) {
    throw UnsupportedCase("only e0 = -1 is supported (got e0 = " + e0.get_str() +
                          "); the cases e0 >= 0 and e0 <= -2 are classified elsewhere");
  }
  std::array<Rational, 3> r{r1, r2, r3};
  for (std::size_t i = 0; i < 3; ++i) {
    if (r[i] <= Rational(0) || r[i] >= Rational(1)) {
      throw ValidationError("r" + std::to_string(i + 1) + " = " + r[i].str() +
                            " violates 0 < r < 1");
    }
  }
  const bool ordered = r[0] >= r[1] && r[1] >= r[2];
  if (!ordered) std::sort(r.begin(), r.end(), std::greater<>());
  if (r[1] < Rational(1, 2)) {
    throw ValidationError("r2 = " + r[1].str() + " violates r1 >= r2 >= 1/2");
  }
  SeifertData m{e0, r[0], r[1], r[2], {make_leg(1, r[0]), make_leg(2, r[1]), make_leg(3, r[2])},
                !ordered};
  if (m.legs[0].expansion[0] != 2 || m.legs[1].expansion[0] != 2) {
    throw ConsistencyError("r1, r2 >= 1/2 must give a0 = 2 on legs 1 and 2");
  }
  return m;
}

const LegData& leg_params(const SeifertData& m, int i) {
  if (i < 1 || i > 3) throw DomainError("leg index must be 1, 2 or 3");
  return m.legs[static_cast<std::size_t>(i - 1)];
}

Rational z_source_slope(const LegData& leg) {
  const GluingData& g = leg.gluing;
  return Rational(-g.beta + g.beta_prime, g.alpha - g.alpha_prime);
}

std::array<Slope, 3> z_slopes(const SeifertData& m) {
  std::array<Slope, 3> out{Slope::infinity(), Slope::infinity(), Slope::infinity()};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = bypass_successor(Slope(z_source_slope(m.legs[i])), Slope::infinity());
  }
  return out;
}

}  // namespace seifert
