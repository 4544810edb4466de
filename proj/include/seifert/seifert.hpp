#pragma once

#include <array>
#include <string>
#include <vector>

#include "seifert/continued_fraction.hpp"
#include "seifert/farey.hpp"
#include "seifert/rational.hpp"

namespace seifert {

// One singular fiber of M(-1; r1, r2, r3).
struct LegData {
  int index = 0;  // 1, 2 or 3
  Rational r;
  // Leg 1 uses beta/alpha = r1 - 1; legs 2 and 3 use beta/alpha = r_i.
  GluingData gluing;
  ContinuedFraction expansion;  // of -1/r
  // Maximal number of positive basic slices per layer: a0 - 1, then a_j - 2.
  std::vector<Integer> layer_bounds;
  LayerSlopes slopes;

  // Conventional coefficient a_j (2 past the end of the expansion).
  Integer a(std::size_t j) const { return expansion.coefficient_or_two(j); }
  // k_i: index of the last coefficient.
  std::size_t k() const { return expansion.last_index(); }
};

struct SeifertData {
  Integer e0;
  Rational r1, r2, r3;
  std::array<LegData, 3> legs;
  // Inputs were given out of order and have been sorted to r1 >= r2 >= r3.
  bool reordered = false;

  std::string str() const;  // "M(-1; r1, r2, r3)"
};

// Validates and builds the model. Throws UnsupportedCase for e0 != -1 and
// ValidationError for r_i outside (0,1) or r2 < 1/2 (after sorting).
SeifertData parse_seifert(const Integer& e0, const Rational& r1, const Rational& r2,
                          const Rational& r3);

// Leg i in {1, 2, 3}.
const LegData& leg_params(const SeifertData& m, int i);

// (-beta + beta')/(alpha - alpha'): slope of A (1, -1)^T, the image of the
// slope -1 torus, in the coordinates of the complement.
Rational z_source_slope(const LegData& leg);

// Boundary slopes after removing the outermost basic slice of each U_i.
std::array<Slope, 3> z_slopes(const SeifertData& m);

}  // namespace seifert
