#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seifert/continued_fraction.hpp"
#include "seifert/rational.hpp"

namespace seifert {

// Vertex of the Farey tessellation: p/q in lowest terms with q >= 0.
// The infinite slope is stored as 1/0.
class Slope {
 public:
  Slope() : p_(1), q_(0) {}  // infinity
  // Reduces and normalizes the sign; throws DomainError for 0/0.
  Slope(const Integer& p, const Integer& q);
  Slope(const Rational& value)  // NOLINT(google-explicit-constructor)
      : Slope(value.num(), value.den()) {}
  static Slope infinity() { return Slope(Integer(1), Integer(0)); }
  // Accepts "p/q", "p", "inf" or "1/0".
  static Slope parse(const std::string& text);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  // Throws DomainError for the infinite slope.
  Rational value() const;
  std::string str() const;  // "inf" for the infinite slope

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Slope& s);

 private:
  Integer p_;
  Integer q_;
};

// |p_s q_t - p_t q_s|: the number of Farey edges needed is 1 exactly when adjacent.
Integer farey_determinant(const Slope& s, const Slope& t);
bool farey_adjacent(const Slope& s, const Slope& t);

// Slope after the last bypass of a minimally twisting layer running from s0 to
// s1: the Farey neighbour of s1 closest to s0. Computed by moving s1 to
// infinity with a determinant +1 integral map, taking the floor of the image
// of s0, and mapping back. Throws DomainError if s0 == s1.
Slope bypass_successor(const Slope& s0, const Slope& s1);

// One layer N_j of a solid-torus decomposition, from its outer boundary
// (towards the boundary of U) to its inner boundary (towards the core).
struct Layer {
  Slope outer;
  Slope inner;
  // Number of basic slices: a0 - 1 for the outermost layer, a_j - 2 after.
  Integer basic_slices;
  // a_j = 2 past the outermost layer: an invariant neighbourhood of a torus.
  bool trivial = false;
  // Boundary slopes of the basic slices, outer first; consecutive entries are
  // Farey-adjacent and the list has basic_slices + 1 entries.
  std::vector<Slope> path;
};

struct LayerSlopes {
  Slope u_slope;  // slope of the convex torus bounding U, = evaluate(reversed)
  std::vector<Layer> layers;
};

// Layer decomposition for a leg with expansion [a0, ..., ak].
LayerSlopes leg_layer_slopes(const ContinuedFraction& cf);

enum class Direction { forward, inverse };

// Image of the curve with slope s (column vector (q, p)) under the gluing
// matrix A = [[alpha, alpha'], [-beta, -beta']] or its inverse.
Slope slope_transform(const GluingData& g, const Slope& s, Direction direction);

}  // namespace seifert
