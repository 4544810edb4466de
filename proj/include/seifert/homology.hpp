#pragma once

#include <array>
#include <utility>
#include <vector>

#include "seifert/int_matrix.hpp"
#include "seifert/rational.hpp"

namespace seifert {

// Linking matrix of the five-component surgery link presenting M_p:
// framings (0, 0, -3, -3, -p-1) on the diagonal, -1 elsewhere.
// Throws DomainError for p < 2.
IntMatrix mp_linking_matrix(long p);

// Framed tree; the intersection form has framings on the diagonal and 1 for
// each edge.
struct PlumbingGraph {
  std::vector<Integer> framings;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  IntMatrix form() const;
  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

// D-shaped tree bounding -M_p: vertices 0 and 1 are the leaves, 2 is the
// branch vertex, 3..p+1 continue the chain. All framings are -2.
PlumbingGraph d_plumbing_graph(long p);
// Its intersection form; negative definiteness is checked.
IntMatrix d_plumbing(long p);

// Characteristic covector, one value per vertex (evaluations on the spheres).
using CharVector = IntVector;

bool is_characteristic(const IntMatrix& q, const CharVector& k);

// K1..K4 on d_plumbing(p): 2 on vertex 1, 2 on vertex 0, 2 on the last chain
// vertex, and zero.
std::array<CharVector, 4> initial_vectors(long p);

// K^T Q^{-1} K by an exact rational solve. Throws DomainError when K is not
// characteristic or Q is singular.
Rational k_squared(const IntMatrix& q, const CharVector& k);

// (K_i^2 + p + 2)/4 for the initial vectors, in the order t1..t4.
std::array<Rational, 4> d_invariants_mp(long p);

// m(v) + 2 <= K(v) <= -m(v) at every vertex.
bool is_initial_vector(const IntMatrix& q, const CharVector& k);

// Whether K and K2 restrict to different spin^c structures on the boundary:
// (K - K2)/2 is not in the column span of Q. Throws DomainError if K - K2 has
// an odd entry.
bool spinc_distinct(const IntMatrix& q, const CharVector& k, const CharVector& k2);

// Whether c1 of the restriction vanishes: K lies in the column span of Q.
bool chern_class_zero(const IntMatrix& q, const CharVector& k);

}  // namespace seifert
