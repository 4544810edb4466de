#pragma once

#include <optional>
#include <vector>

#include "seifert/int_matrix.hpp"
#include "seifert/rational.hpp"

namespace seifert {

struct SurgeryComponent {
  Integer framing;  // smooth surgery coefficient
  Integer rot;
  int contact_coeff = -1;  // +1 or -1

  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

// Contact (+-1)-surgery diagram reduced to its numerical data.
struct SurgeryDiagram {
  std::vector<SurgeryComponent> components;
  IntMatrix linking;  // pairwise linking numbers, framings on the diagonal

  // Throws ValidationError unless the linking matrix is symmetric, matches
  // the component count, carries the framings on its diagonal, and every
  // contact coefficient is +1 or -1.
  void validate() const;

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

// The diagram for Xi on M_p; mirrored gives Xi' (all rotation numbers negated).
SurgeryDiagram xi_diagram(long p, bool mirrored = false);

struct D3Terms {
  Rational c_squared;  // rot^T L^{-1} rot
  long sigma = 0;
  long b2 = 0;
  long q = 0;  // number of +1 contact coefficients
  Rational d3;
};

// (c^2 - 3 sigma - 2 b2)/4 + q. Throws DomainError on a singular linking matrix.
D3Terms d3_terms(const SurgeryDiagram& d);
Rational d3_from_diagram(const SurgeryDiagram& d);

// (c^2 - 3 sigma - 2 chi)/4
Rational degree_shift(const Rational& c_sq, long sigma, long chi);

// A Stein filling would need p - 2 = sum of 4 n (n+1) over n >= 1. The witness
// lists the n of one such decomposition (empty for p = 2).
struct FillabilitySearch {
  bool obstructed = true;
  std::optional<std::vector<long>> witness;
};

FillabilitySearch fillability_search(long p);
bool fillability_obstruction(long p);

}  // namespace seifert
