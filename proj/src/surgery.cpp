#include "seifert/surgery.hpp"

#include <string>

#include "seifert/error.hpp"
#include "seifert/homology.hpp"

namespace seifert {

void SurgeryDiagram::validate() const {
  const std::size_t n = components.size();
  if (linking.rows() != n || linking.cols() != n) {
    throw ValidationError("linking matrix size does not match the component count");
  }
  if (!linking.is_symmetric()) throw ValidationError("linking matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (linking(i, i) != components[i].framing) {
      throw ValidationError("linking matrix diagonal must equal the framings");
    }
    if (components[i].contact_coeff != 1 && components[i].contact_coeff != -1) {
      throw ValidationError("contact coefficient must be +1 or -1");
    }
  }
}

SurgeryDiagram xi_diagram(long p, bool mirrored) {
  SurgeryDiagram d;
  d.linking = mp_linking_matrix(p);
  const long rot[5] = {0, 0, 1, 1, -(p - 1)};
  const int coeff[5] = {1, 1, -1, -1, -1};
  const long sign = mirrored ? -1 : 1;
  for (std::size_t i = 0; i < 5; ++i) {
    d.components.push_back({d.linking(i, i), Integer(sign * rot[i]), coeff[i]});
  }
  d.validate();
  return d;
}

D3Terms d3_terms(const SurgeryDiagram& d) {
  d.validate();
  IntVector rot;
  for (const auto& c : d.components) rot.push_back(c.rot);
  D3Terms t;
  t.c_squared = inverse_quadratic_form(d.linking, rot);
  t.sigma = inertia(d.linking).signature();
  t.b2 = static_cast<long>(d.components.size());
  for (const auto& c : d.components) t.q += c.contact_coeff == 1 ? 1 : 0;
  t.d3 = degree_shift(t.c_squared, t.sigma, t.b2) + Rational(t.q);
  return t;
}

Rational d3_from_diagram(const SurgeryDiagram& d) { return d3_terms(d).d3; }

Rational degree_shift(const Rational& c_sq, long sigma, long chi) {
  return (c_sq - Rational(3 * sigma) - Rational(2 * chi)) / Rational(4);
}

FillabilitySearch fillability_search(long p) {
  if (p < 2) throw DomainError("p must be at least 2, got " + std::to_string(p));
  const long target = p - 2;
  // Coin change over the parts 4 n (n+1); last[v] is the n used to reach v.
  std::vector<long> last(static_cast<std::size_t>(target) + 1, -1);
  last[0] = 0;
  for (long v = 1; v <= target; ++v) {
    for (long n = 1; 4 * n * (n + 1) <= v; ++n) {
      if (last[static_cast<std::size_t>(v - 4 * n * (n + 1))] >= 0) {
        last[static_cast<std::size_t>(v)] = n;
        break;
      }
    }
  }
  FillabilitySearch out;
  if (last[static_cast<std::size_t>(target)] < 0) return out;
  std::vector<long> parts;
  for (long v = target; v > 0; v -= 4 * parts.back() * (parts.back() + 1)) {
    parts.push_back(last[static_cast<std::size_t>(v)]);
  }
  out.obstructed = false;
  out.witness = std::move(parts);
  return out;
}

bool fillability_obstruction(long p) { return fillability_search(p).obstructed; }

}  // namespace seifert
