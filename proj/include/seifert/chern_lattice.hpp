#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seifert/int_matrix.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

// Values -n + 2i for i = 1..n-1: rotation numbers of a Legendrian unknot with
// tb = 1 - n, in increasing order.
std::vector<long> rotation_range(long n);
// Values -p - 1 + 2i for i = 1..p.
std::vector<long> knot_l_rotation_range(long p);

// |S(p,k,l)|: distinct pairs (x - y - A, z - x - y), by enumeration.
long count_stein_classes_pkl(long p, long k, long l);
// Distinct values z + A - 2x, by enumeration.
long count_stein_classes_pk(long p, long k);
// Closed forms. The pkl count is 2(k-1)(l-1) + (p-1)(k+l-2); the product
// (2(k-1)(l-1) + p-1)(k+l-2) that also appears in print is not what the
// enumeration gives.
long stein_classes_pkl_formula(long p, long k, long l);
long stein_classes_pk_formula(long p, long k);

enum class RotSource { xi, xi_prime };
std::string to_string(RotSource s);

// Which of the knots K7 (y) and K8 (z) are attached.
enum class CobordismVariant { pklm, pkm, pkl, pk };
std::string to_string(CobordismVariant v);
CobordismVariant parse_variant(const std::string& text);
bool has_y(CobordismVariant v);
bool has_z(CobordismVariant v);

struct RotTuple {
  RotSource source = RotSource::xi;
  long x = 0;
  std::optional<long> y;
  std::optional<long> z;

  friend auto operator<=>(const RotTuple&, const RotTuple&) = default;
};

struct CobordismParams {
  long p = 2;
  CobordismVariant variant = CobordismVariant::pklm;
  long k = 2;
  long l = 2;  // ignored without K7
  long m = 2;  // ignored without K8
};

// Throws DomainError unless t has exactly the variant's coordinates, each in
// its rotation range.
void validate_tuple(const CobordismParams& params, const RotTuple& t);
// Every valid tuple, xi first, then lexicographic in (x, y, z).
std::vector<RotTuple> all_tuples(const CobordismParams& params);

// The 8 x 5 matrix of phi^*: the linking matrix of M_p on top, then the rows of
// the meridians of K6, K7, K8 (-1 in columns 3, 4, 5).
IntMatrix phi_star(long p);
// phi_star with the rows of absent knots removed.
IntMatrix phi_star_rows(long p, CobordismVariant v);

// c1 of the spin^c structure on the surgered 4-manifold in the dual basis:
// (0, 0, s, s, -s(p-1), x, [y], [z]) with s = +1 for xi and -1 for xi'.
IntVector chern_vector(long p, const RotTuple& t);

// Decides whether two tuples induce isomorphic spin^c structures on the
// cobordism by testing (c1 - c1')/2 for membership in the column span of the
// reduced phi_star.
class CobordismLattice {
 public:
  explicit CobordismLattice(const CobordismParams& params);
  const CobordismParams& params() const { return params_; }
  bool equal(const RotTuple& a, const RotTuple& b) const;
  // Coordinates of (c1 - c1')/2 in the columns, if it lies in the span.
  std::optional<IntVector> witness(const RotTuple& a, const RotTuple& b) const;

 private:
  CobordismParams params_;
  ColumnLattice lattice_;
};

bool cobordism_spinc_equal(const CobordismParams& params, const RotTuple& a, const RotTuple& b);

// Closed-form reading of the same relation: equal tuples from the same source,
// or xi against xi' with z' = z + 2 (unconditional without K8).
bool cobordism_condition(const RotTuple& a, const RotTuple& b);

// Number of classes of all valid tuples under cobordism_spinc_equal, by
// union-find over all pairs.
long count_cobordism_classes(const CobordismParams& params);
// (k-1)(l-1)m, (k-1)m, (k-1)(l-1) or k-1.
long cobordism_classes_formula(const CobordismParams& params);

// Lower bounds for phi and psi assembled from the counts above and the tail
// factors; they meet count_phi and count_psi.
Integer phi_lower_bound(const SeifertData& m);
Integer psi_lower_bound(const SeifertData& m);
// Variant and parameters used by psi_lower_bound.
CobordismParams psi_params(const SeifertData& m);

}  // namespace seifert
