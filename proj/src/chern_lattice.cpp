#include "seifert/chern_lattice.hpp"

#include <set>
#include <utility>

#include "seifert/census.hpp"
#include "seifert/error.hpp"
#include "seifert/homology.hpp"
#include "seifert/union_find.hpp"

namespace seifert {

namespace {

void require_at_least_two(long v, const char* name) {
  if (v < 2) throw DomainError(std::string(name) + " must be at least 2, got " + std::to_string(v));
}

bool in_range(long v, long n) { return v > -n && v < n && (v + n) % 2 == 0; }

}  // namespace

std::vector<long> rotation_range(long n) {
  std::vector<long> out;
  for (long i = 1; i <= n - 1; ++i) out.push_back(-n + 2 * i);
  return out;
}

std::vector<long> knot_l_rotation_range(long p) {
  std::vector<long> out;
  for (long i = 1; i <= p; ++i) out.push_back(-p - 1 + 2 * i);
  return out;
}

long count_stein_classes_pkl(long p, long k, long l) {
  require_at_least_two(p, "p");
  require_at_least_two(k, "k");
  require_at_least_two(l, "l");
  std::set<std::pair<long, long>> values;
  for (long a : {-1L, 1L}) {
    for (long x : rotation_range(k)) {
      for (long y : rotation_range(l)) {
        for (long z : knot_l_rotation_range(p)) values.emplace(x - y - a, z - x - y);
      }
    }
  }
  const auto n = static_cast<long>(values.size());
  if (n != stein_classes_pkl_formula(p, k, l)) throw ConsistencyError("pkl enumeration disagrees with its closed form");
  return n;
}

long count_stein_classes_pk(long p, long k) {
  require_at_least_two(p, "p");
  require_at_least_two(k, "k");
  std::set<long> values;
  for (long a : {-1L, 1L}) {
    for (long x : rotation_range(k)) {
      for (long z : knot_l_rotation_range(p)) values.insert(z + a - 2 * x);
    }
  }
  const auto n = static_cast<long>(values.size());
  if (n != stein_classes_pk_formula(p, k)) throw ConsistencyError("pk enumeration disagrees with its closed form");
  return n;
}

long stein_classes_pkl_formula(long p, long k, long l) {
  return 2 * (k - 1) * (l - 1) + (p - 1) * (k + l - 2);
}

long stein_classes_pk_formula(long p, long k) { return 2 * (k - 1) + p - 1; }

std::string to_string(RotSource s) { return s == RotSource::xi ? "xi" : "xi_prime"; }

std::string to_string(CobordismVariant v) {
  switch (v) {
    case CobordismVariant::pklm: return "pklm";
    case CobordismVariant::pkm: return "pkm";
    case CobordismVariant::pkl: return "pkl";
    case CobordismVariant::pk: return "pk";
  }
  return "?";
}

CobordismVariant parse_variant(const std::string& text) {
  for (auto v : {CobordismVariant::pklm, CobordismVariant::pkm, CobordismVariant::pkl, CobordismVariant::pk}) {
    if (to_string(v) == text) return v;
  }
  throw ValidationError("unknown cobordism variant '" + text + "' (expected pklm, pkm, pkl or pk)");
}

bool has_y(CobordismVariant v) { return v == CobordismVariant::pklm || v == CobordismVariant::pkl; }
bool has_z(CobordismVariant v) { return v == CobordismVariant::pklm || v == CobordismVariant::pkm; }

void validate_tuple(const CobordismParams& params, const RotTuple& t) {
  if (!in_range(t.x, params.k)) throw DomainError("x out of range");
  if (t.y.has_value() != has_y(params.variant)) throw DomainError("y must be present exactly when K7 is");
  if (t.z.has_value() != has_z(params.variant)) throw DomainError("z must be present exactly when K8 is");
  if (t.y && !in_range(*t.y, params.l)) throw DomainError("y out of range");
  if (t.z && !in_range(*t.z, params.m)) throw DomainError("z out of range");
}

std::vector<RotTuple> all_tuples(const CobordismParams& params) {
  require_at_least_two(params.p, "p");
  require_at_least_two(params.k, "k");
  const bool y = has_y(params.variant);
  const bool z = has_z(params.variant);
  if (y) require_at_least_two(params.l, "l");
  if (z) require_at_least_two(params.m, "m");
  const std::vector<std::optional<long>> none{std::nullopt};
  auto optional_range = [&](bool present, long n) {
    if (!present) return none;
    std::vector<std::optional<long>> out;
    for (long v : rotation_range(n)) out.emplace_back(v);
    return out;
  };
  const auto ys = optional_range(y, params.l);
  const auto zs = optional_range(z, params.m);
  std::vector<RotTuple> out;
  for (auto source : {RotSource::xi, RotSource::xi_prime}) {
    for (long x : rotation_range(params.k)) {
      for (const auto& yv : ys) {
        for (const auto& zv : zs) out.push_back({source, x, yv, zv});
      }
    }
  }
  return out;
}

IntMatrix phi_star(long p) {
  const IntMatrix top = mp_linking_matrix(p);
  IntMatrix out(8, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out(i, j) = top(i, j);
  }
  out(5, 2) = -1;
  out(6, 3) = -1;
  out(7, 4) = -1;
  return out;
}

IntMatrix phi_star_rows(long p, CobordismVariant v) {
  std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5};
  if (has_y(v)) keep.push_back(6);
  if (has_z(v)) keep.push_back(7);
  return phi_star(p).select_rows(keep);
}

IntVector chern_vector(long p, const RotTuple& t) {
  const long s = t.source == RotSource::xi ? 1 : -1;
  IntVector c{Integer(0), Integer(0), Integer(s), Integer(s), Integer(-s * (p - 1)), Integer(t.x)};
  if (t.y) c.emplace_back(*t.y);
  if (t.z) c.emplace_back(*t.z);
  return c;
}

CobordismLattice::CobordismLattice(const CobordismParams& params)
    : params_(params), lattice_(phi_star_rows(params.p, params.variant)) {}

std::optional<IntVector> CobordismLattice::witness(const RotTuple& a, const RotTuple& b) const {
  validate_tuple(params_, a);
  validate_tuple(params_, b);
  const IntVector ca = chern_vector(params_.p, a);
  const IntVector cb = chern_vector(params_.p, b);
  IntVector half(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const Integer diff = ca[i] - cb[i];
    if (!mpz_even_p(diff.get_mpz_t())) throw DomainError("c1 difference has an odd entry");
    half[i] = diff / 2;
  }
  return lattice_.solve(half);
}

bool CobordismLattice::equal(const RotTuple& a, const RotTuple& b) const { return witness(a, b).has_value(); }

bool cobordism_spinc_equal(const CobordismParams& params, const RotTuple& a, const RotTuple& b) {
  return CobordismLattice(params).equal(a, b);
}

bool cobordism_condition(const RotTuple& a, const RotTuple& b) {
  if (a.source == b.source) return a.x == b.x && a.y == b.y && a.z == b.z;
  const RotTuple& xi = a.source == RotSource::xi ? a : b;
  const RotTuple& prime = a.source == RotSource::xi ? b : a;
  if (xi.x != prime.x || xi.y != prime.y) return false;
  if (!xi.z) return true;
  return *xi.z == *prime.z - 2;
}

long count_cobordism_classes(const CobordismParams& params) {
  const CobordismLattice lattice(params);
  const auto tuples = all_tuples(params);
  DisjointSets sets(tuples.size());
  long classes = static_cast<long>(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
      if (sets.find(static_cast<DisjointSets::Index>(i)) == sets.find(static_cast<DisjointSets::Index>(j))) continue;
      if (lattice.equal(tuples[i], tuples[j])) {
        sets.unite(static_cast<DisjointSets::Index>(i), static_cast<DisjointSets::Index>(j));
        --classes;
      }
    }
  }
  return classes;
}

long cobordism_classes_formula(const CobordismParams& params) {
  const long k1 = params.k - 1;
  switch (params.variant) {
    case CobordismVariant::pklm: return k1 * (params.l - 1) * params.m;
    case CobordismVariant::pkm: return k1 * params.m;
    case CobordismVariant::pkl: return k1 * (params.l - 1);
    case CobordismVariant::pk: return k1;
  }
  throw ConsistencyError("unreachable variant");
}

Integer phi_lower_bound(const SeifertData& m) {
  const long p = to_long(m.legs[2].a(0));
  const long k = to_long(m.legs[0].a(1));
  const long l = to_long(m.legs[1].a(1));
  const Integer a31 = m.legs[2].a(1);
  switch (phi_branch(m)) {
    case PhiBranch::r2_gt_half:
      return Integer(count_stein_classes_pkl(p, k, l)) * (a31 - 1) * tail_product(m, {1, 2, 3}, 2);
    case PhiBranch::r1_gt_r2_eq_half:
      return Integer(count_stein_classes_pk(p, k)) * (a31 - 1) * tail_product(m, {1, 3}, 2);
    case PhiBranch::r1_eq_r2_eq_half:
      return 2 * tail_product(m, {3}, 1);
  }
  throw ConsistencyError("unreachable phi branch");
}

CobordismParams psi_params(const SeifertData& m) {
  CobordismParams params;
  params.p = to_long(m.legs[2].a(0));
  params.k = to_long(m.legs[0].a(1));
  params.l = to_long(m.legs[1].a(1));
  params.m = to_long(m.legs[2].a(1));
  const bool y = m.legs[1].k() >= 1;
  const bool z = m.legs[2].k() >= 1;
  params.variant = y ? (z ? CobordismVariant::pklm : CobordismVariant::pkl)
                     : (z ? CobordismVariant::pkm : CobordismVariant::pk);
  return params;
}

Integer psi_lower_bound(const SeifertData& m) {
  const CobordismParams params = psi_params(m);
  return Integer(count_cobordism_classes(params)) * tail_product(m, {1, 2, 3}, 2);
}

}  // namespace seifert
