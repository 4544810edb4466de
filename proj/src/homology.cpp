#include "seifert/homology.hpp"

#include "seifert/error.hpp"

namespace seifert {

namespace {

void require_p(long p) {
  if (p < 2) throw DomainError("p must be at least 2, got " + std::to_string(p));
}

void require_square_match(const IntMatrix& q, const CharVector& k) {
  if (q.rows() != q.cols() || k.size() != q.rows()) {
    throw DomainError("characteristic vector length does not match the form");
  }
}

}  // namespace

IntMatrix mp_linking_matrix(long p) {
  require_p(p);
  IntMatrix m(5, 5);
  const long diag[5] = {0, 0, -3, -3, -p - 1};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = i == j ? diag[i] : -1;
  }
  if (abs(determinant(m)) != 4) throw ConsistencyError("linking matrix of M_p must have |det| = 4");
  return m;
}

IntMatrix PlumbingGraph::form() const {
  const std::size_t n = framings.size();
  IntMatrix q(n, n);
  for (std::size_t v = 0; v < n; ++v) q(v, v) = framings[v];
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw DomainError("invalid plumbing edge");
    q(a, b) += 1;
    q(b, a) += 1;
  }
  return q;
}

PlumbingGraph d_plumbing_graph(long p) {
  require_p(p);
  PlumbingGraph g;
  const auto n = static_cast<std::size_t>(p + 2);
  g.framings.assign(n, Integer(-2));
  g.edges = {{0, 2}, {1, 2}};
  for (std::size_t v = 3; v < n; ++v) g.edges.emplace_back(v - 1, v);
  return g;
}

IntMatrix d_plumbing(long p) {
  IntMatrix q = d_plumbing_graph(p).form();
  const Inertia in = inertia(q);
  if (in.negative != q.rows()) throw ConsistencyError("D-plumbing must be negative definite");
  return q;
}

bool is_characteristic(const IntMatrix& q, const CharVector& k) {
  require_square_match(q, k);
  for (std::size_t v = 0; v < k.size(); ++v) {
    if (!mpz_congruent_2exp_p(k[v].get_mpz_t(), q(v, v).get_mpz_t(), 1)) return false;
  }
  return true;
}

std::array<CharVector, 4> initial_vectors(long p) {
  require_p(p);
  const auto n = static_cast<std::size_t>(p + 2);
  std::array<CharVector, 4> ks;
  for (auto& k : ks) k.assign(n, Integer(0));
  ks[0][1] = 2;
  ks[1][0] = 2;
  ks[2][n - 1] = 2;
  return ks;
}

Rational k_squared(const IntMatrix& q, const CharVector& k) {
  if (!is_characteristic(q, k)) throw DomainError("vector is not characteristic for the form");
  return inverse_quadratic_form(q, k);
}

std::array<Rational, 4> d_invariants_mp(long p) {
  const IntMatrix q = d_plumbing(p);
  const auto ks = initial_vectors(p);
  std::array<Rational, 4> d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = (k_squared(q, ks[i]) + Rational(p + 2)) / Rational(4);
  return d;
}

bool is_initial_vector(const IntMatrix& q, const CharVector& k) {
  require_square_match(q, k);
  for (std::size_t v = 0; v < k.size(); ++v) {
    if (k[v] < q(v, v) + 2 || k[v] > -q(v, v)) return false;
  }
  return true;
}

bool spinc_distinct(const IntMatrix& q, const CharVector& k, const CharVector& k2) {
  require_square_match(q, k);
  require_square_match(q, k2);
  IntVector half(k.size());
  for (std::size_t v = 0; v < k.size(); ++v) {
    const Integer diff = k[v] - k2[v];
    if (!mpz_even_p(diff.get_mpz_t())) throw DomainError("K - K' has an odd entry");
    half[v] = diff / 2;
  }
  return !ColumnLattice(q).contains(half);
}

bool chern_class_zero(const IntMatrix& q, const CharVector& k) {
  require_square_match(q, k);
  return ColumnLattice(q).contains(k);
}

}  // namespace seifert
