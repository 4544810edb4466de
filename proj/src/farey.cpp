#include "seifert/farey.hpp"

#include <ostream>

#include "seifert/error.hpp"

namespace seifert {

Slope::Slope(const Integer& p, const Integer& q) : p_(p), q_(q) {
  if (p_ == 0 && q_ == 0) throw DomainError("slope 0/0");
  const Integer g = gcd(p_, q_);
  p_ /= g;
  q_ /= g;
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Slope(parse_integer(text), Integer(1));
  return Slope(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Slope::value() const {
  if (is_infinite()) throw DomainError("infinite slope has no rational value");
  return Rational(p_, q_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return value().str();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Integer farey_determinant(const Slope& s, const Slope& t) {
  return abs(s.p() * t.q() - t.p() * s.q());
}

bool farey_adjacent(const Slope& s, const Slope& t) { return farey_determinant(s, t) == 1; }

Slope bypass_successor(const Slope& s0, const Slope& s1) {
  if (s0 == s1) throw DomainError("bypass successor needs distinct slopes, got " + s0.str());
  // g = [[a, b], [c, d]] acting on (p, q) with (c, d) = (-q1, p1) and
  // a p1 + b q1 = 1, so det g = 1 and g(s1) = infinity.
  const Integer& p1 = s1.p();
  const Integer& q1 = s1.q();
  Integer g, a, b;
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
  const Integer c = -q1;
  const Integer d = p1;
  const Integer image_p = a * s0.p() + b * s0.q();
  const Integer image_q = c * s0.p() + d * s0.q();
  // image_q != 0 because s0 != s1.
  const Integer n = Rational(image_p, image_q).floor();
  // Preimage of n/1 under g: g^{-1} = [[d, -b], [-c, a]].
  return Slope(d * n - b, -c * n + a);
}

namespace {

// Chain [a_k, ..., a_{j+1}, a_j - 1], i.e. the reversed expansion truncated
// at index j with the last entry lowered by one.
Rational truncated_reversed(const ContinuedFraction& cf, std::size_t j) {
  std::vector<Integer> chain;
  for (std::size_t i = cf.last_index(); i > j; --i) chain.push_back(cf[i]);
  chain.push_back(cf[j] - 1);
  return evaluate_chain(chain);
}

// Intermediate slopes of a continued fraction block with n basic slices.
// All of them share a Farey neighbour w, and the boundary vectors satisfy
// outer = inner + n w up to the sign of inner.
std::vector<Slope> block_path(const Slope& outer, const Slope& inner, const Integer& n) {
  if (n == 0) {
    if (!(outer == inner)) throw ConsistencyError("trivial layer with distinct boundary slopes");
    return {outer};
  }
  for (int sign : {1, -1}) {
    const Integer vq = sign * inner.q();
    const Integer vp = sign * inner.p();
    const Integer dq = outer.q() - vq;
    const Integer dp = outer.p() - vp;
    if (!mpz_divisible_p(dq.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(dp.get_mpz_t(), n.get_mpz_t())) {
      continue;
    }
    const Integer wq = dq / n;
    const Integer wp = dp / n;
    if (abs(vq * wp - vp * wq) != 1) continue;
    std::vector<Slope> path;
    for (Integer i = n; i >= 0; --i) path.emplace_back(vp + i * wp, vq + i * wq);
    return path;
  }
  throw ConsistencyError("layer " + outer.str() + " -> " + inner.str() +
                         " is not a continued fraction block with " + n.get_str() + " slices");
}

}  // namespace

LayerSlopes leg_layer_slopes(const ContinuedFraction& cf) {
  const std::size_t k = cf.last_index();
  LayerSlopes out{Slope(evaluate(cf.reversed())), {}};
  for (std::size_t j = 0; j <= k; ++j) {
    const Slope outer = j == 0 ? out.u_slope : Slope(truncated_reversed(cf, j));
    // For j = k the inner boundary is the slope -1 torus; for k = 0 this is
    // also how [a_k, ..., a_1 - 1] is read.
    const Slope inner = j == k ? Slope(Integer(-1), Integer(1)) : Slope(truncated_reversed(cf, j + 1));
    const Integer slices = j == 0 ? cf[0] - 1 : cf[j] - 2;
    Layer layer{outer, inner, slices, j > 0 && cf[j] == 2, {}};
    layer.path = block_path(outer, inner, slices);
    out.layers.push_back(std::move(layer));
  }
  return out;
}

Slope slope_transform(const GluingData& g, const Slope& s, Direction direction) {
  const Integer& x = s.q();
  const Integer& y = s.p();
  if (direction == Direction::forward) {
    // A (x, y)^T = (alpha x + alpha' y, -beta x - beta' y)^T
    return Slope(-g.beta * x - g.beta_prime * y, g.alpha * x + g.alpha_prime * y);
  }
  // A^{-1} = [[-beta', -alpha'], [beta, alpha]] since det A = 1.
  return Slope(g.beta * x + g.alpha * y, -g.beta_prime * x - g.alpha_prime * y);
}

}  // namespace seifert
