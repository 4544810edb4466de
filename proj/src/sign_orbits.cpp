#include "seifert/sign_orbits.hpp"

#include <cstdlib>
#include <optional>
#include <thread>
#include <unordered_set>

#include "seifert/error.hpp"
#include "seifert/union_find.hpp"

namespace seifert {

std::string SignState::str() const {
  std::string out = "(" + std::to_string(q[0][0]) + "," + std::to_string(q[1][0]) + "," +
                    std::to_string(q[2][0]);
  for (const auto& leg : q) {
    out += " |";
    for (std::size_t j = 1; j < leg.size(); ++j) out += " " + std::to_string(leg[j]);
  }
  return out + ")";
}

SignSpace::SignSpace(const SeifertData& m, std::uint64_t cap) {
  if (cap >= (std::uint64_t{1} << 32)) throw ResourceError("state cap must be below 2^32");
  Integer product = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const Integer& b : m.legs[i].layer_bounds) {
      product *= b + 1;
      if (product > Integer(std::to_string(cap))) {
        throw ResourceError("sign-state space of " + m.str() + " exceeds the cap of " +
                            std::to_string(cap) +
                            " states; try a smaller instance or raise SEIFERT_CENSUS_CAP");
      }
      bounds_[i].push_back(to_long(b));
    }
  }
  size_ = product.get_ui();
  std::size_t coords = bounds_[0].size() + bounds_[1].size() + bounds_[2].size();
  strides_.assign(coords, 1);
  std::size_t pos = coords;
  std::uint64_t stride = 1;
  for (std::size_t i = 3; i-- > 0;) {
    for (std::size_t j = bounds_[i].size(); j-- > 0;) {
      strides_[--pos] = stride;
      stride *= static_cast<std::uint64_t>(bounds_[i][j] + 1);
    }
  }
}

std::uint64_t SignSpace::index(const SignState& s) const {
  std::uint64_t idx = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < bounds_[i].size(); ++j) {
      idx += static_cast<std::uint64_t>(s.q[i][j]) * strides_[pos++];
    }
  }
  return idx;
}

SignState SignSpace::decode(std::uint64_t index) const {
  SignState s;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    s.q[i].resize(bounds_[i].size());
    for (std::size_t j = 0; j < bounds_[i].size(); ++j) {
      s.q[i][j] = static_cast<long>(index / strides_[pos]);
      index %= strides_[pos++];
    }
  }
  return s;
}

std::string SignSpace::key(const SignState& s) const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < bounds_[i].size(); ++j) {
      const std::size_t width = std::to_string(bounds_[i][j]).size();
      std::string digits = std::to_string(s.q[i][j]);
      out += std::string(width - digits.size(), '0') + digits;
    }
  }
  return out;
}

bool SignSpace::in_bounds(const SignState& s) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (s.q[i].size() != bounds_[i].size()) return false;
    for (std::size_t j = 0; j < bounds_[i].size(); ++j) {
      if (s.q[i][j] < 0 || s.q[i][j] > bounds_[i][j]) return false;
    }
  }
  return true;
}

bool SignSpace::admissible(const SignState& s) const {
  if (!in_bounds(s)) return false;
  if (s.q[0][0] == 1 && s.q[1][0] == 1) return s.q[2][0] == 0;
  if (s.q[0][0] == 0 && s.q[1][0] == 0) return s.q[2][0] == a30() - 1;
  return true;
}

namespace {

struct Delta {
  std::size_t leg;
  long change;
};

// New first row plus a +-1 on one leg's layer-1 entry. A missing layer-1
// coordinate stands for infinity and absorbs the change.
std::optional<SignState> apply_move(const SignSpace& space, const SignState& s,
                                    std::array<long, 3> first_row, Delta delta) {
  if (first_row[2] < 0 || first_row[2] > space.bound(2, 0)) return std::nullopt;
  SignState t = s;
  for (std::size_t i = 0; i < 3; ++i) t.q[i][0] = first_row[i];
  if (space.layers(delta.leg) > 1) {
    long& v = t.q[delta.leg][1];
    v += delta.change;
    if (v < 0 || v > space.bound(delta.leg, 1)) return std::nullopt;
  }
  return t;
}

void push(std::vector<SignState>& out, std::optional<SignState> s) {
  if (s) out.push_back(std::move(*s));
}

}  // namespace

std::vector<SignState> SignSpace::forward_moves(const SignState& s) const {
  std::vector<SignState> out;
  const long t = s.q[2][0];
  if (s.q[0][0] == 1 && s.q[1][0] == 0) {
    push(out, apply_move(*this, s, {0, 1, t + 1}, {0, +1}));  // A
    push(out, apply_move(*this, s, {0, 1, t - 1}, {1, -1}));  // B
  } else if (s.q[0][0] == 1 && s.q[1][0] == 1 && t == 0) {
    push(out, apply_move(*this, s, {0, 0, a30() - 1}, {2, +1}));  // C
  }
  return out;
}

std::vector<SignState> SignSpace::neighbors(const SignState& s) const {
  std::vector<SignState> out = forward_moves(s);
  const long t = s.q[2][0];
  if (s.q[0][0] == 0 && s.q[1][0] == 1) {
    push(out, apply_move(*this, s, {1, 0, t - 1}, {0, -1}));  // A^{-1}
    push(out, apply_move(*this, s, {1, 0, t + 1}, {1, +1}));  // B^{-1}
  } else if (s.q[0][0] == 0 && s.q[1][0] == 0 && t == a30() - 1) {
    push(out, apply_move(*this, s, {1, 1, 0}, {2, -1}));  // C^{-1}
  }
  return out;
}

std::uint64_t state_cap_from_environment() {
  const char* env = std::getenv("SEIFERT_CENSUS_CAP");
  if (env == nullptr || *env == '\0') return kDefaultStateCap;
  const Integer cap = parse_integer(env);
  if (cap <= 0 || cap >= Integer("4294967296")) {
    throw ValidationError("SEIFERT_CENSUS_CAP must be in [1, 2^32)");
  }
  return cap.get_ui();
}

std::vector<SignState> enumerate_states(const SeifertData& m, std::uint64_t cap) {
  const SignSpace space(m, cap);
  std::vector<SignState> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    SignState s = space.decode(i);
    if (space.admissible(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<SignState> neighbors(const SignState& s, const SeifertData& m) {
  const SignSpace space(m, state_cap_from_environment());
  if (!space.admissible(s)) throw DomainError("state " + s.str() + " is not admissible");
  return space.neighbors(s);
}

OrbitCounts count_orbits(const SeifertData& m, const OrbitOptions& options) {
  const SignSpace space(m, options.cap);
  const std::uint64_t n = space.size();
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(n)));

  using Edge = std::pair<DisjointSets::Index, DisjointSets::Index>;
  std::vector<std::vector<Edge>> edges(jobs);
  std::vector<std::uint64_t> admissible_counts(jobs, 0);
  auto generate = [&](unsigned part) {
    const std::uint64_t begin = n * part / jobs;
    const std::uint64_t end = n * (part + 1) / jobs;
    for (std::uint64_t i = begin; i < end; ++i) {
      const SignState s = space.decode(i);
      if (!space.admissible(s)) continue;
      ++admissible_counts[part];
      for (const SignState& t : space.forward_moves(s)) {
        if (!space.admissible(t)) {
          throw ConsistencyError("move from " + s.str() + " leaves the admissible set");
        }
        if (t.mixed() != s.mixed()) {
          throw ConsistencyError("move connects mixed and equal first rows: " + s.str() + " -> " +
                                 t.str());
        }
        edges[part].emplace_back(static_cast<DisjointSets::Index>(i),
                                 static_cast<DisjointSets::Index>(space.index(t)));
      }
    }
  };

  if (jobs == 1) {
    generate(0);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned part = 0; part < jobs; ++part) {
      workers.emplace_back([&, part] {
        try {
          generate(part);
        } catch (...) {
          errors[part] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  DisjointSets sets(n);
  OrbitCounts counts;
  for (const auto& part : edges) {
    for (const auto& [a, b] : part) sets.unite(a, b);
    counts.edges += part.size();
  }
  for (auto c : admissible_counts) counts.states += c;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (sets.find(static_cast<DisjointSets::Index>(i)) != i) continue;
    const SignState s = space.decode(i);
    if (!space.admissible(s)) continue;
    (s.mixed() ? counts.mixed : counts.equal) += 1;
  }
  return counts;
}

}  // namespace seifert
