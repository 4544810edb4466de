#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "seifert/seifert.hpp"

namespace seifert {

// Matrix of signs: q[i][j] is the number of positive basic slices in layer j
// of leg i (0-based legs here; legs may have different lengths).
struct SignState {
  std::array<std::vector<long>, 3> q;

  bool mixed() const { return q[0][0] != q[1][0]; }
  std::string str() const;  // "(1,0,2 | 0,1 | 0 | 1)" style: first row, then each leg's tail

  friend auto operator<=>(const SignState&, const SignState&) = default;
};

// Product space of all sign matrices within the layer bounds.
//
// Encoding: a state is identified with its mixed-radix index over the
// coordinates (leg 1 layers 0..k1, leg 2 layers 0..k2, leg 3 layers 0..k3),
// most significant first, digit d having radix bound + 1. The equivalent
// fixed-width digit string (each coordinate zero-padded to the decimal width
// of its bound, concatenated in the same order) is returned by key().
class SignSpace {
 public:
  // Throws ResourceError if the product space exceeds `cap` states.
  SignSpace(const SeifertData& m, std::uint64_t cap);

  std::uint64_t size() const { return size_; }
  std::uint64_t index(const SignState& s) const;
  SignState decode(std::uint64_t index) const;
  std::string key(const SignState& s) const;
  bool in_bounds(const SignState& s) const;
  // Product space minus the first rows excluded for equal outer signs.
  bool admissible(const SignState& s) const;
  long bound(std::size_t leg, std::size_t layer) const { return bounds_[leg][layer]; }
  std::size_t layers(std::size_t leg) const { return bounds_[leg].size(); }
  // a0 of leg 3.
  long a30() const { return bounds_[2][0] + 1; }

  // States reachable by one move or one inverse move (see neighbors()).
  std::vector<SignState> neighbors(const SignState& s) const;
  // Only the forward moves A, B and C; each undirected edge appears once.
  std::vector<SignState> forward_moves(const SignState& s) const;

 private:
  std::array<std::vector<long>, 3> bounds_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

constexpr std::uint64_t kDefaultStateCap = 10'000'000;

// Cap taken from SEIFERT_CENSUS_CAP when set, kDefaultStateCap otherwise.
std::uint64_t state_cap_from_environment();

// All admissible states, in index order.
std::vector<SignState> enumerate_states(const SeifertData& m, std::uint64_t cap = kDefaultStateCap);

// Moves on the first two rows of the matrix of signs:
//   A: (1,0,t) -> (0,1,t+1), q[1][1] += 1
//   B: (1,0,t) -> (0,1,t-1), q[2][1] -= 1
//   C: (1,1,0) -> (0,0,a0^3 - 1), q[3][1] += 1
// plus their inverses. A missing layer-1 coordinate absorbs the +-1. A move is
// blocked when an existing coordinate would leave its bounds. Layers j >= 2
// never change.
std::vector<SignState> neighbors(const SignState& s, const SeifertData& m);

struct OrbitCounts {
  std::uint64_t mixed = 0;   // components with q[1][0] != q[2][0]
  std::uint64_t equal = 0;   // components with q[1][0] == q[2][0]
  std::uint64_t states = 0;  // admissible states
  std::uint64_t edges = 0;   // forward move edges
};

struct OrbitOptions {
  std::uint64_t cap = kDefaultStateCap;
  unsigned jobs = 1;
};

// Connected components of the move graph. Edges are generated in parallel
// over index ranges and merged with a single union-find afterwards.
// Throws ConsistencyError if a move connects a mixed and an equal state.
OrbitCounts count_orbits(const SeifertData& m, const OrbitOptions& options = {});

}  // namespace seifert
