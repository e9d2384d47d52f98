#pragma once

#include <utility>
#include <vector>

#include "plumpwork/names.hpp"

namespace plumpwork {

// Finite function on names: keys pairwise not top-equal, each key a
// top-member of the domain name.
struct FiniteMap {
  std::vector<std::pair<NameRef, NameRef>> pairs;
  NameRef domain = nullptr;

  // Builds the domain name from the keys at weight top and checks the key
  // invariants.
  static FiniteMap from_pairs(Ctx& ctx,
                              std::vector<std::pair<NameRef, NameRef>> pairs);

  // Value at a key top-equal to k; null if none.
  NameRef at(Ctx& ctx, NameRef k) const;
};

// not(a subset b) and not(b subset a).
TruthValue strongly_incomparable_value(Ctx& ctx, NameRef a, NameRef b);

// Meet over ordered key pairs of ([[f(k') subset f(k)]] => [[k' = k]]).
TruthValue pairwise_incomparable_value(Ctx& ctx, const FiniteMap& f);

// sigma: union over (k -> v) of the plump successor of alpha * v + k.
NameRef encode(Ctx& ctx, const FiniteMap& f, NameRef alpha, NameRef beta);

// Inverts encode by the Delta0 decoding formula: all (k, v) with k a
// top-member of alpha and v drawn from beta's top-members and subset names
// such that the decoding formula holds at top.
FiniteMap decode(Ctx& ctx, NameRef sigma, NameRef alpha, NameRef beta);

// sigma_x: union over members b of x of the plump successor of f(b).
NameRef sigma_x(Ctx& ctx, NameRef x, const FiniteMap& f);

// s_x: entries (b, [[b in dom f]] /\ [[f(b) in sigma_x]]) over f's keys.
NameRef reconstruct_sx(Ctx& ctx, NameRef sigma, const FiniteMap& f,
                       NameRef alpha);

// Top-level map equality: domains top-equal and pairs matched up to
// top-equality in both directions.
bool maps_equal(Ctx& ctx, const FiniteMap& a, const FiniteMap& b);

}  // namespace plumpwork
