#include "plumpwork/coding.hpp"

#include <stdexcept>

#include "plumpwork/arith.hpp"
#include "plumpwork/plump.hpp"

namespace plumpwork {

FiniteMap FiniteMap::from_pairs(Ctx& ctx,
                                std::vector<std::pair<NameRef, NameRef>> pairs) {
  std::vector<std::pair<NameRef, int>> dom;
  for (const auto& [k, v] : pairs) {
    ctx.require_owned(k);
    ctx.require_owned(v);
    dom.emplace_back(k, ctx.algebra().top());
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (eq_value(ctx, pairs[i].first, pairs[j].first).is_top())
        throw std::invalid_argument("finite map has top-equal keys");
  FiniteMap f;
  f.pairs = std::move(pairs);
  f.domain = ctx.make_name(std::move(dom));
  return f;
}

NameRef FiniteMap::at(Ctx& ctx, NameRef k) const {
  for (const auto& [key, value] : pairs)
    if (key == k || eq_value(ctx, key, k).is_top()) return value;
  return nullptr;
}

TruthValue strongly_incomparable_value(Ctx& ctx, NameRef a, NameRef b) {
  const auto& h = ctx.algebra();
  return ctx.tv(h.meet(h.neg(subset_value(ctx, a, b).v),
                       h.neg(subset_value(ctx, b, a).v)));
}

TruthValue pairwise_incomparable_value(Ctx& ctx, const FiniteMap& f) {
  const auto& h = ctx.algebra();
  int acc = h.top();
  for (const auto& [g, fg] : f.pairs)
    for (const auto& [g2, fg2] : f.pairs) {
      acc = h.meet(acc, h.implies(subset_value(ctx, fg2, fg).v,
                                  eq_value(ctx, g, g2).v));
      if (acc == h.bottom()) return ctx.tv(acc);
    }
  return ctx.tv(acc);
}

NameRef encode(Ctx& ctx, const FiniteMap& f, NameRef alpha, NameRef beta) {
  ctx.require_owned(alpha);
  ctx.require_owned(beta);
  std::vector<std::pair<NameRef, int>> family;
  family.reserve(f.pairs.size());
  for (const auto& [g, d] : f.pairs)
    family.emplace_back(plump_successor(ctx, pair_code(ctx, alpha, g, d)),
                        ctx.algebra().top());
  return weighted_union(ctx, family);
}

namespace {

// The decoding formula phi(x, y; alpha, beta, sigma):
//   x in alpha /\ y in beta /\
//   exists tau in sigma (tau = alpha*y + x /\
//                        forall tau' in sigma (tau sub tau' -> tau = tau')).
int phi_value(Ctx& ctx, NameRef x, NameRef y, NameRef alpha, NameRef beta,
              NameRef sigma) {
  const auto& h = ctx.algebra();
  int acc = h.meet(mem_value(ctx, x, alpha).v, mem_value(ctx, y, beta).v);
  if (acc == h.bottom()) return acc;
  NameRef code = pair_code(ctx, alpha, x, y);
  int ex = h.bottom();
  for (const auto& [tau, q] : sigma->entries) {
    int maximal = h.top();
    for (const auto& [tau2, q2] : sigma->entries)
      maximal = h.meet(
          maximal, h.implies(q2, h.implies(subset_value(ctx, tau, tau2).v,
                                           eq_value(ctx, tau, tau2).v)));
    ex = h.join(ex, h.meet(q, h.meet(eq_value(ctx, tau, code).v, maximal)));
    if (ex == h.top()) break;
  }
  return h.meet(acc, ex);
}

}  // namespace

FiniteMap decode(Ctx& ctx, NameRef sigma, NameRef alpha, NameRef beta) {
  ctx.require_owned(sigma);
  ctx.require_owned(alpha);
  ctx.require_owned(beta);
  // Value candidates: members of beta plus its subset names (sigma stores
  // plump successors, so decoded values may only appear as subset names).
  std::vector<NameRef> candidates;
  for (const auto& [b, q] : beta->entries) candidates.push_back(b);
  for (NameRef g : subset_names(ctx, beta)) {
    bool fresh = true;
    for (NameRef c : candidates)
      if (c == g || eq_value(ctx, c, g).is_top()) {
        fresh = false;
        break;
      }
    if (fresh) candidates.push_back(g);
  }

  std::vector<std::pair<NameRef, NameRef>> pairs;
  for (const auto& [x, p] : alpha->entries) {
    if (!mem_value(ctx, x, alpha).is_top()) continue;
    NameRef found = nullptr;
    for (NameRef y : candidates) {
      if (phi_value(ctx, x, y, alpha, beta, sigma) != ctx.algebra().top())
        continue;
      if (found == nullptr)
        found = y;
      else if (!eq_value(ctx, found, y).is_top())
        throw std::runtime_error("decode: two non-equal values for one key");
    }
    if (found != nullptr) pairs.emplace_back(x, found);
  }
  return FiniteMap::from_pairs(ctx, std::move(pairs));
}

NameRef sigma_x(Ctx& ctx, NameRef x, const FiniteMap& f) {
  ctx.require_owned(x);
  std::vector<std::pair<NameRef, int>> family;
  family.reserve(x->entries.size());
  for (const auto& [b, p] : x->entries) {
    NameRef fb = f.at(ctx, b);
    if (fb == nullptr)
      throw std::invalid_argument("sigma_x: member outside the map domain");
    family.emplace_back(plump_successor(ctx, fb), p);
  }
  return weighted_union(ctx, family);
}

NameRef reconstruct_sx(Ctx& ctx, NameRef sigma, const FiniteMap& f,
                       NameRef alpha) {
  ctx.require_owned(sigma);
  ctx.require_owned(alpha);
  const auto& h = ctx.algebra();
  std::vector<std::pair<NameRef, int>> entries;
  entries.reserve(f.pairs.size());
  for (const auto& [b, fb] : f.pairs) {
    int w = h.meet(mem_value(ctx, b, alpha).v,
                   h.meet(mem_value(ctx, b, f.domain).v,
                          mem_value(ctx, fb, sigma).v));
    entries.emplace_back(b, w);
  }
  return ctx.make_name(std::move(entries));
}

bool maps_equal(Ctx& ctx, const FiniteMap& a, const FiniteMap& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  if (!eq_value(ctx, a.domain, b.domain).is_top()) return false;
  for (const auto& [k, v] : a.pairs) {
    NameRef w = b.at(ctx, k);
    if (w == nullptr || !eq_value(ctx, v, w).is_top()) return false;
  }
  return true;
}

}  // namespace plumpwork
