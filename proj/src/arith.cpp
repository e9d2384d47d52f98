#include "plumpwork/arith.hpp"

#include "plumpwork/plump.hpp"

namespace plumpwork {

namespace {

std::uint64_t pair_key(NameRef a, NameRef b) {
  return (static_cast<std::uint64_t>(a->id) << 32) | b->id;
}

}  // namespace

NameRef pl_add(Ctx& ctx, NameRef alpha, NameRef beta) {
  ctx.require_owned(alpha);
  ctx.require_owned(beta);
  std::uint64_t key = pair_key(alpha, beta);
  if (ctx.memoize()) {
    auto it = ctx.add_memo.find(key);
    if (it != ctx.add_memo.end()) return it->second;
  }
  std::vector<std::pair<NameRef, int>> entries = alpha->entries;
  for (const auto& [g, p] : beta->entries) {
    NameRef step = plump_successor(ctx, pl_add(ctx, alpha, g));
    for (const auto& [b, q] : step->entries)
      entries.emplace_back(b, ctx.algebra().meet(q, p));
  }
  NameRef result = ctx.make_name(std::move(entries));
  if (ctx.memoize()) ctx.add_memo.emplace(key, result);
  return result;
}

NameRef pl_mul(Ctx& ctx, NameRef alpha, NameRef beta) {
  ctx.require_owned(alpha);
  ctx.require_owned(beta);
  std::uint64_t key = pair_key(alpha, beta);
  if (ctx.memoize()) {
    auto it = ctx.mul_memo.find(key);
    if (it != ctx.mul_memo.end()) return it->second;
  }
  std::vector<std::pair<NameRef, int>> family;
  family.reserve(beta->entries.size());
  for (const auto& [g, p] : beta->entries)
    family.emplace_back(pl_add(ctx, pl_mul(ctx, alpha, g), alpha), p);
  NameRef result = weighted_union(ctx, family);
  if (ctx.memoize()) ctx.mul_memo.emplace(key, result);
  return result;
}

NameRef pl_pow(Ctx& ctx, NameRef alpha, NameRef beta) {
  ctx.require_owned(alpha);
  ctx.require_owned(beta);
  std::uint64_t key = pair_key(alpha, beta);
  if (ctx.memoize()) {
    auto it = ctx.pow_memo.find(key);
    if (it != ctx.pow_memo.end()) return it->second;
  }
  std::vector<std::pair<NameRef, int>> entries = {
      {ctx.empty_name(), ctx.algebra().top()}};
  for (const auto& [g, p] : beta->entries) {
    NameRef term = pl_mul(ctx, pl_pow(ctx, alpha, g), alpha);
    for (const auto& [b, q] : term->entries)
      entries.emplace_back(b, ctx.algebra().meet(q, p));
  }
  NameRef result = ctx.make_name(std::move(entries));
  if (ctx.memoize()) ctx.pow_memo.emplace(key, result);
  return result;
}

NameRef pair_code(Ctx& ctx, NameRef alpha, NameRef gamma, NameRef delta) {
  return pl_add(ctx, pl_mul(ctx, alpha, delta), gamma);
}

}  // namespace plumpwork
