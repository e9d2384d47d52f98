#include "plumpwork/plump.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace plumpwork {

namespace {

// Subset classes of base (up to top-equality) that can still carry a nonzero
// relative-plumpness weight measured against ref. Works on weight vectors
// over base's entry list: the closure sig_j = join_i (q_i /\ [[b_j = b_i]])
// identifies a class, and a partial vector is pruned once an upper bound for
// the relpl_ref value of every extension is bottom. The bound
// over-approximates each final membership value [[e in gamma]] by the part
// already decided joined with everything the undecided entries could add.
std::vector<NameRef> plump_subset_classes(Ctx& ctx, NameRef base,
                                          NameRef ref) {
  const auto& h = ctx.algebra();
  const auto& be = base->entries;
  const auto& re = ref->entries;
  int n = static_cast<int>(be.size());
  int nr = static_cast<int>(re.size());
  long cap = ctx.budget().max_subset_names;

  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      e[j][i] = eq_value(ctx, be[j].first, be[i].first).v;
  // er[j][i] = [[ref_j = base_i]], sub_r[j][i] = [[ref_j subset base_i]].
  std::vector<std::vector<int>> er(nr, std::vector<int>(n));
  std::vector<std::vector<int>> sub_r(nr, std::vector<int>(n));
  for (int j = 0; j < nr; ++j)
    for (int i = 0; i < n; ++i) {
      er[j][i] = eq_value(ctx, re[j].first, be[i].first).v;
      sub_r[j][i] = subset_value(ctx, re[j].first, be[i].first).v;
    }

  // tail[j][m] = join over k >= m of (p_k /\ [[ref_j = base_k]]).
  std::vector<std::vector<int>> tail(nr, std::vector<int>(n + 1, h.bottom()));
  for (int j = 0; j < nr; ++j)
    for (int m = n - 1; m >= 0; --m)
      tail[j][m] = h.join(tail[j][m + 1], h.meet(be[m].second, er[j][m]));

  struct State {
    std::vector<int> q;      // decided weights
    std::vector<int> sig_b;  // decided part of [[base_j in gamma]], length n
    std::vector<int> sig_r;  // decided part of [[ref_j in gamma]], length nr
    std::vector<int> d;      // join over decided i of q_i /\ sub_r[j][i]
  };

  // The relpl upper bound is meet over i,j of
  //   (q_i /\ p_j /\ sub_r[j][i]) => (sig_r[j] \/ tail[j][next]),
  // and by residuation the meet over i collapses into d[j].
  auto relpl_upper_bound = [&](const State& st, int next) {
    int acc = h.top();
    for (int j = 0; j < nr; ++j) {
      int mem_ub = h.join(st.sig_r[j], tail[j][next]);
      acc = h.meet(acc, h.implies(h.meet(re[j].second, st.d[j]), mem_ub));
      if (acc == h.bottom()) return acc;
    }
    return acc;
  };

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t s = 0x9e3779b97f4a7c15ull;
      for (int x : v) s = s * 1099511628211ull + static_cast<std::size_t>(x);
      return s;
    }
  };

  std::vector<State> frontier{{{},
                               std::vector<int>(n, h.bottom()),
                               std::vector<int>(nr, h.bottom()),
                               std::vector<int>(nr, h.bottom())}};
  std::vector<int> scratch(n);
  for (int m = 0; m < n; ++m) {
    std::vector<State> next;
    std::unordered_set<std::vector<int>, VecHash> seen;
    for (const State& st : frontier) {
      for (int w = 0; w < h.size(); ++w) {
        if (!h.leq(w, be[m].second)) continue;
        // Class identity is the closure over base's own entries; top-equal
        // prefixes share every decided vector, so pruning is class-invariant
        // and deduplicating before the bound check is safe.
        for (int j = 0; j < n; ++j)
          scratch[j] = h.join(st.sig_b[j], h.meet(w, e[j][m]));
        if (seen.contains(scratch)) continue;
        State cand;
        cand.sig_b = scratch;
        cand.sig_r = st.sig_r;
        cand.d = st.d;
        for (int j = 0; j < nr; ++j) {
          cand.sig_r[j] = h.join(cand.sig_r[j], h.meet(w, er[j][m]));
          cand.d[j] = h.join(cand.d[j], h.meet(w, sub_r[j][m]));
        }
        if (relpl_upper_bound(cand, m + 1) == h.bottom()) continue;
        seen.insert(scratch);
        cand.q = st.q;
        cand.q.push_back(w);
        next.push_back(std::move(cand));
        if (static_cast<long>(next.size()) > cap)
          throw BudgetError("max_subset_names", cap,
                            static_cast<long>(next.size()));
      }
    }
    frontier = std::move(next);
  }

  std::vector<NameRef> result;
  result.reserve(frontier.size());
  for (const State& st : frontier) {
    std::vector<std::pair<NameRef, int>> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back(be[i].first, st.q[i]);
    result.push_back(ctx.make_name(std::move(entries)));
  }
  std::sort(result.begin(), result.end(),
            [](NameRef a, NameRef b) { return cmp_names(a, b) < 0; });
  return result;
}

int transitive_ix(Ctx& ctx, NameRef x) {
  const auto& h = ctx.algebra();
  int acc = h.top();
  for (const auto& [y, p] : x->entries) {
    int inner = h.top();
    for (const auto& [z, q] : y->entries)
      inner = h.meet(inner, h.implies(q, mem_value(ctx, z, x).v));
    acc = h.meet(acc, h.implies(p, inner));
    if (acc == h.bottom()) break;
  }
  return acc;
}

}  // namespace

TruthValue is_ord_value(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  const auto& h = ctx.algebra();
  if (ctx.memoize()) {
    auto it = ctx.ord_memo.find(x->id);
    if (it != ctx.ord_memo.end()) return ctx.tv(it->second);
  }
  int acc = transitive_ix(ctx, x);
  for (const auto& [a, p] : x->entries) {
    if (acc == h.bottom()) break;
    acc = h.meet(acc, h.implies(p, is_ord_value(ctx, a).v));
  }
  if (ctx.memoize()) ctx.ord_memo.emplace(x->id, acc);
  return ctx.tv(acc);
}

TruthValue is_thin_value(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  const auto& h = ctx.algebra();
  if (ctx.memoize()) {
    auto it = ctx.thin_memo.find(x->id);
    if (it != ctx.thin_memo.end()) return ctx.tv(it->second);
  }
  int acc = is_ord_value(ctx, x).v;
  for (const auto& [b, p] : x->entries) {
    for (const auto& [g, q] : x->entries) {
      int body = h.implies(subset_value(ctx, g, b).v,
                           h.join(mem_value(ctx, g, b).v,
                                  eq_value(ctx, g, b).v));
      acc = h.meet(acc, h.implies(p, h.implies(q, body)));
      if (acc == h.bottom()) break;
    }
    if (acc == h.bottom()) break;
  }
  if (ctx.memoize()) ctx.thin_memo.emplace(x->id, acc);
  return ctx.tv(acc);
}

TruthValue plord_value(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  const auto& h = ctx.algebra();
  if (ctx.memoize()) {
    auto it = ctx.plord_memo.find(x->id);
    if (it != ctx.plord_memo.end()) return ctx.tv(it->second);
  }
  int acc = is_ord_value(ctx, x).v;
  for (const auto& [b, p] : x->entries) {
    if (acc == h.bottom()) break;
    int inner = h.top();
    // Subsets of b that relpl_x weights at bottom contribute a vacuously top
    // implication, so the pruned class enumeration is exhaustive here.
    for (NameRef g : plump_subset_classes(ctx, b, x)) {
      int r = relpl_value(ctx, x, g).v;
      if (r == h.bottom()) continue;  // vacuous instance
      int closed = mem_value(ctx, g, x).v;
      int order = h.top();
      for (const auto& [d, w] : x->entries)
        order = h.meet(
            order, h.implies(w, h.implies(mem_value(ctx, b, d).v,
                                          mem_value(ctx, g, d).v)));
      inner = h.meet(inner, h.implies(r, h.meet(closed, order)));
      if (inner == h.bottom()) break;
    }
    acc = h.meet(acc, h.implies(p, inner));
  }
  if (ctx.memoize()) ctx.plord_memo.emplace(x->id, acc);
  return ctx.tv(acc);
}

TruthValue plord_crit_value(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  const auto& h = ctx.algebra();
  int acc = h.top();
  for (const auto& [b, p] : x->entries) {
    acc = h.meet(acc, h.implies(p, plord_value(ctx, b).v));
    if (acc == h.bottom()) break;
    int inner = h.top();
    for (NameRef g : subset_names(ctx, b)) {
      int closed = mem_value(ctx, g, x).v;
      if (closed == h.top()) continue;
      inner = h.meet(inner, h.implies(plord_value(ctx, g).v, closed));
      if (inner == h.bottom()) break;
    }
    acc = h.meet(acc, h.implies(p, inner));
    if (acc == h.bottom()) break;
  }
  return ctx.tv(acc);
}

TruthValue vartheta(Ctx& ctx, NameRef /*alpha*/, NameRef beta) {
  ctx.require_owned(beta);
  const auto& h = ctx.algebra();
  if (ctx.memoize()) {
    auto it = ctx.theta_memo.find(beta->id);
    if (it != ctx.theta_memo.end()) return ctx.tv(it->second);
  }
  int acc = h.top();
  for (const auto& [g, p] : beta->entries) {
    int inner = vartheta(ctx, g, g).v;
    for (NameRef d : subset_names(ctx, g)) {
      int m = mem_value(ctx, d, beta).v;
      if (m == h.top()) continue;
      inner = h.meet(inner, h.implies(vartheta(ctx, g, d).v, m));
      if (inner == h.bottom()) break;
    }
    acc = h.meet(acc, h.implies(p, inner));
    if (acc == h.bottom()) break;
  }
  if (ctx.memoize()) ctx.theta_memo.emplace(beta->id, acc);
  return ctx.tv(acc);
}

NameRef plump_successor(Ctx& ctx, NameRef alpha) {
  ctx.require_owned(alpha);
  if (ctx.memoize()) {
    auto it = ctx.pls_memo.find(alpha->id);
    if (it != ctx.pls_memo.end()) return it->second;
  }
  std::vector<std::pair<NameRef, int>> entries;
  for (NameRef g : plump_subset_classes(ctx, alpha, alpha))
    entries.emplace_back(g, relpl_value(ctx, alpha, g).v);
  NameRef result = ctx.make_name_distinct(std::move(entries));
  if (ctx.memoize()) ctx.pls_memo.emplace(alpha->id, result);
  return result;
}

NameRef thin_successor(Ctx& ctx, NameRef alpha) {
  ctx.require_owned(alpha);
  auto entries = alpha->entries;
  entries.emplace_back(alpha, ctx.algebra().top());
  return ctx.make_name(std::move(entries));
}

NameRef plump_op(Ctx& ctx, NameRef alpha) {
  ctx.require_owned(alpha);
  if (ctx.memoize()) {
    auto it = ctx.plop_memo.find(alpha->id);
    if (it != ctx.plop_memo.end()) return it->second;
  }
  const auto& h = ctx.algebra();
  // Incremental union keeping entries pairwise non-top-equal; the per-step
  // successor names are already deduplicated internally, so only cross-step
  // duplicates need matching.
  std::vector<std::pair<NameRef, int>> acc;
  for (const auto& [b, p] : alpha->entries) {
    NameRef step = plump_successor(ctx, plump_op(ctx, b));
    std::size_t base = acc.size();
    for (const auto& [c, q] : step->entries) {
      int w = h.meet(q, p);
      if (w == h.bottom()) continue;
      bool merged = false;
      for (std::size_t i = 0; i < base; ++i) {
        auto& [rc, rw] = acc[i];
        if (rc->rank != c->rank) continue;
        if (rc == c || eq_value(ctx, rc, c).is_top()) {
          rw = h.join(rw, w);
          if (cmp_names(c, rc) < 0) rc = c;
          merged = true;
          break;
        }
      }
      if (!merged) acc.emplace_back(c, w);
    }
  }
  NameRef result = ctx.make_name_distinct(std::move(acc));
  if (ctx.memoize()) ctx.plop_memo.emplace(alpha->id, result);
  return result;
}

}  // namespace plumpwork
