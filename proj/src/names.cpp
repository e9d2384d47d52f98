#include "plumpwork/names.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace plumpwork {

namespace {

std::uint64_t ordered_key(NameRef a, NameRef b) {
  return (static_cast<std::uint64_t>(a->id) << 32) | b->id;
}

std::uint64_t unordered_key(NameRef a, NameRef b) {
  if (a->id > b->id) std::swap(a, b);
  return ordered_key(a, b);
}

int eq_ix(Ctx& c, NameRef x, NameRef y);

int mem_ix(Ctx& c, NameRef x, NameRef y) {
  const auto& h = c.algebra();
  std::uint64_t key = ordered_key(x, y);
  if (c.memoize()) {
    auto it = c.mem_memo.find(key);
    if (it != c.mem_memo.end()) return it->second;
  }
  int acc = h.bottom();
  for (const auto& [b, q] : y->entries) {
    acc = h.join(acc, h.meet(q, eq_ix(c, x, b)));
    if (acc == h.top()) break;
  }
  if (c.memoize()) c.mem_memo.emplace(key, acc);
  return acc;
}

int eq_ix(Ctx& c, NameRef x, NameRef y) {
  const auto& h = c.algebra();
  if (x == y) return h.top();
  std::uint64_t key = unordered_key(x, y);
  if (c.memoize()) {
    auto it = c.eq_memo.find(key);
    if (it != c.eq_memo.end()) return it->second;
  }
  int acc = h.top();
  for (const auto& [a, p] : x->entries) {
    acc = h.meet(acc, h.implies(p, mem_ix(c, a, y)));
    if (acc == h.bottom()) break;
  }
  if (acc != h.bottom())
    for (const auto& [b, q] : y->entries) {
      acc = h.meet(acc, h.implies(q, mem_ix(c, b, x)));
      if (acc == h.bottom()) break;
    }
  if (c.memoize()) c.eq_memo.emplace(key, acc);
  return acc;
}

int sub_ix(Ctx& c, NameRef x, NameRef y) {
  const auto& h = c.algebra();
  if (x == y) return h.top();
  std::uint64_t key = ordered_key(x, y);
  if (c.memoize()) {
    auto it = c.sub_memo.find(key);
    if (it != c.sub_memo.end()) return it->second;
  }
  int acc = h.top();
  for (const auto& [a, p] : x->entries) {
    acc = h.meet(acc, h.implies(p, mem_ix(c, a, y)));
    if (acc == h.bottom()) break;
  }
  if (c.memoize()) c.sub_memo.emplace(key, acc);
  return acc;
}

}  // namespace

int cmp_names(NameRef a, NameRef b) {
  if (a == b) return 0;
  if (a->rank != b->rank) return a->rank < b->rank ? -1 : 1;
  if (a->entries.size() != b->entries.size())
    return a->entries.size() < b->entries.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->entries.size(); ++i) {
    int c = cmp_names(a->entries[i].first, b->entries[i].first);
    if (c != 0) return c;
    int wa = a->entries[i].second, wb = b->entries[i].second;
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  return 0;
}

Hf Hf::ordinal(int k) {
  Hf h;
  for (int i = 0; i < k; ++i) h.elems.push_back(Hf::ordinal(i));
  return h;
}

std::size_t Ctx::KeyHash::operator()(
    const std::vector<std::pair<std::uint32_t, int>>& k) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [id, w] : k) {
    h ^= id + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(w) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

Ctx::Ctx(const HeytingAlgebra& alg, BudgetConfig budget, bool memoize)
    : alg_(&alg), budget_(budget), memoize_(memoize) {
  empty_ = intern({});
}

bool Ctx::owns(NameRef n) const {
  return n != nullptr && n->id < nodes_.size() && &nodes_[n->id] == n;
}

void Ctx::require_owned(NameRef n) const {
  if (!owns(n))
    throw std::invalid_argument(
        "name does not belong to this context/algebra");
}

NameRef Ctx::empty_name() { return empty_; }

NameRef Ctx::intern(std::vector<std::pair<NameRef, int>> entries) {
  std::vector<std::pair<std::uint32_t, int>> key;
  key.reserve(entries.size());
  for (const auto& [c, w] : entries) key.emplace_back(c->id, w);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;

  NameNode node;
  node.rank = 0;
  for (const auto& [c, w] : entries)
    node.rank = std::max(node.rank, c->rank + 1);
  node.entries = std::move(entries);
  node.id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(node));
  NameRef ref = &nodes_.back();
  intern_.emplace(std::move(key), ref);
  return ref;
}

NameRef Ctx::make_name(std::vector<std::pair<NameRef, int>> raw) {
  const auto& h = *alg_;
  // Drop bottom weights, validate children and weights.
  std::vector<std::pair<NameRef, int>> entries;
  entries.reserve(raw.size());
  for (auto& [c, w] : raw) {
    require_owned(c);
    if (w < 0 || w >= h.size())
      throw std::invalid_argument("weight index out of range");
    if (w == h.bottom()) continue;
    entries.emplace_back(c, w);
  }
  // Join weights of pointer-identical children.
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<NameRef, int>> merged;
  for (const auto& [c, w] : entries) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second = h.join(merged.back().second, w);
    else
      merged.emplace_back(c, w);
  }
  // Extensional merge: children that are top-equal collapse to the
  // structurally least representative with joined weight.
  std::vector<std::pair<NameRef, int>> out;
  std::vector<bool> used(merged.size(), false);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (used[i]) continue;
    NameRef rep = merged[i].first;
    int w = merged[i].second;
    for (std::size_t j = i + 1; j < merged.size(); ++j) {
      if (used[j]) continue;
      if (eq_ix(*this, merged[i].first, merged[j].first) == h.top()) {
        used[j] = true;
        w = h.join(w, merged[j].second);
        if (cmp_names(merged[j].first, rep) < 0) rep = merged[j].first;
      }
    }
    out.emplace_back(rep, w);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int c = cmp_names(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });

  if (static_cast<int>(out.size()) > budget_.max_entries)
    throw BudgetError("max_entries", budget_.max_entries,
                      static_cast<long>(out.size()));
  int rank = 0;
  for (const auto& [c, w] : out) rank = std::max(rank, c->rank + 1);
  if (rank > budget_.max_rank)
    throw BudgetError("max_rank", budget_.max_rank, rank);
  return intern(std::move(out));
}

NameRef Ctx::make_name_distinct(std::vector<std::pair<NameRef, int>> raw) {
  const auto& h = *alg_;
  std::vector<std::pair<NameRef, int>> entries;
  entries.reserve(raw.size());
  for (auto& [c, w] : raw) {
    require_owned(c);
    if (w < 0 || w >= h.size())
      throw std::invalid_argument("weight index out of range");
    if (w == h.bottom()) continue;
    entries.emplace_back(c, w);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<NameRef, int>> out;
  for (const auto& [c, w] : entries) {
    if (!out.empty() && out.back().first == c)
      out.back().second = h.join(out.back().second, w);
    else
      out.emplace_back(c, w);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int c = cmp_names(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
  if (static_cast<int>(out.size()) > budget_.max_entries)
    throw BudgetError("max_entries", budget_.max_entries,
                      static_cast<long>(out.size()));
  int rank = 0;
  for (const auto& [c, w] : out) rank = std::max(rank, c->rank + 1);
  if (rank > budget_.max_rank)
    throw BudgetError("max_rank", budget_.max_rank, rank);
  return intern(std::move(out));
}

TruthValue eq_value(Ctx& ctx, NameRef x, NameRef y) {
  ctx.require_owned(x);
  ctx.require_owned(y);
  return ctx.tv(eq_ix(ctx, x, y));
}

TruthValue mem_value(Ctx& ctx, NameRef x, NameRef y) {
  ctx.require_owned(x);
  ctx.require_owned(y);
  return ctx.tv(mem_ix(ctx, x, y));
}

TruthValue subset_value(Ctx& ctx, NameRef x, NameRef y) {
  ctx.require_owned(x);
  ctx.require_owned(y);
  return ctx.tv(sub_ix(ctx, x, y));
}

NameRef normalize(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  return ctx.make_name(x->entries);
}

NameRef check_name(Ctx& ctx, const Hf& s) {
  std::vector<std::pair<NameRef, int>> entries;
  entries.reserve(s.elems.size());
  for (const Hf& e : s.elems)
    entries.emplace_back(check_name(ctx, e), ctx.algebra().top());
  return ctx.make_name(std::move(entries));
}

NameRef ordinal_name(Ctx& ctx, int k) {
  // Iterative von Neumann construction; the literal Hf tree for k is
  // exponentially large in k.
  int top = ctx.algebra().top();
  std::vector<std::pair<NameRef, int>> entries;
  NameRef cur = ctx.empty_name();
  for (int i = 0; i < k; ++i) {
    entries.emplace_back(cur, top);
    cur = ctx.make_name(entries);
  }
  return cur;
}

const std::vector<NameRef>& subset_names(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  auto it = ctx.subset_memo.find(x->id);
  if (it != ctx.subset_memo.end()) return it->second;

  const auto& h = ctx.algebra();
  const auto& ae = x->entries;
  int n = static_cast<int>(ae.size());
  long cap = ctx.budget().max_subset_names;

  // e[j][i] = [[a_j = a_i]]. A candidate weight vector q denotes the name
  // {(a_i, q_i)}; its membership closure sig_j = join_i (q_i /\ e[j][i])
  // equals [[a_j in candidate]], and two candidates are top-equal exactly
  // when their closures coincide. Dedup therefore hashes closures instead of
  // running pairwise equality checks.
  std::vector<std::vector<int>> e(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      e[j][i] = eq_ix(ctx, ae[j].first, ae[i].first);

  struct State {
    std::vector<int> q;
    std::vector<int> sig;
  };
  std::vector<State> frontier{{{}, std::vector<int>(n, h.bottom())}};
  for (int m = 0; m < n; ++m) {
    std::vector<State> next;
    std::map<std::vector<int>, bool> seen;
    for (const State& st : frontier) {
      for (int w = 0; w < h.size(); ++w) {
        if (!h.leq(w, ae[m].second)) continue;
        State cand;
        cand.q = st.q;
        cand.q.push_back(w);
        cand.sig = st.sig;
        for (int j = 0; j < n; ++j)
          cand.sig[j] = h.join(cand.sig[j], h.meet(w, e[j][m]));
        if (!seen.emplace(cand.sig, true).second) continue;
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
    for (int i = 0; i < n; ++i) entries.emplace_back(ae[i].first, st.q[i]);
    result.push_back(ctx.make_name(std::move(entries)));
  }
  std::sort(result.begin(), result.end(),
            [](NameRef a, NameRef b) { return cmp_names(a, b) < 0; });
  return ctx.subset_memo.emplace(x->id, std::move(result)).first->second;
}

NameRef union_name(Ctx& ctx, NameRef x) {
  ctx.require_owned(x);
  const auto& h = ctx.algebra();
  std::vector<std::pair<NameRef, int>> entries;
  for (const auto& [a, p] : x->entries)
    for (const auto& [b, q] : a->entries)
      entries.emplace_back(b, h.meet(q, p));
  return ctx.make_name(std::move(entries));
}

NameRef pair_name(Ctx& ctx, NameRef x, NameRef y) {
  return ctx.make_name({{x, ctx.algebra().top()}, {y, ctx.algebra().top()}});
}

NameRef weighted_union(Ctx& ctx,
                       const std::vector<std::pair<NameRef, int>>& family) {
  const auto& h = ctx.algebra();
  std::vector<std::pair<NameRef, int>> entries;
  for (const auto& [n, w] : family) {
    ctx.require_owned(n);
    for (const auto& [b, q] : n->entries) entries.emplace_back(b, h.meet(q, w));
  }
  return ctx.make_name(std::move(entries));
}

namespace {

// k if x is structurally the check name of von Neumann k, else -1. Relies on
// interning: the i-th child of a check ordinal shares the first i entries.
int check_ordinal_of(NameRef x, int top) {
  const auto& e = x->entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].second != top) return -1;
    const auto& ce = e[i].first->entries;
    if (ce.size() != i) return -1;
    for (std::size_t j = 0; j < i; ++j)
      if (ce[j] != e[j]) return -1;
  }
  return static_cast<int>(e.size());
}

}  // namespace

std::string format_name(const Ctx& ctx, NameRef x) {
  if (x->entries.empty()) return "{}";
  if (int k = check_ordinal_of(x, ctx.algebra().top()); k >= 0)
    return "ord:" + std::to_string(k);
  std::string s = "{";
  bool first = true;
  for (const auto& [c, w] : x->entries) {
    if (!first) s += ",";
    first = false;
    s += "(" + format_name(ctx, c) + "," + ctx.algebra().label(w) + ")";
  }
  return s + "}";
}

}  // namespace plumpwork
