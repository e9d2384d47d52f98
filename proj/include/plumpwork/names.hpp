#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plumpwork/budget.hpp"
#include "plumpwork/heyting.hpp"

namespace plumpwork {

// Heyting-valued set name: a finite list of (child, weight) entries. Nodes are
// interned per context and immutable; after construction the entry list is in
// canonical form (no bottom weights, no two top-equal children, sorted by the
// structural order).
struct NameNode {
  std::vector<std::pair<const NameNode*, int>> entries;
  int rank = 0;
  std::uint32_t id = 0;
};

using NameRef = const NameNode*;

// Total structural order on canonical names: rank, then entry count, then the
// entry lists lexicographically by (child, weight index).
int cmp_names(NameRef a, NameRef b);

// Hereditarily finite set literal, input for check names.
struct Hf {
  std::vector<Hf> elems;
  static Hf ordinal(int k);
};

// Evaluation context: one algebra, the intern table, the budget, and every
// memo table (extensional values, subset enumerations, ordinal predicates,
// plump/arithmetic constructors). Memo entries always equal the value a fresh
// recomputation would produce; memoize=false forces recomputation.
class Ctx {
 public:
  explicit Ctx(const HeytingAlgebra& alg, BudgetConfig budget = {},
               bool memoize = true);

  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;

  const HeytingAlgebra& algebra() const { return *alg_; }
  const BudgetConfig& budget() const { return budget_; }
  bool memoize() const { return memoize_; }

  TruthValue top() const { return {alg_, alg_->top()}; }
  TruthValue bottom() const { return {alg_, alg_->bottom()}; }
  TruthValue tv(int v) const { return {alg_, v}; }

  NameRef empty_name();
  // Normalizes (drop bottom weights, join weights of top-equal children, sort)
  // and interns. Children must already belong to this context.
  NameRef make_name(std::vector<std::pair<NameRef, int>> entries);
  // make_name without the quadratic extensional merge pass; callers must
  // guarantee the children are pairwise not top-equal.
  NameRef make_name_distinct(std::vector<std::pair<NameRef, int>> entries);

  bool owns(NameRef n) const;
  void require_owned(NameRef n) const;

  std::size_t node_count() const { return nodes_.size(); }

  // Memo tables, keyed by node ids. Internal to the library modules.
  std::unordered_map<std::uint64_t, int> eq_memo;
  std::unordered_map<std::uint64_t, int> mem_memo;
  std::unordered_map<std::uint64_t, int> sub_memo;
  std::unordered_map<std::uint64_t, int> relpl_memo;
  std::unordered_map<std::uint32_t, std::vector<NameRef>> subset_memo;
  std::unordered_map<std::uint32_t, int> ord_memo;
  std::unordered_map<std::uint32_t, int> thin_memo;
  std::unordered_map<std::uint32_t, int> plord_memo;
  std::unordered_map<std::uint32_t, int> theta_memo;
  std::unordered_map<std::uint32_t, NameRef> pls_memo;
  std::unordered_map<std::uint32_t, NameRef> plop_memo;
  std::unordered_map<std::uint64_t, NameRef> add_memo;
  std::unordered_map<std::uint64_t, NameRef> mul_memo;
  std::unordered_map<std::uint64_t, NameRef> pow_memo;

 private:
  struct KeyHash {
    std::size_t operator()(
        const std::vector<std::pair<std::uint32_t, int>>& k) const;
  };

  const HeytingAlgebra* alg_;
  BudgetConfig budget_;
  bool memoize_;
  std::deque<NameNode> nodes_;
  std::unordered_map<std::vector<std::pair<std::uint32_t, int>>, NameRef,
                     KeyHash>
      intern_;
  NameRef empty_ = nullptr;

  NameRef intern(std::vector<std::pair<NameRef, int>> entries);
};

// Core semantics. All operations reject names not owned by the context.
TruthValue eq_value(Ctx& ctx, NameRef x, NameRef y);
TruthValue mem_value(Ctx& ctx, NameRef x, NameRef y);
TruthValue subset_value(Ctx& ctx, NameRef x, NameRef y);

// Canonical form; the identity on interned names.
NameRef normalize(Ctx& ctx, NameRef x);

NameRef check_name(Ctx& ctx, const Hf& s);
NameRef ordinal_name(Ctx& ctx, int k);  // check name of von Neumann k

// All subset names of x up to top-equality, sorted structurally. Every result
// g has [[g subset x]] = top, and every z with [[z subset x]] = top is
// top-equal to some result.
const std::vector<NameRef>& subset_names(Ctx& ctx, NameRef x);

NameRef union_name(Ctx& ctx, NameRef x);
NameRef pair_name(Ctx& ctx, NameRef x, NameRef y);
NameRef weighted_union(Ctx& ctx,
                       const std::vector<std::pair<NameRef, int>>& family);

// Canonical literal syntax: {} | {(N,w),...}.
std::string format_name(const Ctx& ctx, NameRef x);

}  // namespace plumpwork
