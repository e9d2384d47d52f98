#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumpwork/coding.hpp"
#include "plumpwork/plump.hpp"
#include "plumpwork/suites.hpp"

using namespace plumpwork;

namespace {

BudgetConfig roomy() {
  BudgetConfig b;
  b.max_rank = 32;
  b.max_entries = 4096;
  b.max_subset_names = 16384;
  return b;
}

}  // namespace

TEST_CASE("finite map construction and lookup") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  FiniteMap f = FiniteMap::from_pairs(ctx, {{e, one}, {one, e}});
  CHECK(f.pairs.size() == 2);
  CHECK(mem_value(ctx, e, f.domain).is_top());
  CHECK(f.at(ctx, e) == one);
  CHECK(f.at(ctx, one) == e);
  CHECK(f.at(ctx, ordinal_name(ctx, 2)) == nullptr);
  // A key top-equal to an existing one is looked up through equality. The
  // extra entry (1̌, u) is absorbed: both its members already sit in y at top.
  int u = *ctx.algebra().index_of("u");
  int top = ctx.algebra().top();
  NameRef half = ctx.make_name({{e, u}});
  NameRef x = ctx.make_name({{e, top}, {half, top}});
  NameRef y = ctx.make_name({{e, top}, {half, top}, {one, u}});
  REQUIRE(x != y);
  REQUIRE(eq_value(ctx, x, y).is_top());
  FiniteMap g = FiniteMap::from_pairs(ctx, {{x, one}});
  CHECK(g.at(ctx, y) == one);
  // Top-equal keys are rejected at construction.
  CHECK_THROWS_AS(FiniteMap::from_pairs(ctx, {{x, e}, {y, e}}),
                  std::invalid_argument);
}

TEST_CASE("incomparability predicates") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  int u = *ctx.algebra().index_of("u");
  NameRef half = ctx.make_name({{e, u}});
  // ∅ ⊆ 1̌, so the pair is comparable.
  CHECK_FALSE(strongly_incomparable_value(ctx, e, one).is_top());
  NameRef left = ctx.make_name({{half, ctx.algebra().top()}});
  CHECK(strongly_incomparable_value(ctx, left, one).v ==
        strongly_incomparable_value(ctx, one, left).v);

  FiniteMap empty = FiniteMap::from_pairs(ctx, {});
  CHECK(pairwise_incomparable_value(ctx, empty).is_top());
  FiniteMap single = FiniteMap::from_pairs(ctx, {{e, one}});
  CHECK(pairwise_incomparable_value(ctx, single).is_top());
  // f(∅)=∅ ⊆ f(1̌)=1̌ while ∅ ≠ 1̌: the pairwise condition fails.
  FiniteMap bad = FiniteMap::from_pairs(ctx, {{e, e}, {one, one}});
  CHECK_FALSE(pairwise_incomparable_value(ctx, bad).is_top());
}

TEST_CASE("encode/decode round trip on incomparable maps") {
  // Decoding is only promised for pairwise incomparable maps, so the sweep
  // generator supplies the instances.
  for (const std::string& id : {"bool2", "sierpinski"}) {
    CAPTURE(id);
    Ctx ctx(HeytingAlgebra::builtin(id), roomy());
    std::size_t index = 0;
    for (const FiniteMap& f : incomparable_map_sweep(ctx, 8)) {
      CAPTURE(index++);
      std::vector<std::pair<NameRef, int>> ka, kb;
      for (const auto& [k, v] : f.pairs) {
        ka.emplace_back(plump_successor(ctx, k), ctx.algebra().top());
        kb.emplace_back(plump_successor(ctx, v), ctx.algebra().top());
      }
      NameRef alpha = weighted_union(ctx, ka);
      NameRef beta = weighted_union(ctx, kb);
      NameRef sigma = encode(ctx, f, alpha, beta);
      CHECK(plord_value(ctx, sigma).is_top());
      FiniteMap back = decode(ctx, sigma, alpha, beta);
      CHECK(maps_equal(ctx, back, f));
    }
  }
}

TEST_CASE("distinct singleton maps get distinct codes") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  NameRef alpha = plump_successor(ctx, one);
  FiniteMap f = FiniteMap::from_pairs(ctx, {{e, one}});
  FiniteMap g = FiniteMap::from_pairs(ctx, {{e, e}});
  CHECK_FALSE(eq_value(ctx, encode(ctx, f, alpha, alpha),
                       encode(ctx, g, alpha, alpha))
                  .is_top());
}

TEST_CASE("maps_equal is equality up to top-equality, not identity") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  int u = *ctx.algebra().index_of("u");
  int top = ctx.algebra().top();
  NameRef half = ctx.make_name({{e, u}});
  NameRef x = ctx.make_name({{e, top}, {half, top}});
  NameRef y = ctx.make_name({{e, top}, {half, top}, {one, u}});
  REQUIRE(eq_value(ctx, x, y).is_top());
  FiniteMap a = FiniteMap::from_pairs(ctx, {{x, one}});
  FiniteMap b = FiniteMap::from_pairs(ctx, {{y, one}});
  CHECK(maps_equal(ctx, a, b));
  FiniteMap c = FiniteMap::from_pairs(ctx, {{x, e}});
  CHECK_FALSE(maps_equal(ctx, a, c));
  FiniteMap d = FiniteMap::from_pairs(ctx, {{x, one}, {e, one}});
  CHECK_FALSE(maps_equal(ctx, a, d));
}

TEST_CASE("sigma_x reconstruction recovers the membership weights") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  NameRef x = plump_successor(ctx, one);
  std::vector<std::pair<NameRef, NameRef>> pairs;
  for (const auto& [b, w] : x->entries)
    pairs.emplace_back(b, plump_successor(ctx, b));
  FiniteMap f = FiniteMap::from_pairs(ctx, pairs);
  NameRef sigma = sigma_x(ctx, x, f);
  NameRef sx = reconstruct_sx(ctx, sigma, f, x);
  CHECK(eq_value(ctx, sx, x).is_top());
  (void)e;
  (void)one;
}
