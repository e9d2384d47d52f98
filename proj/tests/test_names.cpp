#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumpwork/names.hpp"

using namespace plumpwork;

namespace {

Ctx make_ctx(const std::string& id = "sierpinski") {
  return Ctx(HeytingAlgebra::builtin(id));
}

}  // namespace

TEST_CASE("empty name and interning") {
  Ctx ctx = make_ctx();
  NameRef e = ctx.empty_name();
  CHECK(e->entries.empty());
  CHECK(e->rank == 0);
  CHECK(ctx.make_name({}) == e);
  NameRef one = ctx.make_name({{e, ctx.algebra().top()}});
  CHECK(ctx.make_name({{e, ctx.algebra().top()}}) == one);
  CHECK(one->rank == 1);
  CHECK(normalize(ctx, one) == one);
}

TEST_CASE("normalization drops bottom weights and joins duplicates") {
  Ctx ctx = make_ctx();
  const auto& h = ctx.algebra();
  NameRef e = ctx.empty_name();
  int u = *h.index_of("u");

  CHECK(ctx.make_name({{e, h.bottom()}}) == ctx.empty_name());
  // The same child listed twice gets its weights joined.
  NameRef joined = ctx.make_name({{e, u}, {e, u}});
  CHECK(joined == ctx.make_name({{e, u}}));
  NameRef topped = ctx.make_name({{e, u}, {e, h.top()}});
  CHECK(topped == ctx.make_name({{e, h.top()}}));
}

TEST_CASE("top-equal children merge even when structurally distinct") {
  Ctx ctx = make_ctx();
  const auto& h = ctx.algebra();
  NameRef e = ctx.empty_name();
  int u = *h.index_of("u");
  // {(∅,u),(∅,top)} is top-equal to 1̌ = {(∅,top)} but not identical.
  NameRef one = ordinal_name(ctx, 1);
  NameRef twin = ctx.make_name(
      {{ctx.make_name({{e, u}}), h.top()}, {e, h.top()}});
  (void)twin;
  NameRef fat = ctx.make_name({{ctx.make_name({{e, u}, {e, h.top()}}), u},
                               {one, h.top()}});
  // The first child normalizes to 1̌ itself, so only one entry survives.
  CHECK(fat->entries.size() == 1);
  CHECK(fat->entries[0].first == one);
  CHECK(fat->entries[0].second == h.top());
}

TEST_CASE("eq, mem, sub oracles over sierpinski") {
  Ctx ctx = make_ctx();
  const auto& h = ctx.algebra();
  NameRef e = ctx.empty_name();
  int u = *h.index_of("u");
  NameRef one = ordinal_name(ctx, 1);
  NameRef half = ctx.make_name({{e, u}});  // {(∅,u)}

  CHECK(eq_value(ctx, e, e).is_top());
  CHECK(eq_value(ctx, half, one).v == u);
  CHECK(subset_value(ctx, half, one).is_top());
  CHECK(subset_value(ctx, one, half).v == u);
  CHECK(mem_value(ctx, e, half).v == u);
  CHECK(mem_value(ctx, e, one).is_top());
  CHECK(mem_value(ctx, one, one).is_bottom());
}

TEST_CASE("ordinal names and check names") {
  Ctx ctx = make_ctx();
  NameRef two = ordinal_name(ctx, 2);
  CHECK(two->rank == 2);
  CHECK(two->entries.size() == 2);
  CHECK(two == check_name(ctx, Hf::ordinal(2)));
  CHECK(format_name(ctx, two) == "ord:2");
  CHECK(format_name(ctx, ctx.empty_name()) == "{}");
  // Large check ordinals stay cheap because entry lists share structure.
  BudgetConfig roomy;
  roomy.max_rank = 64;
  Ctx wide(HeytingAlgebra::builtin("sierpinski"), roomy);
  NameRef big = ordinal_name(wide, 40);
  CHECK(big->entries.size() == 40);
  CHECK(format_name(wide, big) == "ord:40");
}

TEST_CASE("cmp_names is a strict total order on canonical names") {
  Ctx ctx = make_ctx();
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  CHECK(cmp_names(e, e) == 0);
  CHECK(cmp_names(e, one) < 0);
  CHECK(cmp_names(one, e) > 0);
}

TEST_CASE("subset_names is sound, distinct and matches the frozen count") {
  Ctx ctx = make_ctx();
  NameRef one = ordinal_name(ctx, 1);
  const auto& subs = subset_names(ctx, one);
  // ∅, {(∅,u)}, 1̌ — one class per closure signature.
  CHECK(subs.size() == 3);
  for (NameRef g : subs) CHECK(subset_value(ctx, g, one).is_top());
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      CHECK_FALSE(eq_value(ctx, subs[i], subs[j]).is_top());
}

TEST_CASE("make_name_distinct agrees with make_name on distinct children") {
  Ctx ctx = make_ctx();
  const auto& h = ctx.algebra();
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  int u = *h.index_of("u");
  std::vector<std::pair<NameRef, int>> entries{{one, u}, {e, h.top()}};
  CHECK(ctx.make_name_distinct(entries) == ctx.make_name(entries));
}

TEST_CASE("pair and union constructors") {
  Ctx ctx = make_ctx();
  const auto& h = ctx.algebra();
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  NameRef p = pair_name(ctx, e, one);
  CHECK(p->entries.size() == 2);
  CHECK(mem_value(ctx, e, p).is_top());
  CHECK(mem_value(ctx, one, p).is_top());
  CHECK(eq_value(ctx, union_name(ctx, p), one).is_top());
  NameRef w = weighted_union(ctx, {{p, h.top()}, {e, h.top()}});
  CHECK(eq_value(ctx, w, p).is_top());
}

TEST_CASE("budgets are enforced on construction") {
  BudgetConfig tight;
  tight.max_rank = 2;
  Ctx ctx(HeytingAlgebra::builtin("bool2"), tight);
  CHECK_THROWS_AS(ordinal_name(ctx, 3), BudgetError);
  CHECK(ordinal_name(ctx, 2)->rank == 2);
}

TEST_CASE("foreign names are rejected") {
  Ctx a = make_ctx();
  Ctx b = make_ctx();
  NameRef one = ordinal_name(a, 1);
  CHECK_THROWS_AS(eq_value(b, one, b.empty_name()), std::invalid_argument);
}
