#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "plumpwork/plump.hpp"

using namespace plumpwork;

namespace {

BudgetConfig roomy() {
  BudgetConfig b;
  b.max_rank = 16;
  b.max_entries = 2048;
  b.max_subset_names = 16384;
  return b;
}

// Reference construction of the plump successor straight from the subset
// enumeration, without the pruned class walk used by plump_successor.
NameRef brute_pls(Ctx& ctx, NameRef alpha) {
  std::vector<std::pair<NameRef, int>> entries;
  for (NameRef g : subset_names(ctx, alpha))
    entries.emplace_back(g, relpl_value(ctx, alpha, g).v);
  return ctx.make_name(std::move(entries));
}

}  // namespace

TEST_CASE("ordinal predicates over sierpinski") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef e = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  NameRef two = ordinal_name(ctx, 2);
  int u = *ctx.algebra().index_of("u");
  NameRef half = ctx.make_name({{e, u}});

  CHECK(is_ord_value(ctx, e).is_top());
  CHECK(is_ord_value(ctx, two).is_top());
  CHECK(is_ord_value(ctx, ctx.make_name({{one, ctx.algebra().top()}}))
            .is_bottom());  // {1̌} is not transitive
  CHECK(is_thin_value(ctx, two).is_top());
  CHECK(is_thin_value(ctx, plump_successor(ctx, one)).v == u);

  // Frozen separation: 2̌ is thin but not plump over sierpinski, because the
  // subset {(∅,u)} of its member 1̌ is missing.
  CHECK(plord_value(ctx, e).is_top());
  CHECK(plord_value(ctx, one).is_top());
  CHECK(plord_value(ctx, half).is_top());
  CHECK(plord_value(ctx, two).v == u);
}

TEST_CASE("the three plumpness routes agree") {
  for (const std::string& id : {"bool2", "sierpinski", "diamond"}) {
    CAPTURE(id);
    Ctx ctx(HeytingAlgebra::builtin(id), roomy());
    NameRef e = ctx.empty_name();
    NameRef one = ordinal_name(ctx, 1);
    NameRef two = ordinal_name(ctx, 2);
    for (NameRef x : {e, one, two, plump_successor(ctx, one)}) {
      int direct = plord_value(ctx, x).v;
      CHECK(plord_crit_value(ctx, x).v == direct);
      CHECK(vartheta(ctx, x, x).v == direct);
    }
  }
}

TEST_CASE("plump successor matches the brute-force subset construction") {
  for (const std::string& id : {"bool2", "sierpinski", "diamond"}) {
    CAPTURE(id);
    Ctx ctx(HeytingAlgebra::builtin(id), roomy());
    NameRef e = ctx.empty_name();
    NameRef one = ordinal_name(ctx, 1);
    for (NameRef a : {e, one, plump_successor(ctx, e)}) {
      NameRef fast = plump_successor(ctx, a);
      NameRef slow = brute_pls(ctx, a);
      CHECK(eq_value(ctx, fast, slow).is_top());
      CHECK(fast->entries.size() == slow->entries.size());
    }
  }
}

TEST_CASE("frozen pls(1) over sierpinski") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef one = ordinal_name(ctx, 1);
  NameRef s = plump_successor(ctx, one);
  REQUIRE(s->entries.size() == 3);  // ∅, {(∅,u)}, 1̌ — all at top
  for (const auto& [g, w] : s->entries) CHECK(w == ctx.algebra().top());
  CHECK(plord_value(ctx, s).is_top());
}

TEST_CASE("thin successor") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef two = ordinal_name(ctx, 2);
  CHECK(thin_successor(ctx, two) == ordinal_name(ctx, 3));
  CHECK(thin_successor(ctx, ctx.empty_name()) == ordinal_name(ctx, 1));
}

TEST_CASE("plump operator sizes over sierpinski are the frozen counts") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  CHECK(plump_op(ctx, ctx.empty_name())->entries.empty());
  CHECK(plump_op(ctx, ordinal_name(ctx, 2))->entries.size() == 3);
  CHECK(plump_op(ctx, ordinal_name(ctx, 3))->entries.size() == 11);
  NameRef pl4 = plump_op(ctx, ordinal_name(ctx, 4));
  CHECK(pl4->entries.size() == 139);
  CHECK(plord_value(ctx, pl4).is_top());
}

TEST_CASE("plump operator is the identity on plump ordinals") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef s = plump_successor(ctx, ordinal_name(ctx, 1));
  CHECK(eq_value(ctx, plump_op(ctx, s), s).is_top());
  // Over bool2 every ordinal is already plump.
  Ctx b(HeytingAlgebra::builtin("bool2"), roomy());
  for (int k = 0; k <= 4; ++k) {
    NameRef n = ordinal_name(b, k);
    CHECK(eq_value(b, plump_op(b, n), n).is_top());
    CHECK(eq_value(b, plump_successor(b, n), thin_successor(b, n)).is_top());
  }
}

TEST_CASE("theta depends only on the second argument") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef one = ordinal_name(ctx, 1);
  NameRef two = ordinal_name(ctx, 2);
  int u = *ctx.algebra().index_of("u");
  CHECK(vartheta(ctx, two, two).v == u);  // frozen oracle
  CHECK(vartheta(ctx, one, two).v == vartheta(ctx, two, two).v);
  CHECK(vartheta(ctx, two, one).is_top());
}

TEST_CASE("subset enumeration budget fires instead of truncating") {
  BudgetConfig tight;
  tight.max_rank = 16;
  tight.max_entries = 2048;
  tight.max_subset_names = 4;
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), tight);
  NameRef s = plump_successor(ctx, ordinal_name(ctx, 1));
  CHECK_THROWS_AS(plump_successor(ctx, s), BudgetError);
}
