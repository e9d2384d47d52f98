#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumpwork/arith.hpp"
#include "plumpwork/plump.hpp"

using namespace plumpwork;

namespace {

BudgetConfig roomy() {
  BudgetConfig b;
  b.max_rank = 32;
  b.max_entries = 4096;
  b.max_subset_names = 16384;
  return b;
}

int ordinal_of(Ctx& ctx, NameRef n) {
  for (int k = 0;; ++k) {
    if (n == ordinal_name(ctx, k)) return k;
    if (k > 64) return -1;
  }
}

}  // namespace

TEST_CASE("bool2 arithmetic collapses to classical ordinal arithmetic") {
  Ctx ctx(HeytingAlgebra::builtin("bool2"), roomy());
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      NameRef na = ordinal_name(ctx, a);
      NameRef nb = ordinal_name(ctx, b);
      CHECK(ordinal_of(ctx, pl_add(ctx, na, nb)) == a + b);
      if (a <= 3 && b <= 3)
        CHECK(ordinal_of(ctx, pl_mul(ctx, na, nb)) == a * b);
    }
  NameRef two = ordinal_name(ctx, 2);
  NameRef three = ordinal_name(ctx, 3);
  CHECK(ordinal_of(ctx, pl_pow(ctx, two, three)) == 8);
  CHECK(ordinal_of(ctx, pl_pow(ctx, three, two)) == 9);
}

TEST_CASE("zero to a positive power is one under the defining equation") {
  // alpha^beta = 1 ∪ ⋃_{γ∈β} (alpha^γ · alpha) always contains 1, so 0^b = 1
  // for every b, including b > 0.
  Ctx ctx(HeytingAlgebra::builtin("bool2"), roomy());
  NameRef zero = ctx.empty_name();
  for (int b = 0; b <= 3; ++b)
    CHECK(ordinal_of(ctx, pl_pow(ctx, zero, ordinal_name(ctx, b))) == 1);
}

TEST_CASE("identities hold over every core algebra") {
  for (const std::string& id : {"bool2", "sierpinski", "diamond"}) {
    CAPTURE(id);
    Ctx ctx(HeytingAlgebra::builtin(id), roomy());
    NameRef zero = ctx.empty_name();
    NameRef one = ordinal_name(ctx, 1);
    NameRef a = plump_successor(ctx, one);
    CHECK(eq_value(ctx, pl_add(ctx, a, zero), a).is_top());
    CHECK(eq_value(ctx, pl_add(ctx, zero, a), a).is_top());
    CHECK(eq_value(ctx, pl_mul(ctx, a, zero), zero).is_top());
    CHECK(eq_value(ctx, pl_mul(ctx, a, one), a).is_top());
    CHECK(eq_value(ctx, pl_pow(ctx, a, zero), one).is_top());
    CHECK(eq_value(ctx, pl_pow(ctx, a, one), a).is_top());
    // Adding one is the plump successor.
    CHECK(eq_value(ctx, pl_add(ctx, a, one), plump_successor(ctx, a)).is_top());
    // Results stay plump.
    CHECK(plord_value(ctx, pl_add(ctx, a, a)).is_top());
    CHECK(plord_value(ctx, pl_mul(ctx, a, a)).is_top());
  }
}

TEST_CASE("sierpinski sums grow past the thin ordinals") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef one = ordinal_name(ctx, 1);
  NameRef two = pl_add(ctx, one, one);
  // 1 + 1 is the plump 2, which properly contains the thin 2̌.
  CHECK(subset_value(ctx, ordinal_name(ctx, 2), two).is_top());
  CHECK_FALSE(eq_value(ctx, ordinal_name(ctx, 2), two).is_top());
  CHECK(two == plump_successor(ctx, one));
}

TEST_CASE("pair code separates pairs") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef zero = ctx.empty_name();
  NameRef one = ordinal_name(ctx, 1);
  NameRef alpha = ordinal_name(ctx, 2);
  NameRef c00 = pair_code(ctx, alpha, zero, zero);
  NameRef c10 = pair_code(ctx, alpha, one, zero);
  NameRef c01 = pair_code(ctx, alpha, zero, one);
  CHECK_FALSE(eq_value(ctx, c00, c10).is_top());
  CHECK_FALSE(eq_value(ctx, c00, c01).is_top());
  CHECK_FALSE(eq_value(ctx, c10, c01).is_top());
  CHECK(eq_value(ctx, pair_code(ctx, alpha, zero, zero), c00).is_top());
}

TEST_CASE("arithmetic is memoized per context") {
  Ctx ctx(HeytingAlgebra::builtin("sierpinski"), roomy());
  NameRef one = ordinal_name(ctx, 1);
  NameRef s1 = pl_add(ctx, one, one);
  CHECK(pl_add(ctx, one, one) == s1);  // identical node, not just top-equal
  CHECK_FALSE(ctx.add_memo.empty());
}
