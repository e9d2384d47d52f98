#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plumpwork/heyting.hpp"

using namespace plumpwork;

TEST_CASE("builtin algebras satisfy every law") {
  for (const std::string& id : HeytingAlgebra::builtin_ids()) {
    CAPTURE(id);
    const auto& h = HeytingAlgebra::builtin(id);
    CHECK(h.check_laws().empty());
    CHECK(h.id() == id);
  }
}

TEST_CASE("builtin carrier shapes") {
  CHECK(HeytingAlgebra::builtin("bool2").size() == 2);
  CHECK(HeytingAlgebra::builtin("sierpinski").size() == 3);
  CHECK(HeytingAlgebra::builtin("chain4").size() == 4);
  CHECK(HeytingAlgebra::builtin("diamond").size() == 4);

  CHECK(HeytingAlgebra::builtin("bool2").is_boolean());
  CHECK_FALSE(HeytingAlgebra::builtin("sierpinski").is_boolean());
  CHECK_FALSE(HeytingAlgebra::builtin("chain4").is_boolean());
  // Boolean but four-valued: degeneration tests must not key on this.
  CHECK(HeytingAlgebra::builtin("diamond").is_boolean());

  CHECK_THROWS_AS(HeytingAlgebra::builtin("nope"), std::invalid_argument);
}

TEST_CASE("sierpinski tables") {
  const auto& h = HeytingAlgebra::builtin("sierpinski");
  int bot = h.bottom(), top = h.top();
  auto u = h.index_of("u");
  REQUIRE(u.has_value());
  CHECK(h.leq(bot, *u));
  CHECK(h.leq(*u, top));
  CHECK_FALSE(h.leq(top, *u));
  CHECK(h.implies(*u, bot) == bot);     // negation of u collapses to bottom
  CHECK(h.neg(*u) == bot);
  CHECK(h.implies(top, *u) == *u);
  CHECK(h.join(*u, h.neg(*u)) == *u);   // excluded middle fails at u
  CHECK(h.meet(*u, top) == *u);
}

TEST_CASE("residuation adjunction holds pointwise") {
  for (const std::string& id : HeytingAlgebra::builtin_ids()) {
    const auto& h = HeytingAlgebra::builtin(id);
    for (int p = 0; p < h.size(); ++p)
      for (int q = 0; q < h.size(); ++q)
        for (int r = 0; r < h.size(); ++r)
          CHECK(h.leq(h.meet(p, q), r) == h.leq(p, h.implies(q, r)));
  }
}

TEST_CASE("from_tables rejects a broken implication table") {
  const auto& h = HeytingAlgebra::builtin("bool2");
  std::vector<std::string> labels{"bottom", "top"};
  std::vector<std::vector<bool>> leq{{true, true}, {false, true}};
  std::vector<std::vector<int>> meet{{0, 0}, {0, 1}};
  std::vector<std::vector<int>> join{{0, 1}, {1, 1}};
  std::vector<std::vector<int>> implies{{1, 1}, {1, 1}};  // top->bottom wrong
  auto broken = HeytingAlgebra::from_tables("broken", labels, leq, meet, join,
                                            implies, 0, 1);
  CHECK_FALSE(broken.check_laws().empty());
  CHECK(h.check_laws().empty());
}

TEST_CASE("poset closure and validation") {
  Poset p;
  p.elements = {"a", "b", "c"};
  p.leq.assign(3, std::vector<bool>(3, false));
  p.leq[0][1] = p.leq[1][2] = true;
  p.close();
  CHECK(p.leq[0][2]);  // transitivity
  CHECK(p.leq[0][0]);  // reflexivity
  CHECK(p.validate().empty());
  CHECK_FALSE(p.is_antichain());

  Poset anti = Poset::antichain({"x", "y"});
  CHECK(anti.is_antichain());
  CHECK(anti.validate().empty());
}

TEST_CASE("poset_from_json") {
  Poset p = poset_from_json(
      R"({"elements":["a","b"],"leq":[["a","b"]]})");
  CHECK(p.leq[0][1]);
  CHECK_FALSE(p.leq[1][0]);

  // A two-cycle closes into a violation of antisymmetry.
  CHECK_THROWS_AS(poset_from_json(
                      R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(poset_from_json(
                      R"({"elements":["a"],"leq":[["a","z"]]})"),
                  std::invalid_argument);
}

TEST_CASE("downset algebra of the one-point chain is sierpinski-shaped") {
  auto h = HeytingAlgebra::downset_algebra(Poset::chain({"p"}));
  CHECK(h.size() == 2);
  auto h2 = HeytingAlgebra::downset_algebra(Poset::chain({"p", "q"}));
  CHECK(h2.size() == 3);
  CHECK(h2.check_laws().empty());
  auto h3 = HeytingAlgebra::downset_algebra(Poset::antichain({"p", "q"}));
  CHECK(h3.size() == 4);
  CHECK(h3.is_boolean());
}

TEST_CASE("big_meet and big_join") {
  const auto& h = HeytingAlgebra::builtin("chain4");
  CHECK(big_meet(h, {}).is_top());
  CHECK(big_join(h, {}).is_bottom());
  TruthValue a{&h, 1}, b{&h, 2};
  CHECK(big_meet(h, {a, b}).v == 1);
  CHECK(big_join(h, {a, b}).v == 2);
  const auto& other = HeytingAlgebra::builtin("bool2");
  CHECK_THROWS(big_meet(h, {a, TruthValue{&other, 0}}));
}
