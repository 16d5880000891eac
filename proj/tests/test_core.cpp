#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "vasco/core.hpp"

using namespace vasco;

TEST_CASE("model construction validates its parts") {
  CHECK_THROWS_AS(Vass({}, 1, {}), EmptyModel);
  CHECK_THROWS_AS(Vass({"A", "A"}, 1, {}), ModelError);
  CHECK_THROWS_AS(Vass({"A"}, 1, {{0, 1, {1}}}), UnknownState);
  CHECK_THROWS_AS(Vass({"A"}, 2, {{0, 0, {1}}}), DimensionMismatch);
  CHECK_THROWS_AS(Vass({"A"}, -1, {}), DimensionMismatch);

  Vass v = fixtures::transfer();
  CHECK(v.dim() == 2);
  CHECK(v.num_states() == 2);
  CHECK(v.state_index("A") == 0);
  CHECK(v.state_index("B") == 1);
  CHECK_THROWS_AS(v.state_index("C"), UnknownState);
  CHECK(v.state_name(1) == "B");
  CHECK_THROWS_AS(v.state_name(2), UnknownState);
}

TEST_CASE("single-state helper builds a plain vector addition system") {
  Vass v = Vass::vas(2, {{1, 0}, {-1, 1}});
  CHECK(v.num_states() == 1);
  CHECK(v.transitions().size() == 2);
  CHECK(v.transitions()[1].from == 0);
  CHECK(v.transitions()[1].to == 0);
  CHECK(v.transitions()[1].update == Vec{-1, 1});
}

TEST_CASE("raw model validation resolves names") {
  RawModel raw;
  raw.dim = 2;
  raw.states = {"A", "B"};
  raw.transitions = {{"A", "B", {1, -1}}};
  raw.init_state = "A";
  raw.init_values = {0, 0};
  Vass v = validate(raw);
  CHECK(v.transitions().size() == 1);
  CHECK(v.transitions()[0].from == 0);
  CHECK(v.transitions()[0].to == 1);
  auto init = validated_init(raw, v);
  REQUIRE(init.has_value());
  CHECK(init->state == 0);

  raw.transitions.push_back({"A", "Z", {0, 0}});
  CHECK_THROWS_AS(validate(raw), UnknownState);
  raw.transitions.pop_back();
  raw.internal = std::vector<std::size_t>{5};
  CHECK_THROWS_AS(validate(raw), ModelError);
}

TEST_CASE("configurations refuse negative counters, pseudo ones do not") {
  CHECK_THROWS_AS(Configuration(0, {1, -1}), NegativeCounter);
  try {
    Configuration(0, {1, -1});
  } catch (const NegativeCounter& e) {
    CHECK(e.component == 1);
  }
  PseudoConfiguration p{0, {1, -1}};
  CHECK(p.values[1] == -1);
}

TEST_CASE("firing applies updates and enforces the model shape") {
  Vass v = fixtures::transfer();
  Configuration c(0, {2, 0});

  Configuration c1 = fire(v, c, v.transition(0));
  CHECK(c1.state == 0);
  CHECK(c1.values == Vec{3, 0});

  Configuration c2 = fire(v, c, v.transition(1));
  CHECK(c2.state == 1);
  CHECK(c2.values == Vec{2, 0});

  CHECK_THROWS_AS(fire(v, c, v.transition(2)), WrongSource);
  CHECK_THROWS_AS(fire(v, Configuration(1, {0, 0}), v.transition(2)),
                  NegativeCounter);

  PseudoConfiguration p = fire_pseudo(v, PseudoConfiguration{1, {0, 0}},
                                      v.transition(2));
  CHECK(p.values == Vec{-1, 1});
}

TEST_CASE("replay walks paths and reports genuineness") {
  Vass v = fixtures::transfer();
  // Pump twice, jump, convert twice.
  std::vector<int> path = {0, 0, 1, 2, 2};
  Replay r = replay(v, PseudoConfiguration{0, {0, 0}}, path);
  REQUIRE(r.sequence.size() == 6);
  CHECK(r.genuine);
  CHECK(r.sequence.back().state == 1);
  CHECK(r.sequence.back().values == Vec{0, 2});

  // Conversion without pumping dips below zero: still a pseudo-run.
  Replay neg = replay(v, PseudoConfiguration{0, {0, 0}}, {1, 2});
  CHECK_FALSE(neg.genuine);
  CHECK(neg.sequence.back().values == Vec{-1, 1});

  CHECK_THROWS_AS(replay(v, PseudoConfiguration{0, {0, 0}}, {2}), BrokenPath);
  CHECK_THROWS_AS(replay(v, PseudoConfiguration{0, {0, 0}}, {7}), BrokenPath);
  try {
    replay(v, PseudoConfiguration{0, {0, 0}}, {0, 2});
  } catch (const BrokenPath& e) {
    CHECK(e.at == 1);
  }
}

TEST_CASE("run constructors validate, pseudo-run constructors only chain") {
  Vass v = fixtures::transfer();
  CHECK_NOTHROW(Run(v, Configuration(0, {0, 0}), {0, 1, 2}));
  CHECK_THROWS_AS(Run(v, Configuration(0, {0, 0}), {1, 2}), NegativeCounter);
  CHECK_NOTHROW(PseudoRun(v, PseudoConfiguration{0, {0, 0}}, {1, 2}));
  CHECK_THROWS_AS(PseudoRun(v, PseudoConfiguration{0, {0, 0}}, {2}),
                  BrokenPath);
}

TEST_CASE("ceil_log2_1p matches hand values") {
  CHECK(ceil_log2_1p(0) == 0);
  CHECK(ceil_log2_1p(1) == 1);
  CHECK(ceil_log2_1p(2) == 2);
  CHECK(ceil_log2_1p(3) == 2);
  CHECK(ceil_log2_1p(4) == 3);
  CHECK(ceil_log2_1p(7) == 3);
  CHECK(ceil_log2_1p(8) == 4);
  CHECK(ceil_log2_1p(Int(1) << 100) == 101);
}

TEST_CASE("norms of the transfer model") {
  Norms n = norms(fixtures::transfer());
  CHECK(n.pic == 1);
  CHECK(n.absmax == 1);
  // 2 states + 2 * 3 * (2*2 + (2 + 1))
  CHECK(n.size == 44);
}

TEST_CASE("norms of a one-decrement system") {
  Norms n = norms(Vass::vas(1, {{-1}}));
  CHECK(n.pic == 1);
  CHECK(n.absmax == 1);
  // 1 state + 1 * 1 * (2*1 + 3)
  CHECK(n.size == 6);
}

TEST_CASE("norm clamps") {
  Norms no_trans = norms(Vass({"q"}, 1, {}));
  CHECK(no_trans.size == 2);
  CHECK(no_trans.pic == 0);

  Norms mono = norms(fixtures::monotone());
  CHECK(mono.pic == 0);
  CHECK(pic_clamped(mono) == 1);

  Norms big = norms(Vass::vas(1, {{-5}, {3}}));
  CHECK(big.pic == 5);
  CHECK(big.absmax == 5);
  CHECK(pic_clamped(big) == 5);
}

TEST_CASE("system view enumerates successors in declaration order") {
  Vass v = fixtures::transfer();
  VassSystem sys(v);
  CHECK(sys.dim() == 2);

  std::vector<int> labels;
  std::vector<int> targets;
  sys.for_each_successor(0, [&](int label, int to, const Vec& u) {
    labels.push_back(label);
    targets.push_back(to);
    CHECK(u.size() == 2);
  });
  CHECK(labels == std::vector<int>{0, 1});
  CHECK(targets == std::vector<int>{0, 1});

  auto step = sys.apply(1, 2);
  REQUIRE(step.has_value());
  CHECK(step->first == 1);
  CHECK(step->second == Vec{-1, 1});
  CHECK_FALSE(sys.apply(0, 2).has_value());
  CHECK_FALSE(sys.apply(0, 99).has_value());

  CHECK(sys.state_name(1) == "B");
  CHECK(sys.state_key(1) == 1);
}
