#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "vasco/reductions.hpp"
#include "vasco/search.hpp"

using namespace vasco;

TEST_CASE("shortest witness in label order") {
  Vass v = fixtures::transfer();
  GupProperty p = encode_pb_sigma({{{0}, {1}}}, 2);
  SearchOptions opts;
  opts.depth_cap = 6;
  SearchOutcome out =
      search_witness(VassSystem(v), 0, {0, 0}, VerifyMode{GupWeakMode{p}}, opts);
  REQUIRE(out.status == SearchStatus::found);
  CHECK(out.path == std::vector<int>{0, 1, 2});
  CHECK(out.dec->marks == std::vector<std::size_t>{0, 0, 1, 2, 3});
  CHECK(out.depth_reached == 3);
}

TEST_CASE("pseudo steps ignore counters, genuine steps do not") {
  Vass v = Vass::vas(1, {{-1}});
  GupProperty p;
  p.rows.push_back({Interval::at_least(1)});
  VerifyMode mode{GupWeakMode{p}};

  SearchOptions pseudo;
  pseudo.depth_cap = 4;
  SearchOutcome a = search_witness(VassSystem(v), 0, {5}, mode, pseudo);
  CHECK(a.status == SearchStatus::capped);
  CHECK(a.depth_reached == 4);

  SearchOptions genuine;
  genuine.depth_cap = 9;
  genuine.genuine_steps = true;
  SearchOutcome b = search_witness(VassSystem(v), 0, {5}, mode, genuine);
  CHECK(b.status == SearchStatus::exhausted);
  CHECK(b.depth_reached == 5);
}

TEST_CASE("empty paths count as candidates") {
  Vass v = Vass::vas(1, {{1}});
  GupProperty p;
  p.rows.push_back({Interval::all()});
  SearchOptions opts;
  opts.genuine_steps = true;
  SearchOutcome loose =
      search_witness(VassSystem(v), 0, {0}, VerifyMode{GupRunMode{p}}, opts);
  REQUIRE(loose.status == SearchStatus::found);
  CHECK(loose.path->empty());

  opts.require_nonempty_loops = true;
  SearchOutcome strict =
      search_witness(VassSystem(v), 0, {0}, VerifyMode{GupRunMode{p}}, opts);
  REQUIRE(strict.status == SearchStatus::found);
  CHECK(strict.path == std::vector<int>{0});
}

TEST_CASE("self-covering search distinguishes termination") {
  TerminationProperty tp = termination_property(1);
  SearchOptions opts;
  opts.genuine_steps = true;
  opts.require_nonempty_loops = tp.require_nonempty_loops;

  Vass down = Vass::vas(1, {{-1}});
  SearchOutcome a = search_witness(VassSystem(down), 0, {2},
                                   VerifyMode{GupRunMode{tp.property}}, opts);
  CHECK(a.status == SearchStatus::exhausted);

  Vass up = Vass::vas(1, {{1}});
  SearchOutcome b = search_witness(VassSystem(up), 0, {0},
                                   VerifyMode{GupRunMode{tp.property}}, opts);
  REQUIRE(b.status == SearchStatus::found);
  CHECK(b.path == std::vector<int>{0});
}

TEST_CASE("node budget caps the search") {
  Vass v = fixtures::transfer();
  GupProperty p = encode_pb_sigma({{{1}}}, 2);
  SearchOptions opts;
  opts.depth_cap = 12;
  opts.node_budget = 10;
  SearchOutcome out =
      search_witness(VassSystem(v), 0, {0, 0}, VerifyMode{GupWeakMode{p}}, opts);
  CHECK(out.status == SearchStatus::capped);
  CHECK(out.nodes == 11);
}

TEST_CASE("an inner decomposition cap downgrades exhaustion") {
  Vass v = Vass::vas(1, {{-1}});
  SearchOptions opts;
  opts.genuine_steps = true;
  opts.find.budget = 1;
  SearchOutcome out = search_witness(VassSystem(v), 0, {1},
                                     VerifyMode{PbSigmaMode{{{{0}}}}}, opts);
  CHECK(out.status == SearchStatus::capped);
}

TEST_CASE("reversal witness on the lifted product") {
  Vass v = fixtures::updown();
  RbLift lift = rb_lift(v, Configuration(0, {0}));
  SearchOptions opts;
  opts.depth_cap = 6;
  opts.genuine_steps = true;
  SearchOutcome out = search_witness(lift.system, lift.init_state,
                                     lift.init_values,
                                     VerifyMode{PbSigmaMode{{{{1}}}}}, opts);
  REQUIRE(out.status == SearchStatus::found);
  CHECK(out.path == std::vector<int>{0, 1, 3, 2, 0});
  CHECK(out.dec->marks == std::vector<std::size_t>{0, 0, 5});
}

TEST_CASE("search outcomes are deterministic") {
  Vass v = fixtures::transfer();
  GupProperty p = encode_pb_sigma({{{0}, {1}}}, 2);
  SearchOptions opts;
  opts.depth_cap = 5;
  SearchOutcome a =
      search_witness(VassSystem(v), 0, {0, 0}, VerifyMode{GupWeakMode{p}}, opts);
  SearchOutcome b =
      search_witness(VassSystem(v), 0, {0, 0}, VerifyMode{GupWeakMode{p}}, opts);
  CHECK(a.status == b.status);
  CHECK(a.path == b.path);
  CHECK(a.dec == b.dec);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("found witnesses verify under their mode") {
  std::mt19937_64 g(90917);
  int verified = 0;
  for (int round = 0; round < 60; ++round) {
    Vass v = fixtures::random_model(g, {});
    vasco::Configuration init = fixtures::random_init(g, v, {});
    DisjointnessSequence sigma;
    sigma.sets.push_back({static_cast<int>(fixtures::pick(
        g, static_cast<std::uint64_t>(v.dim())))});
    VerifyMode mode{GupWeakMode{encode_pb_sigma(sigma, v.dim())}};
    SearchOptions opts;
    opts.depth_cap = 5;
    opts.node_budget = 20000;
    SearchOutcome out =
        search_witness(VassSystem(v), init.state, init.values, mode, opts);
    if (out.status != SearchStatus::found) continue;
    Trace t = system_trace(VassSystem(v), init.state, init.values, *out.path);
    CHECK(verify(t, *out.dec, mode));
    ++verified;
  }
  CHECK(verified > 15);
}
