#pragma once

// Small reference models, random model generators, and independent oracles
// shared across the test files.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vasco/core.hpp"

namespace fixtures {

using vasco::Int;
using vasco::Vass;
using vasco::Vec;

// Two states. A pumps counter 1, the jump to B costs nothing, B converts
// counter 1 into counter 2. Counter 2 is unbounded but only via pumping first.
inline Vass transfer() {
  return Vass({"A", "B"}, 2,
              {{0, 0, {1, 0}}, {0, 1, {0, 0}}, {1, 1, {-1, 1}}});
}

// Three-stage version: each stage converts the previous counter, the last
// one burns both earlier counters at once.
inline Vass cascade() {
  return Vass({"A", "B", "C"}, 3,
              {{0, 0, {1, 0, 0}},
               {0, 1, {0, 0, 0}},
               {1, 1, {-1, 1, 0}},
               {1, 2, {0, 0, 0}},
               {2, 2, {-1, -1, 1}}});
}

// Pump a counter at A, then drain it through B<->C. The drain transitions
// (indices 2 and 3) are the designated internal ones.
inline Vass pump_drain() {
  return Vass({"A", "B", "C"}, 1,
              {{0, 0, {1}}, {0, 1, {0}}, {1, 2, {-1}}, {2, 1, {-1}}});
}
inline std::vector<std::size_t> pump_drain_internal() { return {2, 3}; }

// Increment freely at q, decrement freely at p, free jumps both ways.
inline Vass updown() {
  return Vass({"q", "p"}, 1,
              {{0, 0, {1}}, {0, 1, {0}}, {1, 0, {0}}, {1, 1, {-1}}});
}

// Never decreases anything.
inline Vass monotone() {
  return Vass({"q"}, 1, {{0, 0, {1}}});
}

// Bounce between 0 and 1 forever: unboundedly many reversals on a counter
// whose value stays bounded.
inline Vass ceiling() {
  return Vass({"q", "p"}, 1, {{0, 1, {1}}, {1, 0, {-1}}});
}

inline std::string models_dir() { return VASCO_MODELS_DIR; }

// ---------------------------------------------------------------------------
// Randomness. Raw engine output reduced by modulo, so sequences are stable
// across standard libraries.

inline std::uint64_t pick(std::mt19937_64& g, std::uint64_t bound) {
  return g() % bound;
}

inline Int pick_in(std::mt19937_64& g, long long lo, long long hi) {
  return Int(lo + static_cast<long long>(pick(g, hi - lo + 1)));
}

struct RandomModelShape {
  int max_states = 3;
  int max_dim = 3;
  int max_trans = 5;
  long long update_lo = -2;
  long long update_hi = 2;
  long long init_hi = 2;
};

inline Vass random_model(std::mt19937_64& g, const RandomModelShape& shape) {
  int nq = 1 + static_cast<int>(pick(g, shape.max_states));
  int n = 1 + static_cast<int>(pick(g, shape.max_dim));
  int nt = 1 + static_cast<int>(pick(g, shape.max_trans));
  std::vector<std::string> names;
  for (int q = 0; q < nq; ++q) names.push_back("q" + std::to_string(q));
  std::vector<vasco::Transition> ts;
  for (int t = 0; t < nt; ++t) {
    vasco::Transition tr;
    tr.from = static_cast<int>(pick(g, nq));
    tr.to = static_cast<int>(pick(g, nq));
    for (int i = 0; i < n; ++i)
      tr.update.push_back(pick_in(g, shape.update_lo, shape.update_hi));
    ts.push_back(std::move(tr));
  }
  return Vass(std::move(names), n, std::move(ts));
}

inline vasco::Configuration random_init(std::mt19937_64& g, const Vass& v,
                                        const RandomModelShape& shape) {
  Vec x;
  for (int i = 0; i < v.dim(); ++i) x.push_back(pick_in(g, 0, shape.init_hi));
  return vasco::Configuration(static_cast<int>(pick(g, v.num_states())),
                              std::move(x));
}

// Random walk staying nonnegative; stops early at dead ends.
inline std::vector<int> random_genuine_path(std::mt19937_64& g, const Vass& v,
                                            const vasco::Configuration& init,
                                            std::size_t length) {
  std::vector<int> path;
  vasco::Configuration cur = init;
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<int> usable;
    for (std::size_t d = 0; d < v.transitions().size(); ++d) {
      const vasco::Transition& t = v.transition(d);
      if (t.from != cur.state) continue;
      bool ok = true;
      for (int i = 0; i < v.dim() && ok; ++i)
        if (cur.values[static_cast<std::size_t>(i)] +
                t.update[static_cast<std::size_t>(i)] < 0)
          ok = false;
      if (ok) usable.push_back(static_cast<int>(d));
    }
    if (usable.empty()) break;
    int d = usable[pick(g, usable.size())];
    path.push_back(d);
    cur = vasco::fire(v, cur, v.transition(static_cast<std::size_t>(d)));
  }
  return path;
}

// Plain breadth-first search for a reachable configuration with every listed
// component at least B. Visited-set cap; hitting it counts as not found.
inline bool bfs_reaches(const Vass& v, const vasco::Configuration& init,
                        const std::vector<int>& components, const Int& bound,
                        std::size_t cap = 200000) {
  auto hit = [&](const Vec& x) {
    for (int i : components)
      if (x[static_cast<std::size_t>(i)] < bound) return false;
    return true;
  };
  std::set<std::pair<int, Vec>> seen;
  std::vector<std::pair<int, Vec>> frontier{{init.state, init.values}};
  seen.insert(frontier[0]);
  if (hit(init.values)) return true;
  while (!frontier.empty() && seen.size() < cap) {
    std::vector<std::pair<int, Vec>> next;
    for (auto& [q, x] : frontier) {
      for (const vasco::Transition& t : v.transitions()) {
        if (t.from != q) continue;
        Vec y = x;
        bool ok = true;
        for (std::size_t i = 0; i < y.size() && ok; ++i) {
          y[i] += t.update[i];
          if (y[i] < 0) ok = false;
        }
        if (!ok) continue;
        if (hit(y)) return true;
        if (seen.size() >= cap) return false;
        if (seen.insert({t.to, y}).second) next.push_back({t.to, std::move(y)});
      }
    }
    frontier = std::move(next);
  }
  return false;
}

// Independent reversal count: walk the value sequence of one component and
// count sign alternations of its nonzero deltas, starting in increasing mode.
inline Vec count_reversals(const std::vector<Vec>& values, int n) {
  Vec reversals(static_cast<std::size_t>(n), Int(0));
  for (int i = 0; i < n; ++i) {
    bool dec = false;
    for (std::size_t s = 1; s < values.size(); ++s) {
      Int d = values[s][static_cast<std::size_t>(i)] -
              values[s - 1][static_cast<std::size_t>(i)];
      if (d > 0 && dec) {
        reversals[static_cast<std::size_t>(i)] += 1;
        dec = false;
      } else if (d < 0 && !dec) {
        reversals[static_cast<std::size_t>(i)] += 1;
        dec = true;
      }
    }
  }
  return reversals;
}

}  // namespace fixtures
