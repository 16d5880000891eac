#pragma once

// Model transformations: the reversal-counting product, its weak variant
// counting only reversals above a bound, VASS-to-VAS reductions, the
// globalization gadget, and the strong-promptness instance.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vasco/core.hpp"

namespace vasco {

// ---------------------------------------------------------------------------
// Reversal-counting product. For an n-dim model the product has dimension 2n:
// the first n counters behave as in the base model, the last n count, per
// component, how often the update sign direction flips. Each base state is
// paired with a per-component mode (increasing or decreasing); the product is
// exponential in n and is therefore never materialized, only walked lazily.

struct RbState {
  int q = 0;
  unsigned modes = 0;  // bit i set = component i in decreasing mode

  friend bool operator==(const RbState&, const RbState&) = default;
};

class RbLiftSystem {
 public:
  using State = RbState;

  explicit RbLiftSystem(const Vass& model) : v_(&model) {
    if (v_->dim() > 24)
      throw PreconditionViolated("reversal product limited to dimension 24");
  }

  std::size_t dim() const { return 2 * static_cast<std::size_t>(v_->dim()); }
  const Vass& base() const { return *v_; }

  // One lifted transition per applicable base transition; the mode successor
  // and the reversal increments are determined by the update signs:
  //   b(i) < 0: new mode decreasing, count 1 iff the mode was increasing
  //   b(i) > 0: new mode increasing, count 1 iff the mode was decreasing
  //   b(i) = 0: mode and count untouched
  template <typename F>
  void for_each_successor(State s, F&& f) const {
    const auto& ts = v_->transitions();
    for (std::size_t d = 0; d < ts.size(); ++d)
      if (ts[d].from == s.q) {
        auto [next, update] = lift_step(s, ts[d]);
        f(static_cast<int>(d), next, update);
      }
  }

  std::optional<std::pair<State, Vec>> apply(State s, int label) const {
    if (label < 0 || label >= static_cast<int>(v_->transitions().size()))
      return std::nullopt;
    const Transition& t = v_->transition(static_cast<std::size_t>(label));
    if (t.from != s.q) return std::nullopt;
    return lift_step(s, t);
  }

  std::string state_name(State s) const {
    std::string name = v_->state_name(s.q) + ":";
    for (int i = 0; i < v_->dim(); ++i)
      name += (s.modes >> i) & 1u ? 'D' : 'I';
    return name;
  }

  long long state_key(State s) const {
    return (static_cast<long long>(s.q) << v_->dim()) |
           static_cast<long long>(s.modes);
  }

 private:
  std::pair<State, Vec> lift_step(State s, const Transition& t) const {
    int n = v_->dim();
    State next{t.to, s.modes};
    Vec update(2 * static_cast<std::size_t>(n), Int(0));
    for (int i = 0; i < n; ++i) {
      const Int& b = t.update[static_cast<std::size_t>(i)];
      update[static_cast<std::size_t>(i)] = b;
      bool dec = (s.modes >> i) & 1u;
      if (b < 0) {
        next.modes |= 1u << i;
        if (!dec) update[static_cast<std::size_t>(n + i)] = 1;
      } else if (b > 0) {
        next.modes &= ~(1u << i);
        if (dec) update[static_cast<std::size_t>(n + i)] = 1;
      }
    }
    return {next, update};
  }

  const Vass* v_;
};

struct RbLift {
  RbLiftSystem system;
  RbState init_state;  // base state, all components in increasing mode
  Vec init_values;     // base values then n zeros
};

inline RbLift rb_lift(const Vass& v, const Configuration& c) {
  if (c.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("configuration has wrong arity");
  if (c.state < 0 || c.state >= static_cast<int>(v.num_states()))
    throw UnknownState("state index out of range");
  Vec values = c.values;
  values.resize(2 * static_cast<std::size_t>(v.dim()), Int(0));
  return RbLift{RbLiftSystem(v), RbState{c.state, 0u}, std::move(values)};
}

// ---------------------------------------------------------------------------
// Weak variant: a transition system over product configurations where a mode
// switch bumps the reversal counter only when the switching counter's value
// (before the step) exceeds B. Value-dependent, so exposed as a plain
// successor function rather than a labeled transition system.

struct TsConfig {
  RbState state;
  Vec values;  // 2n entries, all nonnegative

  friend bool operator==(const TsConfig&, const TsConfig&) = default;
};

inline std::vector<std::pair<int, TsConfig>> ts_b_successors(
    const Vass& v, const Int& B, const TsConfig& c) {
  int n = v.dim();
  if (c.values.size() != 2 * static_cast<std::size_t>(n))
    throw DimensionMismatch("product configuration has wrong arity");
  std::vector<std::pair<int, TsConfig>> out;
  const auto& ts = v.transitions();
  for (std::size_t d = 0; d < ts.size(); ++d) {
    const Transition& t = ts[d];
    if (t.from != c.state.q) continue;
    TsConfig next{RbState{t.to, c.state.modes}, c.values};
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Int& b = t.update[static_cast<std::size_t>(i)];
      Int& x = next.values[static_cast<std::size_t>(i)];
      bool dec = (c.state.modes >> i) & 1u;
      if (b < 0) {
        next.state.modes |= 1u << i;
        if (!dec && c.values[static_cast<std::size_t>(i)] > B)
          next.values[static_cast<std::size_t>(n + i)] += 1;
      } else if (b > 0) {
        next.state.modes &= ~(1u << i);
        if (dec && c.values[static_cast<std::size_t>(i)] > B)
          next.values[static_cast<std::size_t>(n + i)] += 1;
      }
      x += b;
      if (x < 0) ok = false;
    }
    if (ok) out.emplace_back(static_cast<int>(d), std::move(next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// VASS to VAS, the direct way: one extra counter per state, holding 1 exactly
// for the current state. Every transition moves the 1 from its source's
// counter to its target's and otherwise acts on the data counters as before.

struct VasImage {
  Vass vas;
  Vec init;
};

inline VasImage vass_to_vas_simple(const Vass& v, const Configuration& c) {
  if (c.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("configuration has wrong arity");
  int n = v.dim();
  std::size_t k = v.num_states();
  std::vector<Vec> updates;
  updates.reserve(v.transitions().size());
  for (const Transition& t : v.transitions()) {
    Vec u(static_cast<std::size_t>(n) + k, Int(0));
    for (int i = 0; i < n; ++i)
      u[static_cast<std::size_t>(i)] = t.update[static_cast<std::size_t>(i)];
    u[static_cast<std::size_t>(n) + static_cast<std::size_t>(t.from)] -= 1;
    u[static_cast<std::size_t>(n) + static_cast<std::size_t>(t.to)] += 1;
    updates.push_back(std::move(u));
  }
  Vec init(static_cast<std::size_t>(n) + k, Int(0));
  for (int i = 0; i < n; ++i)
    init[static_cast<std::size_t>(i)] = c.values[static_cast<std::size_t>(i)];
  init[static_cast<std::size_t>(n) + static_cast<std::size_t>(c.state)] = 1;
  return VasImage{Vass::vas(n + static_cast<int>(k), std::move(updates)),
                  std::move(init)};
}

// ---------------------------------------------------------------------------
// VASS to VAS with only three extra counters. States are encoded in the
// levels of two control counters c1, c2 (with k states and M = k+1, state i
// sits at c1 = i*M, c2 = (k+2-i)*M); c3 flags an in-flight transition.
// Each base step becomes a depart/arrive pair: depart drops the control
// counters to a low rendezvous level only reachable from its own source level
// (the subtraction under-flows from any other state's level), arrive restores
// the target's level. Counter moves are chosen so the largest magnitude is
// (k+1)^2, reached by departing state 1 for state k.

inline VasImage vass_to_vas_hp(const Vass& v, const Configuration& c) {
  if (c.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("configuration has wrong arity");
  int n = v.dim();
  Int k = static_cast<std::int64_t>(v.num_states());
  Int M = k + 1;
  auto stable1 = [&](Int i) { return i * M; };
  auto stable2 = [&](Int i) { return (k + 2 - i) * M; };
  std::vector<Vec> updates;
  updates.reserve(2 * v.transitions().size());
  for (const Transition& t : v.transitions()) {
    Int i = t.from + 1;
    Int j = t.to + 1;
    Vec depart(static_cast<std::size_t>(n) + 3, Int(0));
    for (int a = 0; a < n; ++a)
      depart[static_cast<std::size_t>(a)] = t.update[static_cast<std::size_t>(a)];
    depart[static_cast<std::size_t>(n)] = j - stable1(i);
    depart[static_cast<std::size_t>(n) + 1] = (M - j - 1) - stable2(i);
    depart[static_cast<std::size_t>(n) + 2] = 1;
    Vec arrive(static_cast<std::size_t>(n) + 3, Int(0));
    arrive[static_cast<std::size_t>(n)] = stable1(j) - j;
    arrive[static_cast<std::size_t>(n) + 1] = stable2(j) - (M - j - 1);
    arrive[static_cast<std::size_t>(n) + 2] = -1;
    updates.push_back(std::move(depart));
    updates.push_back(std::move(arrive));
  }
  Vec init(static_cast<std::size_t>(n) + 3, Int(0));
  for (int a = 0; a < n; ++a)
    init[static_cast<std::size_t>(a)] = c.values[static_cast<std::size_t>(a)];
  init[static_cast<std::size_t>(n)] = stable1(Int(c.state + 1));
  init[static_cast<std::size_t>(n) + 1] = stable2(Int(c.state + 1));
  return VasImage{Vass::vas(n + 3, std::move(updates)), std::move(init)};
}

// ---------------------------------------------------------------------------
// Globalization: a fresh entry state with one unit-increment self-loop per
// component, then a free jump to every original state. Properties asked from
// the fresh state with zero counters then quantify over all start
// configurations of the original model.

struct Globalized {
  Vass vass;
  Configuration init;  // the fresh state, all counters zero
};

inline Globalized globalize(const Vass& v) {
  std::vector<std::string> names = v.state_names();
  std::string fresh = "q_new";
  auto taken = [&](const std::string& s) {
    for (const std::string& name : names)
      if (name == s) return true;
    return false;
  };
  while (taken(fresh)) fresh += "_";
  int q_new = static_cast<int>(names.size());
  names.push_back(fresh);

  std::vector<Transition> ts = v.transitions();
  for (int i = 0; i < v.dim(); ++i) {
    Vec u(static_cast<std::size_t>(v.dim()), Int(0));
    u[static_cast<std::size_t>(i)] = 1;
    ts.push_back(Transition{q_new, q_new, std::move(u)});
  }
  for (int q = 0; q < static_cast<int>(v.num_states()); ++q)
    ts.push_back(
        Transition{q_new, q, Vec(static_cast<std::size_t>(v.dim()), Int(0))});

  Vass out(std::move(names), v.dim(), std::move(ts));
  Configuration init(q_new, Vec(static_cast<std::size_t>(v.dim()), Int(0)));
  return Globalized{std::move(out), std::move(init)};
}

// ---------------------------------------------------------------------------
// Strong promptness. An instance partitions the transitions into internal and
// external ones; the model is strongly prompt from a start configuration when
// internal-only suffixes have a uniformly bounded length over all reachable
// configurations.

struct PromptnessInstance {
  PromptnessInstance(const Vass& model, std::vector<std::size_t> internal)
      : base(&model), mask(model.transitions().size(), false) {
    for (std::size_t i : internal) {
      if (i >= mask.size())
        throw ModelError("internal transition index out of range");
      if (mask[i]) throw ModelError("duplicate internal transition index");
      mask[i] = true;
    }
  }

  const Vass* base;
  std::vector<bool> mask;  // true = internal

  bool is_internal(std::size_t i) const { return mask.at(i); }
  std::vector<std::size_t> internal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> external_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (!mask[i]) out.push_back(i);
    return out;
  }
};

struct PromptnessImage {
  Vass vass;
  Configuration init;
  std::size_t counting_component;  // 0-based; counts phase-2 internal steps
};

// Two phases. Phase 1 runs the whole model with an idle extra counter and may
// switch to phase 2 at any state for free; phase 2 keeps only the internal
// transitions, each bumping the extra counter. The base is strongly prompt
// from c exactly when the extra counter is bounded over the image, i.e. the
// image is not unbounded in its last component.
inline PromptnessImage promptness_reduction(const PromptnessInstance& p,
                                            const Configuration& c) {
  const Vass& v = *p.base;
  if (c.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("configuration has wrong arity");
  int n = v.dim();
  int k = static_cast<int>(v.num_states());

  std::vector<std::string> names;
  names.reserve(2 * static_cast<std::size_t>(k));
  for (const std::string& s : v.state_names()) names.push_back(s + ".1");
  for (const std::string& s : v.state_names()) names.push_back(s + ".2");

  auto widen = [n](const Vec& u, Int extra) {
    Vec w(static_cast<std::size_t>(n) + 1, Int(0));
    for (int i = 0; i < n; ++i)
      w[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(n)] = std::move(extra);
    return w;
  };

  std::vector<Transition> ts;
  for (const Transition& t : v.transitions())
    ts.push_back(Transition{t.from, t.to, widen(t.update, 0)});
  for (int q = 0; q < k; ++q)
    ts.push_back(Transition{q, k + q,
                            Vec(static_cast<std::size_t>(n) + 1, Int(0))});
  for (std::size_t d = 0; d < v.transitions().size(); ++d)
    if (p.mask[d]) {
      const Transition& t = v.transition(d);
      ts.push_back(Transition{k + t.from, k + t.to, widen(t.update, 1)});
    }

  Vass out(std::move(names), n + 1, std::move(ts));
  Vec init_values = c.values;
  init_values.push_back(0);
  Configuration init(c.state, std::move(init_values));
  return PromptnessImage{std::move(out), std::move(init),
                         static_cast<std::size_t>(n)};
}

}  // namespace vasco
