#pragma once

// Core model types for vector addition systems with states (VASS):
// states, transitions, configurations over naturals, pseudo-configurations
// over integers, runs, pseudo-runs, and the norm bookkeeping (pic, absmax,
// encoded size) used by the bound calculators.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vasco {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

// ---------------------------------------------------------------------------
// Errors

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : ModelError {
  using ModelError::ModelError;
};

struct UnknownState : ModelError {
  using ModelError::ModelError;
};

struct EmptyModel : ModelError {
  using ModelError::ModelError;
};

struct WrongSource : ModelError {
  using ModelError::ModelError;
};

struct NegativeCounter : ModelError {
  int component;  // 0-based
  NegativeCounter(const std::string& what, int comp)
      : ModelError(what), component(comp) {}
};

struct BrokenPath : ModelError {
  std::size_t at;  // index of the offending path step
  BrokenPath(const std::string& what, std::size_t step)
      : ModelError(what), at(step) {}
};

struct PreconditionViolated : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Model

struct Transition {
  int from = 0;
  int to = 0;
  Vec update;
};

class Vass {
 public:
  Vass(std::vector<std::string> state_names, int dim,
       std::vector<Transition> transitions)
      : names_(std::move(state_names)),
        dim_(dim),
        transitions_(std::move(transitions)) {
    if (names_.empty()) throw EmptyModel("model has no states");
    if (dim_ < 0) throw DimensionMismatch("negative dimension");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw ModelError("empty state name");
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw ModelError("duplicate state name: " + names_[i]);
    }
    for (const Transition& t : transitions_) {
      if (t.from < 0 || t.from >= static_cast<int>(names_.size()) ||
          t.to < 0 || t.to >= static_cast<int>(names_.size()))
        throw UnknownState("transition references unknown state");
      if (t.update.size() != static_cast<std::size_t>(dim_))
        throw DimensionMismatch("transition update has wrong arity");
    }
  }

  // Single-state system (a plain vector addition system).
  static Vass vas(int dim, std::vector<Vec> updates) {
    std::vector<Transition> ts;
    ts.reserve(updates.size());
    for (Vec& u : updates) ts.push_back(Transition{0, 0, std::move(u)});
    return Vass({"s"}, dim, std::move(ts));
  }

  int dim() const { return dim_; }
  std::size_t num_states() const { return names_.size(); }
  const std::vector<std::string>& state_names() const { return names_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Transition& transition(std::size_t i) const {
    if (i >= transitions_.size()) throw ModelError("transition index out of range");
    return transitions_[i];
  }

  int state_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      throw UnknownState("unknown state: " + std::string(name));
    return it->second;
  }
  const std::string& state_name(int q) const {
    if (q < 0 || q >= static_cast<int>(names_.size()))
      throw UnknownState("state index out of range");
    return names_[static_cast<std::size_t>(q)];
  }

 private:
  std::vector<std::string> names_;
  int dim_;
  std::vector<Transition> transitions_;
  std::map<std::string, int, std::less<>> index_;
};

// Parse tree of a model file, before name resolution and validation.
struct RawModel {
  int dim = -1;
  std::vector<std::string> states;
  struct RawTransition {
    std::string from;
    std::string to;
    Vec update;
  };
  std::vector<RawTransition> transitions;
  std::optional<std::string> init_state;
  Vec init_values;
  std::optional<std::vector<std::size_t>> internal;  // transition indices
};

// ---------------------------------------------------------------------------
// Configurations

struct PseudoConfiguration {
  int state = 0;
  Vec values;
};

struct Configuration {
  int state = 0;
  Vec values;

  Configuration() = default;
  Configuration(int q, Vec v) : state(q), values(std::move(v)) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] < 0)
        throw NegativeCounter("configuration has a negative counter",
                              static_cast<int>(i));
  }

  PseudoConfiguration pseudo() const { return PseudoConfiguration{state, values}; }
};

inline Vass validate(const RawModel& raw) {
  if (raw.dim < 0) throw DimensionMismatch("model is missing its dimension");
  if (raw.states.empty()) throw EmptyModel("model declares no states");
  std::vector<Transition> ts;
  ts.reserve(raw.transitions.size());
  // Resolve names through a throwaway model; keeps the error paths shared.
  Vass shell(raw.states, raw.dim, {});
  for (const RawModel::RawTransition& t : raw.transitions) {
    if (t.update.size() != static_cast<std::size_t>(raw.dim))
      throw DimensionMismatch("transition update has wrong arity");
    ts.push_back(Transition{shell.state_index(t.from), shell.state_index(t.to),
                            t.update});
  }
  if (raw.internal) {
    for (std::size_t i : *raw.internal)
      if (i >= ts.size())
        throw ModelError("internal transition index out of range");
  }
  return Vass(raw.states, raw.dim, std::move(ts));
}

// The declared initial configuration, if the file had one.
inline std::optional<Configuration> validated_init(const RawModel& raw,
                                                   const Vass& v) {
  if (!raw.init_state) return std::nullopt;
  if (raw.init_values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("initial values have wrong arity");
  return Configuration(v.state_index(*raw.init_state), raw.init_values);
}

// ---------------------------------------------------------------------------
// Firing

inline void check_transition_shape(const Vass& v, const Transition& t) {
  if (t.update.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("transition update has wrong arity");
  if (t.from < 0 || t.from >= static_cast<int>(v.num_states()) || t.to < 0 ||
      t.to >= static_cast<int>(v.num_states()))
    throw UnknownState("transition references unknown state");
}

inline PseudoConfiguration fire_pseudo(const Vass& v,
                                       const PseudoConfiguration& c,
                                       const Transition& t) {
  check_transition_shape(v, t);
  if (c.state != t.from)
    throw WrongSource("transition does not start at the configuration's state");
  if (c.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("configuration has wrong arity");
  PseudoConfiguration out{t.to, c.values};
  for (int i = 0; i < v.dim(); ++i) out.values[static_cast<std::size_t>(i)] += t.update[static_cast<std::size_t>(i)];
  return out;
}

inline Configuration fire(const Vass& v, const Configuration& c,
                          const Transition& t) {
  PseudoConfiguration p = fire_pseudo(v, c.pseudo(), t);
  for (std::size_t i = 0; i < p.values.size(); ++i)
    if (p.values[i] < 0)
      throw NegativeCounter("firing would make a counter negative",
                            static_cast<int>(i));
  return Configuration(p.state, std::move(p.values));
}

// ---------------------------------------------------------------------------
// Paths, runs, pseudo-runs

// A path is a sequence of transition indices into v.transitions().
struct Replay {
  std::vector<PseudoConfiguration> sequence;  // length = |path| + 1
  bool genuine = false;                       // nonnegative throughout
};

inline Replay replay(const Vass& v, const PseudoConfiguration& init,
                     const std::vector<int>& path) {
  if (init.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("initial values have wrong arity");
  if (init.state < 0 || init.state >= static_cast<int>(v.num_states()))
    throw UnknownState("initial state index out of range");
  Replay r;
  r.sequence.reserve(path.size() + 1);
  r.sequence.push_back(init);
  for (std::size_t k = 0; k < path.size(); ++k) {
    int ti = path[k];
    if (ti < 0 || ti >= static_cast<int>(v.transitions().size()))
      throw BrokenPath("path step is not a transition index", k);
    const Transition& t = v.transition(static_cast<std::size_t>(ti));
    if (r.sequence.back().state != t.from)
      throw BrokenPath("path step does not start where the previous one ended", k);
    r.sequence.push_back(fire_pseudo(v, r.sequence.back(), t));
  }
  r.genuine = true;
  for (const PseudoConfiguration& c : r.sequence)
    for (const Int& x : c.values)
      if (x < 0) {
        r.genuine = false;
        return r;
      }
  return r;
}

struct PseudoRun {
  PseudoConfiguration init;
  std::vector<int> path;

  PseudoRun() = default;
  PseudoRun(const Vass& v, PseudoConfiguration start, std::vector<int> steps)
      : init(std::move(start)), path(std::move(steps)) {
    replay(v, init, path);  // adjacency check
  }
};

struct Run {
  Configuration init;
  std::vector<int> path;

  Run() = default;
  Run(const Vass& v, Configuration start, std::vector<int> steps)
      : init(std::move(start)), path(std::move(steps)) {
    Replay r = replay(v, init.pseudo(), path);
    if (!r.genuine)
      throw NegativeCounter("run goes negative", -1);
  }
};

// ---------------------------------------------------------------------------
// Norms

struct Norms {
  Int pic;     // largest decrease over all updates and components (>= 0)
  Int absmax;  // largest magnitude over all updates and components (>= 0)
  Int size;    // encoded size, clamped to >= 2
};

inline Int ceil_log2_1p(const Int& a) {
  // ceil(log2(1 + a)) for a >= 0.
  if (a <= 0) return 0;
  return Int(boost::multiprecision::msb(a) + 1);
}

inline Norms norms(const Vass& v) {
  Norms n;
  n.pic = 0;
  n.absmax = 0;
  for (const Transition& t : v.transitions())
    for (const Int& b : t.update) {
      if (-b > n.pic) n.pic = -b;
      Int m = b < 0 ? Int(-b) : b;
      if (m > n.absmax) n.absmax = m;
    }
  Int q = static_cast<std::int64_t>(v.num_states());
  Int d = v.dim();
  Int tcount = static_cast<std::int64_t>(v.transitions().size());
  n.size = q + d * tcount * (2 * q + (2 + ceil_log2_1p(n.absmax)));
  if (n.size < 2) n.size = 2;
  return n;
}

inline Int pic_clamped(const Norms& n) { return n.pic < 1 ? Int(1) : n.pic; }

// ---------------------------------------------------------------------------
// Successor-system view of a plain model, shared by the tree builders and the
// witness search. A system exposes states with hashable 64-bit keys, a
// dimension, and per-state successor enumeration in declaration order with
// value-independent updates.

struct VassSystem {
  using State = int;

  explicit VassSystem(const Vass& model) : v(&model) {}

  const Vass* v;

  std::size_t dim() const { return static_cast<std::size_t>(v->dim()); }

  template <typename F>
  void for_each_successor(State q, F&& f) const {
    const auto& ts = v->transitions();
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i].from == q) f(static_cast<int>(i), ts[i].to, ts[i].update);
  }

  // Deterministic step by label; empty when the label does not apply at q.
  std::optional<std::pair<State, Vec>> apply(State q, int label) const {
    if (label < 0 || label >= static_cast<int>(v->transitions().size()))
      return std::nullopt;
    const Transition& t = v->transition(static_cast<std::size_t>(label));
    if (t.from != q) return std::nullopt;
    return std::make_pair(t.to, t.update);
  }

  std::string state_name(State q) const { return v->state_name(q); }
  long long state_key(State q) const { return q; }
};

}  // namespace vasco
