#pragma once

// Generalized unboundedness properties: interval rows over run decompositions,
// the place-unboundedness condition over disjointness sequences, weak
// satisfaction over pseudo-runs, the suffix approximation with its window
// bound, decomposition search, loop pumping, and the inflation of a weakly
// satisfying pseudo-run into a genuine run.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vasco/core.hpp"

namespace vasco {

struct MalformedDecomposition : ModelError {
  using ModelError::ModelError;
};

// Thrown when the decomposition search runs out of budget before an answer.
struct SearchCap : std::runtime_error {
  std::uint64_t evaluations;
  explicit SearchCap(std::uint64_t spent)
      : std::runtime_error("decomposition search exceeded its budget"),
        evaluations(spent) {}
};

// ---------------------------------------------------------------------------
// Intervals and properties

// One of (-inf,inf), [a,inf), (-inf,b], [a,b].
struct Interval {
  std::optional<Int> lower;
  std::optional<Int> upper;

  Interval() = default;
  Interval(std::optional<Int> lo, std::optional<Int> hi)
      : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower && upper && *lower > *upper)
      throw ModelError("interval with crossed endpoints");
  }

  static Interval all() { return Interval(); }
  static Interval at_least(Int a) { return Interval(std::move(a), std::nullopt); }
  static Interval at_most(Int b) { return Interval(std::nullopt, std::move(b)); }
  static Interval between(Int a, Int b) {
    return Interval(std::move(a), std::move(b));
  }

  bool contains(const Int& v) const {
    if (lower && v < *lower) return false;
    if (upper && v > *upper) return false;
    return true;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GupProperty {
  std::vector<std::vector<Interval>> rows;  // K rows of n intervals

  std::size_t length() const { return rows.size(); }
  std::size_t dim() const { return rows.empty() ? 0 : rows[0].size(); }

  void check() const {
    if (rows.empty()) throw ModelError("property needs at least one row");
    for (const auto& row : rows)
      if (row.size() != rows[0].size())
        throw DimensionMismatch("property rows of different arity");
  }

  Int scale() const {
    Int s = 1;
    for (const auto& row : rows)
      for (const Interval& iv : row) {
        if (iv.lower && abs(*iv.lower) > s) s = abs(*iv.lower);
        if (iv.upper && abs(*iv.upper) > s) s = abs(*iv.upper);
      }
    return s;
  }
};

// Nonempty pairwise-disjoint nonempty subsets of the component set (0-based).
struct DisjointnessSequence {
  std::vector<std::vector<int>> sets;

  void check(int n) const {
    if (sets.empty()) throw ModelError("empty disjointness sequence");
    std::set<int> seen;
    for (const auto& x : sets) {
      if (x.empty()) throw ModelError("empty set in disjointness sequence");
      for (int j : x) {
        if (j < 0 || j >= n)
          throw ModelError("component out of range in disjointness sequence");
        if (!seen.insert(j).second)
          throw ModelError("disjointness sequence repeats a component");
      }
    }
  }
};

// Row l (1-based), component j: [1,inf) when j is in X_l; [0,inf) while j has
// not yet appeared; unconstrained once it has.
inline GupProperty encode_pb_sigma(const DisjointnessSequence& sigma, int n) {
  sigma.check(n);
  GupProperty p;
  std::set<int> seen;
  for (const auto& x : sigma.sets) {
    std::vector<Interval> row(static_cast<std::size_t>(n), Interval::all());
    for (int j : x) row[static_cast<std::size_t>(j)] = Interval::at_least(1);
    for (int j = 0; j < n; ++j)
      if (!seen.count(j) && !std::count(x.begin(), x.end(), j))
        row[static_cast<std::size_t>(j)] = Interval::at_least(0);
    seen.insert(x.begin(), x.end());
    p.rows.push_back(std::move(row));
  }
  return p;
}

// Per-component properties whose joint failure characterizes regularity:
// push component i up, then drag it strictly down.
inline std::vector<GupProperty> nonregularity_properties(int n) {
  std::vector<GupProperty> out;
  for (int i = 0; i < n; ++i) {
    GupProperty p;
    std::vector<Interval> up(static_cast<std::size_t>(n),
                             Interval::at_least(0));
    up[static_cast<std::size_t>(i)] = Interval::at_least(1);
    std::vector<Interval> down(static_cast<std::size_t>(n), Interval::all());
    down[static_cast<std::size_t>(i)] = Interval::at_most(-1);
    p.rows.push_back(std::move(up));
    p.rows.push_back(std::move(down));
    out.push_back(std::move(p));
  }
  return out;
}

// Self-covering loops: one all-[0,inf) row whose loop must be nonempty. The
// nonemptiness cannot be said with intervals, so it rides along as a search
// flag.
struct TerminationProperty {
  GupProperty property;
  bool require_nonempty_loops = true;
};

inline TerminationProperty termination_property(int n) {
  if (n < 1) throw PreconditionViolated("dimension must be positive");
  TerminationProperty t;
  t.property.rows.push_back(
      std::vector<Interval>(static_cast<std::size_t>(n), Interval::at_least(0)));
  return t;
}

// ---------------------------------------------------------------------------
// Traces and decompositions

// The configuration sequence of a replayed (pseudo-)run, states flattened to
// comparable keys.
struct Trace {
  std::vector<long long> states;
  std::vector<Vec> values;

  std::size_t size() const { return values.size(); }
  bool genuine() const {
    for (const Vec& x : values)
      for (const Int& v : x)
        if (v < 0) return false;
    return true;
  }
};

inline Trace trace_of(const Replay& r) {
  Trace t;
  for (const PseudoConfiguration& c : r.sequence) {
    t.states.push_back(c.state);
    t.values.push_back(c.values);
  }
  return t;
}

template <typename System>
Trace system_trace(const System& sys, typename System::State q0, const Vec& x0,
                   const std::vector<int>& path) {
  if (x0.size() != sys.dim())
    throw DimensionMismatch("initial values have wrong arity");
  Trace t;
  typename System::State q = q0;
  Vec x = x0;
  t.states.push_back(sys.state_key(q));
  t.values.push_back(x);
  for (std::size_t s = 0; s < path.size(); ++s) {
    auto step = sys.apply(q, path[s]);
    if (!step)
      throw BrokenPath("path step does not apply at the current state", s);
    q = step->first;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += step->second[i];
    t.states.push_back(sys.state_key(q));
    t.values.push_back(x);
  }
  return t;
}

// Positions of the marked configurations x_{first_slot} .. x_{2K} inside a
// trace. Full-span decompositions start at slot 0; approximation contexts at
// slot 2l-2. marks[0] is always position 0 and the last mark the last
// position.
struct Decomposition {
  std::size_t first_slot = 0;
  std::vector<std::size_t> marks;

  std::size_t pos(std::size_t slot) const {
    if (slot < first_slot || slot - first_slot >= marks.size())
      throw MalformedDecomposition("slot outside the decomposition");
    return marks[slot - first_slot];
  }
  std::size_t last_slot() const { return first_slot + marks.size() - 1; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// The suffix approximation context: property rows l..K apply, components in
// incr may go negative for free, components in window must stay within
// [0, bound-1] (or just nonnegative when unbounded) until excused by a
// positive earlier row.
struct ApproxContext {
  GupProperty property;
  std::size_t l = 1;  // 1-based first applicable row
  std::set<int> incr;
  std::set<int> window;
  std::optional<Int> bound;  // nullopt = +infinity

  ApproxContext(GupProperty p, std::size_t row, std::set<int> incr_set,
                std::set<int> window_set, std::optional<Int> b)
      : property(std::move(p)),
        l(row),
        incr(std::move(incr_set)),
        window(std::move(window_set)),
        bound(std::move(b)) {
    property.check();
    if (l < 1 || l > property.length())
      throw PreconditionViolated("row index outside the property");
    if (bound && *bound < 2)
      throw PreconditionViolated("finite window bound must be at least 2");
  }

  bool infinite() const { return !bound.has_value(); }
};

struct GupRunMode {
  GupProperty property;
};
struct GupWeakMode {
  GupProperty property;
};
struct PbSigmaMode {
  DisjointnessSequence sigma;
};
struct ApproxMode {
  ApproxContext ctx;
};

using VerifyMode = std::variant<GupRunMode, GupWeakMode, PbSigmaMode, ApproxMode>;

namespace detail {

inline std::size_t mode_slots(const VerifyMode& mode, int dim) {
  struct Visitor {
    int n;
    std::pair<std::size_t, std::size_t> operator()(const GupRunMode& m) const {
      m.property.check();
      if (m.property.dim() != static_cast<std::size_t>(n))
        throw DimensionMismatch("property arity does not match the trace");
      return {0, 2 * m.property.length()};
    }
    std::pair<std::size_t, std::size_t> operator()(const GupWeakMode& m) const {
      m.property.check();
      if (m.property.dim() != static_cast<std::size_t>(n))
        throw DimensionMismatch("property arity does not match the trace");
      return {0, 2 * m.property.length()};
    }
    std::pair<std::size_t, std::size_t> operator()(const PbSigmaMode& m) const {
      m.sigma.check(n);
      return {0, 2 * m.sigma.sets.size()};
    }
    std::pair<std::size_t, std::size_t> operator()(const ApproxMode& m) const {
      if (m.ctx.property.dim() != static_cast<std::size_t>(n))
        throw DimensionMismatch("property arity does not match the trace");
      return {2 * (m.ctx.l - 1), 2 * m.ctx.property.length()};
    }
  };
  auto [first, last] = std::visit(Visitor{dim}, mode);
  return last - first + 1;
}

inline std::size_t mode_first_slot(const VerifyMode& mode) {
  if (const auto* a = std::get_if<ApproxMode>(&mode))
    return 2 * (a->ctx.l - 1);
  return 0;
}

inline void check_decomposition(const Trace& trace, const Decomposition& dec,
                                const VerifyMode& mode) {
  if (trace.size() == 0) throw MalformedDecomposition("empty trace");
  int n = static_cast<int>(trace.values[0].size());
  if (dec.first_slot != mode_first_slot(mode))
    throw MalformedDecomposition("decomposition starts at the wrong slot");
  if (dec.marks.size() != mode_slots(mode, n))
    throw MalformedDecomposition("decomposition has the wrong mark count");
  if (dec.marks.front() != 0)
    throw MalformedDecomposition("decomposition must start at position 0");
  if (dec.marks.back() != trace.size() - 1)
    throw MalformedDecomposition("decomposition must end at the last position");
  for (std::size_t i = 1; i < dec.marks.size(); ++i)
    if (dec.marks[i] < dec.marks[i - 1])
      throw MalformedDecomposition("decomposition marks must be nondecreasing");
}

inline Int row_diff(const Trace& trace, const Decomposition& dec,
                    std::size_t l, int j) {
  return trace.values[dec.pos(2 * l)][static_cast<std::size_t>(j)] -
         trace.values[dec.pos(2 * l - 1)][static_cast<std::size_t>(j)];
}

inline bool states_match(const Trace& trace, const Decomposition& dec,
                         std::size_t l) {
  return trace.states[dec.pos(2 * l - 1)] == trace.states[dec.pos(2 * l)];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verification

inline bool verify(const Trace& trace, const Decomposition& dec,
                   const VerifyMode& mode) {
  detail::check_decomposition(trace, dec, mode);
  int n = static_cast<int>(trace.values[0].size());

  if (const auto* ps = std::get_if<PbSigmaMode>(&mode)) {
    const auto& sets = ps->sigma.sets;
    std::size_t K = sets.size();
    std::set<int> earlier;
    for (std::size_t l = 1; l <= K; ++l) {
      if (!detail::states_match(trace, dec, l)) return false;
      const auto& x = sets[l - 1];
      for (int j : x)
        if (detail::row_diff(trace, dec, l, j) <= 0) return false;
      for (int j = 0; j < n; ++j)
        if (!std::count(x.begin(), x.end(), j) &&
            detail::row_diff(trace, dec, l, j) < 0 && !earlier.count(j))
          return false;
      earlier.insert(x.begin(), x.end());
    }
    return true;
  }

  if (const auto* ap = std::get_if<ApproxMode>(&mode)) {
    const ApproxContext& ctx = ap->ctx;
    std::size_t K = ctx.property.length();
    for (std::size_t lp = ctx.l; lp <= K; ++lp)
      for (int j = 0; j < n; ++j) {
        Int d = detail::row_diff(trace, dec, lp, j);
        if (!ctx.property.rows[lp - 1][static_cast<std::size_t>(j)].contains(d))
          return false;
        if (d < 0 && !ctx.incr.count(j)) {
          bool excused = false;
          for (std::size_t lpp = ctx.l; lpp < lp && !excused; ++lpp)
            if (detail::row_diff(trace, dec, lpp, j) > 0) excused = true;
          if (!excused) return false;
        }
      }
    // Window condition: at each position, the unexcused watched components
    // stay within the bound. A row excuses a component from its closing even
    // mark onward.
    for (std::size_t p = 0; p < trace.size(); ++p) {
      std::size_t w = ctx.l - 1;
      for (std::size_t m = ctx.l; m <= K; ++m)
        if (dec.pos(2 * m) <= p) w = m;
      for (int j : ctx.window) {
        if (ctx.incr.count(j)) continue;
        bool excused = false;
        for (std::size_t lpp = ctx.l; lpp <= w && !excused; ++lpp)
          if (detail::row_diff(trace, dec, lpp, j) > 0) excused = true;
        if (excused) continue;
        const Int& v = trace.values[p][static_cast<std::size_t>(j)];
        if (v < 0) return false;
        if (ctx.bound && v > *ctx.bound - 1) return false;
      }
    }
    return true;
  }

  const GupProperty& prop = std::holds_alternative<GupRunMode>(mode)
                                ? std::get<GupRunMode>(mode).property
                                : std::get<GupWeakMode>(mode).property;
  bool weak = std::holds_alternative<GupWeakMode>(mode);
  std::size_t K = prop.length();

  if (!weak && !trace.genuine()) return false;

  for (std::size_t l = 1; l <= K; ++l) {
    if (!detail::states_match(trace, dec, l)) return false;
    for (int j = 0; j < n; ++j) {
      Int d = detail::row_diff(trace, dec, l, j);
      if (!prop.rows[l - 1][static_cast<std::size_t>(j)].contains(d))
        return false;
      if (d < 0) {
        bool excused = false;
        for (std::size_t lp = 1; lp < l && !excused; ++lp)
          if (detail::row_diff(trace, dec, lp, j) > 0) excused = true;
        if (!excused) return false;
      }
    }
  }

  if (weak) {
    // Every negative value must come at or after the closing even mark of a
    // row that strictly increased that component.
    for (std::size_t p = 0; p < trace.size(); ++p)
      for (int j = 0; j < n; ++j) {
        if (trace.values[p][static_cast<std::size_t>(j)] >= 0) continue;
        bool licensed = false;
        for (std::size_t l = 1; l <= K && !licensed; ++l)
          if (dec.pos(2 * l) <= p && detail::row_diff(trace, dec, l, j) > 0)
            licensed = true;
        if (!licensed) return false;
      }
  }
  return true;
}

inline bool verify(const Vass& v, const PseudoRun& pr, const Decomposition& dec,
                   const VerifyMode& mode) {
  return verify(trace_of(replay(v, pr.init, pr.path)), dec, mode);
}

// ---------------------------------------------------------------------------
// Decomposition search

struct FindOptions {
  std::uint64_t budget = 10'000'000;
  bool require_nonempty_loops = false;
};

struct FindResult {
  std::optional<Decomposition> dec;
  std::uint64_t evaluations = 0;
};

namespace detail {

struct RowChecker {
  const Trace& trace;
  const VerifyMode& mode;
  int n;

  // Checks row l against already-fixed earlier rows; used to prune partial
  // mark assignments. The final full verify stays authoritative.
  bool row_ok(const Decomposition& dec, std::size_t l) const {
    bool need_states = !std::holds_alternative<ApproxMode>(mode);
    if (need_states && !states_match(trace, dec, l)) return false;

    if (const auto* ps = std::get_if<PbSigmaMode>(&mode)) {
      const auto& sets = ps->sigma.sets;
      const auto& x = sets[l - 1];
      for (int j : x)
        if (row_diff(trace, dec, l, j) <= 0) return false;
      for (int j = 0; j < n; ++j) {
        if (std::count(x.begin(), x.end(), j)) continue;
        if (row_diff(trace, dec, l, j) < 0) {
          bool earlier = false;
          for (std::size_t lp = 1; lp < l && !earlier; ++lp)
            if (std::count(sets[lp - 1].begin(), sets[lp - 1].end(), j))
              earlier = true;
          if (!earlier) return false;
        }
      }
      return true;
    }

    const GupProperty* prop = nullptr;
    std::size_t base = 1;
    std::set<int> const* incr = nullptr;
    if (const auto* gr = std::get_if<GupRunMode>(&mode)) prop = &gr->property;
    if (const auto* gw = std::get_if<GupWeakMode>(&mode)) prop = &gw->property;
    if (const auto* ap = std::get_if<ApproxMode>(&mode)) {
      prop = &ap->ctx.property;
      base = ap->ctx.l;
      incr = &ap->ctx.incr;
    }
    for (int j = 0; j < n; ++j) {
      Int d = row_diff(trace, dec, l, j);
      if (!prop->rows[l - 1][static_cast<std::size_t>(j)].contains(d))
        return false;
      if (d < 0 && !(incr && incr->count(j))) {
        bool excused = false;
        for (std::size_t lp = base; lp < l && !excused; ++lp)
          if (row_diff(trace, dec, lp, j) > 0) excused = true;
        if (!excused) return false;
      }
    }
    return true;
  }
};

}  // namespace detail

// Exhaustive search over nondecreasing mark tuples in lexicographic order;
// the first and last marks are pinned to the trace ends. Throws SearchCap
// when the budget runs out before an answer is reached.
inline FindResult find_decomposition(const Trace& trace, const VerifyMode& mode,
                                     const FindOptions& opts = {}) {
  if (trace.size() == 0) throw MalformedDecomposition("empty trace");
  int n = static_cast<int>(trace.values[0].size());
  std::size_t slots = detail::mode_slots(mode, n);
  std::size_t last = trace.size() - 1;

  Decomposition dec;
  dec.first_slot = detail::mode_first_slot(mode);
  dec.marks.assign(slots, 0);
  dec.marks.back() = last;

  detail::RowChecker checker{trace, mode, n};
  FindResult result;

  // marks[1..slots-2] are free; slot s closes row (first_slot+s)/2 when
  // first_slot+s is even.
  auto spend = [&]() {
    if (++result.evaluations > opts.budget) throw SearchCap(result.evaluations);
  };

  std::function<bool(std::size_t)> fill = [&](std::size_t s) -> bool {
    if (s + 1 >= slots) {
      // All free slots placed; the last row closes at the pinned end mark.
      spend();
      std::size_t global = dec.first_slot + slots - 1;
      if (global % 2 == 0) {
        std::size_t l = global / 2;
        if (opts.require_nonempty_loops &&
            dec.marks[slots - 1] == dec.marks[slots - 2])
          return false;
        if (!checker.row_ok(dec, l)) return false;
      }
      if (!verify(trace, dec, mode)) return false;
      result.dec = dec;
      return true;
    }
    for (std::size_t p = dec.marks[s - 1]; p <= last; ++p) {
      spend();
      dec.marks[s] = p;
      std::size_t global = dec.first_slot + s;
      if (global % 2 == 0 && global > dec.first_slot) {
        std::size_t l = global / 2;
        if (opts.require_nonempty_loops && dec.marks[s] == dec.marks[s - 1])
          continue;
        if (!checker.row_ok(dec, l)) continue;
      }
      if (fill(s + 1)) return true;
    }
    dec.marks[s] = 0;
    return false;
  };

  fill(1);
  return result;
}

inline FindResult find_decomposition(const Vass& v, const PseudoRun& pr,
                                     const VerifyMode& mode,
                                     const FindOptions& opts = {}) {
  return find_decomposition(trace_of(replay(v, pr.init, pr.path)), mode, opts);
}

// ---------------------------------------------------------------------------
// Pumping

struct Pumped {
  std::vector<int> path;
  Decomposition dec;
};

// Replace each loop segment by count copies of itself, the new odd mark at
// the start of the last copy so every row difference is preserved. Pure path
// surgery; counts align with the decomposition's loop rows.
inline Pumped pump_path(const std::vector<int>& path, const Decomposition& dec,
                        const std::vector<std::uint64_t>& counts) {
  if (dec.first_slot % 2 != 0)
    throw MalformedDecomposition("decomposition must start at an even slot");
  if (dec.marks.empty() || dec.marks.size() % 2 == 0)
    throw MalformedDecomposition("decomposition has the wrong mark count");
  std::size_t loops = dec.marks.size() / 2;
  if (counts.size() != loops)
    throw PreconditionViolated("one count per loop row required");
  for (std::uint64_t c : counts)
    if (c < 1) throw PreconditionViolated("counts must be at least 1");
  if (dec.marks.back() != path.size())
    throw MalformedDecomposition("decomposition does not span the path");

  Pumped out;
  out.dec.first_slot = dec.first_slot;
  out.dec.marks.push_back(0);
  std::size_t at = 0;  // position in the original path
  for (std::size_t l = 0; l < loops; ++l) {
    // Connector before the loop.
    std::size_t odd = dec.marks[2 * l + 1];
    std::size_t even = dec.marks[2 * l + 2];
    for (; at < odd; ++at) out.path.push_back(path[at]);
    for (std::uint64_t c = 0; c < counts[l]; ++c) {
      if (c + 1 == counts[l]) out.dec.marks.push_back(out.path.size());
      for (std::size_t s = odd; s < even; ++s) out.path.push_back(path[s]);
    }
    out.dec.marks.push_back(out.path.size());
    at = even;
  }
  return out;
}

// Checked variant: the input must satisfy the unbounded-window approximation
// before pumping.
template <typename System>
Pumped pump(const System& sys, typename System::State q0, const Vec& x0,
            const std::vector<int>& path, const Decomposition& dec,
            const ApproxContext& ctx, const std::vector<std::uint64_t>& counts) {
  if (!ctx.infinite())
    throw PreconditionViolated("pumping requires the unbounded window form");
  Trace before = system_trace(sys, q0, x0, path);
  if (!verify(before, dec, VerifyMode{ApproxMode{ctx}}))
    throw PreconditionViolated("input does not satisfy the approximation");
  return pump_path(path, dec, counts);
}

// ---------------------------------------------------------------------------
// Pseudo-run inflation

inline Int pseudo_run_length_bound(std::size_t configurations, const Int& pic,
                                   std::size_t K) {
  Int L = static_cast<std::int64_t>(configurations);
  Int p = pic < 1 ? Int(1) : pic;
  Int KK = static_cast<std::int64_t>(K);
  Int base = L * p;
  Int power = 1;
  for (std::size_t i = 0; i < K; ++i) power *= base;
  return power * (1 + KK * KK * L * p) + L;
}

struct Inflated {
  std::vector<int> path;
  Decomposition dec;
};

// Turn a weakly satisfying pseudo-run into a genuine run satisfying the same
// property, by repeating loops from the innermost row outward: each row's
// extra copies raise later positions on the components that row strictly
// increases, clearing the deficits its successors left. A final replay
// validates; if clearing fell short the counts double, and exceeding the
// stated length bound means the inflation logic itself is broken.
template <typename System>
Inflated pseudo_to_run(const System& sys, typename System::State q0,
                       const Vec& x0, const std::vector<int>& path,
                       const GupProperty& property, const Decomposition& dec,
                       const Int& pic) {
  property.check();
  Trace input = system_trace(sys, q0, x0, path);
  if (!verify(input, dec, VerifyMode{GupWeakMode{property}}))
    throw PreconditionViolated("input does not weakly satisfy the property");

  std::size_t K = property.length();
  int n = static_cast<int>(sys.dim());
  Int bound = pseudo_run_length_bound(input.size(), pic, K);

  std::vector<Int> diffs(static_cast<std::size_t>(n) * K);
  for (std::size_t l = 1; l <= K; ++l)
    for (int j = 0; j < n; ++j)
      diffs[(l - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          detail::row_diff(input, dec, l, j);
  auto diff = [&](std::size_t l, int j) -> const Int& {
    return diffs[(l - 1) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
  };

  std::vector<std::uint64_t> counts(K, 1);
  auto build = [&]() {
    return pump_path(path, dec, counts);
  };

  for (std::size_t l = K; l >= 1; --l) {
    Pumped cur = build();
    Trace t = system_trace(sys, q0, x0, cur.path);
    std::uint64_t extra = 0;
    for (int j = 0; j < n; ++j) {
      if (diff(l, j) <= 0) continue;
      Int worst = 0;
      for (std::size_t p = cur.dec.pos(2 * l); p < t.size(); ++p)
        if (t.values[p][static_cast<std::size_t>(j)] < worst)
          worst = t.values[p][static_cast<std::size_t>(j)];
      if (worst < 0) {
        Int need = (-worst + diff(l, j) - 1) / diff(l, j);
        if (need > extra) extra = need.convert_to<std::uint64_t>();
      }
    }
    counts[l - 1] += extra;
    if (l == 1) break;
  }

  for (;;) {
    Pumped cur = build();
    Trace t = system_trace(sys, q0, x0, cur.path);
    if (t.genuine() &&
        verify(t, cur.dec, VerifyMode{GupRunMode{property}})) {
      if (Int(static_cast<std::int64_t>(t.size())) > bound)
        throw std::logic_error("inflation exceeded its length bound");
      return Inflated{std::move(cur.path), std::move(cur.dec)};
    }
    if (Int(static_cast<std::int64_t>(t.size())) * 2 > bound)
      throw std::logic_error("inflation exceeded its length bound");
    for (std::size_t l = 0; l < K; ++l) counts[l] *= 2;
  }
}

inline std::pair<Run, Decomposition> pseudo_to_run(const Vass& v,
                                                   const PseudoRun& pr,
                                                   const GupProperty& property,
                                                   const Decomposition& dec) {
  for (const Int& x : pr.init.values)
    if (x < 0)
      throw PreconditionViolated("pseudo-run must start nonnegative");
  VassSystem sys(v);
  Inflated inf = pseudo_to_run(sys, pr.init.state, pr.init.values, pr.path,
                               property, dec, norms(v).pic);
  return {Run(v, Configuration(pr.init.state, pr.init.values), inf.path),
          std::move(inf.dec)};
}

}  // namespace vasco
