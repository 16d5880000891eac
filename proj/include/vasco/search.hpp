#pragma once

// Bounded witness search: iterative deepening over the step graph, testing
// each maximal-depth path with a caller-supplied predicate or a decomposition
// search. Pseudo steps follow state adjacency only; genuine steps additionally
// keep every counter nonnegative. Exhaustion (no path of the next length
// exists) is reported separately from cap hits, because only exhaustion
// licenses a definite negative answer.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vasco/properties.hpp"

namespace vasco {

enum class SearchStatus { found, exhausted, capped };

struct SearchOptions {
  std::size_t depth_cap = 9;
  std::uint64_t node_budget = 200'000;
  bool genuine_steps = false;
  bool require_nonempty_loops = false;
  FindOptions find;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::capped;
  std::optional<std::vector<int>> path;
  std::optional<Decomposition> dec;
  std::uint64_t nodes = 0;
  std::size_t depth_reached = 0;  // deepest length at which paths existed
};

// Enumerates paths from (q0, x0) in label order, depth level by depth level;
// test(path, trace) is called once per path, at the pass matching its length.
template <typename System, typename Test>
SearchOutcome search_paths(const System& sys, typename System::State q0,
                           const Vec& x0, const SearchOptions& opts,
                           Test&& test) {
  if (x0.size() != sys.dim())
    throw DimensionMismatch("initial values have wrong arity");
  SearchOutcome out;
  std::vector<int> path;
  std::vector<typename System::State> states{q0};
  Trace trace;
  trace.states.push_back(sys.state_key(q0));
  trace.values.push_back(x0);

  bool capped = false;
  ++out.nodes;
  if (test(path, trace)) {
    out.status = SearchStatus::found;
    out.path = path;
    return out;
  }

  for (std::size_t depth = 1; depth <= opts.depth_cap; ++depth) {
    bool any_at_depth = false;
    std::function<bool(std::size_t)> dfs = [&](std::size_t d) -> bool {
      if (d == depth) {
        any_at_depth = true;
        if (++out.nodes > opts.node_budget) {
          capped = true;
          return true;
        }
        if (test(path, trace)) {
          out.path = path;
          return true;
        }
        return false;
      }
      bool stop = false;
      sys.for_each_successor(
          states.back(), [&](int label, auto to, const Vec& update) {
            if (stop) return;
            Vec next = trace.values.back();
            for (std::size_t i = 0; i < next.size(); ++i) {
              next[i] += update[i];
              if (opts.genuine_steps && next[i] < 0) return;
            }
            if (++out.nodes > opts.node_budget) {
              capped = true;
              stop = true;
              return;
            }
            path.push_back(label);
            states.push_back(to);
            trace.states.push_back(sys.state_key(to));
            trace.values.push_back(std::move(next));
            stop = dfs(d + 1);
            trace.values.pop_back();
            trace.states.pop_back();
            states.pop_back();
            path.pop_back();
          });
      return stop;
    };
    dfs(0);
    if (capped) {
      out.status = SearchStatus::capped;
      return out;
    }
    if (out.path) {
      out.status = SearchStatus::found;
      out.depth_reached = depth;
      return out;
    }
    if (!any_at_depth) {
      out.status = SearchStatus::exhausted;
      return out;
    }
    out.depth_reached = depth;
  }
  out.status = SearchStatus::capped;
  return out;
}

// Searches for a path admitting a decomposition under the given mode. An
// inner decomposition budget hit downgrades a would-be exhaustion to capped,
// since some path went unchecked.
template <typename System>
SearchOutcome search_witness(const System& sys, typename System::State q0,
                             const Vec& x0, const VerifyMode& mode,
                             const SearchOptions& opts = {}) {
  bool find_capped = false;
  std::optional<Decomposition> found;
  FindOptions fo = opts.find;
  fo.require_nonempty_loops = opts.require_nonempty_loops;
  SearchOutcome out = search_paths(
      sys, q0, x0, opts, [&](const std::vector<int>&, const Trace& t) {
        try {
          FindResult r = find_decomposition(t, mode, fo);
          if (r.dec) {
            found = std::move(r.dec);
            return true;
          }
        } catch (const SearchCap&) {
          find_capped = true;
        }
        return false;
      });
  out.dec = std::move(found);
  if (out.status == SearchStatus::exhausted && find_capped)
    out.status = SearchStatus::capped;
  return out;
}

}  // namespace vasco
