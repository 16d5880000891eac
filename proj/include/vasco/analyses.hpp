#pragma once

// Top-level decision procedures. Every analysis runs the coverability tree,
// the bounded witness search, or both, and returns a Verdict whose Yes and No
// answers always carry a justification: a witness run with its decomposition,
// a tree branch, or an exhaustion note. Unknown arises only from explicit
// caps. Bound formulas are reported in notes; they never decide an answer.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vasco/bounds.hpp"
#include "vasco/core.hpp"
#include "vasco/coverability.hpp"
#include "vasco/properties.hpp"
#include "vasco/reductions.hpp"
#include "vasco/search.hpp"

namespace vasco {

enum class Answer { yes, no, unknown };
enum class Method { km, search, both };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    default: return "unknown";
  }
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::km: return "km";
    case Method::search: return "search";
    default: return "both";
  }
}

// Two theoretically complete oracles produced conflicting definite answers:
// an implementation bug, not a property of the input.
struct OracleDisagreement : std::logic_error {
  explicit OracleDisagreement(const std::string& what)
      : std::logic_error(what) {}
};

struct Verdict {
  Answer answer = Answer::unknown;
  Method method = Method::both;
  std::string note;
  std::optional<Run> witness_run;     // genuine run in the queried model
  std::optional<Decomposition> witness_dec;
  std::optional<std::vector<int>> witness_path;    // labels in a derived system
  std::optional<std::vector<int>> witness_branch;  // labels along a tree branch
};

struct AnalysisOptions {
  Method method = Method::both;
  KmOptions km;
  SearchOptions search;
  int c1 = 2;  // recurrence exponent constant, reporting only
  int c = 3;   // closed-form exponent constant, reporting only
};

inline BoundParams bound_params(const Vass& v, const GupProperty& p, int c1,
                                int c) {
  Norms nm = norms(v);
  BoundParams bp;
  bp.n = v.dim();
  bp.k = p.length();
  bp.absmax_transitions = nm.absmax;
  bp.absmax_property = p.scale();
  bp.pic = nm.pic;
  bp.c1 = c1;
  bp.c = c;
  bp.check();
  return bp;
}

// ---------------------------------------------------------------------------
// Disjointness sequence enumeration: every sequence of pairwise disjoint
// nonempty subsets of {0..n-1}, shorter sequences first, then lexicographic
// by the subset bitmasks. Disjointness alone caps the length at n.

namespace detail {

inline void sequences_at(int n, std::size_t length, std::size_t slot,
                         unsigned used, std::vector<unsigned>& masks,
                         std::vector<DisjointnessSequence>& out) {
  if (slot == length) {
    DisjointnessSequence s;
    for (unsigned m : masks) {
      std::vector<int> set;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) set.push_back(i);
      s.sets.push_back(std::move(set));
    }
    out.push_back(std::move(s));
    return;
  }
  unsigned full = (1u << n) - 1;
  for (unsigned m = 1; m <= full; ++m) {
    if (m & used) continue;
    masks.push_back(m);
    sequences_at(n, length, slot + 1, used | m, masks, out);
    masks.pop_back();
  }
}

}  // namespace detail

inline std::vector<DisjointnessSequence> disjointness_sequences(int n) {
  if (n < 1 || n > 16)
    throw PreconditionViolated("sequence enumeration needs 1 <= n <= 16");
  std::vector<DisjointnessSequence> out;
  std::vector<unsigned> masks;
  for (std::size_t length = 1; length <= static_cast<std::size_t>(n); ++length)
    detail::sequences_at(n, length, 0, 0u, masks, out);
  return out;
}

inline std::string to_string(const DisjointnessSequence& s) {
  std::string out;
  for (const auto& set : s.sets) {
    out += '{';
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(set[i]);
    }
    out += '}';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdict plumbing

// Swap yes and no, keeping the justification.
inline Verdict negate(Verdict v) {
  if (v.answer == Answer::yes)
    v.answer = Answer::no;
  else if (v.answer == Answer::no)
    v.answer = Answer::yes;
  return v;
}

// Merge a tree verdict and a search verdict for the same question. Definite
// answers must agree; the merged verdict keeps both justifications.
inline Verdict combine_verdicts(const Verdict& km, const Verdict& search,
                                const std::string& context) {
  bool km_definite = km.answer != Answer::unknown;
  bool search_definite = search.answer != Answer::unknown;
  if (km_definite && search_definite && km.answer != search.answer)
    throw OracleDisagreement(context + ": tree says " +
                             to_string(km.answer) + ", search says " +
                             to_string(search.answer));
  Verdict out;
  out.method = Method::both;
  out.answer = km_definite ? km.answer : search.answer;
  out.note = "tree: " + km.note + " | search: " + search.note;
  out.witness_branch = km.witness_branch;
  out.witness_run = search.witness_run;
  out.witness_dec = search.witness_dec;
  out.witness_path = search.witness_path;
  return out;
}

namespace detail {

inline void check_instance(const Vass& v, const Configuration& init) {
  if (init.values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("initial configuration has wrong arity");
  if (init.state < 0 || init.state >= static_cast<int>(v.num_states()))
    throw UnknownState("initial state out of range");
}

inline std::vector<int> canonical_components(const std::vector<int>& comps,
                                             int n) {
  if (comps.empty()) throw PreconditionViolated("empty component set");
  std::vector<int> out = comps;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.front() < 0 || out.back() >= n)
    throw PreconditionViolated("component out of range");
  return out;
}

template <typename State>
std::vector<int> branch_labels(const KmTree<State>& tree, int idx) {
  std::vector<int> labels;
  for (int a : tree.branch(idx))
    if (tree.nodes[static_cast<std::size_t>(a)].label >= 0)
      labels.push_back(tree.nodes[static_cast<std::size_t>(a)].label);
  return labels;
}

// Search oracle for "some run satisfies the property". A weak pseudo-run
// witness is inflated into a genuine run; exhaustion of the pseudo-run space
// (or of the run space in the genuine fallback) is the only source of a
// definite no. Caps yield unknown, with the completeness threshold quoted
// when bound parameters are available.
template <typename System>
Verdict gup_holds_system(const System& sys, typename System::State q0,
                         const Vec& x0, const GupProperty& p,
                         const AnalysisOptions& opt, const Int& pic,
                         const std::optional<BoundParams>& bp) {
  Verdict out;
  out.method = Method::search;

  SearchOptions weak_opts = opt.search;
  weak_opts.genuine_steps = false;
  weak_opts.require_nonempty_loops = false;
  SearchOutcome weak =
      search_witness(sys, q0, x0, VerifyMode{GupWeakMode{p}}, weak_opts);
  if (weak.status == SearchStatus::found) {
    Inflated run = pseudo_to_run(sys, q0, x0, *weak.path, p, *weak.dec, pic);
    out.answer = Answer::yes;
    out.note = "weak pseudo-run witness of " +
               std::to_string(weak.path->size()) + " steps, inflated to a run of " +
               std::to_string(run.path.size()) + " steps";
    out.witness_path = std::move(run.path);
    out.witness_dec = std::move(run.dec);
    return out;
  }
  if (weak.status == SearchStatus::exhausted) {
    out.answer = Answer::no;
    out.note = "pseudo-run space exhausted at depth " +
               std::to_string(weak.depth_reached);
    return out;
  }

  SearchOptions run_opts = opt.search;
  run_opts.genuine_steps = true;
  run_opts.require_nonempty_loops = false;
  SearchOutcome gen =
      search_witness(sys, q0, x0, VerifyMode{GupRunMode{p}}, run_opts);
  if (gen.status == SearchStatus::found) {
    out.answer = Answer::yes;
    out.note =
        "run witness of " + std::to_string(gen.path->size()) + " steps";
    out.witness_path = *gen.path;
    out.witness_dec = *gen.dec;
    return out;
  }
  if (gen.status == SearchStatus::exhausted) {
    out.answer = Answer::no;
    out.note =
        "run space exhausted at depth " + std::to_string(gen.depth_reached);
    return out;
  }

  out.answer = Answer::unknown;
  out.note = "search capped at depth " + std::to_string(weak.depth_reached) +
             " (" + std::to_string(weak.nodes + gen.nodes) + " nodes)";
  if (bp) {
    out.note += "; a definite no would need exhaustion up to length "
                "(2*mu*pic)^(n^((2n+1)c)) with mu=" + bound_mu(*bp).str() +
                ", pic=" + bound_pic(*bp).str() +
                ", n=" + std::to_string(bp->n) +
                ", c=" + std::to_string(bp->c);
  }
  return out;
}

// Tree oracle for simultaneous unboundedness: some reachable tree label
// carries omega on every requested component at once.
template <typename System>
Verdict sim_unb_km(const System& sys, typename System::State q0, const Vec& x0,
                   const std::vector<int>& comps, const KmOptions& km) {
  Verdict out;
  out.method = Method::km;
  try {
    KmTree<typename System::State> tree = build_km(sys, q0, x0, km);
    if (std::optional<int> node = km_omega_node(tree, comps)) {
      out.answer = Answer::yes;
      out.note = "tree node " + std::to_string(*node) +
                 " carries omega on every requested component";
      out.witness_branch = branch_labels(tree, *node);
    } else {
      out.answer = Answer::no;
      out.note = "no label among " + std::to_string(tree.nodes.size()) +
                 " tree nodes carries omega on all requested components";
    }
  } catch (const ResourceCap&) {
    out.answer = Answer::unknown;
    out.note = "tree construction hit the node cap";
  }
  return out;
}

// Search oracle for simultaneous unboundedness: try every disjointness
// sequence covering the requested components and meeting them in its last
// set. Any witness settles yes; a definite no needs every candidate ruled
// out by exhaustion.
template <typename System>
Verdict sim_unb_search(const System& sys, typename System::State q0,
                       const Vec& x0, int n, const std::vector<int>& comps,
                       const AnalysisOptions& opt, const Int& pic) {
  Verdict out;
  out.method = Method::search;
  if (n > 8) {
    out.answer = Answer::unknown;
    out.note = "dimension too large to enumerate disjointness sequences";
    return out;
  }
  bool capped = false;
  std::size_t tried = 0;
  for (const DisjointnessSequence& sigma : disjointness_sequences(n)) {
    std::set<int> covered;
    for (const auto& set : sigma.sets) covered.insert(set.begin(), set.end());
    bool covers = true;
    for (int i : comps)
      if (!covered.count(i)) {
        covers = false;
        break;
      }
    if (!covers) continue;
    const auto& last = sigma.sets.back();
    bool meets = false;
    for (int i : comps)
      if (std::count(last.begin(), last.end(), i)) {
        meets = true;
        break;
      }
    if (!meets) continue;
    ++tried;
    Verdict g = gup_holds_system(sys, q0, x0, encode_pb_sigma(sigma, n), opt,
                                 pic, std::nullopt);
    if (g.answer == Answer::yes) {
      g.note = "sequence " + to_string(sigma) + ": " + g.note;
      return g;
    }
    if (g.answer == Answer::unknown) capped = true;
  }
  out.answer = capped ? Answer::unknown : Answer::no;
  out.note = capped ? "some candidate sequences capped"
                    : "all " + std::to_string(tried) +
                          " candidate sequences ruled out by exhaustion";
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generalized unboundedness

inline Verdict gup_holds(const Vass& v, const Configuration& init,
                         const GupProperty& p,
                         const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  p.check();
  if (p.dim() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("property arity does not match the model");
  Verdict out =
      detail::gup_holds_system(VassSystem(v), init.state, init.values, p, opt,
                               norms(v).pic,
                               bound_params(v, p, opt.c1, opt.c));
  if (out.answer == Answer::yes && out.witness_path)
    out.witness_run = Run(v, init, *out.witness_path);
  return out;
}

// ---------------------------------------------------------------------------
// Simultaneous unboundedness and boundedness

inline Verdict simultaneously_unbounded(const Vass& v,
                                        const Configuration& init,
                                        const std::vector<int>& components,
                                        const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  std::vector<int> comps = detail::canonical_components(components, v.dim());
  VassSystem sys(v);

  Verdict out;
  if (opt.method == Method::km) {
    out = detail::sim_unb_km(sys, init.state, init.values, comps, opt.km);
  } else if (opt.method == Method::search) {
    out = detail::sim_unb_search(sys, init.state, init.values, v.dim(), comps,
                                 opt, norms(v).pic);
  } else {
    out = combine_verdicts(
        detail::sim_unb_km(sys, init.state, init.values, comps, opt.km),
        detail::sim_unb_search(sys, init.state, init.values, v.dim(), comps,
                               opt, norms(v).pic),
        "simultaneous unboundedness");
  }
  if (out.answer == Answer::yes && out.witness_path && !out.witness_run)
    out.witness_run = Run(v, init, *out.witness_path);
  return out;
}

inline Verdict place_bounded(const Vass& v, const Configuration& init, int i,
                             const AnalysisOptions& opt = {}) {
  Verdict out = negate(simultaneously_unbounded(v, init, {i}, opt));
  out.note = "negation of the component-" + std::to_string(i) +
             " unboundedness verdict; " + out.note;
  return out;
}

inline Verdict bounded(const Vass& v, const Configuration& init,
                       const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  VassSystem sys(v);

  auto km_side = [&]() {
    Verdict out;
    out.method = Method::km;
    try {
      KmTree<int> tree = build_km(sys, init.state, init.values, opt.km);
      for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx)
        for (std::size_t j = 0; j < tree.nodes[idx].vec.size(); ++j)
          if (tree.nodes[idx].vec[j].omega) {
            out.answer = Answer::no;
            out.note = "component " + std::to_string(j) +
                       " reaches omega at tree node " + std::to_string(idx);
            out.witness_branch =
                detail::branch_labels(tree, static_cast<int>(idx));
            return out;
          }
      out.answer = Answer::yes;
      out.note = "no omega among " + std::to_string(tree.nodes.size()) +
                 " tree nodes";
    } catch (const ResourceCap&) {
      out.answer = Answer::unknown;
      out.note = "tree construction hit the node cap";
    }
    return out;
  };

  auto search_side = [&]() {
    Verdict out;
    out.method = Method::search;
    bool capped = false;
    for (int i = 0; i < v.dim(); ++i) {
      Verdict u = detail::sim_unb_search(sys, init.state, init.values, v.dim(),
                                         {i}, opt, norms(v).pic);
      if (u.answer == Answer::yes) {
        u.answer = Answer::no;
        u.note = "component " + std::to_string(i) + " unbounded; " + u.note;
        return u;
      }
      if (u.answer == Answer::unknown) capped = true;
    }
    out.answer = capped ? Answer::unknown : Answer::yes;
    out.note = capped ? "some components capped"
                      : "every component ruled out by exhaustion";
    return out;
  };

  switch (opt.method) {
    case Method::km: return km_side();
    case Method::search: return search_side();
    default: return combine_verdicts(km_side(), search_side(), "boundedness");
  }
}

// ---------------------------------------------------------------------------
// Termination

namespace detail {

inline bool reachable_state_cycle(const Vass& v, int start) {
  std::size_t nq = v.num_states();
  std::vector<std::vector<int>> succ(nq);
  for (const Transition& t : v.transitions())
    succ[static_cast<std::size_t>(t.from)].push_back(t.to);
  // 0 unseen, 1 on stack, 2 done
  std::vector<int> color(nq, 0);
  std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
  color[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    auto& [q, next] = stack.back();
    if (next < succ[static_cast<std::size_t>(q)].size()) {
      int to = succ[static_cast<std::size_t>(q)][next++];
      if (color[static_cast<std::size_t>(to)] == 1) return true;
      if (color[static_cast<std::size_t>(to)] == 0) {
        color[static_cast<std::size_t>(to)] = 1;
        stack.push_back({to, 0});
      }
    } else {
      color[static_cast<std::size_t>(q)] = 2;
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace detail

inline Verdict terminates(const Vass& v, const Configuration& init,
                          const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  VassSystem sys(v);

  bool nonneg = true;
  for (const Transition& t : v.transitions())
    for (const Int& u : t.update)
      if (u < 0) {
        nonneg = false;
        break;
      }
  if (nonneg && detail::reachable_state_cycle(v, init.state)) {
    Verdict out;
    out.answer = Answer::no;
    out.method = opt.method;
    out.note = "no update decreases a component and a state cycle is "
               "reachable, so some run loops forever";
    return out;
  }

  auto km_side = [&]() {
    Verdict out;
    out.method = Method::km;
    try {
      KmTree<int> tree = build_km(sys, init.state, init.values, opt.km);
      for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx)
        if (!tree.nodes[idx].batch.empty()) {
          out.answer = Answer::no;
          out.note = "acceleration at tree node " + std::to_string(idx) +
                     " pumps an unbounded run";
          out.witness_branch =
              detail::branch_labels(tree, static_cast<int>(idx));
          return out;
        }
      if (std::optional<int> leaf = km_omega_free_equal_leaf(tree)) {
        out.answer = Answer::no;
        out.note = "tree node " + std::to_string(*leaf) +
                   " repeats an ancestor configuration exactly";
        out.witness_branch = detail::branch_labels(tree, *leaf);
        return out;
      }
      out.answer = Answer::yes;
      out.note = "every branch of the " + std::to_string(tree.nodes.size()) +
                 "-node tree ends without acceleration or repetition";
    } catch (const ResourceCap&) {
      out.answer = Answer::unknown;
      out.note = "tree construction hit the node cap";
    }
    return out;
  };

  auto search_side = [&]() {
    Verdict out;
    out.method = Method::search;
    TerminationProperty tp = termination_property(v.dim());
    SearchOptions so = opt.search;
    so.genuine_steps = true;
    so.require_nonempty_loops = tp.require_nonempty_loops;
    SearchOutcome o = search_witness(sys, init.state, init.values,
                                     VerifyMode{GupRunMode{tp.property}}, so);
    if (o.status == SearchStatus::found) {
      out.answer = Answer::no;
      out.note = "self-covering run of " + std::to_string(o.path->size()) +
                 " steps; its loop repeats forever";
      out.witness_run = Run(v, init, *o.path);
      out.witness_dec = *o.dec;
    } else if (o.status == SearchStatus::exhausted) {
      out.answer = Answer::yes;
      out.note = "run space exhausted at depth " +
                 std::to_string(o.depth_reached);
    } else {
      out.answer = Answer::unknown;
      out.note = "search capped at depth " + std::to_string(o.depth_reached);
    }
    return out;
  };

  switch (opt.method) {
    case Method::km: return km_side();
    case Method::search: return search_side();
    default: return combine_verdicts(km_side(), search_side(), "termination");
  }
}

// ---------------------------------------------------------------------------
// Reversal-boundedness

inline Verdict reversal_bounded(const Vass& v, const Configuration& init,
                                int i, const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  if (i < 0 || i >= v.dim())
    throw PreconditionViolated("component out of range");
  RbLift lift = rb_lift(v, init);
  int pn = 2 * v.dim();
  std::vector<int> comps{v.dim() + i};
  Int pic = norms(v).pic;

  Verdict u;
  if (opt.method == Method::km) {
    u = detail::sim_unb_km(lift.system, lift.init_state, lift.init_values,
                           comps, opt.km);
  } else if (opt.method == Method::search) {
    u = detail::sim_unb_search(lift.system, lift.init_state, lift.init_values,
                               pn, comps, opt, pic);
  } else {
    u = combine_verdicts(
        detail::sim_unb_km(lift.system, lift.init_state, lift.init_values,
                           comps, opt.km),
        detail::sim_unb_search(lift.system, lift.init_state, lift.init_values,
                               pn, comps, opt, pic),
        "reversal counter unboundedness");
  }
  Verdict out = negate(std::move(u));
  out.note = "negation of reversal-counter unboundedness on the mode "
             "product; " + out.note;
  return out;
}

inline Verdict weakly_reversal_bounded(const Vass& v, const Configuration& init,
                                       int i, const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);
  if (i < 0 || i >= v.dim())
    throw PreconditionViolated("component out of range");
  RbLift lift = rb_lift(v, init);
  int pn = 2 * v.dim();
  int rev = v.dim() + i;
  Int pic = norms(v).pic;

  auto km_side = [&]() {
    Verdict out;
    out.method = Method::km;
    try {
      KmTree<RbState> tree =
          build_km(lift.system, lift.init_state, lift.init_values, opt.km);
      auto witness = km_accel_witness(tree, [&](const auto& history) {
        std::set<int> earlier;
        for (const std::vector<int>& batch : history) {
          if (std::count(batch.begin(), batch.end(), rev) &&
              earlier.count(i))
            return true;
          earlier.insert(batch.begin(), batch.end());
        }
        return false;
      });
      if (witness) {
        out.answer = Answer::no;
        out.note = "component " + std::to_string(i) +
                   " accelerates before the reversal counter does, at tree "
                   "node " + std::to_string(witness->first);
        out.witness_branch = detail::branch_labels(tree, witness->first);
      } else {
        out.answer = Answer::yes;
        out.note = "no acceleration history raises the reversal counter "
                   "after the component itself";
      }
    } catch (const ResourceCap&) {
      out.answer = Answer::unknown;
      out.note = "tree construction hit the node cap";
    }
    return out;
  };

  auto search_side = [&]() {
    Verdict out;
    out.method = Method::search;
    if (pn > 8) {
      out.answer = Answer::unknown;
      out.note = "dimension too large to enumerate disjointness sequences";
      return out;
    }
    bool capped = false;
    std::size_t tried = 0;
    for (const DisjointnessSequence& sigma : disjointness_sequences(pn)) {
      const auto& last = sigma.sets.back();
      if (!std::count(last.begin(), last.end(), rev)) continue;
      bool earlier = false;
      for (std::size_t l = 0; l + 1 < sigma.sets.size() && !earlier; ++l)
        if (std::count(sigma.sets[l].begin(), sigma.sets[l].end(), i))
          earlier = true;
      if (!earlier) continue;
      ++tried;
      Verdict g = detail::gup_holds_system(
          lift.system, lift.init_state, lift.init_values,
          encode_pb_sigma(sigma, pn), opt, pic, std::nullopt);
      if (g.answer == Answer::yes) {
        g.answer = Answer::no;
        g.note = "sequence " + to_string(sigma) +
                 " witnessed on the mode product: " + g.note;
        return g;
      }
      if (g.answer == Answer::unknown) capped = true;
    }
    out.answer = capped ? Answer::unknown : Answer::yes;
    out.note = capped ? "some candidate sequences capped"
                      : "all " + std::to_string(tried) +
                            " candidate sequences ruled out by exhaustion";
    return out;
  };

  switch (opt.method) {
    case Method::km: return km_side();
    case Method::search: return search_side();
    default:
      return combine_verdicts(km_side(), search_side(),
                              "weak reversal-boundedness");
  }
}

// ---------------------------------------------------------------------------
// Nonregularity

inline Verdict nonregular(const Vass& v, const Configuration& init,
                          const AnalysisOptions& opt = {}) {
  detail::check_instance(v, init);

  bool has_negative = false;
  for (const Transition& t : v.transitions())
    for (const Int& u : t.update)
      if (u < 0) {
        has_negative = true;
        break;
      }
  if (!has_negative) {
    Verdict out;
    out.answer = Answer::no;
    out.method = Method::search;
    out.note = "no update ever decreases a component, so no run can take "
               "one strictly down";
    return out;
  }

  std::vector<GupProperty> family = nonregularity_properties(v.dim());
  bool capped = false;
  for (int i = 0; i < v.dim(); ++i) {
    Verdict g = gup_holds(v, init, family[static_cast<std::size_t>(i)], opt);
    if (g.answer == Answer::yes) {
      g.note = "component " + std::to_string(i) +
               " grows strictly, then falls strictly: " + g.note;
      return g;
    }
    if (g.answer == Answer::unknown) capped = true;
  }
  Verdict out;
  out.method = Method::search;
  out.answer = capped ? Answer::unknown : Answer::no;
  out.note = capped ? "some component families capped"
                    : "every component family ruled out by exhaustion";
  return out;
}

// ---------------------------------------------------------------------------
// Strong promptness

inline Verdict strongly_prompt(const PromptnessInstance& p,
                               const Configuration& init,
                               const AnalysisOptions& opt = {}) {
  PromptnessImage img = promptness_reduction(p, init);
  Verdict u = simultaneously_unbounded(
      img.vass, img.init, {static_cast<int>(img.counting_component)}, opt);
  Verdict out = negate(std::move(u));
  out.note = "negation of step-counter unboundedness on the two-phase "
             "image; " + out.note;
  // The witness lives in the image, not the queried model.
  if (out.witness_run) {
    out.witness_path = out.witness_run->path;
    out.witness_run.reset();
  }
  return out;
}

}  // namespace vasco
