#pragma once

// Karp-Miller coverability trees with omega-acceleration, generic over any
// system exposing per-state successor enumeration, plus the omega-pattern
// queries the analyses reduce to and a DOT export.

#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vasco/core.hpp"

namespace vasco {

// Thrown when a tree would exceed its node cap.
struct ResourceCap : std::runtime_error {
  std::size_t cap;
  explicit ResourceCap(std::size_t node_cap)
      : std::runtime_error("coverability tree exceeded " +
                           std::to_string(node_cap) + " nodes"),
        cap(node_cap) {}
};

// ---------------------------------------------------------------------------
// Naturals extended with omega.

struct ExtNat {
  bool omega = false;
  Int value = 0;  // ignored (kept zero) when omega

  static ExtNat inf() { return ExtNat{true, 0}; }
  static ExtNat of(Int v) { return ExtNat{false, std::move(v)}; }

  friend bool operator==(const ExtNat&, const ExtNat&) = default;
};

inline bool ext_leq(const ExtNat& a, const ExtNat& b) {
  if (b.omega) return true;
  if (a.omega) return false;
  return a.value <= b.value;
}

using ExtVec = std::vector<ExtNat>;

inline ExtVec ext_of(const Vec& x) {
  ExtVec out;
  out.reserve(x.size());
  for (const Int& v : x) out.push_back(ExtNat::of(v));
  return out;
}

inline bool ext_leq(const ExtVec& a, const ExtVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("extended vectors of different arity");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ext_leq(a[i], b[i])) return false;
  return true;
}

// Omega absorbs any finite addition; false when a non-omega entry would
// drop below zero.
inline bool ext_add(ExtVec& x, const Vec& u) {
  if (x.size() != u.size())
    throw DimensionMismatch("update has wrong arity");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].omega) continue;
    x[i].value += u[i];
    if (x[i].value < 0) return false;
  }
  return true;
}

inline std::string ext_to_string(const ExtNat& v) {
  return v.omega ? "w" : v.value.str();
}

inline std::string ext_to_string(const ExtVec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += ext_to_string(x[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Tree

struct KmOptions {
  std::size_t node_cap = 1'000'000;
};

template <typename State>
struct KmNode {
  State state;
  ExtVec vec;
  int parent = -1;  // -1 for the root
  int label = -1;   // transition label taken from the parent
  std::vector<int> batch;  // components accelerated at this node, sorted
  int subsumed_by = -1;    // same-state ancestor with an equal vector, if any
};

template <typename State>
struct KmTree {
  std::vector<KmNode<State>> nodes;

  std::vector<int> branch(int idx) const {
    std::vector<int> out;
    for (int a = idx; a >= 0; a = nodes[static_cast<std::size_t>(a)].parent)
      out.push_back(a);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Acceleration batches along the branch to idx, root first. The batches
  // are pairwise disjoint and their union is exactly the omega components.
  std::vector<std::vector<int>> accel_history(int idx) const {
    std::vector<std::vector<int>> out;
    for (int a : branch(idx)) {
      const auto& b = nodes[static_cast<std::size_t>(a)].batch;
      if (!b.empty()) out.push_back(b);
    }
    return out;
  }
};

// Classical Karp-Miller with breadth-first exploration, transitions in
// declaration order. A freshly fired vector is accelerated to a fixpoint
// against every strictly dominated same-state ancestor; all components newly
// sent to omega in that step form the node's single batch. A node repeating
// a same-state ancestor's vector exactly becomes a leaf and records that
// ancestor; after the acceleration fixpoint a node cannot strictly dominate
// any ancestor, so equal repeats are the only way branches close besides
// running out of successors.
template <typename System>
KmTree<typename System::State> build_km(const System& sys,
                                        typename System::State q0,
                                        const Vec& x0, KmOptions opts = {}) {
  using State = typename System::State;
  if (x0.size() != sys.dim())
    throw DimensionMismatch("initial values have wrong arity");
  KmTree<State> tree;
  tree.nodes.push_back(KmNode<State>{q0, ext_of(x0)});
  if (opts.node_cap < 1) throw ResourceCap(opts.node_cap);
  std::queue<int> frontier;
  frontier.push(0);

  while (!frontier.empty()) {
    int idx = frontier.front();
    frontier.pop();
    const State from_state = tree.nodes[static_cast<std::size_t>(idx)].state;

    sys.for_each_successor(from_state, [&](int label, State to, const Vec& u) {
      ExtVec y = tree.nodes[static_cast<std::size_t>(idx)].vec;
      if (!ext_add(y, u)) return;
      long long to_key = sys.state_key(to);

      std::vector<int> batch;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a = idx; a >= 0;
             a = tree.nodes[static_cast<std::size_t>(a)].parent) {
          const auto& anc = tree.nodes[static_cast<std::size_t>(a)];
          if (sys.state_key(anc.state) != to_key) continue;
          if (!ext_leq(anc.vec, y) || anc.vec == y) continue;
          for (std::size_t i = 0; i < y.size(); ++i)
            if (!y[i].omega && !anc.vec[i].omega &&
                anc.vec[i].value < y[i].value) {
              y[i] = ExtNat::inf();
              batch.push_back(static_cast<int>(i));
              changed = true;
            }
        }
      }
      std::sort(batch.begin(), batch.end());

      KmNode<State> node{to, std::move(y), idx, label, std::move(batch)};
      for (int a = idx; a >= 0;
           a = tree.nodes[static_cast<std::size_t>(a)].parent) {
        const auto& anc = tree.nodes[static_cast<std::size_t>(a)];
        if (sys.state_key(anc.state) != to_key) continue;
        if (node.vec == anc.vec) {
          node.subsumed_by = a;
          break;
        }
      }

      if (tree.nodes.size() >= opts.node_cap) throw ResourceCap(opts.node_cap);
      tree.nodes.push_back(std::move(node));
      if (tree.nodes.back().subsumed_by < 0)
        frontier.push(static_cast<int>(tree.nodes.size()) - 1);
    });
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Queries

// First node carrying omega on every component of X (0-based), if any.
template <typename State>
std::optional<int> km_omega_node(const KmTree<State>& tree,
                                 const std::vector<int>& components) {
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    bool all = true;
    for (int i : components) {
      if (i < 0 || static_cast<std::size_t>(i) >= tree.nodes[idx].vec.size())
        throw PreconditionViolated("component out of range");
      if (!tree.nodes[idx].vec[static_cast<std::size_t>(i)].omega) {
        all = false;
        break;
      }
    }
    if (all) return static_cast<int>(idx);
  }
  return std::nullopt;
}

// First node whose acceleration history satisfies the predicate. Histories
// along a branch extend each other, so scanning every node also scans every
// prefix.
template <typename State, typename Pred>
std::optional<std::pair<int, std::vector<std::vector<int>>>>
km_accel_witness(const KmTree<State>& tree, Pred&& pred) {
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    auto history = tree.accel_history(static_cast<int>(idx));
    if (pred(history))
      return std::make_pair(static_cast<int>(idx), std::move(history));
  }
  return std::nullopt;
}

template <typename State>
bool km_has_acceleration(const KmTree<State>& tree) {
  for (const auto& node : tree.nodes)
    if (!node.batch.empty()) return true;
  return false;
}

// A leaf equal to one of its ancestors with no omega anywhere: a genuine
// cycle back to an already-seen configuration.
template <typename State>
std::optional<int> km_omega_free_equal_leaf(const KmTree<State>& tree) {
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    const auto& node = tree.nodes[idx];
    if (node.subsumed_by < 0) continue;
    bool clean = true;
    for (const ExtNat& v : node.vec)
      if (v.omega) {
        clean = false;
        break;
      }
    if (clean) return static_cast<int>(idx);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// DOT export. Solid edges are plain steps, dashed ones accelerated; dotted
// gray arrows point from a covered leaf to the ancestor covering it.

template <typename System>
std::string km_to_dot(const KmTree<typename System::State>& tree,
                      const System& sys) {
  std::ostringstream out;
  out << "digraph km {\n";
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    const auto& node = tree.nodes[idx];
    out << "  n" << idx << " [label=\"" << sys.state_name(node.state) << " "
        << ext_to_string(node.vec) << "\"];\n";
    if (node.parent >= 0) {
      out << "  n" << node.parent << " -> n" << idx << " [label=\""
          << node.label << "\"";
      if (!node.batch.empty()) out << ", style=dashed";
      out << "];\n";
    }
    if (node.subsumed_by >= 0)
      out << "  n" << idx << " -> n" << node.subsumed_by
          << " [style=dotted, color=gray];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vasco
