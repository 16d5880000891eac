// Text formats: model files, property files, and analysis reports.
//
// Model files are line based. `dim n` fixes the arity, `state` lines declare
// names, `trans from to d1 .. dn` lines get indices in textual order, `init`
// gives the starting configuration, and `internal` marks transition indices.
// Everything else about the line order is free, `#` starts a comment, and all
// diagnostics carry the offending line number. Property files hold one `row`
// line per property row, with intervals written as (-inf,inf), [a,inf),
// (-inf,b] or [a,b].
//
// Reports render the same content as text and as JSON; omega prints as the
// literal w in DOT output and as the string "omega" in JSON.

#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vasco/analyses.hpp"

namespace vasco {

using Json = nlohmann::ordered_json;

struct ParseError : ModelError {
  int line;
  ParseError(int at, const std::string& msg)
      : ModelError("line " + std::to_string(at) + ": " + msg), line(at) {}
};

namespace detail {

struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<TokenLine> tokenize(const std::string& text) {
  std::vector<TokenLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream words(raw);
    TokenLine line{number, {}};
    std::string tok;
    while (words >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline Int parse_int(const std::string& tok, int line) {
  std::size_t start = (!tok.empty() && tok[0] == '-') ? 1 : 0;
  if (start == tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  for (std::size_t i = start; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError(line, "expected an integer, got '" + tok + "'");
  return Int(tok);
}

inline std::size_t parse_index(const std::string& tok, int line) {
  Int v = parse_int(tok, line);
  if (v < 0) throw ParseError(line, "expected a nonnegative index, got '" + tok + "'");
  if (v > 1'000'000'000) throw ParseError(line, "index out of range: '" + tok + "'");
  return static_cast<std::size_t>(v.convert_to<long long>());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Model files

struct ModelFile {
  Vass model;
  std::optional<Configuration> init;
  std::optional<std::vector<std::size_t>> internal;
};

inline ModelFile parse_model(const std::string& text) {
  auto lines = detail::tokenize(text);

  std::optional<int> dim;
  std::vector<std::string> states;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "dim") {
      if (dim) throw ParseError(line.number, "duplicate dim line");
      if (t.size() != 2) throw ParseError(line.number, "dim needs exactly one value");
      Int d = detail::parse_int(t[1], line.number);
      if (d < 1 || d > 1024) throw ParseError(line.number, "dimension out of range");
      dim = d.convert_to<int>();
    } else if (t[0] == "state") {
      if (t.size() < 2) throw ParseError(line.number, "state needs at least one name");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::count(states.begin(), states.end(), t[i]))
          throw ParseError(line.number, "duplicate state name '" + t[i] + "'");
        states.push_back(t[i]);
      }
    }
  }
  if (!dim) throw ModelError("model file has no dim line");
  if (states.empty()) throw ModelError("model file declares no states");
  std::size_t n = static_cast<std::size_t>(*dim);

  auto state_of = [&](const std::string& name, int at) {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end())
      throw ParseError(at, "unknown state '" + name + "'");
    return static_cast<int>(it - states.begin());
  };

  std::vector<Transition> transitions;
  std::optional<Configuration> init;
  std::vector<std::pair<std::size_t, int>> internal_refs;  // index, line
  bool saw_internal = false;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "dim" || t[0] == "state") continue;
    if (t[0] == "trans") {
      if (t.size() != 3 + n)
        throw ParseError(line.number, "trans needs two states and " +
                                          std::to_string(n) + " update values");
      Transition tr;
      tr.from = state_of(t[1], line.number);
      tr.to = state_of(t[2], line.number);
      for (std::size_t i = 0; i < n; ++i)
        tr.update.push_back(detail::parse_int(t[3 + i], line.number));
      transitions.push_back(std::move(tr));
    } else if (t[0] == "init") {
      if (init) throw ParseError(line.number, "duplicate init line");
      if (t.size() != 2 + n)
        throw ParseError(line.number, "init needs a state and " +
                                          std::to_string(n) + " values");
      int q = state_of(t[1], line.number);
      Vec values;
      for (std::size_t i = 0; i < n; ++i) {
        values.push_back(detail::parse_int(t[2 + i], line.number));
        if (values.back() < 0)
          throw ParseError(line.number, "negative initial value");
      }
      init = Configuration(q, std::move(values));
    } else if (t[0] == "internal") {
      saw_internal = true;
      for (std::size_t i = 1; i < t.size(); ++i)
        internal_refs.emplace_back(detail::parse_index(t[i], line.number),
                                   line.number);
    } else {
      throw ParseError(line.number, "unknown directive '" + t[0] + "'");
    }
  }

  std::optional<std::vector<std::size_t>> internal;
  if (saw_internal) {
    std::vector<std::size_t> idx;
    for (auto [i, at] : internal_refs) {
      if (i >= transitions.size())
        throw ParseError(at, "internal index " + std::to_string(i) +
                                 " has no transition");
      if (std::count(idx.begin(), idx.end(), i))
        throw ParseError(at, "duplicate internal index " + std::to_string(i));
      idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    internal = std::move(idx);
  }

  return ModelFile{Vass(std::move(states), *dim, std::move(transitions)),
                   std::move(init), std::move(internal)};
}

inline std::string format_model(const ModelFile& m) {
  std::ostringstream out;
  const Vass& v = m.model;
  out << "dim " << v.dim() << "\n";
  out << "state";
  for (const std::string& s : v.state_names()) out << " " << s;
  out << "\n";
  if (m.init) {
    out << "init " << v.state_name(m.init->state);
    for (const Int& x : m.init->values) out << " " << x.str();
    out << "\n";
  }
  for (const Transition& t : v.transitions()) {
    out << "trans " << v.state_name(t.from) << " " << v.state_name(t.to);
    for (const Int& d : t.update) out << " " << d.str();
    out << "\n";
  }
  if (m.internal) {
    out << "internal";
    for (std::size_t i : *m.internal) out << " " << i;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Property files

namespace detail {

inline Interval parse_interval(const std::string& tok, int line) {
  if (tok == "(-inf,inf)") return Interval::all();
  auto bad = [&]() -> ParseError {
    return ParseError(line, "bad interval token '" + tok + "'");
  };
  auto comma = tok.find(',');
  if (comma == std::string::npos || tok.size() < 5) throw bad();
  std::string left = tok.substr(0, comma);
  std::string right = tok.substr(comma + 1);
  std::optional<Int> lower, upper;
  if (left == "(-inf") {
    // open below
  } else if (left.size() >= 2 && left[0] == '[') {
    lower = parse_int(left.substr(1), line);
  } else {
    throw bad();
  }
  if (right == "inf)") {
    if (!lower) throw bad();
  } else if (right.size() >= 2 && right.back() == ']') {
    upper = parse_int(right.substr(0, right.size() - 1), line);
  } else {
    throw bad();
  }
  if (lower && upper && *lower > *upper)
    throw ParseError(line, "interval endpoints cross in '" + tok + "'");
  return Interval(std::move(lower), std::move(upper));
}

}  // namespace detail

inline GupProperty parse_gup(const std::string& text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ModelError("property file is empty");
  const auto& head = lines[0];
  if (head.tokens[0] != "gup" || head.tokens.size() != 2)
    throw ParseError(head.number, "property files start with 'gup <n>'");
  Int d = detail::parse_int(head.tokens[1], head.number);
  if (d < 1 || d > 1024) throw ParseError(head.number, "dimension out of range");
  std::size_t n = static_cast<std::size_t>(d.convert_to<int>());

  GupProperty p;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens[0] != "row")
      throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    if (line.tokens.size() != 1 + n)
      throw ParseError(line.number, "row needs " + std::to_string(n) + " intervals");
    std::vector<Interval> row;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
      row.push_back(detail::parse_interval(line.tokens[i], line.number));
    p.rows.push_back(std::move(row));
  }
  if (p.rows.empty()) throw ModelError("property file has no row lines");
  p.check();
  return p;
}

inline std::string format_interval(const Interval& iv) {
  if (iv.lower && iv.upper)
    return "[" + iv.lower->str() + "," + iv.upper->str() + "]";
  if (iv.lower) return "[" + iv.lower->str() + ",inf)";
  if (iv.upper) return "(-inf," + iv.upper->str() + "]";
  return "(-inf,inf)";
}

inline std::string format_gup(const GupProperty& p) {
  p.check();
  std::ostringstream out;
  out << "gup " << p.dim() << "\n";
  for (const auto& row : p.rows) {
    out << "row";
    for (const Interval& iv : row) out << " " << format_interval(iv);
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON helpers

inline Json json_value(const Int& v) { return v.str(); }

inline Json json_value(const ExtNat& v) {
  return v.omega ? Json("omega") : Json(v.value.str());
}

inline Json json_value(const Vec& x) {
  Json a = Json::array();
  for (const Int& v : x) a.push_back(json_value(v));
  return a;
}

inline Json json_value(const ExtVec& x) {
  Json a = Json::array();
  for (const ExtNat& v : x) a.push_back(json_value(v));
  return a;
}

// Machine-readable coverability tree, companion of the DOT export.
template <typename System>
Json km_to_json(const KmTree<typename System::State>& tree,
                const System& sys) {
  Json nodes = Json::array();
  for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
    const auto& node = tree.nodes[idx];
    Json n;
    n["state"] = sys.state_name(node.state);
    n["vector"] = json_value(node.vec);
    n["parent"] = node.parent;
    if (node.parent >= 0) n["label"] = node.label;
    if (!node.batch.empty()) n["batch"] = node.batch;
    if (node.subsumed_by >= 0) n["subsumed_by"] = node.subsumed_by;
    nodes.push_back(std::move(n));
  }
  Json out;
  out["nodes"] = std::move(nodes);
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct ReportConfig {
  std::string state;
  Vec values;
};

struct Report {
  std::string problem;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed in order
  std::string verdict;
  std::string method;
  std::string note;
  std::optional<std::vector<int>> witness_path;
  std::optional<std::vector<ReportConfig>> witness_configs;
  std::optional<std::vector<int>> branch;
  std::vector<std::pair<std::string, std::string>> caps;    // when unknown
  std::vector<std::pair<std::string, std::string>> bounds;  // when requested
  double wall_ms = 0.0;
};

// The witness run replayed into an explicit configuration sequence.
inline std::vector<ReportConfig> replay_configs(const Vass& v, const Run& run) {
  Replay r = replay(v, run.init.pseudo(), run.path);
  std::vector<ReportConfig> out;
  out.reserve(r.sequence.size());
  for (const PseudoConfiguration& c : r.sequence)
    out.push_back(ReportConfig{v.state_name(c.state), c.values});
  return out;
}

inline Report make_report(std::string problem,
                          std::vector<std::pair<std::string, std::string>> inputs,
                          const Verdict& verdict, const Vass* replay_model,
                          double wall_ms) {
  Report rep;
  rep.problem = std::move(problem);
  rep.inputs = std::move(inputs);
  rep.verdict = to_string(verdict.answer);
  rep.method = to_string(verdict.method);
  rep.note = verdict.note;
  if (verdict.witness_run && replay_model) {
    rep.witness_path = verdict.witness_run->path;
    rep.witness_configs = replay_configs(*replay_model, *verdict.witness_run);
  } else if (verdict.witness_run) {
    rep.witness_path = verdict.witness_run->path;
  } else if (verdict.witness_path) {
    rep.witness_path = verdict.witness_path;
  }
  rep.branch = verdict.witness_branch;
  rep.wall_ms = wall_ms;
  return rep;
}

inline Json report_json(const Report& rep) {
  Json j;
  j["problem"] = rep.problem;
  Json inputs;
  for (const auto& [k, v] : rep.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  j["verdict"] = rep.verdict;
  j["method"] = rep.method;
  j["note"] = rep.note;
  if (rep.witness_path) {
    Json w;
    w["path"] = *rep.witness_path;
    if (rep.witness_configs) {
      Json cs = Json::array();
      for (const ReportConfig& c : *rep.witness_configs) {
        Json jc;
        jc["state"] = c.state;
        jc["values"] = json_value(c.values);
        cs.push_back(std::move(jc));
      }
      w["configurations"] = std::move(cs);
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["branch"] = rep.branch ? Json(*rep.branch) : Json(nullptr);
  if (!rep.caps.empty()) {
    Json caps;
    for (const auto& [k, v] : rep.caps) caps[k] = v;
    j["caps"] = std::move(caps);
  } else {
    j["caps"] = nullptr;
  }
  if (!rep.bounds.empty()) {
    Json bounds;
    for (const auto& [k, v] : rep.bounds) bounds[k] = v;
    j["bounds"] = std::move(bounds);
  } else {
    j["bounds"] = nullptr;
  }
  j["wall_ms"] = rep.wall_ms;
  return j;
}

inline std::string report_text(const Report& rep) {
  std::ostringstream out;
  out << "problem: " << rep.problem << "\n";
  for (const auto& [k, v] : rep.inputs) out << k << ": " << v << "\n";
  out << "verdict: " << rep.verdict << "\n";
  out << "method: " << rep.method << "\n";
  out << "note: " << rep.note << "\n";
  if (rep.witness_path) {
    out << "witness path:";
    for (int s : *rep.witness_path) out << " " << s;
    out << "\n";
    if (rep.witness_configs) {
      out << "witness configurations:\n";
      for (const ReportConfig& c : *rep.witness_configs) {
        out << "  " << c.state << " (";
        for (std::size_t i = 0; i < c.values.size(); ++i) {
          if (i) out << ",";
          out << c.values[i].str();
        }
        out << ")\n";
      }
    }
  }
  if (rep.branch) {
    out << "branch:";
    for (int s : *rep.branch) out << " " << s;
    out << "\n";
  }
  for (const auto& [k, v] : rep.caps) out << "cap " << k << ": " << v << "\n";
  for (const auto& [k, v] : rep.bounds) out << "bound " << k << ": " << v << "\n";
  out << "wall-ms: " << rep.wall_ms << "\n";
  return out.str();
}

// Timing varies between runs; everything else must not.
inline Json canonical_json(Json j) {
  j.erase("wall_ms");
  return j;
}

inline std::string canonical_text(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("wall-ms:", 0) != 0) out << line << "\n";
  return out.str();
}

}  // namespace vasco
