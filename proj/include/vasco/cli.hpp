// Command-line driver. One `check` command with a subcommand per decision
// problem, shared flags for model, initial configuration, oracle selection,
// caps, and output format. Component indices on the command line are 1-based.
//
// Exit code 0 means a definite verdict, 2 means the caps were hit before one
// was reached, 1 means the invocation or its input files were bad.

#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vasco/io.hpp"

namespace vasco {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Configuration parse_init_flag(const Vass& v, const std::string& text) {
  std::istringstream in(text);
  std::string state;
  if (!(in >> state)) throw ModelError("empty --init value");
  Vec values;
  std::string tok;
  while (in >> tok) values.push_back(parse_int(tok, 0));
  if (values.size() != static_cast<std::size_t>(v.dim()))
    throw DimensionMismatch("--init needs a state and " +
                            std::to_string(v.dim()) + " values");
  for (const Int& x : values)
    if (x < 0) throw ModelError("--init has a negative value");
  return Configuration(v.state_index(state), std::move(values));
}

inline std::string echo_init(const Vass& v, const Configuration& c) {
  std::string out = v.state_name(c.state);
  for (const Int& x : c.values) out += " " + x.str();
  return out;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <typename System, typename State>
void write_km_file(const std::string& path, const System& sys, State q0,
                   const Vec& x0, const KmOptions& km, std::ostream& err) {
  try {
    KmTree<State> tree = build_km(sys, q0, x0, km);
    std::ofstream f(path);
    if (!f) {
      err << "emit-km: cannot open " << path << "\n";
      return;
    }
    if (ends_with(path, ".json"))
      f << km_to_json(tree, sys).dump(2) << "\n";
    else
      f << km_to_dot(tree, sys);
  } catch (const ResourceCap& e) {
    err << "emit-km: " << e.what() << "\n";
  }
}

inline std::vector<std::pair<std::string, std::string>> bound_rows(
    const Vass& v, const GupProperty& p, int c1, int c) {
  BoundParams bp = bound_params(v, p, c1, c);
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("n", std::to_string(bp.n));
  rows.emplace_back("k", std::to_string(bp.k));
  rows.emplace_back("absmax-transitions", bp.absmax_transitions.str());
  rows.emplace_back("absmax-property", bp.absmax_property.str());
  rows.emplace_back("pic", bp.pic.str());
  rows.emplace_back("mu", bound_mu(bp).str());
  rows.emplace_back("c1", std::to_string(c1));
  rows.emplace_back("c", std::to_string(c));
  if (bp.n <= 4) {
    for (int i = 0; i <= bp.n; ++i) {
      std::string g = rackoff_g(bp, i).str();
      if (g.size() > 1000) g = "about 10^" + std::to_string(g.size() - 1);
      rows.emplace_back("g(" + std::to_string(i) + ")", g);
    }
  } else {
    rows.emplace_back("g", "not materialized for dimension > 4");
  }
  Int exponent = ipow(bp.n, Int(2 * bp.n + 1) * c);
  rows.emplace_back("closed-exponent", exponent.str());
  rows.emplace_back("closed-bound",
                    exponent <= 4096 ? rackoff_closed_bound(bp).str()
                                     : "(2*mu*pic)^(n^((2n+1)c))");
  return rows;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"decision procedures for vector addition systems with states"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "decide a property of a model");
  check->require_subcommand(1);
  check->fallthrough();

  std::string model_path;
  std::string init_text;
  std::string method = "km";
  std::string format = "text";
  std::string emit_km;
  std::string property_path;
  unsigned long long depth_cap = 10'000;
  unsigned long long km_cap = 1'000'000;
  bool show_bounds = false;
  int c1 = 2, c = 3;
  int comp = 0;
  std::vector<int> comps;

  check->add_option("--model", model_path, "model file")->required();
  check->add_option("--init", init_text,
                    "initial configuration, 'state v1 .. vn'");
  check->add_option("--method", method, "oracle: km, search, or both")
      ->check(CLI::IsMember({"km", "search", "both"}));
  check->add_option("--depth-cap", depth_cap, "path-length cap for the search oracle");
  check->add_option("--km-cap", km_cap, "node cap for the tree oracle");
  check->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--emit-km", emit_km,
                    "write the coverability tree (.dot, or .json)");
  check->add_flag("--show-bounds", show_bounds, "include bound values in the report");
  check->add_option("--c1", c1, "recurrence exponent constant")
      ->check(CLI::PositiveNumber);
  check->add_option("--c", c, "closed-form exponent constant")
      ->check(CLI::PositiveNumber);

  CLI::App* p_bounded = check->add_subcommand("bounded", "is the reachability set finite");
  CLI::App* p_place = check->add_subcommand("place", "is component i bounded");
  p_place->add_option("--i", comp, "component, 1-based")->required();
  CLI::App* p_simul = check->add_subcommand("simul", "are the components of X simultaneously unbounded");
  p_simul->add_option("--x", comps, "components, 1-based")->required()->delimiter(',');
  CLI::App* p_term = check->add_subcommand("terminates", "are all runs finite");
  CLI::App* p_rb = check->add_subcommand("rb", "is component i reversal-bounded");
  p_rb->add_option("--i", comp, "component, 1-based")->required();
  CLI::App* p_wrb = check->add_subcommand("weak-rb", "is component i weakly reversal-bounded");
  p_wrb->add_option("--i", comp, "component, 1-based")->required();
  CLI::App* p_reg = check->add_subcommand("regular", "is the reachability language regular");
  CLI::App* p_prompt = check->add_subcommand("prompt", "is the model strongly prompt");
  CLI::App* p_gup = check->add_subcommand("gup", "does a generalized unboundedness property hold");
  p_gup->add_option("--property", property_path, "property file")->required();
  for (CLI::App* sub : {p_bounded, p_place, p_simul, p_term, p_rb, p_wrb,
                        p_reg, p_prompt, p_gup})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("vasco");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string which = check->get_subcommands().at(0)->get_name();

  try {
    ModelFile mf = parse_model(detail::read_file(model_path));
    const Vass& v = mf.model;

    std::optional<Configuration> init = mf.init;
    if (!init_text.empty()) init = detail::parse_init_flag(v, init_text);
    if (!init)
      throw ModelError("no initial configuration: add an init line to the "
                       "model file or pass --init");

    auto check_comp = [&](int i) {
      if (i < 1 || i > v.dim())
        throw ModelError("component " + std::to_string(i) +
                         " out of range, components are 1-based");
      return i - 1;
    };

    AnalysisOptions opts;
    opts.method = method == "km"       ? Method::km
                  : method == "search" ? Method::search
                                       : Method::both;
    opts.search.depth_cap = static_cast<std::size_t>(depth_cap);
    opts.km.node_cap = static_cast<std::size_t>(km_cap);
    opts.c1 = c1;
    opts.c = c;

    std::vector<std::pair<std::string, std::string>> inputs;
    inputs.emplace_back("model", model_path);
    inputs.emplace_back("init", detail::echo_init(v, *init));

    std::optional<GupProperty> property;
    if (which == "gup") {
      property = parse_gup(detail::read_file(property_path));
      inputs.emplace_back("property", property_path);
    }

    std::string problem;
    Verdict verdict;
    const Vass* replay_model = &v;
    auto start = std::chrono::steady_clock::now();
    if (which == "bounded") {
      problem = "bounded";
      verdict = bounded(v, *init, opts);
    } else if (which == "place") {
      problem = "place-bounded";
      inputs.emplace_back("component", std::to_string(comp));
      verdict = place_bounded(v, *init, check_comp(comp), opts);
    } else if (which == "simul") {
      problem = "simultaneously-unbounded";
      std::string echo;
      for (int i : comps) echo += (echo.empty() ? "" : " ") + std::to_string(i);
      inputs.emplace_back("components", echo);
      std::vector<int> zero_based;
      for (int i : comps) zero_based.push_back(check_comp(i));
      verdict = simultaneously_unbounded(v, *init, zero_based, opts);
    } else if (which == "terminates") {
      problem = "terminates";
      verdict = terminates(v, *init, opts);
    } else if (which == "rb") {
      problem = "reversal-bounded";
      inputs.emplace_back("component", std::to_string(comp));
      verdict = reversal_bounded(v, *init, check_comp(comp), opts);
      replay_model = nullptr;  // witness lives on the mode product
    } else if (which == "weak-rb") {
      problem = "weakly-reversal-bounded";
      inputs.emplace_back("component", std::to_string(comp));
      verdict = weakly_reversal_bounded(v, *init, check_comp(comp), opts);
      replay_model = nullptr;
    } else if (which == "regular") {
      problem = "regular";
      verdict = negate(nonregular(v, *init, opts));
      verdict.note = "negation of the nonregularity verdict; " + verdict.note;
    } else if (which == "prompt") {
      problem = "strongly-prompt";
      PromptnessInstance inst(
          v, mf.internal.value_or(std::vector<std::size_t>{}));
      verdict = strongly_prompt(inst, *init, opts);
      replay_model = nullptr;  // witness lives on the two-phase image
    } else {
      problem = "gup";
      verdict = gup_holds(v, *init, *property, opts);
    }
    auto stop = std::chrono::steady_clock::now();
    double wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    if (!emit_km.empty()) {
      if (which == "rb" || which == "weak-rb") {
        RbLift lift = rb_lift(v, *init);
        detail::write_km_file(emit_km, lift.system, lift.init_state,
                              lift.init_values, opts.km, err);
      } else if (which == "prompt") {
        PromptnessInstance inst(
            v, mf.internal.value_or(std::vector<std::size_t>{}));
        PromptnessImage img = promptness_reduction(inst, *init);
        detail::write_km_file(emit_km, VassSystem(img.vass), img.init.state,
                              img.init.values, opts.km, err);
      } else {
        detail::write_km_file(emit_km, VassSystem(v), init->state,
                              init->values, opts.km, err);
      }
    }

    Report rep = make_report(problem, std::move(inputs), verdict, replay_model,
                             wall_ms);
    if (verdict.answer == Answer::unknown) {
      rep.caps.emplace_back("depth-cap", std::to_string(depth_cap));
      rep.caps.emplace_back("node-budget",
                            std::to_string(opts.search.node_budget));
      rep.caps.emplace_back("km-cap", std::to_string(km_cap));
    }
    if (show_bounds) {
      GupProperty for_bounds;
      if (property) {
        for_bounds = *property;
      } else {
        std::size_t n = static_cast<std::size_t>(v.dim());
        for_bounds.rows.assign(
            n, std::vector<Interval>(n, Interval::at_least(0)));
      }
      rep.bounds = detail::bound_rows(v, for_bounds, c1, c);
    }

    if (format == "json")
      out << report_json(rep).dump(2) << "\n";
    else
      out << report_text(rep);
    return verdict.answer == Answer::unknown ? 2 : 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace vasco
