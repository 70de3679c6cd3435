#ifndef LPA_CLI_HPP_
#define LPA_CLI_HPP_

// Command dispatch for the `lpa` tool. Kept in the library so tests can run
// commands in-process; tools/lpa.cpp only forwards argv.
//
// Exit codes: 0 success (including Unbounded and similar verdicts), 1 input
// error, 2 resource-limit abort.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "element.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "ideals.hpp"
#include "io.hpp"
#include "matrix_units.hpp"
#include "oracle.hpp"
#include "structure.hpp"

namespace lpa::cli {

  using Json = nlohmann::ordered_json;

  struct Options {
    std::string   command;
    std::string   graph_file;
    std::string   expr;
    std::string   format       = "text";
    std::uint64_t seed         = 1;
    std::size_t   trials       = 200;
    std::size_t   cap          = default_lattice_cap;
    std::size_t   nilpotence_max = 16;
    std::size_t   n            = 3;
    std::size_t   term_limit   = default_term_limit;
  };

  namespace detail {
    inline Json count_json(Count c) {
      return c.is_omega() ? Json("omega") : Json(c.value());
    }

    inline Json names(Graph const& g, VertexSet const& s) {
      Json out = Json::array();
      for (auto v : s) {
        out.push_back(g.name(v));
      }
      return out;
    }

    inline Json edge_names(Graph const& g, std::vector<EdgeRef> const& es) {
      Json out = Json::array();
      for (auto const& e : es) {
        out.push_back(g.edge_name(e));
      }
      return out;
    }

    inline Json path_json(Graph const& g, Path const& p) {
      return to_string(g, p);
    }

    inline Json element_json(Element const& a) {
      Json terms = Json::array();
      for (auto const& [m, k] : a.terms()) {
        auto const& g = *a.graph();
        terms.push_back({{"coeff", to_string(k)},
                         {"p", to_string(g, m.p)},
                         {"q", to_string(g, m.q)}});
      }
      return {{"text", to_string(a)}, {"terms", terms}};
    }

    inline Json recipe_json(Graph const& g, UnitsRecipe const& r) {
      Json out{{"kind", std::string(to_string(r.kind))}, {"n", r.n}};
      if (!r.paths.empty()) {
        Json ps = Json::array();
        for (auto const& p : r.paths) {
          ps.push_back(path_json(g, p));
        }
        out["paths"] = ps;
      }
      if (r.cycle) {
        out["cycle"] = edge_names(g, r.cycle->edges);
      }
      if (r.exit) {
        out["exit"] = g.edge_name(*r.exit);
      }
      return out;
    }

    inline Json reason_json(Graph const& g, UnboundedReason const& r) {
      using Kind = UnboundedReason::Kind;
      switch (r.kind) {
        case Kind::CycleWithExit:
          return {{"kind", "cycle_with_exit"},
                  {"cycle", edge_names(g, r.cycle->edges)},
                  {"exit", g.edge_name(r.exit->edge)},
                  {"exit_is_omega", r.exit->omega}};
        case Kind::OmegaPathFamily:
          return {{"kind", "omega_path_family"}, {"vertex", g.name(*r.vertex)}};
        case Kind::MultiCycleVertex:
          return {{"kind", "multi_cycle_vertex"}, {"vertex", g.name(*r.vertex)}};
      }
      return {};
    }

    inline std::string reason_text(Graph const& g, UnboundedReason const& r) {
      using Kind = UnboundedReason::Kind;
      switch (r.kind) {
        case Kind::CycleWithExit:
          return "cycle " + to_string(g, *r.cycle) + " has exit "
                 + g.edge_name(r.exit->edge) + (r.exit->omega ? " (omega)" : "");
        case Kind::OmegaPathFamily:
          return "infinitely many paths end at " + g.name(*r.vertex);
        case Kind::MultiCycleVertex:
          return g.name(*r.vertex) + " lies on more than one cycle";
      }
      return "";
    }

    inline Json target_json(Graph const& g, TargetCount const& tc) {
      if (tc.target.sink) {
        return {{"kind", "sink"},
                {"vertex", g.name(*tc.target.sink)},
                {"count", count_json(tc.count)}};
      }
      return {{"kind", "cycle"},
              {"cycle", edge_names(g, tc.target.cycle->edges)},
              {"base", g.name(cycle_base(g, *tc.target.cycle))},
              {"count", count_json(tc.count)}};
    }

    inline std::string kind_name(VertexClass c) {
      switch (c.kind) {
        case VertexKind::Sink: return "sink";
        case VertexKind::Regular: return "regular";
        case VertexKind::InfiniteEmitter: return "infinite_emitter";
      }
      return "?";
    }

    inline std::string nilpotence_text(NilpotenceResult const& r) {
      switch (r.kind) {
        case NilpotenceResult::Kind::Nilpotent:
          return "nilpotent of index " + std::to_string(r.k);
        case NilpotenceResult::Kind::NotNilpotentWithin:
          return "not nilpotent within " + std::to_string(r.k);
        case NilpotenceResult::Kind::ResourceLimit:
          return "term limit exceeded at power " + std::to_string(r.k);
      }
      return "";
    }

    inline Json nilpotence_json(NilpotenceResult const& r) {
      switch (r.kind) {
        case NilpotenceResult::Kind::Nilpotent:
          return {{"kind", "nilpotent"}, {"index", r.k}};
        case NilpotenceResult::Kind::NotNilpotentWithin:
          return {{"kind", "not_nilpotent_within"}, {"bound", r.k}};
        case NilpotenceResult::Kind::ResourceLimit:
          return {{"kind", "resource_limit"}, {"power", r.k}};
      }
      return {};
    }

    struct Output {
      Json        json;
      std::string text;
      int         code = 0;
    };

    inline void line(Output& o, std::string const& s) { o.text += s + "\n"; }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    inline Output analyze(Graph const& g) {
      Output o;
      o.json["command"]  = "analyze";
      o.json["vertices"] = g.vertex_count();
      o.json["bundles"]  = g.bundle_count();
      Json classes       = Json::object();
      for (auto v : g.vertices()) {
        auto c           = vertex_class(g, v);
        Json entry{{"kind", kind_name(c)}};
        if (c.kind == VertexKind::Regular) {
          entry["out_degree"] = c.out_degree;
        }
        classes[g.name(v)] = entry;
      }
      o.json["vertex_classes"] = classes;
      auto sink_list           = sinks(g);
      o.json["sinks"] = names(g, VertexSet(sink_list.begin(), sink_list.end()));
      line(o, "vertices: " + std::to_string(g.vertex_count())
                  + ", bundles: " + std::to_string(g.bundle_count()));
      std::string sink_text;
      for (auto s : sink_list) {
        sink_text += (sink_text.empty() ? "" : " ") + g.name(s);
      }
      line(o, "sinks: " + (sink_text.empty() ? "-" : sink_text));

      try {
        Json cs = Json::array();
        line(o, "cycles:");
        for (auto const& c : cycles(g)) {
          cs.push_back(edge_names(g, c.edges));
          auto ex = exits(g, c);
          line(o, "  " + to_string(g, c) + (ex.empty() ? "  (no exit)" : ""));
        }
        o.json["cycles"]      = cs;
        o.json["condition_L"] = condition_L(g);
        o.json["condition_K"] = condition_K(g);
      } catch (Error const& e) {
        if (e.code() != Errc::CycleThroughOmegaBundle) {
          throw;
        }
        o.json["cycles"]      = nullptr;
        o.json["condition_L"] = nullptr;
        o.json["condition_K"] = nullptr;
        line(o, "  (infinitely many: an omega bundle lies on a closed walk)");
      }
      auto ne = no_exit_cycles(g);
      o.json["no_exit_cycles"] = ne.holds;
      o.json["no_exit_witness"]
          = ne.holds ? Json(nullptr)
                     : Json{{"cycle", edge_names(g, ne.cycle->edges)},
                            {"exit", g.edge_name(ne.exit->edge)},
                            {"exit_is_omega", ne.exit->omega}};
      o.json["downward_directed"] = downward_directed(g, all_vertices(g));
      o.json["directly_finite"]   = ne.holds;

      auto yn = [](Json const& j) {
        return j.is_null() ? std::string("undefined")
                           : std::string(j.get<bool>() ? "yes" : "no");
      };
      line(o, "condition (L): " + yn(o.json["condition_L"]));
      line(o, "condition (K): " + yn(o.json["condition_K"]));
      line(o, "no cycle has an exit: " + yn(o.json["no_exit_cycles"])
                  + (ne.holds ? ""
                              : " (cycle " + to_string(g, *ne.cycle)
                                    + " has exit "
                                    + g.edge_name(ne.exit->edge) + ")"));
      line(o, "downward directed: " + yn(o.json["downward_directed"]));
      line(o, "directly finite: " + yn(o.json["directly_finite"]));
      return o;
    }

    inline Output index(Graph const& g) {
      Output o;
      auto   r         = bounded_index_report(g);
      o.json["command"] = "index";
      Json per         = Json::array();
      for (auto const& tc : r.per_target) {
        per.push_back(target_json(g, tc));
      }
      if (r.bounded) {
        o.json["verdict"]    = "bounded";
        o.json["n"]          = r.n;
        o.json["per_target"] = per;
        o.json["witness"]    = r.witness_recipe
                                   ? recipe_json(g, *r.witness_recipe)
                                   : Json(nullptr);
        line(o, "Bounded n=" + std::to_string(r.n));
      } else {
        o.json["verdict"]    = "unbounded";
        o.json["reason"]     = reason_json(g, *r.reason);
        o.json["per_target"] = per;
        line(o, "Unbounded: " + reason_text(g, *r.reason));
      }
      for (auto const& tc : r.per_target) {
        auto what = tc.target.sink
                        ? "sink " + g.name(*tc.target.sink)
                        : "cycle " + to_string(g, *tc.target.cycle);
        line(o, "  " + what + ": " + tc.count.to_string() + " paths");
      }
      return o;
    }

    inline Output decompose_cmd(Graph const& g) {
      Output o;
      o.json["command"] = "decompose";
      try {
        auto d            = decompose(g);
        Json fs           = Json::array();
        for (auto const& f : d.factors) {
          fs.push_back({{"t", f.t}, {"base", f.base == Base::K ? "K" : "Laurent"}});
        }
        o.json["ok"]      = true;
        o.json["factors"] = fs;
        o.json["text"]    = to_string(d);
        bool all_k = std::all_of(d.factors.begin(), d.factors.end(),
                                 [](Factor const& f) { return f.base == Base::K; });
        o.json["dimension"]
            = all_k ? Json(acyclic_dimension(d)) : Json("infinite");
        line(o, to_string(d));
      } catch (Error const& e) {
        if (e.code() == Errc::NotRowFinite) {
          o.json["ok"]     = false;
          o.json["reason"] = "not_row_finite";
          line(o, "no decomposition: the graph has an infinite emitter");
        } else if (e.code() == Errc::PreconditionUnbounded) {
          o.json["ok"]     = false;
          o.json["reason"] = "unbounded";
          line(o, "no decomposition: unbounded index of nilpotence");
        } else {
          throw;
        }
      }
      return o;
    }

    inline Output ideals(Graph const& g, Options const& opt) {
      Output o;
      o.json["command"] = "ideals";
      if (!bounded_index_report(g).bounded) {
        o.json["verdict"] = "unbounded";
        o.json["entries"] = nullptr;
        line(o, "unbounded index of nilpotence: graded quotients not classified");
        return o;
      }
      o.json["verdict"] = "bounded";
      Json entries      = Json::array();
      for (auto const& e : graded_spectrum(g, opt.cap)) {
        std::string kind
            = e.classification.kind == QuotientClassification::Kind::MatK
                  ? "MatK"
                  : "MatLaurent";
        entries.push_back({{"H", names(g, e.pair.h)},
                           {"S", names(g, e.pair.s)},
                           {"classification",
                            {{"kind", kind}, {"t", e.classification.t}}},
                           {"text", to_string(e.classification)}});
        std::string h;
        for (auto v : e.pair.h) {
          h += (h.empty() ? "" : ", ") + g.name(v);
        }
        std::string s;
        for (auto v : e.pair.s) {
          s += (s.empty() ? "" : ", ") + g.name(v);
        }
        line(o, "H = {" + h + "}, S = {" + s + "}: "
                    + to_string(e.classification));
      }
      o.json["entries"] = entries;
      return o;
    }

    inline Output eval_cmd(Graph const& g, Options const& opt) {
      Output  o;
      Algebra alg(g);
      auto    ast = parse_expr(opt.expr, alg.graph());
      auto    a   = eval_expr(ast, alg);
      o.json["command"]     = "eval";
      o.json["expr"]        = opt.expr;
      o.json["parse"]       = to_sexpr(ast);
      o.json["normal_form"] = element_json(a);
      Json degrees          = Json::object();
      line(o, to_string(a));
      for (auto const& [d, part] : degree_components(a)) {
        degrees[std::to_string(d)] = to_string(part);
        line(o, "  degree " + std::to_string(d) + ": " + to_string(part));
      }
      o.json["degrees"] = degrees;
      auto nil          = nilpotence_index(a, opt.nilpotence_max, opt.term_limit);
      o.json["nilpotence"] = nilpotence_json(nil);
      line(o, nilpotence_text(nil));
      if (nil.kind == NilpotenceResult::Kind::ResourceLimit) {
        o.code = 2;
      }
      return o;
    }

    inline Output witness(Graph const& g, Options const& opt) {
      Output o;
      o.json["command"] = "witness";
      Algebra alg(g);
      auto    r = bounded_index_report(g);
      std::optional<UnitsRecipe> recipe;
      if (r.bounded) {
        recipe = r.witness_recipe;
      } else if (r.reason->kind == UnboundedReason::Kind::CycleWithExit) {
        recipe = UnitsRecipe{UnitsKind::CycleExit, {}, r.reason->cycle,
                             r.reason->exit->edge, opt.n};
      } else if (r.reason->kind == UnboundedReason::Kind::OmegaPathFamily) {
        auto v      = *r.reason->vertex;
        auto comps  = strongly_connected_components(g);
        UnitsRecipe rc;
        rc.paths = paths_ending_at(g, v, opt.n);
        rc.n     = rc.paths.size();
        if (comps.on_closed_path(v)) {
          rc.kind  = UnitsKind::NoExitCycle;
          rc.cycle = shortest_cycle_through(g, v);
        }
        recipe = rc;
      }
      o.json["verdict"] = r.bounded ? "bounded" : "unbounded";
      if (!recipe) {
        o.json["units"] = nullptr;
        line(o, "no witness available");
        return o;
      }
      auto units    = build_units(alg, *recipe);
      bool verified = verify_matrix_units(units);
      o.json["units"]    = recipe_json(g, units.provenance);
      o.json["verified"] = verified;
      line(o, std::to_string(units.n) + "x" + std::to_string(units.n) + " "
                  + std::string(to_string(units.provenance.kind))
                  + " matrix units: "
                  + (verified ? "verified" : "FAILED verification"));
      Json entries = Json::array();
      for (std::size_t i = 0; i < units.n; ++i) {
        for (std::size_t j = 0; j < units.n; ++j) {
          entries.push_back(to_string(units(i, j)));
          line(o, "  eps[" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                      + "] = " + to_string(units(i, j)));
        }
      }
      o.json["entries"] = entries;
      if (verified) {
        auto j   = jordan_element(units);
        auto nil = nilpotence_index(j, units.n + 1, opt.term_limit);
        o.json["jordan"]     = to_string(j);
        o.json["nilpotence"] = nilpotence_json(nil);
        line(o, "jordan element: " + nilpotence_text(nil));
      }
      return o;
    }

    inline Output check(Graph const& g, Options const& opt) {
      Output o;
      o.json["command"] = "check";
      // DP path counts against breadth-first enumeration.
      std::uint64_t max_finite = 0;
      std::vector<std::pair<Vertex, Count>> counts;
      for (auto v : g.vertices()) {
        auto c = count_paths_ending_at(g, v);
        counts.emplace_back(v, c);
        if (c.is_finite()) {
          max_finite = std::max(max_finite, c.value());
        }
      }
      Json        mismatches = Json::array();
      std::size_t checked    = 0;
      if (!g.has_omega_bundles()) {
        auto cap = g.vertex_count() * (max_finite + 1);
        for (auto const& [v, c] : counts) {
          if (c.is_omega()) {
            continue;
          }
          ++checked;
          auto found = oracle::enumerate_paths_ending_at(g, v, cap).size();
          if (found != c.value()) {
            mismatches.push_back(
                {{"vertex", g.name(v)}, {"dp", c.value()}, {"enumerated", found}});
          }
        }
      }
      o.json["path_counts"] = {{"checked", checked}, {"mismatches", mismatches}};
      line(o, "path counts: " + std::to_string(checked) + " vertices checked, "
                  + std::to_string(mismatches.size()) + " mismatches");

      auto r = bounded_index_report(g);
      if (r.bounded && !g.has_omega_bundles() && cycles(g).empty()) {
        auto d     = decompose(g);
        auto dim   = acyclic_dimension(d);
        auto cap   = 2 * (g.vertex_count() > 0 ? g.vertex_count() - 1 : 0);
        auto basis = oracle::basis_monomials(g, cap).size();
        o.json["basis"] = {{"monomials", basis},
                           {"dimension", dim},
                           {"agree", basis == dim}};
        line(o, "basis: " + std::to_string(basis) + " monomials, dimension "
                    + std::to_string(dim));
      } else {
        o.json["basis"] = nullptr;
      }

      if (r.bounded) {
        auto cc = oracle::cross_check_index(g, opt.trials, 0, opt.seed);
        Json seeds = Json::array();
        for (auto s : cc.violating_seeds) {
          seeds.push_back(s);
        }
        o.json["cross_check"] = {{"n", cc.n},
                                 {"trials", cc.trials},
                                 {"probe_bound", cc.probe_bound},
                                 {"nilpotent_samples", cc.nilpotent_samples},
                                 {"resource_aborts", cc.resource_aborts},
                                 {"empirical_max", cc.empirical_max},
                                 {"witness_index", cc.witness_index},
                                 {"violating_seeds", seeds},
                                 {"ok", cc.ok()}};
        line(o, "cross-check: n=" + std::to_string(cc.n) + ", "
                    + std::to_string(cc.nilpotent_samples) + "/"
                    + std::to_string(cc.trials)
                    + " samples nilpotent, empirical max "
                    + std::to_string(cc.empirical_max) + ", witness index "
                    + std::to_string(cc.witness_index)
                    + (cc.ok() ? ", ok" : ", FAILED"));
      } else {
        o.json["cross_check"] = nullptr;
        line(o, "cross-check: skipped (unbounded)");
      }
      bool ok = mismatches.empty()
                && (o.json["basis"].is_null() || o.json["basis"]["agree"].get<bool>())
                && (o.json["cross_check"].is_null()
                    || o.json["cross_check"]["ok"].get<bool>());
      o.json["ok"] = ok;
      return o;
    }
  }  // namespace detail

  inline int execute(Options const& opt, std::ostream& out, std::ostream& err) {
    try {
      auto            g = load_graph(opt.graph_file);
      detail::Output  o;
      if (opt.command == "analyze") {
        o = detail::analyze(g);
      } else if (opt.command == "index") {
        o = detail::index(g);
      } else if (opt.command == "decompose") {
        o = detail::decompose_cmd(g);
      } else if (opt.command == "ideals") {
        o = detail::ideals(g, opt);
      } else if (opt.command == "eval") {
        o = detail::eval_cmd(g, opt);
      } else if (opt.command == "witness") {
        o = detail::witness(g, opt);
      } else if (opt.command == "check") {
        o = detail::check(g, opt);
      } else {
        err << "unknown command '" << opt.command << "'\n";
        return 1;
      }
      if (opt.format == "json") {
        out << o.json.dump(2) << "\n";
      } else {
        out << o.text;
      }
      return o.code;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return is_resource_error(e.code()) ? 2 : 1;
    }
  }

  inline int run(int argc, char const* const* argv, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Leavitt path algebra analysis"};
    app.require_subcommand(1);
    Options opt;

    app.fallthrough();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "sampling seed (check)");
    app.add_option("--trials", opt.trials, "sampled elements (check)");
    app.add_option("--cap", opt.cap, "largest vertex count enumerated (ideals)");
    app.add_option("--nilpotence-max", opt.nilpotence_max,
                   "largest power probed (eval)");
    app.add_option("--n", opt.n, "size of cycle-with-exit units (witness)");

    struct Spec {
      char const* name;
      char const* help;
    };
    Spec const specs[] = {
        {"analyze", "conditions (K)/(L), exits, sinks, cycles"},
        {"index", "bounded index of nilpotence"},
        {"decompose", "matrix-ring decomposition (row-finite graphs)"},
        {"ideals", "classify graded quotients by admissible pair"},
        {"eval", "evaluate an element expression"},
        {"witness", "build and verify matrix units and a Jordan witness"},
        {"check", "oracle agreement and sampled index cross-check"},
    };
    for (auto const& s : specs) {
      auto sub = app.add_subcommand(s.name, s.help);
      sub->add_option("graph", opt.graph_file, "graph document")->required();
      sub->callback([&opt, name = std::string(s.name)] { opt.command = name; });
      if (std::string(s.name) == "eval") {
        sub->add_option("expr", opt.expr, "expression")->required();
      }
    }
    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }
    return execute(opt, out, err);
  }

}  // namespace lpa::cli

#endif  // LPA_CLI_HPP_
