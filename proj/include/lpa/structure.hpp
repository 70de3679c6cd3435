#ifndef LPA_STRUCTURE_HPP_
#define LPA_STRUCTURE_HPP_

// Structure results: the bounded-index decision with witnesses,
// the PI and direct-finiteness predicates, graded quotients and the
// matrix-ring decomposition of row-finite graphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "element.hpp"
#include "ideals.hpp"
#include "matrix_units.hpp"

namespace lpa {

  //! A sink, or a cycle without exits.
  struct Target {
    std::optional<Vertex> sink;
    std::optional<Cycle>  cycle;

    [[nodiscard]] Vertex vertex(Graph const& g) const {
      return sink ? *sink : cycle_base(g, *cycle);
    }
    friend auto operator<=>(Target const&, Target const&) = default;
    friend bool operator==(Target const&, Target const&)  = default;
  };

  struct TargetCount {
    Target target;
    Count  count;
  };

  struct UnboundedReason {
    enum class Kind { CycleWithExit, OmegaPathFamily, MultiCycleVertex };
    Kind                  kind;
    std::optional<Cycle>  cycle;   // CycleWithExit
    std::optional<Exit>   exit;    // CycleWithExit
    std::optional<Vertex> vertex;  // OmegaPathFamily, MultiCycleVertex
  };

  struct IndexReport {
    bool                           bounded = true;
    std::uint64_t                  n       = 1;  // when bounded
    std::vector<TargetCount>       per_target;
    std::optional<UnitsRecipe>     witness_recipe;  // when bounded
    std::optional<UnboundedReason> reason;          // when unbounded
  };

  //! Sinks in vertex order, then exitless cycles in canonical order.
  //! Precondition: no cycle has an exit.
  inline std::vector<Target> targets(Graph const& g) {
    std::vector<Target> out;
    for (auto s : sinks(g)) {
      out.push_back(Target{s, std::nullopt});
    }
    for (auto& c : cycles(g)) {
      out.push_back(Target{std::nullopt, std::move(c)});
    }
    return out;
  }

  inline IndexReport bounded_index_report(Graph const& g) {
    IndexReport report;
    auto        ne = no_exit_cycles(g);
    if (!ne.holds) {
      report.bounded = false;
      report.reason  = UnboundedReason{
          UnboundedReason::Kind::CycleWithExit, ne.cycle, ne.exit, std::nullopt};
      return report;
    }
    // Every path into an interior vertex extends injectively to a path into a
    // target, so the maximum over targets is the maximum over all vertices.
    std::optional<std::size_t> best;
    for (auto& t : targets(g)) {
      auto v  = t.vertex(g);
      auto pc = count_paths_ending_at_detailed(g, v);
      report.per_target.push_back({t, pc.count});
      if (pc.count.is_omega()) {
        if (!report.reason) {
          report.reason = UnboundedReason{
              pc.cause == OmegaCause::MultiCycle
                  ? UnboundedReason::Kind::MultiCycleVertex
                  : UnboundedReason::Kind::OmegaPathFamily,
              std::nullopt,
              std::nullopt,
              v};
        }
      } else if (!best
                 || pc.count > report.per_target[*best].count) {
        best = report.per_target.size() - 1;
      }
    }
    if (report.reason) {
      report.bounded = false;
      return report;
    }
    if (!best) {
      report.n = 1;  // no targets: only the empty graph
      return report;
    }
    auto const& top = report.per_target[*best];
    report.n        = top.count.value();
    auto v          = top.target.vertex(g);
    UnitsRecipe recipe;
    recipe.kind  = top.target.sink ? UnitsKind::Acyclic : UnitsKind::NoExitCycle;
    recipe.paths = paths_ending_at(g, v, report.n);
    recipe.cycle = top.target.cycle;
    recipe.n     = report.n;
    report.witness_recipe = std::move(recipe);
    return report;
  }

  inline MatrixUnits build_units(Algebra const& alg, UnitsRecipe const& r) {
    switch (r.kind) {
      case UnitsKind::Acyclic: return matrix_units_acyclic(alg, r.paths);
      case UnitsKind::NoExitCycle:
        return matrix_units_no_exit_cycle(alg, *r.cycle, r.paths);
      case UnitsKind::CycleExit:
        return matrix_units_exit(alg, *r.cycle, *r.exit, r.n);
    }
    throw Error(Errc::Internal, "unknown units kind");
  }

  //! Satisfies a polynomial identity iff the index of nilpotence is bounded.
  inline bool is_PI(Graph const& g) { return bounded_index_report(g).bounded; }

  inline bool is_directly_finite(Graph const& g) {
    return no_exit_cycles(g).holds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graded quotients
  ////////////////////////////////////////////////////////////////////////

  struct QuotientClassification {
    enum class Kind { MatK, MatLaurent, NotDownwardDirected };
    Kind          kind = Kind::NotDownwardDirected;
    std::uint64_t t    = 0;
    friend bool   operator==(QuotientClassification const&,
                           QuotientClassification const&)
        = default;
  };

  inline std::string to_string(QuotientClassification const& c) {
    using Kind = QuotientClassification::Kind;
    switch (c.kind) {
      case Kind::MatK: return "M_" + std::to_string(c.t) + "(K)";
      case Kind::MatLaurent: return "M_" + std::to_string(c.t) + "(K[x,x^-1])";
      case Kind::NotDownwardDirected: return "not downward directed";
    }
    return "?";
  }

  //! Classifies a graph whose index of nilpotence is bounded, read as the
  //! quotient graph of a graded ideal.
  inline QuotientClassification classify_quotient_graph(Graph const& q) {
    using Kind   = QuotientClassification::Kind;
    auto report  = bounded_index_report(q);
    if (!report.bounded) {
      throw Error(Errc::PreconditionUnbounded,
                  "graph does not have bounded index of nilpotence");
    }
    if (q.vertex_count() == 0 || !downward_directed(q, all_vertices(q))) {
      return {Kind::NotDownwardDirected, 0};
    }
    // Downward directed with bounded counts: exactly one sink or exactly one
    // exitless cycle.
    if (report.per_target.size() != 1) {
      throw Error(Errc::Internal,
                  "downward directed graph with "
                      + std::to_string(report.per_target.size()) + " targets");
    }
    auto const& only = report.per_target.front();
    return {only.target.sink ? Kind::MatK : Kind::MatLaurent,
            only.count.value()};
  }

  inline QuotientClassification classify_graded_quotient(
      Graph const& g, AdmissiblePair const& p) {
    if (!bounded_index_report(g).bounded) {
      throw Error(Errc::PreconditionUnbounded,
                  "graph does not have bounded index of nilpotence");
    }
    return classify_quotient_graph(quotient_graph(g, p));
  }

  struct SpectrumEntry {
    AdmissiblePair         pair;
    QuotientClassification classification;
  };

  //! Every admissible pair whose quotient is downward directed, classified.
  inline std::vector<SpectrumEntry>
  graded_spectrum(Graph const& g, std::size_t cap = default_lattice_cap) {
    if (!bounded_index_report(g).bounded) {
      throw Error(Errc::PreconditionUnbounded,
                  "graph does not have bounded index of nilpotence");
    }
    std::vector<SpectrumEntry> out;
    for (auto const& h : all_hereditary_saturated(g, cap)) {
      auto                bh = breaking_vertices(g, h);
      std::vector<Vertex> b(bh.begin(), bh.end());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size());
           ++mask) {
        AdmissiblePair p{h, {}};
        for (std::size_t i = 0; i < b.size(); ++i) {
          if (mask >> i & 1) {
            p.s.insert(b[i]);
          }
        }
        auto c = classify_quotient_graph(quotient_graph(g, p));
        if (c.kind != QuotientClassification::Kind::NotDownwardDirected) {
          out.push_back({std::move(p), c});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  enum class Base { K, Laurent };

  struct Factor {
    std::uint64_t t;
    Base          base;
    friend auto   operator<=>(Factor const&, Factor const&) = default;
    friend bool   operator==(Factor const&, Factor const&)  = default;
  };

  inline std::string to_string(Factor const& f) {
    return "M_" + std::to_string(f.t)
           + (f.base == Base::K ? "(K)" : "(K[x,x^-1])");
  }

  struct Decomposition {
    std::vector<Factor> factors;  // sorted
  };

  inline std::string to_string(Decomposition const& d) {
    if (d.factors.empty()) {
      return "0";
    }
    std::string out;
    for (auto const& f : d.factors) {
      out += (out.empty() ? "" : " + ") + to_string(f);
    }
    return out;
  }

  //! One factor per sink and per exitless cycle, for row-finite graphs of
  //! bounded index.
  inline Decomposition decompose(Graph const& g) {
    if (g.has_omega_bundles()) {
      throw Error(Errc::NotRowFinite, "graph has an infinite emitter");
    }
    auto report = bounded_index_report(g);
    if (!report.bounded) {
      throw Error(Errc::PreconditionUnbounded,
                  "graph does not have bounded index of nilpotence");
    }
    Decomposition d;
    VertexSet     seeds;
    for (auto const& tc : report.per_target) {
      d.factors.push_back(
          {tc.count.value(), tc.target.sink ? Base::K : Base::Laurent});
      if (tc.target.sink) {
        seeds.insert(*tc.target.sink);
      } else {
        for (auto v : cycle_vertices(g, *tc.target.cycle)) {
          seeds.insert(v);
        }
      }
    }
    if (hereditary_saturated_closure(g, seeds) != all_vertices(g)) {
      throw Error(Errc::Internal,
                  "sinks and cycles do not saturate to every vertex");
    }
    std::sort(d.factors.begin(), d.factors.end());
    return d;
  }

  //! sum of t^2 over the factors; all must be over K.
  inline std::uint64_t acyclic_dimension(Decomposition const& d) {
    std::uint64_t total = 0;
    for (auto const& f : d.factors) {
      if (f.base != Base::K) {
        throw Error(Errc::LaurentFactorPresent,
                    "a Laurent factor is infinite dimensional");
      }
      total += f.t * f.t;
    }
    return total;
  }

}  // namespace lpa

#endif  // LPA_STRUCTURE_HPP_
