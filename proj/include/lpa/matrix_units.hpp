#ifndef LPA_MATRIX_UNITS_HPP_
#define LPA_MATRIX_UNITS_HPP_

// Families of matrix units eps_ij inside L_K(E) built from paths ending at a
// vertex, or from a cycle with an exit, and their exhaustive verification.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "element.hpp"

namespace lpa {

  enum class UnitsKind { Acyclic, CycleExit, NoExitCycle };

  inline std::string_view to_string(UnitsKind k) {
    switch (k) {
      case UnitsKind::Acyclic: return "acyclic";
      case UnitsKind::CycleExit: return "cycle-exit";
      case UnitsKind::NoExitCycle: return "no-exit-cycle";
    }
    return "?";
  }

  //! How a family was (or can be) built.
  struct UnitsRecipe {
    UnitsKind              kind = UnitsKind::Acyclic;
    std::vector<Path>      paths;  // Acyclic, NoExitCycle
    std::optional<Cycle>   cycle;  // CycleExit, NoExitCycle
    std::optional<EdgeRef> exit;   // CycleExit
    std::size_t            n = 0;
  };

  struct MatrixUnits {
    std::size_t          n = 0;
    std::vector<Element> units;  // row-major, 0-based
    UnitsRecipe          provenance;

    [[nodiscard]] Element const& operator()(std::size_t i, std::size_t j) const {
      return units.at(i * n + j);
    }
    Element& operator()(std::size_t i, std::size_t j) {
      return units.at(i * n + j);
    }
  };

  namespace detail {
    inline void check_family(Algebra const& alg, std::vector<Path> const& ps) {
      auto const& g = alg.graph();
      if (ps.empty()) {
        throw Error(Errc::EmptyFamily, "at least one path is required");
      }
      std::set<Path> seen;
      for (auto const& p : ps) {
        make_path(g, p.base, p.edges);
        if (!seen.insert(p).second) {
          throw Error(Errc::DuplicatePath,
                      "path " + to_string(g, p) + " occurs twice");
        }
        if (path_range(g, p) != path_range(g, ps.front())) {
          throw Error(Errc::PathEndpointMismatch,
                      "paths " + to_string(g, ps.front()) + " and "
                          + to_string(g, p) + " end at different vertices");
        }
      }
    }

    inline MatrixUnits from_paths(Algebra const&           alg,
                                  std::vector<Path> const& ps,
                                  UnitsRecipe              recipe) {
      MatrixUnits m;
      m.n = ps.size();
      m.units.reserve(m.n * m.n);
      for (auto const& pi : ps) {
        for (auto const& pj : ps) {
          m.units.push_back(alg.monomial(pi, pj));
        }
      }
      recipe.n     = m.n;
      m.provenance = std::move(recipe);
      return m;
    }
  }  // namespace detail

  //! eps_ij = p_i p_j^* for distinct paths ending at a vertex on no closed
  //! path.
  inline MatrixUnits matrix_units_acyclic(Algebra const&    alg,
                                          std::vector<Path> paths) {
    auto const& g = alg.graph();
    detail::check_family(alg, paths);
    auto v = path_range(g, paths.front());
    if (strongly_connected_components(g).on_closed_path(v)) {
      throw Error(Errc::TargetOnClosedPath,
                  g.name(v) + " lies on a closed path");
    }
    UnitsRecipe recipe{UnitsKind::Acyclic, paths, std::nullopt, std::nullopt};
    return detail::from_paths(alg, paths, std::move(recipe));
  }

  //! eps_ij = c^i f f^* (c^*)^j, 1 <= i, j <= n, with c based at s(f).
  inline MatrixUnits matrix_units_exit(Algebra const& alg,
                                       Cycle const&   cycle,
                                       EdgeRef        f,
                                       std::size_t    n) {
    auto const& g = alg.graph();
    auto        c = make_cycle(g, cycle.edges);
    if (!is_exit(g, c, f)) {
      throw Error(Errc::NotAnExit,
                  "edge is not an exit of cycle " + to_string(g, c));
    }
    if (n == 0) {
      throw Error(Errc::EmptyFamily, "n must be at least 1");
    }
    auto    v        = g.source(f);
    Element around   = alg.path(Path{v, cycle_edges_from(g, c, v)});
    Element back     = involution(around);
    Element exit_idp = alg.edge(f) * alg.ghost(f);

    std::vector<Element> up{around}, down{back};
    for (std::size_t i = 1; i < n; ++i) {
      up.push_back(up.back() * around);
      down.push_back(down.back() * back);
    }
    MatrixUnits m;
    m.n = n;
    for (std::size_t i = 0; i < n; ++i) {
      Element left = up[i] * exit_idp;
      for (std::size_t j = 0; j < n; ++j) {
        m.units.push_back(left * down[j]);
      }
    }
    m.provenance = UnitsRecipe{UnitsKind::CycleExit, {}, c, f, n};
    return m;
  }

  //! eps_ij = p_i p_j^* for distinct paths ending on an exitless cycle c,
  //! none running through all of c.
  inline MatrixUnits matrix_units_no_exit_cycle(Algebra const&    alg,
                                                Cycle const&      cycle,
                                                std::vector<Path> paths) {
    auto const& g = alg.graph();
    auto        c = make_cycle(g, cycle.edges);
    if (!exits(g, c).empty()) {
      throw Error(Errc::CycleHasExit,
                  "cycle " + to_string(g, c) + " has an exit");
    }
    detail::check_family(alg, paths);
    auto v  = path_range(g, paths.front());
    auto on = cycle_vertices(g, c);
    if (std::find(on.begin(), on.end(), v) == on.end()) {
      throw Error(Errc::PathEndpointMismatch,
                  "paths end at " + g.name(v) + ", which is not on the cycle");
    }
    for (auto const& p : paths) {
      if (contains_cycle(p, c)) {
        throw Error(Errc::PathContainsCycle,
                    "path " + to_string(g, p) + " runs through the cycle");
      }
    }
    UnitsRecipe recipe{UnitsKind::NoExitCycle, paths, c, std::nullopt};
    return detail::from_paths(alg, paths, std::move(recipe));
  }

  //! Checks eps_ij eps_kl = delta_jk eps_il for all n^4 index tuples, and
  //! that no unit vanishes.
  inline bool verify_matrix_units(MatrixUnits const& m) {
    if (m.n == 0 || m.units.size() != m.n * m.n) {
      return false;
    }
    for (auto const& u : m.units) {
      if (u.is_zero()) {
        return false;
      }
    }
    Element const zero;
    for (std::size_t i = 0; i < m.n; ++i) {
      for (std::size_t j = 0; j < m.n; ++j) {
        for (std::size_t k = 0; k < m.n; ++k) {
          for (std::size_t l = 0; l < m.n; ++l) {
            auto const& expected = j == k ? m(i, l) : zero;
            if (!(m(i, j) * m(k, l) == expected)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  //! sum_{i < n} eps_{i,i+1}; nilpotent of index exactly n.
  inline Element jordan_element(MatrixUnits const& m) {
    if (!verify_matrix_units(m)) {
      throw Error(Errc::UnverifiedUnits, "matrix units do not verify");
    }
    Element out(m.units.front().graph_ptr());
    for (std::size_t i = 0; i + 1 < m.n; ++i) {
      out += m(i, i + 1);
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_MATRIX_UNITS_HPP_
