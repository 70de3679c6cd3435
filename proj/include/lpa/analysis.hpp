#ifndef LPA_ANALYSIS_HPP_
#define LPA_ANALYSIS_HPP_

// Reachability, strongly connected components, cycles and exits, Conditions
// (K) and (L), and the count of paths ending at a vertex.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "count.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace lpa {

  using VertexSet = std::set<Vertex>;

  inline std::vector<bool> descendants(Graph const& g, Vertex u) {
    g.check_vertex(u);
    std::vector<bool>  seen(g.vertex_count(), false);
    std::deque<Vertex> todo{u};
    seen[u.index] = true;
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto b : g.out_bundles(x)) {
        auto y = g.bundle(b).dst;
        if (!seen[y.index]) {
          seen[y.index] = true;
          todo.push_back(y);
        }
      }
    }
    return seen;
  }

  inline std::vector<bool> ancestors(Graph const& g, Vertex v) {
    g.check_vertex(v);
    std::vector<bool>  seen(g.vertex_count(), false);
    std::deque<Vertex> todo{v};
    seen[v.index] = true;
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto b : g.in_bundles(x)) {
        auto y = g.bundle(b).src;
        if (!seen[y.index]) {
          seen[y.index] = true;
          todo.push_back(y);
        }
      }
    }
    return seen;
  }

  //! u >= v: there is a (possibly trivial) path from u to v.
  inline bool reachable(Graph const& g, Vertex u, Vertex v) {
    g.check_vertex(v);
    return descendants(g, u)[v.index];
  }

  inline bool downward_directed(Graph const& g, VertexSet const& d) {
    std::vector<std::vector<bool>> below;
    below.reserve(d.size());
    for (auto u : d) {
      below.push_back(descendants(g, u));
    }
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        bool common = std::any_of(d.begin(), d.end(), [&](Vertex w) {
          return below[i][w.index] && below[j][w.index];
        });
        if (!common) {
          return false;
        }
      }
    }
    return true;
  }

  inline VertexSet all_vertices(Graph const& g) {
    auto vs = g.vertices();
    return VertexSet(vs.begin(), vs.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Strongly connected components
  ////////////////////////////////////////////////////////////////////////

  struct Components {
    std::vector<std::uint32_t>       of;       // vertex -> component
    std::vector<std::vector<Vertex>> members;  // sorted by vertex index
    std::vector<bool>                cyclic;   // vertex lies on a closed path

    [[nodiscard]] bool on_closed_path(Vertex v) const {
      return cyclic[v.index];
    }
    [[nodiscard]] std::vector<Vertex> const& component(Vertex v) const {
      return members[of[v.index]];
    }
  };

  inline Components strongly_connected_components(Graph const& g) {
    auto const         n = g.vertex_count();
    Components         out;
    std::vector<int>   index(n, -1), low(n, 0);
    std::vector<bool>  on_stack(n, false);
    std::vector<std::uint32_t> stack;
    out.of.assign(n, 0);
    out.cyclic.assign(n, false);
    int counter = 0;

    std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack[v] = true;
      for (auto b : g.out_bundles(Vertex{v})) {
        auto w = g.bundle(b).dst.index;
        if (index[w] < 0) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        std::uint32_t       w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.of[w]   = static_cast<std::uint32_t>(out.members.size());
          comp.push_back(Vertex{w});
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
    };
    for (std::uint32_t v = 0; v < n; ++v) {
      if (index[v] < 0) {
        visit(v);
      }
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      bool loop = false;
      for (auto b : g.out_bundles(Vertex{v})) {
        loop = loop || g.bundle(b).dst.index == v;
      }
      out.cyclic[v] = loop || out.members[out.of[v]].size() > 1;
    }
    return out;
  }

  //! Bundles with both endpoints in the component of v, and their total
  //! multiplicity.
  inline Count internal_multiplicity(Graph const&      g,
                                     Components const& comps,
                                     Vertex            v) {
    Count total = 0;
    for (auto u : comps.component(v)) {
      for (auto b : g.out_bundles(u)) {
        if (comps.of[g.bundle(b).dst.index] == comps.of[v.index]) {
          total += g.bundle(b).mult;
        }
      }
    }
    return total;
  }

  //! True iff the strongly connected component of v is a single cycle.
  inline bool component_is_simple_cycle(Graph const&      g,
                                        Components const& comps,
                                        Vertex            v) {
    return comps.on_closed_path(v)
           && internal_multiplicity(g, comps, v)
                  == Count(comps.component(v).size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cycles
  ////////////////////////////////////////////////////////////////////////

  //! A closed path visiting no vertex twice, rotated so that its least
  //! vertex is the source of the first edge.
  struct Cycle {
    std::vector<EdgeRef> edges;

    friend auto operator<=>(Cycle const&, Cycle const&) = default;
    friend bool operator==(Cycle const&, Cycle const&)  = default;
  };

  //! Sources of the cycle's edges, in cycle order.
  inline std::vector<Vertex> cycle_vertices(Graph const& g, Cycle const& c) {
    std::vector<Vertex> out;
    out.reserve(c.edges.size());
    for (auto const& e : c.edges) {
      out.push_back(g.source(e));
    }
    return out;
  }

  inline Vertex cycle_base(Graph const& g, Cycle const& c) {
    return g.source(c.edges.front());
  }

  //! Validates a closed elementary path and puts it in canonical rotation.
  inline Cycle make_cycle(Graph const& g, std::vector<EdgeRef> edges) {
    if (edges.empty()) {
      throw Error(Errc::NotACycle, "a cycle needs at least one edge");
    }
    auto p = make_path(g, edges);
    if (path_range(g, p) != p.base) {
      throw Error(Errc::NotACycle, "path is not closed");
    }
    std::set<Vertex> seen;
    for (auto const& e : edges) {
      if (!seen.insert(g.source(e)).second) {
        throw Error(Errc::NotACycle,
                    "path passes through " + g.name(g.source(e)) + " twice");
      }
    }
    auto first = std::min_element(
        edges.begin(), edges.end(), [&](EdgeRef const& a, EdgeRef const& b) {
          return g.source(a) < g.source(b);
        });
    std::rotate(edges.begin(), first, edges.end());
    return Cycle{std::move(edges)};
  }

  //! The edges of c, rotated to start at the cycle vertex v.
  inline std::vector<EdgeRef> cycle_edges_from(Graph const& g,
                                               Cycle const& c,
                                               Vertex       v) {
    auto edges = c.edges;
    auto it    = std::find_if(edges.begin(), edges.end(), [&](EdgeRef e) {
      return g.source(e) == v;
    });
    if (it == edges.end()) {
      throw Error(Errc::NotACycle, g.name(v) + " is not on the cycle");
    }
    std::rotate(edges.begin(), it, edges.end());
    return edges;
  }

  //! True iff some rotation of c occurs in p as a run of consecutive edges.
  inline bool contains_cycle(Path const& p, Cycle const& c) {
    auto const len = c.edges.size();
    if (p.length() < len) {
      return false;
    }
    for (std::size_t start = 0; start + len <= p.length(); ++start) {
      for (std::size_t rot = 0; rot < len; ++rot) {
        bool match = true;
        for (std::size_t i = 0; i < len && match; ++i) {
          match = p.edges[start + i] == c.edges[(rot + i) % len];
        }
        if (match) {
          return true;
        }
      }
    }
    return false;
  }

  inline std::string to_string(Graph const& g, Cycle const& c) {
    return to_string(g, Path{cycle_base(g, c), c.edges});
  }

  //! Throws CycleThroughOmegaBundle if some omega bundle lies on a closed
  //! walk.
  inline void check_no_omega_on_closed_walk(Graph const& g) {
    if (!g.has_omega_bundles()) {
      return;
    }
    for (auto const& b : g.bundles()) {
      if (b.mult.is_omega() && reachable(g, b.dst, b.src)) {
        throw Error(Errc::CycleThroughOmegaBundle,
                    "omega bundle '" + b.id + "' lies on a closed walk");
      }
    }
  }

  //! Every elementary cycle once, sorted. Parallel edges give distinct cycles.
  inline std::vector<Cycle> cycles(Graph const& g) {
    check_no_omega_on_closed_walk(g);
    auto const         n = g.vertex_count();
    std::vector<Cycle> out;
    auto const         comps = strongly_connected_components(g);

    std::vector<std::vector<std::vector<EdgeRef>>> between(n);
    std::vector<std::vector<std::uint32_t>>        succ(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      between[u].resize(n);
      for (auto b : g.out_bundles(Vertex{u})) {
        auto w = g.bundle(b).dst.index;
        if (g.bundle(b).mult.is_omega()) {
          continue;  // never on a closed walk, checked above
        }
        if (between[u][w].empty()) {
          succ[u].push_back(w);
        }
        for (std::uint64_t k = 0; k < g.bundle(b).mult.value(); ++k) {
          between[u][w].push_back({b, k});
        }
      }
      std::sort(succ[u].begin(), succ[u].end());
    }

    std::vector<std::uint32_t> walk;
    std::vector<bool>          on_walk(n, false);

    auto expand = [&]() {
      std::vector<EdgeRef> edges(walk.size());
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == walk.size()) {
          out.push_back(Cycle{edges});
          return;
        }
        auto a = walk[i];
        auto b = walk[(i + 1) % walk.size()];
        for (auto const& e : between[a][b]) {
          edges[i] = e;
          fill(i + 1);
        }
      };
      fill(0);
    };

    for (std::uint32_t start = 0; start < n; ++start) {
      std::function<void(std::uint32_t)> dfs = [&](std::uint32_t x) {
        for (auto y : succ[x]) {
          if (y == start) {
            expand();
          } else if (y > start && !on_walk[y]
                     && comps.of[y] == comps.of[start]) {
            on_walk[y] = true;
            walk.push_back(y);
            dfs(y);
            walk.pop_back();
            on_walk[y] = false;
          }
        }
      };
      walk        = {start};
      on_walk[start] = true;
      dfs(start);
      on_walk[start] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! An edge leaving a cycle. For an omega bundle one representative edge is
  //! reported with `omega` set.
  struct Exit {
    EdgeRef edge;
    bool    omega = false;
    friend auto operator<=>(Exit const&, Exit const&) = default;
    friend bool operator==(Exit const&, Exit const&)  = default;
  };

  inline std::vector<Exit> exits(Graph const& g, Cycle const& c) {
    std::vector<Exit> out;
    for (auto const& ce : c.edges) {
      auto u = g.source(ce);
      for (auto b : g.out_bundles(u)) {
        auto m = g.bundle(b).mult;
        if (m.is_omega()) {
          EdgeRef rep{b, ce.bundle == b && ce.index == 0 ? 1u : 0u};
          out.push_back({rep, true});
          continue;
        }
        for (std::uint64_t k = 0; k < m.value(); ++k) {
          EdgeRef e{b, k};
          if (e != ce) {
            out.push_back({e, false});
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline bool is_exit(Graph const& g, Cycle const& c, EdgeRef f) {
    if (!g.is_edge(f)) {
      return false;
    }
    return std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeRef ce) {
      return g.source(ce) == g.source(f) && ce != f;
    });
  }

  struct NoExitResult {
    bool                 holds = true;
    std::optional<Cycle> cycle;
    std::optional<Exit>  exit;
  };

  //! Shortest closed path through v; it is elementary.
  inline Cycle shortest_cycle_through(Graph const& g, Vertex v) {
    std::vector<std::optional<EdgeRef>> via(g.vertex_count());
    std::deque<Vertex>                  todo{v};
    std::vector<bool>                   seen(g.vertex_count(), false);
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto b : g.out_bundles(x)) {
        auto    y = g.bundle(b).dst;
        EdgeRef e{b, 0};
        if (y == v) {
          std::vector<EdgeRef> edges{e};
          for (auto at = x; at != v; at = g.source(*via[at.index])) {
            edges.push_back(*via[at.index]);
          }
          std::reverse(edges.begin(), edges.end());
          return make_cycle(g, std::move(edges));
        }
        if (!seen[y.index]) {
          seen[y.index] = true;
          via[y.index]  = e;
          todo.push_back(y);
        }
      }
    }
    throw Error(Errc::NotACycle, g.name(v) + " lies on no closed path");
  }

  //! No cycle has an exit, decided by: every vertex on a closed path has total
  //! outgoing multiplicity exactly 1.
  inline NoExitResult no_exit_cycles(Graph const& g) {
    auto comps = strongly_connected_components(g);
    for (auto v : g.vertices()) {
      if (!comps.on_closed_path(v) || g.out_multiplicity(v) == Count(1)) {
        continue;
      }
      auto    c    = shortest_cycle_through(g, v);
      EdgeRef mine = cycle_edges_from(g, c, v).front();
      for (auto b : g.out_bundles(v)) {
        auto m = g.bundle(b).mult;
        if (m.is_omega()) {
          EdgeRef rep{b, mine.bundle == b && mine.index == 0 ? 1u : 0u};
          return {false, c, Exit{rep, true}};
        }
        for (std::uint64_t k = 0; k < m.value(); ++k) {
          if (EdgeRef{b, k} != mine) {
            return {false, c, Exit{EdgeRef{b, k}, false}};
          }
        }
      }
    }
    return {};
  }

  //! Condition (L): every cycle has an exit.
  inline bool condition_L(Graph const& g) {
    check_no_omega_on_closed_walk(g);
    // A cycle without exits is an entire strongly connected component whose
    // vertices each emit exactly one edge.
    auto comps = strongly_connected_components(g);
    for (auto const& comp : comps.members) {
      if (!comps.on_closed_path(comp.front())) {
        continue;
      }
      bool exitless = std::all_of(comp.begin(), comp.end(), [&](Vertex u) {
        return g.out_multiplicity(u) == Count(1);
      });
      if (exitless) {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    inline Count cap(Count c, std::uint64_t limit) {
      return c > Count(limit) ? Count(limit) : c;
    }
  }  // namespace detail

  //! Number of closed simple paths based at v (passing v only at the ends),
  //! saturated at `limit`.
  inline Count closed_simple_paths(Graph const&  g,
                                   Vertex        v,
                                   std::uint64_t limit) {
    auto const n = g.vertex_count();
    // R: vertices other than v that reach v without passing through v.
    std::vector<bool>  in_r(n, false);
    std::deque<Vertex> todo;
    for (auto b : g.in_bundles(v)) {
      auto u = g.bundle(b).src;
      if (u != v && !in_r[u.index]) {
        in_r[u.index] = true;
        todo.push_back(u);
      }
    }
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop_front();
      for (auto b : g.in_bundles(x)) {
        auto u = g.bundle(b).src;
        if (u != v && !in_r[u.index]) {
          in_r[u.index] = true;
          todo.push_back(u);
        }
      }
    }
    // walks(x): paths x -> v avoiding v internally; omega if R has a cycle.
    std::vector<int>           state(n, 0);  // 0 new, 1 active, 2 done
    std::vector<Count>         memo(n, Count(0));
    std::function<Count(Vertex)> walks = [&](Vertex x) -> Count {
      if (x == v) {
        return Count(1);
      }
      if (!in_r[x.index]) {
        return Count(0);
      }
      if (state[x.index] == 1) {
        return Count::omega();
      }
      if (state[x.index] == 2) {
        return memo[x.index];
      }
      state[x.index] = 1;
      Count total    = 0;
      for (auto b : g.out_bundles(x)) {
        total = detail::cap(total + g.bundle(b).mult * walks(g.bundle(b).dst),
                            limit);
      }
      state[x.index] = 2;
      return memo[x.index] = total;
    };
    Count total = 0;
    for (auto b : g.out_bundles(v)) {
      total = detail::cap(total + g.bundle(b).mult * walks(g.bundle(b).dst),
                          limit);
    }
    return total;
  }

  //! Condition (K): every vertex on a closed path is the base of at least two
  //! distinct closed simple paths.
  inline bool condition_K(Graph const& g) {
    check_no_omega_on_closed_walk(g);
    auto comps = strongly_connected_components(g);
    for (auto v : g.vertices()) {
      if (comps.on_closed_path(v) && closed_simple_paths(g, v, 2) < Count(2)) {
        return false;
      }
    }
    return true;
  }

  //! Number of elementary cycles through v, saturated at `limit`.
  inline Count cycles_through(Graph const& g, Vertex v, std::uint64_t limit) {
    auto comps = strongly_connected_components(g);
    if (!comps.on_closed_path(v)) {
      return Count(0);
    }
    auto const        comp = comps.of[v.index];
    std::vector<bool> on_walk(g.vertex_count(), false);
    Count             total = 0;
    std::function<void(Vertex, Count)> dfs = [&](Vertex x, Count weight) {
      for (auto b : g.out_bundles(x)) {
        if (total >= Count(limit)) {
          return;
        }
        auto y = g.bundle(b).dst;
        if (comps.of[y.index] != comp) {
          continue;
        }
        auto w = detail::cap(weight * g.bundle(b).mult, limit);
        if (y == v) {
          total = detail::cap(total + w, limit);
        } else if (!on_walk[y.index]) {
          on_walk[y.index] = true;
          dfs(y, w);
          on_walk[y.index] = false;
        }
      }
    };
    on_walk[v.index] = true;
    dfs(v, Count(1));
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths ending at a vertex
  ////////////////////////////////////////////////////////////////////////

  enum class OmegaCause { None, OmegaBundle, CycleReaches, MultiCycle };

  struct PathCount {
    Count      count;
    OmegaCause cause = OmegaCause::None;
  };

  namespace detail {
    // Number of paths ending at u, for u whose ancestors lie on no closed
    // path: N(u) = 1 + sum over bundles b into u of mult(b) N(src(b)).
    struct AcyclicCounter {
      Graph const&                      g;
      std::vector<std::optional<Count>> memo;

      explicit AcyclicCounter(Graph const& graph)
          : g(graph), memo(graph.vertex_count()) {}

      Count operator()(Vertex u) {
        if (memo[u.index]) {
          return *memo[u.index];
        }
        Count total = 1;
        for (auto b : g.in_bundles(u)) {
          total += g.bundle(b).mult * (*this)(g.bundle(b).src);
        }
        memo[u.index] = total;
        return total;
      }
    };
  }  // namespace detail

  //! Distinct paths ending at v, where the entire cycle through v (if v lies
  //! on exactly one cycle) may not occur as a contiguous subpath.
  inline PathCount count_paths_ending_at_detailed(Graph const& g, Vertex v) {
    g.check_vertex(v);
    auto comps = strongly_connected_components(g);
    auto anc   = ancestors(g, v);

    std::vector<Vertex> own;  // v's cycle, if any
    if (comps.on_closed_path(v)) {
      if (!component_is_simple_cycle(g, comps, v)) {
        return {Count::omega(),
                cycles_through(g, v, 2) >= Count(2) ? OmegaCause::MultiCycle
                                                    : OmegaCause::CycleReaches};
      }
      own = comps.component(v);
    }
    auto in_own = [&](Vertex u) {
      return std::binary_search(own.begin(), own.end(), u);
    };
    for (auto u : g.vertices()) {
      if (anc[u.index] && !in_own(u) && comps.on_closed_path(u)) {
        return {Count::omega(), OmegaCause::CycleReaches};
      }
    }

    detail::AcyclicCounter count(g);
    Count                  total = 0;
    if (own.empty()) {
      total = count(v);
    } else {
      for (auto w : own) {
        Count entering = 1;
        for (auto b : g.in_bundles(w)) {
          if (!in_own(g.bundle(b).src)) {
            entering += g.bundle(b).mult * count(g.bundle(b).src);
          }
        }
        total += entering;
      }
    }
    if (total.is_omega()) {
      return {total, OmegaCause::OmegaBundle};
    }
    return {total, OmegaCause::None};
  }

  inline Count count_paths_ending_at(Graph const& g, Vertex v) {
    return count_paths_ending_at_detailed(g, v).count;
  }

  //! Up to `max_paths` of the paths counted by count_paths_ending_at, sorted
  //! by (length, edges). Omega bundles contribute edges with indices below
  //! `max_paths`. Throws ExplosionGuard when a closed path other than v's own
  //! cycle reaches v (the family is then not of this shape).
  inline std::vector<Path> paths_ending_at(Graph const& g,
                                           Vertex       v,
                                           std::size_t  max_paths) {
    g.check_vertex(v);
    auto comps = strongly_connected_components(g);
    auto anc   = ancestors(g, v);

    std::vector<Vertex> own;
    if (comps.on_closed_path(v)) {
      if (!component_is_simple_cycle(g, comps, v)) {
        throw Error(Errc::ExplosionGuard,
                    g.name(v) + " lies on more than one cycle");
      }
      own = comps.component(v);
    }
    auto in_own = [&](Vertex u) {
      return std::binary_search(own.begin(), own.end(), u);
    };
    for (auto u : g.vertices()) {
      if (anc[u.index] && !in_own(u) && comps.on_closed_path(u)) {
        throw Error(Errc::ExplosionGuard,
                    "a cycle through " + g.name(u) + " reaches " + g.name(v));
      }
    }

    auto by_length = [](Path const& a, Path const& b) {
      return a.length() != b.length() ? a.length() < b.length() : a < b;
    };
    auto trim = [&](std::vector<Path>& ps) {
      std::sort(ps.begin(), ps.end(), by_length);
      if (ps.size() > max_paths) {
        ps.resize(max_paths);
      }
    };
    auto edges_of = [&](std::uint32_t b) {
      auto m = g.bundle(b).mult;
      auto k = m.is_omega() ? max_paths : m.value();
      return k;
    };

    std::vector<std::optional<std::vector<Path>>> memo(g.vertex_count());
    // Paths ending at u whose last edge (if any) comes from outside v's cycle.
    std::function<std::vector<Path>(Vertex, bool)> entering
        = [&](Vertex u, bool skip_own) -> std::vector<Path> {
      if (!skip_own && memo[u.index]) {
        return *memo[u.index];
      }
      std::vector<Path> ps{trivial_path(u)};
      for (auto b : g.in_bundles(u)) {
        auto src = g.bundle(b).src;
        if (skip_own && in_own(src)) {
          continue;
        }
        auto prefixes = entering(src, false);
        for (std::uint64_t k = 0; k < edges_of(b); ++k) {
          for (auto const& p : prefixes) {
            auto q = p;
            q.edges.push_back({b, k});
            ps.push_back(std::move(q));
          }
          if (ps.size() > 4 * max_paths + 4) {
            trim(ps);
          }
        }
      }
      trim(ps);
      if (!skip_own) {
        memo[u.index] = ps;
      }
      return ps;
    };

    if (own.empty()) {
      return entering(v, false);
    }
    // Cycle case: enter at w, then follow the cycle from w forward to v.
    auto              c = shortest_cycle_through(g, v);
    std::vector<Path> out;
    for (auto w : own) {
      auto                 from_w = cycle_edges_from(g, c, w);
      std::vector<EdgeRef> segment;
      for (auto const& e : from_w) {
        if (g.source(e) == v) {
          break;
        }
        segment.push_back(e);
      }
      for (auto p : entering(w, true)) {
        p.edges.insert(p.edges.end(), segment.begin(), segment.end());
        if (p.edges.empty()) {
          p.base = v;
        }
        out.push_back(std::move(p));
      }
    }
    trim(out);
    return out;
  }

}  // namespace lpa

#endif  // LPA_ANALYSIS_HPP_
