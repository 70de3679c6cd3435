#ifndef LPA_IDEALS_HPP_
#define LPA_IDEALS_HPP_

// Hereditary saturated vertex sets, breaking vertices, admissible pairs and
// quotient graphs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "graph.hpp"

namespace lpa {

  inline bool is_hereditary(Graph const& g, VertexSet const& h) {
    for (auto v : h) {
      for (auto b : g.out_bundles(v)) {
        if (!h.contains(g.bundle(b).dst)) {
          return false;
        }
      }
    }
    return true;
  }

  //! Saturation is only required at regular vertices.
  inline bool is_saturated(Graph const& g, VertexSet const& h) {
    for (auto v : g.vertices()) {
      if (h.contains(v) || !is_regular(g, v)) {
        continue;
      }
      auto outs = g.out_bundles(v);
      if (std::all_of(outs.begin(), outs.end(), [&](std::uint32_t b) {
            return h.contains(g.bundle(b).dst);
          })) {
        return false;
      }
    }
    return true;
  }

  inline bool is_hereditary_saturated(Graph const& g, VertexSet const& h) {
    return is_hereditary(g, h) && is_saturated(g, h);
  }

  inline VertexSet hereditary_saturated_closure(Graph const&     g,
                                                VertexSet const& x) {
    std::vector<bool> in(g.vertex_count(), false);
    for (auto v : x) {
      auto below = descendants(g, v);
      for (std::size_t i = 0; i < below.size(); ++i) {
        in[i] = in[i] || below[i];
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (auto v : g.vertices()) {
        if (in[v.index] || !is_regular(g, v)) {
          continue;
        }
        auto outs = g.out_bundles(v);
        if (std::all_of(outs.begin(), outs.end(), [&](std::uint32_t b) {
              return in[g.bundle(b).dst.index];
            })) {
          in[v.index] = true;
          changed     = true;
        }
      }
    }
    VertexSet out;
    for (auto v : g.vertices()) {
      if (in[v.index]) {
        out.insert(v);
      }
    }
    return out;
  }

  //! Orders vertex sets by size, then lexicographically.
  struct BySizeThenElements {
    bool operator()(VertexSet const& a, VertexSet const& b) const {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  };

  inline constexpr std::size_t default_lattice_cap = 15;

  //! Every hereditary saturated subset, as closures over the subset lattice.
  inline std::vector<VertexSet>
  all_hereditary_saturated(Graph const& g,
                           std::size_t  cap = default_lattice_cap) {
    auto const n = g.vertex_count();
    if (n > cap || n >= 63) {
      throw Error(Errc::CapExceeded,
                  std::to_string(n) + " vertices exceed the lattice cap of "
                      + std::to_string(cap));
    }
    std::set<VertexSet, BySizeThenElements> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet x;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          x.insert(Vertex{i});
        }
      }
      found.insert(hereditary_saturated_closure(g, x));
    }
    return {found.begin(), found.end()};
  }

  //! Infinite emitters outside H emitting finitely many, but some, edges into
  //! the complement of H.
  inline VertexSet breaking_vertices(Graph const& g, VertexSet const& h) {
    if (!is_hereditary_saturated(g, h)) {
      throw Error(Errc::NotHereditarySaturated,
                  "vertex set is not hereditary and saturated");
    }
    VertexSet out;
    for (auto v : g.vertices()) {
      if (h.contains(v)
          || vertex_class(g, v).kind != VertexKind::InfiniteEmitter) {
        continue;
      }
      Count outside = 0;
      for (auto b : g.out_bundles(v)) {
        if (!h.contains(g.bundle(b).dst)) {
          outside += g.bundle(b).mult;
        }
      }
      if (outside.is_finite() && outside > Count(0)) {
        out.insert(v);
      }
    }
    return out;
  }

  struct AdmissiblePair {
    VertexSet h;
    VertexSet s;
    friend auto operator<=>(AdmissiblePair const&, AdmissiblePair const&)
        = default;
    friend bool operator==(AdmissiblePair const&, AdmissiblePair const&)
        = default;
  };

  inline void check_admissible(Graph const& g, AdmissiblePair const& p) {
    for (auto v : p.h) {
      g.check_vertex(v);
    }
    if (!is_hereditary_saturated(g, p.h)) {
      throw Error(Errc::InvalidAdmissiblePair,
                  "H is not hereditary and saturated");
    }
    auto bh = breaking_vertices(g, p.h);
    for (auto v : p.s) {
      if (!bh.contains(v)) {
        throw Error(Errc::InvalidAdmissiblePair,
                    g.name(v) + " is not a breaking vertex of H");
      }
    }
  }

  //! The quotient graph realising L / I(H, S). Vertices of B_H \ S get a
  //! primed copy; bundles ending there get a primed copy ending at it.
  inline Graph quotient_graph(Graph const& g, AdmissiblePair const& p) {
    check_admissible(g, p);
    auto bh = breaking_vertices(g, p.h);

    std::set<std::string> used;
    for (auto v : g.vertices()) {
      used.insert(g.name(v));
    }
    for (auto const& b : g.bundles()) {
      used.insert(b.id);
    }
    auto fresh = [&](std::string base) {
      do {
        base += '\'';
      } while (used.contains(base));
      used.insert(base);
      return base;
    };

    GraphSpec                  spec;
    std::vector<std::string>   primed(g.vertex_count());
    for (auto v : g.vertices()) {
      if (!p.h.contains(v)) {
        spec.vertices.push_back(g.name(v));
      }
    }
    for (auto v : bh) {
      if (!p.s.contains(v)) {
        primed[v.index] = fresh(g.name(v));
        spec.vertices.push_back(primed[v.index]);
      }
    }
    for (auto const& b : g.bundles()) {
      if (!p.h.contains(b.dst)) {
        spec.bundles.push_back({b.id, g.name(b.src), g.name(b.dst), b.mult});
      }
    }
    for (auto const& b : g.bundles()) {
      if (!primed[b.dst.index].empty()) {
        spec.bundles.push_back(
            {fresh(b.id), g.name(b.src), primed[b.dst.index], b.mult});
      }
    }
    return Graph(std::move(spec));
  }

  inline std::vector<Vertex> sinks(Graph const& g) {
    std::vector<Vertex> out;
    for (auto v : g.vertices()) {
      if (vertex_class(g, v).kind == VertexKind::Sink) {
        out.push_back(v);
      }
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_IDEALS_HPP_
