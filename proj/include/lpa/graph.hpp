#ifndef LPA_GRAPH_HPP_
#define LPA_GRAPH_HPP_

// The ambient graph model: vertices, edge bundles with finite or omega
// multiplicity, edge references and finite paths.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "count.hpp"
#include "error.hpp"

namespace lpa {

  //! Index of a vertex in a Graph; vertices are numbered in lexicographic
  //! order of their ids.
  struct Vertex {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(Vertex, Vertex) = default;
  };

  //! One edge: the bundle it belongs to (by position in the id-sorted
  //! bundle list) and its index inside the bundle.
  struct EdgeRef {
    std::uint32_t bundle = 0;
    std::uint64_t index  = 0;
    friend constexpr auto operator<=>(EdgeRef const&, EdgeRef const&)
        = default;
  };

  struct BundleSpec {
    std::string id;
    std::string src;
    std::string dst;
    Count       mult = 1;
  };

  //! Unvalidated graph description, as read from a document.
  struct GraphSpec {
    std::vector<std::string> vertices;
    std::vector<BundleSpec>  bundles;
  };

  struct Violation {
    std::string id;
    std::string message;
  };

  //! Checks every Graph/Bundle invariant; an empty result means ok.
  inline std::vector<Violation> validate(GraphSpec const& spec) {
    std::vector<Violation>        out;
    std::map<std::string_view, int> seen_vertices;
    for (auto const& v : spec.vertices) {
      if (v.empty()) {
        out.push_back({v, "empty vertex id"});
      }
      if (seen_vertices[v]++ == 1) {
        out.push_back({v, "duplicate vertex id"});
      }
    }
    std::map<std::string_view, int> seen_bundles;
    for (auto const& b : spec.bundles) {
      if (b.id.empty()) {
        out.push_back({b.id, "empty bundle id"});
      }
      if (seen_bundles[b.id]++ == 1) {
        out.push_back({b.id, "duplicate bundle id"});
      }
      if (seen_vertices.contains(b.id)) {
        out.push_back({b.id, "bundle id collides with a vertex id"});
      }
      if (!seen_vertices.contains(b.src)) {
        out.push_back({b.id, "source '" + b.src + "' is not a vertex"});
      }
      if (!seen_vertices.contains(b.dst)) {
        out.push_back({b.id, "range '" + b.dst + "' is not a vertex"});
      }
      if (b.mult == Count(0)) {
        out.push_back({b.id, "multiplicity must be at least 1"});
      }
    }
    return out;
  }

  struct Bundle {
    std::string id;
    Vertex      src;
    Vertex      dst;
    Count       mult;
  };

  enum class VertexKind { Sink, Regular, InfiniteEmitter };

  struct VertexClass {
    VertexKind    kind;
    std::uint64_t out_degree = 0;  // meaningful for Regular only
    friend bool   operator==(VertexClass const&, VertexClass const&) = default;
  };

  //! A finite directed graph whose parallel edges are grouped into bundles.
  //!
  //! Immutable after construction. Vertices and bundles are stored sorted by
  //! id, so every derived enumeration is deterministic.
  class Graph {
   public:
    Graph() = default;

    explicit Graph(GraphSpec spec) {
      auto violations = validate(spec);
      if (!violations.empty()) {
        std::string msg;
        for (auto const& v : violations) {
          if (!msg.empty()) {
            msg += "; ";
          }
          msg += "'" + v.id + "': " + v.message;
        }
        throw Error(Errc::ValidationError, msg);
      }
      names_ = std::move(spec.vertices);
      std::sort(names_.begin(), names_.end());
      std::sort(spec.bundles.begin(),
                spec.bundles.end(),
                [](auto const& a, auto const& b) { return a.id < b.id; });
      out_.resize(names_.size());
      in_.resize(names_.size());
      for (auto& b : spec.bundles) {
        Bundle bundle{std::move(b.id), vertex(b.src), vertex(b.dst), b.mult};
        auto   pos = static_cast<std::uint32_t>(bundles_.size());
        out_[bundle.src.index].push_back(pos);
        in_[bundle.dst.index].push_back(pos);
        has_omega_ = has_omega_ || bundle.mult.is_omega();
        bundles_.push_back(std::move(bundle));
      }
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return names_.size();
    }
    [[nodiscard]] std::size_t bundle_count() const noexcept {
      return bundles_.size();
    }

    [[nodiscard]] std::vector<Vertex> vertices() const {
      std::vector<Vertex> out(names_.size());
      for (std::uint32_t i = 0; i < out.size(); ++i) {
        out[i] = Vertex{i};
      }
      return out;
    }

    [[nodiscard]] std::string const& name(Vertex v) const {
      return names_.at(v.index);
    }

    [[nodiscard]] std::optional<Vertex> find_vertex(std::string_view id) const {
      auto it = std::lower_bound(names_.begin(), names_.end(), id);
      if (it == names_.end() || *it != id) {
        return std::nullopt;
      }
      return Vertex{static_cast<std::uint32_t>(it - names_.begin())};
    }

    [[nodiscard]] Vertex vertex(std::string_view id) const {
      auto v = find_vertex(id);
      if (!v) {
        throw Error(Errc::UnknownVertex, "no vertex '" + std::string(id) + "'");
      }
      return *v;
    }

    void check_vertex(Vertex v) const {
      if (v.index >= names_.size()) {
        throw Error(Errc::UnknownVertex,
                    "vertex index " + std::to_string(v.index)
                        + " out of range");
      }
    }

    [[nodiscard]] std::optional<std::uint32_t>
    find_bundle(std::string_view id) const {
      auto it = std::lower_bound(
          bundles_.begin(), bundles_.end(), id, [](Bundle const& b, auto s) {
            return b.id < s;
          });
      if (it == bundles_.end() || it->id != id) {
        return std::nullopt;
      }
      return static_cast<std::uint32_t>(it - bundles_.begin());
    }

    [[nodiscard]] std::span<Bundle const> bundles() const noexcept {
      return bundles_;
    }
    [[nodiscard]] Bundle const& bundle(std::uint32_t b) const {
      return bundles_.at(b);
    }

    [[nodiscard]] std::span<std::uint32_t const> out_bundles(Vertex v) const {
      return out_.at(v.index);
    }
    [[nodiscard]] std::span<std::uint32_t const> in_bundles(Vertex v) const {
      return in_.at(v.index);
    }

    [[nodiscard]] bool has_omega_bundles() const noexcept {
      return has_omega_;
    }

    [[nodiscard]] bool is_edge(EdgeRef e) const noexcept {
      if (e.bundle >= bundles_.size()) {
        return false;
      }
      auto m = bundles_[e.bundle].mult;
      return m.is_omega() || e.index < m.value();
    }

    void check_edge(EdgeRef e) const {
      if (!is_edge(e)) {
        throw Error(Errc::UnknownBundle,
                    "edge (" + std::to_string(e.bundle) + ", "
                        + std::to_string(e.index) + ") does not exist");
      }
    }

    [[nodiscard]] Vertex source(EdgeRef e) const {
      return bundles_.at(e.bundle).src;
    }
    [[nodiscard]] Vertex range(EdgeRef e) const {
      return bundles_.at(e.bundle).dst;
    }

    //! Total outgoing multiplicity.
    [[nodiscard]] Count out_multiplicity(Vertex v) const {
      Count total = 0;
      for (auto b : out_bundles(v)) {
        total += bundles_[b].mult;
      }
      return total;
    }

    //! Every edge leaving v, in (bundle-id, index) order. Precondition: v emits
    //! only finite bundles.
    [[nodiscard]] std::vector<EdgeRef> out_edges(Vertex v) const {
      std::vector<EdgeRef> out;
      for (auto b : out_bundles(v)) {
        auto m = bundles_[b].mult;
        if (m.is_omega()) {
          throw Error(Errc::Internal, "out_edges called on an infinite emitter");
        }
        for (std::uint64_t k = 0; k < m.value(); ++k) {
          out.push_back({b, k});
        }
      }
      return out;
    }

    //! Display name: the bundle id for unit bundles, `id[k]` otherwise.
    [[nodiscard]] std::string edge_name(EdgeRef e) const {
      auto const& b = bundles_.at(e.bundle);
      if (b.mult == Count(1)) {
        return b.id;
      }
      return b.id + "[" + std::to_string(e.index) + "]";
    }

    //! Canonical description: vertices and bundles sorted by id.
    [[nodiscard]] GraphSpec spec() const {
      GraphSpec s;
      s.vertices = names_;
      for (auto const& b : bundles_) {
        s.bundles.push_back({b.id, name(b.src), name(b.dst), b.mult});
      }
      return s;
    }

    friend bool operator==(Graph const& a, Graph const& b) {
      if (a.names_ != b.names_ || a.bundles_.size() != b.bundles_.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a.bundles_.size(); ++i) {
        auto const& x = a.bundles_[i];
        auto const& y = b.bundles_[i];
        if (x.id != y.id || x.src != y.src || x.dst != y.dst
            || x.mult != y.mult) {
          return false;
        }
      }
      return true;
    }

   private:
    std::vector<std::string>                names_;
    std::vector<Bundle>                     bundles_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::vector<std::vector<std::uint32_t>> in_;
    bool                                    has_omega_ = false;
  };

  inline VertexClass vertex_class(Graph const& g, Vertex v) {
    g.check_vertex(v);
    auto total = g.out_multiplicity(v);
    if (total.is_omega()) {
      return {VertexKind::InfiniteEmitter, 0};
    }
    if (total == Count(0)) {
      return {VertexKind::Sink, 0};
    }
    return {VertexKind::Regular, total.value()};
  }

  inline bool is_regular(Graph const& g, Vertex v) {
    return vertex_class(g, v).kind == VertexKind::Regular;
  }

  //! A finite path. A path of length 0 is the vertex `base`; otherwise
  //! `base` is the source of the first edge.
  struct Path {
    Vertex               base;
    std::vector<EdgeRef> edges;

    [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }
    [[nodiscard]] bool        trivial() const noexcept { return edges.empty(); }

    friend auto operator<=>(Path const&, Path const&) = default;
    friend bool operator==(Path const&, Path const&)  = default;
  };

  inline Vertex path_range(Graph const& g, Path const& p) {
    return p.edges.empty() ? p.base : g.range(p.edges.back());
  }

  //! Builds a path, checking that consecutive edges compose.
  inline Path make_path(Graph const& g, Vertex base, std::vector<EdgeRef> edges) {
    g.check_vertex(base);
    Vertex at = base;
    for (auto const& e : edges) {
      if (!g.is_edge(e)) {
        throw Error(Errc::InvalidPath, "path uses a nonexistent edge");
      }
      if (g.source(e) != at) {
        throw Error(Errc::InvalidPath,
                    "edge " + g.edge_name(e) + " does not start at "
                        + g.name(at));
      }
      at = g.range(e);
    }
    return Path{base, std::move(edges)};
  }

  inline Path make_path(Graph const& g, std::vector<EdgeRef> edges) {
    if (edges.empty()) {
      throw Error(Errc::InvalidPath, "an empty path needs a base vertex");
    }
    auto base = g.source(edges.front());
    return make_path(g, base, std::move(edges));
  }

  inline Path trivial_path(Vertex v) { return Path{v, {}}; }

  //! p followed by q. Precondition: range(p) = base(q).
  inline Path concat(Graph const& g, Path const& p, Path const& q) {
    if (path_range(g, p) != q.base) {
      throw Error(Errc::InvalidPath, "paths do not compose");
    }
    Path r = p;
    r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
    return r;
  }

  //! True iff q = p t for some path t.
  inline bool is_prefix(Path const& p, Path const& q) noexcept {
    return p.base == q.base && p.edges.size() <= q.edges.size()
           && std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
  }

  //! The rest of q after its prefix p. Precondition: is_prefix(p, q).
  inline Path strip_prefix(Graph const& g, Path const& p, Path const& q) {
    Path t{path_range(g, p), {}};
    t.edges.assign(q.edges.begin() + static_cast<std::ptrdiff_t>(p.length()),
                   q.edges.end());
    return t;
  }

  inline std::string to_string(Graph const& g, Path const& p) {
    if (p.trivial()) {
      return g.name(p.base);
    }
    std::string out;
    for (auto const& e : p.edges) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.edge_name(e);
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_GRAPH_HPP_
