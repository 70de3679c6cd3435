#ifndef LPA_ORACLE_HPP_
#define LPA_ORACLE_HPP_

// Brute-force machinery used to cross-check the main modules. Nothing here
// calls the path-count recursion or the rewriting code it checks: paths are
// enumerated by breadth-first search over reversed edges, cycles by plain
// edge-level depth-first search, and normality by a direct test.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "structure.hpp"

namespace lpa::oracle {

  inline constexpr std::size_t default_explosion_guard = 2'000'000;

  namespace detail {
    inline std::vector<EdgeRef> edges_into(Graph const& g, Vertex v) {
      std::vector<EdgeRef> out;
      for (std::uint32_t b = 0; b < g.bundle_count(); ++b) {
        auto const& bundle = g.bundle(b);
        if (bundle.dst != v) {
          continue;
        }
        if (bundle.mult.is_omega()) {
          throw Error(Errc::ExplosionGuard,
                      "omega bundle '" + bundle.id + "' ends at "
                          + g.name(v));
        }
        for (std::uint64_t k = 0; k < bundle.mult.value(); ++k) {
          out.push_back({b, k});
        }
      }
      return out;
    }

    // Closed edge sequences through v visiting no vertex twice, up to `limit`
    // of them, each starting at v.
    inline std::vector<std::vector<EdgeRef>>
    cycles_at(Graph const& g, Vertex v, std::size_t limit) {
      std::vector<std::vector<EdgeRef>> found;
      std::vector<EdgeRef>              walk;
      std::vector<bool>                 used(g.vertex_count(), false);
      std::function<void(Vertex)>       go = [&](Vertex x) {
        for (std::uint32_t b = 0; b < g.bundle_count(); ++b) {
          auto const& bundle = g.bundle(b);
          if (bundle.src != x) {
            continue;
          }
          std::uint64_t count
              = bundle.mult.is_omega() ? limit : bundle.mult.value();
          for (std::uint64_t k = 0; k < count; ++k) {
            if (found.size() >= limit) {
              return;
            }
            walk.push_back({b, k});
            if (bundle.dst == v) {
              found.push_back(walk);
            } else if (!used[bundle.dst.index]) {
              used[bundle.dst.index] = true;
              go(bundle.dst);
              used[bundle.dst.index] = false;
            }
            walk.pop_back();
          }
        }
      };
      used[v.index] = true;
      go(v);
      return found;
    }

    inline bool has_run(std::vector<EdgeRef> const& path,
                        std::vector<EdgeRef> const& loop) {
      auto const len = loop.size();
      for (std::size_t i = 0; i + len <= path.size(); ++i) {
        auto at = std::find(loop.begin(), loop.end(), path[i]);
        if (at == loop.end()) {
          continue;
        }
        auto offset = static_cast<std::size_t>(at - loop.begin());
        bool all    = true;
        for (std::size_t j = 0; j < len && all; ++j) {
          all = path[i + j] == loop[(offset + j) % len];
        }
        if (all) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  //! All paths of length <= length_cap ending at v, omitting those that run
  //! through the whole cycle when v lies on exactly one cycle.
  inline std::vector<Path>
  enumerate_paths_ending_at(Graph const& g,
                            Vertex       v,
                            std::size_t  length_cap,
                            std::size_t  guard = default_explosion_guard) {
    g.check_vertex(v);
    auto                                own = detail::cycles_at(g, v, 2);
    std::optional<std::vector<EdgeRef>> excluded;
    if (own.size() == 1) {
      excluded = own.front();
    }
    std::vector<Path>                   out{trivial_path(v)};
    std::vector<std::vector<EdgeRef>>   frontier{{}};  // edges, reversed
    for (std::size_t len = 1; len <= length_cap && !frontier.empty(); ++len) {
      std::vector<std::vector<EdgeRef>> next;
      for (auto const& rev : frontier) {
        Vertex start = rev.empty() ? v : g.source(rev.back());
        for (auto const& e : detail::edges_into(g, start)) {
          auto ext = rev;
          ext.push_back(e);
          std::vector<EdgeRef> forward(ext.rbegin(), ext.rend());
          if (excluded && detail::has_run(forward, *excluded)) {
            continue;
          }
          out.push_back(Path{g.source(e), std::move(forward)});
          next.push_back(std::move(ext));
          if (out.size() > guard) {
            throw Error(Errc::ExplosionGuard,
                        "more than " + std::to_string(guard) + " paths");
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  //! Direct normality test: not both paths ending in the least edge of a
  //! regular vertex.
  inline bool normal_by_definition(Graph const& g, Path const& p, Path const& q) {
    if (p.trivial() || q.trivial() || p.edges.back() != q.edges.back()) {
      return true;
    }
    auto f = p.edges.back();
    auto u = g.source(f);
    std::optional<EdgeRef> least;
    bool                   finite = true;
    for (std::uint32_t b = 0; b < g.bundle_count(); ++b) {
      if (g.bundle(b).src == u) {
        finite = finite && g.bundle(b).mult.is_finite();
        if (!least) {
          least = EdgeRef{b, 0};
        }
      }
    }
    return !(finite && least && *least == f);
  }

  //! All normal-form monomials p q^* with |p| + |q| <= length_cap.
  inline std::vector<Monomial>
  basis_monomials(Graph const& g,
                  std::size_t  length_cap,
                  std::size_t  guard = default_explosion_guard) {
    std::vector<Monomial> out;
    for (auto v : g.vertices()) {
      // plain backward enumeration, no cycle exclusion
      std::vector<Path>     ending{trivial_path(v)};
      std::vector<Path>     frontier{trivial_path(v)};
      for (std::size_t len = 1; len <= length_cap; ++len) {
        std::vector<Path> next;
        for (auto const& p : frontier) {
          for (auto const& e : detail::edges_into(g, p.base)) {
            Path q{g.source(e), {e}};
            q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
            next.push_back(q);
            ending.push_back(std::move(q));
          }
        }
        frontier = std::move(next);
        if (ending.size() > guard) {
          throw Error(Errc::ExplosionGuard, "too many paths");
        }
      }
      for (auto const& p : ending) {
        for (auto const& q : ending) {
          if (p.length() + q.length() <= length_cap
              && normal_by_definition(g, p, q)) {
            out.push_back(Monomial{p, q});
            if (out.size() > guard) {
              throw Error(Errc::ExplosionGuard, "too many monomials");
            }
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Hereditary saturated subsets by testing the definitions on every subset.
  inline std::vector<VertexSet> brute_hereditary_saturated(Graph const& g) {
    auto const n = g.vertex_count();
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      auto in = [&](Vertex v) { return (mask >> v.index & 1) != 0; };
      bool ok = true;
      for (auto const& b : g.bundles()) {
        ok = ok && (!in(b.src) || in(b.dst));
      }
      for (auto v : g.vertices()) {
        if (!ok || in(v)) {
          continue;
        }
        bool          emits = false, finite = true, all_in = true;
        for (auto const& b : g.bundles()) {
          if (b.src == v) {
            emits  = true;
            finite = finite && b.mult.is_finite();
            all_in = all_in && in(b.dst);
          }
        }
        ok = !(emits && finite && all_in);
      }
      if (ok) {
        VertexSet s;
        for (auto v : g.vertices()) {
          if (in(v)) {
            s.insert(v);
          }
        }
        out.push_back(std::move(s));
      }
    }
    std::sort(out.begin(), out.end(), BySizeThenElements{});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random instances
  ////////////////////////////////////////////////////////////////////////

  struct RandomSpec {
    std::uint64_t seed              = 0;
    std::size_t   max_vertices      = 8;
    std::size_t   max_bundles       = 14;
    std::uint64_t max_mult          = 2;
    double        omega_probability = 0.0;
  };

  inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
  }

  inline std::string padded(char prefix, std::size_t i, std::size_t total) {
    auto digits = std::to_string(total > 0 ? total - 1 : 0).size();
    auto s      = std::to_string(i);
    return std::string(1, prefix) + std::string(digits - s.size(), '0') + s;
  }

  inline Graph random_graph(RandomSpec const& spec) {
    std::mt19937_64 rng(spec.seed);
    auto const      nv = 1 + below(rng, std::max<std::size_t>(spec.max_vertices, 1));
    auto const      nb = below(rng, spec.max_bundles + 1);
    GraphSpec       g;
    for (std::size_t i = 0; i < nv; ++i) {
      g.vertices.push_back(padded('v', i, nv));
    }
    for (std::size_t i = 0; i < nb; ++i) {
      BundleSpec b;
      b.id         = padded('b', i, nb);
      b.src        = g.vertices[below(rng, nv)];
      b.dst        = g.vertices[below(rng, nv)];
      b.mult       = 1 + below(rng, std::max<std::uint64_t>(spec.max_mult, 1));
      double flip  = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (flip < spec.omega_probability) {
        b.mult = Count::omega();
      }
      g.bundles.push_back(std::move(b));
    }
    return Graph(std::move(g));
  }

  struct ElementSpec {
    std::uint64_t seed         = 0;
    std::size_t   max_terms    = 4;
    std::size_t   max_length   = 3;
    std::int64_t  max_coeff    = 3;
    std::uint64_t omega_fanout = 3;  // edge indices drawn from omega bundles
  };

  namespace detail {
    inline std::optional<EdgeRef> random_edge(Graph const&         g,
                                              std::span<std::uint32_t const> bs,
                                              std::mt19937_64&     rng,
                                              std::uint64_t        fanout) {
      if (bs.empty()) {
        return std::nullopt;
      }
      auto b = bs[below(rng, bs.size())];
      auto m = g.bundle(b).mult;
      return EdgeRef{b, below(rng, m.is_omega() ? fanout : m.value())};
    }

    inline Scalar random_coeff(std::mt19937_64& rng, std::int64_t max_coeff) {
      auto span = static_cast<std::uint64_t>(2 * max_coeff);
      auto num  = static_cast<long>(below(rng, span)) - max_coeff;
      if (num >= 0) {
        ++num;
      }
      long den = below(rng, 4) == 0 ? 2 : 1;
      Scalar k(num, den);
      k.canonicalize();
      return k;
    }
  }  // namespace detail

  //! A raw (possibly non-normal) monomial p q^* with r(p) = r(q).
  inline Monomial random_monomial(Graph const&       g,
                                  ElementSpec const& spec,
                                  std::mt19937_64&   rng) {
    Vertex start{static_cast<std::uint32_t>(below(rng, g.vertex_count()))};
    Path   p = trivial_path(start);
    auto   len = below(rng, spec.max_length + 1);
    for (std::size_t i = 0; i < len; ++i) {
      auto e = detail::random_edge(g, g.out_bundles(path_range(g, p)), rng,
                                   spec.omega_fanout);
      if (!e) {
        break;
      }
      p.edges.push_back(*e);
    }
    Path q   = trivial_path(path_range(g, p));
    auto qlen = below(rng, spec.max_length + 1);
    for (std::size_t i = 0; i < qlen; ++i) {
      auto e = detail::random_edge(g, g.in_bundles(q.base), rng,
                                   spec.omega_fanout);
      if (!e) {
        break;
      }
      q.edges.insert(q.edges.begin(), *e);
      q.base = g.source(*e);
    }
    return Monomial{std::move(p), std::move(q)};
  }

  inline std::vector<std::pair<Monomial, Scalar>>
  random_raw_combination(Graph const& g, ElementSpec const& spec) {
    std::mt19937_64                          rng(spec.seed);
    std::vector<std::pair<Monomial, Scalar>> raw;
    if (g.vertex_count() == 0) {
      return raw;
    }
    auto n = 1 + below(rng, spec.max_terms);
    for (std::size_t i = 0; i < n; ++i) {
      auto m = random_monomial(g, spec, rng);
      raw.emplace_back(std::move(m), detail::random_coeff(rng, spec.max_coeff));
    }
    return raw;
  }

  inline Element random_element(Algebra const& alg, ElementSpec const& spec) {
    Element out = alg.zero();
    for (auto const& [m, k] : random_raw_combination(alg.graph(), spec)) {
      out.add_reduced(m, k);
    }
    return out;
  }

  //! The degree-d part of a random element with terms biased toward d.
  inline Element random_homogeneous_element(Algebra const&     alg,
                                            ElementSpec const& spec,
                                            std::int64_t       degree) {
    std::mt19937_64 rng(spec.seed);
    Element         out = alg.zero();
    if (alg.graph().vertex_count() == 0) {
      return out;
    }
    auto target = 1 + below(rng, spec.max_terms);
    for (std::size_t tries = 0; tries < 32 * target && out.size() < target;
         ++tries) {
      auto m = random_monomial(alg.graph(), spec, rng);
      if (m.degree() == degree) {
        out.add_reduced(m, detail::random_coeff(rng, spec.max_coeff));
      }
    }
    auto parts = degree_components(out);
    auto it    = parts.find(degree);
    return it == parts.end() ? alg.zero() : it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Index cross-check
  ////////////////////////////////////////////////////////////////////////

  struct CrossCheckReport {
    std::uint64_t              n                 = 0;
    std::size_t                trials            = 0;
    std::size_t                probe_bound       = 0;
    std::size_t                nilpotent_samples = 0;
    std::size_t                resource_aborts   = 0;
    std::size_t                empirical_max     = 0;
    std::size_t                witness_index     = 0;
    std::vector<std::uint64_t> violating_seeds;

    [[nodiscard]] bool ok() const {
      return violating_seeds.empty() && witness_index == n;
    }
  };

  inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  //! Samples random elements and checks that none is nilpotent of index
  //! above the reported bound n, and that the witness attains n exactly.
  //! A probe bound of 0 means n + 3.
  inline CrossCheckReport cross_check_index(Graph const&  g,
                                            std::size_t   trials,
                                            std::size_t   probe_bound,
                                            std::uint64_t seed) {
    auto report = bounded_index_report(g);
    if (!report.bounded) {
      throw Error(Errc::PreconditionUnbounded,
                  "graph does not have bounded index of nilpotence");
    }
    Algebra          alg(g);
    CrossCheckReport out;
    out.n           = report.n;
    out.trials      = trials;
    out.probe_bound = probe_bound == 0 ? report.n + 3 : probe_bound;

    if (report.witness_recipe) {
      auto units = build_units(alg, *report.witness_recipe);
      auto w     = nilpotence_index(jordan_element(units), out.n + 1);
      out.witness_index
          = w.kind == NilpotenceResult::Kind::Nilpotent ? w.k : 0;
    } else {
      out.witness_index = 1;  // empty graph: only the zero element
    }

    auto const span = static_cast<std::int64_t>(report.n);
    for (std::size_t t = 0; t < trials; ++t) {
      ElementSpec spec;
      spec.seed = trial_seed(seed, t);
      std::mt19937_64 pick(spec.seed ^ 0x5bd1e995ULL);
      Element         x;
      if (t % 2 == 0) {
        auto d = static_cast<std::int64_t>(below(pick, 2 * span)) - span;
        if (d >= 0) {
          ++d;
        }
        x = random_homogeneous_element(alg, spec, d);
      } else {
        x = random_element(alg, spec);
      }
      auto r = nilpotence_index(x, out.probe_bound);
      if (r.kind == NilpotenceResult::Kind::ResourceLimit) {
        ++out.resource_aborts;
      } else if (r.kind == NilpotenceResult::Kind::Nilpotent) {
        ++out.nilpotent_samples;
        out.empirical_max = std::max(out.empirical_max, r.k);
        if (r.k > out.n) {
          out.violating_seeds.push_back(spec.seed);
        }
      }
    }
    return out;
  }

}  // namespace lpa::oracle

#endif  // LPA_ORACLE_HPP_
