#ifndef LPA_ELEMENT_HPP_
#define LPA_ELEMENT_HPP_

// Exact arithmetic in the Leavitt path algebra L_K(E).
//
// An Element is a finite linear combination of monomials p q^* with
// r(p) = r(q), kept in normal form: no monomial has p and q ending in the
// same special edge gamma(v), the least edge emitted by a regular vertex v.
// Normal forms are unique, so Elements compare by their term maps.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "ideals.hpp"
#include "scalar.hpp"

namespace lpa {

  struct Monomial {
    Path p;
    Path q;

    [[nodiscard]] std::int64_t degree() const noexcept {
      return static_cast<std::int64_t>(p.length())
             - static_cast<std::int64_t>(q.length());
    }

    friend auto operator<=>(Monomial const&, Monomial const&) = default;
    friend bool operator==(Monomial const&, Monomial const&)  = default;
  };

  //! The special edge of a regular vertex.
  inline EdgeRef special_edge(Graph const& g, Vertex v) {
    return EdgeRef{g.out_bundles(v).front(), 0};
  }

  inline bool is_special(Graph const& g, EdgeRef e) {
    auto v = g.source(e);
    return is_regular(g, v) && special_edge(g, v) == e;
  }

  inline bool is_normal(Graph const& g, Monomial const& m) {
    return m.p.trivial() || m.q.trivial() || m.p.edges.back() != m.q.edges.back()
           || !is_special(g, m.p.edges.back());
  }

  enum class Strategy { Leftmost, Random };

  class Element {
   public:
    using Terms = std::map<Monomial, Scalar>;

    //! The zero element, compatible with every graph.
    Element() = default;

    explicit Element(std::shared_ptr<Graph const> g) : graph_(std::move(g)) {}

    [[nodiscard]] Graph const* graph() const noexcept { return graph_.get(); }
    [[nodiscard]] std::shared_ptr<Graph const> const& graph_ptr() const noexcept {
      return graph_;
    }
    [[nodiscard]] Terms const& terms() const noexcept { return terms_; }
    [[nodiscard]] bool         is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t  size() const noexcept { return terms_.size(); }

    //! Adds k * m, rewriting m into normal form first.
    void add_reduced(Monomial m, Scalar const& k) {
      if (lpa::is_zero(k)) {
        return;
      }
      auto const& g = *graph_;
      while (!m.p.trivial() && !m.q.trivial()
             && m.p.edges.back() == m.q.edges.back()
             && is_special(g, m.p.edges.back())) {
        // (p0 g)(q0 g)^* = p0 q0^* - sum_{e != g, s(e) = s(g)} (p0 e)(q0 e)^*
        auto gamma = m.p.edges.back();
        m.p.edges.pop_back();
        m.q.edges.pop_back();
        for (auto const& e : g.out_edges(g.source(gamma))) {
          if (e == gamma) {
            continue;
          }
          Monomial t = m;
          t.p.edges.push_back(e);
          t.q.edges.push_back(e);
          add_normal(std::move(t), -k);
        }
      }
      add_normal(std::move(m), k);
    }

    //! Adds k * m. Precondition: m is in normal form.
    void add_normal(Monomial m, Scalar const& k) {
      if (lpa::is_zero(k)) {
        return;
      }
      auto [it, inserted] = terms_.try_emplace(std::move(m), k);
      if (!inserted) {
        it->second += k;
        if (lpa::is_zero(it->second)) {
          terms_.erase(it);
        }
      }
    }

    Element& operator+=(Element const& o) {
      adopt(o);
      for (auto const& [m, k] : o.terms_) {
        add_normal(m, k);
      }
      return *this;
    }

    Element& operator-=(Element const& o) {
      adopt(o);
      for (auto const& [m, k] : o.terms_) {
        add_normal(m, -k);
      }
      return *this;
    }

    friend Element operator+(Element a, Element const& b) { return a += b; }
    friend Element operator-(Element a, Element const& b) { return a -= b; }

    friend Element operator-(Element a) {
      for (auto& [m, k] : a.terms_) {
        k = -k;
      }
      return a;
    }

    friend Element scale(Scalar const& k, Element a) {
      if (lpa::is_zero(k)) {
        a.terms_.clear();
        return a;
      }
      for (auto& [m, c] : a.terms_) {
        c *= k;
      }
      return a;
    }

    friend Element operator*(Element const& a, Element const& b) {
      Element out;
      out.graph_ = a.graph_ ? a.graph_ : b.graph_;
      out.adopt(b);
      out.adopt(a);
      if (a.is_zero() || b.is_zero()) {
        return out;
      }
      auto const& g = *out.graph_;
      for (auto const& [x, kx] : a.terms_) {
        for (auto const& [y, ky] : b.terms_) {
          // (p q^*)(r s^*): nonzero only if one of q, r extends the other.
          if (is_prefix(x.q, y.p)) {
            Monomial m{concat(g, x.p, strip_prefix(g, x.q, y.p)), y.q};
            out.add_reduced(std::move(m), kx * ky);
          } else if (is_prefix(y.p, x.q)) {
            Monomial m{x.p, concat(g, y.q, strip_prefix(g, y.p, x.q))};
            out.add_reduced(std::move(m), kx * ky);
          }
        }
      }
      return out;
    }

    Element& operator*=(Element const& o) { return *this = *this * o; }

    friend bool operator==(Element const& a, Element const& b) {
      return a.terms_ == b.terms_;
    }

   private:
    void adopt(Element const& o) {
      if (!o.graph_) {
        return;
      }
      if (!graph_) {
        graph_ = o.graph_;
      } else if (graph_ != o.graph_ && !(*graph_ == *o.graph_)) {
        throw Error(Errc::GraphMismatch,
                    "elements belong to different graphs");
      }
    }

    std::shared_ptr<Graph const> graph_;
    Terms                        terms_;
  };

  //! The involution sum k p q^* -> sum k q p^*.
  inline Element involution(Element const& a) {
    Element out(a.graph_ptr());
    for (auto const& [m, k] : a.terms()) {
      out.add_reduced(Monomial{m.q, m.p}, k);
    }
    return out;
  }

  inline std::map<std::int64_t, Element> degree_components(Element const& a) {
    std::map<std::int64_t, Element> out;
    for (auto const& [m, k] : a.terms()) {
      auto [it, _] = out.try_emplace(m.degree(), Element(a.graph_ptr()));
      it->second.add_normal(m, k);
    }
    return out;
  }

  struct NilpotenceResult {
    enum class Kind { Nilpotent, NotNilpotentWithin, ResourceLimit };
    Kind        kind;
    std::size_t k = 0;  // index, probe bound, or power reached
    friend bool operator==(NilpotenceResult const&, NilpotenceResult const&)
        = default;
  };

  inline constexpr std::size_t default_term_limit = 1'000'000;

  //! Least k <= k_max with a^k = 0 (k = 1 for a = 0).
  inline NilpotenceResult nilpotence_index(Element const& a,
                                           std::size_t    k_max,
                                           std::size_t term_limit
                                           = default_term_limit) {
    using Kind = NilpotenceResult::Kind;
    if (a.is_zero()) {
      return {Kind::Nilpotent, 1};
    }
    Element power = a;
    for (std::size_t k = 2; k <= k_max; ++k) {
      power = power * a;
      if (power.is_zero()) {
        return {Kind::Nilpotent, k};
      }
      if (power.size() > term_limit) {
        return {Kind::ResourceLimit, k};
      }
    }
    return {Kind::NotNilpotentWithin, k_max};
  }

  //! Normalizes a raw formal combination by single rewrite steps, choosing
  //! the reducible monomial either leftmost or at random. Independent of the
  //! stripping loop in Element::add_reduced.
  inline Element normal_form(std::shared_ptr<Graph const>                 g,
                             std::vector<std::pair<Monomial, Scalar>> const& raw,
                             Strategy      strategy = Strategy::Leftmost,
                             std::uint64_t seed     = 0) {
    for (auto const& [m, k] : raw) {
      if (path_range(*g, m.p) != path_range(*g, m.q)) {
        throw Error(Errc::RangeMismatch, "monomial with r(p) != r(q)");
      }
    }
    std::map<Monomial, Scalar> work;
    auto accumulate = [&](Monomial m, Scalar const& k) {
      auto [it, inserted] = work.try_emplace(std::move(m), k);
      if (!inserted) {
        it->second += k;
      }
      if (lpa::is_zero(it->second)) {
        work.erase(it);
      }
    };
    for (auto const& [m, k] : raw) {
      if (!lpa::is_zero(k)) {
        accumulate(m, k);
      }
    }
    std::mt19937_64 rng(seed);
    while (true) {
      std::vector<std::map<Monomial, Scalar>::iterator> reducible;
      for (auto it = work.begin(); it != work.end(); ++it) {
        if (!is_normal(*g, it->first)) {
          reducible.push_back(it);
          if (strategy == Strategy::Leftmost) {
            break;
          }
        }
      }
      if (reducible.empty()) {
        break;
      }
      auto pick = reducible[strategy == Strategy::Leftmost
                                ? 0
                                : rng() % reducible.size()];
      Monomial m = pick->first;
      Scalar   k = pick->second;
      work.erase(pick);
      auto gamma = m.p.edges.back();
      m.p.edges.pop_back();
      m.q.edges.pop_back();
      for (auto const& e : g->out_edges(g->source(gamma))) {
        if (e != gamma) {
          Monomial t = m;
          t.p.edges.push_back(e);
          t.q.edges.push_back(e);
          accumulate(std::move(t), -k);
        }
      }
      accumulate(std::move(m), k);
    }
    Element out(std::move(g));
    for (auto& [m, k] : work) {
      out.add_normal(m, k);
    }
    return out;
  }

  //! Factory for elements over one graph.
  class Algebra {
   public:
    explicit Algebra(Graph g)
        : graph_(std::make_shared<Graph const>(std::move(g))) {}
    explicit Algebra(std::shared_ptr<Graph const> g) : graph_(std::move(g)) {}

    [[nodiscard]] Graph const& graph() const noexcept { return *graph_; }
    [[nodiscard]] std::shared_ptr<Graph const> const& graph_ptr() const noexcept {
      return graph_;
    }

    [[nodiscard]] Element zero() const { return Element(graph_); }

    //! p q^* in normal form.
    [[nodiscard]] Element monomial(Path const& p, Path const& q) const {
      make_path(*graph_, p.base, p.edges);
      make_path(*graph_, q.base, q.edges);
      if (path_range(*graph_, p) != path_range(*graph_, q)) {
        throw Error(Errc::RangeMismatch,
                    "r(" + to_string(*graph_, p) + ") != r("
                        + to_string(*graph_, q) + ")");
      }
      Element out(graph_);
      out.add_reduced(Monomial{p, q}, Scalar(1));
      return out;
    }

    [[nodiscard]] Element path(Path const& p) const {
      return monomial(p, trivial_path(path_range(*graph_, p)));
    }

    [[nodiscard]] Element vertex(Vertex v) const {
      graph_->check_vertex(v);
      return monomial(trivial_path(v), trivial_path(v));
    }

    [[nodiscard]] Element edge(EdgeRef e) const {
      graph_->check_edge(e);
      return monomial(Path{graph_->source(e), {e}},
                      trivial_path(graph_->range(e)));
    }

    [[nodiscard]] Element ghost(EdgeRef e) const {
      graph_->check_edge(e);
      return monomial(trivial_path(graph_->range(e)),
                      Path{graph_->source(e), {e}});
    }

    //! The unit sum of all vertices; the graph must be nonempty.
    [[nodiscard]] Element identity() const {
      if (graph_->vertex_count() == 0) {
        throw Error(Errc::EmptyIdentity, "the empty graph has no identity");
      }
      Element out(graph_);
      for (auto v : graph_->vertices()) {
        out += vertex(v);
      }
      return out;
    }

    [[nodiscard]] Element
    normal_form(std::vector<std::pair<Monomial, Scalar>> const& raw,
                Strategy      strategy = Strategy::Leftmost,
                std::uint64_t seed     = 0) const {
      return lpa::normal_form(graph_, raw, strategy, seed);
    }

    //! v^H = v - sum_{s(e) = v, r(e) not in H} e e^*, for a breaking vertex v.
    [[nodiscard]] Element breaking_vertex_element(VertexSet const& h,
                                                  Vertex v) const {
      if (!breaking_vertices(*graph_, h).contains(v)) {
        throw Error(Errc::NotABreakingVertex,
                    graph_->name(v) + " is not a breaking vertex of H");
      }
      Element out = vertex(v);
      for (auto b : graph_->out_bundles(v)) {
        auto const& bundle = graph_->bundle(b);
        if (h.contains(bundle.dst)) {
          continue;
        }
        for (std::uint64_t k = 0; k < bundle.mult.value(); ++k) {
          out -= edge({b, k}) * ghost({b, k});
        }
      }
      return out;
    }

   private:
    std::shared_ptr<Graph const> graph_;
  };

  inline Element power(Element const& a, std::size_t k) {
    if (k == 0) {
      if (!a.graph()) {
        throw Error(Errc::EmptyIdentity, "zero element carries no graph");
      }
      return Algebra(a.graph_ptr()).identity();
    }
    Element out = a;
    for (std::size_t i = 1; i < k; ++i) {
      out = out * a;
    }
    return out;
  }

  //! Canonical text: sorted terms `coeff * p . q^*` joined by " + ".
  inline std::string to_string(Element const& a) {
    if (a.is_zero()) {
      return "0";
    }
    auto const& g = *a.graph();
    std::string out;
    for (auto const& [m, k] : a.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += to_string(k) + " * " + to_string(g, m.p) + " . "
             + to_string(g, m.q) + "^*";
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_ELEMENT_HPP_
