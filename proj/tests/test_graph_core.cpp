#include <gtest/gtest.h>

#include <algorithm>

#include "lpa/analysis.hpp"
#include "lpa/ideals.hpp"
#include "lpa/oracle.hpp"
#include "support.hpp"

using namespace lpa;
using lpa::test::build;
using lpa::test::edge;
using lpa::test::fixture;
using lpa::test::set_of;

namespace {

  bool throws_code(auto&& f, Errc code) {
    try {
      f();
    } catch (Error const& e) {
      return e.code() == code;
    }
    return false;
  }

}  // namespace

TEST(Validate, EmptyGraphIsOk) {
  EXPECT_TRUE(validate(GraphSpec{}).empty());
  Graph g(GraphSpec{});
  EXPECT_EQ(g.vertex_count(), 0u);
}

TEST(Validate, ClockIsOk) {
  EXPECT_TRUE(validate(fixture("clock3").spec()).empty());
}

TEST(Validate, UnknownSourceNamesBundle) {
  auto v = validate(GraphSpec{{"a"}, {{"e", "zz", "a", 1}}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].id, "e");
}

TEST(Validate, DuplicateIdsAndZeroMultiplicity) {
  auto v = validate(GraphSpec{{"a", "a"}, {{"e", "a", "a", 0}, {"a", "a", "a", 1}}});
  EXPECT_GE(v.size(), 3u);
  EXPECT_TRUE(throws_code([&] { Graph g(GraphSpec{{"a", "a"}, {}}); },
                          Errc::ValidationError));
}

TEST(VertexClass, Kinds) {
  auto c = fixture("clock3");
  auto k = vertex_class(c, c.vertex("v"));
  EXPECT_EQ(k.kind, VertexKind::Regular);
  EXPECT_EQ(k.out_degree, 3u);
  EXPECT_EQ(vertex_class(c, c.vertex("w1")).kind, VertexKind::Sink);
  auto o = fixture("omega_gadget");
  EXPECT_EQ(vertex_class(o, o.vertex("v")).kind, VertexKind::InfiniteEmitter);
  EXPECT_TRUE(throws_code([&] { (void)c.vertex("nope"); }, Errc::UnknownVertex));
}

TEST(Reachable, Examples) {
  auto c = fixture("clock3");
  for (auto v : c.vertices()) {
    EXPECT_TRUE(reachable(c, v, v));
  }
  EXPECT_FALSE(reachable(c, c.vertex("w1"), c.vertex("v")));
  EXPECT_TRUE(reachable(c, c.vertex("v"), c.vertex("w1")));
  auto f = fixture("F");
  EXPECT_TRUE(reachable(f, f.vertex("p1"), f.vertex("v")));
  EXPECT_FALSE(reachable(f, f.vertex("v"), f.vertex("p1")));
}

TEST(DownwardDirected, Examples) {
  auto f = fixture("F");
  EXPECT_TRUE(downward_directed(f, all_vertices(f)));
  auto c = fixture("clock3");
  EXPECT_FALSE(downward_directed(c, all_vertices(c)));
  EXPECT_TRUE(downward_directed(c, set_of(c, {"w2"})));
}

TEST(Cycles, Examples) {
  EXPECT_TRUE(cycles(fixture("line4")).empty());
  auto two = fixture("two_loops");
  EXPECT_EQ(cycles(two).size(), 2u);
  auto f  = fixture("F");
  auto cs = cycles(f);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(to_string(f, cs[0]), "c1 c2 c3 c4");
  EXPECT_EQ(to_string(f, cs[1]), "g1 g2 g3 g4");
}

TEST(Cycles, ParallelEdgesGiveDistinctCycles) {
  auto g = build({"a", "b"}, {{"x", "a", "b", 2}, {"y", "b", "a", 3}});
  EXPECT_EQ(cycles(g).size(), 6u);
}

TEST(Cycles, CanonicalRotation) {
  auto g = build({"a", "b", "c"},
                 {{"x", "c", "a", 1}, {"y", "a", "b", 1}, {"z", "b", "c", 1}});
  auto cs = cycles(g);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cycle_base(g, cs[0]), g.vertex("a"));
  auto rotated = make_cycle(g, {edge(g, "z"), edge(g, "x"), edge(g, "y")});
  EXPECT_EQ(rotated, cs[0]);
}

TEST(Cycles, OmegaOnClosedWalkIsAnError) {
  auto g = build({"a"}, {{"x", "a", "a", Count::omega()}});
  EXPECT_TRUE(throws_code([&] { (void)cycles(g); }, Errc::CycleThroughOmegaBundle));
  EXPECT_TRUE(throws_code([&] { (void)condition_L(g); },
                          Errc::CycleThroughOmegaBundle));
}

TEST(Cycles, ReversedBundleOrderGivesSameSet) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g    = oracle::random_graph({seed, 6, 10, 2, 0.0});
    auto spec = g.spec();
    std::reverse(spec.bundles.begin(), spec.bundles.end());
    Graph r(spec);
    EXPECT_EQ(cycles(g), cycles(r)) << "seed " << seed;
    auto cs = cycles(g);
    EXPECT_TRUE(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    for (auto const& c : cs) {
      EXPECT_EQ(make_cycle(g, c.edges), c);
    }
  }
}

TEST(Exits, Examples) {
  auto loop = fixture("loop");
  EXPECT_TRUE(exits(loop, cycles(loop)[0]).empty());
  auto f  = fixture("F");
  auto cs = cycles(f);
  auto ex = exits(f, cs[1]);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_EQ(ex[0].edge, edge(f, "x"));
  EXPECT_FALSE(ex[0].omega);
  EXPECT_TRUE(exits(f, cs[0]).empty());
}

TEST(Exits, OmegaExitIsFlagged) {
  auto g  = build({"a", "b"}, {{"c", "a", "a", 1}, {"w", "a", "b", Count::omega()}});
  auto ex = exits(g, cycles(g)[0]);
  ASSERT_EQ(ex.size(), 1u);
  EXPECT_TRUE(ex[0].omega);
}

TEST(NoExitCycles, Examples) {
  auto f = fixture("F");
  auto r = no_exit_cycles(f);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(to_string(f, *r.cycle), "g1 g2 g3 g4");
  EXPECT_EQ(r.exit->edge, edge(f, "x"));
  EXPECT_TRUE(no_exit_cycles(fixture("loop_tail")).holds);
  EXPECT_TRUE(no_exit_cycles(fixture("line5")).holds);
}

TEST(NoExitCycles, AgreesWithDirectExitSearch) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g      = oracle::random_graph({seed, 8, 14, 2, 0.0});
    bool direct = true;
    for (auto const& c : cycles(g)) {
      direct = direct && exits(g, c).empty();
    }
    auto r = no_exit_cycles(g);
    EXPECT_EQ(r.holds, direct) << "seed " << seed;
    if (!r.holds) {
      EXPECT_TRUE(is_exit(g, *r.cycle, r.exit->edge)) << "seed " << seed;
    }
  }
}

TEST(Conditions, Examples) {
  auto line = fixture("line3");
  EXPECT_TRUE(condition_L(line));
  EXPECT_TRUE(condition_K(line));
  auto loop = fixture("loop");
  EXPECT_FALSE(condition_L(loop));
  EXPECT_FALSE(condition_K(loop));
  auto two = fixture("two_loops");
  EXPECT_TRUE(condition_L(two));
  EXPECT_TRUE(condition_K(two));
  auto f = fixture("F");
  EXPECT_FALSE(condition_L(f));
  EXPECT_FALSE(condition_K(f));
}

TEST(Conditions, KImpliesL) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = oracle::random_graph({seed, 6, 10, 2, 0.0});
    if (condition_K(g)) {
      EXPECT_TRUE(condition_L(g)) << "seed " << seed;
    }
  }
}

TEST(PathCount, Examples) {
  auto c = fixture("clock5");
  for (auto s : sinks(c)) {
    EXPECT_EQ(count_paths_ending_at(c, s), Count(2));
  }
  auto f = fixture("F");
  EXPECT_TRUE(count_paths_ending_at(f, f.vertex("v")).is_omega());
  auto lt = fixture("loop_tail");
  EXPECT_EQ(count_paths_ending_at(lt, lt.vertex("v")), Count(2));
  EXPECT_EQ(count_paths_ending_at(lt, lt.vertex("u")), Count(1));
}

TEST(PathCount, OmegaCauses) {
  auto o = fixture("omega_gadget");
  auto d = count_paths_ending_at_detailed(o, o.vertex("h"));
  EXPECT_TRUE(d.count.is_omega());
  EXPECT_EQ(d.cause, OmegaCause::OmegaBundle);
  EXPECT_EQ(count_paths_ending_at(o, o.vertex("w")), Count(2));
  auto two = fixture("two_loops");
  EXPECT_EQ(count_paths_ending_at_detailed(two, two.vertex("v")).cause,
            OmegaCause::MultiCycle);
  auto f = fixture("F");
  EXPECT_EQ(count_paths_ending_at_detailed(f, f.vertex("v")).cause,
            OmegaCause::CycleReaches);
}

TEST(PathCount, MultiplicityAndInverseClock) {
  auto ic = fixture("inverse_clock3");
  EXPECT_EQ(count_paths_ending_at(ic, ic.vertex("w")), Count(4));
  auto g = build({"a", "b", "c"}, {{"x", "a", "b", 2}, {"y", "b", "c", 3}});
  // 1 + 3 * (1 + 2)
  EXPECT_EQ(count_paths_ending_at(g, g.vertex("c")), Count(10));
}

TEST(PathCount, PathsEndingAtMatchCount) {
  auto g  = build({"a", "b", "c"}, {{"x", "a", "b", 2}, {"y", "b", "c", 3}});
  auto ps = paths_ending_at(g, g.vertex("c"), 100);
  EXPECT_EQ(ps.size(), 10u);
  for (auto const& p : ps) {
    EXPECT_EQ(path_range(g, p), g.vertex("c"));
  }
  auto lt  = fixture("loop_tail");
  auto lps = paths_ending_at(lt, lt.vertex("v"), 10);
  ASSERT_EQ(lps.size(), 2u);
  EXPECT_EQ(to_string(lt, lps[0]), "v");
  EXPECT_EQ(to_string(lt, lps[1]), "e");
}

TEST(PathCount, DpMatchesEnumerationOnRandomGraphs) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto          g = oracle::random_graph({seed, 8, 14, 2, 0.0});
    std::uint64_t max_finite = 0;
    for (auto v : g.vertices()) {
      auto c = count_paths_ending_at(g, v);
      if (c.is_finite()) {
        max_finite = std::max(max_finite, c.value());
      }
    }
    auto cap = g.vertex_count() * (max_finite + 1);
    for (auto v : g.vertices()) {
      auto c = count_paths_ending_at(g, v);
      if (c.is_finite()) {
        ++compared;
        EXPECT_EQ(oracle::enumerate_paths_ending_at(g, v, cap).size(), c.value())
            << "seed " << seed << " vertex " << g.name(v);
      }
    }
  }
  EXPECT_GT(compared, 200u);
}

TEST(Closure, Examples) {
  auto c = fixture("clock3");
  EXPECT_TRUE(hereditary_saturated_closure(c, {}).empty());
  EXPECT_EQ(hereditary_saturated_closure(c, set_of(c, {"w1", "w2", "w3"})),
            all_vertices(c));
  EXPECT_EQ(hereditary_saturated_closure(c, set_of(c, {"v"})), all_vertices(c));
  auto o = fixture("omega_gadget");
  EXPECT_EQ(hereditary_saturated_closure(o, set_of(o, {"h"})), set_of(o, {"h"}));
  EXPECT_EQ(hereditary_saturated_closure(o, set_of(o, {"h", "w"})),
            set_of(o, {"h", "w"}));
}

TEST(Closure, IdempotentAndMonotone) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto            g = oracle::random_graph({seed, 7, 12, 2, 0.2});
    std::mt19937_64 rng(seed);
    VertexSet       x, y;
    for (auto v : g.vertices()) {
      auto r = rng() % 3;
      if (r == 0) {
        x.insert(v);
      }
      if (r != 2) {
        y.insert(v);
      }
    }
    auto cx = hereditary_saturated_closure(g, x);
    EXPECT_EQ(hereditary_saturated_closure(g, cx), cx);
    EXPECT_TRUE(is_hereditary_saturated(g, cx));
    auto cy = hereditary_saturated_closure(g, y);
    EXPECT_TRUE(std::includes(cy.begin(), cy.end(), cx.begin(), cx.end()))
        << "seed " << seed;
  }
}

TEST(Lattice, Examples) {
  auto one = build({"v"}, {});
  EXPECT_EQ(all_hereditary_saturated(one).size(), 2u);
  EXPECT_EQ(all_hereditary_saturated(fixture("loop")).size(), 2u);
  auto c = fixture("clock3");
  auto l = all_hereditary_saturated(c);
  EXPECT_EQ(l.size(), 8u);
  EXPECT_EQ(l, oracle::brute_hereditary_saturated(c));
}

TEST(Lattice, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_graph({seed, 7, 12, 2, 0.2});
    EXPECT_EQ(all_hereditary_saturated(g), oracle::brute_hereditary_saturated(g))
        << "seed " << seed;
  }
}

TEST(Lattice, CapExceeded) {
  GraphSpec s;
  for (int i = 0; i < 16; ++i) {
    s.vertices.push_back("v" + std::to_string(10 + i));
  }
  Graph g(s);
  EXPECT_TRUE(throws_code([&] { (void)all_hereditary_saturated(g); },
                          Errc::CapExceeded));
}

TEST(BreakingVertices, Examples) {
  auto c = fixture("clock3");
  for (auto const& h : all_hereditary_saturated(c)) {
    EXPECT_TRUE(breaking_vertices(c, h).empty());
  }
  auto o = fixture("omega_gadget");
  EXPECT_EQ(breaking_vertices(o, set_of(o, {"h"})), set_of(o, {"v"}));
  EXPECT_TRUE(breaking_vertices(o, {}).empty());
  EXPECT_TRUE(throws_code([&] { (void)breaking_vertices(c, set_of(c, {"v"})); },
                          Errc::NotHereditarySaturated));
}

TEST(BreakingVertices, NeverRegularNeverInH) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_graph({seed, 7, 12, 2, 0.3});
    for (auto const& h : all_hereditary_saturated(g)) {
      for (auto v : breaking_vertices(g, h)) {
        EXPECT_FALSE(is_regular(g, v));
        EXPECT_FALSE(h.contains(v));
      }
    }
  }
}

TEST(Quotient, IdentityPair) {
  for (auto const& name : lpa::test::corpus()) {
    auto g = fixture(name);
    EXPECT_EQ(quotient_graph(g, {{}, {}}), g) << name;
  }
}

TEST(Quotient, WholeVertexSet) {
  auto c = fixture("clock3");
  EXPECT_EQ(quotient_graph(c, {all_vertices(c), {}}).vertex_count(), 0u);
}

TEST(Quotient, OmegaGadget) {
  auto o  = fixture("omega_gadget");
  auto q1 = quotient_graph(o, {set_of(o, {"h"}), set_of(o, {"v"})});
  EXPECT_EQ(q1.vertex_count(), 2u);
  ASSERT_EQ(q1.bundle_count(), 1u);
  EXPECT_EQ(q1.name(q1.bundles()[0].src), "v");
  EXPECT_EQ(q1.name(q1.bundles()[0].dst), "w");
  EXPECT_EQ(q1.bundles()[0].mult, Count(1));

  auto q0 = quotient_graph(o, {set_of(o, {"h"}), {}});
  EXPECT_EQ(q0.vertex_count(), 3u);
  auto vp = q0.find_vertex("v'");
  ASSERT_TRUE(vp.has_value());
  EXPECT_EQ(vertex_class(q0, *vp).kind, VertexKind::Sink);
  EXPECT_TRUE(q0.in_bundles(*vp).empty());
  EXPECT_EQ(q0.bundle_count(), 1u);
}

TEST(Quotient, PrimedCopiesOfIncomingBundles) {
  auto g = build({"h", "u", "v", "w"}, {{"a", "u", "v", 2},
                                        {"i", "v", "h", Count::omega()},
                                        {"e", "v", "w", 1}});
  auto h = set_of(g, {"h"});
  EXPECT_EQ(breaking_vertices(g, h), set_of(g, {"v"}));
  auto q  = quotient_graph(g, {h, {}});
  auto vp = q.find_vertex("v'");
  ASSERT_TRUE(vp.has_value());
  ASSERT_EQ(q.in_bundles(*vp).size(), 1u);
  auto const& b = q.bundle(q.in_bundles(*vp)[0]);
  EXPECT_EQ(q.name(b.src), "u");
  EXPECT_EQ(b.mult, Count(2));
  EXPECT_TRUE(throws_code([&] { (void)quotient_graph(g, {h, set_of(g, {"u"})}); },
                          Errc::InvalidAdmissiblePair));
}

TEST(Quotient, FreshPrimedNames) {
  auto g = build({"h", "v", "v'", "w"},
                 {{"i", "v", "h", Count::omega()}, {"e", "v", "w", 1}});
  auto q = quotient_graph(g, {set_of(g, {"h"}), {}});
  EXPECT_TRUE(q.find_vertex("v''").has_value());
  EXPECT_EQ(q.vertex_count(), 4u);
}
