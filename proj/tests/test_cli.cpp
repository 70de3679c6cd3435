#include <gtest/gtest.h>

#include <sstream>

#include "lpa/cli.hpp"
#include "support.hpp"

using namespace lpa;
using lpa::test::fixture;
using lpa::test::fixture_path;

namespace {

  template <class F>
  Errc code_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return Errc::Internal;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "lpa");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string sexpr(std::string const& text) { return to_sexpr(parse_expr(text)); }

  Element eval(std::string const& graph, std::string const& text) {
    Algebra a(fixture(graph));
    return eval_expr(text, a);
  }

}  // namespace

TEST(ParseGraph, Clock) {
  auto g = fixture("clock3");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.bundle_count(), 3u);
}

TEST(ParseGraph, Omega) {
  auto g = parse_graph("vertices: [a, b]\nedges:\n  - {id: x, src: a, dst: b, mult: omega}\n");
  EXPECT_TRUE(g.bundles()[0].mult.is_omega());
  auto j = parse_graph(R"({"vertices": ["a"], "edges": [{"id": "x", "src": "a", "dst": "a", "mult": 2}]})");
  EXPECT_EQ(j.bundles()[0].mult, Count(2));
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(code_of([] { (void)parse_graph("vertices: [a]\nedges:\n  - {id: e, src: a, dst: zz}\n"); }),
            Errc::ValidationError);
  EXPECT_EQ(code_of([] { (void)parse_graph("vertices: [a\n"); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { (void)parse_graph("vertices: [a]\nedges:\n  - {id: e, src: a, dst: a, mult: 0}\n"); }),
            Errc::ValidationError);
  EXPECT_EQ(code_of([] { (void)parse_graph("vertices: [a]\nedge: []\n"); }),
            Errc::SyntaxError);
  try {
    (void)parse_graph("vertices: [a]\nedges:\n  - {id: e, src: a, dst: a, mult: many}\n");
    FAIL();
  } catch (Error const& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Serialize, RoundTripCorpus) {
  for (auto const& name : lpa::test::corpus()) {
    auto g    = fixture(name);
    auto text = serialize(g);
    auto back = parse_graph(text);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Serialize, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_graph({seed, 8, 14, 3, 0.2});
    EXPECT_EQ(parse_graph(serialize(g)), g) << "seed " << seed;
  }
}

TEST(Serialize, Canonical) {
  auto g = parse_graph(
      "vertices: [b, a]\nedges:\n  - {id: y, src: b, dst: a}\n  - {id: x, src: a, dst: b, mult: omega}\n");
  EXPECT_EQ(serialize(g),
            "vertices: [\"a\", \"b\"]\n"
            "edges:\n"
            "  - {id: \"x\", src: \"a\", dst: \"b\", mult: \"omega\"}\n"
            "  - {id: \"y\", src: \"b\", dst: \"a\", mult: 1}\n");
  EXPECT_EQ(serialize(Graph(GraphSpec{{"v"}, {}})), "vertices: [\"v\"]\nedges: []\n");
}

TEST(Expr, Precedence) {
  EXPECT_EQ(sexpr("a b* + c"), "(sum (mul a (star b)) c)");
  EXPECT_EQ(sexpr("a b^2*"), "(mul a (star (pow b 2)))");
  EXPECT_EQ(sexpr("(a + b)^0"), "(pow (sum a b) 0)");
  EXPECT_EQ(sexpr("-a b - c"), "(sum (neg (mul a b)) (neg c))");
  EXPECT_EQ(sexpr("a + b - c"), "(sum a b (neg c))");
  EXPECT_EQ(sexpr("-2/3 a"), "(mul -2/3 a)");
  EXPECT_EQ(sexpr("a - -1"), "(sum a (neg -1))");
  EXPECT_EQ(sexpr("e[3]* e[3]"), "(mul (star e[3]) e[3])");
  EXPECT_EQ(sexpr("a**"), "(star (star a))");
  EXPECT_EQ(sexpr("4/6"), "2/3");
  EXPECT_EQ(sexpr("x'"), "x'");
}

TEST(Expr, SyntaxErrors) {
  for (auto const* bad : {"", "a +", "a^", "(a", "1/0", "a[", "a - - b", "a )", "[1]"}) {
    EXPECT_EQ(code_of([&] { (void)parse_expr(bad); }), Errc::SyntaxError) << bad;
  }
}

TEST(Expr, Resolution) {
  auto g = fixture("clock3");
  EXPECT_EQ(code_of([&] { (void)parse_expr("q", g); }), Errc::UnknownIdent);
  auto o = fixture("omega_gadget");
  EXPECT_EQ(code_of([&] { (void)parse_expr("inf", o); }), Errc::OmegaBundleNeedsIndex);
  EXPECT_NO_THROW((void)parse_expr("inf[7]", o));
  auto m = parse_graph("vertices: [a, b]\nedges:\n  - {id: x, src: a, dst: b, mult: 2}\n");
  EXPECT_EQ(code_of([&] { (void)parse_expr("x", m); }), Errc::BundleNeedsIndex);
  EXPECT_EQ(code_of([&] { (void)parse_expr("x[2]", m); }), Errc::UnknownIdent);
  EXPECT_NO_THROW((void)parse_expr("x[1]", m));
  EXPECT_EQ(code_of([&] { (void)parse_expr("a[0]", m); }), Errc::SyntaxError);
}

TEST(Eval, Relations) {
  EXPECT_EQ(to_string(eval("clock3", "e1* e1")), "1 * w1 . w1^*");
  EXPECT_EQ(to_string(eval("clock3", "e1 e1* + e2 e2* + e3 e3*")), "1 * v . v^*");
  EXPECT_TRUE(eval("clock3", "e1* e2").is_zero());
  EXPECT_EQ(to_string(eval("clock3", "2/3 e2 e2* - e2 e2*")), "-1/3 * e2 . e2^*");
}

TEST(Eval, IdentityAndScalars) {
  Algebra a(fixture("clock3"));
  EXPECT_EQ(eval_expr("(e1 + e2)^0", a), a.identity());
  EXPECT_EQ(eval_expr("3", a), scale(3, a.identity()));
  auto x = eval_expr("e1 + e2* + 2 v", a);
  EXPECT_EQ(x * a.identity(), x);
  EXPECT_EQ(eval_expr("(e1 + e2)^2", a), eval_expr("(e1 + e2) (e1 + e2)", a));
  Algebra empty(Graph(GraphSpec{}));
  EXPECT_EQ(code_of([&] { (void)eval_expr("(1 + 1)^0", empty); }), Errc::EmptyIdentity);
  EXPECT_EQ(code_of([&] { (void)eval_expr("x^0", empty); }), Errc::UnknownIdent);
  EXPECT_EQ(code_of([&] { (void)eval_expr("1^0", empty); }), Errc::SyntaxError);
}

TEST(Eval, MultiplicityBundles) {
  Algebra a(parse_graph("vertices: [a, b]\nedges:\n  - {id: x, src: a, dst: b, mult: 2}\n"));
  EXPECT_EQ(eval_expr("x[0] x[0]* + x[1] x[1]*", a), eval_expr("a", a));
  EXPECT_TRUE(eval_expr("x[0]* x[1]", a).is_zero());
}

TEST(Cli, IndexText) {
  auto r = run({"index", fixture_path("clock5")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Bounded n=2");
  auto f = run({"index", fixture_path("F")});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.substr(0, f.out.find('\n')), "Unbounded: cycle g1 g2 g3 g4 has exit x");
}

TEST(Cli, DecomposeText) {
  EXPECT_EQ(run({"decompose", fixture_path("line4")}).out, "M_4(K)\n");
  EXPECT_EQ(run({"decompose", fixture_path("loop_tail")}).out, "M_2(K[x,x^-1])\n");
  auto o = run({"decompose", fixture_path("omega_gadget")});
  EXPECT_EQ(o.code, 0);
  auto f = run({"decompose", fixture_path("F"), "--format", "json"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f.out)["reason"], "unbounded");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"index", "/nonexistent.graph"}).code, 1);
  EXPECT_EQ(run({"eval", fixture_path("clock3"), "e1 +"}).code, 1);
  EXPECT_EQ(run({"eval", fixture_path("clock3"), "zz"}).code, 1);
  EXPECT_EQ(run({"bogus", fixture_path("clock3")}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"index", fixture_path("clock3"), "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"ideals", fixture_path("clock3"), "--cap", "2"}).code, 2);
  auto big = run({"eval", fixture_path("clock5"), "(e1 + e2 + e1* + e2*)", "--nilpotence-max",
                  "6"});
  EXPECT_EQ(big.code, 0);
}

TEST(Cli, ResourceLimitExitCode) {
  cli::Options opt;
  opt.command        = "eval";
  opt.graph_file     = fixture_path("clock5");
  opt.expr           = "e1 + e2 + e3 + e1* + e2* + e3*";
  opt.nilpotence_max = 8;
  opt.term_limit     = 3;
  std::ostringstream out, err;
  EXPECT_EQ(cli::execute(opt, out, err), 2);
}

TEST(Cli, FlagsBeforeOrAfterCommand) {
  auto a = run({"--format", "json", "index", fixture_path("clock3")});
  auto b = run({"index", fixture_path("clock3"), "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonIsDeterministic) {
  std::vector<std::vector<std::string>> cmds;
  for (auto const& name : lpa::test::corpus()) {
    for (auto const* c : {"analyze", "index", "decompose", "ideals", "witness", "check"}) {
      cmds.push_back({c, fixture_path(name), "--format", "json", "--trials", "40"});
    }
    cmds.push_back({"eval", fixture_path(name), "v", "--format", "json"});
  }
  for (auto const& cmd : cmds) {
    auto first  = run(cmd);
    auto second = run(cmd);
    EXPECT_EQ(first.out, second.out) << cmd[0] << " " << cmd[1];
    if (first.code == 0) {
      EXPECT_TRUE(nlohmann::json::accept(first.out)) << cmd[0] << " " << cmd[1];
    }
  }
}

TEST(Cli, WitnessAndCheck) {
  auto w = nlohmann::json::parse(
      run({"witness", fixture_path("F"), "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(w["verified"], true);
  EXPECT_EQ(w["units"]["kind"], "cycle-exit");
  EXPECT_EQ(w["nilpotence"]["index"], 4);
  auto o = nlohmann::json::parse(
      run({"witness", fixture_path("omega_gadget"), "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(o["verified"], true);
  EXPECT_EQ(o["nilpotence"]["index"], 3);
  auto c = nlohmann::json::parse(
      run({"check", fixture_path("clock5"), "--format", "json", "--seed", "5"}).out);
  EXPECT_EQ(c["ok"], true);
  EXPECT_EQ(c["basis"]["monomials"], 20);
  EXPECT_EQ(c["cross_check"]["witness_index"], 2);
}

TEST(Cli, Analyze) {
  auto a = nlohmann::json::parse(run({"analyze", fixture_path("F"), "--format", "json"}).out);
  EXPECT_EQ(a["condition_L"], false);
  EXPECT_EQ(a["no_exit_cycles"], false);
  EXPECT_EQ(a["no_exit_witness"]["exit"], "x");
  EXPECT_EQ(a["downward_directed"], true);
  EXPECT_EQ(a["cycles"].size(), 2u);
  auto o = nlohmann::json::parse(
      run({"analyze", fixture_path("omega_gadget"), "--format", "json"}).out);
  EXPECT_EQ(o["vertex_classes"]["v"]["kind"], "infinite_emitter");
}
