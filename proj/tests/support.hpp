#ifndef LPA_TESTS_SUPPORT_HPP_
#define LPA_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "lpa/analysis.hpp"
#include "lpa/io.hpp"

#ifndef LPA_FIXTURE_DIR
#error "LPA_FIXTURE_DIR must be defined"
#endif

namespace lpa::test {

  inline std::string fixture_path(std::string const& name) {
    return std::string(LPA_FIXTURE_DIR) + "/" + name + ".graph";
  }

  inline Graph fixture(std::string const& name) {
    return load_graph(fixture_path(name));
  }

  inline std::vector<std::string> const& corpus() {
    static std::vector<std::string> const names{
        "clock3", "clock5", "inverse_clock3", "line1", "line2", "line3",
        "line4", "line5", "line6", "loop", "loop_tail", "two_loops",
        "F", "omega_gadget"};
    return names;
  }

  inline Graph build(std::vector<std::string> vertices,
                     std::vector<BundleSpec> bundles) {
    return Graph(GraphSpec{std::move(vertices), std::move(bundles)});
  }

  inline VertexSet set_of(Graph const& g, std::vector<std::string> const& ids) {
    VertexSet out;
    for (auto const& id : ids) {
      out.insert(g.vertex(id));
    }
    return out;
  }

  inline EdgeRef edge(Graph const& g, std::string const& bundle,
                      std::uint64_t index = 0) {
    return EdgeRef{*g.find_bundle(bundle), index};
  }

}  // namespace lpa::test

#endif  // LPA_TESTS_SUPPORT_HPP_
