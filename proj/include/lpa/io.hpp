#ifndef LPA_IO_HPP_
#define LPA_IO_HPP_

// Graph documents:
//
//   vertices: ["v", "w1"]
//   edges:
//     - {id: "e1", src: "v", dst: "w1", mult: 1}
//     - {id: "x", src: "v", dst: "h", mult: "omega"}
//
// Any YAML (and so any JSON) document of this shape is accepted. The
// canonical serialization sorts vertices and bundles by id and uses the
// layout above.

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "error.hpp"
#include "graph.hpp"

namespace lpa {

  namespace detail {
    inline std::string where(YAML::Mark const& m) {
      return "line " + std::to_string(m.line + 1) + ", column "
             + std::to_string(m.column + 1);
    }

    inline std::string scalar_field(YAML::Node const& n, char const* key) {
      auto f = n[key];
      if (!f || !f.IsScalar()) {
        throw Error(Errc::SyntaxError,
                    std::string("edge needs a scalar field '") + key + "' at "
                        + where(n.Mark()));
      }
      return f.as<std::string>();
    }

    inline void check_keys(YAML::Node const& n,
                           std::initializer_list<std::string_view> allowed) {
      for (auto const& kv : n) {
        auto key = kv.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
          throw Error(Errc::SyntaxError, "unknown field '" + key + "' at "
                                             + where(kv.first.Mark()));
        }
      }
    }

    inline std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace detail

  //! Reads a document into an unvalidated spec.
  inline GraphSpec parse_graph_spec(std::string const& text) {
    YAML::Node root;
    try {
      root = YAML::Load(text);
    } catch (YAML::Exception const& e) {
      throw Error(Errc::SyntaxError, e.msg + " at " + detail::where(e.mark));
    }
    if (!root.IsMap()) {
      throw Error(Errc::SyntaxError, "document must be a mapping");
    }
    detail::check_keys(root, {"vertices", "edges"});
    GraphSpec spec;
    auto      vs = root["vertices"];
    if (!vs || !vs.IsSequence()) {
      throw Error(Errc::SyntaxError, "field 'vertices' must be a list");
    }
    for (auto const& v : vs) {
      if (!v.IsScalar()) {
        throw Error(Errc::SyntaxError,
                    "vertex ids must be strings at " + detail::where(v.Mark()));
      }
      spec.vertices.push_back(v.as<std::string>());
    }
    auto es = root["edges"];
    if (es && !es.IsNull()) {
      if (!es.IsSequence()) {
        throw Error(Errc::SyntaxError, "field 'edges' must be a list");
      }
      for (auto const& e : es) {
        if (!e.IsMap()) {
          throw Error(Errc::SyntaxError,
                      "edge must be a mapping at " + detail::where(e.Mark()));
        }
        detail::check_keys(e, {"id", "src", "dst", "mult"});
        BundleSpec b;
        b.id   = detail::scalar_field(e, "id");
        b.src  = detail::scalar_field(e, "src");
        b.dst  = detail::scalar_field(e, "dst");
        auto m = e["mult"] ? detail::scalar_field(e, "mult") : std::string("1");
        if (m == "omega") {
          b.mult = Count::omega();
        } else {
          if (m.empty() || m.size() > 18
              || m.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(Errc::SyntaxError,
                        "mult must be a positive integer or \"omega\" at "
                            + detail::where(e["mult"].Mark()));
          }
          b.mult = std::stoull(m);
        }
        spec.bundles.push_back(std::move(b));
      }
    }
    return spec;
  }

  inline Graph parse_graph(std::string const& text) {
    return Graph(parse_graph_spec(text));
  }

  inline Graph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }

  inline std::string serialize(Graph const& g) {
    auto        spec = g.spec();
    std::string out  = "vertices: [";
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
      out += (i ? ", " : "") + detail::quoted(spec.vertices[i]);
    }
    out += "]\n";
    if (spec.bundles.empty()) {
      return out + "edges: []\n";
    }
    out += "edges:\n";
    for (auto const& b : spec.bundles) {
      out += "  - {id: " + detail::quoted(b.id) + ", src: "
             + detail::quoted(b.src) + ", dst: " + detail::quoted(b.dst)
             + ", mult: "
             + (b.mult.is_omega() ? std::string("\"omega\"")
                                  : b.mult.to_string())
             + "}\n";
    }
    return out;
  }

}  // namespace lpa

#endif  // LPA_IO_HPP_
