#ifndef LPA_EXPR_HPP_
#define LPA_EXPR_HPP_

// Element expressions over a loaded graph.
//
//   expr    := product (('+' | '-') product)*
//   product := atom+
//   atom    := scalar | primary postfix*
//   primary := IDENT | IDENT '[' NAT ']' | '(' expr ')'
//   postfix := '*' | '^' NAT
//   scalar  := ['-'] NAT ('/' NAT)?
//
// Juxtaposition multiplies, postfix `*` is the involution, and `x^0` is the
// identity (the sum of all vertices). A leading '-' directly before a number
// is part of the literal; before anything else it negates the first product.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "scalar.hpp"

namespace lpa {

  struct Expr {
    enum class Kind { Sum, Product, Star, Power, Scalar, Ident };

    Kind                         kind = Kind::Scalar;
    std::vector<Expr>            children;
    std::vector<bool>            negated;  // Sum: sign of each child
    std::string                  text;     // Scalar literal or Ident name
    std::optional<std::uint64_t> index;    // Ident: `id[k]`
    std::uint64_t                exponent = 0;
    std::size_t                  pos      = 0;
  };

  //! S-expression rendering, used for golden parse trees.
  inline std::string to_sexpr(Expr const& e) {
    switch (e.kind) {
      case Expr::Kind::Scalar: return e.text;
      case Expr::Kind::Ident:
        return e.index ? e.text + "[" + std::to_string(*e.index) + "]"
                       : e.text;
      case Expr::Kind::Star: return "(star " + to_sexpr(e.children[0]) + ")";
      case Expr::Kind::Power:
        return "(pow " + to_sexpr(e.children[0]) + " "
               + std::to_string(e.exponent) + ")";
      case Expr::Kind::Product:
      case Expr::Kind::Sum: {
        std::string out = e.kind == Expr::Kind::Sum ? "(sum" : "(mul";
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          auto s = to_sexpr(e.children[i]);
          out += " " + (!e.negated.empty() && e.negated[i] ? "(neg " + s + ")"
                                                            : s);
        }
        return out + ")";
      }
    }
    return "?";
  }

  namespace detail {
    class ExprParser {
     public:
      explicit ExprParser(std::string_view text) : s_(text) {}

      Expr parse() {
        auto e = sum();
        skip();
        if (i_ < s_.size()) {
          fail("unexpected '" + std::string(1, s_[i_]) + "'");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error(Errc::SyntaxError,
                    msg + " at position " + std::to_string(i_ + 1));
      }

      void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
          ++i_;
        }
      }

      char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
      }

      static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }
      static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_'
               || c == '\'';
      }
      static bool digit(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      }

      std::string nat() {
        skip();
        auto start = i_;
        while (i_ < s_.size() && digit(s_[i_])) {
          ++i_;
        }
        if (start == i_) {
          fail("expected a natural number");
        }
        return std::string(s_.substr(start, i_ - start));
      }

      std::uint64_t nat_value() {
        auto t = nat();
        if (t.size() > 18) {
          fail("number too large");
        }
        return std::stoull(t);
      }

      bool minus_before_number() {
        auto j = i_ + 1;
        while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) {
          ++j;
        }
        return j < s_.size() && digit(s_[j]);
      }

      Expr sum() {
        Expr out;
        out.kind = Expr::Kind::Sum;
        out.pos  = i_;
        bool neg = false;
        if (peek() == '-' && !minus_before_number()) {
          ++i_;
          neg = true;
        }
        out.children.push_back(product());
        out.negated.push_back(neg);
        while (peek() == '+' || peek() == '-') {
          out.negated.push_back(s_[i_] == '-');
          ++i_;
          out.children.push_back(product());
        }
        if (out.children.size() == 1 && !out.negated[0]) {
          return std::move(out.children[0]);
        }
        return out;
      }

      bool atom_start(char c) { return ident_start(c) || digit(c) || c == '('; }

      Expr product() {
        Expr out;
        out.kind = Expr::Kind::Product;
        out.pos  = i_;
        if (peek() == '-' && minus_before_number()) {
          ++i_;
          out.children.push_back(scalar(true));
        }
        while (atom_start(peek())) {
          out.children.push_back(atom());
        }
        if (out.children.empty()) {
          fail(i_ < s_.size() ? "expected a term" : "unexpected end of input");
        }
        if (out.children.size() == 1) {
          return std::move(out.children[0]);
        }
        return out;
      }

      Expr scalar(bool negative) {
        Expr out;
        out.kind = Expr::Kind::Scalar;
        out.pos  = i_;
        out.text = (negative ? "-" : "") + nat();
        if (peek() == '/') {
          ++i_;
          auto den = nat();
          if (den.find_first_not_of('0') == std::string::npos) {
            fail("zero denominator");
          }
          out.text += "/" + den;
        }
        out.text = to_string(parse_scalar(out.text));
        return out;
      }

      Expr atom() {
        if (digit(peek())) {
          return scalar(false);
        }
        auto e = primary();
        while (true) {
          char c = peek();
          if (c == '*') {
            ++i_;
            Expr star;
            star.kind = Expr::Kind::Star;
            star.pos  = i_ - 1;
            star.children.push_back(std::move(e));
            e = std::move(star);
          } else if (c == '^') {
            ++i_;
            Expr pow;
            pow.kind     = Expr::Kind::Power;
            pow.pos      = i_ - 1;
            pow.exponent = nat_value();
            pow.children.push_back(std::move(e));
            e = std::move(pow);
          } else {
            return e;
          }
        }
      }

      Expr primary() {
        char c = peek();
        if (c == '(') {
          ++i_;
          auto e = sum();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++i_;
          return e;
        }
        if (!ident_start(c)) {
          fail("expected an identifier");
        }
        Expr out;
        out.kind  = Expr::Kind::Ident;
        out.pos   = i_;
        auto start = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) {
          ++i_;
        }
        out.text = std::string(s_.substr(start, i_ - start));
        if (i_ < s_.size() && s_[i_] == '[') {
          ++i_;
          out.index = nat_value();
          if (peek() != ']') {
            fail("expected ']'");
          }
          ++i_;
        }
        return out;
      }

      std::string_view s_;
      std::size_t      i_ = 0;
    };

    inline std::variant<Vertex, EdgeRef> resolve_ident(Expr const& e,
                                                        Graph const& g) {
      auto at = " at position " + std::to_string(e.pos + 1);
      if (auto v = g.find_vertex(e.text)) {
        if (e.index) {
          throw Error(Errc::SyntaxError,
                      "vertex '" + e.text + "' cannot be indexed" + at);
        }
        return *v;
      }
      auto b = g.find_bundle(e.text);
      if (!b) {
        throw Error(Errc::UnknownIdent, "'" + e.text + "'" + at);
      }
      auto m = g.bundle(*b).mult;
      if (!e.index) {
        if (m.is_omega()) {
          throw Error(Errc::OmegaBundleNeedsIndex,
                      "'" + e.text + "' has multiplicity omega" + at);
        }
        if (m != Count(1)) {
          throw Error(Errc::BundleNeedsIndex, "'" + e.text
                                                  + "' has multiplicity "
                                                  + m.to_string() + at);
        }
        return EdgeRef{*b, 0};
      }
      if (m.is_finite() && *e.index >= m.value()) {
        throw Error(Errc::UnknownIdent, "'" + e.text + "["
                                            + std::to_string(*e.index)
                                            + "]' is out of range" + at);
      }
      return EdgeRef{*b, *e.index};
    }

    inline void resolve(Expr const& e, Graph const& g) {
      if (e.kind == Expr::Kind::Ident) {
        (void)resolve_ident(e, g);
      }
      for (auto const& c : e.children) {
        resolve(c, g);
      }
    }

    inline Element eval(Expr const& e, Algebra const& alg) {
      auto const& g = alg.graph();
      switch (e.kind) {
        case Expr::Kind::Scalar:
          return scale(parse_scalar(e.text), alg.identity());
        case Expr::Kind::Ident: {
          auto r = resolve_ident(e, g);
          if (auto const* v = std::get_if<Vertex>(&r)) {
            return alg.vertex(*v);
          }
          return alg.edge(std::get<EdgeRef>(r));
        }
        case Expr::Kind::Star: return involution(eval(e.children[0], alg));
        case Expr::Kind::Power: {
          if (e.exponent == 0) {
            return alg.identity();
          }
          return power(eval(e.children[0], alg), e.exponent);
        }
        case Expr::Kind::Product: {
          Scalar                 k(1);
          std::optional<Element> acc;
          for (auto const& c : e.children) {
            if (c.kind == Expr::Kind::Scalar) {
              k *= parse_scalar(c.text);
            } else {
              auto x = eval(c, alg);
              acc    = acc ? *acc * x : std::move(x);
            }
          }
          return scale(k, acc ? std::move(*acc) : alg.identity());
        }
        case Expr::Kind::Sum: {
          Element out = alg.zero();
          for (std::size_t i = 0; i < e.children.size(); ++i) {
            auto x = eval(e.children[i], alg);
            if (e.negated[i]) {
              out -= x;
            } else {
              out += x;
            }
          }
          return out;
        }
      }
      throw Error(Errc::Internal, "bad expression node");
    }
  }  // namespace detail

  inline Expr parse_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
  }

  //! Parses and resolves every identifier against g.
  inline Expr parse_expr(std::string_view text, Graph const& g) {
    auto e = parse_expr(text);
    detail::resolve(e, g);
    return e;
  }

  inline Element eval_expr(Expr const& ast, Algebra const& alg) {
    detail::resolve(ast, alg.graph());
    return detail::eval(ast, alg);
  }

  inline Element eval_expr(std::string_view text, Algebra const& alg) {
    return eval_expr(parse_expr(text), alg);
  }

}  // namespace lpa

#endif  // LPA_EXPR_HPP_
