#ifndef LPA_SCALAR_HPP_
#define LPA_SCALAR_HPP_

// The coefficient field. Everything above this header sees only the alias
// `Scalar` and the three helpers, so another exact field can be dropped in.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "error.hpp"

namespace lpa {

  using Scalar = mpq_class;

  inline std::string to_string(Scalar const& k) { return k.get_str(); }

  inline bool is_zero(Scalar const& k) { return sgn(k) == 0; }

  //! Parses `[-]NAT[/NAT]`.
  inline Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    Scalar      k;
    if (s.empty() || k.set_str(s, 10) != 0 || k.get_den() == 0) {
      throw Error(Errc::SyntaxError, "bad rational literal '" + s + "'");
    }
    k.canonicalize();
    return k;
  }

}  // namespace lpa

#endif  // LPA_SCALAR_HPP_
