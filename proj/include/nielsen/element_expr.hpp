#pragma once

// Element expressions for the command line:
//   EXPR  := TERM ('+' TERM)*
//   TERM  := ['-'] [INT '*'] ATOM
//   ATOM  := GEN | zero | iota | whitehead(Q) | NAME | susp(EXPR, K)
// GEN is a generator of the declared pi_m(S^q), NAME a registered element.

#include <stdexcept>
#include <string>
#include <string_view>

#include "nielsen/homotopy_data.hpp"

namespace nielsen {

class ExprError : public std::runtime_error {
public:
    ExprError(std::size_t column, const std::string& what);
    /// 1-based column of the offending token.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Parses text as an element of pi_m(S^q). Throws ExprError.
SphereElement parse_element(const TableSet& t, int m, int q, std::string_view text);

}  // namespace nielsen
