#ifndef HC_PARSER_HPP
#define HC_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hc/poly.hpp"

namespace hc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

/// Parses the v1 polynomial grammar:
///   polynomial ::= term (('+'|'-') term)*
///   term       ::= [sign] (integer ['*' factor ('*' factor)*]
///                          | factor ('*' factor)*)
///   factor     ::= 'x' index ['^' exponent]
/// Variables x0..x15, whitespace ignored, no parentheses. A bare integer is
/// a constant term. parse -> to_string -> parse is the identity.
///
/// nvars of the result is max used index + 1, at least min_nvars. Indices
/// >= max_vars are rejected ("variable index exceeding declared nvars").
SparsePoly parse_poly(std::string_view text, int max_vars = 16, int min_nvars = 0);

/// Reads a one-polynomial file; '#' starts a comment through end of line.
SparsePoly parse_poly_file(const std::string& path, int max_vars = 16);

} // namespace hc

#endif
