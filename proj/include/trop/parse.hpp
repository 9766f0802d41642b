#pragma once

#include "trop/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

// Parse failure with the offending input offset and what was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position, std::string expected)
        : std::runtime_error(message + " at offset " + std::to_string(position) +
                             " (expected " + expected + ")"),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Parse polynomial text against a signature.  Grammar, informally:
//
//   poly   := [sign] term (sign term)*
//   term   := rational [*] factors | rational | factors
//   factor := var ['^' integer]
//   var    := 'T'<index>  (1-based; 'x','y','z' alias T1,T2,T3 when n <= 3)
//
// '*' between factors is optional, whitespace is ignored, coefficients may
// be fractions like 5/3, and exponents may be negative only under a Laurent
// signature.  Like terms are collected; "T1 - T1" parses to 0.
FieldPolynomial parse_polynomial(std::string_view text, const MonoidSignature& sig);

// Same grammar restricted to nonnegative coefficients, producing an
// *uncollected* tropical formal sum: "T1 + T1" keeps both copies.  Used by
// proof scripts, where multiset identity of sums matters.
TropFormalSum parse_trop_sum(std::string_view text, const MonoidSignature& sig);

}  // namespace trop
