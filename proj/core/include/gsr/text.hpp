#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "gsr/ring.hpp"
#include "gsr/upoly.hpp"

namespace gsr {

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t pos);
  std::size_t position;  // 0-based offset into the input
};

// Parses an expression over '+', '-', '*', '^', parentheses, integer
// literals and the variables x (and y when ring == ZY) into canonical form.
// Accepted inputs include "x^2+3*x+2" and "(y+1)*x - y".
Poly parse_poly(std::string_view text, Ring ring);

std::string to_string(const RingElem& a);
std::string to_string(const Poly& p);

}  // namespace gsr
