#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "zxw/diagram.hpp"

namespace zxw {

class ParseError : public std::invalid_argument {
public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// s-expression diagram text: generator atoms, (seq A B ...), (ten A B ...),
// calculus wrappers (zx E) (zw E) (zxt E), or a (diagram ...) netlist.
// `calc` fixes the tag of calculus-neutral text; line_offset shifts reported lines
Diagram parse_diagram(const std::string& text, std::optional<Calculus> calc = std::nullopt, int line_offset = 0);
// canonical netlist form, stable under parse
std::string print_diagram(const Diagram& d);

// PHASE: affine chain of k*pi/q, pi, floats and variables
Phase parse_phase(const std::string& s);
// PARAM: a+bi with dyadic (exact) or decimal (float) parts, [c0,c1,c2,c3] over 1,w,w^2,w^3, or rho@theta
Param parse_param(const std::string& s);

// zx, zw, zxt
std::string calculus_tag(Calculus c);
Calculus parse_calculus_tag(const std::string& s);

} // namespace zxw
