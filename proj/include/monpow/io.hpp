#ifndef MONPOW_IO_HPP
#define MONPOW_IO_HPP

#include <string>
#include <string_view>

#include <monpow/ideal.hpp>

namespace monpow
{

// Accepts either a pair list "[(A,B),...]" or terms such as "x^A y^B",
// "x^A*y^B", "x", "y", "1", separated by ';', ',', '+' or newlines, with
// optional enclosing parentheses. Throws parse_error with a byte offset.
monomial_ideal parse_ideal(std::string_view text);

// "[(0,2),(2,1),(3,0)]".
std::string to_pairs(const monomial_ideal &i);
// "y^2, x^2*y, x^3".
std::string to_terms(const monomial_ideal &i);
std::string to_term(const monomial &m);

} // namespace monpow

#endif
