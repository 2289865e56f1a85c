#ifndef ARAPATH_IO_HPP
#define ARAPATH_IO_HPP

#include <string>
#include <string_view>

#include "arapath/monomial_ideal.hpp"

namespace arapath {

/// Grammar (whitespace insensitive):
///   poly := ['+'|'-'] term (('+'|'-') term)*
///   term := [integer] ('*'? var)*
///   var  := 'x' index ('^' exponent)?
/// Integer coefficients are reduced mod p on input. Variable indices must
/// lie in 1..N. '*' between adjacent variables is optional ("x1x2").
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Generators separated by ';' (newlines also accepted); an optional outer
/// pair of parentheses is tolerated. Every generator must parse to a
/// single-term polynomial; zero generators are dropped.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& f);
std::string to_string(const MonomialIdeal& m);

}  // namespace arapath

#endif
