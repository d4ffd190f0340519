#pragma once

#include <string>

#include "cohoc/presentation.hpp"

namespace cohoc {

// Expression grammar (whitespace ignored everywhere):
//   identifier = [A-Za-z_][A-Za-z0-9_]*
//   power      = identifier ('^' decimal)?
//   term       = decimal? ('*'? power)*        ('*' required between powers)
//   sum        = term (('+'|'-') term)*        ('-' adds the negated coefficient)
// Coefficients are decimal integers reduced mod p.
Poly parse_element(const std::string& text, const Presentation& ring,
                   OrderKind order = OrderKind::degrevlex);

// Inverse of parse_element on normalized forms: terms in descending monomial
// order, '*' between factors, '^' only for exponents > 1, coefficient printed
// only when != 1 (the constant term prints its coefficient alone).
std::string print_element(const Poly& f, const Presentation& ring);
std::string print_monomial(const Monomial& m, const Presentation& ring);

} // namespace cohoc
