#pragma once

#include <string>
#include <vector>

#include "cohoc/field.hpp"
#include "cohoc/polynomial.hpp"

namespace cohoc {

struct GeneratorInfo {
    std::string name;
    int64_t degree;
};

// Finitely presented graded commutative F_p-algebra.  Generator declaration
// order is significant: it fixes the monomial orders downstream.
struct Presentation {
    Field field;
    std::vector<GeneratorInfo> gens;
    std::vector<Poly> relations;
    std::vector<int64_t> degrees; // cached generator degrees

    size_t ngens() const { return gens.size(); }
    int generator_index(const std::string& name) const; // -1 when absent

    // Arithmetic in declaration context (checks exponent-vector width).
    Poly add(const Poly& a, const Poly& b, OrderKind order = OrderKind::degrevlex) const;
    Poly mul(const Poly& a, const Poly& b, OrderKind order = OrderKind::degrevlex) const;
};

// Validates: prime characteristic, unique names, positive generator degrees,
// homogeneous relations of degree >= 2, even generator degrees when p is odd.
Presentation make_presentation(uint32_t p, std::vector<GeneratorInfo> gens,
                               std::vector<Poly> relations);

// Convenience: relations given in the expression grammar.
Presentation make_presentation(uint32_t p, std::vector<GeneratorInfo> gens,
                               const std::vector<std::string>& relation_texts);

} // namespace cohoc
