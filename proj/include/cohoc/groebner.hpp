#pragma once

#include <vector>

#include "cohoc/presentation.hpp"

namespace cohoc {

// Minimal generating set of a monomial ideal: an antichain under divisibility.
struct MonomialIdeal {
    std::vector<Monomial> gens;
};

// Reduced Groebner basis of <ring.relations + extra>.  truncation == 0 means
// complete; otherwise every S-obstruction of degree <= truncation is resolved
// and graded pieces up to that degree are certified.
struct GroebnerBasis {
    const Presentation* ring;
    OrderKind order;
    std::vector<Poly> elements; // monic, reduced, sorted by (degree, leading monomial)
    int64_t truncation;

    bool complete() const { return truncation == 0; }
};

inline constexpr int64_t kComplete = 0;

GroebnerBasis groebner_basis(const Presentation& ring, const std::vector<Poly>& extra = {},
                             OrderKind order = OrderKind::degrevlex,
                             int64_t truncation = kComplete);

// Fully reduced remainder; zero iff f lies in the ideal (within truncation).
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

MonomialIdeal leading_ideal(const GroebnerBasis& gb);

// Degree-d monomials outside the leading ideal; their residues form a basis
// of the degree-d graded piece of the quotient.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int64_t d);

// All monomials of weighted degree d in the free ring, ascending in the order.
std::vector<Monomial> monomials_of_degree(const std::vector<int64_t>& gen_degrees, int64_t d,
                                          OrderKind order = OrderKind::degrevlex);

// Strip non-minimal generators; result sorted ascending degrevlex.
MonomialIdeal antichain(std::vector<Monomial> gens);

} // namespace cohoc
