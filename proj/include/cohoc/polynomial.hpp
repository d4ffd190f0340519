#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cohoc/field.hpp"
#include "cohoc/monomial.hpp"

namespace cohoc {

struct Term {
    Monomial m;
    uint32_t c; // nonzero residue mod p
};

// Sparse polynomial: terms sorted strictly descending under an order, no zero
// coefficients.  The zero polynomial has no terms.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
    size_t size() const { return terms.size(); }
};

// All arithmetic keeps terms sorted under the given order.
Poly poly_normalize(std::vector<Term> terms, const Field& F, OrderKind order);
Poly poly_add(const Poly& a, const Poly& b, const Field& F, OrderKind order);
Poly poly_sub(const Poly& a, const Poly& b, const Field& F, OrderKind order);
Poly poly_scale(const Poly& a, uint32_t c, const Field& F);
// c * m * a
Poly poly_mul_term(const Poly& a, const Monomial& m, uint32_t c, const Field& F,
                   const std::vector<int64_t>& gen_degrees, OrderKind order);
Poly poly_mul(const Poly& a, const Poly& b, const Field& F,
              const std::vector<int64_t>& gen_degrees, OrderKind order);
Poly poly_pow(const Poly& a, uint32_t e, const Field& F,
              const std::vector<int64_t>& gen_degrees, OrderKind order);
// Re-sort an already-normalized polynomial under another order.
Poly poly_resort(const Poly& a, OrderKind order);
bool poly_equal(const Poly& a, const Poly& b);

// Weighted degree of every term if they all agree; nullopt when inhomogeneous.
// The zero polynomial reports degree -1 (homogeneous of every degree).
std::optional<int64_t> homogeneous_degree(const Poly& a);

} // namespace cohoc
