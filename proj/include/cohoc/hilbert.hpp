#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohoc/groebner.hpp"

namespace cohoc {

using Int = boost::multiprecision::cpp_int;

// Dense integer polynomial, coefficients ascending by degree, trailing zeros
// trimmed.  The zero polynomial is the empty vector.
struct IntPoly {
    std::vector<Int> c;

    bool is_zero() const { return c.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c.size()) - 1; } // -1 for zero
    const Int& coeff(int64_t d) const;
};

IntPoly ip_make(std::vector<Int> coeffs);
IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_one_minus_t(int64_t d); // 1 - t^d
bool ip_equal(const IntPoly& a, const IntPoly& b);
bool ip_nonneg(const IntPoly& a);
// Quotient and remainder of a / b (b nonzero).
struct IpDivMod {
    IntPoly quot, rem;
};
IpDivMod ip_divmod(const IntPoly& a, const IntPoly& b);
std::string ip_print(const IntPoly& a); // ascending, e.g. "1 + 2*t^2 - t^3"

// Exact rational series: numerator over a product of (1 - t^d) factors.
// Canonical form cancels exact (1 - t^d) factors of the numerator.
struct HilbertSeries {
    IntPoly num;
    std::vector<int64_t> den; // multiset of d's, sorted ascending

    bool is_polynomial() const { return den.empty(); }
};

HilbertSeries hs_canonical(HilbertSeries s);
bool hs_equal(const HilbertSeries& a, const HilbertSeries& b); // cross-multiplied
HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b);
// Multiply by (1 - t^d).
HilbertSeries hs_mul_factor(HilbertSeries s, int64_t d);
std::string hs_print(const HilbertSeries& s);

// Series of the quotient of the free ring on gens by a monomial ideal.
HilbertSeries monomial_ideal_series(const MonomialIdeal& ideal,
                                    const std::vector<GeneratorInfo>& gens);

HilbertSeries poincare_series(const Presentation& ring,
                              OrderKind order = OrderKind::degrevlex);
// Series of ring / <extra>.
HilbertSeries quotient_series(const Presentation& ring, const std::vector<Poly>& extra,
                              OrderKind order = OrderKind::degrevlex);

// Power-series coefficients through degree bound (the Hilbert function).
std::vector<Int> expand(const HilbertSeries& s, int64_t bound);

// P(R;t) * prod (1 - t^d_i): a polynomial exactly when the denominator cancels.
struct ClearResult {
    bool is_polynomial;
    IntPoly poly;      // the product, when polynomial
    IntPoly remainder; // nonzero witness otherwise; minimal-degree term is the witness
    int64_t witness_degree; // order of the first nonvanishing series coefficient past poly
};
ClearResult clear_parameters(const HilbertSeries& s, const std::vector<int64_t>& degrees);

} // namespace cohoc
