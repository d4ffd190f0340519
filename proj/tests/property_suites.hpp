#pragma once

#include <cstdint>
#include <string>

// Randomized cross-validation suites shared by the property-test binary and
// the acceptance runner.  Every suite is deterministic in its seed, compares
// the engine against an independent computation (a second monomial order, a
// series identity, or brute-force degreewise linear algebra), and reports the
// first failing case verbatim.

namespace propsuite {

struct Result {
    bool pass = true;
    int cases = 0;      // presentations / morphisms actually exercised
    std::string detail; // witness for the first failure, empty when passing
};

// Poincaré series and standard-monomial counts agree between degrevlex and
// deglex on random presentations (<= 4 generators, degrees <= 3, <= 4
// homogeneous relations).
Result order_independence(int presentations, uint32_t seed);

// Series expansion equals the standard-monomial count degree by degree
// (through degree 10) on the same corpus.
Result macaulay_consistency(int presentations, uint32_t seed);

// P(R/z) - (1-t^d) P(R) expands with non-negative coefficients, all zero
// below degree d, for random homogeneous z of degree d.
Result exact_sequence_identity(int presentations, uint32_t seed);

// The same difference series equals, coefficient by coefficient, the brute
// Gaussian-elimination kernel dimensions of multiplication by z.
Result filter_regular_brute(int presentations, uint32_t seed);

// Generation-degree reports match a brute module-span oracle: quotient
// dimensions, top degree, and (when infinite) unbounded generator powers.
Result gendeg_brute(int morphisms, uint32_t seed);

// Ideal membership via normal form agrees with a rank test over the free
// ring's monomial basis, on members and non-members alike.
Result membership_oracle(int cases, uint32_t seed);

} // namespace propsuite
