#pragma once

#include <string>
#include <vector>

#include "cohoc/criteria.hpp"

namespace cohoc {
namespace fixtures {

// Embedded corpus: the mod-2 cohomology presentations of a group G of order
// 384 (number 5602) and two subgroups U, S, the printed restriction image
// lists, the parameter elements zeta_1..zeta_4 (lifted Dickson invariants,
// degrees 8, 12, 14, 15) with the low-degree replacements zt1 (degree 4) and
// zt4 (degree 6), and the published series data for cross-checks.
//
// The data is stored exactly as printed.  The restriction image lists are
// NOT compatible with the G presentation (see README): validate_morphism
// honestly fails on them, and gendeg on these morphisms needs the explicit
// unvalidated opt-out.

const Presentation& s9_G();
const Presentation& s9_U();
const Presentation& s9_S();

// Pre-validated (the verdict, not necessarily "true", is already recorded).
const RingMorphism& res_G_to_U();
const RingMorphism& res_G_to_S();

Poly zeta(int i); // i = 1..4
Poly zt1();
Poly zt4();

ParameterSet dickson_params();     // zeta_1..zeta_4, degrees 8,12,14,15
ParameterSet small_params();       // zeta_1..zeta_3, zt4: degrees 8,12,14,6
ParameterSet symonds_params();     // zt1, zeta_2, zeta_3, zt4: degrees 4,12,14,6
ParameterSet existence_fixed();    // zt1, zeta_2, zt4: degrees 4,12,6

int64_t depth_lower_bound(); // = 3, from the subgroup restriction

// Published rational form of the s9_G series and the cleared product of
// degree 25; both for exact cross-multiplied comparison.
struct PrintedSeries {
    IntPoly num;
    IntPoly den;
};
const PrintedSeries& printed_series_G();
const IntPoly& printed_product_25();

ComparisonBundle comparison_bundle(int64_t n_lo = 0, int64_t n_hi = 50);

// Lookup for "fixtures:NAME" references; null when the name is unknown.
const Presentation* find_ring(const std::string& name);
const RingMorphism* find_morphism(const std::string& name);
const std::vector<std::string>& ring_names();
const std::vector<std::string>& morphism_names();

} // namespace fixtures
} // namespace cohoc
