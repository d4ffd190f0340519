#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohoc/hilbert.hpp"

namespace cohoc {

// Ordered list of homogeneous positive-degree elements of a ring.
struct ParameterSet {
    std::vector<Poly> elements;
    std::vector<int64_t> degrees;
};

ParameterSet make_parameter_set(const Presentation& ring, std::vector<Poly> elements);
ParameterSet make_parameter_set(const Presentation& ring,
                                const std::vector<std::string>& exprs);
inline ParameterSet make_parameter_set(const Presentation& ring,
                                       std::initializer_list<const char*> exprs) {
    return make_parameter_set(ring,
                              std::vector<std::string>(exprs.begin(), exprs.end()));
}

// Maximal size of a generator subset meeting no leading-ideal support.
int krull_dimension(const Presentation& ring, OrderKind order = OrderKind::degrevlex);
int krull_dimension_ideal(const MonomialIdeal& ideal, size_t ngens);

struct HsopResult {
    bool is_hsop;
    int64_t quotient_top_degree; // top nonzero degree of R/<params> when finite
    int offending_generator;     // generator with no bounded power, -1 if none
    std::string reason;          // human-readable witness
    std::vector<Int> quotient_hilbert; // Hilbert function of the finite quotient
};
HsopResult is_hsop(const Presentation& ring, const ParameterSet& params,
                   OrderKind order = OrderKind::degrevlex);

struct RegularResult {
    bool regular;
    int first_failing; // 1-based step index, -1 when regular
    HilbertSeries difference; // P(R/<..zeta_i>) - (1-t^d_i) P(R/<..zeta_{i-1}>)
};
RegularResult is_regular_sequence(const Presentation& ring, const ParameterSet& seq,
                                  OrderKind order = OrderKind::degrevlex);

struct FilterStep {
    bool filter_regular;     // annihilator finite-dimensional
    IntPoly ann_series;      // Hilbert function of the annihilator when finite
    int64_t top_ann_degree;  // -1 when the annihilator is zero (regular step)
};
struct FilterRegularityReport {
    std::vector<FilterStep> steps;
    bool all_steps_pass;
    bool hsop;
    bool sequence_filter_regular; // all steps pass and the set is an hsop
};
FilterRegularityReport filter_regular_report(const Presentation& ring, const ParameterSet& seq,
                                             OrderKind order = OrderKind::degrevlex);

struct ExistenceCertificate {
    std::vector<int64_t> fixed_degrees;
    int64_t uniform_degree;
    int new_parameter_count; // dim R - |fixed|
    bool exists;
    int64_t quotient_top_degree; // of R/<fixed + R^(d)> when finite
};
// Existence test: adjoin the whole degree-d graded piece to the fixed
// partial parameter system and test finite-dimensionality.  If the quotient
// is finite-dimensional, some degree-d element over a finite extension
// completes the system.
ExistenceCertificate pars_existence(const Presentation& ring, const ParameterSet& fixed,
                                    int64_t degree, OrderKind order = OrderKind::degrevlex);

// Every homogeneous element of degree <= max_degree that can replace
// params[slot] while keeping an hsop.  Enumerates all F_p-combinations of
// standard monomials, lexicographic by coefficient sequence.
std::vector<Poly> replacement_search(const Presentation& ring, const ParameterSet& params,
                                     size_t slot, int64_t max_degree,
                                     uint64_t budget = uint64_t(1) << 32,
                                     OrderKind order = OrderKind::degrevlex);

} // namespace cohoc
