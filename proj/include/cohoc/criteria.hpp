#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cohoc/morphism.hpp"
#include "cohoc/parameters.hpp"

namespace cohoc {

// Verdict plus certificate for one completeness test.  `data` carries the
// full machine-checkable evidence (series, polynomials, degrees).
struct CriterionReport {
    std::string criterion;
    std::string verdict; // complete | not-yet | inapplicable | applicable | surjective
    int64_t threshold = -1;
    int64_t n = -1;
    std::vector<int64_t> param_degrees;
    int depth_lower_bound = -1;
    int64_t witness_degree = -1;
    std::string detail;
    nlohmann::json data;
};

// Benson's applicability bound: the criterion can only apply at degrees
// n > sum(d_i - 1).  Inapplicable unless the parameters form a filter-regular
// hsop; the filter data is reported, the internal inequalities are not.
CriterionReport benson_threshold(const std::vector<int64_t>& param_degrees,
                                 const FilterRegularityReport& fr_report);

// Symonds' test at degree n: complete iff n > sum(d_i - 1) and the ring is
// generated in module degrees <= n over the parameter subalgebra.
CriterionReport symonds_test(const Presentation& ring, const ParameterSet& params,
                             int64_t n, OrderKind order = OrderKind::degrevlex);

// Surjectivity test at degree n: surjective iff n >= gendeg of the morphism.
CriterionReport king_gen(const RingMorphism& m, int64_t n, bool allow_unvalidated = false,
                         OrderKind order = OrderKind::degrevlex);

// Poincare-series test at degree n with N = sum(d_i) - depth_lower_bound:
// inapplicable unless surjective and n >= N; complete iff the series times
// prod(1 - t^{d_i}) is a polynomial of degree <= N.
CriterionReport king_rel(const HilbertSeries& series,
                         const std::vector<int64_t>& param_degrees,
                         int64_t depth_lower_bound, int64_t n, bool surjective);

struct ComparisonBundle {
    const Presentation* ring = nullptr;
    ParameterSet benson_dickson;
    ParameterSet benson_small;
    ParameterSet symonds_params;
    std::vector<int64_t> rel_param_degrees;
    int64_t depth_lower_bound = 0;
    const RingMorphism* morphism = nullptr; // surjectivity input, may be null
    bool allow_unvalidated = false;
    int64_t n_lo = 0;
    int64_t n_hi = 0;
};

struct ComparisonRow {
    std::string name;
    int64_t minimal_n; // smallest certifying degree in range, -1 when none
    CriterionReport report;
};

// One row per criterion with the minimal certifying degree in [n_lo, n_hi];
// Benson rows report their applicability bound.
std::vector<ComparisonRow> compare_all(const ComparisonBundle& bundle,
                                       OrderKind order = OrderKind::degrevlex);

nlohmann::json report_to_json(const CriterionReport& r);
std::string format_report(const CriterionReport& r);

} // namespace cohoc
