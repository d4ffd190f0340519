#include "cohoc/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "cohoc/errors.hpp"

namespace cohoc {

namespace {

int64_t sum_minus_one(const std::vector<int64_t>& degrees) {
    int64_t t = 0;
    for (int64_t d : degrees) t += d - 1;
    return t;
}

nlohmann::json ints_to_json(const std::vector<Int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

nlohmann::json ip_to_json(const IntPoly& p) {
    return {{"text", ip_print(p)}, {"coeffs", ints_to_json(p.c)}};
}

nlohmann::json hs_to_json(const HilbertSeries& s) {
    return {{"text", hs_print(s)},
            {"numerator", ip_to_json(s.num)},
            {"denominator_degrees", s.den}};
}

std::string join_degrees(const std::vector<int64_t>& degrees) {
    std::string out;
    for (size_t i = 0; i < degrees.size(); ++i)
        out += (i ? "," : "") + std::to_string(degrees[i]);
    return out;
}

} // namespace

CriterionReport benson_threshold(const std::vector<int64_t>& param_degrees,
                                 const FilterRegularityReport& fr_report) {
    CriterionReport r;
    r.criterion = "benson";
    r.param_degrees = param_degrees;
    r.threshold = sum_minus_one(param_degrees);

    nlohmann::json steps = nlohmann::json::array();
    for (const FilterStep& s : fr_report.steps)
        steps.push_back({{"filter_regular", s.filter_regular},
                         {"top_annihilator_degree", s.top_ann_degree},
                         {"annihilator_series", ip_to_json(s.ann_series)}});
    r.data = {{"filter_steps", steps},
              {"hsop", fr_report.hsop},
              {"sequence_filter_regular", fr_report.sequence_filter_regular}};

    if (!fr_report.sequence_filter_regular) {
        r.verdict = "inapplicable";
        r.detail = fr_report.hsop ? "the sequence is not filter-regular"
                                  : "the parameters are not an hsop";
        return r;
    }
    r.verdict = "applicable";
    r.detail = "criterion can apply at degrees n > " + std::to_string(r.threshold);
    return r;
}

CriterionReport symonds_test(const Presentation& ring, const ParameterSet& params,
                             int64_t n, OrderKind order) {
    CriterionReport r;
    r.criterion = "symonds";
    r.n = n;
    r.param_degrees = params.degrees;
    r.threshold = sum_minus_one(params.degrees);

    HsopResult h = is_hsop(ring, params, order);
    r.data = {{"hsop", h.is_hsop},
              {"module_generation_degree", h.quotient_top_degree},
              {"quotient_hilbert", ints_to_json(h.quotient_hilbert)},
              {"hsop_reason", h.reason}};
    if (!h.is_hsop) {
        r.verdict = "inapplicable";
        r.detail = h.reason;
        return r;
    }

    int64_t g = h.quotient_top_degree;
    r.witness_degree = g;
    if (n <= r.threshold) {
        r.verdict = "not-yet";
        r.detail = "n = " + std::to_string(n) + " does not exceed the threshold " +
                   std::to_string(r.threshold);
    } else if (g > n) {
        r.verdict = "not-yet";
        r.detail = "module generation degree " + std::to_string(g) + " exceeds n";
    } else {
        r.verdict = "complete";
        r.detail = "n > " + std::to_string(r.threshold) +
                   " and the ring is generated in module degrees <= " + std::to_string(g);
    }
    return r;
}

CriterionReport king_gen(const RingMorphism& m, int64_t n, bool allow_unvalidated,
                         OrderKind order) {
    CriterionReport r;
    r.criterion = "king-gen";
    r.n = n;

    GendegReport g = gendeg(m, allow_unvalidated, order);
    r.data = {{"finite", g.finite},
              {"gendeg", g.gendeg},
              {"quotient_hilbert", ints_to_json(g.hilbert)},
              {"module_generator_degrees", g.module_generator_degrees},
              {"offending_generator", g.offending_generator},
              {"validated", m.validated}};
    if (!g.finite) {
        r.verdict = "not-yet";
        r.detail = "the target is not a finitely generated module over the image";
        if (g.offending_generator >= 0)
            r.detail += " (unbounded along " +
                        m.target->gens[static_cast<size_t>(g.offending_generator)].name + ")";
        return r;
    }
    r.threshold = g.gendeg;
    if (n >= g.gendeg) {
        r.verdict = "surjective";
        r.detail = "n >= gendeg = " + std::to_string(g.gendeg);
    } else {
        r.verdict = "not-yet";
        r.detail = "gendeg = " + std::to_string(g.gendeg) + " exceeds n";
    }
    return r;
}

CriterionReport king_rel(const HilbertSeries& series,
                         const std::vector<int64_t>& param_degrees,
                         int64_t depth_lower_bound, int64_t n, bool surjective) {
    CriterionReport r;
    r.criterion = "king-rel";
    r.n = n;
    r.param_degrees = param_degrees;
    r.depth_lower_bound = static_cast<int>(depth_lower_bound);
    int64_t N = std::accumulate(param_degrees.begin(), param_degrees.end(), int64_t(0)) -
                depth_lower_bound;
    r.threshold = N;
    r.data = {{"N", N}, {"series", hs_to_json(series)}, {"surjective", surjective}};

    if (!surjective) {
        r.verdict = "inapplicable";
        r.detail = "surjectivity has not been established";
        return r;
    }
    if (n < N) {
        r.verdict = "inapplicable";
        r.detail = "n = " + std::to_string(n) + " is below N = " + std::to_string(N);
        return r;
    }

    ClearResult c = clear_parameters(series, param_degrees);
    if (!c.is_polynomial) {
        r.verdict = "not-yet";
        r.witness_degree = c.witness_degree;
        r.data["remainder"] = ip_to_json(c.remainder);
        r.detail = "the cleared series is not a polynomial; first surviving coefficient "
                   "at degree " + std::to_string(c.witness_degree);
        return r;
    }
    r.data["product"] = ip_to_json(c.poly);
    if (c.poly.degree() > N) {
        r.verdict = "not-yet";
        r.witness_degree = c.poly.degree();
        r.detail = "the cleared polynomial has degree " + std::to_string(c.poly.degree()) +
                   " > N";
        return r;
    }
    r.verdict = "complete";
    r.witness_degree = c.poly.degree();
    r.detail = "the cleared series is a polynomial of degree " +
               std::to_string(c.poly.degree()) + " <= N = " + std::to_string(N);
    return r;
}

std::vector<ComparisonRow> compare_all(const ComparisonBundle& bundle, OrderKind order) {
    const Presentation& R = *bundle.ring;
    std::vector<ComparisonRow> rows;

    // Benson rows carry the applicability bound, not a completeness verdict.
    const std::pair<const char*, const ParameterSet*> benson_rows[] = {
        {"benson-dickson", &bundle.benson_dickson},
        {"benson-small", &bundle.benson_small},
    };
    for (auto [name, params] : benson_rows) {
        ComparisonRow row;
        row.name = name;
        FilterRegularityReport fr = filter_regular_report(R, *params, order);
        row.report = benson_threshold(params->degrees, fr);
        row.minimal_n = row.report.verdict == "applicable" ? row.report.threshold : -1;
        rows.push_back(std::move(row));
    }

    {
        ComparisonRow row;
        row.name = "symonds";
        HsopResult h = is_hsop(R, bundle.symonds_params, order);
        if (!h.is_hsop) {
            row.report = symonds_test(R, bundle.symonds_params, bundle.n_hi, order);
            row.minimal_n = -1;
        } else {
            int64_t cand = std::max({sum_minus_one(bundle.symonds_params.degrees) + 1,
                                     h.quotient_top_degree, bundle.n_lo});
            row.minimal_n = cand <= bundle.n_hi ? cand : -1;
            row.report = symonds_test(R, bundle.symonds_params,
                                      row.minimal_n >= 0 ? cand : bundle.n_hi, order);
        }
        rows.push_back(std::move(row));
    }

    int64_t surjective_from = -1; // smallest n with a surjective approximation
    {
        ComparisonRow row;
        row.name = "king-gen";
        if (bundle.morphism == nullptr) {
            row.report.criterion = "king-gen";
            row.report.verdict = "inapplicable";
            row.report.detail = "no morphism supplied";
            row.minimal_n = -1;
        } else if (!bundle.morphism->validated && !bundle.allow_unvalidated) {
            row.report.criterion = "king-gen";
            row.report.verdict = "inapplicable";
            row.report.detail = "the morphism failed validation";
            if (bundle.morphism->first_failing_relation > 0)
                row.report.detail += " (first failing relation " +
                                     std::to_string(bundle.morphism->first_failing_relation) +
                                     ")";
            row.minimal_n = -1;
        } else {
            GendegReport g = gendeg(*bundle.morphism, bundle.allow_unvalidated, order);
            if (g.finite) surjective_from = g.gendeg;
            int64_t cand = g.finite ? std::max(g.gendeg, bundle.n_lo) : bundle.n_hi;
            row.minimal_n = g.finite && cand <= bundle.n_hi ? cand : -1;
            row.report = king_gen(*bundle.morphism, row.minimal_n >= 0 ? cand : bundle.n_hi,
                                  bundle.allow_unvalidated, order);
        }
        rows.push_back(std::move(row));
    }

    {
        ComparisonRow row;
        row.name = "king-rel";
        HilbertSeries series = poincare_series(R, order);
        int64_t N = std::accumulate(bundle.rel_param_degrees.begin(),
                                    bundle.rel_param_degrees.end(), int64_t(0)) -
                    bundle.depth_lower_bound;
        if (surjective_from < 0) {
            row.report = king_rel(series, bundle.rel_param_degrees,
                                  bundle.depth_lower_bound, bundle.n_hi, false);
            row.minimal_n = -1;
        } else {
            int64_t cand = std::max({N, surjective_from, bundle.n_lo});
            row.report = king_rel(series, bundle.rel_param_degrees,
                                  bundle.depth_lower_bound,
                                  cand <= bundle.n_hi ? cand : bundle.n_hi,
                                  cand <= bundle.n_hi);
            row.minimal_n =
                row.report.verdict == "complete" && cand <= bundle.n_hi ? cand : -1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json report_to_json(const CriterionReport& r) {
    return {{"criterion", r.criterion},
            {"verdict", r.verdict},
            {"threshold", r.threshold},
            {"n", r.n},
            {"param_degrees", r.param_degrees},
            {"depth_lower_bound", r.depth_lower_bound},
            {"witness_degree", r.witness_degree},
            {"detail", r.detail},
            {"data", r.data}};
}

std::string format_report(const CriterionReport& r) {
    std::string out = r.criterion + ": " + r.verdict;
    if (r.n >= 0) out += " (n = " + std::to_string(r.n) + ")";
    out += "\n";
    if (!r.param_degrees.empty())
        out += "  parameter degrees: " + join_degrees(r.param_degrees) + "\n";
    if (r.depth_lower_bound >= 0)
        out += "  depth lower bound: " + std::to_string(r.depth_lower_bound) + "\n";
    if (r.threshold >= 0) out += "  threshold: " + std::to_string(r.threshold) + "\n";
    if (r.witness_degree >= 0)
        out += "  witness degree: " + std::to_string(r.witness_degree) + "\n";
    if (!r.detail.empty()) out += "  " + r.detail + "\n";
    return out;
}

} // namespace cohoc
