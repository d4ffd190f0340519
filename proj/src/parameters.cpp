#include "cohoc/parameters.hpp"

#include <algorithm>
#include <bit>

#include "cohoc/errors.hpp"
#include "cohoc/parser.hpp"

namespace cohoc {

ParameterSet make_parameter_set(const Presentation& ring, std::vector<Poly> elements) {
    ParameterSet out;
    out.degrees.reserve(elements.size());
    for (const Poly& f : elements) {
        auto d = homogeneous_degree(f);
        if (!d)
            throw InhomogeneousRelation("parameter " + print_element(f, ring) +
                                        " is not homogeneous");
        if (*d < 1)
            throw InhomogeneousRelation("parameters must have positive degree");
        out.degrees.push_back(*d);
    }
    out.elements = std::move(elements);
    return out;
}

ParameterSet make_parameter_set(const Presentation& ring,
                                const std::vector<std::string>& exprs) {
    std::vector<Poly> elements;
    elements.reserve(exprs.size());
    for (const std::string& e : exprs) elements.push_back(parse_element(e, ring));
    return make_parameter_set(ring, std::move(elements));
}

int krull_dimension_ideal(const MonomialIdeal& ideal, size_t ngens) {
    if (ngens > 24)
        throw SearchSpaceTooLarge("dimension search over " + std::to_string(ngens) +
                                  " generators");
    // Support bitmask of each minimal generator of the leading ideal.
    std::vector<uint32_t> supports;
    supports.reserve(ideal.gens.size());
    for (const Monomial& m : ideal.gens) {
        uint32_t s = 0;
        for (size_t i = 0; i < ngens; ++i)
            if (m.exps[i] > 0) s |= uint32_t(1) << i;
        supports.push_back(s);
    }
    // A generator subset is independent when it contains no full support; the
    // dimension is the size of the largest independent subset.
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << ngens); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & mask) == s) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

int krull_dimension(const Presentation& ring, OrderKind order) {
    GroebnerBasis gb = groebner_basis(ring, {}, order);
    return krull_dimension_ideal(leading_ideal(gb), ring.ngens());
}

HsopResult is_hsop(const Presentation& ring, const ParameterSet& params, OrderKind order) {
    HsopResult out;
    out.is_hsop = false;
    out.quotient_top_degree = -1;
    out.offending_generator = -1;

    GroebnerBasis gb = groebner_basis(ring, params.elements, order);
    MonomialIdeal li = leading_ideal(gb);
    HilbertSeries series = monomial_ideal_series(li, ring.gens);

    if (!series.is_polynomial()) {
        // Finite-dimensionality fails exactly when some generator has no pure
        // power among the leading terms.
        for (size_t i = 0; i < ring.ngens() && out.offending_generator < 0; ++i) {
            bool pure = false;
            for (const Monomial& m : li.gens) {
                bool only_i = m.exps[i] > 0;
                for (size_t j = 0; only_i && j < ring.ngens(); ++j)
                    if (j != i && m.exps[j] > 0) only_i = false;
                if (only_i) { pure = true; break; }
            }
            if (!pure) out.offending_generator = static_cast<int>(i);
        }
        out.reason = "quotient is infinite-dimensional";
        if (out.offending_generator >= 0)
            out.reason += ": no power of " +
                          ring.gens[static_cast<size_t>(out.offending_generator)].name +
                          " reduces to zero";
        return out;
    }

    out.quotient_top_degree = series.num.degree();
    out.quotient_hilbert = expand(series, std::max<int64_t>(out.quotient_top_degree, 0));

    int dim = krull_dimension(ring, order);
    if (params.elements.size() != static_cast<size_t>(dim)) {
        out.reason = "quotient is finite-dimensional but " +
                     std::to_string(params.elements.size()) +
                     " elements do not match the Krull dimension " + std::to_string(dim);
        return out;
    }

    out.is_hsop = true;
    out.reason = "quotient is finite-dimensional with top degree " +
                 std::to_string(out.quotient_top_degree);
    return out;
}

RegularResult is_regular_sequence(const Presentation& ring, const ParameterSet& seq,
                                  OrderKind order) {
    RegularResult out;
    out.regular = true;
    out.first_failing = -1;
    out.difference = HilbertSeries{};

    std::vector<Poly> sofar;
    HilbertSeries prev = poincare_series(ring, order);
    for (size_t i = 0; i < seq.elements.size(); ++i) {
        sofar.push_back(seq.elements[i]);
        HilbertSeries cur = quotient_series(ring, sofar, order);
        HilbertSeries expected = hs_mul_factor(prev, seq.degrees[i]);
        if (!hs_equal(cur, expected)) {
            out.regular = false;
            out.first_failing = static_cast<int>(i) + 1;
            out.difference = hs_sub(cur, expected);
            return out;
        }
        prev = std::move(cur);
    }
    return out;
}

FilterRegularityReport filter_regular_report(const Presentation& ring, const ParameterSet& seq,
                                             OrderKind order) {
    FilterRegularityReport out;
    out.all_steps_pass = true;

    std::vector<Poly> sofar;
    HilbertSeries prev = poincare_series(ring, order);
    for (size_t i = 0; i < seq.elements.size(); ++i) {
        sofar.push_back(seq.elements[i]);
        HilbertSeries cur = quotient_series(ring, sofar, order);
        int64_t d = seq.degrees[i];
        // P(R/zeta) - (1-t^d) P(R) = t^d P(Ann zeta); the step is
        // filter-regular exactly when the annihilator is finite-dimensional.
        HilbertSeries diff = hs_sub(cur, hs_mul_factor(prev, d));

        FilterStep step;
        step.filter_regular = diff.is_polynomial();
        step.top_ann_degree = -1;
        if (step.filter_regular && diff.num.degree() >= d) {
            std::vector<Int> ann(diff.num.c.begin() + static_cast<size_t>(d),
                                 diff.num.c.end());
            step.ann_series = ip_make(std::move(ann));
            step.top_ann_degree = step.ann_series.degree();
        }
        out.all_steps_pass = out.all_steps_pass && step.filter_regular;
        out.steps.push_back(std::move(step));
        prev = std::move(cur);
    }

    out.hsop = is_hsop(ring, seq, order).is_hsop;
    out.sequence_filter_regular = out.all_steps_pass && out.hsop;
    return out;
}

ExistenceCertificate pars_existence(const Presentation& ring, const ParameterSet& fixed,
                                    int64_t degree, OrderKind order) {
    if (degree < 1) throw Error("existence degree must be positive");
    int dim = krull_dimension(ring, order);

    // The fixed elements must behave like a partial parameter system: the
    // quotient by them has to drop the dimension by exactly their count.
    GroebnerBasis gb = groebner_basis(ring, fixed.elements, order);
    int qdim = krull_dimension_ideal(leading_ideal(gb), ring.ngens());
    if (qdim != dim - static_cast<int>(fixed.elements.size()))
        throw DimensionMismatch("quotient by the fixed elements has dimension " +
                                std::to_string(qdim) + ", expected " +
                                std::to_string(dim - static_cast<int>(fixed.elements.size())));

    ExistenceCertificate out;
    out.fixed_degrees = fixed.degrees;
    out.uniform_degree = degree;
    out.new_parameter_count = dim - static_cast<int>(fixed.elements.size());
    out.quotient_top_degree = -1;

    // Adjoin the entire degree-d piece of R/<fixed>: parameters of degree d
    // completing the fixed ones exist over a large enough field exactly when
    // the resulting quotient is finite-dimensional.
    std::vector<Poly> extra = fixed.elements;
    for (const Monomial& m : standard_monomials(gb, degree))
        extra.push_back(Poly{{Term{m, 1}}});

    HilbertSeries series = quotient_series(ring, extra, order);
    out.exists = series.is_polynomial();
    if (out.exists) out.quotient_top_degree = series.num.degree();
    return out;
}

std::vector<Poly> replacement_search(const Presentation& ring, const ParameterSet& params,
                                     size_t slot, int64_t max_degree, uint64_t budget,
                                     OrderKind order) {
    if (slot >= params.elements.size())
        throw Error("replacement slot " + std::to_string(slot) + " out of range");

    GroebnerBasis gb = groebner_basis(ring, {}, order);
    int dim = krull_dimension_ideal(leading_ideal(gb), ring.ngens());

    std::vector<std::vector<Monomial>> std_by_degree;
    Int total = 0;
    for (int64_t d = 1; d <= max_degree; ++d) {
        std_by_degree.push_back(standard_monomials(gb, d));
        Int count = 1;
        for (size_t i = 0; i < std_by_degree.back().size(); ++i) count *= ring.field.p;
        total += count - 1;
    }
    if (total > budget)
        throw SearchSpaceTooLarge("replacement search over " + total.str() +
                                  " candidates exceeds the budget of " +
                                  std::to_string(budget));

    std::vector<Poly> hits;
    if (params.elements.size() != static_cast<size_t>(dim)) return hits;

    std::vector<Poly> candidate_set = params.elements;
    for (const auto& basis : std_by_degree) {
        if (basis.empty()) continue;
        // Coefficient vectors in base-p counter order, least significant
        // digit on the first (smallest) standard monomial.
        std::vector<uint32_t> digits(basis.size(), 0);
        for (;;) {
            size_t pos = 0;
            while (pos < digits.size() && digits[pos] == ring.field.p - 1)
                digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];

            std::vector<Term> terms;
            for (size_t i = 0; i < basis.size(); ++i)
                if (digits[i] != 0) terms.push_back(Term{basis[i], digits[i]});
            Poly candidate = poly_normalize(std::move(terms), ring.field, order);

            candidate_set[slot] = candidate;
            HilbertSeries series = quotient_series(ring, candidate_set, order);
            if (series.is_polynomial()) hits.push_back(std::move(candidate));
        }
    }
    return hits;
}

} // namespace cohoc
