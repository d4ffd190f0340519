#include "cohoc/morphism.hpp"

#include <map>

#include "cohoc/errors.hpp"
#include "cohoc/parser.hpp"

namespace cohoc {

RingMorphism make_morphism(const Presentation& source, const Presentation& target,
                           std::vector<Poly> images) {
    if (images.size() != source.ngens())
        throw DegreeMismatch("morphism needs " + std::to_string(source.ngens()) +
                             " images, got " + std::to_string(images.size()));
    for (size_t i = 0; i < images.size(); ++i) {
        auto d = homogeneous_degree(images[i]);
        if (!d)
            throw DegreeMismatch("image of " + source.gens[i].name + " is not homogeneous");
        if (*d >= 0 && *d != source.gens[i].degree)
            throw DegreeMismatch("image of " + source.gens[i].name + " has degree " +
                                 std::to_string(*d) + ", expected " +
                                 std::to_string(source.gens[i].degree));
        for (const Term& t : images[i].terms)
            if (t.m.exps.size() != target.ngens())
                throw PresentationMismatch("image of " + source.gens[i].name +
                                           " is not a target element");
    }
    RingMorphism m;
    m.source = &source;
    m.target = &target;
    m.images = std::move(images);
    return m;
}

RingMorphism make_morphism(const Presentation& source, const Presentation& target,
                           const std::vector<std::string>& image_exprs) {
    std::vector<Poly> images;
    images.reserve(image_exprs.size());
    for (const std::string& e : image_exprs) images.push_back(parse_element(e, target));
    return make_morphism(source, target, std::move(images));
}

namespace {

// Generator-wise substitution; the result is not reduced.
Poly substitute(const RingMorphism& m, const Poly& f, OrderKind order) {
    const Presentation& tgt = *m.target;
    // Cache image powers per generator; exponents repeat across terms.
    std::vector<std::map<uint32_t, Poly>> powers(m.images.size());

    Poly acc;
    for (const Term& t : f.terms) {
        if (t.m.exps.size() != m.images.size())
            throw PresentationMismatch("element does not live in the morphism source");
        Poly prod = poly_normalize({Term{mono_one(tgt.ngens()), t.c}}, tgt.field, order);
        for (size_t i = 0; i < t.m.exps.size() && !prod.is_zero(); ++i) {
            uint32_t e = t.m.exps[i];
            if (e == 0) continue;
            auto it = powers[i].find(e);
            if (it == powers[i].end())
                it = powers[i].emplace(e, poly_pow(m.images[i], e, tgt.field, tgt.degrees,
                                                   order)).first;
            prod = poly_mul(prod, it->second, tgt.field, tgt.degrees, order);
        }
        acc = poly_add(acc, prod, tgt.field, order);
    }
    return acc;
}

} // namespace

Poly apply(const RingMorphism& m, const Poly& f, OrderKind order) {
    Poly raw = substitute(m, f, order);
    if (m.target->relations.empty() || raw.is_zero()) return raw;
    GroebnerBasis gb = groebner_basis(*m.target, {}, order);
    return normal_form(raw, gb);
}

bool validate_morphism(RingMorphism& m, OrderKind order) {
    GroebnerBasis gb = groebner_basis(*m.target, {}, order);
    m.validated = true;
    m.first_failing_relation = -1;
    for (size_t k = 0; k < m.source->relations.size(); ++k) {
        Poly image = substitute(m, m.source->relations[k], order);
        if (!normal_form(image, gb).is_zero()) {
            m.validated = false;
            m.first_failing_relation = static_cast<int>(k) + 1;
            return false;
        }
    }
    return true;
}

GendegReport gendeg(const RingMorphism& m, bool allow_unvalidated, OrderKind order) {
    if (!m.validated && !allow_unvalidated)
        throw UnvalidatedMorphism("gendeg needs a validated morphism");

    std::vector<Poly> extra;
    for (const Poly& f : m.images)
        if (!f.is_zero()) extra.push_back(f);

    const Presentation& tgt = *m.target;
    GroebnerBasis gb = groebner_basis(tgt, extra, order);
    MonomialIdeal li = leading_ideal(gb);
    HilbertSeries series = monomial_ideal_series(li, tgt.gens);

    GendegReport out;
    out.finite = series.is_polynomial();
    out.gendeg = -1;
    out.offending_generator = -1;
    if (!out.finite) {
        for (size_t i = 0; i < tgt.ngens() && out.offending_generator < 0; ++i) {
            bool pure = false;
            for (const Monomial& mm : li.gens) {
                bool only_i = mm.exps[i] > 0;
                for (size_t j = 0; only_i && j < tgt.ngens(); ++j)
                    if (j != i && mm.exps[j] > 0) only_i = false;
                if (only_i) { pure = true; break; }
            }
            if (!pure) out.offending_generator = static_cast<int>(i);
        }
        return out;
    }

    out.gendeg = std::max<int64_t>(series.num.degree(), 0);
    out.hilbert = expand(series, out.gendeg);
    for (int64_t d = 0; d <= out.gendeg; ++d)
        for (size_t k = 0; k < standard_monomials(gb, d).size(); ++k)
            out.module_generator_degrees.push_back(d);
    return out;
}

} // namespace cohoc
