#include "cohoc/presentation.hpp"

#include <set>

#include "cohoc/parser.hpp"

namespace cohoc {

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i);
    return -1;
}

static void check_width(const Presentation& R, const Poly& f) {
    for (const Term& t : f.terms)
        if (t.m.exps.size() != R.ngens())
            throw PresentationMismatch("polynomial does not belong to this presentation");
}

Poly Presentation::add(const Poly& a, const Poly& b, OrderKind order) const {
    check_width(*this, a);
    check_width(*this, b);
    return poly_add(a, b, field, order);
}

Poly Presentation::mul(const Poly& a, const Poly& b, OrderKind order) const {
    check_width(*this, a);
    check_width(*this, b);
    return poly_mul(a, b, field, degrees, order);
}

Presentation make_presentation(uint32_t p, std::vector<GeneratorInfo> gens,
                               std::vector<Poly> relations) {
    Presentation R{Field(p), std::move(gens), {}, {}};
    std::set<std::string> seen;
    for (const GeneratorInfo& g : R.gens) {
        if (!seen.insert(g.name).second)
            throw DuplicateGenerator("duplicate generator name: " + g.name);
        if (g.degree < 1)
            throw Error("generator " + g.name + " must have degree >= 1");
        if (p != 2 && g.degree % 2 != 0)
            throw OddGeneratorAtOddPrime("generator " + g.name +
                                         " has odd degree at odd characteristic");
        R.degrees.push_back(g.degree);
    }
    for (const Poly& rel : relations) {
        check_width(R, rel);
        auto d = homogeneous_degree(rel);
        if (!d)
            throw InhomogeneousRelation("relation is not homogeneous");
        if (!rel.is_zero() && *d < 2)
            throw InhomogeneousRelation("relation degree must be >= 2");
    }
    std::erase_if(relations, [](const Poly& f) { return f.is_zero(); });
    R.relations = std::move(relations);
    return R;
}

Presentation make_presentation(uint32_t p, std::vector<GeneratorInfo> gens,
                               const std::vector<std::string>& relation_texts) {
    Presentation stub{Field(p), gens, {}, {}};
    for (const GeneratorInfo& g : gens) stub.degrees.push_back(g.degree);
    std::vector<Poly> rels;
    rels.reserve(relation_texts.size());
    for (const std::string& text : relation_texts)
        rels.push_back(parse_element(text, stub));
    return make_presentation(p, std::move(gens), std::move(rels));
}

} // namespace cohoc
