#include <doctest.h>

#include <algorithm>

#include "cohoc/fixtures.hpp"
#include "cohoc/groebner.hpp"
#include "test_util.hpp"

using namespace cohoc;
using testutil::el;
using testutil::ring;

namespace {

bool same_elements(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.elements.size() != b.elements.size()) return false;
    for (size_t i = 0; i < a.elements.size(); ++i)
        if (!poly_equal(a.elements[i], b.elements[i])) return false;
    return true;
}

bool contains(const std::vector<Monomial>& v, const Monomial& m) {
    return std::find(v.begin(), v.end(), m) != v.end();
}

} // namespace

TEST_CASE("a monomial ideal is its own basis") {
    Presentation R = ring(2, {{"x", 1}, {"y", 1}}, {"x*y"});
    GroebnerBasis gb = groebner_basis(R);
    REQUIRE(gb.elements.size() == 1);
    CHECK(poly_equal(gb.elements[0], el(R, "x*y")));
    CHECK(normal_form(el(R, "x*y"), gb).is_zero());
    MonomialIdeal li = leading_ideal(gb);
    REQUIRE(li.gens.size() == 1);
    CHECK(li.gens[0] == mono_make({1, 1}, R.degrees));
}

TEST_CASE("the ideal (x^2+x*y, y^2) under degrevlex") {
    // The leading monomials x^2 and y^2 are coprime, so the lone S-pair
    // reduces to zero and the two generators already form the reduced basis
    // (stored ascending by leading monomial).
    Presentation R = ring(2, {{"x", 1}, {"y", 1}}, {"x^2+x*y", "y^2"});
    GroebnerBasis gb = groebner_basis(R);
    REQUIRE(gb.elements.size() == 2);
    CHECK(poly_equal(gb.elements[0], el(R, "y^2")));
    CHECK(poly_equal(gb.elements[1], el(R, "x^2+x*y")));

    MonomialIdeal li = leading_ideal(gb);
    REQUIRE(li.gens.size() == 2);
    CHECK(contains(li.gens, mono_make({2, 0}, R.degrees)));
    CHECK(contains(li.gens, mono_make({0, 2}, R.degrees)));

    // x*y^2 = x*(y^2) lies in the ideal even though it is not a basis element.
    CHECK(normal_form(el(R, "x*y^2"), gb).is_zero());
    CHECK(normal_form(el(R, "x*y^3"), gb).is_zero());
    // Quotient basis: 1; x, y; x*y.
    CHECK(standard_monomials(gb, 0).size() == 1);
    CHECK(standard_monomials(gb, 1).size() == 2);
    CHECK(standard_monomials(gb, 2).size() == 1);
    CHECK(standard_monomials(gb, 3).empty());
}

TEST_CASE("normal form performs single reductions") {
    Presentation R = ring(2, {{"x", 1}, {"y", 1}}, {"x^2+x*y"});
    GroebnerBasis gb = groebner_basis(R);
    Poly r = normal_form(el(R, "x^2"), gb);
    CHECK(poly_equal(r, el(R, "x*y")));
    CHECK(mono_cmp(r.lead().m, mono_make({2, 0}, R.degrees), OrderKind::degrevlex) < 0);
}

TEST_CASE("normal form is linear") {
    Presentation R = ring(3, {{"x", 2}, {"y", 2}}, {"x^2+2*y^2"});
    GroebnerBasis gb = groebner_basis(R);
    Poly f = el(R, "x^2*y"), g = el(R, "y^3+x^2*y");
    Poly lhs = normal_form(R.add(f, g), gb);
    Poly rhs = R.add(normal_form(f, gb), normal_form(g, gb));
    CHECK(poly_equal(lhs, rhs));
}

TEST_CASE("every embedded relation reduces to zero against its own basis") {
    for (const Presentation* Rp :
         {&fixtures::s9_G(), &fixtures::s9_U(), &fixtures::s9_S()}) {
        GroebnerBasis gb = groebner_basis(*Rp);
        for (const Poly& rel : Rp->relations) CHECK(normal_form(rel, gb).is_zero());
    }
}

TEST_CASE("basis elements are monic, reduced, and sorted") {
    Presentation R = fixtures::s9_U();
    GroebnerBasis gb = groebner_basis(R);
    MonomialIdeal li = leading_ideal(gb);
    for (size_t i = 0; i < gb.elements.size(); ++i) {
        const Poly& g = gb.elements[i];
        CHECK(g.lead().c == 1);
        // No leading monomial divides another's.
        for (size_t j = 0; j < gb.elements.size(); ++j)
            if (i != j) CHECK_FALSE(mono_divides(gb.elements[j].lead().m, g.lead().m));
        // Tails are standard: no leading monomial divides any tail monomial.
        for (size_t t = 1; t < g.terms.size(); ++t)
            for (const Monomial& lm : li.gens)
                CHECK_FALSE(mono_divides(lm, g.terms[t].m));
        if (i + 1 < gb.elements.size()) {
            const Poly& next = gb.elements[i + 1];
            bool ordered = g.lead().m.degree < next.lead().m.degree ||
                           (g.lead().m.degree == next.lead().m.degree &&
                            mono_cmp(g.lead().m, next.lead().m, gb.order) < 0);
            CHECK(ordered);
        }
    }
}

TEST_CASE("repeated runs produce identical bases") {
    Presentation R = fixtures::s9_U();
    CHECK(same_elements(groebner_basis(R), groebner_basis(R)));
    CHECK(same_elements(groebner_basis(R, {}, OrderKind::deglex),
                        groebner_basis(R, {}, OrderKind::deglex)));
}

TEST_CASE("extra generators extend the ideal") {
    Presentation R = ring(2, {{"x", 1}, {"y", 1}}, {"x*y"});
    GroebnerBasis gb = groebner_basis(R, {el(R, "x^2+y^2")});
    CHECK(normal_form(el(R, "x^2+y^2"), gb).is_zero());
    CHECK(normal_form(el(R, "x*y"), gb).is_zero());
    CHECK_FALSE(normal_form(el(R, "x^2"), gb).is_zero());
    // x * (x^2+y^2) = x^3 + x*y^2 = x^3 mod x*y, so x^3 and likewise y^4 land
    // in the ideal; the quotient is finite-dimensional.
    CHECK(normal_form(el(R, "x^3"), gb).is_zero());
    CHECK(normal_form(el(R, "y^4"), gb).is_zero());
}

TEST_CASE("standard monomials enumerate quotient bases") {
    Presentation R = ring(2, {{"x", 1}, {"y", 1}}, {"x*y"});
    GroebnerBasis gb = groebner_basis(R);
    std::vector<Monomial> d3 = standard_monomials(gb, 3);
    REQUIRE(d3.size() == 2);
    CHECK(contains(d3, mono_make({3, 0}, R.degrees)));
    CHECK(contains(d3, mono_make({0, 3}, R.degrees)));

    Presentation Rfree = ring(2, {{"x", 1}});
    GroebnerBasis gbf = groebner_basis(Rfree);
    std::vector<Monomial> d5 = standard_monomials(gbf, 5);
    REQUIRE(d5.size() == 1);
    CHECK(d5[0] == mono_make({5}, Rfree.degrees));
    CHECK(leading_ideal(gbf).gens.empty());

    const Presentation& G = fixtures::s9_G();
    GroebnerBasis gbG = groebner_basis(G);
    std::vector<Monomial> d1 = standard_monomials(gbG, 1);
    REQUIRE(d1.size() == 1);
    CHECK(print_monomial(d1[0], G) == "b_1_0");
}

TEST_CASE("monomials_of_degree lists a graded piece in ascending order") {
    std::vector<int64_t> unit = {1, 1};
    std::vector<Monomial> d2 = monomials_of_degree(unit, 2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == mono_make({0, 2}, unit)); // y^2 < x*y < x^2 in degrevlex
    CHECK(d2[1] == mono_make({1, 1}, unit));
    CHECK(d2[2] == mono_make({2, 0}, unit));

    std::vector<int64_t> weighted = {1, 2};
    std::vector<Monomial> w2 = monomials_of_degree(weighted, 2);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == mono_make({0, 1}, weighted));
    CHECK(w2[1] == mono_make({2, 0}, weighted));
}

TEST_CASE("antichain strips divisible generators") {
    std::vector<int64_t> unit = {1, 1};
    MonomialIdeal a = antichain({mono_make({2, 0}, unit), mono_make({3, 0}, unit),
                                 mono_make({0, 1}, unit), mono_make({2, 1}, unit)});
    REQUIRE(a.gens.size() == 2);
    CHECK(contains(a.gens, mono_make({2, 0}, unit)));
    CHECK(contains(a.gens, mono_make({0, 1}, unit)));
}

TEST_CASE("truncation contract") {
    Presentation R = fixtures::s9_U(); // relations up to degree 10
    int64_t max_rel = 0;
    for (const Poly& rel : R.relations) max_rel = std::max(max_rel, *homogeneous_degree(rel));
    CHECK_THROWS_AS(groebner_basis(R, {}, OrderKind::degrevlex, max_rel - 1),
                    TruncationTooSmall);

    GroebnerBasis partial = groebner_basis(R, {}, OrderKind::degrevlex, max_rel + 2);
    CHECK_FALSE(partial.complete());
    CHECK_THROWS_AS(leading_ideal(partial), TruncatedBasis);
    CHECK_THROWS_AS(standard_monomials(partial, max_rel + 3), DegreeExceedsTruncation);

    // Within the truncation degree the partial basis certifies the same
    // graded pieces as the complete one.
    GroebnerBasis full = groebner_basis(R);
    for (int64_t d = 0; d <= max_rel + 2; ++d)
        CHECK(standard_monomials(partial, d).size() == standard_monomials(full, d).size());

    Poly deep = el(R, "b_1_0^20");
    CHECK_THROWS_AS(normal_form(deep, partial), DegreeExceedsTruncation);
    CHECK_NOTHROW(normal_form(deep, full));
}
