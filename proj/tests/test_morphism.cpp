#include <doctest.h>

#include <string>
#include <vector>

#include "cohoc/fixtures.hpp"
#include "cohoc/morphism.hpp"
#include "cohoc/parser.hpp"
#include "test_util.hpp"

using namespace cohoc;
using testutil::el;
using testutil::ring;

namespace {

RingMorphism identity_of(const Presentation& R) {
    std::vector<std::string> images;
    for (const GeneratorInfo& g : R.gens) images.push_back(g.name);
    return make_morphism(R, R, images);
}

} // namespace

TEST_CASE("identity morphisms validate and act as normal form") {
    const Presentation& G = fixtures::s9_G();
    RingMorphism id = identity_of(G);
    CHECK(validate_morphism(id));
    CHECK(id.validated);

    CHECK(apply(id, G.relations[0]).is_zero());
    GroebnerBasis gb = groebner_basis(G);
    Poly f = el(G, "b_1_0^4+b_2_0^2");
    CHECK(poly_equal(apply(id, f), normal_form(f, gb)));

    GendegReport g = gendeg(id);
    CHECK(g.finite);
    CHECK(g.gendeg == 0);
    CHECK(g.hilbert == std::vector<Int>{1});
    CHECK(g.module_generator_degrees == std::vector<int64_t>{0});
}

TEST_CASE("subring inclusion k[x^2] into k[x]") {
    Presentation S = ring(2, {{"u", 2}});
    Presentation T = ring(2, {{"x", 1}});
    RingMorphism m = make_morphism(S, T, {"x^2"});
    CHECK(validate_morphism(m));
    CHECK(poly_equal(apply(m, el(S, "u^3")), el(T, "x^6")));

    GendegReport g = gendeg(m);
    CHECK(g.finite);
    CHECK(g.gendeg == 1); // module generators 1 and x
    CHECK(g.module_generator_degrees == std::vector<int64_t>{0, 1});
    CHECK(g.hilbert == std::vector<Int>{1, 1});
}

TEST_CASE("image lists that break a relation are rejected with its index") {
    Presentation S = ring(2, {{"x", 1}, {"y", 1}}, {"x*y"});
    Presentation T = ring(2, {{"a", 1}});
    // x, y -> a, a maps the relation x*y to a^2 != 0.
    RingMorphism m = make_morphism(S, T, {"a", "a"});
    CHECK_FALSE(validate_morphism(m));
    CHECK(m.first_failing_relation == 1);

    // x, y -> a, 0 kills the relation.
    RingMorphism z = make_morphism(S, T, {"a", "0"});
    CHECK(validate_morphism(z));
}

TEST_CASE("the embedded restriction image lists do not validate") {
    // The printed generator-image lists are irreconcilable with the printed
    // source presentation; the recorded verdict is honest and pinned here.
    const RingMorphism& u = fixtures::res_G_to_U();
    CHECK_FALSE(u.validated);
    CHECK(u.first_failing_relation == 1);
    const RingMorphism& s = fixtures::res_G_to_S();
    CHECK_FALSE(s.validated);
    CHECK(s.first_failing_relation == 1);
}

TEST_CASE("perturbing one embedded image still fails validation") {
    const Presentation& G = fixtures::s9_G();
    const RingMorphism& u = fixtures::res_G_to_U();
    std::vector<Poly> images = u.images;
    for (size_t i = 0; i < G.ngens(); ++i)
        if (G.gens[i].degree == 5) images[i] = Poly{};
    RingMorphism m = make_morphism(G, *u.target, images);
    CHECK_FALSE(validate_morphism(m));
    CHECK(m.first_failing_relation >= 1);
}

TEST_CASE("apply is additive and multiplicative") {
    Presentation S = ring(2, {{"u", 2}, {"v", 4}});
    Presentation T = ring(2, {{"x", 1}, {"y", 1}}, {"x*y"});
    RingMorphism m = make_morphism(S, T, {"x^2+y^2", "y^4"});
    REQUIRE(validate_morphism(m));
    Poly f = el(S, "u^2+v"), g = el(S, "u*v+u^3");
    CHECK(poly_equal(apply(m, S.add(f, g)), T.add(apply(m, f), apply(m, g))));
    Poly prod = apply(m, S.mul(f, g));
    GroebnerBasis gb = groebner_basis(T);
    CHECK(poly_equal(prod, normal_form(T.mul(apply(m, f), apply(m, g)), gb)));

    Poly b10 = el(fixtures::s9_G(), "b_1_0");
    Poly image = apply(fixtures::res_G_to_U(), b10);
    CHECK(print_element(image, fixtures::s9_U()) == "b_1_0");
}

TEST_CASE("construction checks image shape") {
    Presentation S = ring(2, {{"u", 2}});
    Presentation T = ring(2, {{"x", 1}});
    CHECK_THROWS_AS(make_morphism(S, T, std::vector<std::string>{}), DegreeMismatch);
    CHECK_THROWS_AS(make_morphism(S, T, {"x"}), DegreeMismatch);     // degree 1 != 2
    CHECK_THROWS_AS(make_morphism(S, T, {"x^2+x"}), DegreeMismatch); // inhomogeneous
    CHECK_NOTHROW(make_morphism(S, T, {"0"}));                       // zero image is fine
}

TEST_CASE("gendeg requires validation unless explicitly waived") {
    const RingMorphism& u = fixtures::res_G_to_U();
    CHECK_THROWS_AS(gendeg(u), UnvalidatedMorphism);

    GendegReport g = gendeg(u, /*allow_unvalidated=*/true);
    CHECK(g.finite);
    CHECK(g.gendeg == 8);
    CHECK(g.hilbert == std::vector<Int>{1, 1, 2, 3, 3, 3, 3, 1, 2});
    REQUIRE(!g.module_generator_degrees.empty());
    CHECK(g.module_generator_degrees.front() == 0);
    CHECK(g.module_generator_degrees.back() == 8);
    CHECK(g.module_generator_degrees.size() == 19); // sum of the quotient dimensions
}

TEST_CASE("gendeg detects non-finitely-generated targets") {
    Presentation S = ring(2, {{"u", 1}});
    Presentation T = ring(2, {{"x", 1}, {"y", 1}});
    RingMorphism m = make_morphism(S, T, {"x"});
    REQUIRE(validate_morphism(m));
    GendegReport g = gendeg(m);
    CHECK_FALSE(g.finite);
    CHECK(g.gendeg == -1);
    CHECK(g.offending_generator == 1); // unbounded along y
}

TEST_CASE("gendeg ignores image changes inside the ideal of the others") {
    Presentation S = ring(2, {{"u", 1}, {"v", 2}});
    Presentation T = ring(2, {{"x", 1}, {"y", 1}}, {"y^3"});
    RingMorphism a = make_morphism(S, T, {"x", "y^2"});
    RingMorphism b = make_morphism(S, T, {"x", "y^2+x^2"}); // differs by x*(x) in <x>
    REQUIRE(validate_morphism(a));
    REQUIRE(validate_morphism(b));
    GendegReport ga = gendeg(a), gb = gendeg(b);
    CHECK(ga.finite == gb.finite);
    CHECK(ga.gendeg == gb.gendeg);
    CHECK(ga.hilbert == gb.hilbert);
}
