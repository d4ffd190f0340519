#include <doctest.h>

#include "cohoc/fixtures.hpp"
#include "cohoc/hilbert.hpp"
#include "test_util.hpp"

using namespace cohoc;
using testutil::el;
using testutil::ring;

namespace {

std::vector<Int> ints(std::initializer_list<long long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

HilbertSeries series_of(std::initializer_list<long long> num, std::vector<int64_t> den) {
    return {ip_make(std::vector<Int>(num.begin(), num.end())), std::move(den)};
}

} // namespace

TEST_CASE("integer polynomial arithmetic") {
    IntPoly a = ip_make({1, 2, 0, 0}); // trailing zeros trimmed
    CHECK(a.degree() == 1);
    CHECK(ip_make({}).is_zero());
    CHECK(ip_make({0, 0}).is_zero());

    IntPoly b = ip_one_minus_t(2);
    CHECK(b.c == ints({1, 0, -1}));
    CHECK(ip_equal(ip_add(a, b), ip_make({2, 2, -1})));
    CHECK(ip_sub(a, a).is_zero());
    CHECK(ip_equal(ip_mul(ip_one_minus_t(1), ip_make({1, 1})), ip_one_minus_t(2)));
    CHECK(ip_nonneg(ip_make({0, 3, 1})));
    CHECK_FALSE(ip_nonneg(ip_make({1, -1})));
    CHECK(ip_print(ip_make({1, 0, 2, -1})) == "1 + 2*t^2 - t^3");
}

TEST_CASE("division with remainder") {
    IntPoly a = ip_make({1, 0, -1}); // 1 - t^2
    IpDivMod dm = ip_divmod(a, ip_make({1, 1}));
    CHECK(ip_equal(dm.quot, ip_one_minus_t(1)));
    CHECK(dm.rem.is_zero());

    dm = ip_divmod(ip_make({1}), ip_one_minus_t(1));
    CHECK(dm.quot.is_zero());
    CHECK(ip_equal(dm.rem, ip_make({1})));

    // a = q*b + r on a fixed batch of dividends.
    IntPoly b = ip_make({1, -1, 2});
    for (IntPoly f : {ip_make({5, 3, -2, 1, 7}), ip_make({0, 0, 0, 1}), ip_make({2})}) {
        IpDivMod d = ip_divmod(f, b);
        CHECK(ip_equal(ip_add(ip_mul(d.quot, b), d.rem), f));
    }
}

TEST_CASE("canonical form cancels exact denominator factors") {
    HilbertSeries s = hs_canonical(series_of({1, 0, -1}, {1, 1})); // (1-t^2)/(1-t)^2
    CHECK(ip_equal(s.num, ip_make({1, 1})));
    CHECK(s.den == std::vector<int64_t>{1});

    // (1-t^2)/((1-t)(1-t^2)) = 1/(1-t); cancellation preserves the value.
    HilbertSeries p = hs_canonical(series_of({1, 0, -1}, {1, 2}));
    CHECK(hs_equal(p, series_of({1}, {1})));
    CHECK(p.num.degree() + static_cast<int64_t>(p.den.size()) < 3);

    // A series that is a polynomial always cancels down to one.
    HilbertSeries q = hs_canonical(series_of({1, 0, -1, -1, 0, 1}, {1, 2}));
    CHECK(q.is_polynomial());
    CHECK(ip_equal(q.num, ip_make({1, 1, 1}))); // (1-t)(1-t^2)(1+t+t^2) over (1-t)(1-t^2)
}

TEST_CASE("cross-multiplied equality ignores the representation") {
    HilbertSeries a = series_of({1, 0, -1}, {1, 1});
    HilbertSeries b = series_of({1, 1}, {1});
    CHECK(hs_equal(a, b));
    CHECK_FALSE(hs_equal(a, series_of({1}, {1})));
    CHECK(hs_equal(hs_mul_factor(b, 3), series_of({1, 1, 0, -1, -1}, {1})));
    CHECK(hs_equal(hs_sub(a, b), series_of({}, {})));
}

TEST_CASE("series print format") {
    CHECK(hs_print(series_of({1, 0, 2, 1}, {1, 2})) ==
          "(1 + 2*t^2 + t^3) / ((1-t)(1-t^2))");
    CHECK(hs_print(series_of({1, 1}, {})) == "1 + t");
}

TEST_CASE("monomial ideal series of the textbook quotients") {
    std::vector<GeneratorInfo> gens = {{"x", 1}, {"y", 1}};
    std::vector<int64_t> unit = {1, 1};

    MonomialIdeal empty;
    HilbertSeries free_ring = monomial_ideal_series(empty, gens);
    CHECK(hs_equal(free_ring, series_of({1}, {1, 1})));

    MonomialIdeal xy_ideal{{mono_make({1, 1}, unit)}};
    HilbertSeries xy = monomial_ideal_series(xy_ideal, gens);
    CHECK(hs_equal(xy, series_of({1, 0, -1}, {1, 1})));
    CHECK(expand(xy, 4) == ints({1, 2, 2, 2, 2}));

    MonomialIdeal squares_ideal{{mono_make({2, 0}, unit), mono_make({0, 2}, unit)}};
    HilbertSeries squares = monomial_ideal_series(squares_ideal, gens);
    CHECK(hs_equal(squares, series_of({1, 2, 1}, {})));
    HilbertSeries canon = hs_canonical(squares);
    CHECK(canon.is_polynomial());
    CHECK(ip_equal(canon.num, ip_make({1, 2, 1})));
}

TEST_CASE("poincare series of small quotients") {
    Presentation R = ring(2, {{"x", 1}}, {"x^3"});
    HilbertSeries s = hs_canonical(poincare_series(R));
    CHECK(s.is_polynomial());
    CHECK(ip_equal(s.num, ip_make({1, 1, 1})));

    Presentation Rw = ring(2, {{"x", 2}, {"y", 3}});
    CHECK(hs_equal(poincare_series(Rw), series_of({1}, {2, 3})));
}

TEST_CASE("order independence of the fixture series") {
    const Presentation& U = fixtures::s9_U();
    CHECK(hs_equal(poincare_series(U, OrderKind::degrevlex),
                   poincare_series(U, OrderKind::deglex)));
}

TEST_CASE("expansion of rational series") {
    CHECK(expand(series_of({1}, {1}), 3) == ints({1, 1, 1, 1}));
    CHECK(expand(series_of({1, 1}, {1}), 3) == ints({1, 2, 2, 2}));
    CHECK(expand(series_of({1, 1}, {}), 5) == ints({1, 1, 0, 0, 0, 0}));
    CHECK(expand(series_of({1}, {2, 3}), 6) == ints({1, 0, 1, 1, 1, 1, 2}));
}

TEST_CASE("fixture Hilbert functions match the frozen hand-checked values") {
    CHECK(expand(poincare_series(fixtures::s9_G()), 14) ==
          ints({1, 1, 2, 4, 6, 9, 14, 19, 25, 33, 42, 54, 67, 81, 99}));
    CHECK(expand(poincare_series(fixtures::s9_U()), 7) ==
          ints({1, 2, 5, 10, 16, 25, 38, 53}));
}

TEST_CASE("Macaulay consistency on the embedded rings") {
    for (const Presentation* Rp : {&fixtures::s9_G(), &fixtures::s9_U()}) {
        GroebnerBasis gb = groebner_basis(*Rp);
        std::vector<Int> dims = expand(poincare_series(*Rp), 10);
        for (int64_t d = 0; d <= 10; ++d)
            CHECK(dims[static_cast<size_t>(d)] ==
                  static_cast<int64_t>(standard_monomials(gb, d).size()));
    }
}

TEST_CASE("the published rational form of the order-384 series is reproduced") {
    HilbertSeries s = poincare_series(fixtures::s9_G());
    const fixtures::PrintedSeries& printed = fixtures::printed_series_G();
    IntPoly den = ip_make({1});
    for (int64_t d : s.den) den = ip_mul(den, ip_one_minus_t(d));
    CHECK(ip_equal(ip_mul(s.num, printed.den), ip_mul(printed.num, den)));
}

TEST_CASE("clearing parameter denominators") {
    ClearResult one = clear_parameters(series_of({1}, {1}), {1});
    CHECK(one.is_polynomial);
    CHECK(ip_equal(one.poly, ip_make({1})));

    ClearResult two = clear_parameters(series_of({1}, {1}), {2});
    CHECK(two.is_polynomial);
    CHECK(ip_equal(two.poly, ip_make({1, 1})));

    ClearResult bad = clear_parameters(series_of({1}, {1, 1}), {1});
    CHECK_FALSE(bad.is_polynomial);
    CHECK_FALSE(bad.remainder.is_zero());
    CHECK(bad.witness_degree >= 0);

    ClearResult printed = clear_parameters(poincare_series(fixtures::s9_G()), {4, 12, 7, 6});
    REQUIRE(printed.is_polynomial);
    CHECK(printed.poly.degree() == 25);
    CHECK(ip_equal(printed.poly, fixtures::printed_product_25()));
}
