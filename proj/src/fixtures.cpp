#include "cohoc/fixtures.hpp"

#include "cohoc/errors.hpp"
#include "cohoc/parser.hpp"

namespace cohoc {
namespace fixtures {

namespace {

Presentation build_G() {
    return make_presentation(
        2,
        {{"b_1_0", 1},
         {"b_2_0", 2},
         {"b_3_1", 3},
         {"b_3_0", 3},
         {"c_4_0", 4},
         {"b_5_8", 5},
         {"b_6_0", 6},
         {"b_7_17", 7}},
        std::vector<std::string>{
            "b_3_0*b_3_1+b_1_0*b_5_8+b_1_0^3*b_3_0+b_2_0*b_1_0*b_3_1+c_4_0*b_1_0^2",
            "b_6_0*b_1_0",
            "b_1_0*b_7_17",
            "b_3_1*b_5_8+b_1_0^2*b_3_0^2+b_1_0^3*b_5_8+b_1_0^5*b_3_0+b_2_0*b_1_0*b_5_8"
            "+b_2_0*b_1_0^3*b_3_1+c_4_0*b_1_0*b_3_1+c_4_0*b_1_0*b_3_0+c_4_0*b_1_0^4",
            "b_2_0*b_7_17",
            "b_6_0*b_3_1",
            "b_3_0*b_7_17",
            "b_3_1*b_7_17",
            "b_5_8^2+b_1_0*b_3_0^3+b_1_0^4*b_3_0^2+b_2_0*b_3_0*b_5_8+b_2_0*b_1_0^2*b_3_0^2"
            "+b_2_0^2*b_1_0*b_5_8+b_2_0^2*b_6_0+c_4_0*b_3_0^2+b_2_0*c_4_0*b_1_0*b_3_0"
            "+c_4_0^2*b_1_0^2",
            "b_5_8*b_7_17",
        });
}

Presentation build_U() {
    return make_presentation(
        2,
        {{"b_1_1", 1},
         {"b_1_0", 1},
         {"b_2_4", 2},
         {"b_2_3", 2},
         {"b_3_9", 3},
         {"b_3_1", 3},
         {"b_3_0", 3},
         {"c_4_15", 4}},
        std::vector<std::string>{
            "b_2_3*b_1_0",
            "b_1_0*b_3_9",
            "b_1_1*b_3_0+b_1_0*b_3_1",
            "b_1_1*b_3_9",
            "b_2_3*b_3_0",
            "b_2_4*b_3_9",
            "b_3_0*b_3_1+b_2_4*b_1_0*b_3_1+c_4_15*b_1_0*b_1_1",
            "b_3_0*b_3_9",
            "b_3_1^2+b_2_4*b_1_1*b_3_1+b_2_3*b_2_4^2+c_4_15*b_1_1^2",
            "b_3_1*b_3_9",
        });
}

Presentation build_S() {
    return make_presentation(
        2,
        {{"b_1_0", 1},
         {"b_1_1", 1},
         {"b_1_2", 1},
         {"b_2_4", 2},
         {"b_2_5", 2},
         {"b_2_6", 2},
         {"b_3_11", 3},
         {"b_3_12", 3},
         {"c_4_21", 4}},
        std::vector<std::string>{
            "b_1_0*b_1_1",
            "b_1_0*b_1_2",
            "b_2_4*b_1_2",
            "b_2_5*b_1_1",
            "b_2_6*b_1_0",
            "b_2_4*b_2_5",
            "b_1_0*b_3_11",
            "b_1_0*b_3_12",
            "b_1_2*b_3_11+b_1_1*b_3_12",
            "b_2_5*b_3_11",
            "b_2_4*b_3_12",
            "b_3_12^2+b_2_6*b_1_2*b_3_12+b_2_5*b_2_6^2+c_4_21*b_1_2^2",
            "b_3_11*b_3_12+b_2_6*b_1_1*b_3_12+c_4_21*b_1_1*b_1_2",
            "b_3_11^2+b_2_6*b_1_1*b_3_11+b_2_4*b_2_6^2+c_4_21*b_1_1^2",
        });
}

RingMorphism build_res_G_to_U() {
    RingMorphism m = make_morphism(
        s9_G(), s9_U(),
        std::vector<std::string>{
            "b_1_0",
            "b_2_4",
            "b_3_0+b_1_0*b_1_1^2+b_1_0^2*b_1_1",
            "b_3_1+b_1_0*b_1_1^2+b_1_0^2*b_1_1+b_2_4*b_1_1",
            "b_1_1^4+b_1_0^2*b_1_1^2+b_2_4*b_1_1^2+b_2_4*b_1_0*b_1_1+b_2_3*b_2_4+b_2_3^2"
            "+c_4_15",
            "b_1_1^2*b_3_1+b_1_0^3*b_1_1^2+b_1_0^4*b_1_1+b_2_4*b_1_1^3+b_2_3*b_3_1"
            "+c_4_15*b_1_1+c_4_15*b_1_0",
            "b_3_9^2+b_2_3*b_1_1*b_3_1+b_2_3*b_2_4*b_1_1^2+b_2_3^2*b_1_1^2+b_2_3*c_4_15",
            "c_4_15*b_3_9",
        });
    validate_morphism(m);
    return m;
}

RingMorphism build_res_G_to_S() {
    RingMorphism m = make_morphism(
        s9_G(), s9_S(),
        std::vector<std::string>{
            "b_1_2",
            "b_2_6+b_2_5",
            "b_3_12+b_1_1*b_1_2^2+b_1_1^2*b_1_2+b_2_5*b_1_2",
            "b_3_11+b_1_1*b_1_2^2+b_1_1^2*b_1_2+b_2_6*b_1_1+b_2_5*b_1_0",
            "b_1_1^2*b_1_2^2+b_1_1^4+b_1_0^4+b_2_6*b_1_1*b_1_2+b_2_6*b_1_1^2+b_2_5*b_1_0^2"
            "+b_2_4*b_2_6+b_2_4^2+c_4_21",
            "b_1_1*b_1_2^4+b_1_1^2*b_3_11+b_1_1^2*b_1_2^3+b_2_6*b_1_1^3+b_2_5*b_1_0^3"
            "+b_2_4*b_3_11+c_4_21*b_1_2+c_4_21*b_1_1",
            "b_2_4*b_1_1*b_3_11+b_2_4*b_2_6*b_1_1^2+b_2_4^2*b_1_1^2+b_2_4^2*b_1_0^2"
            "+c_4_21*b_1_0^2+b_2_4*c_4_21",
            "b_2_4*c_4_21*b_1_0",
        });
    validate_morphism(m);
    return m;
}

const char* const kZeta[4] = {
    // degree 8
    "b_3_0*b_5_8+b_1_0^2*b_3_1^2+b_1_0^2*b_3_0^2+b_1_0^3*b_5_8+b_1_0^5*b_3_0+b_1_0^8"
    "+b_2_0*b_1_0^3*b_3_1+b_2_0^4+c_4_0*b_1_0*b_3_1+c_4_0*b_1_0*b_3_0+c_4_0*b_1_0^4"
    "+c_4_0^2",
    // degree 12
    "b_3_1^4+b_3_0^4+b_1_0^4*b_3_0*b_5_8+b_1_0^6*b_3_1^2+b_1_0^6*b_3_0^2+b_1_0^7*b_5_8"
    "+b_1_0^9*b_3_0+b_6_0*b_3_0^2+b_6_0^2+b_2_0*b_1_0*b_3_0^3+b_2_0*b_1_0^4*b_3_1^2"
    "+b_2_0*b_1_0^5*b_5_8+b_2_0*b_1_0^7*b_3_1+b_2_0^2*b_1_0^2*b_3_1^2+b_2_0^2*b_1_0^5*b_3_0"
    "+b_2_0^3*b_1_0*b_5_8+b_2_0^3*b_1_0^3*b_3_1+b_2_0^3*b_6_0+b_2_0^4*b_1_0^4"
    "+c_4_0*b_3_0*b_5_8+c_4_0*b_1_0^2*b_3_1^2+c_4_0*b_1_0^2*b_3_0^2+c_4_0*b_1_0^3*b_5_8"
    "+c_4_0*b_1_0^5*b_3_1+c_4_0*b_1_0^5*b_3_0+c_4_0*b_1_0^8+b_2_0*c_4_0*b_3_0^2"
    "+b_2_0*c_4_0*b_1_0^3*b_3_1+b_2_0*c_4_0*b_1_0^3*b_3_0+b_2_0^2*c_4_0*b_1_0*b_3_1"
    "+b_2_0^2*c_4_0*b_1_0^4+c_4_0^2*b_1_0*b_3_1+c_4_0^2*b_1_0*b_3_0+c_4_0^2*b_1_0^4"
    "+b_2_0*c_4_0^2*b_1_0^2+b_2_0^2*c_4_0^2",
    // degree 14
    "b_7_17^2+b_3_0^3*b_5_8+b_1_0^2*b_3_1^4+b_1_0^2*b_3_0^4+b_1_0^3*b_3_0^2*b_5_8"
    "+b_6_0*b_3_0*b_5_8+b_2_0*b_1_0^3*b_3_1^3+b_2_0*b_1_0^3*b_3_0^3"
    "+b_2_0*b_1_0^4*b_3_0*b_5_8+b_2_0*b_1_0^6*b_3_1^2+b_2_0*b_1_0^9*b_3_0"
    "+b_2_0*b_6_0*b_3_0^2+b_2_0^2*b_1_0*b_3_0^3+b_2_0^2*b_1_0^4*b_3_1^2"
    "+b_2_0^2*b_1_0^4*b_3_0^2+b_2_0^2*b_1_0^7*b_3_1+b_2_0^3*b_3_0*b_5_8"
    "+b_2_0^3*b_1_0^2*b_3_0^2+b_2_0^3*b_1_0^3*b_5_8+b_2_0^4*b_1_0*b_5_8+b_2_0^4*b_6_0"
    "+c_4_0*b_1_0*b_3_1^3+c_4_0*b_1_0^4*b_3_1^2+c_4_0*b_1_0^4*b_3_0^2+c_4_0*b_1_0^7*b_3_0"
    "+b_2_0*c_4_0*b_1_0^2*b_3_1^2+b_2_0*c_4_0*b_1_0^2*b_3_0^2+b_2_0*c_4_0*b_1_0^3*b_5_8"
    "+b_2_0*c_4_0*b_1_0^5*b_3_1+b_2_0*c_4_0*b_1_0^5*b_3_0+b_2_0*c_4_0*b_1_0^8"
    "+b_2_0^2*c_4_0*b_3_0^2+b_2_0^2*c_4_0*b_1_0*b_5_8+b_2_0^2*c_4_0*b_1_0^3*b_3_1"
    "+b_2_0^2*c_4_0*b_6_0+b_2_0^3*c_4_0*b_1_0*b_3_0+c_4_0^2*b_3_1^2+c_4_0^2*b_1_0^6"
    "+b_2_0*c_4_0^2*b_1_0*b_3_1+b_2_0*c_4_0^2*b_1_0^4+c_4_0^3*b_1_0^2",
    // degree 15
    "b_1_0*b_3_0^3*b_5_8+b_1_0^4*b_3_0^2*b_5_8+b_6_0*b_3_0^3+b_2_0*b_1_0^4*b_3_1^3"
    "+b_2_0*b_1_0^5*b_3_0*b_5_8+b_2_0*b_1_0^8*b_5_8+b_2_0*b_1_0^10*b_3_0"
    "+b_2_0^2*b_1_0^2*b_3_0^3+b_2_0^2*b_1_0^5*b_3_0^2+b_2_0^2*b_1_0^8*b_3_1"
    "+b_2_0^2*b_1_0^8*b_3_0+b_2_0^2*b_6_0*b_5_8+b_2_0^3*b_1_0*b_3_0*b_5_8"
    "+b_2_0^3*b_1_0^3*b_3_0^2+b_2_0^3*b_1_0^6*b_3_1+b_2_0^4*b_1_0^2*b_5_8"
    "+c_4_0*b_1_0^2*b_3_1^3+c_4_0*b_1_0^3*b_3_0*b_5_8+c_4_0*b_1_0^6*b_5_8"
    "+c_4_0*b_1_0^8*b_3_0+b_2_0*c_4_0*b_1_0^3*b_3_1^2+b_2_0*c_4_0*b_1_0^4*b_5_8"
    "+b_2_0*c_4_0*b_1_0^9+b_2_0^2*c_4_0*b_1_0*b_3_0^2+b_2_0^2*c_4_0*b_1_0^2*b_5_8"
    "+b_2_0^2*c_4_0*b_1_0^7+b_2_0^3*c_4_0*b_1_0^2*b_3_0+c_4_0^2*b_1_0*b_3_1^2"
    "+c_4_0^2*b_1_0^4*b_3_1+c_4_0^2*b_1_0^4*b_3_0+c_4_0^2*b_1_0^7+b_2_0*c_4_0^2*b_1_0^2*b_3_1"
    "+b_2_0^2*c_4_0^2*b_1_0^3+c_4_0^3*b_1_0^3",
};

IntPoly signed_poly(std::vector<int64_t> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return ip_make(std::move(c));
}

} // namespace

const Presentation& s9_G() {
    static const Presentation p = build_G();
    return p;
}

const Presentation& s9_U() {
    static const Presentation p = build_U();
    return p;
}

const Presentation& s9_S() {
    static const Presentation p = build_S();
    return p;
}

const RingMorphism& res_G_to_U() {
    static const RingMorphism m = build_res_G_to_U();
    return m;
}

const RingMorphism& res_G_to_S() {
    static const RingMorphism m = build_res_G_to_S();
    return m;
}

Poly zeta(int i) {
    if (i < 1 || i > 4) throw Error("zeta index must be 1..4");
    return parse_element(kZeta[i - 1], s9_G());
}

Poly zt1() { return parse_element("b_2_0^2+c_4_0", s9_G()); }

Poly zt4() { return parse_element("b_1_0^6+b_6_0", s9_G()); }

ParameterSet dickson_params() {
    return make_parameter_set(s9_G(), {zeta(1), zeta(2), zeta(3), zeta(4)});
}

ParameterSet small_params() {
    return make_parameter_set(s9_G(), {zeta(1), zeta(2), zeta(3), zt4()});
}

ParameterSet symonds_params() {
    return make_parameter_set(s9_G(), {zt1(), zeta(2), zeta(3), zt4()});
}

ParameterSet existence_fixed() {
    return make_parameter_set(s9_G(), {zt1(), zeta(2), zt4()});
}

int64_t depth_lower_bound() { return 3; }

const PrintedSeries& printed_series_G() {
    static const PrintedSeries s = {
        signed_poly({1, 0, 2, 1, 3, 3, 4, 4, 4, 3, 3, 3, 1, 2, 0, 1}),
        signed_poly({1, -1, 1, -2, 1, -1, 0, 0, 0, 1, 1, 0, 0, 0, -1, 1, -2, 1, -1, 1}),
    };
    return s;
}

const IntPoly& printed_product_25() {
    static const IntPoly p = signed_poly({1,  1,  2,  4,  5,  8,  11, 13, 16,
                                          18, 19, 22, 21, 21, 22, 19, 18, 16,
                                          12, 10, 8,  5,  4,  2,  1,  1});
    return p;
}

ComparisonBundle comparison_bundle(int64_t n_lo, int64_t n_hi) {
    ComparisonBundle b;
    b.ring = &s9_G();
    b.benson_dickson = dickson_params();
    b.benson_small = small_params();
    b.symonds_params = symonds_params();
    b.rel_param_degrees = {4, 12, 7, 6};
    b.depth_lower_bound = depth_lower_bound();
    b.morphism = &res_G_to_U();
    // The printed image lists fail validation (README); the quotient
    // computation behind gendeg is still well defined on them.
    b.allow_unvalidated = true;
    b.n_lo = n_lo;
    b.n_hi = n_hi;
    return b;
}

const Presentation* find_ring(const std::string& name) {
    if (name == "s9_G") return &s9_G();
    if (name == "s9_U") return &s9_U();
    if (name == "s9_S") return &s9_S();
    return nullptr;
}

const RingMorphism* find_morphism(const std::string& name) {
    if (name == "res_G_to_U") return &res_G_to_U();
    if (name == "res_G_to_S") return &res_G_to_S();
    return nullptr;
}

const std::vector<std::string>& ring_names() {
    static const std::vector<std::string> names = {"s9_G", "s9_U", "s9_S"};
    return names;
}

const std::vector<std::string>& morphism_names() {
    static const std::vector<std::string> names = {"res_G_to_U", "res_G_to_S"};
    return names;
}

} // namespace fixtures
} // namespace cohoc
