#pragma once

#include <string>
#include <vector>

#include "cohoc/hilbert.hpp"

namespace cohoc {

// Degree-preserving ring homomorphism given by one homogeneous target image
// per source generator.  Use after validation: a generator-image list only
// defines a homomorphism when every source relation maps to zero.
struct RingMorphism {
    const Presentation* source;
    const Presentation* target;
    std::vector<Poly> images;
    bool validated = false;
    int first_failing_relation = -1; // 1-based, set by validate_morphism
};

// Checks image count and degrees (zero images are allowed in any degree).
RingMorphism make_morphism(const Presentation& source, const Presentation& target,
                           std::vector<Poly> images);
RingMorphism make_morphism(const Presentation& source, const Presentation& target,
                           const std::vector<std::string>& image_exprs);
inline RingMorphism make_morphism(const Presentation& source, const Presentation& target,
                                  std::initializer_list<const char*> image_exprs) {
    return make_morphism(
        source, target, std::vector<std::string>(image_exprs.begin(), image_exprs.end()));
}

// True iff every source relation, with generators substituted by their
// images, reduces to zero in the target.  Records the verdict on m.
bool validate_morphism(RingMorphism& m, OrderKind order = OrderKind::degrevlex);

// Substitution followed by target normal form.
Poly apply(const RingMorphism& m, const Poly& f, OrderKind order = OrderKind::degrevlex);

struct GendegReport {
    bool finite;
    int64_t gendeg;          // top nonzero degree of target/<images>, -1 when infinite
    std::vector<Int> hilbert; // quotient Hilbert function, degrees 0..gendeg
    std::vector<int64_t> module_generator_degrees; // standard-monomial degrees, ascending
    int offending_generator; // target generator with unbounded powers, -1 when finite
};

// Generation degree of the target as a module over the image subring: by
// graded Nakayama this is the top nonzero degree of the quotient by the
// ideal of positive-degree images.
GendegReport gendeg(const RingMorphism& m, bool allow_unvalidated = false,
                    OrderKind order = OrderKind::degrevlex);

} // namespace cohoc
