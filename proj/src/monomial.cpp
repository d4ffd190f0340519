#include "cohoc/monomial.hpp"

#include <limits>

namespace cohoc {

Monomial mono_one(size_t ngens) {
    return Monomial{std::vector<uint32_t>(ngens, 0), 0};
}

Monomial mono_make(std::vector<uint32_t> exps, const std::vector<int64_t>& gen_degrees) {
    Monomial m{std::move(exps), 0};
    for (size_t i = 0; i < m.exps.size(); ++i)
        m.degree += int64_t(m.exps[i]) * gen_degrees[i];
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r{a.exps, a.degree + b.degree};
    for (size_t i = 0; i < r.exps.size(); ++i) {
        uint64_t e = uint64_t(r.exps[i]) + b.exps[i];
        if (e > std::numeric_limits<uint32_t>::max())
            throw ExponentOverflow("monomial exponent exceeds 2^32-1");
        r.exps[i] = static_cast<uint32_t>(e);
    }
    return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r{b.exps, b.degree - a.degree};
    for (size_t i = 0; i < r.exps.size(); ++i)
        r.exps[i] -= a.exps[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int64_t>& gen_degrees) {
    Monomial r{a.exps, 0};
    for (size_t i = 0; i < r.exps.size(); ++i) {
        if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
        r.degree += int64_t(r.exps[i]) * gen_degrees[i];
    }
    return r;
}

int mono_cmp(const Monomial& a, const Monomial& b, OrderKind order) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    if (order == OrderKind::deglex) {
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
        return 0;
    }
    // degrevlex: at equal degree the monomial with the smaller exponent at the
    // last differing position is the larger one.
    for (size_t i = a.exps.size(); i-- > 0;)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    return 0;
}

} // namespace cohoc
