#pragma once

#include <cstdint>
#include <vector>

#include "cohoc/errors.hpp"

namespace cohoc {

// Monomial in a fixed generator list: one exponent per generator plus the
// cached weighted degree (sum of exponent * generator degree).
struct Monomial {
    std::vector<uint32_t> exps;
    int64_t degree = 0;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool is_one() const {
        for (uint32_t e : exps)
            if (e) return false;
        return true;
    }
};

enum class OrderKind { degrevlex, deglex };

Monomial mono_one(size_t ngens);
Monomial mono_make(std::vector<uint32_t> exps, const std::vector<int64_t>& gen_degrees);

bool mono_divides(const Monomial& a, const Monomial& b); // a | b
bool mono_coprime(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a); // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int64_t>& gen_degrees);

// Degree-compatible comparison: weighted degree first, then the tie break of
// the given order over the declaration order.  Returns <0, 0, >0.
int mono_cmp(const Monomial& a, const Monomial& b, OrderKind order);

} // namespace cohoc
