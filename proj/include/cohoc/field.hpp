#pragma once

#include <cstdint>

#include "cohoc/errors.hpp"

namespace cohoc {

// Prime field F_p with residues in [0, p).  p must fit in 32 bits so that
// products fit in uint64_t.
struct Field {
    uint32_t p;

    explicit Field(uint32_t characteristic);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(uint64_t(a) * b % p);
    }
    uint32_t inv(uint32_t a) const;
    // Reduce an arbitrary signed integer into [0, p).
    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime(uint32_t n);

} // namespace cohoc
