#include "cohoc/field.hpp"

namespace cohoc {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(uint32_t characteristic) : p(characteristic) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

} // namespace cohoc
