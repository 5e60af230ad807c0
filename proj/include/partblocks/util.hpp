#pragma once

#include <stdexcept>
#include <string>

namespace partblocks {

/// Euclidean remainder: result always in [0, m).
inline long long mod_floor(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_prime(long long p, const char* what) {
    if (!is_prime(p))
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

} // namespace partblocks
