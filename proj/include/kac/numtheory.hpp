#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace kac {

// Moebius function; n >= 1.
inline int mobius(long long n) {
    int result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// Positive divisors of n in increasing order; n >= 1.
inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace kac
