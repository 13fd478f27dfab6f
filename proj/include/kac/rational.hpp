#pragma once

#include <gmpxx.h>

namespace kac {

// gmpxx has no long long overloads; long is 64-bit on every platform this
// project targets, so these conversions are lossless.
inline mpq_class rat(long long n) { return mpq_class(static_cast<long>(n)); }

inline mpq_class rat(long long num, long long den) {
    mpq_class r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

} // namespace kac
