#pragma once

#include <gmpxx.h>

namespace mcop {

// gmpxx has no long long overloads; long is 64-bit on every platform we build
// for, checked here.
static_assert(sizeof(long) >= 8, "64-bit long required");

inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpq_class to_mpq(long long v) { return mpq_class(static_cast<long>(v)); }

} // namespace mcop
