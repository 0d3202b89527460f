#pragma once

#include <gmpxx.h>

#include <string>

namespace simcores {

// Every counting result is an exact unbounded integer.
using Count = mpz_class;

Count binomial(unsigned long n, unsigned long k);

// C(2n, n) / (n + 1), always integral.
Count catalan(unsigned long n);

inline std::string to_decimal(const Count& c) { return c.get_str(); }

}  // namespace simcores
