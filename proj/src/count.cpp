#include "simcores/count.hpp"

namespace simcores {

Count binomial(unsigned long n, unsigned long k) {
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Count catalan(unsigned long n) {
  Count r = binomial(2 * n, n);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
  return r;
}

}  // namespace simcores
