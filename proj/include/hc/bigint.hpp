#ifndef HC_BIGINT_HPP
#define HC_BIGINT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace hc {

// Exact coefficient domains used throughout. Counting and polynomial
// coefficients are arbitrary-precision by design: slicing a high-degree form
// at a large value produces coefficients far beyond 64 bits.
using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime(long n) { return n >= 2 && is_prime(Int(n)); }

/// All primes p with lo <= p <= hi, increasing.
std::vector<long> primes_in_range(long lo, long hi);

/// Decimal rendering (used for JSON fields that may exceed 64 bits).
inline std::string to_decimal(const Int& v) { return v.get_str(); }

} // namespace hc

#endif
