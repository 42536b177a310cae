#include "hc/bigint.hpp"

#include <stdexcept>

namespace hc {

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    if (hi < 2) return out;
    if (lo < 2) lo = 2;
    Int p(lo - 1);
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > hi) break;
        out.push_back(p.get_si());
    }
    return out;
}

} // namespace hc
