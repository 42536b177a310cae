#ifndef HC_EXPONENTS_HPP
#define HC_EXPONENTS_HPP

#include <optional>
#include <string>

#include "hc/bigint.hpp"

namespace hc {

/// Exact value of the form q0 + q_cbrt * d^{-1/3} + q_sqrt * d^{-1/2} with
/// rational coefficients. This is the closure needed for the exponent
/// formulas; comparisons are exact (scaled-integer-root intervals).
struct SurdValue {
    Rat q0{0}, q_cbrt{0}, q_sqrt{0};
    long d = 1;

    double to_double() const;
    std::string to_string() const;
    bool operator==(const SurdValue& o) const;
};

/// Exact three-way comparison; refines interval precision until conclusive.
int surd_cmp(const SurdValue& a, const SurdValue& b);

/// The piecewise exponent penalty, defined for d >= 6:
///   0                                  d >= 50
///   11/(4 d^{1/3}) - 3/4               50 > d >= 20
///   3 d^{-1/3} + (1/3) d^{-1/2} - 11/12  20 > d >= 16
///   3 d^{-1/3} + (2/3) d^{-1/2} - 1      16 > d >= 9
///   2 d^{-1/2}                          9 > d >= 6
SurdValue theta(long d);

/// Exponent bookkeeping for a degree-d hypersurface in P^n (or A^n slices):
/// dimension-growth exponent n-1, main bound n-2+theta(d), and the n=4
/// projective bound 2 + max(0, 45/(16 sqrt(d)) - 3/4).
struct ExponentTable {
    long n = 0, d = 0;
    std::optional<SurdValue> theta_value; // populated when d >= 6
    long dim_growth = 0;
    std::optional<SurdValue> main_bound;
    SurdValue p4_bound;
};

ExponentTable exponent_table(long n, long d);

} // namespace hc

#endif
