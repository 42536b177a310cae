#ifndef HC_SMOOTHNESS_HPP
#define HC_SMOOTHNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hc/hypersurface.hpp"

namespace hc {

/// A point of P^n over F_{p^k} where the form and all its partials vanish.
/// Coordinates are field-element encodings (see FiniteField); `printable`
/// renders them as polynomials in the generator t.
struct SingularWitness {
    long p = 0;
    int k = 1;
    std::vector<long> coords;
    std::vector<std::string> printable;
};

struct SmoothnessVerdict {
    enum class Status { Smooth, Singular, Indeterminate };
    Status status = Status::Indeterminate;
    std::optional<long> certifying_prime;
    /// Which sufficient certificate fired: "macaulay-det" or
    /// "power-membership m=<degree>". Empty unless Smooth.
    std::string certificate;
    std::optional<SingularWitness> witness;
    /// Reduction mod p dropped the degree (or vanished): singular by
    /// degeneration, no witness point attached.
    bool degenerate = false;
    std::string note;

    bool smooth() const { return status == Status::Smooth; }
    bool singular() const { return status == Status::Singular; }
};

struct SmoothnessOptions {
    /// Witness search covers F_{p^k} for k = 1..kmax.
    int kmax = 2;
    /// Skip a (p,k) witness search whose projective point count exceeds this.
    long point_budget = 20'000'000;
    /// Caps for the power-membership certificate escalation.
    int membership_max_rows = 600;
    long membership_max_multipliers = 3000;
    /// Macaulay determinant attempted only when its column count fits.
    int macaulay_max_cols = 300;
};

/// Semi-decision for smoothness of the reduction of a projective
/// hypersurface mod p.
///
/// Singular requires an exhibited witness over F_{p^k}, k <= kmax (or a
/// degenerate reduction). Smooth requires a sufficient certificate that the
/// partials have no common projective zero over the algebraic closure:
/// either a nonzero Macaulay determinant mod p (small systems), or an exact
/// ideal-membership certificate x_j^m in (dF_0..dF_n) mod p for every j.
/// Anything else is Indeterminate.
SmoothnessVerdict is_smooth_mod_p(const Hypersurface& H, long p,
                                  const SmoothnessOptions& opt = {});

/// First Smooth reduction in the prime budget certifies smoothness over Q
/// (one smooth fiber in the flat family). Characteristic-zero singularity is
/// not decided here: with the budget exhausted the verdict is Indeterminate.
SmoothnessVerdict certify_smooth_over_Q(const Hypersurface& H,
                                        std::span<const long> prime_budget,
                                        const SmoothnessOptions& opt = {});

struct NonsingularPrimes {
    std::vector<long> smooth;
    std::vector<long> singular;
    std::vector<long> indeterminate;
};

/// Classifies every prime <= bound; affine inputs are closed first.
NonsingularPrimes nonsingular_primes(const Hypersurface& H, long bound,
                                     const SmoothnessOptions& opt = {});

} // namespace hc

#endif
