#ifndef HC_ENUMERATE_HPP
#define HC_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hc/bigint.hpp"
#include "hc/hypersurface.hpp"

namespace hc {

/// Height box |x_i| <= B, with optional per-variable overrides (indexed by
/// affine coordinate 1..n as slots 0..n-1, or projective coordinate 0..n).
struct BoxSpec {
    long B = 1;
    std::vector<long> per_var;

    explicit BoxSpec(long B = 1) : B(B) {}
    BoxSpec(long B, std::vector<long> overrides) : B(B), per_var(std::move(overrides)) {}
    long bound_for(size_t slot) const {
        return per_var.empty() ? B : per_var.at(slot);
    }
};

/// x_i = z_i (mod q) for all affine coordinates; q = 1 means unconstrained.
struct CongruenceClass {
    long q = 1;
    std::vector<long> z;

    static CongruenceClass trivial(int n) {
        return CongruenceClass{1, std::vector<long>(static_cast<size_t>(n), 0)};
    }
    void validate(int n) const;
};

enum class CountMode { SolveVar, Scan };

struct EnumerateOptions {
    CountMode mode = CountMode::SolveVar;
    int workers = 1;
    /// Collect up to this many points (lexicographic first) into the report.
    long sample_cap = 0;
    /// When nonzero, only points with gcd(gcd(coords), coprime_to) == 1 are
    /// counted (used by the projective slice recursion).
    long coprime_to = 0;
};

struct CountReport {
    Int count{0};
    long B = 0;
    std::string method;
    int workers = 1;
    /// Contiguous index ranges [lo, hi) into the outermost value list.
    std::vector<std::pair<long, long>> shards;
    double wall_ms = 0;
    int n = 0;
    int degree = 0;
    bool affine = true;
    long modulus = 1;
    std::vector<long> residue;
    /// Fibers where the polynomial vanished identically in the solve
    /// variable (whole segment counted) / reduced to a nonzero constant.
    long degenerate_fibers = 0;
    long constant_fibers = 0;
    /// True when every fiber kept positive degree in the solve variable, so
    /// the d*(2B+1)^{n-1} trivial bound applies.
    bool solve_var_applicable = false;
    std::vector<std::vector<long>> sample;
};

/// Exact |{x in [-B,B]^n : f(x) = 0, x = z mod q}|. Default mode iterates
/// the first n-1 variables with congruence stride and solves the last one
/// through the trailing-coefficient divisor filter; Scan mode is the naive
/// per-point oracle sharing no fiber machinery.
CountReport count_affine(const Hypersurface& Y, const BoxSpec& box,
                         const CongruenceClass& cls, const EnumerateOptions& opt = {});

/// Primitive representatives (first nonzero coordinate positive, gcd 1) of
/// projective rational points in the box with F = 0, counted once each.
CountReport count_projective(const Hypersurface& X, const BoxSpec& box,
                             const EnumerateOptions& opt = {});

/// Points supported on the complement of the zeroed coordinates. When F
/// restricts to zero on that subspace this is the primitive-vector count of
/// the sub-box; otherwise the restricted hypersurface is counted instead.
CountReport count_on_coordinate_subspace(const Hypersurface& X,
                                         const std::vector<int>& zeroed,
                                         const BoxSpec& box,
                                         const EnumerateOptions& opt = {});

struct PointList {
    std::vector<std::vector<long>> points;
    CountReport report;
};

/// Deterministic (lexicographic) first <= cap points plus the total count.
PointList list_points(const Hypersurface& Y, const BoxSpec& box,
                      const CongruenceClass& cls, long cap,
                      const EnumerateOptions& opt = {});

/// Worker default resolution: explicit option > HC_WORKERS env > 1.
int default_workers();

} // namespace hc

#endif
