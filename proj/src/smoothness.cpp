#include "hc/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hc/gfpk.hpp"
#include "hc/matrix.hpp"

namespace hc {

namespace {

struct FpTerm {
    Monomial m;
    long c; // in [1, p)
};

std::vector<FpTerm> reduce_mod_p(const SparsePoly& f, long p) {
    std::vector<FpTerm> out;
    Int r;
    const Int P(p);
    for (const auto& [m, c] : f.terms()) {
        mpz_mod(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
        if (r != 0) out.push_back({m, r.get_si()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witness search over F_{p^k}
// ---------------------------------------------------------------------------

class FieldEvaluator {
public:
    FieldEvaluator(const FiniteField& F, const std::vector<FpTerm>& terms, int nvars,
                   int max_deg)
        : F_(F) {
        pow_.assign(static_cast<size_t>(max_deg) + 1,
                    std::vector<long>(static_cast<size_t>(F.q()), 0));
        for (long x = 0; x < F.q(); ++x) pow_[0][static_cast<size_t>(x)] = 1;
        for (int e = 1; e <= max_deg; ++e)
            for (long x = 0; x < F.q(); ++x)
                pow_[static_cast<size_t>(e)][static_cast<size_t>(x)] =
                    F.mul(pow_[static_cast<size_t>(e - 1)][static_cast<size_t>(x)], x);
        for (const auto& t : terms) {
            CompiledTerm ct;
            ct.c = F.embed(t.c % F.p());
            for (int v = 0; v < nvars; ++v)
                if (t.m.exp(v) > 0) ct.ve.emplace_back(v, t.m.exp(v));
            terms_.push_back(std::move(ct));
        }
    }

    long eval(const std::vector<long>& x) const {
        long acc = 0;
        for (const auto& t : terms_) {
            long val = t.c;
            for (const auto& [v, e] : t.ve) {
                val = F_.mul(val, pow_[e][static_cast<size_t>(x[static_cast<size_t>(v)])]);
                if (val == 0) break;
            }
            acc = F_.add(acc, val);
        }
        return acc;
    }

private:
    struct CompiledTerm {
        long c;
        std::vector<std::pair<int, uint32_t>> ve;
    };
    const FiniteField& F_;
    std::vector<CompiledTerm> terms_;
    std::vector<std::vector<long>> pow_;
};

/// Exhaustive scan of P^n(F_{p^k}) for a common zero of the form and all
/// partials. Representatives have first nonzero coordinate equal to 1.
std::optional<SingularWitness> find_witness(const FiniteField& F,
                                            const std::vector<FpTerm>& form,
                                            const std::vector<std::vector<FpTerm>>& partials,
                                            int nvars, int max_deg) {
    FieldEvaluator fe(F, form, nvars, max_deg);
    std::vector<FieldEvaluator> pe;
    pe.reserve(partials.size());
    for (const auto& pt : partials) pe.emplace_back(F, pt, nvars, max_deg);

    std::vector<long> x(static_cast<size_t>(nvars), 0);
    for (int first = 0; first < nvars; ++first) {
        std::fill(x.begin(), x.end(), 0L);
        x[static_cast<size_t>(first)] = 1;
        const int free_from = first + 1;
        while (true) {
            bool singular = fe.eval(x) == 0;
            if (singular) {
                for (const auto& ev : pe)
                    if (ev.eval(x) != 0) {
                        singular = false;
                        break;
                    }
            }
            if (singular) {
                SingularWitness w;
                w.p = F.p();
                w.k = F.k();
                w.coords = x;
                for (long c : x) w.printable.push_back(F.to_string(c));
                return w;
            }
            int v = nvars - 1;
            while (v >= free_from && x[static_cast<size_t>(v)] == F.q() - 1) {
                x[static_cast<size_t>(v)] = 0;
                --v;
            }
            if (v < free_from) break;
            ++x[static_cast<size_t>(v)];
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Power-membership certificate over F_p
// ---------------------------------------------------------------------------

using SparseRow = std::map<Monomial, uint64_t, GrevlexGreater>;

uint64_t inv_mod(uint64_t a, uint64_t p) {
    uint64_t r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Sparse row echelon over F_p, rows keyed by their grevlex-leading monomial.
/// Pivot rows are normalized to leading coefficient 1, so a single forward
/// pass fully reduces a row (elimination only introduces smaller monomials).
class SparseEchelon {
public:
    explicit SparseEchelon(uint64_t p) : p_(p) {}

    SparseRow reduce(SparseRow r) const {
        auto it = r.begin();
        while (it != r.end()) {
            auto pit = pivots_.find(it->first);
            if (pit == pivots_.end()) {
                ++it;
                continue;
            }
            const Monomial cur = it->first;
            axpy(r, pit->second, p_ - it->second);
            it = r.upper_bound(cur);
        }
        return r;
    }

    /// False when the row is dependent (reduces to zero).
    bool insert(SparseRow r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        const uint64_t inv = inv_mod(r.begin()->second, p_);
        for (auto& [m, c] : r) c = c * inv % p_;
        Monomial lead = r.begin()->first;
        pivots_.emplace(std::move(lead), std::move(r));
        return true;
    }

    bool contains(SparseRow r) const { return reduce(std::move(r)).empty(); }

    size_t size() const { return pivots_.size(); }

private:
    void axpy(SparseRow& r, const SparseRow& row, uint64_t factor) const {
        for (const auto& [m, c] : row) {
            auto [it, inserted] = r.emplace(m, 0);
            it->second = (it->second + factor * c) % p_;
            if (it->second == 0) r.erase(it);
        }
    }

    uint64_t p_;
    std::map<Monomial, SparseRow, GrevlexGreater> pivots_;
};

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 100'000'000) return 100'000'000;
    }
    return r;
}

/// Tries to certify that every x_j^m lies in the ideal generated by the
/// nonzero partials over F_p, escalating m. Returns the certified m or -1.
int power_membership(const std::vector<std::vector<FpTerm>>& partials, int nvars,
                     int e, long p, const SmoothnessOptions& opt) {
    const int t = nvars * (e - 1) + 1; // Macaulay critical degree: no gain beyond
    for (int m = e; m <= t; ++m) {
        if (binom(m - e + nvars - 1, nvars - 1) > opt.membership_max_multipliers) break;
        SparseEchelon ech(static_cast<uint64_t>(p));
        const auto multipliers = monomials_of_degree(nvars, m - e);
        bool rows_ok = true;
        for (const auto& part : partials) {
            for (const auto& mult : multipliers) {
                SparseRow row;
                for (const auto& [pm, pc] : part)
                    row[mult.times(pm)] = static_cast<uint64_t>(pc);
                ech.insert(std::move(row));
                if (ech.size() > static_cast<size_t>(opt.membership_max_rows)) {
                    rows_ok = false;
                    break;
                }
            }
            if (!rows_ok) break;
        }
        if (!rows_ok) break;
        bool all_in = true;
        for (int j = 0; j < nvars && all_in; ++j) {
            SparseRow target;
            target[Monomial::var(j, static_cast<uint32_t>(m))] = 1;
            all_in = ech.contains(std::move(target));
        }
        if (all_in) return m;
    }
    return -1;
}

} // namespace

SmoothnessVerdict is_smooth_mod_p(const Hypersurface& H, long p,
                                  const SmoothnessOptions& opt) {
    if (H.ambient() != Ambient::Projective)
        throw std::invalid_argument("is_smooth_mod_p expects a projective hypersurface");
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (opt.kmax < 1) throw std::invalid_argument("kmax must be >= 1");

    SmoothnessVerdict v;
    const SparsePoly& F = H.poly();
    const int nvars = H.n() + 1;
    const int d = H.degree();

    const auto Fp = reduce_mod_p(F, p);
    // Homogeneous of degree d: a degree drop mod p means the whole reduction
    // vanishes, i.e. the fiber is not a degree-d hypersurface at all.
    if (Fp.empty()) {
        v.status = SmoothnessVerdict::Status::Singular;
        v.degenerate = true;
        v.note = "reduction vanishes identically mod " + std::to_string(p);
        return v;
    }

    std::vector<std::vector<FpTerm>> partials_all, partials_nonzero;
    for (int i = 0; i < nvars; ++i) {
        partials_all.push_back(reduce_mod_p(F.partial(i), p));
        if (!partials_all.back().empty()) partials_nonzero.push_back(partials_all.back());
    }

    // Hyperplanes have constant gradient: nonzero mod p means smooth.
    if (d == 1 && !partials_nonzero.empty()) {
        v.status = SmoothnessVerdict::Status::Smooth;
        v.certifying_prime = p;
        v.certificate = "constant-gradient";
        return v;
    }

    // Sufficient certificates first: they are sound, so when one fires no
    // witness can exist and the search is redundant.
    if (!partials_nonzero.empty() && partials_nonzero.size() == static_cast<size_t>(nvars)) {
        const int e = d - 1;
        const int t = nvars * (e - 1) + 1;
        if (e >= 1 && binom(t + nvars - 1, nvars - 1) <= opt.macaulay_max_cols) {
            std::vector<SparsePoly> parts;
            for (int i = 0; i < nvars; ++i) parts.push_back(F.partial(i).with_nvars(nvars));
            bool degree_ok = true;
            for (const auto& q : parts)
                if (q.total_degree() != e) degree_ok = false;
            if (degree_ok && det_mod_p(macaulay_matrix(parts), Int(p)) != 0) {
                v.status = SmoothnessVerdict::Status::Smooth;
                v.certifying_prime = p;
                v.certificate = "macaulay-det";
                return v;
            }
        }
    }
    if (!partials_nonzero.empty() && d >= 2) {
        const int m = power_membership(partials_nonzero, nvars, d - 1, p, opt);
        if (m >= 0) {
            v.status = SmoothnessVerdict::Status::Smooth;
            v.certifying_prime = p;
            v.certificate = "power-membership m=" + std::to_string(m);
            return v;
        }
    }

    // No certificate: hunt for a singular point over small extensions.
    for (int k = 1; k <= opt.kmax; ++k) {
        double points = 1;
        const double q = std::pow(static_cast<double>(p), k);
        for (int i = 0; i < nvars; ++i) points = points * q + 1;
        if (points > static_cast<double>(opt.point_budget) || q > 4096) {
            v.note += "witness search skipped for k=" + std::to_string(k) +
                      " (field or budget cap); ";
            continue;
        }
        FiniteField field(p, k);
        auto w = find_witness(field, Fp, partials_all, nvars, d);
        if (w) {
            v.status = SmoothnessVerdict::Status::Singular;
            v.witness = std::move(*w);
            return v;
        }
    }

    v.status = SmoothnessVerdict::Status::Indeterminate;
    v.note += "no certificate and no witness up to kmax=" + std::to_string(opt.kmax);
    return v;
}

SmoothnessVerdict certify_smooth_over_Q(const Hypersurface& H,
                                        std::span<const long> prime_budget,
                                        const SmoothnessOptions& opt) {
    if (prime_budget.empty()) throw std::invalid_argument("empty prime budget");
    const Hypersurface X = H.projective_closure();
    std::ostringstream note;
    for (long p : prime_budget) {
        const SmoothnessVerdict v = is_smooth_mod_p(X, p, opt);
        if (v.smooth()) return v;
        note << "p=" << p << ": "
             << (v.singular() ? (v.degenerate ? "degenerate" : "singular") : "indeterminate")
             << "; ";
    }
    SmoothnessVerdict out;
    out.status = SmoothnessVerdict::Status::Indeterminate;
    out.note = "budget exhausted without a smooth reduction: " + note.str();
    return out;
}

NonsingularPrimes nonsingular_primes(const Hypersurface& H, long bound,
                                     const SmoothnessOptions& opt) {
    NonsingularPrimes out;
    const Hypersurface X = H.projective_closure();
    for (long p : primes_in_range(2, bound)) {
        const SmoothnessVerdict v = is_smooth_mod_p(X, p, opt);
        if (v.smooth()) out.smooth.push_back(p);
        else if (v.singular()) out.singular.push_back(p);
        else out.indeterminate.push_back(p);
    }
    return out;
}

} // namespace hc
