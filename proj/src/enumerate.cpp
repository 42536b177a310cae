#include "hc/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hc {

namespace {

// ---------------------------------------------------------------------------
// Kernel arithmetic: the counting loops run over int64, int128 or mpz,
// selected by an exact worst-case magnitude bound so overflow cannot occur.
// ---------------------------------------------------------------------------

template <class I>
struct Ops;

template <>
struct Ops<int64_t> {
    static int64_t from_int(const Int& v) { return static_cast<int64_t>(v.get_si()); }
    static bool divisible(int64_t a, long b) { return a % b == 0; }
};

template <>
struct Ops<__int128> {
    static __int128 from_int(const Int& v) {
        // |v| < 2^125 is guaranteed by kernel selection.
        const bool neg = v < 0;
        Int a = abs(v);
        const uint64_t lo = mpz_get_ui(Int(a & Int(0xFFFFFFFFFFFFFFFFUL)).get_mpz_t());
        const uint64_t hi = mpz_get_ui(Int(a >> 64).get_mpz_t());
        __int128 r = (static_cast<unsigned __int128>(hi) << 64) | lo;
        return neg ? -r : r;
    }
    static bool divisible(__int128 a, long b) { return a % b == 0; }
};

template <>
struct Ops<Int> {
    static Int from_int(const Int& v) { return v; }
    static bool divisible(const Int& a, long b) {
        return mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(std::labs(b))) != 0;
    }
};

/// Sum of |c| * prod bound^e over all terms: any intermediate of the
/// counting loops is bounded by this value.
Int magnitude_bound(const SparsePoly& f, const std::vector<long>& bounds) {
    Int total = 0;
    for (const auto& [m, c] : f.terms()) {
        Int t = abs(c);
        for (int v = 0; v <= m.max_var(); ++v) {
            const uint32_t e = m.exp(v);
            if (e == 0) continue;
            t *= ipow(Int(std::max(1L, bounds.at(static_cast<size_t>(v)))), e);
        }
        total += t;
    }
    return total;
}

long gcd_long(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

/// Strided values z + q*t within [-bound, bound], ascending.
std::vector<long> strided_values(long bound, long q, long z) {
    std::vector<long> out;
    if (bound < 0) return out;
    const long r = ((z + bound) % q + q) % q; // offset of the first admissible value
    for (long v = -bound + r; v <= bound; v += q) out.push_back(v);
    return out;
}

std::vector<std::pair<long, long>> make_shards(long list_size, int workers) {
    std::vector<std::pair<long, long>> shards;
    const long w = std::max(1, workers);
    const long base = list_size / w, extra = list_size % w;
    long pos = 0;
    for (long i = 0; i < w; ++i) {
        const long len = base + (i < extra ? 1 : 0);
        shards.emplace_back(pos, pos + len);
        pos += len;
    }
    return shards;
}

struct ShardResult {
    Int count{0};
    long degenerate_fibers = 0;
    long constant_fibers = 0;
    std::vector<std::vector<long>> sample;
};

/// Per-term compiled form for the kernel type.
template <class I>
struct CompiledTerm {
    I c;
    std::vector<std::pair<int, uint32_t>> ve; // (slot, exponent), slot into value lists
    uint32_t solve_exp = 0;
};

/// Powers of every admissible value of every slot, pow[slot][idx][e].
template <class I>
std::vector<std::vector<std::vector<I>>> power_tables(
    const std::vector<std::vector<long>>& values, const std::vector<uint32_t>& max_exp) {
    std::vector<std::vector<std::vector<I>>> pow(values.size());
    for (size_t s = 0; s < values.size(); ++s) {
        pow[s].resize(values[s].size());
        for (size_t i = 0; i < values[s].size(); ++i) {
            auto& pv = pow[s][i];
            pv.resize(max_exp[s] + 1);
            pv[0] = I(1);
            for (uint32_t e = 1; e <= max_exp[s]; ++e)
                pv[e] = pv[e - 1] * I(values[s][i]);
        }
    }
    return pow;
}

// ---------------------------------------------------------------------------
// Affine counting
// ---------------------------------------------------------------------------

struct AffineProblem {
    const SparsePoly* f;
    int n;                       // affine coordinates x1..xn
    std::vector<std::vector<long>> values; // slot v-1: admissible values of x_v
    long coprime_to = 0;
    long sample_cap = 0;
};

template <class I>
class AffineSolveVar {
public:
    AffineSolveVar(const AffineProblem& pr) : pr_(pr) {
        const int n = pr.n;
        max_exp_.assign(static_cast<size_t>(n), 0);
        solve_deg_ = 0;
        for (const auto& [m, c] : pr.f->terms()) {
            CompiledTerm<I> t;
            t.c = Ops<I>::from_int(c);
            for (int v = 1; v <= n; ++v) {
                const uint32_t e = m.exp(v);
                if (e == 0) continue;
                if (v == n) {
                    t.solve_exp = e;
                    solve_deg_ = std::max(solve_deg_, e);
                } else {
                    t.ve.emplace_back(v - 1, e);
                    max_exp_[static_cast<size_t>(v - 1)] =
                        std::max(max_exp_[static_cast<size_t>(v - 1)], e);
                }
            }
            terms_.push_back(std::move(t));
        }
        pow_ = power_tables<I>(pr.values, max_exp_);
    }

    /// Counts fibers whose outermost index lies in [lo, hi).
    ShardResult run(long lo, long hi) const {
        ShardResult res;
        const int outer_vars = pr_.n - 1;
        std::vector<size_t> idx(static_cast<size_t>(std::max(outer_vars, 0)), 0);
        if (outer_vars == 0) {
            if (lo <= 0 && 0 < hi) fiber(idx, res);
            return res;
        }
        for (long i0 = lo; i0 < hi; ++i0) {
            idx[0] = static_cast<size_t>(i0);
            odometer(idx, 1, res);
        }
        return res;
    }

private:
    void odometer(std::vector<size_t>& idx, int level, ShardResult& res) const {
        if (level == pr_.n - 1) {
            fiber(idx, res);
            return;
        }
        const auto& vals = pr_.values[static_cast<size_t>(level)];
        for (size_t i = 0; i < vals.size(); ++i) {
            idx[static_cast<size_t>(level)] = i;
            odometer(idx, level + 1, res);
        }
    }

    void fiber(const std::vector<size_t>& idx, ShardResult& res) const {
        std::vector<I> u(solve_deg_ + 1, I(0));
        for (const auto& t : terms_) {
            I val = t.c;
            for (const auto& [slot, e] : t.ve)
                val *= pow_[static_cast<size_t>(slot)][idx[static_cast<size_t>(slot)]][e];
            u[t.solve_exp] += val;
        }
        uint32_t top = solve_deg_;
        while (top > 0 && u[top] == I(0)) --top;
        const auto& solve_vals = pr_.values.back();

        if (top == 0 && u[0] == I(0)) {
            // the fiber polynomial vanished: the whole segment counts
            ++res.degenerate_fibers;
            for (long c : solve_vals) accept(idx, c, res);
            return;
        }
        if (top == 0) {
            ++res.constant_fibers;
            return;
        }
        uint32_t s = 0;
        while (u[s] == I(0)) ++s;
        for (long c : solve_vals) {
            if (c == 0) {
                if (s > 0) accept(idx, 0, res);
                continue;
            }
            if (!Ops<I>::divisible(u[s], c)) continue;
            // Horner confirmation
            I acc = u[top];
            const I cv(c);
            for (uint32_t k = top; k-- > 0;) acc = acc * cv + u[k];
            if (acc == I(0)) accept(idx, c, res);
        }
    }

    void accept(const std::vector<size_t>& idx, long c, ShardResult& res) const {
        if (pr_.coprime_to != 0) {
            long all = 0;
            for (int v = 0; v < pr_.n - 1; ++v)
                all = gcd_long(all, pr_.values[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]]);
            all = gcd_long(all, c);
            if (gcd_long(all, pr_.coprime_to) != 1) return;
        }
        res.count += 1;
        if (pr_.sample_cap > 0 &&
            static_cast<long>(res.sample.size()) < pr_.sample_cap) {
            std::vector<long> pt(static_cast<size_t>(pr_.n));
            for (int v = 0; v < pr_.n - 1; ++v)
                pt[static_cast<size_t>(v)] =
                    pr_.values[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
            pt[static_cast<size_t>(pr_.n - 1)] = c;
            res.sample.push_back(std::move(pt));
        }
    }

    const AffineProblem& pr_;
    std::vector<CompiledTerm<I>> terms_;
    std::vector<uint32_t> max_exp_;
    uint32_t solve_deg_;
    std::vector<std::vector<std::vector<I>>> pow_;
};

/// Naive oracle: full odometer over all n coordinates, direct term-by-term
/// evaluation per point. Shares no fiber decomposition with SolveVar.
template <class I>
class AffineScan {
public:
    AffineScan(const AffineProblem& pr) : pr_(pr) {
        max_exp_.assign(static_cast<size_t>(pr.n), 0);
        for (const auto& [m, c] : pr.f->terms()) {
            CompiledTerm<I> t;
            t.c = Ops<I>::from_int(c);
            for (int v = 1; v <= pr.n; ++v) {
                const uint32_t e = m.exp(v);
                if (e == 0) continue;
                t.ve.emplace_back(v - 1, e);
                max_exp_[static_cast<size_t>(v - 1)] =
                    std::max(max_exp_[static_cast<size_t>(v - 1)], e);
            }
            terms_.push_back(std::move(t));
        }
        pow_ = power_tables<I>(pr.values, max_exp_);
    }

    ShardResult run(long lo, long hi) const {
        ShardResult res;
        std::vector<size_t> idx(static_cast<size_t>(pr_.n), 0);
        if (pr_.n == 1) {
            for (long i = lo; i < hi; ++i) {
                idx[0] = static_cast<size_t>(i);
                visit(idx, res);
            }
            return res;
        }
        for (long i0 = lo; i0 < hi; ++i0) {
            idx[0] = static_cast<size_t>(i0);
            walk(idx, 1, res);
        }
        return res;
    }

private:
    void walk(std::vector<size_t>& idx, int level, ShardResult& res) const {
        if (level == pr_.n) {
            visit(idx, res);
            return;
        }
        const auto& vals = pr_.values[static_cast<size_t>(level)];
        for (size_t i = 0; i < vals.size(); ++i) {
            idx[static_cast<size_t>(level)] = i;
            walk(idx, level + 1, res);
        }
    }

    void visit(const std::vector<size_t>& idx, ShardResult& res) const {
        I acc(0);
        for (const auto& t : terms_) {
            I val = t.c;
            for (const auto& [slot, e] : t.ve)
                val *= pow_[static_cast<size_t>(slot)][idx[static_cast<size_t>(slot)]][e];
            acc += val;
        }
        if (acc != I(0)) return;
        if (pr_.coprime_to != 0) {
            long all = 0;
            for (int v = 0; v < pr_.n; ++v)
                all = gcd_long(all, pr_.values[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]]);
            if (gcd_long(all, pr_.coprime_to) != 1) return;
        }
        res.count += 1;
        if (pr_.sample_cap > 0 && static_cast<long>(res.sample.size()) < pr_.sample_cap) {
            std::vector<long> pt(static_cast<size_t>(pr_.n));
            for (int v = 0; v < pr_.n; ++v)
                pt[static_cast<size_t>(v)] =
                    pr_.values[static_cast<size_t>(v)][idx[static_cast<size_t>(v)]];
            res.sample.push_back(std::move(pt));
        }
    }

    const AffineProblem& pr_;
    std::vector<CompiledTerm<I>> terms_;
    std::vector<uint32_t> max_exp_;
    std::vector<std::vector<std::vector<I>>> pow_;
};

template <template <class> class Engine>
std::vector<ShardResult> run_sharded(const AffineProblem& pr, const Int& bound,
                                     const std::vector<std::pair<long, long>>& shards) {
    std::vector<ShardResult> results(shards.size());
    auto execute = [&](auto engine) {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < shards.size(); ++w) {
            pool.emplace_back([&, w] {
                results[w] = engine.run(shards[w].first, shards[w].second);
            });
        }
        for (auto& th : pool) th.join();
    };
    static const Int lim64 = ipow(Int(2), 62), lim128 = ipow(Int(2), 125);
    if (bound < lim64) execute(Engine<int64_t>(pr));
    else if (bound < lim128) execute(Engine<__int128>(pr));
    else execute(Engine<Int>(pr));
    return results;
}

CountReport fold(const std::vector<ShardResult>& results,
                 const std::vector<std::pair<long, long>>& shards, long sample_cap) {
    CountReport rep;
    rep.shards = shards;
    for (const auto& r : results) {
        rep.count += r.count;
        rep.degenerate_fibers += r.degenerate_fibers;
        rep.constant_fibers += r.constant_fibers;
        for (const auto& p : r.sample)
            if (sample_cap <= 0 ||
                static_cast<long>(rep.sample.size()) < sample_cap)
                rep.sample.push_back(p);
    }
    return rep;
}

} // namespace

void CongruenceClass::validate(int n) const {
    if (q < 1) throw std::invalid_argument("modulus must be >= 1");
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("residue vector arity mismatch");
    for (long zi : z)
        if (zi < 0 || zi >= q) throw std::invalid_argument("residue out of [0, q)");
}

int default_workers() {
    if (const char* env = std::getenv("HC_WORKERS")) {
        const long w = std::strtol(env, nullptr, 10);
        if (w >= 1 && w <= 1024) return static_cast<int>(w);
    }
    return 1;
}

CountReport count_affine(const Hypersurface& Y, const BoxSpec& box,
                         const CongruenceClass& cls, const EnumerateOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    if (!Y.is_affine()) throw std::invalid_argument("count_affine expects an affine hypersurface");
    const int n = Y.n();
    if (box.B < 1) throw std::invalid_argument("B must be >= 1");
    if (!box.per_var.empty() && static_cast<int>(box.per_var.size()) != n)
        throw std::invalid_argument("per-variable bound arity mismatch");
    cls.validate(n);

    AffineProblem pr;
    pr.f = &Y.poly();
    pr.n = n;
    pr.coprime_to = opt.coprime_to;
    pr.sample_cap = opt.sample_cap;
    std::vector<long> var_bounds(static_cast<size_t>(n) + 1, 0); // poly var indexing
    for (int v = 1; v <= n; ++v) {
        const long b = box.bound_for(static_cast<size_t>(v - 1));
        var_bounds[static_cast<size_t>(v)] = b;
        pr.values.push_back(strided_values(b, cls.q, cls.z[static_cast<size_t>(v - 1)]));
    }

    const Int bound = magnitude_bound(Y.poly(), var_bounds);
    const auto shards =
        make_shards(static_cast<long>(pr.values.front().size()), opt.workers);
    // With a single affine variable there is just the one fiber.
    const auto effective_shards =
        n == 1 ? make_shards(1, opt.workers) : shards;

    std::vector<ShardResult> results;
    if (opt.mode == CountMode::SolveVar)
        results = run_sharded<AffineSolveVar>(pr, bound, effective_shards);
    else
        results = run_sharded<AffineScan>(pr, bound, effective_shards);

    CountReport rep = fold(results, effective_shards, opt.sample_cap);
    rep.B = box.B;
    rep.method = opt.mode == CountMode::SolveVar ? "solve-var" : "scan";
    rep.workers = std::max(1, opt.workers);
    rep.n = n;
    rep.degree = Y.degree();
    rep.affine = true;
    rep.modulus = cls.q;
    rep.residue = cls.z;
    rep.solve_var_applicable = opt.mode == CountMode::SolveVar &&
                               rep.degenerate_fibers == 0 && rep.constant_fibers == 0;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

// ---------------------------------------------------------------------------
// Projective counting
// ---------------------------------------------------------------------------

namespace {

/// Counts primitive normalized representatives on F = 0 with coordinates
/// x_first..x_n, where x_0..x_{first-1} are already zero; F is given with
/// those variables substituted away. Within a vector, x_first >= 1.
template <class I>
struct ProjectiveBlock {
    const SparsePoly* F; // vars first..n still live
    int nv;              // total variables n+1
    int first;
    std::vector<std::vector<long>> values; // slot v: admissible values of x_v (full lists)
    long sample_cap = 0;

    ShardResult count_with_first_values(const std::vector<long>& first_vals) const {
        ShardResult res;
        std::vector<CompiledTerm<I>> terms;
        std::vector<uint32_t> max_exp(static_cast<size_t>(nv), 0);
        uint32_t solve_deg = 0;
        const int solve = nv - 1;
        for (const auto& [m, c] : F->terms()) {
            CompiledTerm<I> t;
            t.c = Ops<I>::from_int(c);
            for (int v = first; v <= solve; ++v) {
                const uint32_t e = m.exp(v);
                if (e == 0) continue;
                if (v == solve) {
                    t.solve_exp = e;
                    solve_deg = std::max(solve_deg, e);
                } else {
                    t.ve.emplace_back(v, e);
                    max_exp[static_cast<size_t>(v)] = std::max(max_exp[static_cast<size_t>(v)], e);
                }
            }
            terms.push_back(std::move(t));
        }
        auto pow = power_tables<I>(values, max_exp);

        // odometer over x_first (restricted to first_vals), x_{first+1..n-1}
        std::vector<long> coord(static_cast<size_t>(nv), 0);
        auto leaf = [&](long g_outer) {
            // evaluate fiber polynomial in x_n
            std::vector<I> u(solve_deg + 1, I(0));
            for (const auto& t : terms) {
                I val = t.c;
                for (const auto& [v, e] : t.ve) {
                    const auto& list = values[static_cast<size_t>(v)];
                    const size_t vi = static_cast<size_t>(
                        std::lower_bound(list.begin(), list.end(), coord[static_cast<size_t>(v)]) -
                        list.begin());
                    val *= pow[static_cast<size_t>(v)][vi][e];
                }
                u[t.solve_exp] += val;
            }
            uint32_t top = solve_deg;
            while (top > 0 && u[top] == I(0)) --top;
            const auto& solve_vals = values[static_cast<size_t>(solve)];
            auto accept = [&](long c) {
                if (gcd_long(g_outer, c) != 1) return;
                res.count += 1;
                if (sample_cap > 0 && static_cast<long>(res.sample.size()) < sample_cap) {
                    coord[static_cast<size_t>(solve)] = c;
                    res.sample.emplace_back(coord.begin(), coord.end());
                }
            };
            if (top == 0 && u[0] == I(0)) {
                ++res.degenerate_fibers;
                for (long c : solve_vals) accept(c);
                return;
            }
            if (top == 0) {
                ++res.constant_fibers;
                return;
            }
            uint32_t s = 0;
            while (u[s] == I(0)) ++s;
            for (long c : solve_vals) {
                if (c == 0) {
                    if (s > 0) accept(0);
                    continue;
                }
                if (!Ops<I>::divisible(u[s], c)) continue;
                I acc = u[top];
                const I cv(c);
                for (uint32_t k = top; k-- > 0;) acc = acc * cv + u[k];
                if (acc == I(0)) accept(c);
            }
        };

        std::function<void(int, long)> walk = [&](int v, long g) {
            if (v == solve) {
                leaf(g);
                return;
            }
            for (long x : values[static_cast<size_t>(v)]) {
                coord[static_cast<size_t>(v)] = x;
                walk(v + 1, g == 1 ? 1 : gcd_long(g, x));
            }
        };

        for (long x : first_vals) {
            coord[static_cast<size_t>(first)] = x;
            if (first == solve) {
                // Vector (0,..,0,x): F reduces to c * x^d; point only if c = 0,
                // and primitivity forces x = 1.
                if (F->terms().empty() && x == 1) {
                    res.count += 1;
                    if (sample_cap > 0 && static_cast<long>(res.sample.size()) < sample_cap)
                        res.sample.emplace_back(coord.begin(), coord.end());
                }
                continue;
            }
            walk(first + 1, x);
        }
        return res;
    }
};

ShardResult projective_descend(const SparsePoly& F, int nv, int first,
                               const std::vector<std::vector<long>>& pos_values,
                               const std::vector<std::vector<long>>& full_values,
                               const Int& bound, long sample_cap);

template <class I>
ShardResult projective_block_dispatch(const SparsePoly& F, int nv, int first,
                                      const std::vector<std::vector<long>>& values,
                                      const std::vector<long>& first_vals,
                                      long sample_cap) {
    ProjectiveBlock<I> blk{&F, nv, first, values, sample_cap};
    return blk.count_with_first_values(first_vals);
}

ShardResult projective_block(const SparsePoly& F, int nv, int first,
                             const std::vector<std::vector<long>>& values,
                             const std::vector<long>& first_vals, const Int& bound,
                             long sample_cap) {
    static const Int lim64 = ipow(Int(2), 62), lim128 = ipow(Int(2), 125);
    if (bound < lim64)
        return projective_block_dispatch<int64_t>(F, nv, first, values, first_vals, sample_cap);
    if (bound < lim128)
        return projective_block_dispatch<__int128>(F, nv, first, values, first_vals, sample_cap);
    return projective_block_dispatch<Int>(F, nv, first, values, first_vals, sample_cap);
}

/// Full slice x_0 = ... = x_{first-1} = 0: block with x_first >= 1, plus the
/// deeper slice with x_first = 0 as well.
ShardResult projective_descend(const SparsePoly& F, int nv, int first,
                               const std::vector<std::vector<long>>& pos_values,
                               const std::vector<std::vector<long>>& full_values,
                               const Int& bound, long sample_cap) {
    ShardResult total;
    SparsePoly cur = F;
    for (int v = first; v < nv; ++v) {
        ShardResult part = projective_block(cur, nv, v, full_values,
                                            pos_values[static_cast<size_t>(v)], bound,
                                            sample_cap);
        total.count += part.count;
        total.degenerate_fibers += part.degenerate_fibers;
        total.constant_fibers += part.constant_fibers;
        for (auto& p : part.sample)
            if (sample_cap <= 0 || static_cast<long>(total.sample.size()) < sample_cap)
                total.sample.push_back(std::move(p));
        cur = cur.substitute(v, 0);
    }
    return total;
}

} // namespace

CountReport count_projective(const Hypersurface& X, const BoxSpec& box,
                             const EnumerateOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    if (X.is_affine()) throw std::invalid_argument("count_projective expects a projective hypersurface");
    if (box.B < 1) throw std::invalid_argument("B must be >= 1");
    const int nv = X.n() + 1;
    if (!box.per_var.empty() && static_cast<int>(box.per_var.size()) != nv)
        throw std::invalid_argument("per-variable bound arity mismatch");

    std::vector<std::vector<long>> full(static_cast<size_t>(nv)), pos(static_cast<size_t>(nv));
    std::vector<long> var_bounds(static_cast<size_t>(nv), 0);
    for (int v = 0; v < nv; ++v) {
        const long b = box.bound_for(static_cast<size_t>(v));
        var_bounds[static_cast<size_t>(v)] = b;
        full[static_cast<size_t>(v)] = strided_values(b, 1, 0);
        for (long x = 1; x <= b; ++x) pos[static_cast<size_t>(v)].push_back(x);
    }
    const Int bound = magnitude_bound(X.poly(), var_bounds);

    // Shard the outermost list {0, 1, .., B0}: value 0 stands for the whole
    // x0 = 0 slice, handled by the worker that owns it.
    std::vector<long> top;
    top.push_back(0);
    for (long x = 1; x <= box.bound_for(0); ++x) top.push_back(x);
    const auto shards = make_shards(static_cast<long>(top.size()), opt.workers);

    std::vector<ShardResult> results(shards.size());
    std::vector<std::thread> pool;
    for (size_t w = 0; w < shards.size(); ++w) {
        pool.emplace_back([&, w] {
            ShardResult acc;
            std::vector<long> firsts;
            for (long i = shards[w].first; i < shards[w].second; ++i) {
                const long x0 = top[static_cast<size_t>(i)];
                if (x0 == 0) {
                    ShardResult sub = projective_descend(X.poly().substitute(0, 0), nv, 1,
                                                         pos, full, bound, opt.sample_cap);
                    acc.count += sub.count;
                    acc.degenerate_fibers += sub.degenerate_fibers;
                    acc.constant_fibers += sub.constant_fibers;
                    for (auto& pnt : sub.sample) acc.sample.push_back(std::move(pnt));
                } else {
                    firsts.push_back(x0);
                }
            }
            if (!firsts.empty()) {
                ShardResult sub =
                    projective_block(X.poly(), nv, 0, full, firsts, bound, opt.sample_cap);
                acc.count += sub.count;
                acc.degenerate_fibers += sub.degenerate_fibers;
                acc.constant_fibers += sub.constant_fibers;
                for (auto& pnt : sub.sample) acc.sample.push_back(std::move(pnt));
            }
            results[w] = std::move(acc);
        });
    }
    for (auto& th : pool) th.join();

    CountReport rep = fold(results, shards, opt.sample_cap);
    rep.B = box.B;
    rep.method = "solve-var";
    rep.workers = std::max(1, opt.workers);
    rep.n = X.n();
    rep.degree = X.degree();
    rep.affine = false;
    rep.solve_var_applicable = rep.degenerate_fibers == 0 && rep.constant_fibers == 0;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

CountReport count_on_coordinate_subspace(const Hypersurface& X,
                                         const std::vector<int>& zeroed,
                                         const BoxSpec& box, const EnumerateOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    if (X.is_affine())
        throw std::invalid_argument("subspace counting expects a projective hypersurface");
    if (zeroed.empty()) throw std::invalid_argument("zeroed set must be nonempty");
    const int nv = X.n() + 1;
    SparsePoly restr = X.poly();
    std::vector<bool> is_zeroed(static_cast<size_t>(nv), false);
    for (int v : zeroed) {
        if (v < 0 || v >= nv) throw std::invalid_argument("zeroed variable out of range");
        is_zeroed[static_cast<size_t>(v)] = true;
        restr = restr.substitute(v, 0);
    }
    std::vector<int> support;
    for (int v = 0; v < nv; ++v)
        if (!is_zeroed[static_cast<size_t>(v)]) support.push_back(v);
    if (support.empty()) throw std::invalid_argument("zeroed set covers every coordinate");

    CountReport rep;
    rep.B = box.B;
    rep.workers = std::max(1, opt.workers);
    rep.n = X.n();
    rep.degree = X.degree();
    rep.affine = false;

    if (restr.is_zero()) {
        // X contains the whole coordinate subspace: count primitive vectors.
        rep.method = "subspace";
        std::vector<long> bounds;
        for (int v : support) bounds.push_back(box.bound_for(static_cast<size_t>(v)));
        // first nonzero positive, gcd 1
        std::function<Int(size_t, long, bool)> walk = [&](size_t i, long g, bool started) -> Int {
            if (i == bounds.size()) return started && g == 1 ? Int(1) : Int(0);
            Int acc = 0;
            const long lo = started ? -bounds[i] : 0;
            for (long x = lo; x <= bounds[i]; ++x) {
                if (!started && x == 0) {
                    acc += walk(i + 1, g, false);
                } else if (!started) {
                    acc += walk(i + 1, x, true);
                } else {
                    acc += walk(i + 1, g == 1 ? 1 : gcd_long(g, x), true);
                }
            }
            return acc;
        };
        rep.count = walk(0, 0, false);
        rep.shards = make_shards(1, 1);
    } else {
        // Points of the restricted hypersurface inside the subspace.
        SparsePoly compact = restr;
        for (int v = nv - 1; v >= 0; --v)
            if (is_zeroed[static_cast<size_t>(v)]) compact = compact.remove_variable(v);
        if (compact.is_constant()) {
            rep.method = "subspace-restricted";
            rep.count = 0;
        } else {
            BoxSpec sub_box(box.B);
            if (!box.per_var.empty()) {
                std::vector<long> bs;
                for (int v : support) bs.push_back(box.bound_for(static_cast<size_t>(v)));
                sub_box = BoxSpec(box.B, bs);
            }
            CountReport inner =
                count_projective(Hypersurface::projective(compact), sub_box, opt);
            rep = inner;
            rep.method = "subspace-restricted";
        }
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

PointList list_points(const Hypersurface& Y, const BoxSpec& box,
                      const CongruenceClass& cls, long cap, const EnumerateOptions& opt) {
    if (cap <= 0) throw std::invalid_argument("cap must be positive");
    EnumerateOptions o = opt;
    o.sample_cap = cap;
    PointList out;
    out.report = count_affine(Y, box, cls, o);
    out.points = out.report.sample;
    return out;
}

} // namespace hc
