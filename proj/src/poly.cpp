#include "hc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hc {

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("nvars must be non-negative");
}

SparsePoly SparsePoly::constant(Int c, int nvars) {
    SparsePoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(int i, int nvars) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    SparsePoly p(nvars);
    p.terms_.emplace(Monomial::var(i), Int(1));
    return p;
}

SparsePoly SparsePoly::with_nvars(int nvars) const {
    SparsePoly p = *this;
    for (const auto& [m, c] : terms_)
        if (m.max_var() >= nvars)
            throw std::invalid_argument("cannot shrink nvars below a used variable");
    p.nvars_ = nvars;
    return p;
}

int SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the leading term has maximal total degree.
    return static_cast<int>(terms_.begin()->first.total_degree());
}

int SparsePoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp(var)));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const uint32_t d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Int SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    if (m.max_var() >= nvars_) nvars_ = m.max_var() + 1;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly p = *this;
    p.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly p = *this;
    p.nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly p(std::max(nvars_, o.nvars_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) p.add_term(ma.times(mb), ca * cb);
    return p;
}

SparsePoly SparsePoly::operator*(const Int& c) const {
    SparsePoly p(nvars_);
    if (c == 0) return p;
    for (const auto& [m, cc] : terms_) p.terms_.emplace(m, cc * c);
    return p;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = SparsePoly::constant(1, nvars_);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Int SparsePoly::eval(std::span<const Int> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    // Per-variable power cache; exponents are small, values may not be.
    std::vector<std::vector<Int>> pows(static_cast<size_t>(nvars_));
    Int acc = 0, term;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (int v = 0; v <= m.max_var(); ++v) {
            const uint32_t e = m.exp(v);
            if (e == 0) continue;
            auto& pv = pows[static_cast<size_t>(v)];
            if (pv.empty()) pv.push_back(1);
            while (pv.size() <= e) pv.push_back(pv.back() * point[static_cast<size_t>(v)]);
            term *= pv[e];
        }
        acc += term;
    }
    return acc;
}

Int SparsePoly::eval_mod(std::span<const Int> point, const Int& mod) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    if (mod <= 0) throw std::invalid_argument("modulus must be positive");
    Int acc = 0, term, red;
    for (const auto& [m, c] : terms_) {
        mpz_mod(term.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
        for (int v = 0; v <= m.max_var(); ++v) {
            const uint32_t e = m.exp(v);
            if (e == 0) continue;
            mpz_mod(red.get_mpz_t(), point[static_cast<size_t>(v)].get_mpz_t(),
                    mod.get_mpz_t());
            mpz_powm_ui(red.get_mpz_t(), red.get_mpz_t(), e, mod.get_mpz_t());
            term = term * red % mod;
        }
        acc = (acc + term) % mod;
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    return acc;
}

SparsePoly SparsePoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    SparsePoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        const uint32_t e = m.exp(var);
        if (e == 0) continue;
        p.add_term(m.with_exp(var, e - 1), c * Int(e));
    }
    return p;
}

SparsePoly SparsePoly::substitute(int var, const Int& value) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    std::vector<Int> pows{Int(1)};
    SparsePoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        const uint32_t e = m.exp(var);
        while (pows.size() <= e) pows.push_back(pows.back() * value);
        p.add_term(m.with_exp(var, 0), c * pows[e]);
    }
    return p;
}

std::pair<SparsePoly, int> SparsePoly::substitute_rational(int var, const Int& num,
                                                           const Int& den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    const int D = degree_in(var);
    std::vector<Int> npow{Int(1)}, dpow{Int(1)};
    for (int i = 1; i <= D; ++i) {
        npow.push_back(npow.back() * num);
        dpow.push_back(dpow.back() * den);
    }
    SparsePoly p(nvars_);
    for (const auto& [m, c] : terms_) {
        const uint32_t e = m.exp(var);
        p.add_term(m.with_exp(var, 0), c * npow[e] * dpow[static_cast<size_t>(D) - e]);
    }
    return {p, D};
}

SparsePoly SparsePoly::homogenize(int var) const {
    if (var < 0) throw std::invalid_argument("variable index out of range");
    if (degree_in(var) != 0)
        throw std::invalid_argument("homogenization variable already occurs");
    if (terms_.empty()) return SparsePoly(std::max(nvars_, var + 1));
    const uint32_t D = static_cast<uint32_t>(total_degree());
    SparsePoly p(std::max(nvars_, var + 1));
    for (const auto& [m, c] : terms_)
        p.add_term(m.with_exp(var, D - m.total_degree()), c);
    return p;
}

SparsePoly SparsePoly::remove_variable(int var) const {
    if (degree_in(var) != 0)
        throw std::invalid_argument("cannot remove a variable that occurs");
    SparsePoly p(std::max(nvars_ - 1, 0));
    for (const auto& [m, c] : terms_) {
        std::vector<uint32_t> e;
        e.reserve(m.exps().size());
        for (int i = 0; i < static_cast<int>(m.exps().size()); ++i)
            if (i != var) e.push_back(m.exp(i));
        p.add_term(Monomial(std::move(e)), c);
    }
    return p;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit_coeff = (a == 1) && !m.is_one();
        if (!unit_coeff) os << a.get_str();
        bool need_star = !unit_coeff;
        for (int v = 0; v <= m.max_var(); ++v) {
            const uint32_t e = m.exp(v);
            if (e == 0) continue;
            if (need_star) os << "*";
            os << "x" << v;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

bool divides(const SparsePoly& f, const SparsePoly& g) {
    if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (g.is_zero()) return true; // 0 = f * 0
    // Lead-term reduction over Q: if g = f*h then lt(f) | lt(g) monomial-wise
    // and the reduction g - (lt(g)/lt(f)) f inherits divisibility.
    const auto& fl = *f.terms().begin();
    std::map<Monomial, Rat, GrevlexGreater> r;
    for (const auto& [m, c] : g.terms()) r.emplace(m, Rat(c));
    const Rat flc(fl.second);
    while (!r.empty()) {
        const auto& [rm, rc] = *r.begin();
        if (!rm.divisible_by(fl.first)) return false;
        const Monomial qm = rm.divide(fl.first);
        Rat qc = rc / flc;
        qc.canonicalize();
        for (const auto& [fm, fc] : f.terms()) {
            const Monomial t = qm.times(fm);
            auto [it, inserted] = r.emplace(t, Rat(0));
            it->second -= qc * Rat(fc);
            it->second.canonicalize();
            if (it->second == 0) r.erase(it);
        }
    }
    return true;
}

namespace {

/// The single effective variable of p, or throws.
int effective_variable(const SparsePoly& p) {
    int var = -1;
    for (int v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) > 0) {
            if (var >= 0) throw std::invalid_argument("polynomial has several variables");
            var = v;
        }
    }
    if (var < 0) throw std::invalid_argument("polynomial is constant");
    return var;
}

Int eval_univariate(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

} // namespace

std::vector<Int> integer_roots_univariate(const SparsePoly& p,
                                          std::optional<std::pair<Int, Int>> range) {
    if (p.is_zero())
        throw std::invalid_argument("zero polynomial: every value is a root");
    const int var = effective_variable(p);
    const int deg = p.degree_in(var);
    std::vector<Int> c(static_cast<size_t>(deg) + 1, Int(0));
    for (const auto& [m, cc] : p.terms()) c[m.exp(var)] = cc;

    // Strip x^k: zero is a root iff k > 0.
    size_t low = 0;
    while (c[low] == 0) ++low;
    std::vector<Int> w(c.begin() + static_cast<long>(low), c.end());

    std::vector<Int> roots;
    const bool zero_in_range =
        !range || (range->first <= 0 && 0 <= range->second);
    if (low > 0 && zero_in_range) roots.push_back(0);

    if (w.size() > 1) {
        // Cauchy bound: |root| <= 1 + max |a_i / a_deg|.
        Int maxabs = 0, t;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            t = abs(w[i]);
            if (t > maxabs) maxabs = t;
        }
        Int lead = abs(w.back());
        Int bound = maxabs / lead + 2;
        Int lo = -bound, hi = bound;
        if (range) {
            if (range->first > lo) lo = range->first;
            if (range->second < hi) hi = range->second;
        }
        const Int& trailing = w.front();
        for (Int cand = lo; cand <= hi; ++cand) {
            if (cand == 0) continue;
            if (!mpz_divisible_p(trailing.get_mpz_t(), cand.get_mpz_t())) continue;
            if (eval_univariate(w, cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace hc
