#include "hc/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hc {

Monomial Monomial::var(int i, uint32_t e) {
    if (i < 0) throw std::invalid_argument("variable index must be non-negative");
    if (e == 0) return Monomial{};
    std::vector<uint32_t> v(static_cast<size_t>(i) + 1, 0);
    v[static_cast<size_t>(i)] = e;
    return Monomial(std::move(v));
}

uint32_t Monomial::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), uint32_t{0});
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<uint32_t> v(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < e_.size(); ++i) v[i] += e_[i];
    for (size_t i = 0; i < o.e_.size(); ++i) v[i] += o.e_[i];
    return Monomial(std::move(v));
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (o.e_.size() > e_.size()) return false;
    for (size_t i = 0; i < o.e_.size(); ++i)
        if (o.e_[i] > e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    if (!divisible_by(o)) throw std::invalid_argument("monomial not divisible");
    std::vector<uint32_t> v = e_;
    for (size_t i = 0; i < o.e_.size(); ++i) v[i] -= o.e_[i];
    return Monomial(std::move(v));
}

Monomial Monomial::with_exp(int var, uint32_t e) const {
    std::vector<uint32_t> v = e_;
    if (static_cast<size_t>(var) >= v.size()) v.resize(static_cast<size_t>(var) + 1, 0);
    v[static_cast<size_t>(var)] = e;
    return Monomial(std::move(v));
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    const uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    const size_t n = std::max(a.exps().size(), b.exps().size());
    for (size_t i = n; i-- > 0;) {
        const int64_t d = static_cast<int64_t>(a.exp(static_cast<int>(i))) -
                          static_cast<int64_t>(b.exp(static_cast<int>(i)));
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

namespace {
void gen_degree(int nvars, int var, int remaining, std::vector<uint32_t>& cur,
                std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[static_cast<size_t>(var)] = static_cast<uint32_t>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<size_t>(var)] = static_cast<uint32_t>(e);
        gen_degree(nvars, var + 1, remaining - e, cur, out);
    }
    cur[static_cast<size_t>(var)] = 0;
}
} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    if (nvars < 1) throw std::invalid_argument("nvars must be positive");
    std::vector<Monomial> out;
    std::vector<uint32_t> cur(static_cast<size_t>(nvars), 0);
    gen_degree(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (int k = d; k >= 0; --k) {
        auto part = monomials_of_degree(nvars, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace hc
