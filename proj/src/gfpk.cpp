#include "hc/gfpk.hpp"

#include <sstream>
#include <stdexcept>

#include "hc/bigint.hpp"

namespace hc {

namespace {

// Dense coefficient vectors over F_p, lowest degree first.
using Poly = std::vector<long>;

/// Remainder of r modulo the monic polynomial g, in place.
Poly poly_rem(Poly r, const Poly& g, long p) {
    while (true) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() < g.size()) break;
        const long c = r.back();
        const size_t shift = (r.size() - 1) - (g.size() - 1);
        for (size_t j = 0; j < g.size(); ++j)
            r[shift + j] = ((r[shift + j] - c * g[j]) % p + p) % p;
    }
    return r;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& mod, long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    r = poly_rem(std::move(r), mod, p);
    r.resize(mod.size() - 1, 0);
    return r;
}

long encode(const Poly& a, long p, int k) {
    long v = 0;
    for (int i = k; i-- > 0;) v = v * p + (i < static_cast<int>(a.size()) ? a[static_cast<size_t>(i)] : 0);
    return v;
}

Poly decode(long v, long p, int k) {
    Poly a(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        a[static_cast<size_t>(i)] = v % p;
        v /= p;
    }
    return a;
}

bool has_root(const Poly& f, long p) {
    for (long x = 0; x < p; ++x) {
        long acc = 0;
        for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

bool is_irreducible(const Poly& f, long p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    if (k <= 3) return !has_root(f, p);
    // Trial division by every monic polynomial of degree <= k/2.
    for (int d = 1; d <= k / 2; ++d) {
        const long count = FiniteField::pow_long(p, d);
        for (long code = 0; code < count; ++code) {
            Poly g = decode(code, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

long FiniteField::pow_long(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

FiniteField::FiniteField(long p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    q_ = pow_long(p, k);
    if (q_ > 4096) throw std::invalid_argument("field too large for table-driven arithmetic");

    // Smallest monic irreducible of degree k (lexicographic in low coefficients).
    modpoly_.assign(static_cast<size_t>(k) + 1, 0);
    modpoly_[static_cast<size_t>(k)] = 1;
    if (k > 1) {
        bool found = false;
        for (long code = 0; code < q_ && !found; ++code) {
            Poly f = decode(code, p, k + 1);
            f[static_cast<size_t>(k)] = 1;
            if (is_irreducible(f, p)) {
                modpoly_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(static_cast<size_t>(q_));
    for (long a = 0; a < q_; ++a) {
        const Poly pa = decode(a, p, k);
        Poly na(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            na[static_cast<size_t>(i)] = (p - pa[static_cast<size_t>(i)]) % p;
        neg_[static_cast<size_t>(a)] = static_cast<uint16_t>(encode(na, p, k));
        for (long b = 0; b < q_; ++b) {
            const Poly pb = decode(b, p, k);
            Poly s(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                s[static_cast<size_t>(i)] =
                    (pa[static_cast<size_t>(i)] + pb[static_cast<size_t>(i)]) % p;
            add_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(encode(s, p, k));
            mul_[static_cast<size_t>(a) * q_ + b] =
                static_cast<uint16_t>(encode(mul_mod(pa, pb, modpoly_, p), p, k));
        }
    }
}

std::string FiniteField::to_string(long a) const {
    const Poly pa = decode(a, p_, k_);
    std::ostringstream os;
    bool first = true;
    for (int i = k_; i-- > 0;) {
        const long c = pa[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            if (c != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace hc
