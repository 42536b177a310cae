#include "hc/unimodular.hpp"

#include <stdexcept>

#include "hc/matrix.hpp"

namespace hc {

UnimodularMatrix::UnimodularMatrix(int dim, std::vector<Int> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim <= 0 || a_.size() != static_cast<size_t>(dim) * dim)
        throw std::invalid_argument("bad matrix dimensions");
    ExactMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = at(r, c);
    const Int d = det_exact(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("matrix is not unimodular (det = " + d.get_str() + ")");
    det_sign_ = d == 1 ? 1 : -1;
}

UnimodularMatrix UnimodularMatrix::identity(int dim) {
    std::vector<Int> a(static_cast<size_t>(dim) * dim, Int(0));
    for (int i = 0; i < dim; ++i) a[static_cast<size_t>(i) * dim + i] = 1;
    return UnimodularMatrix(dim, std::move(a));
}

UnimodularMatrix UnimodularMatrix::elementary(int dim, int i, int j, const Int& c) {
    if (i == j) throw std::invalid_argument("elementary matrix needs i != j");
    std::vector<Int> a(static_cast<size_t>(dim) * dim, Int(0));
    for (int k = 0; k < dim; ++k) a[static_cast<size_t>(k) * dim + k] = 1;
    a[static_cast<size_t>(i) * dim + j] = c;
    return UnimodularMatrix(dim, std::move(a));
}

UnimodularMatrix UnimodularMatrix::swap(int dim, int i, int j) {
    std::vector<Int> a(static_cast<size_t>(dim) * dim, Int(0));
    for (int k = 0; k < dim; ++k) {
        int target = k == i ? j : (k == j ? i : k);
        a[static_cast<size_t>(k) * dim + target] = 1;
    }
    return UnimodularMatrix(dim, std::move(a));
}

Int UnimodularMatrix::entry_bound() const {
    Int b = 0;
    for (const Int& x : a_) {
        Int ax = abs(x);
        if (ax > b) b = ax;
    }
    return b;
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    // Adjugate over exact integers; dimensions here are tiny (n+1 <= 16).
    const int n = dim_;
    std::vector<Int> adj(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (n == 1) {
                adj[0] = 1;
                break;
            }
            ExactMatrix minor(n - 1, n - 1);
            for (int i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (int j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor.at(mi, mj) = at(i, j);
                    ++mj;
                }
                ++mi;
            }
            Int cof = det_exact(minor);
            if ((r + c) % 2 != 0) cof = -cof;
            // adjugate transposes the cofactor matrix
            adj[static_cast<size_t>(c) * n + r] = det_sign_ == 1 ? cof : -cof;
        }
    }
    return UnimodularMatrix(n, std::move(adj));
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> a(static_cast<size_t>(dim_) * dim_, Int(0));
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < dim_; ++c)
                a[static_cast<size_t>(r) * dim_ + c] += at(r, k) * o.at(k, c);
        }
    return UnimodularMatrix(dim_, std::move(a));
}

SparsePoly apply_unimodular(const SparsePoly& p, const UnimodularMatrix& A, bool inverse) {
    if (A.dim() < p.nvars())
        throw std::invalid_argument("matrix dimension below polynomial variable count");
    const UnimodularMatrix M = inverse ? A.inverse() : A;
    const int n = M.dim();

    std::vector<SparsePoly> forms;
    forms.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        SparsePoly li(n);
        for (int j = 0; j < n; ++j)
            if (M.at(i, j) != 0) li.add_term(Monomial::var(j), M.at(i, j));
        forms.push_back(std::move(li));
    }

    // Cache powers of each substituted linear form.
    std::vector<std::vector<SparsePoly>> pows(static_cast<size_t>(n));
    auto form_pow = [&](int i, uint32_t e) -> const SparsePoly& {
        auto& cache = pows[static_cast<size_t>(i)];
        if (cache.empty()) cache.push_back(SparsePoly::constant(1, n));
        while (cache.size() <= e) cache.push_back(cache.back() * forms[static_cast<size_t>(i)]);
        return cache[e];
    };

    SparsePoly out(n);
    for (const auto& [m, c] : p.terms()) {
        SparsePoly term = SparsePoly::constant(c, n);
        for (int v = 0; v <= m.max_var(); ++v) {
            const uint32_t e = m.exp(v);
            if (e == 0) continue;
            term = term * form_pow(v, e);
        }
        out = out + term;
    }
    return out;
}

} // namespace hc
