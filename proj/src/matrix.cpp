#include "hc/matrix.hpp"

#include <map>
#include <stdexcept>

namespace hc {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)),
      scalings_(static_cast<size_t>(rows), Int(1)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rational_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("matrix dimensions must be positive");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != m.cols())
            throw std::invalid_argument("ragged rows");
        Int lcm = 1;
        for (const Rat& q : rows[static_cast<size_t>(r)])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (int c = 0; c < m.cols(); ++c) {
            const Rat& q = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            m.at(r, c) = q.get_num() * (lcm / q.get_den());
        }
        m.scalings_[static_cast<size_t>(r)] = lcm;
    }
    return m;
}

namespace {

/// Fraction-free row echelon. Returns pivot (row, col) pairs; `work` is
/// overwritten by the Bareiss-reduced rows.
std::vector<std::pair<int, int>> bareiss_echelon(std::vector<std::vector<Int>>& work) {
    const int rows = static_cast<int>(work.size());
    const int cols = rows ? static_cast<int>(work[0].size()) : 0;
    std::vector<std::pair<int, int>> pivots;
    Int denom = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (work[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(work[static_cast<size_t>(r)], work[static_cast<size_t>(pr)]);
        const Int pivot = work[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& wi = work[static_cast<size_t>(i)];
            const Int factor = wi[static_cast<size_t>(c)];
            for (int j = c; j < cols; ++j) {
                wi[static_cast<size_t>(j)] =
                    (pivot * wi[static_cast<size_t>(j)] -
                     factor * work[static_cast<size_t>(r)][static_cast<size_t>(j)]) /
                    denom;
            }
        }
        denom = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

void normalize_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

} // namespace

RankNullspace rank_and_nullspace(const ExactMatrix& m) {
    std::vector<std::vector<Int>> work(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        work[static_cast<size_t>(r)].resize(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) work[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    }
    const auto pivots = bareiss_echelon(work);

    RankNullspace out;
    out.rank = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot_col(static_cast<size_t>(m.cols()), false);
    for (const auto& [pr, pc] : pivots) is_pivot_col[static_cast<size_t>(pc)] = true;

    // One basis vector per free column: set that free variable to 1 and
    // back-substitute through the echelon rows with exact rationals.
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot_col[static_cast<size_t>(fc)]) continue;
        std::vector<Rat> x(static_cast<size_t>(m.cols()), Rat(0));
        x[static_cast<size_t>(fc)] = 1;
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            const auto& [pr, pc] = pivots[static_cast<size_t>(k)];
            const auto& row = work[static_cast<size_t>(pr)];
            Rat acc(0);
            for (int j = pc + 1; j < m.cols(); ++j)
                if (x[static_cast<size_t>(j)] != 0)
                    acc += Rat(row[static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
            x[static_cast<size_t>(pc)] = -acc / Rat(row[static_cast<size_t>(pc)]);
            x[static_cast<size_t>(pc)].canonicalize();
        }
        Int lcm = 1;
        for (const Rat& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> v(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = x[static_cast<size_t>(j)];
            v[static_cast<size_t>(j)] = q.get_num() * (lcm / q.get_den());
        }
        normalize_primitive(v);
        out.nullspace.vectors.push_back(std::move(v));
    }
    return out;
}

Int det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<std::vector<Int>> work(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        work[static_cast<size_t>(r)].resize(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) work[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    }
    // Bareiss with sign tracking; the last pivot is the determinant.
    const int n = m.rows();
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (work[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != k) {
            std::swap(work[static_cast<size_t>(k)], work[static_cast<size_t>(pr)]);
            sign = -sign;
        }
        const Int pivot = work[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                work[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (pivot * work[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     work[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         work[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    denom;
            }
            work[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        denom = pivot;
    }
    return sign > 0 ? work[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]
                    : -work[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

Int det_mod_p(const ExactMatrix& m, const Int& p) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    const int n = m.rows();
    std::vector<std::vector<Int>> w(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        w[static_cast<size_t>(r)].resize(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c)
            mpz_mod(w[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpz_t(),
                    m.at(r, c).get_mpz_t(), p.get_mpz_t());
    }
    Int det = 1, inv;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (w[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != k) {
            std::swap(w[static_cast<size_t>(k)], w[static_cast<size_t>(pr)]);
            det = p - det;
        }
        const Int& pivot = w[static_cast<size_t>(k)][static_cast<size_t>(k)];
        det = det * pivot % p;
        if (mpz_invert(inv.get_mpz_t(), pivot.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("pivot not invertible mod p");
        for (int i = k + 1; i < n; ++i) {
            Int factor = w[static_cast<size_t>(i)][static_cast<size_t>(k)] * inv % p;
            if (factor == 0) continue;
            for (int j = k; j < n; ++j) {
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (w[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                     (p - factor) * w[static_cast<size_t>(k)][static_cast<size_t>(j)]) %
                    p;
            }
        }
    }
    return det % p;
}

ExactMatrix macaulay_matrix(const std::vector<SparsePoly>& forms) {
    if (forms.empty()) throw std::invalid_argument("no forms");
    const int v = static_cast<int>(forms.size()); // n+1 variables
    const int e = forms.front().total_degree();
    if (e < 1) throw std::invalid_argument("forms must be non-constant");
    for (const auto& f : forms) {
        if (f.nvars() > v) throw std::invalid_argument("form uses more variables than forms given");
        if (!f.is_homogeneous() || f.total_degree() != e)
            throw std::invalid_argument("forms must be homogeneous of equal degree");
    }
    const int t = v * (e - 1) + 1;
    const auto cols = monomials_of_degree(v, t);
    std::map<Monomial, int, GrevlexGreater> col_index;
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) col_index.emplace(cols[static_cast<size_t>(i)], i);

    ExactMatrix m(static_cast<int>(cols.size()), static_cast<int>(cols.size()));
    for (int r = 0; r < static_cast<int>(cols.size()); ++r) {
        const Monomial& mono = cols[static_cast<size_t>(r)];
        int owner = -1;
        for (int i = 0; i < v; ++i)
            if (mono.exp(i) >= static_cast<uint32_t>(e)) {
                owner = i;
                break;
            }
        // t > v*(e-1) forces some exponent >= e.
        const Monomial multiplier =
            mono.divide(Monomial::var(owner, static_cast<uint32_t>(e)));
        for (const auto& [fm, fc] : forms[static_cast<size_t>(owner)].terms())
            m.at(r, col_index.at(multiplier.times(fm))) += fc;
    }
    return m;
}

} // namespace hc
