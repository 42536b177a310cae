#ifndef HC_MATRIX_HPP
#define HC_MATRIX_HPP

#include <vector>

#include "hc/bigint.hpp"
#include "hc/poly.hpp"

namespace hc {

/// Dense matrix with exact integer entries. Rational rows are admitted by
/// clearing each row to a common denominator (the scaling is recorded).
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);
    static ExactMatrix identity(int n);
    static ExactMatrix from_rational_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    /// Per-row denominators cleared by from_rational_rows (1 otherwise).
    const std::vector<Int>& row_scalings() const { return scalings_; }

private:
    int rows_, cols_;
    std::vector<Int> a_;
    std::vector<Int> scalings_;
};

/// Primitive integer vectors (content 1, first nonzero entry positive),
/// pairwise independent, each annihilating the source matrix exactly.
struct NullspaceBasis {
    std::vector<std::vector<Int>> vectors;
};

struct RankNullspace {
    int rank = 0;
    NullspaceBasis nullspace;
};

/// Exact rank over Q via fraction-free (Bareiss) elimination, plus a
/// normalized nullspace basis with cols - rank vectors.
RankNullspace rank_and_nullspace(const ExactMatrix& m);

/// Exact determinant (Bareiss). Square input required.
Int det_exact(const ExactMatrix& m);

/// Determinant reduced mod p, computed by elimination over F_p.
Int det_mod_p(const ExactMatrix& m, const Int& p);

/// The Macaulay matrix of n+1 homogeneous forms of equal degree e in n+1
/// variables at critical degree t = (n+1)(e-1)+1. Rows follow the standard
/// partition of degree-t monomials (a monomial is assigned to the first
/// form index i with exponent of x_i >= e); columns are all degree-t
/// monomials in descending grevlex order. The matrix is square, and its
/// determinant is the resultant of the forms times an extraneous minor.
ExactMatrix macaulay_matrix(const std::vector<SparsePoly>& forms);

} // namespace hc

#endif
