#ifndef HC_UNIMODULAR_HPP
#define HC_UNIMODULAR_HPP

#include <vector>

#include "hc/bigint.hpp"
#include "hc/poly.hpp"

namespace hc {

/// Integer matrix with determinant +/-1, validated on construction.
class UnimodularMatrix {
public:
    UnimodularMatrix(int dim, std::vector<Int> entries);
    static UnimodularMatrix identity(int dim);
    /// I + c * E_ij (i != j): the elementary shear x_j -> x_j + c x_i... see
    /// apply_unimodular for the substitution convention actually used.
    static UnimodularMatrix elementary(int dim, int i, int j, const Int& c);
    static UnimodularMatrix swap(int dim, int i, int j);

    int dim() const { return dim_; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    int det_sign() const { return det_sign_; }
    Int entry_bound() const;

    UnimodularMatrix inverse() const;
    UnimodularMatrix operator*(const UnimodularMatrix& o) const;
    bool operator==(const UnimodularMatrix& o) const { return a_ == o.a_; }

private:
    int dim_;
    std::vector<Int> a_;
    int det_sign_;
};

/// Composition with the linear substitution x_i -> sum_j A[i][j] x_j, i.e.
/// the result q satisfies q(x) = p(A x). With inverse set, A^{-1} is used,
/// matching G = F o A^{-1}. Total degree is preserved.
SparsePoly apply_unimodular(const SparsePoly& p, const UnimodularMatrix& A,
                            bool inverse = false);

} // namespace hc

#endif
