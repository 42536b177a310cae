#ifndef HC_HYPERSURFACE_HPP
#define HC_HYPERSURFACE_HPP

#include <span>
#include <string>

#include "hc/poly.hpp"

namespace hc {

enum class Ambient { Affine, Projective };

/// A nonzero, non-constant polynomial tagged with its ambient space.
///
/// Conventions: a projective hypersurface in P^n is a homogeneous form in
/// x0..xn. An affine hypersurface in A^n uses x1..xn with x0 reserved for
/// the projective closure; affine points are vectors (x1,...,xn).
class Hypersurface {
public:
    static Hypersurface affine(SparsePoly f, int n);
    static Hypersurface projective(SparsePoly F);

    const SparsePoly& poly() const { return f_; }
    Ambient ambient() const { return amb_; }
    bool is_affine() const { return amb_ == Ambient::Affine; }
    /// Ambient dimension: A^n or P^n.
    int n() const { return n_; }
    int degree() const { return d_; }

    /// Evaluation at an affine point (x1..xn); affine hypersurfaces only.
    Int eval_affine(std::span<const Int> point) const;

    /// Homogenization via x0; identity on projective inputs.
    Hypersurface projective_closure() const;

    std::string describe() const;

private:
    Hypersurface(SparsePoly f, Ambient a, int n, int d)
        : f_(std::move(f)), amb_(a), n_(n), d_(d) {}
    SparsePoly f_;
    Ambient amb_;
    int n_;
    int d_;
};

} // namespace hc

#endif
