#include "hc/hypersurface.hpp"

#include <stdexcept>

namespace hc {

Hypersurface Hypersurface::affine(SparsePoly f, int n) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("hypersurface polynomial must be non-constant");
    if (f.degree_in(0) != 0)
        throw std::invalid_argument("affine polynomials use x1..xn (x0 is the closure variable)");
    if (f.nvars() > n + 1)
        throw std::invalid_argument("polynomial uses variables beyond the ambient dimension");
    const int d = f.total_degree();
    return Hypersurface(f.with_nvars(n + 1), Ambient::Affine, n, d);
}

Hypersurface Hypersurface::projective(SparsePoly F) {
    if (F.is_zero() || F.is_constant())
        throw std::invalid_argument("hypersurface polynomial must be non-constant");
    if (!F.is_homogeneous())
        throw std::invalid_argument("projective hypersurface requires a homogeneous form");
    const int n = F.nvars() - 1;
    if (n < 1) throw std::invalid_argument("projective ambient needs at least two variables");
    const int d = F.total_degree();
    return Hypersurface(std::move(F), Ambient::Projective, n, d);
}

Int Hypersurface::eval_affine(std::span<const Int> point) const {
    if (!is_affine()) throw std::invalid_argument("affine evaluation on projective hypersurface");
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("point dimension mismatch");
    std::vector<Int> full(static_cast<size_t>(n_) + 1, Int(0));
    for (int i = 0; i < n_; ++i) full[static_cast<size_t>(i) + 1] = point[static_cast<size_t>(i)];
    return f_.with_nvars(n_ + 1).eval(full);
}

Hypersurface Hypersurface::projective_closure() const {
    if (!is_affine()) return *this;
    return Hypersurface::projective(f_.homogenize(0));
}

std::string Hypersurface::describe() const {
    return (is_affine() ? "affine A^" : "projective P^") + std::to_string(n_) +
           " degree " + std::to_string(d_) + ": " + f_.to_string();
}

} // namespace hc
