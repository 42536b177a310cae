#ifndef HC_SHAPE_HPP
#define HC_SHAPE_HPP

#include <optional>
#include <span>

#include "hc/poly.hpp"

namespace hc {

/// Number of variables f genuinely depends on after a linear change of
/// coordinates: |vars| minus the dimension of the space of constant vectors
/// v with v . grad(f) = 0. Computed as an exact rank over Q of the matrix
/// whose columns are the partials' coefficient vectors.
int essential_variable_count(const SparsePoly& f, std::span<const int> vars);

/// Convenience overload over all variables x0..x_{nvars-1}.
int essential_variable_count(const SparsePoly& f);

/// Literal-coordinate split f = f0(x1,x2) + x3 * g: every term either
/// involves only {x1, x2} or is divisible by x3. No change of variables is
/// searched. degenerate_f0 marks the f0 = 0 edge case.
struct SplitShape {
    SparsePoly f0;
    SparsePoly g;
    bool degenerate_f0 = false;
};

std::optional<SplitShape> detect_split_shape(const SparsePoly& f);

} // namespace hc

#endif
