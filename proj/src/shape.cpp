#include "hc/shape.hpp"

#include <map>
#include <stdexcept>

#include "hc/matrix.hpp"

namespace hc {

int essential_variable_count(const SparsePoly& f, std::span<const int> vars) {
    if (f.is_zero()) throw std::invalid_argument("essential variables of the zero polynomial");
    if (vars.empty()) return 0;

    // Rows: monomials appearing in any partial; columns: the chosen vars.
    std::vector<SparsePoly> partials;
    partials.reserve(vars.size());
    for (int v : vars) partials.push_back(f.partial(v));

    std::map<Monomial, int, GrevlexGreater> row_of;
    for (const auto& p : partials)
        for (const auto& [m, c] : p.terms())
            row_of.emplace(m, 0);
    if (row_of.empty()) return 0; // constant polynomial depends on nothing
    int idx = 0;
    for (auto& [m, i] : row_of) i = idx++;

    ExactMatrix M(static_cast<int>(row_of.size()), static_cast<int>(vars.size()));
    for (int c = 0; c < static_cast<int>(vars.size()); ++c)
        for (const auto& [m, coef] : partials[static_cast<size_t>(c)].terms())
            M.at(row_of.at(m), c) = coef;

    const auto rn = rank_and_nullspace(M);
    return static_cast<int>(vars.size()) - static_cast<int>(rn.nullspace.vectors.size());
}

int essential_variable_count(const SparsePoly& f) {
    std::vector<int> vars(static_cast<size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) vars[static_cast<size_t>(i)] = i;
    return essential_variable_count(f, vars);
}

std::optional<SplitShape> detect_split_shape(const SparsePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("split shape of the zero polynomial");
    SparsePoly f0(f.nvars());
    SparsePoly x3_part(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        bool only_x1_x2 = true;
        for (int v = 0; v <= m.max_var(); ++v)
            if (m.exp(v) > 0 && v != 1 && v != 2) only_x1_x2 = false;
        if (only_x1_x2) {
            f0.add_term(m, c);
        } else if (m.exp(3) > 0) {
            x3_part.add_term(m, c);
        } else {
            return std::nullopt;
        }
    }
    SplitShape s;
    s.degenerate_f0 = f0.is_zero();
    s.f0 = std::move(f0);
    // divide the x3 block by x3 exactly
    SparsePoly g(f.nvars());
    for (const auto& [m, c] : x3_part.terms())
        g.add_term(m.with_exp(3, m.exp(3) - 1), c);
    s.g = std::move(g);
    return s;
}

} // namespace hc
