#ifndef HC_POLY_HPP
#define HC_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hc/bigint.hpp"
#include "hc/monomial.hpp"

namespace hc {

/// Exact sparse multivariate polynomial over arbitrary-precision integers.
///
/// Terms are kept in a map ordered by descending grevlex, which doubles as
/// the canonical printing order. Zero coefficients are never stored; the
/// zero polynomial has an empty term map. Values are immutable in spirit:
/// every operation returns a fresh polynomial, so instances can be shared
/// freely across worker threads.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, Int, GrevlexGreater>;

    explicit SparsePoly(int nvars = 0);
    static SparsePoly zero(int nvars) { return SparsePoly(nvars); }
    static SparsePoly constant(Int c, int nvars);
    static SparsePoly variable(int i, int nvars);

    int nvars() const { return nvars_; }
    /// Widen the ambient variable count (never drops used variables).
    SparsePoly with_nvars(int nvars) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    bool uses_var(int var) const { return degree_in(var) > 0; }
    bool is_homogeneous() const;

    const TermMap& terms() const { return terms_; }
    Int coeff(const Monomial& m) const;
    Int constant_term() const { return coeff(Monomial::one()); }

    /// Adds c * m into the term map, erasing the entry if it cancels.
    void add_term(const Monomial& m, const Int& c);

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Int& c) const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    SparsePoly pow(unsigned e) const;

    Int eval(std::span<const Int> point) const;
    Int eval_mod(std::span<const Int> point, const Int& m) const;

    SparsePoly partial(int var) const;

    SparsePoly substitute(int var, const Int& value) const;
    /// Substitutes var = num/den and clears denominators: returns
    /// (den^D * p|_{var=num/den}, D) with D = degree_in(var).
    std::pair<SparsePoly, int> substitute_rational(int var, const Int& num,
                                                   const Int& den) const;

    /// Multiplies every term by var^(D - deg) so the result is a form of
    /// degree D = total_degree(). Requires degree_in(var) == 0.
    SparsePoly homogenize(int var) const;
    SparsePoly dehomogenize(int var) const { return substitute(var, 1); }

    /// Renumbers variables above `var` down by one. Requires var unused.
    SparsePoly remove_variable(int var) const;

    /// Canonical rendering: descending grevlex, explicit '*', no unary '+'.
    std::string to_string() const;

private:
    int nvars_;
    TermMap terms_;
};

inline SparsePoly operator*(const Int& c, const SparsePoly& p) { return p * c; }

/// Exact divisibility over the rationals: true iff g = f * h for some
/// h in Q[x]. Lead-term reduction with exact rational coefficients.
bool divides(const SparsePoly& f, const SparsePoly& g);

/// All integer roots of a nonzero polynomial in exactly one effective
/// variable, sorted increasing, multiplicities collapsed. Candidates are
/// divisors of the trailing nonzero coefficient (after stripping x^k
/// factors) within the Cauchy root bound; each is verified by evaluation.
/// When `range` is given, only roots inside [range->first, range->second]
/// are sought and the candidate scan is restricted to that window.
std::vector<Int> integer_roots_univariate(
    const SparsePoly& p,
    std::optional<std::pair<Int, Int>> range = std::nullopt);

} // namespace hc

#endif
