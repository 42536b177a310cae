#ifndef HC_MONOMIAL_HPP
#define HC_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hc {

/// Exponent vector of a power product x0^e0 * x1^e1 * ...
///
/// Trailing zero exponents are stripped, so equal monomials compare equal
/// regardless of the ambient variable count they were built in.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) { trim(); }

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, uint32_t e = 1);

    uint32_t exp(int i) const {
        return (i >= 0 && static_cast<size_t>(i) < e_.size()) ? e_[i] : 0;
    }
    /// Largest variable index with positive exponent, -1 for the unit monomial.
    int max_var() const { return static_cast<int>(e_.size()) - 1; }
    uint32_t total_degree() const;
    bool is_one() const { return e_.empty(); }

    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divide(const Monomial& o) const; // requires divisible_by(o)
    Monomial with_exp(int var, uint32_t e) const;

    const std::vector<uint32_t>& exps() const { return e_; }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }
    std::vector<uint32_t> e_;
};

/// Three-way graded reverse-lexicographic comparison: positive when a > b.
/// Higher total degree wins; on ties the rightmost differing exponent
/// decides, smaller exponent ranking higher (so x0 > x1 > ... at equal degree).
int grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a, b) > 0;
    }
};

/// All monomials of total degree exactly d in nvars variables, in descending
/// grevlex order. Deterministic; used for Macaulay columns and kernel bases.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// All monomials of total degree <= d, descending grevlex (graded) order.
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

} // namespace hc

#endif
