#ifndef HC_GFPK_HPP
#define HC_GFPK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hc {

/// Arithmetic in F_{p^k} for small p^k, built on F_p[t]/(irreducible).
///
/// Elements are encoded as integers in [0, p^k): the base-p digits are the
/// coefficients of the residue polynomial, least significant digit first.
/// Multiplication is table-driven, so q = p^k is capped by the constructor.
class FiniteField {
public:
    FiniteField(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }

    long add(long a, long b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    long mul(long a, long b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
    long neg(long a) const { return neg_[static_cast<size_t>(a)]; }
    /// Embedding of an integer residue (0 <= r < p) as a field constant.
    long embed(long r) const { return r; }

    /// Coefficients of the defining irreducible polynomial, degree k, monic.
    const std::vector<long>& modulus() const { return modpoly_; }

    /// Printable form of an element as a polynomial in the generator t.
    std::string to_string(long a) const;

    static long pow_long(long base, int e); // small helper, no overflow checks

private:
    long p_;
    int k_;
    long q_;
    std::vector<long> modpoly_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_;
};

} // namespace hc

#endif
