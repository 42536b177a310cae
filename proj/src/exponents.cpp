#include "hc/exponents.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hc {

namespace {

/// Floor of d^{1/r} * 10^digits as an exact integer (so successive digits
/// give shrinking enclosures of the root).
Int scaled_root_floor(long d, unsigned r, unsigned digits) {
    Int scaled = Int(d) * ipow(Int(10), r * digits);
    Int out;
    mpz_root(out.get_mpz_t(), scaled.get_mpz_t(), r);
    return out;
}

/// Exact sign of v = q0 + q_cbrt d^{-1/3} + q_sqrt d^{-1/2}: evaluates the
/// equivalent integer-coefficient expression against interval enclosures of
/// d^{1/3} and d^{1/2}, doubling precision until conclusive (or until the
/// expression is recognized as identically zero).
int surd_sign(const SurdValue& v) {
    if (v.q_cbrt == 0 && v.q_sqrt == 0) return sgn(v.q0);
    // v has the same sign as a*c*s + b*s + c*g with c = cbrt(d), s = sqrt(d)
    // after clearing: v * c * s = q0*c*s + q_cbrt*s + q_sqrt*c (c, s > 0).
    for (unsigned digits = 30; digits <= 480; digits *= 2) {
        const Int cl = scaled_root_floor(v.d, 3, digits), cu = cl + 1;
        const Int sl = scaled_root_floor(v.d, 2, digits), su = sl + 1;
        const Int scale = ipow(Int(10), digits);
        // terms: q0 * c * s / 10^{2k}, q_cbrt * s / 10^k, q_sqrt * c / 10^k
        auto lohi = [&](const Rat& q, const Int& tl, const Int& tu) {
            return q >= 0 ? std::pair<Rat, Rat>(q * Rat(tl), q * Rat(tu))
                          : std::pair<Rat, Rat>(q * Rat(tu), q * Rat(tl));
        };
        Rat lo(0), hi(0);
        {
            // q0 * c * s: interval product of positive enclosures
            const Int pll = cl * sl, puu = cu * su;
            auto [l, h] = lohi(v.q0, pll, puu);
            lo += l / Rat(scale * scale);
            hi += h / Rat(scale * scale);
        }
        {
            auto [l, h] = lohi(v.q_cbrt, sl, su);
            lo += l / Rat(scale);
            hi += h / Rat(scale);
        }
        {
            auto [l, h] = lohi(v.q_sqrt, cl, cu);
            lo += l / Rat(scale);
            hi += h / Rat(scale);
        }
        lo.canonicalize();
        hi.canonicalize();
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    // d^{1/3} and d^{1/2} are rational only for perfect powers; handle the
    // exact-zero cases that interval refinement cannot separate.
    const Int d3 = scaled_root_floor(v.d, 3, 0), d2 = scaled_root_floor(v.d, 2, 0);
    const bool cube = d3 * d3 * d3 == v.d, square = d2 * d2 == v.d;
    if ((v.q_cbrt == 0 || cube) && (v.q_sqrt == 0 || square)) {
        Rat exact = v.q0;
        if (v.q_cbrt != 0) exact += v.q_cbrt / Rat(d3);
        if (v.q_sqrt != 0) exact += v.q_sqrt / Rat(d2);
        exact.canonicalize();
        return sgn(exact);
    }
    throw std::logic_error("surd comparison did not converge");
}

} // namespace

double SurdValue::to_double() const {
    const double dd = static_cast<double>(d);
    return q0.get_d() + q_cbrt.get_d() / std::cbrt(dd) + q_sqrt.get_d() / std::sqrt(dd);
}

std::string SurdValue::to_string() const {
    std::ostringstream os;
    os << q0.get_str();
    if (q_cbrt != 0) os << " + (" << q_cbrt.get_str() << ")*" << d << "^(-1/3)";
    if (q_sqrt != 0) os << " + (" << q_sqrt.get_str() << ")*" << d << "^(-1/2)";
    return os.str();
}

bool SurdValue::operator==(const SurdValue& o) const {
    return surd_cmp(*this, o) == 0;
}

int surd_cmp(const SurdValue& a, const SurdValue& b) {
    if (a.d == b.d) {
        if (a.q0 == b.q0 && a.q_cbrt == b.q_cbrt && a.q_sqrt == b.q_sqrt) return 0;
        SurdValue diff{a.q0 - b.q0, a.q_cbrt - b.q_cbrt, a.q_sqrt - b.q_sqrt, a.d};
        return surd_sign(diff);
    }
    // Different carriers: compare through a common refinement numerically;
    // equality across different d is decided by interval separation only.
    for (unsigned digits = 30; digits <= 480; digits *= 2) {
        auto encl = [&](const SurdValue& v) {
            const Int cl = scaled_root_floor(v.d, 3, digits), cu = cl + 1;
            const Int sl = scaled_root_floor(v.d, 2, digits), su = sl + 1;
            const Rat scale(ipow(Int(10), digits));
            Rat lo = v.q0, hi = v.q0;
            auto add = [&](const Rat& q, const Int& tl, const Int& tu) {
                // q / root with enclosure tl/scale <= root <= tu/scale
                if (q == 0) return;
                if (q > 0) {
                    lo += q * scale / Rat(tu);
                    hi += q * scale / Rat(tl);
                } else {
                    lo += q * scale / Rat(tl);
                    hi += q * scale / Rat(tu);
                }
            };
            add(v.q_cbrt, cl, cu);
            add(v.q_sqrt, sl, su);
            lo.canonicalize();
            hi.canonicalize();
            return std::pair<Rat, Rat>(lo, hi);
        };
        auto [alo, ahi] = encl(a);
        auto [blo, bhi] = encl(b);
        if (ahi < blo) return -1;
        if (alo > bhi) return 1;
        if (a.q_cbrt == 0 && a.q_sqrt == 0 && b.q_cbrt == 0 && b.q_sqrt == 0)
            return a.q0 == b.q0 ? 0 : (a.q0 < b.q0 ? -1 : 1);
    }
    throw std::logic_error("surd comparison across carriers did not converge");
}

SurdValue theta(long d) {
    if (d < 6) throw std::invalid_argument("theta(d) requires d >= 6");
    SurdValue v;
    v.d = d;
    if (d >= 50) {
        // zero
    } else if (d >= 20) {
        v.q_cbrt = Rat(11, 4);
        v.q0 = Rat(-3, 4);
    } else if (d >= 16) {
        v.q_cbrt = 3;
        v.q_sqrt = Rat(1, 3);
        v.q0 = Rat(-11, 12);
    } else if (d >= 9) {
        v.q_cbrt = 3;
        v.q_sqrt = Rat(2, 3);
        v.q0 = -1;
    } else {
        v.q_sqrt = 2;
    }
    return v;
}

ExponentTable exponent_table(long n, long d) {
    if (n < 2 || d < 2) throw std::invalid_argument("exponent_table requires n >= 2, d >= 2");
    ExponentTable t;
    t.n = n;
    t.d = d;
    t.dim_growth = n - 1;
    if (d >= 6) {
        t.theta_value = theta(d);
        SurdValue mb = *t.theta_value;
        mb.q0 += n - 2;
        t.main_bound = mb;
    }
    SurdValue p4{Rat(2) - Rat(3, 4), Rat(0), Rat(45, 16), d};
    SurdValue two{Rat(2), Rat(0), Rat(0), d};
    t.p4_bound = surd_cmp(p4, two) >= 0 ? p4 : two;
    return t;
}

} // namespace hc
