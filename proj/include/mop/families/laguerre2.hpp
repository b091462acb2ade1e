#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::lii {

// Laguerre II: weights e^{-c_a x} x^{alpha0} on [0, infinity), shared alpha0,
// c_1 != c_2 > 0. Type I prefactor is c_a^{alpha0+1} / Gamma(alpha0 + n1+n2);
// the c_a^{alpha0+1} cancels the moment factor c_a^{-(alpha0+1)} exactly, so
// the reduced moments stay rational.

struct Params {
    Rat alpha0, c1, c2;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.alpha0 > -1)) throw usage_error("laguerre2: need alpha0 > -1");
    if (!(p.c1 > 0 && p.c2 > 0)) throw usage_error("laguerre2: need c_a > 0");
    if (strict && p.c1 == p.c2) throw usage_error("laguerre2: need c1 != c2");
}

template <class S>
MonoPoly<S> type2_coeffs(long n1, long n2, const S& a0, const S& c1, const S& c2) {
    const long s = n1 + n2;
    const S pref = S(parity_sign(s)) * pochhammer(S(a0 + 1), s) / (ipow(c1, n1) * ipow(c2, n2));
    MonoPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m)
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * ipow(c1, m) * ipow(c2, l - m) /
                     (factorial_as<S>(m) * factorial_as<S>(l - m));
        const S den = pochhammer(S(a0 + 1), l);
        if (scalar_is_zero(den)) throw pole_error("laguerre2 type II: (alpha0+1)_l = 0");
        out.coeffs[l] = pref * inner / den;
    }
    return trimmed(out);
}

// Core of Q^(a); full polynomial = c_a^{alpha0+1} / Gamma(alpha0+s) * core.
template <class S>
MonoPoly<S> type1_core(long n1, long n2, int a, const S& a0, const S& c1, const S& c2) {
    if (n1 < 1 || n2 < 1) throw usage_error("laguerre2 type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const S ca = (a == 1) ? c1 : c2;
    const S ch = (a == 1) ? c2 : c1;
    if (scalar_is_zero(S(ch - ca))) throw pole_error("laguerre2 type I: c1 = c2");
    const S pref = S(parity_sign(na - 1)) * factorial_as<S>(s - 2) /
                   (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1)) * ipow(S(ca * ch / (ch - ca)), s - 1);
    const S x = (ca - ch) * ca / ch;
    const S y = (ch - ca) / ch;
    MonoPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            const S den = pochhammer(S(-s + 2), l + m) * factorial_as<S>(m);
            if (scalar_is_zero(den)) throw pole_error("laguerre2 type I: inner pole");
            inner += pochhammer(S(-na + 1), l + m) * pochhammer(S(a0 + 1), l + m) * ipow(y, m) / den;
        }
        const S den = factorial_as<S>(l) * pochhammer(S(a0 + 1), l);
        if (scalar_is_zero(den)) throw pole_error("laguerre2 type I: (alpha0+1)_l = 0");
        out.coeffs[l] = pref * ipow(x, l) * inner / den;
    }
    return trimmed(out);
}

inline Real type1_prefactor(long s, int a, const Params& p) {
    const Rat ca = (a == 1) ? p.c1 : p.c2;
    return pow(to_real(ca), to_real(Rat(p.alpha0 + 1))) / tgamma(to_real(Rat(p.alpha0 + s)));
}

inline Rat pref_ratio(long s, int, const Params& p) { return Rat(1) / Rat(p.alpha0 + s); }

// pref_a * integral x^e e^{-c_a x} x^{alpha0} dx = Gamma(alpha0+e+1)/Gamma(alpha0+s) / c_a^e
inline Rat reduced_moment(long e, long s, int a, const Params& p) {
    const Rat ca = (a == 1) ? p.c1 : p.c2;
    return gamma_ratio(Rat(p.alpha0 + s), e + 1 - s) / ipow(ca, e);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& a0, const S& c1, const S& c2) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = (n2 * c1 + 2 * n1 * c2 + n2 * c2 + a0 * c2 + c2) / (c1 * c2);
    r.b2 = (n1 * c2 + 2 * n2 * c1 + n1 * c1 + a0 * c1 + c1) / (c1 * c2);
    r.c = (n1 * c2 * c2 + n2 * c1 * c1) * (n1 + n2 + a0) / (ipow(c1, 2) * ipow(c2, 2));
    r.d1 = n2 * (c1 - c2) * (n1 + n2 + a0 - 1) * (n1 + n2 + a0) / (c1 * ipow(c2, 3));
    r.d2 = n1 * (c2 - c1) * (n1 + n2 + a0 - 1) * (n1 + n2 + a0) / (ipow(c1, 3) * c2);
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.alpha0, p.c1, p.c2);
}

}  // namespace mop::families::lii
