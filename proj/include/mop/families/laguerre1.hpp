#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::li {

// Laguerre I: weights e^{-x} x^{alpha_a} on [0, infinity), alpha_1 - alpha_2
// not an integer. Type I prefactor is 1/Gamma(alpha_a+1); Gamma moments make
// the reduced orthogonality sums rational.

struct Params {
    Rat alpha1, alpha2;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.alpha1 > -1 && p.alpha2 > -1)) throw usage_error("laguerre1: need alpha_a > -1");
    if (strict && is_integer(Rat(p.alpha1 - p.alpha2)))
        throw usage_error("laguerre1: need alpha1 - alpha2 not an integer");
}

template <class S>
MonoPoly<S> type2_coeffs(long n1, long n2, const S& a1, const S& a2) {
    const long s = n1 + n2;
    const S pref = S(parity_sign(s)) * pochhammer(S(a1 + 1), n1) * pochhammer(S(a2 + 1), n2);
    MonoPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m) {
            const S den = pochhammer(S(a2 + 1), l - m) * factorial_as<S>(m) * factorial_as<S>(l - m);
            if (scalar_is_zero(den)) throw pole_error("laguerre1 type II: inner pole");
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * pochhammer(S(a1 + 1 + n1), l - m) / den;
        }
        const S den = pochhammer(S(a1 + 1), l);
        if (scalar_is_zero(den)) throw pole_error("laguerre1 type II: (alpha1+1)_l = 0");
        out.coeffs[l] = pref * inner / den;
    }
    return trimmed(out);
}

// Core of Q^(a); full polynomial = core / Gamma(alpha_a + 1).
template <class S>
MonoPoly<S> type1_core(long n1, long n2, int a, const S& a1, const S& a2) {
    if (n1 < 1 || n2 < 1) throw usage_error("laguerre1 type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const long nh = s - na;
    const S al = (a == 1) ? a1 : a2;
    const S ah = (a == 1) ? a2 : a1;
    S pref = S(parity_sign(s - 1));
    {
        const S den = factorial_as<S>(na - 1) * pochhammer(S(ah - al), nh);
        if (scalar_is_zero(den)) throw pole_error("laguerre1 type I: (ahat - a)_{nhat} = 0");
        pref /= den;
    }
    MonoPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        const S den = factorial_as<S>(l) * pochhammer(S(al + 1), l) * pochhammer(S(al - ah + 1), l);
        if (scalar_is_zero(den)) throw pole_error("laguerre1 type I: (a - ahat + 1)_l = 0");
        out.coeffs[l] = pref * pochhammer(S(-na + 1), l) * pochhammer(S(al - ah - nh + 1), l) / den;
    }
    return trimmed(out);
}

inline Real type1_prefactor(int a, const Params& p) {
    const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
    return Real(1) / tgamma(to_real(Rat(al + 1)));
}

inline Rat pref_ratio(long, int, const Params&) { return Rat(1); }

// pref_a * integral x^e e^{-x} x^{alpha_a} dx = (alpha_a + 1)_e
inline Rat reduced_moment(long e, int a, const Params& p) {
    const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
    return pochhammer(Rat(al + 1), e);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& a1, const S& a2) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = n1 + n2 + n1 + a1 + 1;
    r.b2 = n1 + n2 + n2 + a2 + 1;
    r.c = n1 * n2 + n1 * (n1 + a1) + n2 * (n2 + a2);
    r.d1 = n2 * (n2 + a2) * (n2 + a2 - a1);
    r.d2 = n1 * (n1 + a1) * (n1 + a1 - a2);
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.alpha1, p.alpha2);
}

}  // namespace mop::families::li
