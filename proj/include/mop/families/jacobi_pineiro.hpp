#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::jp {

// Jacobi-Pineiro: weights x^{alpha_a} against the measure (1-x)^beta dx on
// [0,1]. Type I polynomials split as (transcendental prefactor) x (rational
// core); the prefactor is
//   pref_a = Gamma(alpha_a+beta+s) / (Gamma(beta+s) Gamma(alpha_a+1)),  s = n1+n2,
// and every orthogonality integral of pref_a * core against the Beta moments
// collapses to rationals, so exact verification works end to end.

struct Params {
    Rat alpha1, alpha2, beta;
};

inline void validate(const Params& p) {
    if (!(p.alpha1 > -1 && p.alpha2 > -1 && p.beta > -1))
        throw usage_error("jacobi-pineiro: need alpha1, alpha2, beta > -1");
}

template <class S>
MonoPoly<S> type2_coeffs(long n1, long n2, const S& a1, const S& a2, const S& b) {
    const long s = n1 + n2;
    S pref = S(parity_sign(s)) * pochhammer(S(a1 + 1), n1) * pochhammer(S(a2 + 1), n2);
    {
        const S den = pochhammer(S(a1 + b + s + 1), n1) * pochhammer(S(a2 + b + s + 1), n2);
        if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro type II: prefactor pole");
        pref /= den;
    }
    MonoPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m) {
            S den = pochhammer(S(a2 + 1), l - m) * pochhammer(S(a1 + b + n1 + 1), l - m);
            if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro type II: inner pole");
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * pochhammer(S(a2 + b + s + 1), l - m) *
                     pochhammer(S(a1 + n1 + 1), l - m) / (factorial_as<S>(m) * factorial_as<S>(l - m) * den);
        }
        S den = pochhammer(S(a1 + 1), l);
        if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro type II: l-term pole");
        out.coeffs[l] = pref * pochhammer(S(a1 + b + n1 + 1), l) / den * inner;
    }
    return trimmed(out);
}

// Rational core of Q^(a); full polynomial = pref_a(s) * core.
template <class S>
MonoPoly<S> type1_core(long n1, long n2, int a, const S& a1, const S& a2, const S& b) {
    if (n1 < 1 || n2 < 1) throw usage_error("jacobi-pineiro type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const long nh = s - na;
    const S al = (a == 1) ? a1 : a2;
    const S ah = (a == 1) ? a2 : a1;
    S pref = S(parity_sign(s - 1)) * pochhammer(S(a1 + b + s), n1) * pochhammer(S(a2 + b + s), n2);
    {
        const S den = factorial_as<S>(na - 1) * pochhammer(S(ah - al), nh);
        if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro type I: (ahat - a)_{nhat} = 0");
        pref /= den;
    }
    MonoPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        const S den = factorial_as<S>(l) * pochhammer(S(al + 1), l) * pochhammer(S(al - ah + 1), l);
        if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro type I: (a - ahat + 1)_l = 0");
        out.coeffs[l] = pref * pochhammer(S(-na + 1), l) * pochhammer(S(al + b + s), l) *
                        pochhammer(S(al - ah - nh + 1), l) / den;
    }
    return trimmed(out);
}

inline Real type1_prefactor(long s, int a, const Params& p) {
    const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
    return tgamma(to_real(Rat(al + p.beta + s))) / (tgamma(to_real(Rat(p.beta + s))) * tgamma(to_real(Rat(al + 1))));
}

// pref_a(s+1)/pref_a(s), rational: lets recursion residuals stay exact.
inline Rat pref_ratio(long s, int a, const Params& p) {
    const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
    return Rat(al + p.beta + s) / Rat(p.beta + s);
}

// pref_a * integral of x^e against x^{alpha_a}(1-x)^beta dx, rational.
inline Rat reduced_moment(long e, long s, int a, const Params& p) {
    const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
    return pochhammer(Rat(al + 1), e) / pochhammer(Rat(p.beta + 1), s - 1) /
           gamma_ratio(Rat(al + p.beta + s), e + 2 - s);
}

// Near-neighbor coefficients: the large-N limits of the Hahn helper
// fractions. The N-dependent factors cancel, leaving these N-free products.
namespace detail {

template <class S>
S frac(const S& num, const S& den) {
    if (scalar_is_zero(den)) throw pole_error("jacobi-pineiro recursion: zero denominator");
    return num / den;
}

template <class S>
S abar(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    if (scalar_is_zero(n1)) return S(0);
    return frac(S(n1 * (n1 + n2 + a2 + b) * (n1 + n2 + b)),
                S((n1 + 2 * n2 + a2 + b) * (2 * n1 + n2 + a1 + b) * (2 * n1 + n2 + a1 + b + 1)));
}

template <class S>
S bbar(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    return frac(S((n1 + a1 - a2) * (n1 + n2 + a1 + b) * (n1 + n2 + b - 1)),
                S((n1 + 2 * n2 + a2 + b - 1) * (2 * n1 + n2 + a1 + b) * (2 * n1 + n2 + a1 + b - 1)));
}

template <class S>
S cbar(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    return frac(S((n1 + a1) * (n1 + n2 + a1 + b - 1) * (n1 + n2 + a2 + b - 1)),
                S((n1 + 2 * n2 + a2 + b - 2) * (2 * n1 + n2 + a1 + b - 2) * (2 * n1 + n2 + a1 + b - 1)));
}

template <class S>
S b1_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    return abar(n1, n2, a1, a2, b) + abar(n2, n1, a2, S(a1 + 1), b) + cbar(S(n1 + 1), S(n2 + 1), a1, a2, b);
}

template <class S>
S c_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    const S a = abar(n1, n2, a1, a2, b);
    const S a_swap = abar(n2, n1, a2, S(a1 + 1), b);
    S acc(0);
    if (!scalar_is_zero(S(a + a_swap))) acc += (a + a_swap) * cbar(n2, S(n1 + 1), a2, a1, b);
    if (!scalar_is_zero(a)) acc += a * bbar(n1, n2, a1, a2, b);
    return acc;
}

template <class S>
S d1_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    const S a = abar(n1, n2, a1, a2, b);
    if (scalar_is_zero(a)) return S(0);
    return a * bbar(n1, n2, a1, a2, b) * cbar(n1, n2, a1, a2, b);
}

}  // namespace detail

template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& a1, const S& a2, const S& b) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = detail::b1_of(n1, n2, a1, a2, b);
    r.b2 = detail::b1_of(n2, n1, a2, a1, b);
    r.c = detail::c_of(n1, n2, a1, a2, b);
    r.d1 = scalar_is_zero(n1) ? S(0) : detail::d1_of(n2, n1, a2, a1, b);
    r.d2 = scalar_is_zero(n2) ? S(0) : detail::d1_of(n1, n2, a1, a2, b);
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.alpha1, p.alpha2, p.beta);
}

}  // namespace mop::families::jp
