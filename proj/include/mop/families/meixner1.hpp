#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::mi {

// Meixner I: two Pascal weights w_a(k) = (beta)_k c_a^k / k! on N_0 with a
// shared beta. Type I prefactor splits off (1-c_a)^beta; the rational core
// keeps (1-c_a)^{n1+n2-1} and everything else.

struct Params {
    Rat beta, c1, c2;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.beta > 0)) throw usage_error("meixner1: need beta > 0");
    if (!(p.c1 > 0 && p.c1 < 1 && p.c2 > 0 && p.c2 < 1)) throw usage_error("meixner1: need c_a in (0,1)");
    if (strict && p.c1 == p.c2) throw usage_error("meixner1: need c1 != c2");
}

inline Rat weight(long k, int a, const Params& p) {
    if (k < 0) throw index_error("meixner1: point outside support N_0");
    const Rat c = (a == 1) ? p.c1 : p.c2;
    return pochhammer(p.beta, k) * ipow(c, k) / factorial(k);
}

template <class S>
PochPoly<S> type2_coeffs(long n1, long n2, const S& beta, const S& c1, const S& c2) {
    const long s = n1 + n2;
    const S pref = pochhammer(beta, s) * ipow(S(c1 / (c1 - 1)), n1) * ipow(S(c2 / (c2 - 1)), n2);
    const S x1 = (c1 - 1) / c1, x2 = (c2 - 1) / c2;
    PochPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m)
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * ipow(x1, m) * ipow(x2, l - m) /
                     (factorial_as<S>(m) * factorial_as<S>(l - m));
        const S den = pochhammer(beta, l);
        if (scalar_is_zero(den)) throw pole_error("meixner1 type II: (beta)_l = 0");
        out.coeffs[l] = pref * inner / den;
    }
    return trimmed(out);
}

// Core of Q^(a); full polynomial = (1-c_a)^beta * core.
template <class S>
PochPoly<S> type1_core(long n1, long n2, int a, const S& beta, const S& c1, const S& c2) {
    if (n1 < 1 || n2 < 1) throw usage_error("meixner1 type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const S ca = (a == 1) ? c1 : c2;
    const S ch = (a == 1) ? c2 : c1;
    if (scalar_is_zero(S(ca - ch))) throw pole_error("meixner1 type I: c1 = c2");
    S pref = S(parity_sign(na - 1)) * factorial_as<S>(s - 2) * ipow(S(1 - ca), s - 1) *
             ipow(S((1 - ch) / (ca - ch)), s - 1) /
             (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1));
    {
        const S den = pochhammer(beta, s - 1);
        if (scalar_is_zero(den)) throw pole_error("meixner1 type I: (beta)_{s-1} = 0");
        pref /= den;
    }
    const S x = (ca - ch) * (1 - ca) / (ca * (1 - ch));
    const S y = (ca - ch) / (1 - ch);
    PochPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            const S den = pochhammer(S(-s + 2), l + m) * factorial_as<S>(m);
            if (scalar_is_zero(den)) throw pole_error("meixner1 type I: inner pole");
            inner += pochhammer(S(-na + 1), l + m) * pochhammer(beta, l + m) * ipow(y, m) / den;
        }
        const S den = factorial_as<S>(l) * pochhammer(beta, l);
        if (scalar_is_zero(den)) throw pole_error("meixner1 type I: (beta)_l = 0");
        out.coeffs[l] = pref * ipow(x, l) * inner / den;
    }
    return trimmed(out);
}

inline Real type1_prefactor(int a, const Params& p) {
    const Rat ca = (a == 1) ? p.c1 : p.c2;
    return pow(to_real(Rat(1 - ca)), to_real(p.beta));
}

// pref is index-free, so core-level recursion residuals are exact.
inline Rat pref_ratio(long, int, const Params&) { return Rat(1); }

// pref_a * sum_k (-k)_i w_a(k) = (-1)^i c_a^i (beta)_i / (1-c_a)^i
inline Rat reduced_moment(long i, int a, const Params& p) {
    const Rat c = (a == 1) ? p.c1 : p.c2;
    return Rat(parity_sign(i)) * ipow(c, i) * pochhammer(p.beta, i) / ipow(Rat(1 - c), i);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& beta, const S& c1, const S& c2) {
    auto r1 = [](const S& c) { return c / (1 - c); };
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = n1 * (1 + c1) / (1 - c1) + n2 * (r1(c1) + r1(c2) + 1) + r1(c1) * beta;
    r.b2 = n2 * (1 + c2) / (1 - c2) + n1 * (r1(c1) + r1(c2) + 1) + r1(c2) * beta;
    r.c = (beta + n1 + n2 - 1) * (n1 * c1 / ipow(S(1 - c1), 2) + n2 * c2 / ipow(S(1 - c2), 2));
    r.d1 = n2 * (beta + n1 + n2 - 2) * (beta + n1 + n2 - 1) * c2 * (c2 - c1) / ((1 - c1) * ipow(S(1 - c2), 3));
    r.d2 = n1 * (beta + n1 + n2 - 2) * (beta + n1 + n2 - 1) * c1 * (c1 - c2) / (ipow(S(1 - c1), 3) * (1 - c2));
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.beta, p.c1, p.c2);
}

}  // namespace mop::families::mi
