#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::mii {

// Meixner II: w_a(k) = (beta_a)_k c^k / k! on N_0, shared c, beta_1 - beta_2
// not an integer. Type I prefactor splits off (1-c)^{beta_a}.

struct Params {
    Rat beta1, beta2, c;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.beta1 > 0 && p.beta2 > 0)) throw usage_error("meixner2: need beta1, beta2 > 0");
    if (!(p.c > 0 && p.c < 1)) throw usage_error("meixner2: need c in (0,1)");
    if (strict && is_integer(Rat(p.beta1 - p.beta2))) throw usage_error("meixner2: need beta1 - beta2 not an integer");
}

inline Rat weight(long k, int a, const Params& p) {
    if (k < 0) throw index_error("meixner2: point outside support N_0");
    const Rat beta = (a == 1) ? p.beta1 : p.beta2;
    return pochhammer(beta, k) * ipow(p.c, k) / factorial(k);
}

template <class S>
PochPoly<S> type2_coeffs(long n1, long n2, const S& b1, const S& b2, const S& c) {
    const long s = n1 + n2;
    const S pref = ipow(S(c / (c - 1)), s) * pochhammer(b1, n1) * pochhammer(b2, n2);
    const S z = (c - 1) / c;
    PochPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m) {
            const S den = pochhammer(b2, l - m) * factorial_as<S>(m) * factorial_as<S>(l - m);
            if (scalar_is_zero(den)) throw pole_error("meixner2 type II: inner pole");
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * pochhammer(S(b1 + n1), l - m) / den;
        }
        const S den = pochhammer(b1, l);
        if (scalar_is_zero(den)) throw pole_error("meixner2 type II: (beta1)_l = 0");
        out.coeffs[l] = pref * ipow(z, l) * inner / den;
    }
    return trimmed(out);
}

// Core of Q^(a); full polynomial = (1-c)^{beta_a} * core.
template <class S>
PochPoly<S> type1_core(long n1, long n2, int a, const S& b1, const S& b2, const S& c) {
    if (n1 < 1 || n2 < 1) throw usage_error("meixner2 type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const long nh = s - na;
    const S ba = (a == 1) ? b1 : b2;
    const S bh = (a == 1) ? b2 : b1;
    S pref = ipow(S(1 - c), s + na - 2) / ipow(c, s - 1) * S(parity_sign(na - 1)) * factorial_as<S>(s - 2) /
             (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1));
    {
        const S den = pochhammer(S(ba - bh - nh + 1), s - 1);
        if (scalar_is_zero(den)) throw pole_error("meixner2 type I: (beta_a - beta_ahat - nhat + 1)_{s-1} = 0");
        pref /= den;
    }
    const S y = c / (c - 1);
    PochPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            const S den = pochhammer(S(-s + 2), l + m) * factorial_as<S>(m);
            if (scalar_is_zero(den)) throw pole_error("meixner2 type I: inner pole");
            inner += pochhammer(S(-na + 1), l + m) * pochhammer(S(bh - ba - na + 1), m) * ipow(y, m) / den;
        }
        const S den = factorial_as<S>(l) * pochhammer(ba, l);
        if (scalar_is_zero(den)) throw pole_error("meixner2 type I: (beta_a)_l = 0");
        out.coeffs[l] = pref * pochhammer(S(ba - bh - nh + 1), l) * inner / den;
    }
    return trimmed(out);
}

inline Real type1_prefactor(int a, const Params& p) {
    const Rat ba = (a == 1) ? p.beta1 : p.beta2;
    return pow(to_real(Rat(1 - p.c)), to_real(ba));
}

inline Rat pref_ratio(long, int, const Params&) { return Rat(1); }

// pref_a * sum_k (-k)_i w_a(k) = (-1)^i c^i (beta_a)_i / (1-c)^i
inline Rat reduced_moment(long i, int a, const Params& p) {
    const Rat ba = (a == 1) ? p.beta1 : p.beta2;
    return Rat(parity_sign(i)) * ipow(p.c, i) * pochhammer(ba, i) / ipow(Rat(1 - p.c), i);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& b1, const S& b2, const S& c) {
    const S r = c / (1 - c);
    RecursionCoeffs<S> out{S(0), S(0), S(0), S(0), S(0)};
    out.b1 = n1 + n2 + r * (b1 + n1 + n2 + n1);
    out.b2 = n1 + n2 + r * (b2 + n1 + n2 + n2);
    out.c = c / ipow(S(1 - c), 2) * (n1 * n2 + n1 * (n1 + b1 - 1) + n2 * (n2 + b2 - 1));
    out.d1 = ipow(c, 2) / ipow(S(1 - c), 3) * n2 * (n2 + b2 - 1) * (n2 + b2 - b1);
    out.d2 = ipow(c, 2) / ipow(S(1 - c), 3) * n1 * (n1 + b1 - 1) * (n1 + b1 - b2);
    return out;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.beta1, p.beta2, p.c);
}

}  // namespace mop::families::mii
