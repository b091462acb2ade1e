#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::charlier {

// Charlier: Poisson weights w_a(k) = b_a^k / k! on N_0, b_1 != b_2 > 0.
// Type I prefactor is e^{-b_a}.

struct Params {
    Rat b1, b2;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.b1 > 0 && p.b2 > 0)) throw usage_error("charlier: need b_a > 0");
    if (strict && p.b1 == p.b2) throw usage_error("charlier: need b1 != b2");
}

inline Rat weight(long k, int a, const Params& p) {
    if (k < 0) throw index_error("charlier: point outside support N_0");
    const Rat b = (a == 1) ? p.b1 : p.b2;
    return ipow(b, k) / factorial(k);
}

template <class S>
PochPoly<S> type2_coeffs(long n1, long n2, const S& b1, const S& b2) {
    const long s = n1 + n2;
    const S pref = S(parity_sign(s)) * ipow(b1, n1) * ipow(b2, n2);
    PochPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m)
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) * ipow(S(-1 / b1), m) *
                     ipow(S(-1 / b2), l - m) / (factorial_as<S>(m) * factorial_as<S>(l - m));
        out.coeffs[l] = pref * inner;
    }
    return trimmed(out);
}

// Core of Q^(a); full polynomial = e^{-b_a} * core.
template <class S>
PochPoly<S> type1_core(long n1, long n2, int a, const S& b1, const S& b2) {
    if (n1 < 1 || n2 < 1) throw usage_error("charlier type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const S ba = (a == 1) ? b1 : b2;
    const S bh = (a == 1) ? b2 : b1;
    if (scalar_is_zero(S(ba - bh))) throw pole_error("charlier type I: b1 = b2");
    const S pref = S(parity_sign(na - 1)) * factorial_as<S>(s - 2) /
                   (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1) * ipow(S(ba - bh), s - 1));
    const S x = (ba - bh) / ba;
    const S y = ba - bh;
    PochPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            const S den = pochhammer(S(-s + 2), l + m) * factorial_as<S>(m);
            if (scalar_is_zero(den)) throw pole_error("charlier type I: inner pole");
            inner += pochhammer(S(-na + 1), l + m) * ipow(y, m) / den;
        }
        out.coeffs[l] = pref * ipow(x, l) * inner / factorial_as<S>(l);
    }
    return trimmed(out);
}

inline Real type1_prefactor(int a, const Params& p) {
    const Rat b = (a == 1) ? p.b1 : p.b2;
    return exp(-to_real(b));
}

inline Rat pref_ratio(long, int, const Params&) { return Rat(1); }

// pref_a * sum_k (-k)_i w_a(k) = (-1)^i b_a^i
inline Rat reduced_moment(long i, int a, const Params& p) {
    const Rat b = (a == 1) ? p.b1 : p.b2;
    return Rat(parity_sign(i)) * ipow(b, i);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& b1, const S& b2) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = n1 + n2 + b1;
    r.b2 = n1 + n2 + b2;
    r.c = n1 * b1 + n2 * b2;
    r.d1 = n2 * b2 * (b2 - b1);
    r.d2 = n1 * b1 * (b1 - b2);
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.b1, p.b2);
}

}  // namespace mop::families::charlier
