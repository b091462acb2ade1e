#pragma once

#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::families::krav {

// Kravchuk: binomial weights w_a(k) = C(N,k) p_a^k (1-p_a)^{N-k} on {0..N}.
// Everything here is rational, so type I, type II, orthogonality and the
// moment oracle all verify exactly. Indexes are restricted to n1+n2 <= N.

struct Params {
    Rat p1, p2;
    long big_n = 0;
};

inline void validate(const Params& p, bool strict = true) {
    if (!(p.p1 > 0 && p.p1 < 1 && p.p2 > 0 && p.p2 < 1)) throw usage_error("kravchuk: need p_a in (0,1)");
    if (p.big_n < 0) throw usage_error("kravchuk: need N >= 0");
    if (strict && p.p1 == p.p2) throw usage_error("kravchuk: need p1 != p2");
}

inline void require_index(const MultiIndex& idx, const Params& p) {
    if (idx.n1 < 0 || idx.n2 < 0 || idx.order() > p.big_n)
        throw index_error("kravchuk: index needs n1,n2 >= 0 and n1+n2 <= N");
}

inline Rat weight(long k, int a, const Params& p) {
    if (k < 0 || k > p.big_n) throw index_error("kravchuk: point outside support {0..N}");
    const Rat pa = (a == 1) ? p.p1 : p.p2;
    return binomial(p.big_n, k) * ipow(pa, k) * ipow(Rat(1 - pa), p.big_n - k);
}

template <class S>
PochPoly<S> type2_coeffs(long n1, long n2, const S& p1, const S& p2, const S& big_n) {
    const long s = n1 + n2;
    const S pref = ipow(p1, n1) * ipow(p2, n2);
    PochPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m)
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) /
                     (factorial_as<S>(m) * factorial_as<S>(l - m) * ipow(p1, m) * ipow(p2, l - m));
        out.coeffs[l] = pref * pochhammer(S(-big_n + l), s - l) * inner;
    }
    return trimmed(out);
}

template <class S>
PochPoly<S> type1_coeffs(long n1, long n2, int a, const S& p1, const S& p2, const S& big_n) {
    if (n1 < 1 || n2 < 1) throw usage_error("kravchuk type I: interior index required");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const S pa = (a == 1) ? p1 : p2;
    const S ph = (a == 1) ? p2 : p1;
    if (scalar_is_zero(S(pa - ph))) throw pole_error("kravchuk type I: p1 = p2");
    S pref = S(parity_sign(na - 1)) * factorial_as<S>(s - 2) /
             (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1) * ipow(S(pa - ph), s - 1));
    {
        const S den = pochhammer(S(big_n - s + 2), s - 1);
        if (scalar_is_zero(den)) throw pole_error("kravchuk type I: (N-s+2)_{s-1} = 0");
        pref /= den;
    }
    const S x = (pa - ph) / (pa * (1 - pa));
    const S y = (ph - pa) / (1 - pa);
    PochPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l < na; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            const S den = pochhammer(S(-s + 2), l + m) * factorial_as<S>(m);
            if (scalar_is_zero(den)) throw pole_error("kravchuk type I: inner pole");
            inner += pochhammer(S(-na + 1), l + m) * pochhammer(S(-big_n + l), m) * ipow(y, m) / den;
        }
        out.coeffs[l] = pref * ipow(x, l) * inner / factorial_as<S>(l);
    }
    return trimmed(out);
}

inline Real type1_prefactor(int, const Params&) { return Real(1); }
inline Rat pref_ratio(long, int, const Params&) { return Rat(1); }

// sum_k (-k)_i w_a(k) = (-1)^i (N-i+1)_i p_a^i, finite binomial moment
inline Rat reduced_moment(long i, int a, const Params& p) {
    if (i > p.big_n) {
        // (-k)_i vanishes identically on {0..N} only pointwise; sum directly.
        Rat acc(0);
        for (long k = 0; k <= p.big_n; ++k) acc += pochhammer(Rat(-k), i) * weight(k, a, p);
        return acc;
    }
    const Rat pa = (a == 1) ? p.p1 : p.p2;
    return Rat(parity_sign(i)) * pochhammer(Rat(p.big_n - i + 1), i) * ipow(pa, i);
}

// d^(1) pairs against the linear form at (n1-1,n2) and carries the n2-type
// structural factor, d^(2) the n1-type one (see the Hahn module).
template <class S>
RecursionCoeffs<S> recursion_generic(const S& n1, const S& n2, const S& p1, const S& p2, const S& big_n) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = n1 + n2 + (big_n - n1 - n2 - n1) * p1 - n2 * p2;
    r.b2 = n1 + n2 - n1 * p1 + (big_n - n1 - n2 - n2) * p2;
    r.c = (big_n - n1 - n2 + 1) * (n1 * p1 * (1 - p1) + n2 * p2 * (1 - p2));
    r.d1 = (big_n - n1 - n2 + 1) * (big_n - n1 - n2 + 2) * n2 * p2 * (1 - p2) * (p2 - p1);
    r.d2 = (big_n - n1 - n2 + 1) * (big_n - n1 - n2 + 2) * n1 * p1 * (1 - p1) * (p1 - p2);
    return r;
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const Params& p) {
    return recursion_generic(Rat(idx.n1), Rat(idx.n2), p.p1, p.p2, Rat(p.big_n));
}

}  // namespace mop::families::krav
