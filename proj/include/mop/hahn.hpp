#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mop/linsolve.hpp"
#include "mop/poly.hpp"
#include "mop/types.hpp"

namespace mop::hahn {

// Hahn weight pair on {0..N}:
//   w_a(k) = (alpha_a+1)_k (beta+1)_{N-k} / (k! (N-k)!),  alpha_1, alpha_2, beta > -1.
struct Params {
    Rat alpha1, alpha2, beta;
    long big_n = 0;
};

inline void validate(const Params& p) {
    if (!(p.alpha1 > -1 && p.alpha2 > -1 && p.beta > -1))
        throw usage_error("hahn: need alpha1, alpha2, beta > -1");
    if (p.big_n < 0) throw usage_error("hahn: need N >= 0");
}

inline bool index_ok(const MultiIndex& idx, const Params& p) {
    return idx.n1 >= 0 && idx.n2 >= 0 && idx.order() <= p.big_n + 1;
}

inline void require_index(const MultiIndex& idx, const Params& p) {
    if (!index_ok(idx, p))
        throw index_error("hahn: index (" + std::to_string(idx.n1) + "," + std::to_string(idx.n2) +
                          ") needs n1,n2 >= 0 and n1+n2 <= N+1");
}

inline Rat weight(long k, int a, const Params& p) {
    validate(p);
    if (a != 1 && a != 2) throw usage_error("hahn: weight index must be 1 or 2");
    if (k < 0 || k > p.big_n) throw index_error("hahn: point outside support {0..N}");
    const Rat alpha = (a == 1) ? p.alpha1 : p.alpha2;
    return pochhammer(Rat(alpha + 1), k) * pochhammer(Rat(p.beta + 1), p.big_n - k) /
           (factorial(k) * factorial(p.big_n - k));
}

namespace detail {

template <class S>
S inv_poch(const S& x, long n, const char* what) {
    const S p = pochhammer(x, n);
    if (scalar_is_zero(p)) throw pole_error(std::string("pole: (") + to_str(x) + ")_" + std::to_string(n) + " = 0 in " + what);
    return S(1) / p;
}

}  // namespace detail

// Monic type II polynomial in the Pochhammer basis, as a double sum over the
// Kampe de Feriet expansion. Valid for generic scalar parameters; the ratio
// (-N)_{n1+n2} / (-N)_l is collapsed to (-N+l)_{n1+n2-l} so integer N at the
// top index n1+n2 = N+1 stays finite.
template <class S>
PochPoly<S> type2_coeffs(long n1, long n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    const long s = n1 + n2;
    const S pref = pochhammer(S(a1 + 1), n1) * pochhammer(S(a2 + 1), n2) *
                   detail::inv_poch(S(a1 + b + s + 1), n1, "type II prefactor") *
                   detail::inv_poch(S(a2 + b + s + 1), n2, "type II prefactor");
    PochPoly<S> out;
    out.coeffs.assign(s + 1, S(0));
    for (long l = 0; l <= s; ++l) {
        S inner(0);
        for (long m = std::max<long>(0, l - n2); m <= std::min(l, n1); ++m) {
            inner += pochhammer(S(-n1), m) * pochhammer(S(-n2), l - m) /
                     (factorial_as<S>(m) * factorial_as<S>(l - m)) *
                     pochhammer(S(a2 + b + s + 1), l - m) * pochhammer(S(a1 + n1 + 1), l - m) *
                     detail::inv_poch(S(a2 + 1), l - m, "type II inner sum") *
                     detail::inv_poch(S(a1 + b + n1 + 1), l - m, "type II inner sum");
        }
        out.coeffs[l] = pref * pochhammer(S(-big_n + l), s - l) *
                        pochhammer(S(a1 + b + n1 + 1), l) * detail::inv_poch(S(a1 + 1), l, "type II l-term") * inner;
    }
    return trimmed(out);
}

// One type I component Q^(a). `extern_pref` supplies the two prefactor pieces
// that involve N-dependent lengths, (N+1-n1-n2)! / (alpha_a+beta+n1+n2+n_a)_{N+1-n1-n2},
// which the caller evaluates exactly (integer N) or through Gamma (real N).
template <class S>
PochPoly<S> type1_component(long n1, long n2, int a, const S& a1, const S& a2, const S& b, const S& big_n,
                            const S& extern_pref) {
    if (n1 < 1 || n2 < 1) throw usage_error("type1_component: needs interior index (n1, n2 >= 1)");
    const long s = n1 + n2;
    const long na = (a == 1) ? n1 : n2;
    const long nh = s - na;
    const S al = (a == 1) ? a1 : a2;
    const S ah = (a == 1) ? a2 : a1;

    S pref = extern_pref * S(parity_sign(na - 1)) * factorial_as<S>(s - 2) /
             (factorial_as<S>(n1 - 1) * factorial_as<S>(n2 - 1)) *
             detail::inv_poch(S(b + 1), s - 1, "type I prefactor") *
             pochhammer(S(ah + b + nh + 1), s - 1) *
             detail::inv_poch(S(al - ah - nh + 1), s - 1, "type I prefactor");

    PochPoly<S> out;
    out.coeffs.assign(na, S(0));
    for (long l = 0; l <= na - 1; ++l) {
        S inner(0);
        for (long m = 0; m <= na - 1 - l; ++m) {
            inner += pochhammer(S(-na + 1), l + m) * pochhammer(S(-big_n + l), m) *
                     pochhammer(S(ah - al - na + 1), m) /
                     (factorial_as<S>(m)) *
                     detail::inv_poch(S(-s + 2), l + m, "type I inner sum") *
                     detail::inv_poch(S(ah + b + nh + 1), l + m, "type I inner sum");
        }
        out.coeffs[l] = pref * pochhammer(S(al + b + s), l) * pochhammer(S(al - ah - nh + 1), l) *
                        detail::inv_poch(S(al + 1), l, "type I l-term") / factorial_as<S>(l) * inner;
    }
    return trimmed(out);
}

// Exact explicit type I pair at an interior index.
inline PochPair<Rat> type1_explicit(const MultiIndex& idx, const Params& p) {
    require_index(idx, p);
    if (std::min(idx.n1, idx.n2) < 1) throw usage_error("type1_explicit: boundary index");
    const long s = idx.order();
    auto extern_pref = [&](int a) {
        const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
        const long na = (a == 1) ? idx.n1 : idx.n2;
        return factorial(p.big_n + 1 - s) *
               detail::inv_poch(Rat(al + p.beta + s + na), p.big_n + 1 - s, "type I prefactor");
    };
    PochPair<Rat> pair;
    pair.q1 = type1_component(idx.n1, idx.n2, 1, p.alpha1, p.alpha2, p.beta, Rat(p.big_n), extern_pref(1));
    pair.q2 = type1_component(idx.n1, idx.n2, 2, p.alpha1, p.alpha2, p.beta, Rat(p.big_n), extern_pref(2));
    return pair;
}

// ---------------------------------------------------------------------------
// Independent moment-system oracles.

// Type I: solve { sum_k (-N+k)_j [A1 w1 + A2 w2](k) = delta_{j, n1+n2-1} } for
// the stacked Pochhammer-basis coefficients of A1 (n1 unknowns), A2 (n2).
inline PochPair<Rat> solve_oracle_type1(const MultiIndex& idx, const Params& p) {
    require_index(idx, p);
    const long s = idx.order();
    PochPair<Rat> pair;
    if (s == 0) return pair;

    std::vector<std::vector<Rat>> mat(s, std::vector<Rat>(s, Rat(0)));
    std::vector<Rat> rhs(s, Rat(0));
    rhs[s - 1] = 1;
    for (long j = 0; j < s; ++j) {
        for (long k = 0; k <= p.big_n; ++k) {
            const Rat t = pochhammer(Rat(-p.big_n + k), j);
            if (scalar_is_zero(t)) continue;
            Rat basis(1);  // (-k)_i
            for (long i = 0; i < std::max(idx.n1, idx.n2); ++i) {
                if (i < idx.n1) mat[j][i] += t * basis * weight(k, 1, p);
                if (i < idx.n2) mat[j][idx.n1 + i] += t * basis * weight(k, 2, p);
                basis *= Rat(-k + i);
            }
        }
    }
    const auto x = solve_dense(mat, rhs);
    pair.q1.coeffs.assign(x.begin(), x.begin() + idx.n1);
    pair.q2.coeffs.assign(x.begin() + idx.n1, x.end());
    pair.q1 = trimmed(pair.q1);
    pair.q2 = trimmed(pair.q2);
    return pair;
}

// Type II: monic solve of the discrete orthogonality conditions.
inline PochPoly<Rat> solve_oracle_type2(const MultiIndex& idx, const Params& p) {
    require_index(idx, p);
    const long s = idx.order();
    PochPoly<Rat> top = poly_scale(poch_basis<Rat>(s), Rat(parity_sign(s)));
    if (s == 0) return top;

    std::vector<std::vector<Rat>> mat(s, std::vector<Rat>(s, Rat(0)));
    std::vector<Rat> rhs(s, Rat(0));
    long row = 0;
    for (int a = 1; a <= 2; ++a) {
        const long cnt = (a == 1) ? idx.n1 : idx.n2;
        for (long j = 0; j < cnt; ++j, ++row) {
            for (long k = 0; k <= p.big_n; ++k) {
                const Rat tw = pochhammer(Rat(-k), j) * weight(k, a, p);
                if (scalar_is_zero(tw)) continue;
                Rat basis(1);
                for (long i = 0; i <= s; ++i) {
                    if (i < s)
                        mat[row][i] += tw * basis;
                    else
                        rhs[row] -= tw * basis * Rat(parity_sign(s));
                    basis *= Rat(-k + i);
                }
            }
        }
    }
    const auto x = solve_dense(mat, rhs);
    PochPoly<Rat> out;
    out.coeffs = x;
    out.coeffs.push_back(Rat(parity_sign(s)));
    return trimmed(out);
}

// ---------------------------------------------------------------------------
// Public exact operations.

inline PochPoly<Rat> type2(const MultiIndex& idx, const Params& p) {
    validate(p);
    require_index(idx, p);
    return type2_coeffs(idx.n1, idx.n2, p.alpha1, p.alpha2, p.beta, Rat(p.big_n));
}

struct Type1Info {
    bool used_oracle = false;
    std::string diagnostic;
};

// Explicit hypergeometric coefficients where the closed form applies;
// boundary indexes and exact parameter poles route to the moment-system
// oracle (the closed-form prefactor is singular at n_a = 0, and integer
// alpha_1 - alpha_2 can zero a Pochhammer denominator).
inline PochPair<Rat> type1(const MultiIndex& idx, const Params& p, Type1Info* info = nullptr) {
    validate(p);
    require_index(idx, p);
    if (std::min(idx.n1, idx.n2) < 1) {
        if (info) info->used_oracle = true;
        return solve_oracle_type1(idx, p);
    }
    try {
        return type1_explicit(idx, p);
    } catch (const pole_error& e) {
        if (info) {
            info->used_oracle = true;
            info->diagnostic = e.what();
        }
        return solve_oracle_type1(idx, p);
    }
}

inline Rat linear_form(long k, const MultiIndex& idx, const Params& p) {
    if (k < 0 || k > p.big_n) throw index_error("linear_form: point outside support {0..N}");
    const auto pair = type1(idx, p);
    return poly_eval(pair.q1, Rat(k)) * weight(k, 1, p) + poly_eval(pair.q2, Rat(k)) * weight(k, 2, p);
}

// Orthogonality sums. Type I pairs against (-N+k)_j, type II against (-k)_j.
inline Rat moment_sum(const MultiIndex& idx, Kind kind, std::optional<int> a, long j, const Params& p,
                      bool force = false) {
    validate(p);
    require_index(idx, p);
    if (j < 0) throw usage_error("moment_sum: j must be nonnegative");
    if (kind == Kind::type1) {
        if (!force && j > idx.order() - 1) throw usage_error("moment_sum: type I needs j <= n1+n2-1 (or force)");
        const auto pair = type1(idx, p);
        Rat acc(0);
        for (long k = 0; k <= p.big_n; ++k) {
            const Rat q = poly_eval(pair.q1, Rat(k)) * weight(k, 1, p) + poly_eval(pair.q2, Rat(k)) * weight(k, 2, p);
            acc += pochhammer(Rat(-p.big_n + k), j) * q;
        }
        return acc;
    }
    if (!a || (*a != 1 && *a != 2)) throw usage_error("moment_sum: type II needs weight index a in {1,2}");
    const long na = (*a == 1) ? idx.n1 : idx.n2;
    if (!force && j > na - 1) throw usage_error("moment_sum: type II needs j <= n_a-1 (or force)");
    const auto q = type2(idx, p);
    Rat acc(0);
    for (long k = 0; k <= p.big_n; ++k) acc += pochhammer(Rat(-k), j) * poly_eval(q, Rat(k)) * weight(k, *a, p);
    return acc;
}

inline Rat biorth_pairing(const MultiIndex& n, const MultiIndex& m, const Params& p) {
    validate(p);
    require_index(n, p);
    require_index(m, p);
    const auto pair = type1(n, p);
    const auto q2 = type2(m, p);
    Rat acc(0);
    for (long k = 0; k <= p.big_n; ++k) {
        const Rat q = poly_eval(pair.q1, Rat(k)) * weight(k, 1, p) + poly_eval(pair.q2, Rat(k)) * weight(k, 2, p);
        acc += q * poly_eval(q2, Rat(k));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Near-neighbor recursion coefficients via the A, B, C, D helper fractions.

namespace detail {

template <class S>
S frac(const S& num, const S& den, const char* what) {
    if (scalar_is_zero(den)) throw pole_error(std::string("pole: zero denominator in ") + what);
    return num / den;
}

// A and D carry the structural factors n1 (resp. n1*n2); at a zero factor the
// coefficient is zero without looking at the denominator, which can itself
// vanish there for degenerate parameter sums like alpha1 + beta = -n2.
template <class S>
S coef_a(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    if (scalar_is_zero(n1)) return S(0);
    return frac(S(n1 * (n1 + n2 + a2 + b) * (n1 + n2 + b) * (big_n + n1 + a1 + b + 1)),
                S((n1 + 2 * n2 + a2 + b) * (2 * n1 + n2 + a1 + b) * (2 * n1 + n2 + a1 + b + 1)), "A");
}

template <class S>
S coef_b(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    return frac(S((n1 + a1 - a2) * (n1 + n2 + a1 + b) * (n1 + n2 + b - 1) * (big_n - n1 - n2 + 1)),
                S((n1 + 2 * n2 + a2 + b - 1) * (2 * n1 + n2 + a1 + b) * (2 * n1 + n2 + a1 + b - 1)), "B");
}

template <class S>
S coef_c(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    return frac(S((n1 + a1) * (n1 + n2 + a1 + b - 1) * (n1 + n2 + a2 + b - 1) * (big_n - n1 - n2 + 2)),
                S((n1 + 2 * n2 + a2 + b - 2) * (2 * n1 + n2 + a1 + b - 2) * (2 * n1 + n2 + a1 + b - 1)), "C");
}

template <class S>
S coef_d(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    (void)big_n;
    if (scalar_is_zero(n1) || scalar_is_zero(n2)) return S(0);
    return frac(S(n1 * n2 * (n1 + n2 + b)), S((2 * n1 + n2 + a1 + b + 1) * (n1 + 2 * n2 + a2 + b)), "D");
}

// b^(1) and c in the direct variables; the swapped entries follow from
// b^(2)(n1,n2,a1,a2) = b^(1)(n2,n1,a2,a1) and likewise for d. Products with a
// vanishing left factor short-circuit, since the remaining factors are only
// defined generically.
template <class S>
S b1_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    return coef_a(n1, n2, a1, a2, b, big_n) + coef_a(n2, n1, a2, S(a1 + 1), b, big_n) +
           coef_c(S(n1 + 1), S(n2 + 1), a1, a2, b, big_n) + coef_d(n1, n2, a1, a2, b, big_n);
}

template <class S>
S c_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    const S a = coef_a(n1, n2, a1, a2, b, big_n);
    const S a_swap = coef_a(n2, n1, a2, S(a1 + 1), b, big_n);
    const S d = coef_d(n1, n2, a1, a2, b, big_n);
    const S left = a + a_swap + d;
    S acc(0);
    if (!scalar_is_zero(left)) acc += left * coef_c(n2, S(n1 + 1), a2, a1, b, big_n);
    if (!scalar_is_zero(a)) acc += a * coef_b(n1, n2, a1, a2, b, big_n);
    return acc;
}

template <class S>
S d1_of(const S& n1, const S& n2, const S& a1, const S& a2, const S& b, const S& big_n) {
    const S a = coef_a(n1, n2, a1, a2, b, big_n);
    if (scalar_is_zero(a)) return S(0);
    return a * coef_b(n1, n2, a1, a2, b, big_n) * coef_c(n1, n2, a1, a2, b, big_n);
}

}  // namespace detail

// d^(1)(n1,n2) pairs xB_(n1,n2) against the linear form at (n1-1,n2), so it
// vanishes for n1 = 0 and is the A*B*C product taken in the swapped variables;
// d^(2) is the same product in the direct variables. (The defining pairings
// and all eight recursion relations fix this labeling; see the tests.)
template <class S>
RecursionCoeffs<S> recursion_coeffs_generic(const S& n1, const S& n2, const S& a1, const S& a2, const S& b,
                                            const S& big_n) {
    RecursionCoeffs<S> r{S(0), S(0), S(0), S(0), S(0)};
    r.b1 = detail::b1_of(n1, n2, a1, a2, b, big_n);
    r.b2 = detail::b1_of(n2, n1, a2, a1, b, big_n);
    r.c = detail::c_of(n1, n2, a1, a2, b, big_n);
    r.d1 = scalar_is_zero(n1) ? S(0) : detail::d1_of(n2, n1, a2, a1, b, big_n);
    r.d2 = scalar_is_zero(n2) ? S(0) : detail::d1_of(n1, n2, a1, a2, b, big_n);
    return r;
}

inline RecursionCoeffs<Rat> recursion_coeffs(const MultiIndex& idx, const Params& p) {
    validate(p);
    if (idx.n1 < 0 || idx.n2 < 0) throw index_error("recursion_coeffs: negative index");
    return recursion_coeffs_generic(Rat(idx.n1), Rat(idx.n2), p.alpha1, p.alpha2, p.beta, Rat(p.big_n));
}

// ---------------------------------------------------------------------------
// Reconstruction from the two seeds (1,0), (1,1) with recursion coefficients
// only. Step-line values advance through the two step-line relations (each
// divides by a d coefficient); off-step-line indexes come from the connection
// relation, which needs no inversion.

class Type1Reconstructor {
public:
    explicit Type1Reconstructor(const Params& p) : p_(p) { validate(p); }

    PochPair<Rat> at(const MultiIndex& idx) {
        if (idx.n1 < 0 || idx.n2 < 0) return {};
        require_index(idx, p_);
        return get(idx.n1, idx.n2);
    }

private:
    Params p_;
    std::map<std::pair<long, long>, PochPair<Rat>> memo_;

    RecursionCoeffs<Rat> rc(long n1, long n2) { return recursion_coeffs({n1, n2}, p_); }

    static PochPair<Rat> combine(const PochPair<Rat>& u, const Rat& cu, const PochPair<Rat>& v, const Rat& cv) {
        PochPair<Rat> r;
        r.q1 = poly_add(poly_scale(u.q1, cu), poly_scale(v.q1, cv));
        r.q2 = poly_add(poly_scale(u.q2, cu), poly_scale(v.q2, cv));
        return r;
    }

    PochPair<Rat> get(long n1, long n2) {
        if (n1 < 0 || n2 < 0 || (n1 == 0 && n2 == 0)) return {};
        if (n1 + n2 > p_.big_n + 1)
            throw usage_error("type1_via_recursion: walk leaves the admissible index range (n1+n2 <= N+1)");
        const auto key = std::make_pair(n1, n2);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        PochPair<Rat> result;
        if ((n1 == 1 && n2 == 0) || (n1 == 1 && n2 == 1)) {
            result = type1({n1, n2}, p_);
        } else if (n1 == n2) {
            // x Q_(n-1,n-1) = Q_(n-1,n-2) + b2(n-1,n-2) Q_(n-1,n-1)
            //                + c(n-1,n-1) Q_(n,n-1) + d1(n,n-1) Q_(n,n)
            const long n = n1;
            const auto qa = get(n - 1, n - 1);
            const auto qb = get(n - 1, n - 2);
            const auto qc = get(n, n - 1);
            const Rat b2 = rc(n - 1, n - 2).b2;
            const Rat c = rc(n - 1, n - 1).c;
            const Rat d1 = rc(n, n - 1).d1;
            if (scalar_is_zero(d1))
                throw pole_error("type1_via_recursion: d1 vanishes at (" + std::to_string(n) + "," + std::to_string(n - 1) + ")");
            PochPair<Rat> num;
            num.q1 = poly_sub(poly_sub(poly_sub(poly_mul_x(qa.q1), qb.q1), poly_scale(qa.q1, b2)), poly_scale(qc.q1, c));
            num.q2 = poly_sub(poly_sub(poly_sub(poly_mul_x(qa.q2), qb.q2), poly_scale(qa.q2, b2)), poly_scale(qc.q2, c));
            result.q1 = poly_scale(num.q1, Rat(1) / d1);
            result.q2 = poly_scale(num.q2, Rat(1) / d1);
        } else if (n1 == n2 + 1) {
            // x Q_(m,m-1) = Q_(m-1,m-1) + b1(m-1,m-1) Q_(m,m-1)
            //              + c(m,m-1) Q_(m,m) + d2(m,m) Q_(m+1,m)
            const long m = n2;
            const auto qa = get(m, m - 1);
            const auto qb = get(m - 1, m - 1);
            const auto qc = get(m, m);
            const Rat b1 = rc(m - 1, m - 1).b1;
            const Rat c = rc(m, m - 1).c;
            const Rat d2 = rc(m, m).d2;
            if (scalar_is_zero(d2))
                throw pole_error("type1_via_recursion: d2 vanishes at (" + std::to_string(m) + "," + std::to_string(m) + ")");
            PochPair<Rat> num;
            num.q1 = poly_sub(poly_sub(poly_sub(poly_mul_x(qa.q1), qb.q1), poly_scale(qa.q1, b1)), poly_scale(qc.q1, c));
            num.q2 = poly_sub(poly_sub(poly_sub(poly_mul_x(qa.q2), qb.q2), poly_scale(qa.q2, b1)), poly_scale(qc.q2, c));
            result.q1 = poly_scale(num.q1, Rat(1) / d2);
            result.q2 = poly_scale(num.q2, Rat(1) / d2);
        } else if (n1 > n2 + 1) {
            // below the step-line: Q_(n1,n2) = Q_(n1-1,n2+1) - (b2(n1,n2) - b1(n1-1,n2+1)) Q_(n1,n2+1)
            const auto u = get(n1 - 1, n2 + 1);
            const auto v = get(n1, n2 + 1);
            const Rat f = rc(n1, n2).b2 - rc(n1 - 1, n2 + 1).b1;
            result = combine(u, Rat(1), v, Rat(-f));
        } else {
            // above the diagonal: Q_(n1,n2) = Q_(n1+1,n2-1) + (b2(n1+1,n2-1) - b1(n1,n2)) Q_(n1+1,n2)
            const auto u = get(n1 + 1, n2 - 1);
            const auto v = get(n1 + 1, n2);
            const Rat f = rc(n1 + 1, n2 - 1).b2 - rc(n1, n2).b1;
            result = combine(u, Rat(1), v, f);
        }
        memo_.emplace(key, result);
        return result;
    }
};

inline PochPair<Rat> type1_via_recursion(const MultiIndex& idx, const Params& p) {
    Type1Reconstructor rec(p);
    return rec.at(idx);
}

}  // namespace mop::hahn
