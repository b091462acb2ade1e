#pragma once

#include "mop/families.hpp"

namespace mop::families {

// Type I orthogonality residuals. For j <= n1+n2-2 the contract is 0; the
// j = n1+n2-1 row is the normalization pairing against the monic type II
// polynomial and the residual subtracts 1.
//
// Kravchuk sums are finite, and for Jacobi-Pineiro / Laguerre I / Laguerre II
// the reduced moments keep everything rational, so those four evaluate
// exactly. Meixner I/II and Charlier run as truncated series over Real with a
// certified geometric (resp. super-exponential) tail bound.

inline Rat orth_residual_exact(const MultiIndex& idx, long j, const FamilyParams& fp) {
    const FamilyId id = id_of(fp);
    if (!orth_exact(id)) throw usage_error("orth_residual_exact: family needs float mode");
    require_index(idx, fp);
    const long s = idx.order();
    if (j < 0 || j > s - 1) throw usage_error("orth_residual_exact: need 0 <= j <= n1+n2-1");
    const Rat target = (j == s - 1) ? Rat(1) : Rat(0);

    if (id == FamilyId::Kravchuk) {
        const auto& kp = std::get<krav::Params>(fp);
        const auto pair = std::get<PochPair<Rat>>(type1_core(idx, fp));
        Rat acc(0);
        for (long k = 0; k <= kp.big_n; ++k) {
            const Rat q = poly_eval(pair.q1, Rat(k)) * krav::weight(k, 1, kp) +
                          poly_eval(pair.q2, Rat(k)) * krav::weight(k, 2, kp);
            const Rat t = (j == s - 1) ? Rat(parity_sign(s - 1)) * pochhammer(Rat(-k), s - 1)
                                       : pochhammer(Rat(-kp.big_n + k), j);
            acc += t * q;
        }
        return acc - target;
    }

    const auto pair = std::get<MonoPair<Rat>>(type1_core(idx, fp));
    Rat acc(0);
    for (int a = 1; a <= 2; ++a) {
        const auto& q = (a == 1) ? pair.q1 : pair.q2;
        for (std::size_t i = 0; i < q.coeffs.size(); ++i)
            if (!scalar_is_zero(q.coeffs[i]))
                acc += q.coeffs[i] * detail::reduced_mono_moment(fp, s, a, static_cast<long>(i) + j);
    }
    return acc - target;
}

struct FloatOrthResult {
    Real residual;
    Real tail_bound;
    long terms = 0;
};

namespace detail {

// (x + c)_j expanded in monomials
inline MonoPoly<Rat> shifted_poch_poly(const Rat& c, long j) {
    MonoPoly<Rat> acc;
    acc.coeffs = {Rat(1)};
    for (long r = 0; r < j; ++r) {
        MonoPoly<Rat> lin;
        lin.coeffs = {Rat(c + r), Rat(1)};
        acc = poly_mul(acc, lin);
    }
    return acc;
}

struct DiscreteFloatFamily {
    Real pref1, pref2;       // index-independent type I prefactors
    Real wratio_c1, wratio_c2;  // geometric part of w(k+1)/w(k)
    Rat beta1, beta2;        // (beta + k) factor, unused for plain Poisson
    bool poisson = false;
    Real b1, b2;             // Poisson rates
};

inline DiscreteFloatFamily float_family(const FamilyParams& fp) {
    DiscreteFloatFamily f{Real(1), Real(1), Real(0), Real(0), Rat(0), Rat(0), false, Real(0), Real(0)};
    if (const auto* p = std::get_if<mi::Params>(&fp)) {
        f.pref1 = mi::type1_prefactor(1, *p);
        f.pref2 = mi::type1_prefactor(2, *p);
        f.wratio_c1 = to_real(p->c1);
        f.wratio_c2 = to_real(p->c2);
        f.beta1 = f.beta2 = p->beta;
    } else if (const auto* p2 = std::get_if<mii::Params>(&fp)) {
        f.pref1 = mii::type1_prefactor(1, *p2);
        f.pref2 = mii::type1_prefactor(2, *p2);
        f.wratio_c1 = f.wratio_c2 = to_real(p2->c);
        f.beta1 = p2->beta1;
        f.beta2 = p2->beta2;
    } else if (const auto* p3 = std::get_if<charlier::Params>(&fp)) {
        f.pref1 = charlier::type1_prefactor(1, *p3);
        f.pref2 = charlier::type1_prefactor(2, *p3);
        f.poisson = true;
        f.b1 = to_real(p3->b1);
        f.b2 = to_real(p3->b2);
    } else {
        throw usage_error("float orthogonality: Meixner I/II or Charlier expected");
    }
    return f;
}

}  // namespace detail

inline FloatOrthResult orth_residual_float(const MultiIndex& idx, long j, const FamilyParams& fp) {
    const FamilyId id = id_of(fp);
    if (orth_exact(id)) throw usage_error("orth_residual_float: use exact mode for this family");
    require_index(idx, fp);
    const long s = idx.order();
    if (j < 0 || j > s - 1) throw usage_error("orth_residual_float: need 0 <= j <= n1+n2-1");
    const Real target = (j == s - 1) ? Real(1) : Real(0);

    const auto pair = std::get<PochPair<Rat>>(type1_core(idx, fp));
    const auto info = detail::float_family(fp);

    // moment basis: (k+beta)_j for Meixner I, (-k)_j otherwise; the top row
    // always pairs against the monic type II polynomial.
    auto test_poly = [&](int a) -> MonoPoly<Rat> {
        if (j == s - 1) return poly_scale(poch_to_mono(poch_basis<Rat>(s - 1)), Rat(parity_sign(s - 1)));
        if (id == FamilyId::MeixnerI)
            return detail::shifted_poch_poly(std::get<mi::Params>(fp).beta, j);
        (void)a;
        return poch_to_mono(poch_basis<Rat>(j));
    };

    // t_j * core_a expanded over Real, for evaluation and for the tail bound
    MonoPoly<Real> prod[3];
    Real coef_sum[3] = {Real(0), Real(0), Real(0)};
    long deg = 0;
    for (int a = 1; a <= 2; ++a) {
        const auto& core = (a == 1) ? pair.q1 : pair.q2;
        const auto pr = poly_mul(test_poly(a), poch_to_mono(core));
        auto& dst = prod[a];
        dst.coeffs.clear();
        const Real pref = (a == 1) ? info.pref1 : info.pref2;
        for (const auto& c : pr.coeffs) dst.coeffs.push_back(pref * to_real(c));
        for (const auto& c : dst.coeffs) coef_sum[a] += abs(c);
        deg = std::max(deg, poly_degree(pr));
    }

    // monotone ratio bound: w_a(k+1)/w_a(k) * ((k+1)/k)^deg <= r for k >= k0
    const Real one(1);
    Real r;
    if (info.poisson) {
        r = Real("0.5");
    } else {
        const Real cmax = std::max(info.wratio_c1, info.wratio_c2);
        r = (one + cmax) / 2;
    }
    auto ratio_bound = [&](long k) -> Real {
        const Real growth = pow(Real(k + 1) / Real(k), deg);
        if (info.poisson) {
            const Real bmax = std::max(info.b1, info.b2);
            return bmax / Real(k + 1) * growth;
        }
        const Real cmax = std::max(info.wratio_c1, info.wratio_c2);
        const Real bmax = to_real(std::max(info.beta1, info.beta2));
        Real shift = (Real(k) + bmax) / Real(k + 1);
        if (shift < one) shift = one;
        return cmax * growth * shift;
    };
    long k0 = 2;
    while (ratio_bound(k0) > r) {
        k0 *= 2;
        if (k0 > (1L << 40)) throw usage_error("orth_residual_float: tail bound not achievable");
    }

    const Real tol = float_tolerance();
    Real sum(0), w1(1), w2(1);
    Real bound(0);
    long k = 0;
    const long kmax = 2'000'000;
    for (;; ++k) {
        if (k > kmax) throw usage_error("orth_residual_float: tail bound not achievable at this precision");
        sum += poly_eval(prod[1], Real(k)) * w1 + poly_eval(prod[2], Real(k)) * w2;
        // advance weights to k+1
        if (info.poisson) {
            w1 *= info.b1 / Real(k + 1);
            w2 *= info.b2 / Real(k + 1);
        } else {
            w1 *= info.wratio_c1 * (to_real(info.beta1) + k) / Real(k + 1);
            w2 *= info.wratio_c2 * (to_real(info.beta2) + k) / Real(k + 1);
        }
        if (k + 1 >= k0) {
            const Real kk = pow(Real(k + 1), deg);
            bound = (coef_sum[1] * kk * w1 + coef_sum[2] * kk * w2) / (one - r);
            if (bound < tol) break;
        }
    }
    return {sum - target, bound, k + 1};
}

}  // namespace mop::families
