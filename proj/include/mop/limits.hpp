#pragma once

#include <vector>

#include "mop/families.hpp"
#include "mop/hahn.hpp"

namespace mop::limits {

// The nine parameter-limit routes of the multiple Askey scheme for two
// weights. limit_residual evaluates the source polynomial under the route's
// prefactor/argument substitution at a finite limit parameter T and returns
// the maximum deviation from the target family polynomial over the given
// evaluation points (and over both components for type I). All float mode.
//
// Gamma-ratio prefactors whose arguments both grow with T are combined into
// fixed-length Pochhammers before evaluation, so routes stay finite at very
// large T (the two Laguerre I routes are compared at T = 1e30).

enum class Route {
    HahnToJacobiPineiro,
    HahnToMeixnerI,
    HahnToMeixnerII,
    HahnToKravchuk,
    JacobiPineiroToLaguerreI,
    MeixnerIIToLaguerreI,
    MeixnerIToLaguerreII,
    MeixnerIToCharlier,
    KravchukToCharlier,
};

inline const std::map<std::string, Route>& route_names() {
    static const std::map<std::string, Route> names{
        {"hahn-jp", Route::HahnToJacobiPineiro},
        {"hahn-meixner1", Route::HahnToMeixnerI},
        {"hahn-meixner2", Route::HahnToMeixnerII},
        {"hahn-kravchuk", Route::HahnToKravchuk},
        {"jp-laguerre1", Route::JacobiPineiroToLaguerreI},
        {"meixner2-laguerre1", Route::MeixnerIIToLaguerreI},
        {"meixner1-laguerre2", Route::MeixnerIToLaguerreII},
        {"meixner1-charlier", Route::MeixnerIToCharlier},
        {"kravchuk-charlier", Route::KravchukToCharlier},
    };
    return names;
}

inline std::string route_name(Route r) {
    for (const auto& [name, v] : route_names())
        if (v == r) return name;
    return "?";
}

inline families::FamilyId route_target(Route r) {
    using families::FamilyId;
    switch (r) {
        case Route::HahnToJacobiPineiro: return FamilyId::JacobiPineiro;
        case Route::HahnToMeixnerI: return FamilyId::MeixnerI;
        case Route::HahnToMeixnerII: return FamilyId::MeixnerII;
        case Route::HahnToKravchuk: return FamilyId::Kravchuk;
        case Route::JacobiPineiroToLaguerreI:
        case Route::MeixnerIIToLaguerreI: return FamilyId::LaguerreI;
        case Route::MeixnerIToLaguerreII: return FamilyId::LaguerreII;
        case Route::MeixnerIToCharlier:
        case Route::KravchukToCharlier: return FamilyId::Charlier;
    }
    throw usage_error("unknown route");
}

// Evaluation points (as rationals, converted at current precision): inside
// [0,1] for Jacobi-Pineiro targets, generic small values otherwise.
inline std::vector<Rat> default_eval_points(Route r) {
    if (route_target(r) == families::FamilyId::JacobiPineiro)
        return {parse_rat("1/8"), parse_rat("2/5"), parse_rat("3/4")};
    if (route_target(r) == families::FamilyId::LaguerreI || route_target(r) == families::FamilyId::LaguerreII)
        return {parse_rat("1/3"), Rat(1), parse_rat("5/2")};
    return {Rat(0), Rat(1), Rat(2), parse_rat("7/2")};
}

namespace detail {

inline Real rgamma(const Real& x) { return tgamma(x); }

// Hahn type I component for real parameters (real N included); the
// (N+1-s)!-type prefactor pieces go through Gamma.
inline PochPoly<Real> hahn_type1_real(long n1, long n2, int a, const Real& a1, const Real& a2, const Real& b,
                                      const Real& big_n) {
    const long s = n1 + n2;
    const Real al = (a == 1) ? a1 : a2;
    const long na = (a == 1) ? n1 : n2;
    const Real extern_pref =
        rgamma(big_n + 2 - s) * rgamma(al + b + s + na) / rgamma(al + b + na + big_n + 1);
    return hahn::type1_component<Real>(n1, n2, a, a1, a2, b, big_n, extern_pref);
}

struct SourceEval {
    Real type2;
    Real type1_1, type1_2;
};

}  // namespace detail

// Scaled source-family values at one evaluation point x (target variable).
inline detail::SourceEval scaled_source(Route r, const MultiIndex& idx, const Real& t,
                                        const families::FamilyParams& target, const Real& x,
                                        bool with_type1 = true) {
    using namespace families;
    const long n1 = idx.n1, n2 = idx.n2, s = n1 + n2;
    detail::SourceEval out{Real(0), Real(0), Real(0)};
    const Real one(1);
    if (std::min(n1, n2) < 1) with_type1 = false;  // explicit type I source needs an interior index

    switch (r) {
        case Route::HahnToJacobiPineiro: {
            const auto& tp = std::get<jp::Params>(target);
            const Real a1 = to_real(tp.alpha1), a2 = to_real(tp.alpha2), b = to_real(tp.beta);
            const auto q2 = hahn::type2_coeffs<Real>(n1, n2, a1, a2, b, t);
            out.type2 = Real(parity_sign(s)) / pochhammer(Real(-t), s) * poly_eval(q2, Real(t * x));
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real al = (a == 1) ? a1 : a2;
                const long na = (a == 1) ? n1 : n2;
                const auto q1 = detail::hahn_type1_real(n1, n2, a, a1, a2, b, t);
                const Real scale = Real(parity_sign(na - 1)) / pochhammer(Real(-t), na - 1) /
                                   (detail::rgamma(al + 1) * detail::rgamma(b + 1)) *
                                   (detail::rgamma(al + b + t + na + 1) / detail::rgamma(t + 2 - s));
                ((a == 1) ? out.type1_1 : out.type1_2) = scale * poly_eval(q1, Real(t * x));
            }
            break;
        }
        case Route::HahnToMeixnerI: {
            const auto& tp = std::get<mi::Params>(target);
            if (is_integer(tp.beta))
                throw usage_error("hahn-meixner1 route needs non-integer beta (Gamma(1-beta) pole)");
            const Real beta = to_real(tp.beta), c1 = to_real(tp.c1), c2 = to_real(tp.c2);
            const Real a1 = c1 * t, a2 = c2 * t, bh = -t, nn = -beta;
            out.type2 = poly_eval(hahn::type2_coeffs<Real>(n1, n2, a1, a2, bh, nn), x);
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real ca = (a == 1) ? c1 : c2;
                // the route's Gamma ratio Gamma((c_a-1)t + n_a + 1 - beta) /
                // Gamma((c_a-1)t + s + n_a) cancels the source prefactor
                // (alpha_a + beta_H + s + n_a)_{N_H+1-s} exactly; evaluating the
                // combined form avoids the Gamma poles at integer (c_a-1)t
                const Real extern_pref = detail::rgamma(Real(2 - s) - beta);
                const auto q1 = hahn::type1_component<Real>(n1, n2, a, a1, a2, bh, nn, extern_pref);
                const Real scale = pow(one - ca, Real(s - 1) + beta) / detail::rgamma(one - beta) *
                                   pochhammer(Real(-t + 1), s - 1);
                ((a == 1) ? out.type1_1 : out.type1_2) = scale * poly_eval(q1, x);
            }
            break;
        }
        case Route::HahnToMeixnerII: {
            const auto& tp = std::get<mii::Params>(target);
            const Real b1 = to_real(tp.beta1), b2 = to_real(tp.beta2), c = to_real(tp.c);
            const Real a1 = b1 - 1, a2 = b2 - 1, bh = (one - c) / c * t;
            out.type2 = poly_eval(hahn::type2_coeffs<Real>(n1, n2, a1, a2, bh, t), x);
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real ba = (a == 1) ? b1 : b2;
                const long na = (a == 1) ? n1 : n2;
                const auto q1 = detail::hahn_type1_real(n1, n2, a, a1, a2, bh, t);
                const Real arg = ba + bh + s + na - 1;
                const Real scale = pow(one - c, ba + s + na - 2) / pow(c, Real(s - 1)) *
                                   (detail::rgamma(arg + t + 1 - s) / detail::rgamma(arg)) /
                                   detail::rgamma(t + 2 - s);
                ((a == 1) ? out.type1_1 : out.type1_2) = scale * poly_eval(q1, x);
            }
            break;
        }
        case Route::HahnToKravchuk: {
            const auto& tp = std::get<krav::Params>(target);
            const Real p1 = to_real(tp.p1), p2 = to_real(tp.p2);
            const Real big_n = Real(tp.big_n);
            const Real a1 = p1 / (one - p1) * t, a2 = p2 / (one - p2) * t;
            out.type2 = poly_eval(hahn::type2_coeffs<Real>(n1, n2, a1, a2, t, big_n), x);
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real pa = (a == 1) ? p1 : p2;
                const long na = (a == 1) ? n1 : n2;
                const auto q1 = detail::hahn_type1_real(n1, n2, a, a1, a2, t, big_n);
                const Real scale = one / factorial_as<Real>(tp.big_n) * pow(one / (one - pa), Real(s - 1)) *
                                   pochhammer(Real(t + 1), s - 1) *
                                   pochhammer(Real(t / (one - pa) + s + na), tp.big_n + 1 - s);
                ((a == 1) ? out.type1_1 : out.type1_2) = scale * poly_eval(q1, x);
            }
            break;
        }
        case Route::JacobiPineiroToLaguerreI: {
            const auto& tp = std::get<li::Params>(target);
            const Real a1 = to_real(tp.alpha1), a2 = to_real(tp.alpha2);
            const Real denom = pochhammer(Real(a1 + t + s), n1) * pochhammer(Real(a2 + t + s), n2);
            out.type2 = denom * poly_eval(jp::type2_coeffs<Real>(n1, n2, a1, a2, t), Real(x / t));
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real al = (a == 1) ? a1 : a2;
                // limit prefactor times the source Gamma prefactor, Gammas cancelled
                const auto core = jp::type1_core<Real>(n1, n2, a, a1, a2, t);
                ((a == 1) ? out.type1_1 : out.type1_2) =
                    poly_eval(core, Real(x / t)) / (denom * detail::rgamma(al + 1));
            }
            break;
        }
        case Route::MeixnerIIToLaguerreI: {
            const auto& tp = std::get<li::Params>(target);
            const Real a1 = to_real(tp.alpha1), a2 = to_real(tp.alpha2);
            const Real c = one - one / t;  // c -> 1
            const Real eps = one / t;
            out.type2 = pow(eps, Real(s)) *
                        poly_eval(mii::type2_coeffs<Real>(n1, n2, a1 + 1, a2 + 1, c), Real(x * t));
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real al = (a == 1) ? a1 : a2;
                const auto core = mii::type1_core<Real>(n1, n2, a, a1 + 1, a2 + 1, c);
                // (1-c)^{beta_a^src - alpha_a - s} = eps^{1-s}
                ((a == 1) ? out.type1_1 : out.type1_2) =
                    pow(eps, Real(1 - s)) / detail::rgamma(al + 1) * poly_eval(core, Real(x * t));
            }
            break;
        }
        case Route::MeixnerIToLaguerreII: {
            const auto& tp = std::get<lii::Params>(target);
            const Real a0 = to_real(tp.alpha0), c1 = to_real(tp.c1), c2 = to_real(tp.c2);
            const Real src_c1 = t / (t + c1), src_c2 = t / (t + c2);
            out.type2 = pow(t, Real(-s)) *
                        poly_eval(mi::type2_coeffs<Real>(n1, n2, a0 + 1, src_c1, src_c2), Real(t * x));
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real ca = (a == 1) ? c1 : c2;
                const auto core = mi::type1_core<Real>(n1, n2, a, a0 + 1, src_c1, src_c2);
                // t^{s-1} (c_a+t)^{a0+1} * (1 - src_c_a)^{a0+1} = t^{s-1} c_a^{a0+1}
                ((a == 1) ? out.type1_1 : out.type1_2) =
                    pow(t, Real(s - 1)) * pow(ca, a0 + 1) / detail::rgamma(a0 + 1) * poly_eval(core, Real(t * x));
            }
            break;
        }
        case Route::MeixnerIToCharlier: {
            const auto& tp = std::get<charlier::Params>(target);
            const Real b1 = to_real(tp.b1), b2 = to_real(tp.b2);
            out.type2 = poly_eval(mi::type2_coeffs<Real>(n1, n2, t, Real(b1 / t), Real(b2 / t)), x);
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real ba = (a == 1) ? b1 : b2;
                const auto core = mi::type1_core<Real>(n1, n2, a, t, Real(b1 / t), Real(b2 / t));
                ((a == 1) ? out.type1_1 : out.type1_2) = pow(one - ba / t, t) * poly_eval(core, x);
            }
            break;
        }
        case Route::KravchukToCharlier: {
            const auto& tp = std::get<charlier::Params>(target);
            const Real b1 = to_real(tp.b1), b2 = to_real(tp.b2);
            out.type2 = poly_eval(krav::type2_coeffs<Real>(n1, n2, Real(b1 / t), Real(b2 / t), t), x);
            for (int a = 1; with_type1 && a <= 2; ++a) {
                const Real ba = (a == 1) ? b1 : b2;
                const auto q1 = krav::type1_coeffs<Real>(n1, n2, a, Real(b1 / t), Real(b2 / t), t);
                ((a == 1) ? out.type1_1 : out.type1_2) = exp(-ba) * poly_eval(q1, x);
            }
            break;
        }
    }
    return out;
}

inline Real limit_residual(Route r, const MultiIndex& idx, const Real& t, const families::FamilyParams& target,
                           Kind kind, const std::vector<Rat>& eval_points) {
    if (families::id_of(target) != route_target(r)) throw usage_error("limit_residual: target params do not match route");
    if (kind == Kind::type1 && std::min(idx.n1, idx.n2) < 1 && idx.order() > 0)
        throw usage_error("limit_residual: type I limits use interior indexes (or (0,0))");
    Real worst(0);
    for (const auto& xq : eval_points) {
        const Real x = to_real(xq);
        const auto src = scaled_source(r, idx, t, target, x, kind == Kind::type1);
        if (kind == Kind::type2) {
            const Real tgt = families::type2_value_float(idx, x, target);
            worst = std::max(worst, Real(abs(src.type2 - tgt)));
        } else {
            for (int a = 1; a <= 2; ++a) {
                const Real tgt = families::type1_value_float(idx, a, x, target);
                const Real sv = (a == 1) ? src.type1_1 : src.type1_2;
                worst = std::max(worst, Real(abs(sv - tgt)));
            }
        }
    }
    return worst;
}

// Scalings of the near-neighbor coefficients along each route.
inline Real recursion_limit_residual(Route r, const MultiIndex& idx, const Real& t,
                                     const families::FamilyParams& target) {
    using namespace families;
    const Real n1 = Real(idx.n1), n2 = Real(idx.n2);
    const Real one(1);
    RecursionCoeffs<Real> src{Real(0), Real(0), Real(0), Real(0), Real(0)};
    switch (r) {
        case Route::HahnToJacobiPineiro: {
            const auto& tp = std::get<jp::Params>(target);
            src = hahn::recursion_coeffs_generic<Real>(n1, n2, to_real(tp.alpha1), to_real(tp.alpha2),
                                                       to_real(tp.beta), t);
            src.b1 /= t; src.b2 /= t; src.c /= t * t; src.d1 /= t * t * t; src.d2 /= t * t * t;
            break;
        }
        case Route::HahnToMeixnerI: {
            const auto& tp = std::get<mi::Params>(target);
            src = hahn::recursion_coeffs_generic<Real>(n1, n2, Real(to_real(tp.c1) * t), Real(to_real(tp.c2) * t),
                                                       Real(-t), Real(-to_real(tp.beta)));
            break;
        }
        case Route::HahnToMeixnerII: {
            const auto& tp = std::get<mii::Params>(target);
            const Real c = to_real(tp.c);
            src = hahn::recursion_coeffs_generic<Real>(n1, n2, Real(to_real(tp.beta1) - 1),
                                                       Real(to_real(tp.beta2) - 1), Real((one - c) / c * t), t);
            break;
        }
        case Route::HahnToKravchuk: {
            const auto& tp = std::get<krav::Params>(target);
            const Real p1 = to_real(tp.p1), p2 = to_real(tp.p2);
            src = hahn::recursion_coeffs_generic<Real>(n1, n2, Real(p1 / (one - p1) * t), Real(p2 / (one - p2) * t),
                                                       t, Real(tp.big_n));
            break;
        }
        case Route::JacobiPineiroToLaguerreI: {
            const auto& tp = std::get<li::Params>(target);
            src = jp::recursion_generic<Real>(n1, n2, to_real(tp.alpha1), to_real(tp.alpha2), t);
            src.b1 *= t; src.b2 *= t; src.c *= t * t; src.d1 *= t * t * t; src.d2 *= t * t * t;
            break;
        }
        case Route::MeixnerIIToLaguerreI: {
            const auto& tp = std::get<li::Params>(target);
            const Real c = one - one / t, eps = one / t;
            src = mii::recursion_generic<Real>(n1, n2, Real(to_real(tp.alpha1) + 1), Real(to_real(tp.alpha2) + 1), c);
            src.b1 *= eps; src.b2 *= eps; src.c *= eps * eps; src.d1 *= eps * eps * eps; src.d2 *= eps * eps * eps;
            break;
        }
        case Route::MeixnerIToLaguerreII: {
            const auto& tp = std::get<lii::Params>(target);
            src = mi::recursion_generic<Real>(n1, n2, Real(to_real(tp.alpha0) + 1),
                                              Real(t / (t + to_real(tp.c1))), Real(t / (t + to_real(tp.c2))));
            src.b1 /= t; src.b2 /= t; src.c /= t * t; src.d1 /= t * t * t; src.d2 /= t * t * t;
            break;
        }
        case Route::MeixnerIToCharlier: {
            const auto& tp = std::get<charlier::Params>(target);
            src = mi::recursion_generic<Real>(n1, n2, t, Real(to_real(tp.b1) / t), Real(to_real(tp.b2) / t));
            break;
        }
        case Route::KravchukToCharlier: {
            const auto& tp = std::get<charlier::Params>(target);
            src = krav::recursion_generic<Real>(n1, n2, Real(to_real(tp.b1) / t), Real(to_real(tp.b2) / t), t);
            break;
        }
    }
    const auto tgt = families::recursion(idx, target);
    Real worst(0);
    worst = std::max(worst, Real(abs(src.b1 - to_real(tgt.b1))));
    worst = std::max(worst, Real(abs(src.b2 - to_real(tgt.b2))));
    worst = std::max(worst, Real(abs(src.c - to_real(tgt.c))));
    worst = std::max(worst, Real(abs(src.d1 - to_real(tgt.d1))));
    worst = std::max(worst, Real(abs(src.d2 - to_real(tgt.d2))));
    return worst;
}

struct ConvergenceResult {
    std::vector<Real> params;
    std::vector<Real> residuals;
    double fitted_order = 0;
    bool order_defined = false;
};

// Residuals along a strictly increasing parameter sequence plus the fitted
// log-ratio slope. Residuals at or below the working-precision floor make the
// order undefined (flagged, not failed).
inline ConvergenceResult convergence_study(Route r, const MultiIndex& idx, Kind kind,
                                           const std::vector<Real>& t_seq,
                                           const families::FamilyParams& target,
                                           const std::vector<Rat>& eval_points) {
    if (t_seq.size() < 3) throw usage_error("convergence_study: need at least 3 parameter values");
    for (std::size_t i = 1; i < t_seq.size(); ++i)
        if (!(t_seq[i] > t_seq[i - 1])) throw usage_error("convergence_study: sequence must be strictly increasing");
    ConvergenceResult out;
    out.params = t_seq;
    for (const auto& t : t_seq) out.residuals.push_back(limit_residual(r, idx, t, target, kind, eval_points));

    const Real floor = float_tolerance();
    double acc = 0;
    long cnt = 0;
    for (std::size_t i = 0; i + 1 < out.residuals.size(); ++i) {
        if (out.residuals[i] <= floor || out.residuals[i + 1] <= floor) continue;
        const Real num = log(out.residuals[i] / out.residuals[i + 1]);
        const Real den = log(t_seq[i + 1] / t_seq[i]);
        acc += static_cast<double>(num / den);
        ++cnt;
    }
    if (cnt > 0) {
        out.fitted_order = acc / cnt;
        out.order_defined = true;
    }
    return out;
}

}  // namespace mop::limits
