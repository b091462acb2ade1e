#pragma once

#include <map>
#include <string>
#include <variant>

#include "mop/families/charlier.hpp"
#include "mop/families/jacobi_pineiro.hpp"
#include "mop/families/kravchuk.hpp"
#include "mop/families/laguerre1.hpp"
#include "mop/families/laguerre2.hpp"
#include "mop/families/meixner1.hpp"
#include "mop/families/meixner2.hpp"
#include "mop/linsolve.hpp"

namespace mop::families {

enum class FamilyId { JacobiPineiro, MeixnerI, MeixnerII, Kravchuk, LaguerreI, LaguerreII, Charlier };

using FamilyParams =
    std::variant<jp::Params, mi::Params, mii::Params, krav::Params, li::Params, lii::Params, charlier::Params>;

inline FamilyId id_of(const FamilyParams& p) {
    return static_cast<FamilyId>(p.index());
}

inline bool is_discrete(FamilyId id) {
    return id == FamilyId::MeixnerI || id == FamilyId::MeixnerII || id == FamilyId::Kravchuk ||
           id == FamilyId::Charlier;
}

// Families whose type I orthogonality reduces to an exact rational core.
inline bool orth_exact(FamilyId id) {
    return id == FamilyId::JacobiPineiro || id == FamilyId::Kravchuk || id == FamilyId::LaguerreI ||
           id == FamilyId::LaguerreII;
}

inline const std::map<std::string, FamilyId>& family_names() {
    static const std::map<std::string, FamilyId> names{
        {"jacobi-pineiro", FamilyId::JacobiPineiro}, {"jp", FamilyId::JacobiPineiro},
        {"meixner1", FamilyId::MeixnerI},            {"meixner2", FamilyId::MeixnerII},
        {"kravchuk", FamilyId::Kravchuk},            {"laguerre1", FamilyId::LaguerreI},
        {"laguerre2", FamilyId::LaguerreII},         {"charlier", FamilyId::Charlier},
    };
    return names;
}

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::JacobiPineiro: return "jacobi-pineiro";
        case FamilyId::MeixnerI: return "meixner1";
        case FamilyId::MeixnerII: return "meixner2";
        case FamilyId::Kravchuk: return "kravchuk";
        case FamilyId::LaguerreI: return "laguerre1";
        case FamilyId::LaguerreII: return "laguerre2";
        case FamilyId::Charlier: return "charlier";
    }
    return "?";
}

// Build params from named rational assignments (CLI / config path).
inline FamilyParams make_params(FamilyId id, const std::map<std::string, Rat>& kv, bool strict = true) {
    auto get = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw usage_error(std::string("missing family parameter '") + key + "'");
        return it->second;
    };
    switch (id) {
        case FamilyId::JacobiPineiro: {
            jp::Params p{get("alpha1"), get("alpha2"), get("beta")};
            jp::validate(p);
            return p;
        }
        case FamilyId::MeixnerI: {
            mi::Params p{get("beta"), get("c1"), get("c2")};
            mi::validate(p, strict);
            return p;
        }
        case FamilyId::MeixnerII: {
            mii::Params p{get("beta1"), get("beta2"), get("c")};
            mii::validate(p, strict);
            return p;
        }
        case FamilyId::Kravchuk: {
            krav::Params p{get("p1"), get("p2"), to_long(get("N"))};
            krav::validate(p, strict);
            return p;
        }
        case FamilyId::LaguerreI: {
            li::Params p{get("alpha1"), get("alpha2")};
            li::validate(p, strict);
            return p;
        }
        case FamilyId::LaguerreII: {
            lii::Params p{get("alpha0"), get("c1"), get("c2")};
            lii::validate(p, strict);
            return p;
        }
        case FamilyId::Charlier: {
            charlier::Params p{get("b1"), get("b2")};
            charlier::validate(p, strict);
            return p;
        }
    }
    throw usage_error("unknown family");
}

inline void require_index(const MultiIndex& idx, const FamilyParams& p) {
    if (idx.n1 < 0 || idx.n2 < 0) throw index_error("family index must be nonnegative");
    if (const auto* k = std::get_if<krav::Params>(&p)) krav::require_index(idx, *k);
}

// Either-basis polynomial and type I pair.
using AnyPoly = std::variant<PochPoly<Rat>, MonoPoly<Rat>>;
using AnyPair = std::variant<PochPair<Rat>, MonoPair<Rat>>;

inline AnyPoly type2(const MultiIndex& idx, const FamilyParams& fp) {
    require_index(idx, fp);
    return std::visit(
        [&](const auto& p) -> AnyPoly {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, jp::Params>)
                return jp::type2_coeffs(idx.n1, idx.n2, p.alpha1, p.alpha2, p.beta);
            else if constexpr (std::is_same_v<P, mi::Params>)
                return mi::type2_coeffs(idx.n1, idx.n2, p.beta, p.c1, p.c2);
            else if constexpr (std::is_same_v<P, mii::Params>)
                return mii::type2_coeffs(idx.n1, idx.n2, p.beta1, p.beta2, p.c);
            else if constexpr (std::is_same_v<P, krav::Params>)
                return krav::type2_coeffs(idx.n1, idx.n2, p.p1, p.p2, Rat(p.big_n));
            else if constexpr (std::is_same_v<P, li::Params>)
                return li::type2_coeffs(idx.n1, idx.n2, p.alpha1, p.alpha2);
            else if constexpr (std::is_same_v<P, lii::Params>)
                return lii::type2_coeffs(idx.n1, idx.n2, p.alpha0, p.c1, p.c2);
            else
                return charlier::type2_coeffs(idx.n1, idx.n2, p.b1, p.b2);
        },
        fp);
}

// -------------------------------------------------------------------------
// Exact moment-system oracle for the type I cores. The reduced moments fold
// each family's transcendental prefactor into the weight moments, so the
// stacked linear system is rational for every family. Normalization row:
// pairing against the monic type II polynomial, i.e. (-1)^{s-1} (-k)_{s-1}
// for discrete families and x^{s-1} for continuous ones.

namespace detail {

// reduced moment of the u-th Pochhammer basis element / u-th monomial
inline Rat reduced_poch_moment(const FamilyParams& fp, long /*s*/, int a, long u) {
    return std::visit(
        [&](const auto& p) -> Rat {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, mi::Params>)
                return mi::reduced_moment(u, a, p);
            else if constexpr (std::is_same_v<P, mii::Params>)
                return mii::reduced_moment(u, a, p);
            else if constexpr (std::is_same_v<P, krav::Params>)
                return krav::reduced_moment(u, a, p);
            else if constexpr (std::is_same_v<P, charlier::Params>)
                return charlier::reduced_moment(u, a, p);
            else
                throw usage_error("reduced_poch_moment: discrete family expected");
        },
        fp);
}

inline Rat reduced_mono_moment(const FamilyParams& fp, long s, int a, long e) {
    return std::visit(
        [&](const auto& p) -> Rat {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, jp::Params>)
                return jp::reduced_moment(e, s, a, p);
            else if constexpr (std::is_same_v<P, li::Params>)
                return li::reduced_moment(e, a, p);
            else if constexpr (std::is_same_v<P, lii::Params>)
                return lii::reduced_moment(e, s, a, p);
            else
                throw usage_error("reduced_mono_moment: continuous family expected");
        },
        fp);
}

// <t_j, (-k)_i w_a> with the prefactor folded in; t_j = (-k)_j.
inline Rat poch_pair_moment(const FamilyParams& fp, long s, int a, long i, long j) {
    const auto prod = poly_mul(poch_basis<Rat>(i), poch_basis<Rat>(j));
    Rat acc(0);
    for (std::size_t u = 0; u < prod.coeffs.size(); ++u)
        if (!scalar_is_zero(prod.coeffs[u])) acc += prod.coeffs[u] * reduced_poch_moment(fp, s, a, u);
    return acc;
}

// x^alpha as x -> 0+: 1, 0 or +inf depending on the exponent sign
inline Real power_at_zero(const Rat& alpha) {
    if (scalar_is_zero(alpha)) return Real(1);
    if (alpha > 0) return Real(0);
    return std::numeric_limits<Real>::infinity();
}

}  // namespace detail

inline AnyPair solve_oracle_type1(const MultiIndex& idx, const FamilyParams& fp) {
    require_index(idx, fp);
    const long s = idx.order();
    const bool discrete = is_discrete(id_of(fp));
    if (s == 0) {
        if (discrete) return PochPair<Rat>{};
        return MonoPair<Rat>{};
    }
    std::vector<std::vector<Rat>> mat(s, std::vector<Rat>(s, Rat(0)));
    std::vector<Rat> rhs(s, Rat(0));
    rhs[s - 1] = 1;
    for (long j = 0; j < s; ++j) {
        const Rat sign = (j == s - 1) ? Rat(parity_sign(s - 1)) : Rat(1);  // monic-pairing normalization row
        for (int a = 1; a <= 2; ++a) {
            const long cnt = (a == 1) ? idx.n1 : idx.n2;
            const long off = (a == 1) ? 0 : idx.n1;
            for (long i = 0; i < cnt; ++i) {
                if (discrete)
                    mat[j][off + i] = sign * detail::poch_pair_moment(fp, s, a, i, j);
                else
                    mat[j][off + i] = detail::reduced_mono_moment(fp, s, a, i + j);
            }
        }
    }
    const auto x = solve_dense(mat, rhs);
    if (discrete) {
        PochPair<Rat> pair;
        pair.q1.coeffs.assign(x.begin(), x.begin() + idx.n1);
        pair.q2.coeffs.assign(x.begin() + idx.n1, x.end());
        pair.q1 = trimmed(pair.q1);
        pair.q2 = trimmed(pair.q2);
        return pair;
    }
    MonoPair<Rat> pair;
    pair.q1.coeffs.assign(x.begin(), x.begin() + idx.n1);
    pair.q2.coeffs.assign(x.begin() + idx.n1, x.end());
    pair.q1 = trimmed(pair.q1);
    pair.q2 = trimmed(pair.q2);
    return pair;
}

struct Type1Info {
    bool used_oracle = false;
    std::string diagnostic;
};

// Explicit hypergeometric cores; boundary indexes and exact parameter poles
// fall back to the moment-system oracle as in the Hahn module.
inline AnyPair type1_core(const MultiIndex& idx, const FamilyParams& fp, Type1Info* info = nullptr) {
    require_index(idx, fp);
    if (std::min(idx.n1, idx.n2) < 1) {
        if (info) info->used_oracle = true;
        return solve_oracle_type1(idx, fp);
    }
    try {
        return std::visit(
            [&](const auto& p) -> AnyPair {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, jp::Params>)
                    return MonoPair<Rat>{jp::type1_core(idx.n1, idx.n2, 1, p.alpha1, p.alpha2, p.beta),
                                         jp::type1_core(idx.n1, idx.n2, 2, p.alpha1, p.alpha2, p.beta)};
                else if constexpr (std::is_same_v<P, mi::Params>)
                    return PochPair<Rat>{mi::type1_core(idx.n1, idx.n2, 1, p.beta, p.c1, p.c2),
                                         mi::type1_core(idx.n1, idx.n2, 2, p.beta, p.c1, p.c2)};
                else if constexpr (std::is_same_v<P, mii::Params>)
                    return PochPair<Rat>{mii::type1_core(idx.n1, idx.n2, 1, p.beta1, p.beta2, p.c),
                                         mii::type1_core(idx.n1, idx.n2, 2, p.beta1, p.beta2, p.c)};
                else if constexpr (std::is_same_v<P, krav::Params>)
                    return PochPair<Rat>{krav::type1_coeffs(idx.n1, idx.n2, 1, p.p1, p.p2, Rat(p.big_n)),
                                         krav::type1_coeffs(idx.n1, idx.n2, 2, p.p1, p.p2, Rat(p.big_n))};
                else if constexpr (std::is_same_v<P, li::Params>)
                    return MonoPair<Rat>{li::type1_core(idx.n1, idx.n2, 1, p.alpha1, p.alpha2),
                                         li::type1_core(idx.n1, idx.n2, 2, p.alpha1, p.alpha2)};
                else if constexpr (std::is_same_v<P, lii::Params>)
                    return MonoPair<Rat>{lii::type1_core(idx.n1, idx.n2, 1, p.alpha0, p.c1, p.c2),
                                         lii::type1_core(idx.n1, idx.n2, 2, p.alpha0, p.c1, p.c2)};
                else
                    return PochPair<Rat>{charlier::type1_core(idx.n1, idx.n2, 1, p.b1, p.b2),
                                         charlier::type1_core(idx.n1, idx.n2, 2, p.b1, p.b2)};
            },
            fp);
    } catch (const pole_error& e) {
        if (info) {
            info->used_oracle = true;
            info->diagnostic = e.what();
        }
        return solve_oracle_type1(idx, fp);
    }
}

inline RecursionCoeffs<Rat> recursion(const MultiIndex& idx, const FamilyParams& fp) {
    if (idx.n1 < 0 || idx.n2 < 0) throw index_error("family index must be nonnegative");
    return std::visit(
        [&](const auto& p) -> RecursionCoeffs<Rat> {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, jp::Params>)
                return jp::recursion(idx, p);
            else if constexpr (std::is_same_v<P, mi::Params>)
                return mi::recursion(idx, p);
            else if constexpr (std::is_same_v<P, mii::Params>)
                return mii::recursion(idx, p);
            else if constexpr (std::is_same_v<P, krav::Params>)
                return krav::recursion(idx, p);
            else if constexpr (std::is_same_v<P, li::Params>)
                return li::recursion(idx, p);
            else if constexpr (std::is_same_v<P, lii::Params>)
                return lii::recursion(idx, p);
            else
                return charlier::recursion(idx, p);
        },
        fp);
}

// pref_a(s+1) / pref_a(s): rational for every family, so recursion residuals
// on the cores stay exact.
inline Rat pref_ratio(FamilyId id, const FamilyParams& fp, long s, int a) {
    switch (id) {
        case FamilyId::JacobiPineiro: return jp::pref_ratio(s, a, std::get<jp::Params>(fp));
        case FamilyId::LaguerreII: return lii::pref_ratio(s, a, std::get<lii::Params>(fp));
        default: return Rat(1);
    }
}

inline Real type1_prefactor_float(const MultiIndex& idx, int a, const FamilyParams& fp) {
    const long s = idx.order();
    return std::visit(
        [&](const auto& p) -> Real {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, jp::Params>)
                return jp::type1_prefactor(s, a, p);
            else if constexpr (std::is_same_v<P, mi::Params>)
                return mi::type1_prefactor(a, p);
            else if constexpr (std::is_same_v<P, mii::Params>)
                return mii::type1_prefactor(a, p);
            else if constexpr (std::is_same_v<P, krav::Params>)
                return krav::type1_prefactor(a, p);
            else if constexpr (std::is_same_v<P, li::Params>)
                return li::type1_prefactor(a, p);
            else if constexpr (std::is_same_v<P, lii::Params>)
                return lii::type1_prefactor(s, a, p);
            else
                return charlier::type1_prefactor(a, p);
        },
        fp);
}

// Full type I component value (prefactor times core) at a real point.
inline Real type1_value_float(const MultiIndex& idx, int a, const Real& x, const FamilyParams& fp) {
    const auto pair = type1_core(idx, fp);
    const Real pref = type1_prefactor_float(idx, a, fp);
    return std::visit(
        [&](const auto& pr) -> Real {
            const auto& q = (a == 1) ? pr.q1 : pr.q2;
            return pref * poly_eval(q, x);
        },
        pair);
}

inline Real type2_value_float(const MultiIndex& idx, const Real& x, const FamilyParams& fp) {
    const auto poly = type2(idx, fp);
    return std::visit([&](const auto& q) -> Real { return poly_eval(q, x); }, poly);
}

// -------------------------------------------------------------------------
// Weights.

inline Rat weight_exact(long k, int a, const FamilyParams& fp) {
    return std::visit(
        [&](const auto& p) -> Rat {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, mi::Params>)
                return mi::weight(k, a, p);
            else if constexpr (std::is_same_v<P, mii::Params>)
                return mii::weight(k, a, p);
            else if constexpr (std::is_same_v<P, krav::Params>)
                return krav::weight(k, a, p);
            else if constexpr (std::is_same_v<P, charlier::Params>)
                return charlier::weight(k, a, p);
            else
                throw usage_error("exact weights exist for discrete families only");
        },
        fp);
}

// omega_a at a real point; the measure density ((1-x)^beta dx, e^{-x} dx, dx)
// is not folded in, matching each family's weight/measure split.
inline Real weight_float(const Real& x, int a, const FamilyParams& fp) {
    return std::visit(
        [&](const auto& p) -> Real {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, jp::Params>) {
                if (x < 0 || x > 1) throw index_error("jacobi-pineiro: point outside support [0,1]");
                const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
                if (x == 0) return detail::power_at_zero(al);
                return pow(x, to_real(al));
            } else if constexpr (std::is_same_v<P, li::Params>) {
                if (x < 0) throw index_error("laguerre1: point outside support [0,inf)");
                const Rat al = (a == 1) ? p.alpha1 : p.alpha2;
                if (x == 0) return detail::power_at_zero(al);
                return exp(-x) * pow(x, to_real(al));
            } else if constexpr (std::is_same_v<P, lii::Params>) {
                if (x < 0) throw index_error("laguerre2: point outside support [0,inf)");
                const Rat ca = (a == 1) ? p.c1 : p.c2;
                if (x == 0) return detail::power_at_zero(p.alpha0);
                return exp(-to_real(ca) * x) * pow(x, to_real(p.alpha0));
            } else {
                if (!is_integer(x) || x < 0) throw usage_error("discrete weight needs an integer point k >= 0");
                return to_real(weight_exact(static_cast<long>(x), a, fp));
            }
        },
        fp);
}

}  // namespace mop::families
