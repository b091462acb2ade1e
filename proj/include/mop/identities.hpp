#pragma once

#include <map>
#include <string>

#include "mop/hypergeo.hpp"

namespace mop::hypergeo {

// Classical and Hahn-specific summation/reduction identities, evaluated as
// LHS - RHS over exact rationals. A zero residual certifies the identity at
// the given parameter point; violated hypotheses raise hypothesis_error.
enum class IdentityId {
    ChuVandermonde,
    PfaffSaalschutz,
    RakhaRathie,
    KarpPrilepkina,
    Reversal,
    NewtonBinomial,
    SimpleFraction,
    HahnReduction,
};

inline const std::map<std::string, IdentityId>& identity_names() {
    static const std::map<std::string, IdentityId> names{
        {"chu-vandermonde", IdentityId::ChuVandermonde},
        {"pfaff-saalschutz", IdentityId::PfaffSaalschutz},
        {"rakha-rathie", IdentityId::RakhaRathie},
        {"karp-prilepkina", IdentityId::KarpPrilepkina},
        {"reversal", IdentityId::Reversal},
        {"newton-binomial", IdentityId::NewtonBinomial},
        {"simple-fraction", IdentityId::SimpleFraction},
        {"hahn-reduction", IdentityId::HahnReduction},
    };
    return names;
}

inline std::string identity_name(IdentityId id) {
    for (const auto& [name, v] : identity_names())
        if (v == id) return name;
    return "?";
}

using ParamMap = std::map<std::string, Rat>;

namespace detail {

inline const Rat& get(const ParamMap& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw usage_error("identity parameter '" + key + "' missing");
    return it->second;
}

inline long geti(const ParamMap& p, const std::string& key) {
    const Rat& v = get(p, key);
    if (!is_integer(v)) throw usage_error("identity parameter '" + key + "' must be an integer");
    return to_long(v);
}

}  // namespace detail

// 2F1(-l, b; c; 1) = (c-b)_l / (c)_l
inline Rat residual_chu_vandermonde(const ParamMap& p) {
    const long l = detail::geti(p, "l");
    const Rat b = detail::get(p, "b"), c = detail::get(p, "c");
    if (l < 0) throw hypothesis_error("chu-vandermonde: l must be a nonnegative integer");
    const Rat lhs = pfq<Rat>({{Rat(-l), b}, {c}, Rat(1)});
    const Rat den = pochhammer(c, l);
    if (scalar_is_zero(den)) throw pole_error("chu-vandermonde: (c)_l = 0");
    return lhs - pochhammer(Rat(c - b), l) / den;
}

// 3F2(-n, a, b; c, d; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n) under the
// balance condition -n + a + b + 1 = c + d.
inline Rat residual_pfaff_saalschutz(const ParamMap& p) {
    const long n = detail::geti(p, "n");
    const Rat a = detail::get(p, "a"), b = detail::get(p, "b"), c = detail::get(p, "c"), d = detail::get(p, "d");
    if (n < 0) throw hypothesis_error("pfaff-saalschutz: n must be a nonnegative integer");
    if (Rat(-n) + a + b + 1 != c + d)
        throw hypothesis_error("pfaff-saalschutz: balance -n+a+b+1 = c+d violated");
    const Rat lhs = pfq<Rat>({{Rat(-n), a, b}, {c, d}, Rat(1)});
    const Rat den = pochhammer(c, n) * pochhammer(Rat(c - a - b), n);
    if (scalar_is_zero(den)) throw pole_error("pfaff-saalschutz: zero denominator in closed form");
    return lhs - pochhammer(Rat(c - a), n) * pochhammer(Rat(c - b), n) / den;
}

// F^{2:2;1}_{2:1;0}(-n, lam : gam, bet-eps ; eps | bet, mu : del ; - | 1, 1)
//   = (mu-lam)_n / (mu)_n * 4F3(-n, lam, del-gam, bet-eps; bet, del, 1-mu+lam-n; 1)
inline Rat residual_rakha_rathie(const ParamMap& p) {
    const long n = detail::geti(p, "n");
    if (n < 0) throw hypothesis_error("rakha-rathie: n must be a nonnegative integer");
    const Rat lam = detail::get(p, "lambda"), gam = detail::get(p, "gamma"), bet = detail::get(p, "beta"),
              eps = detail::get(p, "epsilon"), mu = detail::get(p, "mu"), del = detail::get(p, "delta");
    KdfSpec<Rat> spec;
    spec.joint_upper = {Rat(-n), lam};
    spec.joint_lower = {bet, mu};
    spec.first_upper = {gam, Rat(bet - eps)};
    spec.first_lower = {del};
    spec.second_upper = {eps};
    spec.x = spec.y = Rat(1);
    const Rat lhs = kdf(spec);
    const Rat den = pochhammer(mu, n);
    if (scalar_is_zero(den)) throw pole_error("rakha-rathie: (mu)_n = 0");
    const Rat rhs = pochhammer(Rat(mu - lam), n) / den *
                    pfq<Rat>({{Rat(-n), lam, Rat(del - gam), Rat(bet - eps)},
                              {bet, del, Rat(1 - mu + lam - n)},
                              Rat(1)});
    return lhs - rhs;
}

// r+2 F r+1 (-n, b, f_i+m_i; b+p, f_i; 1) reduction, valid for p + n > m_1+...+m_r.
inline Rat residual_karp_prilepkina(const ParamMap& p) {
    const long n = detail::geti(p, "n");
    const long pp = detail::geti(p, "p");
    const long r = detail::geti(p, "r");
    const Rat b = detail::get(p, "b");
    if (n < 0) throw hypothesis_error("karp-prilepkina: n must be a nonnegative integer");
    if (pp < 1) throw hypothesis_error("karp-prilepkina: p must be a positive integer");
    if (r < 0 || r > 8) throw usage_error("karp-prilepkina: r out of range");
    std::vector<Rat> f(r);
    std::vector<long> m(r);
    long msum = 0;
    for (long i = 0; i < r; ++i) {
        f[i] = detail::get(p, "f" + std::to_string(i + 1));
        m[i] = detail::geti(p, "m" + std::to_string(i + 1));
        if (m[i] < 0) throw hypothesis_error("karp-prilepkina: m_i must be nonnegative");
        msum += m[i];
    }
    if (!(pp + n - msum > 0)) throw hypothesis_error("karp-prilepkina: need p - a - m_1 - ... - m_r > 0");

    PfqSpec<Rat> lhs_spec{{Rat(-n), b}, {Rat(b + pp)}, Rat(1)};
    for (long i = 0; i < r; ++i) {
        lhs_spec.upper.push_back(Rat(f[i] + m[i]));
        lhs_spec.lower.push_back(f[i]);
    }
    const Rat lhs = pfq(lhs_spec);

    // Gamma(1-a)Gamma(b+p) / ((p-1)! Gamma(b-a+1)) with a = -n
    Rat pref = factorial(n) / factorial(pp - 1) * gamma_ratio(Rat(b + n + 1), pp - n - 1);
    for (long i = 0; i < r; ++i) {
        const Rat den = pochhammer(f[i], m[i]);
        if (scalar_is_zero(den)) throw pole_error("karp-prilepkina: (f_i)_{m_i} = 0");
        pref *= pochhammer(Rat(f[i] - b), m[i]) / den;
    }
    PfqSpec<Rat> rhs_spec{{Rat(-pp + 1), b}, {Rat(b + n + 1)}, Rat(1)};
    for (long i = 0; i < r; ++i) {
        rhs_spec.upper.push_back(Rat(-f[i] + b + 1));
        rhs_spec.lower.push_back(Rat(-f[i] + b + 1 - m[i]));
    }
    return lhs - pref * pfq(rhs_spec);
}

// p+1 F q (-n, a_i; b_j; 1) = (-1)^n prod (a_i)_n / prod (b_j)_n
//   * q+1 F p (-n, -b_j-n+1; -a_i-n+1; (-1)^{p+q})
// (term-by-term reversal l -> n-l; the reversed argument degenerates to 1 in
// the balanced case p + q even, which covers the 3F2 <-> 3F2 use)
inline Rat residual_reversal(const ParamMap& par) {
    const long n = detail::geti(par, "n");
    const long p = detail::geti(par, "p");
    const long q = detail::geti(par, "q");
    if (n < 0) throw hypothesis_error("reversal: n must be a nonnegative integer");
    if (p < 0 || q < 0 || p > 8 || q > 8) throw usage_error("reversal: p, q out of range");
    std::vector<Rat> a(p), b(q);
    for (long i = 0; i < p; ++i) a[i] = detail::get(par, "a" + std::to_string(i + 1));
    for (long j = 0; j < q; ++j) b[j] = detail::get(par, "b" + std::to_string(j + 1));

    PfqSpec<Rat> lhs_spec{{Rat(-n)}, {}, Rat(1)};
    for (const auto& v : a) lhs_spec.upper.push_back(v);
    for (const auto& v : b) lhs_spec.lower.push_back(v);
    const Rat lhs = pfq(lhs_spec);

    Rat pref(parity_sign(n));
    for (const auto& v : a) pref *= pochhammer(v, n);
    for (const auto& v : b) {
        const Rat den = pochhammer(v, n);
        if (scalar_is_zero(den)) throw pole_error("reversal: (b_j)_n = 0");
        pref /= den;
    }
    PfqSpec<Rat> rhs_spec{{Rat(-n)}, {}, Rat(parity_sign(p + q))};
    for (const auto& v : b) rhs_spec.upper.push_back(Rat(-v - n + 1));
    for (const auto& v : a) rhs_spec.lower.push_back(Rat(-v - n + 1));
    return lhs - pref * pfq(rhs_spec);
}

// (a+b)_n = sum_k C(n,k) (a)_k (b)_{n-k}
inline Rat residual_newton_binomial(const ParamMap& p) {
    const long n = detail::geti(p, "n");
    const Rat a = detail::get(p, "a"), b = detail::get(p, "b");
    if (n < 0) throw hypothesis_error("newton-binomial: n must be a nonnegative integer");
    Rat rhs(0);
    for (long k = 0; k <= n; ++k) rhs += binomial(n, k) * pochhammer(a, k) * pochhammer(b, n - k);
    return pochhammer(Rat(a + b), n) - rhs;
}

// 1/((z-b)(z-a)_n) = 1/((z-b)(b-a)_n)
//   + 1/(n-1)! sum_p (-1)^p C(n-1,p) / ((a-p-b)(z-a+p))
// (each partial-fraction term carries the residue factor 1/(a-p-b); the sum
// telescopes back through 1/(n-1)! sum_l (-1)^l C(n-1,l)/(z-a+l) = 1/((z-a)_n))
inline Rat residual_simple_fraction(const ParamMap& par) {
    const long n = detail::geti(par, "n");
    const Rat z = detail::get(par, "z"), a = detail::get(par, "a"), b = detail::get(par, "b");
    if (n < 1) throw hypothesis_error("simple-fraction: n must be a positive integer");
    if (z == b) throw pole_error("simple-fraction: z = b");
    const Rat zan = pochhammer(Rat(z - a), n);
    const Rat ban = pochhammer(Rat(b - a), n);
    if (scalar_is_zero(zan)) throw pole_error("simple-fraction: (z-a)_n = 0");
    if (scalar_is_zero(ban)) throw pole_error("simple-fraction: (b-a)_n = 0");
    const Rat lhs = Rat(1) / (Rat(z - b) * zan);
    Rat rhs = Rat(1) / (Rat(z - b) * ban);
    for (long p = 0; p <= n - 1; ++p) {
        const Rat den = Rat(a - p - b) * Rat(z - a + p);
        if (scalar_is_zero(den)) throw pole_error("simple-fraction: pole at partial-fraction term");
        rhs += Rat(parity_sign(p)) * binomial(n - 1, p) / factorial(n - 1) / den;
    }
    return lhs - rhs;
}

// Kampe de Feriet -> 3F2 reduction behind the Hahn type I orthogonality sums.
inline Rat residual_hahn_reduction(const ParamMap& p) {
    const long na = detail::geti(p, "na");
    const long nh = detail::geti(p, "nh");
    if (na < 1 || nh < 1) throw hypothesis_error("hahn-reduction: n_a and n_a-hat must be positive integers");
    const long s = na + nh;
    const Rat al = detail::get(p, "alpha"), ah = detail::get(p, "alphahat"), b = detail::get(p, "beta"),
              bn = detail::get(p, "N"), j = detail::get(p, "j");

    KdfSpec<Rat> spec;
    spec.joint_upper = {Rat(-na + 1), Rat(-bn)};
    spec.joint_lower = {Rat(-s + 2), Rat(ah + b + nh + 1)};
    spec.first_upper = {Rat(al + b + s), Rat(-bn + j), Rat(al - ah - nh + 1)};
    spec.first_lower = {Rat(al + b + j + 2), Rat(-bn)};
    spec.second_upper = {Rat(ah - al - na + 1)};
    spec.x = spec.y = Rat(1);
    const Rat lhs = kdf(spec);

    const Rat den = pochhammer(Rat(-s + 2), na - 1) * pochhammer(Rat(ah + b + nh + 1), na - 1);
    if (scalar_is_zero(den)) throw pole_error("hahn-reduction: zero prefactor denominator");
    const Rat pref = pochhammer(Rat(ah - al - na + 1), na - 1) * pochhammer(Rat(al + b + bn + 2), na - 1) / den;
    const Rat rhs = pref * pfq<Rat>({{Rat(-na + 1), Rat(al + b + s), Rat(al - ah - nh + 1)},
                                     {Rat(al + b + j + 2), Rat(al - ah + 1)},
                                     Rat(1)});
    return lhs - rhs;
}

inline Rat identity_residual(IdentityId id, const ParamMap& p) {
    switch (id) {
        case IdentityId::ChuVandermonde: return residual_chu_vandermonde(p);
        case IdentityId::PfaffSaalschutz: return residual_pfaff_saalschutz(p);
        case IdentityId::RakhaRathie: return residual_rakha_rathie(p);
        case IdentityId::KarpPrilepkina: return residual_karp_prilepkina(p);
        case IdentityId::Reversal: return residual_reversal(p);
        case IdentityId::NewtonBinomial: return residual_newton_binomial(p);
        case IdentityId::SimpleFraction: return residual_simple_fraction(p);
        case IdentityId::HahnReduction: return residual_hahn_reduction(p);
    }
    throw usage_error("unknown identity");
}

}  // namespace mop::hypergeo
