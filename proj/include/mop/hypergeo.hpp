#pragma once

#include <optional>
#include <vector>

#include "mop/scalar.hpp"

namespace mop::hypergeo {

// Terminating generalized hypergeometric series pFq and Kampe de Feriet
// double series. Termination is driven by nonpositive-integer numerator
// parameters: (-m)_n = 0 for n > m. Terms are built by forward recurrence on
// the term ratio, so each step costs a handful of scalar multiplications.

template <class S>
struct PfqSpec {
    std::vector<S> upper;
    std::vector<S> lower;
    S arg{0};
};

template <class S>
struct KdfSpec {
    std::vector<S> joint_upper, joint_lower;    // (a) / (alpha): Pochhammer index l+m
    std::vector<S> first_upper, first_lower;    // (b) / (beta):  index l
    std::vector<S> second_upper, second_lower;  // (c) / (gamma): index m
    S x{0}, y{0};
};

namespace detail {

template <class S>
std::optional<long> nonpos_int_bound(const S& v) {
    if (!is_nonpos_int(v)) return std::nullopt;
    if constexpr (std::is_same_v<S, Rat>) {
        return to_long(Rat(-v));
    } else {
        return static_cast<long>(S(-v));
    }
}

template <class S>
std::optional<long> min_bound(const std::vector<S>& params) {
    std::optional<long> best;
    for (const auto& p : params)
        if (auto b = nonpos_int_bound(p); b && (!best || *b < *best)) best = b;
    return best;
}

}  // namespace detail

template <class S>
S pfq(const PfqSpec<S>& spec, std::optional<long> max_terms = std::nullopt) {
    const auto term_bound = detail::min_bound(spec.upper);
    if (!term_bound && !max_terms)
        throw usage_error("pfq: series does not terminate and no max_terms given");

    long last = term_bound ? *term_bound : -1;
    if (max_terms) {
        if (*max_terms <= 0) return S(0);
        const long cap = *max_terms - 1;
        last = term_bound ? std::min(last, cap) : cap;
    }

    S sum(0), term(1);
    for (long l = 0;; ++l) {
        sum += term;
        if (l == last) break;
        S num(1), den(1);
        for (const auto& a : spec.upper) num *= a + l;
        for (const auto& b : spec.lower) den *= b + l;
        den *= l + 1;
        if (scalar_is_zero(den))
            throw pole_error("pfq: lower-parameter pole at term " + std::to_string(l + 1));
        term = term * num * spec.arg / den;
        if (scalar_is_zero(term)) break;
    }
    return sum;
}

template <class S>
S kdf(const KdfSpec<S>& spec) {
    const auto joint = detail::min_bound(spec.joint_upper);
    const auto first = detail::min_bound(spec.first_upper);
    const auto second = detail::min_bound(spec.second_upper);
    if (!joint && !(first && second))
        throw usage_error("kdf: double series does not terminate");

    const long lmax = joint ? (first ? std::min(*first, *joint) : *joint) : *first;
    const long mmax = joint ? (second ? std::min(*second, *joint) : *joint) : *second;
    const long scap = joint ? std::min(*joint, lmax + mmax) : lmax + mmax;

    // Shared factor tables; a zero entry is absorbing in its index.
    auto build = [](long count, const std::vector<S>& up, const std::vector<S>& low, const S& extra_arg,
                    bool divide_factorial, const char* label) {
        std::vector<S> t(count + 1, S(0));
        t[0] = S(1);
        for (long i = 0; i < count; ++i) {
            if (scalar_is_zero(t[i])) {
                t[i + 1] = S(0);
                continue;
            }
            S num(1), den(1);
            for (const auto& a : up) num *= a + i;
            for (const auto& b : low) den *= b + i;
            if (divide_factorial) den *= i + 1;
            if (scalar_is_zero(den)) throw pole_error(std::string("kdf: lower-parameter pole in ") + label);
            t[i + 1] = t[i] * num * extra_arg / den;
        }
        return t;
    };

    const auto jt = build(scap, spec.joint_upper, spec.joint_lower, S(1), false, "joint block");
    const auto rl = build(lmax, spec.first_upper, spec.first_lower, spec.x, true, "first block");
    const auto cm = build(mmax, spec.second_upper, spec.second_lower, spec.y, true, "second block");

    S sum(0);
    for (long l = 0; l <= lmax; ++l) {
        if (scalar_is_zero(rl[l])) continue;
        for (long m = 0; m <= mmax && l + m <= scap; ++m) sum += jt[l + m] * rl[l] * cm[m];
    }
    return sum;
}

}  // namespace mop::hypergeo
