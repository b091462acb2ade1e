#pragma once

#include <vector>

#include "mop/scalar.hpp"

namespace mop {

// Polynomials in two bases:
//   PochPoly: coeffs[l] multiplies (-x)_l  (discrete orthogonality basis)
//   MonoPoly: coeffs[l] multiplies x^l
// The zero polynomial is the empty coefficient vector; otherwise the trailing
// coefficient is nonzero.

template <class S>
struct PochPoly {
    std::vector<S> coeffs;
};

template <class S>
struct MonoPoly {
    std::vector<S> coeffs;
};

namespace detail {
template <class S>
void trim(std::vector<S>& c) {
    while (!c.empty() && scalar_is_zero(c.back())) c.pop_back();
}
}  // namespace detail

template <class P>
P trimmed(P p) {
    detail::trim(p.coeffs);
    return p;
}

template <class P>
bool poly_is_zero(const P& p) {
    for (const auto& v : p.coeffs)
        if (!scalar_is_zero(v)) return false;
    return true;
}

// degree of the zero polynomial is reported as -1
template <class P>
long poly_degree(const P& p) {
    for (long l = static_cast<long>(p.coeffs.size()) - 1; l >= 0; --l)
        if (!scalar_is_zero(p.coeffs[l])) return l;
    return -1;
}

template <class P>
bool poly_equal(const P& a, const P& b) {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t l = 0; l < n; ++l) {
        const auto va = l < a.coeffs.size() ? a.coeffs[l] : typename std::decay_t<decltype(a.coeffs[0])>(0);
        const auto vb = l < b.coeffs.size() ? b.coeffs[l] : typename std::decay_t<decltype(b.coeffs[0])>(0);
        if (va != vb) return false;
    }
    return true;
}

template <class S, class X>
X poly_eval(const PochPoly<S>& p, const X& x) {
    X acc(0), basis(1);  // basis = (-x)_l
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
        acc += X(p.coeffs[l]) * basis;
        basis *= X(l) - x;
    }
    return acc;
}

template <class S, class X>
X poly_eval(const MonoPoly<S>& p, const X& x) {
    X acc(0);
    for (std::size_t l = p.coeffs.size(); l-- > 0;) acc = acc * x + X(p.coeffs[l]);
    return acc;
}

template <class P>
P poly_add(const P& a, const P& b) {
    P r = a;
    if (r.coeffs.size() < b.coeffs.size()) r.coeffs.resize(b.coeffs.size(), typename std::decay_t<decltype(b.coeffs[0])>(0));
    for (std::size_t l = 0; l < b.coeffs.size(); ++l) r.coeffs[l] += b.coeffs[l];
    detail::trim(r.coeffs);
    return r;
}

template <class P, class S>
P poly_scale(const P& a, const S& s) {
    P r = a;
    for (auto& v : r.coeffs) v *= s;
    detail::trim(r.coeffs);
    return r;
}

template <class P>
P poly_sub(const P& a, const P& b) {
    using S = std::decay_t<decltype(b.coeffs[0])>;
    return poly_add(a, poly_scale(b, S(-1)));
}

// x * (-x)_l = l*(-x)_l - (-x)_{l+1}
template <class S>
PochPoly<S> poly_mul_x(const PochPoly<S>& p) {
    PochPoly<S> r;
    r.coeffs.assign(p.coeffs.size() + 1, S(0));
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
        r.coeffs[l] += S(static_cast<long>(l)) * p.coeffs[l];
        r.coeffs[l + 1] -= p.coeffs[l];
    }
    detail::trim(r.coeffs);
    return r;
}

template <class S>
MonoPoly<S> poly_mul_x(const MonoPoly<S>& p) {
    MonoPoly<S> r;
    r.coeffs.assign(p.coeffs.size() + 1, S(0));
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) r.coeffs[l + 1] = p.coeffs[l];
    detail::trim(r.coeffs);
    return r;
}

// Basis change: expand each (-x)_l into powers of x by the product recurrence
// (-x)_{l+1} = (-x)_l * (l - x).
template <class S>
MonoPoly<S> poch_to_mono(const PochPoly<S>& p) {
    MonoPoly<S> out;
    std::vector<S> basis{S(1)};  // (-x)_l in monomial coefficients
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
        if (!scalar_is_zero(p.coeffs[l])) {
            if (out.coeffs.size() < basis.size()) out.coeffs.resize(basis.size(), S(0));
            for (std::size_t j = 0; j < basis.size(); ++j) out.coeffs[j] += p.coeffs[l] * basis[j];
        }
        std::vector<S> next(basis.size() + 1, S(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j] += S(static_cast<long>(l)) * basis[j];
            next[j + 1] -= basis[j];
        }
        basis = std::move(next);
    }
    detail::trim(out.coeffs);
    return out;
}

// Inverse change: peel the top monomial coefficient; deg-d tops satisfy
// x^d = (-1)^d (-x)_d + lower degree.
template <class S>
PochPoly<S> mono_to_poch(const MonoPoly<S>& p) {
    MonoPoly<S> rem = trimmed(p);
    PochPoly<S> out;
    out.coeffs.assign(rem.coeffs.size(), S(0));
    while (true) {
        const long d = poly_degree(rem);
        if (d < 0) break;
        const S top = rem.coeffs[d] * S(parity_sign(d));
        out.coeffs[d] = top;
        PochPoly<S> single;
        single.coeffs.assign(d + 1, S(0));
        single.coeffs[d] = top;
        rem = poly_sub(rem, poch_to_mono(single));
    }
    detail::trim(out.coeffs);
    return out;
}

template <class S>
MonoPoly<S> poly_mul(const MonoPoly<S>& a, const MonoPoly<S>& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    MonoPoly<S> r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, S(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    detail::trim(r.coeffs);
    return r;
}

template <class S>
PochPoly<S> poly_mul(const PochPoly<S>& a, const PochPoly<S>& b) {
    return mono_to_poch(poly_mul(poch_to_mono(a), poch_to_mono(b)));
}

// (-x)_j as a PochPoly
template <class S>
PochPoly<S> poch_basis(long j) {
    PochPoly<S> p;
    p.coeffs.assign(j + 1, S(0));
    p.coeffs[j] = S(1);
    return p;
}

template <class S>
MonoPoly<S> mono_basis(long j) {
    MonoPoly<S> p;
    p.coeffs.assign(j + 1, S(0));
    p.coeffs[j] = S(1);
    return p;
}

}  // namespace mop
