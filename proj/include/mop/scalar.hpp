#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mop {

using Int  = boost::multiprecision::mpz_int;
using Rat  = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// A Pochhammer or Gamma-ratio denominator hit an exact zero.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated an operation precondition (bad flag, bad literal, bad mode).
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Multi-index or support point outside the admissible domain.
struct index_error : std::runtime_error {
    explicit index_error(const std::string& what) : std::runtime_error(what) {}
};

// Identity parameters fail the identity's hypotheses (distinct from a pole and
// from a nonzero residual).
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact linear system has no unique solution.
struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Working precision for Real. mpfr precision is process-global state; suites
// set it once up front and all Real temporaries inherit it.

inline unsigned& precision_bits_ref() {
    static unsigned bits = 256;
    return bits;
}

inline unsigned precision_bits() { return precision_bits_ref(); }

inline void set_precision_bits(unsigned bits) {
    if (bits < 64) throw usage_error("precision must be at least 64 bits");
    precision_bits_ref() = bits;
    // digits10 chosen so the mpfr mantissa is at least `bits` wide.
    const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
    Real::default_precision(digits10);
}

struct precision_guard {
    unsigned saved;
    explicit precision_guard(unsigned bits) : saved(precision_bits()) { set_precision_bits(bits); }
    ~precision_guard() { set_precision_bits(saved); }
};

inline Real to_real(const Rat& q) { return Real(q); }

// Smallest magnitude treated as a certified zero in float mode: 2^-(prec-16).
inline Real float_tolerance() {
    return pow(Real(2), -static_cast<long>(precision_bits()) + 16);
}

// ---------------------------------------------------------------------------
// Rational literals: "p/q" or "p", optional leading minus.

inline Rat parse_rat(std::string_view text) {
    auto bad = [&] { return usage_error("bad rational literal '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw bad();
        return Int(std::string(part));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text), Int(1));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);  // two-integer ctor canonicalizes
}

inline std::string rat_str(const Rat& q) { return q.str(); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline bool is_nonpos_int(const Rat& q) { return is_integer(q) && q <= 0; }

inline bool is_integer(const Real& x) { return mpfr_integer_p(x.backend().data()) != 0; }

inline bool is_nonpos_int(const Real& x) { return is_integer(x) && x <= 0; }

inline long to_long(const Rat& q) {
    if (!is_integer(q)) throw usage_error("expected integer, got " + q.str());
    return static_cast<long>(numerator(q));
}

template <class S> bool scalar_is_zero(const S& v) { return v == 0; }

inline std::string to_str(const Rat& q) { return q.str(); }
inline std::string to_str(const Real& x) { return x.str(8); }

// ---------------------------------------------------------------------------
// Pochhammer symbols and integer-offset Gamma ratios. Exact over Rat, rounded
// over Real; both stay inside products of linear factors.

template <class S>
S pochhammer(const S& x, long n) {
    if (n < 0) throw usage_error("pochhammer: negative length");
    S acc(1);
    for (long i = 0; i < n; ++i) acc *= x + i;
    return acc;
}

// Gamma(x+n)/Gamma(x) for integer n of either sign.
template <class S>
S gamma_ratio(const S& x, long n) {
    if (n >= 0) return pochhammer(x, n);
    const S p = pochhammer(S(x + n), -n);
    if (scalar_is_zero(p))
        throw pole_error("gamma_ratio: pole, (" + to_str(S(x + n)) + ")_" + std::to_string(-n) + " = 0");
    return S(1) / p;
}

inline Rat factorial(long n) {
    if (n < 0) throw usage_error("factorial: negative argument");
    Int acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return Rat(acc, Int(1));
}

// n! as a scalar of the requested type
template <class S>
S factorial_as(long n) {
    if (n < 0) throw usage_error("factorial: negative argument");
    S acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Rat binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw usage_error("binomial: need 0 <= k <= n");
    // n!/(k!(n-k)!) built multiplicatively so intermediates stay integral.
    Int acc(1);
    if (k > n - k) k = n - k;
    for (long i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return Rat(acc, Int(1));
}

// x^e for integer e of either sign.
template <class S>
S ipow(const S& x, long e) {
    if (e == 0) return S(1);
    const bool neg = e < 0;
    unsigned long m = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    S base = x, acc(1);
    while (m) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    if (neg) {
        if (scalar_is_zero(acc)) throw pole_error("ipow: zero base with negative exponent");
        return S(1) / acc;
    }
    return acc;
}

inline long parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace mop
