#pragma once

#include "mop/poly.hpp"

namespace mop {

// Multi-index (n1, n2) of a multiple orthogonal polynomial.
struct MultiIndex {
    long n1 = 0;
    long n2 = 0;
    long order() const { return n1 + n2; }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

// The five near-neighbor recursion coefficients at one index.
template <class S>
struct RecursionCoeffs {
    S b1, b2, c, d1, d2;
};

// Type I pair (Q^(1), Q^(2)) with deg Q^(a) <= n_a - 1.
template <class P>
struct TypeIPairT {
    P q1, q2;
};

template <class S>
using PochPair = TypeIPairT<PochPoly<S>>;
template <class S>
using MonoPair = TypeIPairT<MonoPoly<S>>;

enum class Kind { type1, type2 };

}  // namespace mop
