#pragma once

#include "cmspace/cyclotomic.hpp"
#include "cmspace/numerics.hpp"

#include <map>

namespace cmspace {

/// Integer table for the (k-1)-th derivative of pi*cot(pi z):
///
///   D^(k-1)(pi cot pi z) = pi^k * sum_l c_l csc^(2l)(pi z) cot^(k-2l)(pi z).
///
/// Only nonzero c_l are stored. For k >= 2 the l = 0 entry never appears.
struct CotDerivativeExpansion {
    long order_k = 1;
    std::map<long, Integer> coefficients;

    friend bool operator==(const CotDerivativeExpansion&, const CotDerivativeExpansion&) = default;
};

/// One differentiation step: table for k -> table for k + 1.
/// d/dz [csc^(2l) cot^m] = pi * (-2l csc^(2l) cot^(m+1) - m csc^(2l+2) cot^(m-1)).
CotDerivativeExpansion differentiate(const CotDerivativeExpansion& expansion);

/// Table for D^(k-1)(pi cot pi z), k >= 1.
CotDerivativeExpansion expand(long k);

/// pi^k sum_l c_l csc^(2l)(pi a/q) cot^(k-2l)(pi a/q), absolute error at most
/// 2^(2 - precision_bits). Requires q >= 2, 1 <= a < q, gcd(a, q) = 1.
BigFloat evaluate_numeric(const CotDerivativeExpansion& expansion, long a, long q, long precision_bits);

/// Exact w in Q(zeta_q) with D^(k-1)(pi cot pi z)|_{z=a/q} = pi^k i^(-k) w.
/// Substitutes cot = -i u and csc^2 = 1 - u^2 where u = i cot(pi a/q), giving
/// w = sum_l (-1)^l c_l (1 - u^2)^l u^(k-2l).
CyclotomicElement normalized_cyclotomic(long k, long a, long q);

}  // namespace cmspace
