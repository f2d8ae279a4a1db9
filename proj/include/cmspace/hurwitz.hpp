#pragma once

#include "cmspace/numerics.hpp"

#include <map>
#include <vector>

namespace cmspace {

/// Largest order k accepted by the zeta evaluators.
inline constexpr long kMaxZetaOrder = 1'000'000;

/// Residues a with 1 <= a < q/2 and gcd(a, q) = 1. Together with their
/// negatives mod q they exhaust the coprime residues.
struct HalfSystem {
    long modulus = 0;
    std::vector<long> representatives;
};

/// Canonical half-system of q; requires q > 2.
HalfSystem half_system(long q);

struct BasisValues {
    long k = 0;
    HalfSystem half_system;
    /// zeta(k, a/q) for every coprime a in (0, q).
    std::map<long, BigFloat> raw;
    /// zeta(k, a/q) + zeta(k, 1 - a/q), a in the half-system.
    std::map<long, BigFloat> plus;
    /// zeta(k, a/q) - zeta(k, 1 - a/q), a in the half-system.
    std::map<long, BigFloat> minus;
};

/// zeta(k, a/q) by Euler-Maclaurin summation with |error| <= 2^(2 - precision_bits).
///
/// The cutoff N and the number of Bernoulli corrections are chosen so the
/// first omitted correction is below 2^-(precision_bits + 3); since
/// (t + x)^-k is completely monotone the remainder is bounded by that term.
/// Requires 2 <= k <= kMaxZetaOrder and 1 <= a <= q (a = q is the Riemann case).
BigFloat hurwitz_zeta(long k, long a, long q, long precision_bits);

/// zeta(k) = zeta(k, 1).
BigFloat riemann_zeta(long k, long precision_bits);

/// Raw, plus and minus spanning values of V_k(q), the Q-span of the zeta(k, a/q) with gcd(a, q) = 1.
/// Requires k >= 2 and q > 2.
BasisValues basis_values(long k, long q, long precision_bits);

}  // namespace cmspace
