#pragma once

#include "cmspace/cyclotomic.hpp"
#include "cmspace/numerics.hpp"
#include "cmspace/relation.hpp"

#include <optional>
#include <string>

namespace cmspace {

/// Numeric comparison of the two sides of an identity.
struct ResidualReport {
    std::string description;
    BigFloat lhs;
    BigFloat rhs;
    /// ceil(log2 |lhs - rhs|); nullopt when the difference is exactly zero.
    std::optional<long> residual_log2;
    long threshold_log2 = 0;
    long precision_bits = 0;
    /// residual_log2 <= threshold_log2 (an exact zero always passes).
    bool pass = false;
};

/// Default acceptance threshold: 2^(20 + guard - precision_bits).
long default_threshold_log2(long precision_bits);

ResidualReport make_residual_report(std::string description, BigFloat lhs, BigFloat rhs, long precision_bits,
                                    long threshold_log2);

/// zeta(k, a/q) + (-1)^k zeta(k, 1 - a/q) against
/// (-1)^(k-1)/(k-1)! * D^(k-1)(pi cot pi z) at z = a/q, the derivative taken
/// from the exact csc/cot expansion. Even k checks the plus combination, odd
/// k the minus combination. Requires k >= 2, q > 2, 1 <= a < q, gcd(a, q) = 1.
ResidualReport verify_reflection_identity(long k, long a, long q, long precision_bits,
                                          std::optional<long> threshold_log2 = std::nullopt);

/// zeta(k) * prod_{p | q} (1 - p^-k) against q^-k * sum_{gcd(a,q)=1} zeta(k, a/q).
/// The Euler factor is formed exactly before the multiplication.
/// Requires k >= 2, q >= 2.
ResidualReport verify_euler_factor_identity(long k, long q, long precision_bits,
                                            std::optional<long> threshold_log2 = std::nullopt);

/// Exact rho in Q(zeta_q) with zeta(k, a/q) - zeta(k, 1 - a/q) = (2 pi i)^k rho.
/// For odd k the minus combination is pi^k i^-k w / (k-1)! with
/// w = normalized_cyclotomic(k, a, q), hence rho = -w / ((k-1)! 2^k).
/// Requires odd k >= 3, q > 2, 1 <= a < q/2, gcd(a, q) = 1.
CyclotomicElement exact_ratio(long k, long a, long q);

/// Numeric value of (zeta(k, a/q) - zeta(k, 1 - a/q)) / (2 pi i)^k, which is
/// purely imaginary for odd k: returns its imaginary part.
BigFloat numeric_ratio_imag(long k, long a, long q, long precision_bits);

/// Search for zeta(k) as an integer combination of the minus values, plus two
/// controls run at the same precision: a planted combination of the minus
/// values, and the Euler-factor relation over the raw values.
struct ZetaRepresentationReport {
    long k = 0;
    long q = 0;
    /// Relation search over (zeta(k), minus values).
    RelationReport search;
    /// Relation search over (planted, minus values); planted = sum weights[j] minus[j].
    RelationReport planted_control;
    IntegerVector planted_weights;
    bool planted_recovered = false;
    /// Relation search over (zeta(k) prod(1 - p^-k) q^k, raw values).
    RelationReport euler_control;
    bool euler_recovered = false;
    /// Human-readable reading of `search`; evidence only.
    std::string verdict;
};

/// Requires odd k >= 3 and q > 2.
ZetaRepresentationReport zeta_representation_probe(long k, long q, long precision_bits,
                                                   const Integer& coefficient_bound);

}  // namespace cmspace
