#pragma once

#include "cmspace/lattice.hpp"
#include "cmspace/numerics.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmspace {

/// A verified integer relation sum_i coeffs[i] * x_i ~ 0.
struct Relation {
    IntegerVector coeffs;
    /// ceil(log2 |sum c_i x_i|) at full input precision; nullopt when the
    /// sum evaluates to exactly zero.
    std::optional<long> residual_log2;
};

/// Outcome of an integer-relation search. Relations are evidence at the
/// stated precision, never proofs.
struct RelationReport {
    std::vector<std::string> inputs;
    std::string inputs_digest;
    std::vector<Relation> relations;
    Integer coefficient_bound;
    long precision_bits = 0;
    /// Residual threshold a candidate had to meet.
    long threshold_log2 = 0;
    /// Input count minus verified relations.
    long empirical_independent_count = 0;
};

enum class ProbeMode { full, plus, minus };

/// ceil(log2 |sum c_i x_i|), evaluated without rounding loss beyond the
/// inputs' own precision; nullopt for an exact zero.
std::optional<long> relation_residual_log2(std::span<const BigFloat> values, const IntegerVector& coeffs);

/// Smallest precision_bits find_integer_relation accepts for n values of
/// magnitude below 2^max_exponent with the given coefficient bound.
long required_relation_precision(std::size_t n, const Integer& coefficient_bound, long max_exponent);

/// Searches for integer relations among `values` with all |c_i| <= bound.
///
/// Each pass LLL-reduces the lattice spanned by rows (e_i | round(2^P x_i)),
/// P = precision_bits - 64 - (largest input exponent), and takes the first
/// reduced row whose coefficients respect the bound and whose residual,
/// re-evaluated at full precision, is at most
/// 2^(largest exponent + log2(n * bound) + 32 - precision_bits).
/// The found relation's last nonzero position is then dropped from the
/// active set and the search repeats. Coefficients are primitive with the
/// first nonzero entry positive.
RelationReport find_integer_relation(std::span<const BigFloat> values, long precision_bits,
                                     const Integer& coefficient_bound);

/// Relation search over the spanning values of V_k(q): the phi(q) raw values
/// (full) or the phi(q)/2 plus/minus combinations. Requires k >= 2, q > 2.
RelationReport probe_dimension(long k, long q, ProbeMode mode, long precision_bits, const Integer& coefficient_bound);

ProbeMode parse_probe_mode(const std::string& text);
std::string to_string(ProbeMode mode);

}  // namespace cmspace
