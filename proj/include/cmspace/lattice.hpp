#pragma once

#include "cmspace/numerics.hpp"

#include <vector>

namespace cmspace {

using IntegerVector = std::vector<Integer>;

/// Determinant of the Gram matrix B B^T (fraction-free Bareiss elimination).
Integer gram_determinant(const std::vector<IntegerVector>& rows);

/// Linearly independent integer row vectors of a common length.
class LatticeBasis {
public:
    /// Throws UsageError if rows are empty, ragged, or linearly dependent.
    explicit LatticeBasis(std::vector<IntegerVector> rows);

    const std::vector<IntegerVector>& rows() const { return rows_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dimension() const { return rows_.front().size(); }

private:
    struct Trusted {};
    LatticeBasis(std::vector<IntegerVector> rows, Trusted) : rows_(std::move(rows)) {}
    friend LatticeBasis lll_reduce(const LatticeBasis&, const Rational&);

    std::vector<IntegerVector> rows_;
};

/// LLL reduction with exact integer Gram-Schmidt data (Cohen, integral LLL).
/// The result spans the same lattice and satisfies size reduction
/// |mu_ij| <= 1/2 and the Lovasz condition with parameter delta in (1/4, 1).
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta = Rational(3, 4));

}  // namespace cmspace
