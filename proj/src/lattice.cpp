#include "cmspace/lattice.hpp"

#include "cmspace/errors.hpp"

#include <algorithm>

namespace cmspace {

namespace {

Integer dot(const IntegerVector& a, const IntegerVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Nearest integer to num/den for den > 0, ties rounded up.
Integer round_div(const Integer& num, const Integer& den) {
    Integer twice = 2 * num + den;
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
    return out;
}

}  // namespace

Integer gram_determinant(const std::vector<IntegerVector>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) {
        return 1;
    }
    std::vector<IntegerVector> m(n, IntegerVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m[i][j] = m[j][i] = dot(rows[i], rows[j]);
        }
    }
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

LatticeBasis::LatticeBasis(std::vector<IntegerVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) {
        throw UsageError("lattice basis needs at least one nonempty row");
    }
    const std::size_t width = rows_.front().size();
    if (std::any_of(rows_.begin(), rows_.end(), [&](const IntegerVector& r) { return r.size() != width; })) {
        throw UsageError("lattice basis rows differ in length");
    }
    if (rows_.size() > width || gram_determinant(rows_) == 0) {
        throw UsageError("lattice basis rows are linearly dependent");
    }
}

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta) {
    if (delta <= Rational(1, 4) || delta >= 1) {
        throw UsageError("LLL parameter delta must lie in (1/4, 1)");
    }
    const Integer& dp = delta.get_num();
    const Integer& dq = delta.get_den();

    std::vector<IntegerVector> b = basis.rows();
    const std::size_t n = b.size();
    if (n == 1) {
        return basis;
    }

    // d[i] = Gram determinant of b_0..b_{i-1}; lambda[i][j] = d[j+1] mu_ij.
    std::vector<Integer> d(n + 1);
    std::vector<IntegerVector> lambda(n, IntegerVector(n));
    d[0] = 1;
    d[1] = dot(b[0], b[0]);

    auto size_reduce = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lambda[k][l]) <= d[l + 1]) {
            return;
        }
        const Integer r = round_div(lambda[k][l], d[l + 1]);
        for (std::size_t c = 0; c < b[k].size(); ++c) {
            b[k][c] -= r * b[l][c];
        }
        lambda[k][l] -= r * d[l + 1];
        for (std::size_t i = 0; i < l; ++i) {
            lambda[k][i] -= r * lambda[l][i];
        }
    };

    std::size_t k = 1;
    std::size_t k_max = 0;
    while (k < n) {
        if (k > k_max) {
            k_max = k;
            for (std::size_t j = 0; j <= k; ++j) {
                Integer u = dot(b[k], b[j]);
                for (std::size_t i = 0; i < j; ++i) {
                    u = (d[i + 1] * u - lambda[k][i] * lambda[j][i]) / d[i];
                }
                if (j < k) {
                    lambda[k][j] = u;
                } else {
                    if (u == 0) {
                        throw UsageError("lattice basis rows are linearly dependent");
                    }
                    d[k + 1] = u;
                }
            }
        }
        size_reduce(k, k - 1);
        // Lovasz: swap when d[k+1] d[k-1] < delta d[k]^2 - lambda[k][k-1]^2.
        const Integer& lam = lambda[k][k - 1];
        if (dq * d[k + 1] * d[k - 1] < dp * d[k] * d[k] - dq * lam * lam) {
            std::swap(b[k], b[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) {
                std::swap(lambda[k][j], lambda[k - 1][j]);
            }
            const Integer mu = lambda[k][k - 1];
            const Integer new_d = (d[k - 1] * d[k + 1] + mu * mu) / d[k];
            for (std::size_t i = k + 1; i <= k_max; ++i) {
                const Integer t = lambda[i][k];
                lambda[i][k] = (d[k + 1] * lambda[i][k - 1] - mu * t) / d[k];
                lambda[i][k - 1] = (new_d * t + mu * lambda[i][k]) / d[k + 1];
            }
            d[k] = new_d;
            if (k > 1) {
                --k;
            }
        } else {
            for (std::size_t l = k - 1; l-- > 0;) {
                size_reduce(k, l);
            }
            ++k;
        }
    }
    return LatticeBasis(std::move(b), LatticeBasis::Trusted{});
}

}  // namespace cmspace
