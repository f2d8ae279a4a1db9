#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cmspace {

using Integer = mpz_class;
using Rational = mpq_class;

/// Smallest precision any BigFloat may carry.
inline constexpr long kMinPrecisionBits = 16;

/// Extra bits every compound operation carries internally beyond the
/// requested precision.
inline constexpr long kGuardBits = 32;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Arbitrary-precision binary float: value = mantissa * 2^exponent, rounded
/// to nearest at `precision()` bits. Binary operations produce a result at
/// the larger of the two operand precisions.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = kMinPrecisionBits);
    BigFloat(long value, long precision_bits);
    BigFloat(const Integer& value, long precision_bits);
    BigFloat(const Rational& value, long precision_bits);

    /// Parses a decimal literal such as "-1.25e-3".
    static BigFloat from_decimal(std::string_view text, long precision_bits);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long precision() const { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    /// Exact decomposition value = mantissa() * 2^exponent(); zero has
    /// mantissa 0 and exponent 0.
    Integer mantissa() const;
    long exponent() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// ceil(log2|x|), or nullopt when x == 0.
    std::optional<long> log2_abs_ceil() const;
    /// Binary exponent e with 2^(e-1) <= |x| < 2^e (0 for zero).
    long magnitude_exponent() const;

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Scientific decimal string with `significant_digits` digits.
    std::string to_decimal(int significant_digits) const;

    /// Copy rounded to a different precision.
    BigFloat with_precision(long precision_bits) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

    friend bool operator==(const BigFloat& lhs, const BigFloat& rhs) {
        return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
    }
    friend std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat pow(const BigFloat& base, unsigned long exponent);
BigFloat sqrt(const BigFloat& x);
/// Multiplies by an exact rational, rounding once at x's precision.
BigFloat scale(const BigFloat& x, const Rational& factor);

/// pi to the given precision; |result - pi| <= 2^(2 - precision_bits).
BigFloat pi(long precision_bits);

/// B_0 .. B_{n_max} with B_1 = -1/2, as exact rationals.
std::vector<Rational> bernoulli_numbers(long n_max);

struct TrigValues {
    BigFloat cot;
    BigFloat csc_sq;
};

/// cot(pi a/q) and csc^2(pi a/q). The fraction is reduced exactly into (0,1)
/// before any floating evaluation; both results carry an absolute error at
/// most 2^(2 - precision_bits).
TrigValues trig_at_rational(long a, long q, long precision_bits);

/// Binary precision for a decimal-digit request: ceil(digits*log2(10)) + 64.
long digits_to_bits(long digits);

/// Throws UsageError if precision_bits < kMinPrecisionBits.
void require_precision(long precision_bits);

}  // namespace cmspace
