#include "cmspace/numerics.hpp"

#include "cmspace/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmspace {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

void require_precision(long precision_bits) {
    if (precision_bits < kMinPrecisionBits) {
        throw UsageError("precision_bits must be >= " + std::to_string(kMinPrecisionBits) +
                         ", got " + std::to_string(precision_bits));
    }
}

long digits_to_bits(long digits) {
    return static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0))) + 64;
}

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(long precision_bits) {
    require_precision(precision_bits);
    mpfr_init2(value_, precision_bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) : BigFloat(precision_bits) {
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_decimal(std::string_view text, long precision_bits) {
    BigFloat out(precision_bits);
    std::string owned(text);
    char* end = nullptr;
    mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
    if (owned.empty() || end == owned.c_str() || *end != '\0' || !mpfr_number_p(out.value_)) {
        throw UsageError("not a decimal number: '" + owned + "'");
    }
    return out;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Leave `other` as a valid minimum-precision zero.
    mpfr_init2(value_, kMinPrecisionBits);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Integer BigFloat::mantissa() const {
    Integer m;
    if (!is_zero()) {
        mpfr_get_z_2exp(m.get_mpz_t(), value_);
    }
    return m;
}

long BigFloat::exponent() const {
    if (is_zero()) {
        return 0;
    }
    Integer m;
    return mpfr_get_z_2exp(m.get_mpz_t(), value_);
}

std::optional<long> BigFloat::log2_abs_ceil() const {
    if (is_zero()) {
        return std::nullopt;
    }
    const long e = mpfr_get_exp(value_);
    // |x| in [2^(e-1), 2^e); exactly a power of two iff the mantissa is 1.
    BigFloat probe(precision());
    mpfr_abs(probe.value_, value_, MPFR_RNDN);
    mpfr_mul_2si(probe.value_, probe.value_, -(e - 1), MPFR_RNDN);
    return mpfr_cmp_ui(probe.value_, 1) == 0 ? e - 1 : e;
}

long BigFloat::magnitude_exponent() const { return is_zero() ? 0 : mpfr_get_exp(value_); }

std::string BigFloat::to_decimal(int significant_digits) const {
    significant_digits = std::max(significant_digits, 1);
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", significant_digits - 1, value_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
    BigFloat out(precision_bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

namespace {
void widen_for(mpfr_ptr target, mpfr_srcptr other) {
    if (mpfr_get_prec(other) > mpfr_get_prec(target)) {
        mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
    }
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    widen_for(value_, rhs.value_);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    widen_for(value_, rhs.value_);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    widen_for(value_, rhs.value_);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    widen_for(value_, rhs.value_);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs) {
    if (mpfr_unordered_p(lhs.value_, rhs.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x);
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& base, unsigned long exponent) {
    BigFloat out(base.precision());
    mpfr_pow_ui(out.get(), base.get(), exponent, MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& x) {
    if (x.sign() < 0) {
        throw DomainError("square root of a negative number");
    }
    BigFloat out(x.precision());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat scale(const BigFloat& x, const Rational& factor) {
    BigFloat out(x.precision());
    mpfr_mul_q(out.get(), x.get(), factor.get_mpq_t(), MPFR_RNDN);
    return out;
}

// ---------------------------------------------------------------------------

BigFloat pi(long precision_bits) {
    require_precision(precision_bits);
    BigFloat out(precision_bits);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

std::vector<Rational> bernoulli_numbers(long n_max) {
    if (n_max < 0) {
        throw UsageError("bernoulli_numbers: n_max must be non-negative");
    }
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1, Rational(0));
    out[0] = 1;
    if (n_max >= 1) {
        out[1] = Rational(-1, 2);
    }
    const long half = n_max / 2;
    if (half == 0) {
        return out;
    }

    // Tangent numbers T_1..T_half by the integer recurrence of Brent and
    // Harvey; B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1)).
    std::vector<Integer> tangent(static_cast<std::size_t>(half) + 1);
    tangent[1] = 1;
    for (long k = 2; k <= half; ++k) {
        tangent[k] = (k - 1) * tangent[k - 1];
    }
    for (long k = 2; k <= half; ++k) {
        for (long j = k; j <= half; ++j) {
            tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j];
        }
    }
    for (long k = 1; k <= half; ++k) {
        Integer four_k;
        mpz_ui_pow_ui(four_k.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
        Integer num = 2 * k * tangent[k];
        if (k % 2 == 0) {
            num = -num;
        }
        out[2 * k] = make_rational(num, four_k * (four_k - 1));
    }
    return out;
}

TrigValues trig_at_rational(long a, long q, long precision_bits) {
    require_precision(precision_bits);
    if (q <= 0) {
        throw UsageError("trig_at_rational: q must be positive");
    }
    long r = a % q;
    if (r < 0) {
        r += q;
    }
    if (r == 0) {
        throw DomainError("cot(pi*" + std::to_string(a) + "/" + std::to_string(q) +
                          ") is a pole");
    }
    const long g = std::gcd(r, q);
    r /= g;
    q /= g;

    // cot and csc^2 reach about (q/pi)^2 near the poles.
    const long magnitude_bits = 2 * static_cast<long>(std::ceil(std::log2(static_cast<double>(q)))) + 1;
    const long wp = precision_bits + kGuardBits + magnitude_bits;

    if (2 * r == q) {
        return {BigFloat(0L, wp), BigFloat(1L, wp)};
    }
    const bool reflect = 2 * r > q;
    if (reflect) {
        r = q - r;
    }

    BigFloat angle = pi(wp + 8);
    angle = scale(angle, make_rational(r, q));
    BigFloat s(wp + 8), c(wp + 8);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);

    BigFloat cot = (c / s).with_precision(wp);
    BigFloat csc_sq = (BigFloat(1L, wp + 8) / (s * s)).with_precision(wp);
    if (reflect) {
        cot = -cot;
    }
    return {std::move(cot), std::move(csc_sq)};
}

}  // namespace cmspace
