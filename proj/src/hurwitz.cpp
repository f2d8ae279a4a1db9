#include "cmspace/hurwitz.hpp"

#include "cmspace/errors.hpp"

#include <cmath>
#include <numeric>

namespace cmspace {

namespace {

void require_order(long k) {
    if (k < 2) {
        throw DomainError("zeta(k, x) has a pole at k = 1; need k >= 2, got k = " + std::to_string(k));
    }
    if (k > kMaxZetaOrder) {
        throw UsageError("k exceeds the supported maximum " + std::to_string(kMaxZetaOrder));
    }
}

// Cutoff, correction count and Bernoulli table shared by every evaluation
// of one order k at one precision over arguments x >= min_x.
struct EulerMaclaurinPlan {
    long k = 0;
    long precision_bits = 0;
    long working_bits = 0;
    long cutoff = 0;       // N
    long corrections = 0;  // M
    std::vector<Rational> bernoulli;
};

// log2 |B_2j / (2j)! * k(k+1)...(k+2j-2) * y^-(k+2j-1)|, overestimated by at
// most a bit (|B_2j|/(2j)! <= 2 zeta(2) / (2 pi)^2j).
double log2_correction_estimate(long k, long j, double y) {
    const double ln2 = std::log(2.0);
    const double bern = std::log2(2.0 * 1.6449340668482264) - 2.0 * j * std::log2(2.0 * M_PI);
    const double rising = (std::lgamma(k + 2.0 * j - 1.0) - std::lgamma(static_cast<double>(k))) / ln2;
    return bern + rising - (k + 2.0 * j - 1.0) * std::log2(y);
}

// Bound on the first omitted correction, evaluated in multiprecision from the
// exact Bernoulli number.
BigFloat omitted_term(const EulerMaclaurinPlan& plan, const Rational& bernoulli_2j, long j, const BigFloat& y) {
    Integer rising = 1;
    for (long i = 0; i < 2 * j - 1; ++i) {
        rising *= plan.k + i;
    }
    Integer factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(2 * j));
    BigFloat term(0L, 64);
    mpfr_pow_si(term.get(), y.with_precision(64).get(), -(plan.k + 2 * j - 1), MPFR_RNDU);
    return abs(scale(term, make_rational(bernoulli_2j.get_num() * rising, bernoulli_2j.get_den() * factorial)));
}

EulerMaclaurinPlan make_plan(long k, long precision_bits, double min_x) {
    EulerMaclaurinPlan plan;
    plan.k = k;
    plan.precision_bits = precision_bits;

    const double target = -static_cast<double>(precision_bits + 3);
    long cutoff = std::max(k, precision_bits / 3);
    long corrections = 0;
    for (;;) {
        const double y = static_cast<double>(cutoff) + min_x;
        long j = 1;
        double previous = log2_correction_estimate(k, j, y);
        while (previous >= target) {
            ++j;
            const double next = log2_correction_estimate(k, j, y);
            if (next >= previous) {
                break;  // corrections stopped shrinking before the target
            }
            previous = next;
        }
        if (previous < target) {
            corrections = j - 1;
            break;
        }
        cutoff *= 2;
    }

    // ceil(log2 zeta(k, x)) <= k log2(1/x) + 1; rounding in the partial sum
    // costs log2(N) more bits.
    const long magnitude = static_cast<long>(std::ceil(k * std::log2(1.0 / min_x))) + 1;
    const long sum_bits = static_cast<long>(std::ceil(std::log2(static_cast<double>(cutoff)))) + 4;
    plan.working_bits = precision_bits + kGuardBits + magnitude + sum_bits;
    plan.cutoff = cutoff;

    // Confirm the estimate with the exact omitted term; widen M if needed.
    const BigFloat y_low(Rational(static_cast<double>(cutoff) + min_x), 64);
    const BigFloat limit = [&] {
        BigFloat t(1L, 64);
        mpfr_mul_2si(t.get(), t.get(), -(precision_bits + 3), MPFR_RNDN);
        return t;
    }();
    for (;;) {
        plan.bernoulli = bernoulli_numbers(2 * (corrections + 1));
        if (omitted_term(plan, plan.bernoulli[2 * (corrections + 1)], corrections + 1, y_low) <= limit) {
            break;
        }
        corrections += 1 + corrections / 4;
    }
    plan.corrections = corrections;
    return plan;
}

BigFloat evaluate(const EulerMaclaurinPlan& plan, long a, long q) {
    const long k = plan.k;
    const long wp = plan.working_bits;
    const long cutoff = plan.cutoff;

    // sum_{n<N} (n + a/q)^-k = q^k sum_{n<N} (nq + a)^-k
    BigFloat partial(0L, wp);
    BigFloat term(wp);
    for (long n = 0; n < cutoff; ++n) {
        mpfr_set_si(term.get(), n * q + a, MPFR_RNDN);
        mpfr_pow_si(term.get(), term.get(), -k, MPFR_RNDN);
        partial += term;
    }
    Integer q_pow;
    mpz_ui_pow_ui(q_pow.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
    partial *= BigFloat(q_pow, wp);

    const BigFloat y(make_rational(Integer(cutoff) * q + a, q), wp);
    BigFloat y_pow(wp);  // y^-(k-1)
    mpfr_pow_si(y_pow.get(), y.get(), -(k - 1), MPFR_RNDN);

    BigFloat result = partial;
    result += scale(y_pow, make_rational(1, k - 1));
    y_pow /= y;  // y^-k
    result += scale(y_pow, Rational(1, 2));

    // B_2j/(2j)! * k(k+1)...(k+2j-2) * y^-(k+2j-1), built incrementally.
    const BigFloat y_sq_inv = BigFloat(1L, wp) / (y * y);
    BigFloat power = y_pow / y;  // y^-(k+1)
    Integer rising = k;          // k
    Integer factorial = 2;       // 2!
    for (long j = 1; j <= plan.corrections; ++j) {
        if (j > 1) {
            rising *= (k + 2 * j - 3) * Integer(k + 2 * j - 2);
            factorial *= (2 * j - 1) * Integer(2 * j);
            power *= y_sq_inv;
        }
        const Rational& b = plan.bernoulli[2 * j];
        result += scale(power, make_rational(b.get_num() * rising, b.get_den() * factorial));
    }
    return result;
}

}  // namespace

HalfSystem half_system(long q) {
    if (q <= 2) {
        throw UsageError("half-system needs q > 2, got q = " + std::to_string(q));
    }
    HalfSystem out{q, {}};
    for (long a = 1; 2 * a < q; ++a) {
        if (std::gcd(a, q) == 1) {
            out.representatives.push_back(a);
        }
    }
    return out;
}

BigFloat hurwitz_zeta(long k, long a, long q, long precision_bits) {
    require_order(k);
    require_precision(precision_bits);
    if (q < 1 || a < 1 || a > q) {
        throw UsageError("hurwitz_zeta: need q >= 1 and 1 <= a <= q (x = a/q in (0, 1])");
    }
    const long g = std::gcd(a, q);
    a /= g;
    q /= g;
    const auto plan = make_plan(k, precision_bits, static_cast<double>(a) / static_cast<double>(q));
    return evaluate(plan, a, q);
}

BigFloat riemann_zeta(long k, long precision_bits) { return hurwitz_zeta(k, 1, 1, precision_bits); }

BasisValues basis_values(long k, long q, long precision_bits) {
    require_order(k);
    require_precision(precision_bits);
    BasisValues out;
    out.k = k;
    out.half_system = half_system(q);
    const auto plan = make_plan(k, precision_bits, 1.0 / static_cast<double>(q));
    for (long a = 1; a < q; ++a) {
        if (std::gcd(a, q) == 1) {
            out.raw.emplace(a, evaluate(plan, a, q));
        }
    }
    for (long a : out.half_system.representatives) {
        const BigFloat& lo = out.raw.at(a);
        const BigFloat& hi = out.raw.at(q - a);
        out.plus.emplace(a, lo + hi);
        out.minus.emplace(a, lo - hi);
    }
    return out;
}

}  // namespace cmspace
