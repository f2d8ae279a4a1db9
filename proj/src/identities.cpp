#include "cmspace/identities.hpp"

#include "cmspace/cot_expansion.hpp"
#include "cmspace/errors.hpp"
#include "cmspace/hurwitz.hpp"

#include <numeric>

namespace cmspace {

namespace {

std::string frac(long a, long q) { return std::to_string(a) + "/" + std::to_string(q); }

Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void require_odd_order(long k, const char* what) {
    if (k < 3 || k % 2 == 0) {
        throw UsageError(std::string(what) + ": k must be odd and >= 3, got " + std::to_string(k));
    }
}

bool contains_relation(const RelationReport& report, const IntegerVector& expected) {
    for (const auto& r : report.relations) {
        if (r.coeffs == expected) {
            return true;
        }
    }
    return false;
}

std::string residual_text(const std::optional<long>& residual) {
    return residual ? "2^" + std::to_string(*residual) : "exactly 0";
}

}  // namespace

long default_threshold_log2(long precision_bits) { return 20 + kGuardBits - precision_bits; }

ResidualReport make_residual_report(std::string description, BigFloat lhs, BigFloat rhs, long precision_bits,
                                    long threshold_log2) {
    ResidualReport report{std::move(description), std::move(lhs), std::move(rhs), std::nullopt, threshold_log2,
                          precision_bits, false};
    const long wp = std::max(report.lhs.precision(), report.rhs.precision()) + 2;
    BigFloat diff = report.lhs.with_precision(wp);
    diff -= report.rhs;
    report.residual_log2 = diff.log2_abs_ceil();
    report.pass = !report.residual_log2 || *report.residual_log2 <= threshold_log2;
    return report;
}

ResidualReport verify_reflection_identity(long k, long a, long q, long precision_bits,
                                          std::optional<long> threshold_log2) {
    if (k < 2) {
        throw UsageError("reflection identity needs k >= 2, got k = " + std::to_string(k));
    }
    if (q <= 2 || a < 1 || a >= q || std::gcd(a, q) != 1) {
        throw UsageError("reflection identity needs q > 2, 1 <= a < q and gcd(a, q) = 1");
    }
    require_precision(precision_bits);

    BigFloat lhs = hurwitz_zeta(k, a, q, precision_bits);
    const BigFloat mirror = hurwitz_zeta(k, q - a, q, precision_bits);
    if (k % 2 == 0) {
        lhs += mirror;
    } else {
        lhs -= mirror;
    }

    Rational factor = make_rational(1, factorial(k - 1));
    if (k % 2 == 0) {
        factor = -factor;
    }
    BigFloat rhs = scale(evaluate_numeric(expand(k), a, q, precision_bits), factor);

    const std::string sign = k % 2 == 0 ? " + " : " - ";
    std::string description = "zeta(" + std::to_string(k) + "," + frac(a, q) + ")" + sign + "zeta(" +
                              std::to_string(k) + "," + frac(q - a, q) + ") vs " + (k % 2 == 0 ? "-" : "") +
                              "D^" + std::to_string(k - 1) + "(pi cot pi z)/" + std::to_string(k - 1) +
                              "! at z=" + frac(a, q);
    return make_residual_report(std::move(description), std::move(lhs), std::move(rhs), precision_bits,
                                threshold_log2.value_or(default_threshold_log2(precision_bits)));
}

ResidualReport verify_euler_factor_identity(long k, long q, long precision_bits, std::optional<long> threshold_log2) {
    if (k < 2 || q < 2) {
        throw UsageError("Euler-factor identity needs k >= 2 and q >= 2");
    }
    require_precision(precision_bits);

    Rational euler_factor(1);
    for (long p : prime_divisors(q)) {
        Integer p_pow;
        mpz_ui_pow_ui(p_pow.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        euler_factor *= make_rational(p_pow - 1, p_pow);
    }
    BigFloat lhs = scale(riemann_zeta(k, precision_bits), euler_factor);

    BigFloat sum(0L, precision_bits + kGuardBits);
    for (long a = 1; a < q; ++a) {
        if (std::gcd(a, q) == 1) {
            sum += hurwitz_zeta(k, a, q, precision_bits + kGuardBits);
        }
    }
    Integer q_pow;
    mpz_ui_pow_ui(q_pow.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
    BigFloat rhs = scale(sum, make_rational(1, q_pow));

    std::string description = "zeta(" + std::to_string(k) + ")*prod_{p|" + std::to_string(q) + "}(1-p^-" +
                              std::to_string(k) + ") vs " + std::to_string(q) + "^-" + std::to_string(k) +
                              "*sum_{(a," + std::to_string(q) + ")=1} zeta(" + std::to_string(k) + ",a/" +
                              std::to_string(q) + ")";
    return make_residual_report(std::move(description), std::move(lhs), std::move(rhs), precision_bits,
                                threshold_log2.value_or(default_threshold_log2(precision_bits)));
}

CyclotomicElement exact_ratio(long k, long a, long q) {
    require_odd_order(k, "exact_ratio");
    if (q <= 2 || a < 1 || 2 * a >= q || std::gcd(a, q) != 1) {
        throw UsageError("exact_ratio needs q > 2, 1 <= a < q/2 and gcd(a, q) = 1");
    }
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    return normalized_cyclotomic(k, a, q) * make_rational(-1, factorial(k - 1) * two_k);
}

BigFloat numeric_ratio_imag(long k, long a, long q, long precision_bits) {
    require_odd_order(k, "numeric_ratio_imag");
    const long wp = precision_bits + kGuardBits;
    BigFloat minus = hurwitz_zeta(k, a, q, wp) - hurwitz_zeta(k, q - a, q, wp);
    const BigFloat two_pi_k = pow(scale(pi(wp), Rational(2)), static_cast<unsigned long>(k));
    // 1 / i^k = -i (-1)^((k-1)/2) for odd k.
    BigFloat imag = minus / two_pi_k;
    if (((k - 1) / 2) % 2 == 0) {
        imag = -imag;
    }
    return imag;
}

ZetaRepresentationReport zeta_representation_probe(long k, long q, long precision_bits,
                                                   const Integer& coefficient_bound) {
    require_odd_order(k, "zeta_representation_probe");
    const BasisValues basis = basis_values(k, q, precision_bits);
    const BigFloat zeta_k = riemann_zeta(k, precision_bits);

    ZetaRepresentationReport out;
    out.k = k;
    out.q = q;

    std::vector<BigFloat> values{zeta_k};
    for (const auto& [a, v] : basis.minus) {
        values.push_back(v);
    }
    out.search = find_integer_relation(values, precision_bits, coefficient_bound);

    // Planted control: weights 2, -3, 5, -7, ... on the minus values.
    static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    BigFloat planted(0L, values.front().precision());
    IntegerVector expected{Integer(1)};
    std::size_t j = 0;
    for (const auto& [a, v] : basis.minus) {
        const long weight = (j % 2 == 0 ? 1 : -1) * kPrimes[j % std::size(kPrimes)];
        out.planted_weights.emplace_back(weight);
        expected.emplace_back(-weight);
        planted += scale(v, Rational(weight));
        ++j;
    }
    values.front() = planted;
    out.planted_control = find_integer_relation(values, precision_bits, coefficient_bound);
    out.planted_recovered = contains_relation(out.planted_control, expected);

    // Euler-factor control: zeta(k) prod(1 - p^-k) q^k equals the raw sum.
    Rational factor(1);
    for (long p : prime_divisors(q)) {
        Integer p_pow;
        mpz_ui_pow_ui(p_pow.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        factor *= make_rational(p_pow - 1, p_pow);
    }
    Integer q_pow;
    mpz_ui_pow_ui(q_pow.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k));
    factor *= q_pow;
    std::vector<BigFloat> euler_values{scale(zeta_k, factor)};
    IntegerVector all_ones{Integer(1)};
    for (const auto& [a, v] : basis.raw) {
        euler_values.push_back(v);
        all_ones.emplace_back(-1);
    }
    out.euler_control = find_integer_relation(euler_values, precision_bits, coefficient_bound);
    out.euler_recovered = contains_relation(out.euler_control, all_ones);

    if (out.search.relations.empty()) {
        out.verdict = "no relation with coefficients <= " + coefficient_bound.get_str() + " at " +
                      std::to_string(precision_bits) +
                      " bits: evidence that zeta(k) is not a small rational combination of the minus values, not a "
                      "proof";
    } else {
        out.verdict = "relation found (verified to residual " + residual_text(out.search.relations.front().residual_log2) +
                      "); numerical evidence only";
    }
    return out;
}

}  // namespace cmspace
