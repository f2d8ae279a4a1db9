#include "cmspace/relation.hpp"

#include "cmspace/errors.hpp"
#include "cmspace/hurwitz.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cmspace {

namespace {

long ceil_log2(const Integer& n) {
    // n >= 1
    const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(bits - 1));
    return power == n ? bits - 1 : bits;
}

long max_exponent(std::span<const BigFloat> values) {
    long e = 0;
    for (const auto& v : values) {
        e = std::max(e, v.magnitude_exponent());
    }
    return e;
}

std::string sha256_hex(const std::string& text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

int decimal_digits(long precision_bits) {
    return std::max(10, static_cast<int>(std::floor((precision_bits - kGuardBits) * std::log10(2.0))));
}

RelationReport empty_report(std::span<const BigFloat> values, long precision_bits, const Integer& bound) {
    RelationReport report;
    const int digits = decimal_digits(precision_bits);
    std::string joined;
    for (const auto& v : values) {
        report.inputs.push_back(v.to_decimal(digits));
        joined += report.inputs.back();
        joined += '\n';
    }
    report.inputs_digest = "sha256:" + sha256_hex(joined);
    report.coefficient_bound = bound;
    report.precision_bits = precision_bits;
    report.threshold_log2 = max_exponent(values) + ceil_log2(Integer(static_cast<long>(values.size())) * bound) +
                            kGuardBits - precision_bits;
    report.empirical_independent_count = static_cast<long>(values.size());
    return report;
}

// Primitive, first nonzero entry positive.
void normalize(IntegerVector& c) {
    Integer g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) {
        return;
    }
    const auto first = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0) {
        g = -g;
    }
    for (auto& x : c) {
        x /= g;
    }
}

bool residual_within(const std::optional<long>& residual, long threshold_log2) {
    return !residual || *residual <= threshold_log2;
}

}  // namespace

std::optional<long> relation_residual_log2(std::span<const BigFloat> values, const IntegerVector& coeffs) {
    if (values.size() != coeffs.size()) {
        throw UsageError("relation length does not match the number of values");
    }
    long widest = kMinPrecisionBits;
    long coeff_bits = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        widest = std::max(widest, values[i].precision());
        coeff_bits = std::max(coeff_bits, static_cast<long>(mpz_sizeinbase(coeffs[i].get_mpz_t(), 2)));
    }
    const long wp = widest + coeff_bits + static_cast<long>(std::ceil(std::log2(values.size() + 1.0))) + 8;
    BigFloat sum(0L, wp);
    BigFloat product(wp);
    for (std::size_t i = 0; i < values.size(); ++i) {
        mpfr_mul_z(product.get(), values[i].get(), coeffs[i].get_mpz_t(), MPFR_RNDN);
        sum += product;
    }
    return sum.log2_abs_ceil();
}

long required_relation_precision(std::size_t n, const Integer& coefficient_bound, long max_exp) {
    const long nn = static_cast<long>(n);
    return nn * ceil_log2(coefficient_bound) + nn * nn / 2 + 32 + 64 + std::max(0L, max_exp);
}

RelationReport find_integer_relation(std::span<const BigFloat> values, long precision_bits,
                                     const Integer& coefficient_bound) {
    require_precision(precision_bits);
    if (values.size() < 2) {
        throw UsageError("find_integer_relation needs at least 2 values");
    }
    if (coefficient_bound < 1) {
        throw UsageError("coefficient bound must be positive");
    }
    const long top = max_exponent(values);
    const long needed = required_relation_precision(values.size(), coefficient_bound, top);
    if (precision_bits < needed) {
        throw UsageError("precision too low for coefficient bound " + coefficient_bound.get_str() + " with " +
                         std::to_string(values.size()) + " values: need at least " + std::to_string(needed) +
                         " bits, got " + std::to_string(precision_bits));
    }

    RelationReport report = empty_report(values, precision_bits, coefficient_bound);
    const long scale_bits = precision_bits - 64 - top;
    const std::size_t n = values.size();

    std::vector<Integer> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigFloat shifted(values[i]);
        mpfr_mul_2si(shifted.get(), values[i].get(), scale_bits, MPFR_RNDN);
        mpfr_get_z(scaled[i].get_mpz_t(), shifted.get(), MPFR_RNDN);
    }

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) {
        active[i] = i;
    }

    while (active.size() >= 2) {
        const std::size_t m = active.size();
        std::vector<IntegerVector> rows(m, IntegerVector(m + 1));
        for (std::size_t r = 0; r < m; ++r) {
            rows[r][r] = 1;
            rows[r][m] = scaled[active[r]];
        }
        const LatticeBasis reduced = lll_reduce(LatticeBasis(std::move(rows)));

        std::optional<Relation> found;
        for (const auto& row : reduced.rows()) {
            IntegerVector c(n);
            bool nonzero = false;
            bool bounded = true;
            for (std::size_t r = 0; r < m; ++r) {
                c[active[r]] = row[r];
                nonzero = nonzero || row[r] != 0;
                bounded = bounded && abs(row[r]) <= coefficient_bound;
            }
            if (!nonzero || !bounded) {
                continue;
            }
            normalize(c);
            auto residual = relation_residual_log2(values, c);
            if (residual_within(residual, report.threshold_log2)) {
                found = Relation{std::move(c), residual};
                break;
            }
        }
        if (!found) {
            break;
        }
        // Drop the last participating value; it is now expressible by the rest.
        const auto last = std::find_if(active.rbegin(), active.rend(),
                                       [&](std::size_t i) { return found->coeffs[i] != 0; });
        active.erase(std::next(last).base());
        report.relations.push_back(std::move(*found));
    }

    if (active.size() == 1) {
        IntegerVector c(n);
        c[active.front()] = 1;
        auto residual = relation_residual_log2(values, c);
        if (residual_within(residual, report.threshold_log2)) {
            report.relations.push_back(Relation{std::move(c), residual});
        }
    }
    report.empirical_independent_count = static_cast<long>(n - report.relations.size());
    return report;
}

RelationReport probe_dimension(long k, long q, ProbeMode mode, long precision_bits, const Integer& coefficient_bound) {
    const BasisValues basis = basis_values(k, q, precision_bits);
    const auto& source = mode == ProbeMode::full ? basis.raw : (mode == ProbeMode::plus ? basis.plus : basis.minus);
    std::vector<BigFloat> values;
    for (const auto& [a, v] : source) {
        values.push_back(v);
    }
    if (values.size() >= 2) {
        return find_integer_relation(values, precision_bits, coefficient_bound);
    }
    // A single spanning value is dependent only if it vanishes.
    RelationReport report = empty_report(values, precision_bits, coefficient_bound);
    const IntegerVector c{Integer(1)};
    auto residual = relation_residual_log2(values, c);
    if (residual_within(residual, report.threshold_log2)) {
        report.relations.push_back(Relation{c, residual});
    }
    report.empirical_independent_count = static_cast<long>(values.size() - report.relations.size());
    return report;
}

ProbeMode parse_probe_mode(const std::string& text) {
    if (text == "full") {
        return ProbeMode::full;
    }
    if (text == "plus") {
        return ProbeMode::plus;
    }
    if (text == "minus") {
        return ProbeMode::minus;
    }
    throw UsageError("mode must be one of full, plus, minus; got '" + text + "'");
}

std::string to_string(ProbeMode mode) {
    switch (mode) {
        case ProbeMode::full:
            return "full";
        case ProbeMode::plus:
            return "plus";
        case ProbeMode::minus:
            return "minus";
    }
    return "full";
}

}  // namespace cmspace
