#include "cmspace/cot_expansion.hpp"

#include "cmspace/errors.hpp"

#include <cmath>
#include <numeric>

namespace cmspace {

namespace {

void require_coprime_point(long a, long q, const char* what) {
    if (q < 2 || a < 1 || a >= q) {
        throw UsageError(std::string(what) + ": need q >= 2 and 1 <= a < q");
    }
    if (std::gcd(a, q) != 1) {
        throw UsageError(std::string(what) + ": gcd(a, q) must be 1");
    }
}

long bits_for_count(std::size_t n) {
    return static_cast<long>(std::ceil(std::log2(static_cast<double>(n) + 1.0))) + 1;
}

}  // namespace

CotDerivativeExpansion differentiate(const CotDerivativeExpansion& expansion) {
    CotDerivativeExpansion next;
    next.order_k = expansion.order_k + 1;
    for (const auto& [l, c] : expansion.coefficients) {
        const long m = expansion.order_k - 2 * l;
        if (l > 0) {
            next.coefficients[l] -= 2 * l * c;
        }
        if (m > 0) {
            next.coefficients[l + 1] -= m * c;
        }
    }
    std::erase_if(next.coefficients, [](const auto& entry) { return entry.second == 0; });
    return next;
}

CotDerivativeExpansion expand(long k) {
    if (k < 1) {
        throw UsageError("expand: k must be >= 1, got " + std::to_string(k));
    }
    CotDerivativeExpansion table;
    table.coefficients[0] = 1;
    while (table.order_k < k) {
        table = differentiate(table);
    }
    return table;
}

BigFloat evaluate_numeric(const CotDerivativeExpansion& expansion, long a, long q, long precision_bits) {
    require_precision(precision_bits);
    require_coprime_point(a, q, "evaluate_numeric");
    const long k = expansion.order_k;

    // Size the working precision from the largest term so the absolute error
    // survives any cancellation between terms of opposite sign.
    const TrigValues rough = trig_at_rational(a, q, 64);
    long largest = 0;
    for (const auto& [l, c] : expansion.coefficients) {
        const long m = k - 2 * l;
        BigFloat term(c, 64);
        term *= pow(rough.csc_sq, static_cast<unsigned long>(l));
        if (m > 0) {
            term *= pow(abs(rough.cot), static_cast<unsigned long>(m));
        }
        largest = std::max(largest, term.magnitude_exponent());
    }
    const long pi_bits = 2 * k;  // pi^k < 4^k
    const long wp = precision_bits + kGuardBits + largest + pi_bits + bits_for_count(expansion.coefficients.size()) +
                    bits_for_count(static_cast<std::size_t>(k));

    const TrigValues trig = trig_at_rational(a, q, wp);
    BigFloat sum(0L, wp);
    for (const auto& [l, c] : expansion.coefficients) {
        const long m = k - 2 * l;
        BigFloat term(c, wp);
        term *= pow(trig.csc_sq, static_cast<unsigned long>(l));
        if (m > 0) {
            term *= pow(trig.cot, static_cast<unsigned long>(m));
        }
        sum += term;
    }
    sum *= pow(pi(wp), static_cast<unsigned long>(k));
    return sum;
}

CyclotomicElement normalized_cyclotomic(long k, long a, long q) {
    if (k < 1) {
        throw UsageError("normalized_cyclotomic: k must be >= 1");
    }
    require_coprime_point(a, q, "normalized_cyclotomic");
    const CotDerivativeExpansion table = expand(k);
    const CyclotomicElement u = i_cot_element(a, q);
    const CyclotomicElement one = CyclotomicElement::rational(q, Rational(1));
    const CyclotomicElement csc_sq = one - u * u;

    // Powers of u and of csc^2 = 1 - u^2 up to what the table needs.
    std::vector<CyclotomicElement> u_pow{one};
    for (long m = 1; m <= k; ++m) {
        u_pow.push_back(u_pow.back() * u);
    }
    std::vector<CyclotomicElement> csc_pow{one};
    for (long l = 1; 2 * l <= k; ++l) {
        csc_pow.push_back(csc_pow.back() * csc_sq);
    }

    CyclotomicElement w(q);
    for (const auto& [l, c] : table.coefficients) {
        Rational factor(c);
        if (l % 2 != 0) {
            factor = -factor;
        }
        w += csc_pow[l] * u_pow[k - 2 * l] * factor;
    }
    return w;
}

}  // namespace cmspace
