#include "cmspace/cyclotomic.hpp"
#include "cmspace/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace cmspace;

namespace {

std::vector<Rational> q_coeffs(std::initializer_list<Rational> list) { return {list}; }

// Oracle for Phi_q: (x^q - 1) divided by Phi_d for all proper divisors d,
// recursively, with schoolbook long division.
std::vector<Integer> phi_by_division(long q) {
    std::vector<Integer> num(static_cast<std::size_t>(q) + 1);
    num[0] = -1;
    num[q] = 1;
    for (long d = 1; d < q; ++d) {
        if (q % d != 0) {
            continue;
        }
        const auto den = phi_by_division(d);
        const std::size_t dn = den.size() - 1;
        std::vector<Integer> quotient(num.size() - dn);
        for (std::size_t i = num.size(); i-- > dn;) {
            quotient[i - dn] = num[i];
            const Integer c = num[i];
            for (std::size_t j = 0; j <= dn; ++j) {
                num[i - dn + j] -= c * den[j];
            }
        }
        for (std::size_t i = 0; i < dn; ++i) {
            REQUIRE(num[i] == 0);
        }
        num = quotient;
    }
    return num;
}

CyclotomicElement random_element(long q, std::mt19937_64& rng, bool nonzero = true) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (;;) {
        std::vector<Rational> c;
        for (long j = 0; j < euler_phi(q); ++j) {
            c.push_back(make_rational(num(rng), den(rng)));
        }
        CyclotomicElement x(q, c);
        if (!nonzero || !x.is_zero()) {
            return x;
        }
    }
}

bool close(const BigFloat& x, const BigFloat& y, long bound_log2) {
    const auto e = (x - y).log2_abs_ceil();
    return !e || *e <= bound_log2;
}

}  // namespace

TEST_CASE("cyclotomic polynomial checkpoints") {
    CHECK(cyclotomic_polynomial(1).coefficients == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4).coefficients == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coefficients == std::vector<Integer>{1, -1, 1});
}

TEST_CASE("cyclotomic polynomial matches the division oracle for q <= 60") {
    for (long q = 1; q <= 60; ++q) {
        CAPTURE(q);
        const auto phi = cyclotomic_polynomial(q);
        CHECK(phi.coefficients == phi_by_division(q));
        CHECK(phi.degree() == euler_phi(q));
    }
    // 105 is the first q with a coefficient of absolute value 2.
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(std::any_of(p105.coefficients.begin(), p105.coefficients.end(), [](const Integer& c) { return c == -2; }));
    CHECK(p105.coefficients == phi_by_division(105));
}

TEST_CASE("field operation checkpoints") {
    const auto z4 = CyclotomicElement::root_power(4, 1);
    CHECK((z4 * z4).coeffs() == q_coeffs({-1, 0}));

    const auto z5 = CyclotomicElement::root_power(5, 1);
    CHECK(z5.inverse().coeffs() == q_coeffs({-1, -1, -1, -1}));
    CHECK(z5.inverse() == CyclotomicElement::root_power(5, 4));

    const auto one3 = CyclotomicElement::rational(3, 1);
    const auto z3 = CyclotomicElement::root_power(3, 1);
    CHECK((one3 - z3).inverse().coeffs() == q_coeffs({Rational(2, 3), Rational(1, 3)}));
}

TEST_CASE("field operation errors") {
    const auto x = CyclotomicElement::root_power(5, 1);
    const auto y = CyclotomicElement::root_power(7, 1);
    CHECK_THROWS_AS(x + y, UsageError);
    CHECK_THROWS_AS(x * y, UsageError);
    CHECK_THROWS_AS(CyclotomicElement(5).inverse(), DomainError);
    CHECK_THROWS_AS(CyclotomicElement(0), UsageError);
}

TEST_CASE("degenerate conductors 1 and 2 are Q") {
    CHECK(CyclotomicElement(1).coeffs().size() == 1);
    CHECK(CyclotomicElement(2).coeffs().size() == 1);
    CHECK(CyclotomicElement::root_power(2, 1).coeffs() == q_coeffs({-1}));
    CHECK(CyclotomicElement::root_power(1, 5).coeffs() == q_coeffs({1}));
}

TEST_CASE("inversion round-trips on random nonzero elements") {
    std::mt19937_64 rng(7);
    for (long q : {3L, 5L, 7L, 8L, 9L, 12L, 15L, 16L, 20L, 21L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_element(q, rng);
            CHECK(x * x.inverse() == CyclotomicElement::rational(q, 1));
        }
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937_64 rng(11);
    const long bits = 200;
    for (long q : {3L, 4L, 5L, 7L, 12L, 15L}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_element(q, rng, false);
            const auto y = random_element(q, rng, false);
            const auto ex = embed_numeric(x, bits);
            const auto ey = embed_numeric(y, bits);
            const auto exy = embed_numeric(x * y, bits);
            CHECK(close(exy.real, ex.real * ey.real - ex.imag * ey.imag, 20 - bits));
            CHECK(close(exy.imag, ex.real * ey.imag + ex.imag * ey.real, 20 - bits));
        }
    }
}

TEST_CASE("i_cot_element checkpoints") {
    CHECK(i_cot_element(1, 4).coeffs() == q_coeffs({0, 1}));
    CHECK(i_cot_element(1, 2).is_zero());
    CHECK(i_cot_element(1, 3).coeffs() == q_coeffs({Rational(1, 3), Rational(2, 3)}));
    CHECK_THROWS_AS(i_cot_element(2, 4), UsageError);
    CHECK_THROWS_AS(i_cot_element(0, 4), UsageError);
    CHECK_THROWS_AS(i_cot_element(1, 1), UsageError);
}

TEST_CASE("i_cot_element embeds to i*cot(pi a/q)") {
    const long bits = 200;
    for (long q = 2; q <= 24; ++q) {
        for (long a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) {
                continue;
            }
            CAPTURE(a);
            CAPTURE(q);
            const auto e = embed_numeric(i_cot_element(a, q), bits);
            CHECK(close(e.real, BigFloat(bits), 10 - bits));
            CHECK(close(e.imag, trig_at_rational(a, q, bits).cot, 10 - bits));
        }
    }
}

TEST_CASE("galois action checkpoints") {
    std::mt19937_64 rng(3);
    const auto x = random_element(9, rng);
    CHECK(galois_apply(x, 1) == x);
    CHECK(galois_apply(CyclotomicElement::root_power(4, 1), 3) == -CyclotomicElement::root_power(4, 1));
    CHECK(galois_apply(i_cot_element(1, 5), 2) == i_cot_element(2, 5));
    CHECK_THROWS_AS(galois_apply(x, 3), UsageError);
}

TEST_CASE("galois orbit of i*cot(pi/q) is the set of all i*cot(pi a/q)") {
    for (long q : {3L, 5L, 7L, 8L, 9L, 12L, 13L}) {
        std::set<std::string> orbit, expected;
        for (long t = 1; t < q; ++t) {
            if (std::gcd(t, q) == 1) {
                orbit.insert(galois_apply(i_cot_element(1, q), t).to_text());
                expected.insert(i_cot_element(t, q).to_text());
            }
        }
        CHECK(orbit == expected);
    }
}

TEST_CASE("conjugation-fixed iff real embedding") {
    std::mt19937_64 rng(5);
    const long bits = 128;
    for (long q : {5L, 7L, 8L, 12L}) {
        for (int trial = 0; trial < 6; ++trial) {
            auto x = random_element(q, rng);
            if (trial % 2 == 0) {
                x = x + galois_apply(x, q - 1);  // force real
            }
            const bool fixed = galois_apply(x, q - 1) == x;
            const auto e = embed_numeric(x, bits);
            const auto imag_log = e.imag.log2_abs_ceil();
            const bool real = !imag_log || *imag_log < 10 - bits;
            CHECK(fixed == real);
        }
    }
}

TEST_CASE("subfield checkpoints") {
    CHECK(is_in_subfield(CyclotomicElement::rational(7, Rational(3, 5)), 1));
    const auto z5 = CyclotomicElement::root_power(5, 1);
    const auto real = z5 + z5.inverse();
    CHECK_FALSE(is_in_subfield(real, 1));
    // x^2 + x - 1 = 0
    CHECK((real * real + real - CyclotomicElement::rational(5, 1)).is_zero());
    CHECK(is_in_subfield(CyclotomicElement::root_power(12, 3), 4));
    CHECK_THROWS_AS(is_in_subfield(z5, 3), UsageError);
}

TEST_CASE("subfield test with d = 1 agrees with the syntactic rationality test") {
    std::mt19937_64 rng(13);
    for (long q : {3L, 5L, 8L, 12L, 15L}) {
        for (int trial = 0; trial < 6; ++trial) {
            auto x = random_element(q, rng);
            if (trial % 3 == 0) {
                // Galois trace lands in Q.
                CyclotomicElement trace(q);
                for (long t = 1; t < q; ++t) {
                    if (std::gcd(t, q) == 1) {
                        trace += galois_apply(x, t);
                    }
                }
                x = trace;
            }
            CHECK(is_in_subfield(x, 1) == x.is_rational());
        }
    }
}

TEST_CASE("canonical text form") {
    const auto x = CyclotomicElement::parse("12; 1/2, -3, 0, 4/6");
    CHECK(x.to_text() == "12; 1/2, -3/1, 0/1, 2/3");
    CHECK(CyclotomicElement::parse(x.to_text()) == x);
    // More coefficients than phi(q) are reduced: zeta_4^2 = -1.
    CHECK(CyclotomicElement::parse("4; 0, 0, 1") == CyclotomicElement::rational(4, -1));
    CHECK_THROWS_AS(CyclotomicElement::parse("4 0, 1"), UsageError);
    CHECK_THROWS_AS(CyclotomicElement::parse("4; 1/0"), UsageError);
    CHECK_THROWS_AS(CyclotomicElement::parse("x; 1"), UsageError);
    CHECK_THROWS_AS(CyclotomicElement::parse("4; a"), UsageError);
}
