#pragma once

#include "cmspace/numerics.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cmspace {

/// Dense integer polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
struct IntegerPolynomial {
    std::vector<Integer> coefficients;

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coefficients.size()) - 1; }
    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
};

long euler_phi(long n);
/// Distinct primes dividing n, ascending.
std::vector<long> prime_divisors(long n);

/// The q-th cyclotomic polynomial, built from the Mobius product
/// prod_{d|q} (x^d - 1)^mu(q/d).
IntegerPolynomial cyclotomic_polynomial(long q);

struct ComplexValue {
    BigFloat real;
    BigFloat imag;
};

/// Exact element of Q(zeta_q) in the power basis 1, zeta, ..., zeta^(phi(q)-1),
/// always reduced modulo Phi_q so that equal field elements compare equal.
class CyclotomicElement {
public:
    /// Zero of Q(zeta_q).
    explicit CyclotomicElement(long conductor);
    /// sum_j coeffs[j] zeta^j for any number of coefficients, reduced mod Phi_q.
    CyclotomicElement(long conductor, std::vector<Rational> coeffs);

    static CyclotomicElement rational(long conductor, const Rational& value);
    /// zeta_q^exponent; negative exponents allowed.
    static CyclotomicElement root_power(long conductor, long exponent);

    /// Parses the canonical text form `q; c_0, c_1, ...` (rationals as num/den
    /// or plain integers). More than phi(q) coefficients are reduced mod Phi_q.
    static CyclotomicElement parse(std::string_view text);
    /// Canonical text form `q; c_0, ..., c_{phi(q)-1}`, every entry num/den.
    std::string to_text() const;

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const IntegerPolynomial& modulus() const { return *modulus_; }

    bool is_zero() const;
    /// True iff every coefficient past index 0 vanishes.
    bool is_rational() const;

    CyclotomicElement operator-() const;
    CyclotomicElement& operator+=(const CyclotomicElement& rhs);
    CyclotomicElement& operator-=(const CyclotomicElement& rhs);
    CyclotomicElement& operator*=(const CyclotomicElement& rhs);
    CyclotomicElement& operator*=(const Rational& rhs);

    friend CyclotomicElement operator+(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs += rhs; }
    friend CyclotomicElement operator-(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs -= rhs; }
    friend CyclotomicElement operator*(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs *= rhs; }
    friend CyclotomicElement operator*(CyclotomicElement lhs, const Rational& rhs) { return lhs *= rhs; }

    /// Multiplicative inverse by the extended Euclidean algorithm over Q[x].
    /// Throws DomainError on zero.
    CyclotomicElement inverse() const;

    friend bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs);

private:
    void require_same_field(const CyclotomicElement& other) const;

    long conductor_;
    std::shared_ptr<const IntegerPolynomial> modulus_;
    std::vector<Rational> coeffs_;
};

CyclotomicElement operator/(const CyclotomicElement& lhs, const CyclotomicElement& rhs);

/// The automorphism sigma_t: zeta_q -> zeta_q^t. Requires gcd(t, q) = 1.
CyclotomicElement galois_apply(const CyclotomicElement& x, long t);

/// x in Q(zeta_d), decided by invariance under every sigma_t with
/// t = 1 (mod d). Requires d | q.
bool is_in_subfield(const CyclotomicElement& x, long d);

/// i*cot(pi a/q) = (1 + zeta_q^a) / (1 - zeta_q^a).
/// Requires q >= 2, 1 <= a < q, gcd(a, q) = 1.
CyclotomicElement i_cot_element(long a, long q);

/// Complex value of x under zeta_q -> exp(2 pi i / q); each component within
/// 2^(2 - precision_bits).
ComplexValue embed_numeric(const CyclotomicElement& x, long precision_bits);

}  // namespace cmspace
