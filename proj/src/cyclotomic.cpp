#include "cmspace/cyclotomic.hpp"

#include "cmspace/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cmspace {

long euler_phi(long n) {
    if (n < 1) {
        throw UsageError("euler_phi: n must be positive");
    }
    long result = n;
    for (long p : prime_divisors(n)) {
        result -= result / p;
    }
    return result;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> primes;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        primes.push_back(n);
    }
    return primes;
}

namespace {

using RationalPoly = std::vector<Rational>;

int mobius(long n) {
    int sign = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    return n > 1 ? -sign : sign;
}

void trim(std::vector<Integer>& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

void trim(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact quotient by a monic divisor.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quotient(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        quotient[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] -= c * den[j];
        }
    }
    return quotient;
}

// In-place reduction modulo a monic integer polynomial; result has exactly
// deg(modulus) entries.
void reduce_mod(RationalPoly& p, const IntegerPolynomial& modulus) {
    const auto& m = modulus.coefficients;
    const std::size_t n = m.size() - 1;
    for (std::size_t i = p.size(); i-- > n;) {
        if (p[i] == 0) {
            continue;
        }
        const Rational c = p[i];
        for (std::size_t j = 0; j <= n; ++j) {
            p[i - n + j] -= c * m[j];
        }
    }
    p.resize(n, Rational(0));
}

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    RationalPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

RationalPoly subtract(RationalPoly a, const RationalPoly& b) {
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Euclidean division; divisor must be nonzero and trimmed.
std::pair<RationalPoly, RationalPoly> divmod(RationalPoly num, const RationalPoly& den) {
    trim(num);
    if (num.size() < den.size()) {
        return {{}, num};
    }
    const std::size_t dn = den.size() - 1;
    RationalPoly quotient(num.size() - dn, Rational(0));
    for (std::size_t i = num.size(); i-- > dn;) {
        if (num[i] == 0) {
            continue;
        }
        const Rational c = num[i] / den[dn];
        quotient[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] -= c * den[j];
        }
    }
    num.resize(dn);
    trim(num);
    trim(quotient);
    return {quotient, num};
}

Rational parse_rational(std::string token) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    Rational r;
    if (token.empty() || r.set_str(token, 10) != 0) {
        throw UsageError("not a rational number: '" + token + "'");
    }
    if (r.get_den() == 0) {
        throw UsageError("zero denominator in '" + token + "'");
    }
    r.canonicalize();
    return r;
}

long gcd_check(long t, long q, const char* what) {
    if (std::gcd(t, q) != 1) {
        throw UsageError(std::string(what) + ": gcd(" + std::to_string(t) + ", " + std::to_string(q) +
                         ") != 1");
    }
    return t;
}

}  // namespace

IntegerPolynomial cyclotomic_polynomial(long q) {
    if (q < 1) {
        throw UsageError("cyclotomic_polynomial: q must be positive");
    }
    std::vector<Integer> numerator{1};
    std::vector<std::vector<Integer>> denominators;
    for (long d = 1; d <= q; ++d) {
        if (q % d != 0) {
            continue;
        }
        const int mu = mobius(q / d);
        if (mu == 0) {
            continue;
        }
        std::vector<Integer> factor(static_cast<std::size_t>(d) + 1);
        factor[0] = -1;
        factor[d] = 1;
        if (mu == 1) {
            numerator = multiply(numerator, factor);
        } else {
            denominators.push_back(std::move(factor));
        }
    }
    // x^d - 1 is monic up to sign convention here: leading coefficient +1.
    for (const auto& den : denominators) {
        numerator = divide_exact(numerator, den);
    }
    trim(numerator);
    return IntegerPolynomial{std::move(numerator)};
}

// ---------------------------------------------------------------------------

CyclotomicElement::CyclotomicElement(long conductor)
    : conductor_(conductor),
      modulus_(conductor >= 1 ? std::make_shared<const IntegerPolynomial>(cyclotomic_polynomial(conductor))
                              : throw UsageError("conductor must be >= 1")),
      coeffs_(static_cast<std::size_t>(modulus_->degree()), Rational(0)) {}

CyclotomicElement::CyclotomicElement(long conductor, std::vector<Rational> coeffs)
    : CyclotomicElement(conductor) {
    for (auto& c : coeffs) {
        c.canonicalize();
    }
    reduce_mod(coeffs, *modulus_);
    coeffs_ = std::move(coeffs);
}

CyclotomicElement CyclotomicElement::rational(long conductor, const Rational& value) {
    CyclotomicElement out(conductor);
    out.coeffs_[0] = value;
    return out;
}

CyclotomicElement CyclotomicElement::root_power(long conductor, long exponent) {
    if (conductor < 1) {
        throw UsageError("conductor must be >= 1");
    }
    long e = exponent % conductor;
    if (e < 0) {
        e += conductor;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
    coeffs[e] = 1;
    return CyclotomicElement(conductor, std::move(coeffs));
}

CyclotomicElement CyclotomicElement::parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw UsageError("cyclotomic element text must look like 'q; c_0, c_1, ...'");
    }
    long q = 0;
    try {
        std::size_t used = 0;
        const std::string head(text.substr(0, semi));
        q = std::stol(head, &used);
        if (head.find_first_not_of(" \t", used) != std::string::npos) {
            throw UsageError("trailing characters");
        }
    } catch (const std::exception&) {
        throw UsageError("bad conductor in '" + std::string(text) + "'");
    }
    if (q < 1) {
        throw UsageError("conductor must be >= 1");
    }
    std::vector<Rational> coeffs;
    std::stringstream body{std::string(text.substr(semi + 1))};
    std::string token;
    while (std::getline(body, token, ',')) {
        coeffs.push_back(parse_rational(token));
    }
    if (coeffs.empty()) {
        throw UsageError("cyclotomic element text has no coefficients");
    }
    return CyclotomicElement(q, std::move(coeffs));
}

std::string CyclotomicElement::to_text() const {
    std::string out = std::to_string(conductor_) + ";";
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        out += j == 0 ? " " : ", ";
        out += coeffs_[j].get_num().get_str() + "/" + coeffs_[j].get_den().get_str();
    }
    return out;
}

bool CyclotomicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void CyclotomicElement::require_same_field(const CyclotomicElement& other) const {
    if (conductor_ != other.conductor_) {
        throw UsageError("conductor mismatch: " + std::to_string(conductor_) + " vs " +
                         std::to_string(other.conductor_));
    }
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement out(*this);
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
    require_same_field(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += rhs.coeffs_[j];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
    require_same_field(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] -= rhs.coeffs_[j];
    }
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
    require_same_field(rhs);
    RationalPoly product = multiply(coeffs_, rhs.coeffs_);
    reduce_mod(product, *modulus_);
    coeffs_ = std::move(product);
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
    }
    RationalPoly r0(modulus_->coefficients.begin(), modulus_->coefficients.end());
    RationalPoly r1 = coeffs_;
    trim(r1);
    RationalPoly s0;
    RationalPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [quotient, remainder] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(remainder);
        RationalPoly next = subtract(s0, multiply(quotient, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // Phi_q is irreducible, so the gcd r0 is a nonzero constant.
    const Rational g = r0.at(0);
    for (auto& c : s0) {
        c /= g;
    }
    reduce_mod(s0, *modulus_);
    CyclotomicElement out(conductor_);
    out.coeffs_ = std::move(s0);
    return out;
}

bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
    return lhs.conductor_ == rhs.conductor_ && lhs.coeffs_ == rhs.coeffs_;
}

CyclotomicElement operator/(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
    return lhs * rhs.inverse();
}

CyclotomicElement galois_apply(const CyclotomicElement& x, long t) {
    const long q = x.conductor();
    long tt = t % q;
    if (tt < 0) {
        tt += q;
    }
    gcd_check(t, q, "galois_apply");
    std::vector<Rational> image(static_cast<std::size_t>(q), Rational(0));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        image[(tt * static_cast<long>(j)) % q] += x.coeffs()[j];
    }
    return CyclotomicElement(q, std::move(image));
}

bool is_in_subfield(const CyclotomicElement& x, long d) {
    const long q = x.conductor();
    if (d < 1 || q % d != 0) {
        throw UsageError("is_in_subfield: " + std::to_string(d) + " does not divide " + std::to_string(q));
    }
    for (long t = 1 + d; t < q; t += d) {
        if (std::gcd(t, q) == 1 && !(galois_apply(x, t) == x)) {
            return false;
        }
    }
    return true;
}

CyclotomicElement i_cot_element(long a, long q) {
    if (q < 2 || a < 1 || a >= q) {
        throw UsageError("i_cot_element: need q >= 2 and 1 <= a < q");
    }
    gcd_check(a, q, "i_cot_element");
    const auto one = CyclotomicElement::rational(q, Rational(1));
    const auto root = CyclotomicElement::root_power(q, a);
    return (one + root) / (one - root);
}

ComplexValue embed_numeric(const CyclotomicElement& x, long precision_bits) {
    require_precision(precision_bits);
    const long q = x.conductor();
    Rational total(0);
    for (const auto& c : x.coeffs()) {
        total += abs(c);
    }
    const long magnitude = total == 0 ? 0 : BigFloat(total, 64).magnitude_exponent();
    const long wp = precision_bits + kGuardBits + std::max(0L, magnitude);

    BigFloat real(0L, wp), imag(0L, wp);
    const BigFloat two_pi = scale(pi(wp + 8), Rational(2));
    BigFloat s(wp + 8), c(wp + 8);
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        const Rational& coeff = x.coeffs()[j];
        if (coeff == 0) {
            continue;
        }
        if (j == 0) {
            real += BigFloat(coeff, wp);
            continue;
        }
        const BigFloat angle = scale(two_pi, make_rational(static_cast<long>(j), q));
        mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
        real += scale(c, coeff);
        imag += scale(s, coeff);
    }
    return {real.with_precision(wp), imag.with_precision(wp)};
}

}  // namespace cmspace
