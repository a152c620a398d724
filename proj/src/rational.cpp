#include "amhs/rational.hpp"

#include <stdexcept>

namespace amhs {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto slash = s.find('/');
    BigInt num, den(1);
    try {
        if (slash == std::string::npos) {
            num = BigInt(s, 10);
        } else {
            num = BigInt(s.substr(0, slash), 10);
            den = BigInt(s.substr(slash + 1), 10);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational pow2(long e) {
    BigInt n(1);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), n) : Rational(n);
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

long valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) return kInfiniteValuation;
    BigInt rest;
    BigInt prime(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& r, std::uint64_t p) {
    if (r.is_zero()) return kInfiniteValuation;
    return valuation(r.numerator(), p) - valuation(r.denominator(), p);
}

Rational fermat_quotient(std::uint64_t p) {
    if (p < 3) throw std::domain_error("fermat_quotient needs an odd prime");
    BigInt t(1);
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), p - 1);
    t -= 1;
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), p);
    return Rational(q);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace amhs
