#include "amhs/residue.hpp"

#include <numeric>

namespace amhs {

Modulus Modulus::of(std::uint64_t p, unsigned k) {
    if (p < 2 || k < 1) throw std::invalid_argument("modulus needs p >= 2 and k >= 1");
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (m > (std::uint64_t{1} << 62) / p) throw std::overflow_error("p^k exceeds 2^62");
        m *= p;
    }
    return Modulus{p, k, m};
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = a % m;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw NotPIntegral("element is not a unit");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

Residue Residue::from_int(long long x, Modulus mod) {
    long long m = static_cast<long long>(mod.m);
    long long r = x % m;
    if (r < 0) r += m;
    return Residue(static_cast<std::uint64_t>(r), mod);
}

bool Residue::is_unit() const { return v_ % mod_.p != 0; }

Residue Residue::inverse() const { return Residue(inv_mod(v_, mod_.m), mod_); }

Residue Residue::project(unsigned j) const {
    if (j > mod_.k) throw std::invalid_argument("cannot lift a residue");
    Modulus lower = mod_.lower(j);
    return Residue(v_ % lower.m, lower);
}

Residue reduce_mod(const Rational& r, Modulus mod) {
    if (valuation(r, mod.p) < 0) throw NotPIntegral("rational " + r.str() + " is not " +
                                                    std::to_string(mod.p) + "-integral");
    BigInt num = r.numerator(), den = r.denominator();
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), mod.m);
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), mod.m);
    return Residue(mul_mod(n, inv_mod(d, mod.m), mod.m), mod);
}

Residue reduce_mod(const Rational& r, std::uint64_t p, unsigned k) {
    return reduce_mod(r, Modulus::of(p, k));
}

}  // namespace amhs
