#include "amhs/specialnum.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace amhs {

namespace {

// Even-index Bernoulli numbers from the integer tangent numbers T_k:
// B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
std::vector<Rational> bernoulli_table(unsigned n_max) {
    std::vector<Rational> out(n_max + 1);
    out[0] = Rational(1);
    if (n_max >= 1) out[1] = Rational(-1, 2);
    unsigned K = n_max / 2;
    if (K == 0) return out;
    std::vector<BigInt> t(K + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= K; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= K; ++k) {
        for (unsigned j = k; j <= K; ++j) {
            BigInt next = t[j] * (j - k + 2);
            mpz_addmul_ui(next.get_mpz_t(), t[j - 1].get_mpz_t(), j - k);
            t[j] = std::move(next);
        }
    }
    for (unsigned k = 1; k <= K; ++k) {
        BigInt four_k(1);
        mpz_mul_2exp(four_k.get_mpz_t(), four_k.get_mpz_t(), 2 * k);
        BigInt num = t[k] * (2 * k);
        if (k % 2 == 0) num = -num;
        out[2 * k] = Rational(num, four_k * (four_k - 1));
    }
    return out;
}

struct BernoulliCache {
    std::shared_mutex mu;
    std::deque<Rational> table;
};

BernoulliCache& cache() {
    static BernoulliCache c;
    return c;
}

}  // namespace

const Rational& bernoulli(unsigned n) {
    BernoulliCache& c = cache();
    {
        std::shared_lock lock(c.mu);
        if (n < c.table.size()) return c.table[n];
    }
    std::unique_lock lock(c.mu);
    if (n >= c.table.size()) {
        unsigned target = std::max<unsigned>({n, 2 * static_cast<unsigned>(c.table.size()), 64});
        std::vector<Rational> fresh = bernoulli_table(target);
        for (std::size_t i = c.table.size(); i < fresh.size(); ++i) c.table.push_back(std::move(fresh[i]));
    }
    return c.table[n];
}

Rational euler_zero(unsigned a) {
    if (a == 0) return Rational(1);
    return Rational(2) * (Rational(1) - pow2(a + 1)) * bernoulli(a + 1) / Rational(a + 1);
}

Rational euler_poly(unsigned n, const Rational& x) {
    Rational sum;
    for (unsigned a = 0; a <= n; ++a) {
        Rational e = euler_zero(a);
        if (e.is_zero()) continue;
        sum += Rational(binomial(n, a)) * e * pow(x, n - a);
    }
    return sum;
}

Rational power_sum(unsigned d, std::uint64_t n) {
    Rational sum;
    Rational nn(BigInt(static_cast<unsigned long>(n)));
    for (unsigned r = 0; r <= d; ++r) {
        const Rational& b = bernoulli(r);
        if (b.is_zero()) continue;
        sum += Rational(binomial(d + 1, r)) * b * pow(nn, d + 1 - r);
    }
    return sum / Rational(d + 1);
}

Rational alt_power_sum_coefficient(unsigned n, std::uint64_t d, unsigned a) {
    int sign_d = d % 2 == 0 ? 1 : -1;  // (-1)^d
    if (a < n) return Rational(-sign_d) * euler_zero(a) / Rational(2);
    if (n > 0) return Rational(1 - sign_d) * euler_zero(n) / Rational(2);
    return Rational(-(1 + sign_d), 2);
}

Rational alt_power_sum(unsigned n, std::uint64_t d) {
    Rational sum;
    Rational dd(BigInt(static_cast<unsigned long>(d)));
    for (unsigned a = 0; a <= n; ++a) {
        Rational f = alt_power_sum_coefficient(n, d, a);
        if (f.is_zero()) continue;
        sum += Rational(binomial(n, a)) * f * pow(dd, n - a);
    }
    return sum;
}

Rational chi(std::uint64_t p, unsigned k) {
    if (p < k + 3) throw std::domain_error("chi requires p >= k + 3");
    long hi = static_cast<long>(2 * p - 1 - k);
    long lo = static_cast<long>(p - k);
    return bernoulli(static_cast<unsigned>(lo)) / Rational(lo) -
           bernoulli(static_cast<unsigned>(hi)) / Rational(2 * hi);
}

std::vector<Residue> bernoulli_residues(std::uint64_t p, unsigned k, unsigned n_max) {
    if (n_max + 2 > p) throw std::domain_error("bernoulli_residues needs n_max <= p-2");
    Modulus mod = Modulus::of(p, k);
    const std::uint64_t m = mod.m;
    std::vector<std::uint64_t> inv(n_max + 2, 0);
    for (unsigned j = 1; j <= n_max + 1; ++j) inv[j] = inv_mod(j, m);
    std::vector<std::uint64_t> b(n_max + 1, 0);
    b[0] = 1;
    if (n_max >= 1) b[1] = sub_mod(0, inv[2], m);
    for (unsigned n = 2; n <= n_max; n += 2) {
        // sum_{j<n} C(n+1, j) B_j = -(n+1) B_n
        std::uint64_t binom = 1, acc = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (j == 1 || j % 2 == 0) acc = add_mod(acc, mul_mod(binom, b[j], m), m);
            binom = mul_mod(mul_mod(binom, (n + 1 - j) % m, m), inv[j + 1], m);
        }
        b[n] = sub_mod(0, mul_mod(acc, inv[n + 1], m), m);
    }
    std::vector<Residue> out;
    out.reserve(b.size());
    for (auto v : b) out.emplace_back(v, mod);
    return out;
}

ConvolutionConstants convolution_constants(std::uint64_t p, unsigned power) {
    if (p < 7) throw std::domain_error("convolution constants need p >= 7");
    return convolution_constants(p, bernoulli_residues(p, power, static_cast<unsigned>(p - 3)));
}

ConvolutionConstants convolution_constants(std::uint64_t p, const std::vector<Residue>& b) {
    if (p < 7) throw std::domain_error("convolution constants need p >= 7");
    if (b.size() + 3 < p + 1) throw std::invalid_argument("Bernoulli table too short");
    Modulus mod = b[0].modulus();
    Residue zero(0, mod);
    ConvolutionConstants c{zero, zero, zero, zero, zero, zero, zero, zero, zero};
    Residue two(2, mod);
    for (std::uint64_t k = 2; k + 3 <= p; k += 2) {
        Residue bb = b[k] * b[p - 3 - k];
        Residue lo = two.pow(k), hi = two.pow(p - 3 - k);
        Residue kk(k, mod), ik = kk.inverse();
        c.A += bb;
        c.B += lo * bb;
        c.C += hi * bb;
        c.D += bb * ik;
        c.E += lo * bb * ik;
        c.F += hi * bb * ik;
        c.G += kk * bb;
        c.J += lo * kk * bb;
        c.K += hi * kk * bb;
    }
    return c;
}

}  // namespace amhs
