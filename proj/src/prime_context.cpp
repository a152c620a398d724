#include "amhs/prime_context.hpp"

namespace amhs {

namespace {

unsigned top_power(std::uint64_t p) {
    unsigned k = 0;
    unsigned __int128 m = 1;
    while (k < 4 && m * p < (static_cast<unsigned __int128>(1) << 62)) {
        m *= p;
        ++k;
    }
    return k;
}

}  // namespace

PrimeContext::PrimeContext(std::uint64_t p) : p_(p), top_(Modulus::of(p, top_power(p))) {
    if (!is_prime(p) || p < 5) throw std::invalid_argument("prime context needs a prime p >= 5");
    low_bernoulli_ = bernoulli_residues(p, top_.k, static_cast<unsigned>(p - 2));
}

Modulus PrimeContext::mod(unsigned k) const {
    if (k > top_.k) throw std::invalid_argument("power exceeds the context precision");
    return Modulus::of(p_, k);
}

Residue PrimeContext::sum(SumFamily f, const std::vector<int>& parts, std::uint64_t n, unsigned k) {
    auto key = std::make_tuple(f, parts, n);
    auto it = sums_.find(key);
    if (it == sums_.end())
        it = sums_.emplace(key, eval(f, Composition(parts), n, top_)).first;
    return it->second.project(k);
}

const Rational& PrimeContext::fermat_quotient_exact() {
    if (!q_) q_ = amhs::fermat_quotient(p_);
    return *q_;
}

Residue PrimeContext::bernoulli(unsigned n, unsigned k) {
    if (n < low_bernoulli_.size()) return low_bernoulli_[n].project(k);
    auto it = high_bernoulli_.find(n);
    if (it == high_bernoulli_.end())
        it = high_bernoulli_.emplace(n, reduce_mod(amhs::bernoulli(n), top_)).first;
    return it->second.project(k);
}

Residue PrimeContext::euler_bernoulli(unsigned n, unsigned k) {
    if (n == 0) return Residue(0, mod(k));
    auto it = euler_bernoulli_.find(n);
    if (it == euler_bernoulli_.end()) {
        Residue v(0, top_);
        if (n % (p_ - 1) == 0) {
            v = reduce_mod((Rational(1) - pow2(n)) * amhs::bernoulli(n), top_);
        } else {
            Residue two(2, top_);
            v = (Residue(1, top_) - two.pow(n)) * bernoulli(n, top_.k);
        }
        it = euler_bernoulli_.emplace(n, v).first;
    }
    return it->second.project(k);
}

Residue PrimeContext::chi(unsigned j, unsigned k) {
    auto it = chi_.find(j);
    if (it == chi_.end()) {
        // the combination of amhs::chi, without its p >= j+3 guard so that boundary
        // entries can still be evaluated
        long lo = static_cast<long>(p_) - static_cast<long>(j);
        long hi = 2 * static_cast<long>(p_) - 1 - static_cast<long>(j);
        if (lo < 2) throw std::domain_error("chi index out of range");
        Rational x = amhs::bernoulli(static_cast<unsigned>(lo)) / Rational(lo) -
                     amhs::bernoulli(static_cast<unsigned>(hi)) / Rational(2 * hi);
        it = chi_.emplace(j, reduce_mod(x, top_)).first;
    }
    return it->second.project(k);
}

const ConvolutionConstants& PrimeContext::constants() {
    if (!constants_) {
        std::vector<Residue> b(low_bernoulli_.begin(), low_bernoulli_.begin() + (p_ - 2));
        constants_ = convolution_constants(p_, b);
    }
    return *constants_;
}

const std::vector<Residue>& PrimeContext::binomial_row(std::uint64_t n) {
    auto it = binomial_rows_.find(n);
    if (it != binomial_rows_.end()) return it->second;
    if (n >= p_) throw std::domain_error("binomial rows need n < p");
    std::vector<Residue> row;
    row.reserve(n + 1);
    Residue c(1, top_);
    row.push_back(c);
    for (std::uint64_t j = 1; j <= n; ++j) {
        c = c * Residue(n + 1 - j, top_) * Residue(j, top_).inverse();
        row.push_back(c);
    }
    return binomial_rows_.emplace(n, std::move(row)).first->second;
}

}  // namespace amhs
