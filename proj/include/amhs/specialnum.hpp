#pragma once

#include "amhs/rational.hpp"
#include "amhs/residue.hpp"

#include <cstdint>
#include <vector>

namespace amhs {

// B_n with B_1 = -1/2. Memoized process-wide; safe to call from any thread.
// The returned reference stays valid for the life of the process.
const Rational& bernoulli(unsigned n);

// E_a(0) = 2(1 - 2^{a+1}) B_{a+1} / (a+1)
Rational euler_zero(unsigned a);
// E_n(x) = sum_a C(n,a) E_a(0) x^{n-a}
Rational euler_poly(unsigned n, const Rational& x);

// sum_{j=1}^{n-1} j^d through the Bernoulli closed form
Rational power_sum(unsigned d, std::uint64_t n);
// F_{n,d,a}: coefficient of d^{n-a} in sum_{i=1}^{d-1} (-1)^i i^n
Rational alt_power_sum_coefficient(unsigned n, std::uint64_t d, unsigned a);
// sum_{i=1}^{d-1} (-1)^i i^n through the Euler-polynomial closed form
Rational alt_power_sum(unsigned n, std::uint64_t d);

// X_p(k) = B_{p-k}/(p-k) - B_{2p-1-k}/(2(2p-1-k))
Rational chi(std::uint64_t p, unsigned k);

// B_0..B_{n_max} mod p^k via the Bernoulli recurrence in Z/p^k; needs n_max <= p-2.
std::vector<Residue> bernoulli_residues(std::uint64_t p, unsigned k, unsigned n_max);

struct ConvolutionConstants {
    Residue A, B, C, D, E, F, G, J, K;
};

// sums over 2 <= k <= p-3 of B_k B_{p-3-k} times 1, 2^k, 2^{p-3-k}, with the
// extra factors 1/k (D, E, F) and k (G, J, K); reduced mod p^power
ConvolutionConstants convolution_constants(std::uint64_t p, unsigned power = 1);
// same, from a table of B_0..B_{p-3} already reduced mod p^k
ConvolutionConstants convolution_constants(std::uint64_t p, const std::vector<Residue>& bernoulli_mod);

}  // namespace amhs
