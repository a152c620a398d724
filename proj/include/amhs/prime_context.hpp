#pragma once

#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"
#include "amhs/rational.hpp"
#include "amhs/residue.hpp"
#include "amhs/specialnum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace amhs {

// Per-prime caches shared by every check run at that prime. Not thread-safe;
// each worker owns its own context.
class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    unsigned max_power() const { return top_.k; }
    Modulus mod(unsigned k) const;

    // nested sums, memoized at the top power and projected
    Residue sum(SumFamily f, const std::vector<int>& parts, std::uint64_t n, unsigned k);
    Residue full(SumFamily f, const std::vector<int>& parts, unsigned k) {
        return sum(f, parts, p_ - 1, k);
    }

    const Rational& fermat_quotient_exact();
    // B_n mod p^k; NotPIntegral when n > 0 and (p-1) | n
    Residue bernoulli(unsigned n, unsigned k);
    // (1 - 2^n) B_n mod p^k, p-integral for every n
    Residue euler_bernoulli(unsigned n, unsigned k);
    // X_p(j) mod p^k
    Residue chi(unsigned j, unsigned k);
    // A..K at the top power
    const ConvolutionConstants& constants();
    // C(n, j) mod p^k for j = 0..n, n < p
    const std::vector<Residue>& binomial_row(std::uint64_t n);

private:
    std::uint64_t p_;
    Modulus top_;
    std::map<std::tuple<SumFamily, std::vector<int>, std::uint64_t>, Residue> sums_;
    std::optional<Rational> q_;
    std::vector<Residue> low_bernoulli_;
    std::map<unsigned, Residue> high_bernoulli_;
    std::map<unsigned, Residue> euler_bernoulli_;
    std::map<unsigned, Residue> chi_;
    std::optional<ConvolutionConstants> constants_;
    std::map<std::uint64_t, std::vector<Residue>> binomial_rows_;
};

}  // namespace amhs
