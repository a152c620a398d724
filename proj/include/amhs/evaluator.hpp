#pragma once

#include "amhs/composition.hpp"
#include "amhs/rational.hpp"
#include "amhs/residue.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace amhs {

struct IndexNotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// H: (-1)^k for negative parts, strict.  S: same, weak.
// U: 2^k for negative parts, strict.     V: 2^{-k} for negative parts, strict.
enum class SumFamily { H, S, U, V };

SumFamily parse_family(std::string_view name);
char family_letter(SumFamily f);

enum class Order { Strict, Weak };
inline Order order_of(SumFamily f) { return f == SumFamily::S ? Order::Weak : Order::Strict; }

// Nested sums over 1 <= k_1 < ... < k_d <= n (or <= for Weak) of
// prod_j weights[j][k_j - 1]. Every row must have the same length n.
Rational nested_sum(const std::vector<std::vector<Rational>>& weights, Order order);
Residue nested_sum(const std::vector<std::vector<Residue>>& weights, Order order, Modulus mod);

// out[j] = nested sum with every index <= j, for j = 0..n
std::vector<Residue> prefix_sums(const std::vector<std::vector<Residue>>& weights, Order order,
                                 Modulus mod);
// out[j] = nested sum with every index >= j, for j = 1..n+1 (out[0] unused)
std::vector<Residue> suffix_sums(const std::vector<std::vector<Residue>>& weights, Order order,
                                 Modulus mod);

// per-index factor of one part: entries for k = 1..n
std::vector<Rational> part_weights(SumFamily f, int part, std::uint64_t n);
std::vector<Residue> part_weights(SumFamily f, int part, std::uint64_t n, Modulus mod);
// part_weights for a fixed base: base^k / k^e
std::vector<Residue> power_weights(Residue base, unsigned exponent, std::uint64_t n);

// DP evaluation, O(n * depth) ring operations. Zero when n = 0, or n < depth for strict families.
Rational eval(SumFamily f, const Composition& c, std::uint64_t n);
Residue eval(SumFamily f, const Composition& c, std::uint64_t n, Modulus mod);
Residue eval(SumFamily f, const Composition& c, std::uint64_t n, std::uint64_t p, unsigned k);

// literal nested loops; oracle only
Rational eval_naive(SumFamily f, const Composition& c, std::uint64_t n);
Residue eval_naive(SumFamily f, const Composition& c, std::uint64_t n, Modulus mod);

// h_31 = H(3,1;(p-1)/2) mod p^k
Residue h31(std::uint64_t p, unsigned k);

// 1/1, 1/2, ..., 1/n modulo m; entry 0 unused
std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t m);

}  // namespace amhs
