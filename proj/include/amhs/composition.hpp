#pragma once

#include "amhs/rational.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace amhs {

// Letter sequence possibly empty; used by the stuffle algebra.
using Word = std::vector<int>;

// sign(st)(|s|+|t|); a zero left operand counts as positive, so 0 (+) t = t
int oplus(int s, int t);

class Composition {
public:
    Composition() = default;  // only as a moved-from / placeholder value
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    unsigned weight() const;
    int operator[](std::size_t i) const { return parts_[i]; }
    // product of part signs
    int sign() const;

    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

Composition reverse(const Composition& c);
// the 2^{d-1} compositions obtained by merging adjacent parts; c itself first
std::vector<Composition> coarsenings(const Composition& c);
// repeated composition {part}^n
Composition repeat(int part, std::size_t n);
Composition concat(const Composition& a, const Composition& b);
// every signed composition with the given weight
std::vector<Composition> signed_compositions(unsigned weight);

using SumCallback = std::function<Rational(const Composition&)>;
// S(c) = sum over coarsenings r of H(r)
Rational s_from_h(const Composition& c, const SumCallback& h_values);
// H(c) = sum over coarsenings r of (-1)^{depth c - depth r} S(r)
Rational h_from_s(const Composition& c, const SumCallback& s_values);

class Partition {
public:
    explicit Partition(std::vector<unsigned> parts);
    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const;
    std::size_t length() const { return parts_.size(); }
    bool is_odd() const;
    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

std::vector<Partition> partitions(unsigned l);
std::vector<Partition> odd_partitions(unsigned l);
// coefficient of p_lambda in l! e_l written in power sums
BigInt c_lambda(const Partition& lambda);

}  // namespace amhs
