#pragma once

#include "amhs/registry.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace amhs::detail {

using Value = std::function<Residue(CheckContext&)>;
using Pre = std::function<bool(std::uint64_t)>;

inline Pre at_least(std::uint64_t n) {
    return [n](std::uint64_t p) { return p >= n; };
}
inline Pre any_prime() {
    return [](std::uint64_t) { return true; };
}

inline int neg_one_pow(long n) { return n % 2 == 0 ? 1 : -1; }

inline std::string tag(const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

inline void add(std::vector<CongruenceCheck>& out, std::string id, std::string anchor,
                std::vector<long> params, unsigned power, Pre pre, Value lhs, Value rhs) {
    CongruenceCheck c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.params = std::move(params);
    c.power = power;
    c.precondition = std::move(pre);
    c.lhs = [f = std::move(lhs)](CheckContext& cx) { return std::vector<Residue>{f(cx)}; };
    c.rhs = [f = std::move(rhs)](CheckContext& cx) { return std::vector<Residue>{f(cx)}; };
    out.push_back(std::move(c));
}

inline void add_vector(std::vector<CongruenceCheck>& out, std::string id, std::string anchor,
                       std::vector<long> params, unsigned power, Pre pre, Recipe lhs, Recipe rhs) {
    CongruenceCheck c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.params = std::move(params);
    c.power = power;
    c.precondition = std::move(pre);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    out.push_back(std::move(c));
}

inline Value sum_of(SumFamily f, std::vector<int> s) {
    return [f, s](CheckContext& c) { return c.sum(f, s, c.p() - 1); };
}
inline Value H_of(std::vector<int> s) { return sum_of(SumFamily::H, std::move(s)); }
inline Value zero() {
    return [](CheckContext& c) { return c.c(0); };
}

}  // namespace amhs::detail
