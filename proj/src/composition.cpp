#include "amhs/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>

namespace amhs {

int oplus(int s, int t) {
    int sign = ((s < 0) != (t < 0)) ? -1 : 1;
    return sign * (std::abs(s) + std::abs(t));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (int s : parts_)
        if (s == 0) throw std::invalid_argument("composition parts must be nonzero");
}

unsigned Composition::weight() const {
    unsigned w = 0;
    for (int s : parts_) w += static_cast<unsigned>(std::abs(s));
    return w;
}

int Composition::sign() const {
    int sg = 1;
    for (int s : parts_)
        if (s < 0) sg = -sg;
    return sg;
}

std::string Composition::str() const { return format_word(parts_); }

Word parse_word(std::string_view text) {
    Word out;
    std::string cleaned;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = cleaned.find(',', start);
        std::string_view tok(cleaned.data() + start,
                             (comma == std::string::npos ? cleaned.size() : comma) - start);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed composition: \"" + std::string(text) + "\"");
        if (value == 0) throw std::invalid_argument("composition parts must be nonzero");
        out.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

Composition Composition::parse(std::string_view text) { return Composition(parse_word(text)); }

Composition reverse(const Composition& c) {
    std::vector<int> parts(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(parts));
}

std::vector<Composition> coarsenings(const Composition& c) {
    const auto& s = c.parts();
    std::size_t d = s.size();
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (d - 1));
    // bit i set: merge across the boundary between parts i and i+1
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
        std::vector<int> parts{s[0]};
        for (std::size_t i = 1; i < d; ++i) {
            if (mask >> (i - 1) & 1)
                parts.back() = oplus(parts.back(), s[i]);
            else
                parts.push_back(s[i]);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

Composition repeat(int part, std::size_t n) { return Composition(std::vector<int>(n, part)); }

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

std::vector<Composition> signed_compositions(unsigned weight) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, unsigned left) -> void {
        if (left == 0) {
            if (!cur.empty()) out.emplace_back(cur);
            return;
        }
        for (unsigned a = 1; a <= left; ++a) {
            for (int sg : {1, -1}) {
                cur.push_back(sg * static_cast<int>(a));
                self(self, left - a);
                cur.pop_back();
            }
        }
    };
    rec(rec, weight);
    return out;
}

Rational s_from_h(const Composition& c, const SumCallback& h_values) {
    Rational sum;
    for (const auto& r : coarsenings(c)) sum += h_values(r);
    return sum;
}

Rational h_from_s(const Composition& c, const SumCallback& s_values) {
    Rational sum;
    for (const auto& r : coarsenings(c)) {
        Rational v = s_values(r);
        if ((c.depth() - r.depth()) % 2) v = -v;
        sum += v;
    }
    return sum;
}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned x : parts_)
        if (x == 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::size() const {
    unsigned s = 0;
    for (unsigned x : parts_) s += x;
    return s;
}

bool Partition::is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](unsigned x) { return x % 2 == 1; });
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions(unsigned l) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left, unsigned max_part) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned x = std::min(left, max_part); x >= 1; --x) {
            cur.push_back(x);
            self(self, left - x, x);
            cur.pop_back();
        }
    };
    rec(rec, l, l);
    return out;
}

std::vector<Partition> odd_partitions(unsigned l) {
    std::vector<Partition> out;
    for (auto& lam : partitions(l))
        if (lam.is_odd()) out.push_back(std::move(lam));
    return out;
}

namespace {

using PowerPoly = std::map<std::vector<unsigned>, Rational>;

// e_l in power sums via Newton: l e_l = sum_{i=1}^l (-1)^{i-1} p_i e_{l-i}
const PowerPoly& elementary_in_power_sums(unsigned l) {
    static std::mutex mu;
    static std::deque<PowerPoly> memo{PowerPoly{{{}, Rational(1)}}};
    std::lock_guard lock(mu);
    while (memo.size() <= l) {
        unsigned n = static_cast<unsigned>(memo.size());
        PowerPoly e;
        for (unsigned i = 1; i <= n; ++i) {
            Rational sg = (i % 2 == 1) ? Rational(1) : Rational(-1);
            for (const auto& [mono, coef] : memo[n - i]) {
                std::vector<unsigned> m = mono;
                m.push_back(i);
                std::sort(m.begin(), m.end(), std::greater<>());
                e[m] += sg * coef / Rational(n);
            }
        }
        std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
        memo.push_back(std::move(e));
    }
    return memo[l];
}

}  // namespace

BigInt c_lambda(const Partition& lambda) {
    unsigned l = lambda.size();
    const PowerPoly& e = elementary_in_power_sums(l);
    auto it = e.find(lambda.parts());
    if (it == e.end()) return 0;
    Rational c = it->second * Rational(factorial(l));
    return c.numerator();
}

}  // namespace amhs
