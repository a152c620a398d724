#include "amhs/evaluator.hpp"

#include <cstdlib>

namespace amhs {

SumFamily parse_family(std::string_view name) {
    if (name == "H") return SumFamily::H;
    if (name == "S") return SumFamily::S;
    if (name == "U") return SumFamily::U;
    if (name == "V") return SumFamily::V;
    throw std::invalid_argument("unknown sum family: " + std::string(name));
}

char family_letter(SumFamily f) {
    switch (f) {
        case SumFamily::H: return 'H';
        case SumFamily::S: return 'S';
        case SumFamily::U: return 'U';
        case SumFamily::V: return 'V';
    }
    return '?';
}

namespace {

using Table = std::vector<std::vector<std::uint64_t>>;

std::size_t row_length(std::size_t rows, const auto& weights) {
    if (rows == 0) throw std::invalid_argument("nested sum needs at least one part");
    std::size_t n = weights[0].size();
    for (const auto& row : weights)
        if (row.size() != n) throw std::invalid_argument("weight rows differ in length");
    return n;
}

Table raw_table(const std::vector<std::vector<Residue>>& weights, Modulus mod) {
    Table t(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        t[j].reserve(weights[j].size());
        for (const auto& r : weights[j]) {
            if (!(r.modulus() == mod)) throw std::invalid_argument("weight modulus mismatch");
            t[j].push_back(r.value());
        }
    }
    return t;
}

// acc[j] = partial sum over the first j parts; returns acc[d] after each index
template <class Step>
void sweep_forward(const Table& w, Order order, std::uint64_t m, Step&& after_index) {
    std::size_t d = w.size(), n = w[0].size();
    std::vector<std::uint64_t> acc(d + 1, 0);
    acc[0] = 1 % m;
    for (std::size_t i = 0; i < n; ++i) {
        if (order == Order::Strict) {
            for (std::size_t j = d; j >= 1; --j)
                acc[j] = add_mod(acc[j], mul_mod(acc[j - 1], w[j - 1][i], m), m);
        } else {
            for (std::size_t j = 1; j <= d; ++j)
                acc[j] = add_mod(acc[j], mul_mod(acc[j - 1], w[j - 1][i], m), m);
        }
        after_index(i + 1, acc[d]);
    }
}

std::uint64_t nested_raw(const Table& w, Order order, std::uint64_t m) {
    std::uint64_t result = 0;
    sweep_forward(w, order, m, [&](std::size_t, std::uint64_t v) { result = v; });
    return result;
}

}  // namespace

std::vector<std::uint64_t> inverse_table(std::uint64_t n, std::uint64_t m) {
    std::vector<std::uint64_t> prefix(n + 1), inv(n + 1, 0);
    prefix[0] = 1 % m;
    for (std::uint64_t i = 1; i <= n; ++i) prefix[i] = mul_mod(prefix[i - 1], i % m, m);
    if (n == 0) return inv;
    std::uint64_t running = inv_mod(prefix[n], m);
    for (std::uint64_t i = n; i >= 1; --i) {
        inv[i] = mul_mod(running, prefix[i - 1], m);
        running = mul_mod(running, i % m, m);
    }
    return inv;
}

Rational nested_sum(const std::vector<std::vector<Rational>>& weights, Order order) {
    std::size_t d = weights.size();
    std::size_t n = row_length(d, weights);
    std::vector<Rational> acc(d + 1);
    acc[0] = Rational(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (order == Order::Strict) {
            for (std::size_t j = d; j >= 1; --j)
                if (!acc[j - 1].is_zero()) acc[j] += acc[j - 1] * weights[j - 1][i];
        } else {
            for (std::size_t j = 1; j <= d; ++j)
                if (!acc[j - 1].is_zero()) acc[j] += acc[j - 1] * weights[j - 1][i];
        }
    }
    return acc[d];
}

Residue nested_sum(const std::vector<std::vector<Residue>>& weights, Order order, Modulus mod) {
    row_length(weights.size(), weights);
    return Residue(nested_raw(raw_table(weights, mod), order, mod.m), mod);
}

std::vector<Residue> prefix_sums(const std::vector<std::vector<Residue>>& weights, Order order,
                                 Modulus mod) {
    std::size_t n = row_length(weights.size(), weights);
    std::vector<Residue> out(n + 1, Residue(0, mod));
    sweep_forward(raw_table(weights, mod), order, mod.m,
                  [&](std::size_t i, std::uint64_t v) { out[i] = Residue(v, mod); });
    return out;
}

std::vector<Residue> suffix_sums(const std::vector<std::vector<Residue>>& weights, Order order,
                                 Modulus mod) {
    std::size_t d = weights.size();
    std::size_t n = row_length(d, weights);
    Table w = raw_table(weights, mod);
    const std::uint64_t m = mod.m;
    // acc[t] = sum over the last t parts with all indices >= current i
    std::vector<std::uint64_t> acc(d + 1, 0);
    acc[0] = 1 % m;
    std::vector<Residue> out(n + 2, Residue(0, mod));
    for (std::size_t i = n; i >= 1; --i) {
        if (order == Order::Strict) {
            for (std::size_t t = d; t >= 1; --t)
                acc[t] = add_mod(acc[t], mul_mod(acc[t - 1], w[d - t][i - 1], m), m);
        } else {
            for (std::size_t t = 1; t <= d; ++t)
                acc[t] = add_mod(acc[t], mul_mod(acc[t - 1], w[d - t][i - 1], m), m);
        }
        out[i] = Residue(acc[d], mod);
    }
    return out;
}

namespace {

void check_range(std::uint64_t n, Modulus mod, SumFamily f) {
    if (n >= mod.p)
        throw IndexNotInvertible("upper limit " + std::to_string(n) + " is not below p = " +
                                 std::to_string(mod.p));
    if (f == SumFamily::V && mod.p == 2) throw IndexNotInvertible("V sums need p odd");
}

Rational exact_base(SumFamily f, int part) {
    if (part > 0) return Rational(1);
    switch (f) {
        case SumFamily::H:
        case SumFamily::S: return Rational(-1);
        case SumFamily::U: return Rational(2);
        case SumFamily::V: return Rational(1, 2);
    }
    return Rational(1);
}

std::uint64_t residue_base(SumFamily f, int part, Modulus mod) {
    if (part > 0) return 1 % mod.m;
    switch (f) {
        case SumFamily::H:
        case SumFamily::S: return mod.m - 1;
        case SumFamily::U: return 2 % mod.m;
        case SumFamily::V: return inv_mod(2, mod.m);
    }
    return 1;
}

// row of base^k / k^e for k = 1..n, from a precomputed inverse table
std::vector<std::uint64_t> raw_row(std::uint64_t base, unsigned e, std::uint64_t n,
                                   const std::vector<std::uint64_t>& inv, std::uint64_t m) {
    std::vector<std::uint64_t> row(n);
    std::uint64_t bk = 1 % m;
    for (std::uint64_t k = 1; k <= n; ++k) {
        bk = mul_mod(bk, base, m);
        row[k - 1] = mul_mod(bk, pow_mod(inv[k], e, m), m);
    }
    return row;
}

}  // namespace

std::vector<Rational> part_weights(SumFamily f, int part, std::uint64_t n) {
    Rational base = exact_base(f, part);
    unsigned e = static_cast<unsigned>(std::abs(part));
    std::vector<Rational> row;
    row.reserve(n);
    Rational bk(1);
    for (std::uint64_t k = 1; k <= n; ++k) {
        bk *= base;
        row.push_back(bk / pow(Rational(BigInt(static_cast<unsigned long>(k))), e));
    }
    return row;
}

std::vector<Residue> part_weights(SumFamily f, int part, std::uint64_t n, Modulus mod) {
    check_range(n, mod, f);
    auto inv = inverse_table(n, mod.m);
    auto raw = raw_row(residue_base(f, part, mod), static_cast<unsigned>(std::abs(part)), n, inv, mod.m);
    std::vector<Residue> row;
    row.reserve(n);
    for (auto v : raw) row.emplace_back(v, mod);
    return row;
}

std::vector<Residue> power_weights(Residue base, unsigned exponent, std::uint64_t n) {
    Modulus mod = base.modulus();
    if (n >= mod.p) throw IndexNotInvertible("upper limit must stay below p");
    auto inv = inverse_table(n, mod.m);
    auto raw = raw_row(base.value(), exponent, n, inv, mod.m);
    std::vector<Residue> row;
    row.reserve(n);
    for (auto v : raw) row.emplace_back(v, mod);
    return row;
}

// weak sums only vanish on the empty range
static bool vanishes(SumFamily f, const Composition& c, std::uint64_t n) {
    return n == 0 || (order_of(f) == Order::Strict && n < c.depth());
}

Rational eval(SumFamily f, const Composition& c, std::uint64_t n) {
    if (vanishes(f, c, n)) return Rational(0);
    std::vector<std::vector<Rational>> w;
    w.reserve(c.depth());
    for (int s : c.parts()) w.push_back(part_weights(f, s, n));
    return nested_sum(w, order_of(f));
}

Residue eval(SumFamily f, const Composition& c, std::uint64_t n, Modulus mod) {
    check_range(n, mod, f);
    if (vanishes(f, c, n)) return Residue(0, mod);
    auto inv = inverse_table(n, mod.m);
    Table w;
    w.reserve(c.depth());
    for (int s : c.parts())
        w.push_back(raw_row(residue_base(f, s, mod), static_cast<unsigned>(std::abs(s)), n, inv, mod.m));
    return Residue(nested_raw(w, order_of(f), mod.m), mod);
}

Residue eval(SumFamily f, const Composition& c, std::uint64_t n, std::uint64_t p, unsigned k) {
    return eval(f, c, n, Modulus::of(p, k));
}

namespace {

template <class T, class Weight>
void naive_loop(std::size_t j, std::uint64_t lo, std::uint64_t n, std::size_t d, Order order,
                const T& prod, T& total, const Weight& weight) {
    if (j == d) {
        total += prod;
        return;
    }
    for (std::uint64_t k = lo; k <= n; ++k) {
        T next = prod * weight(j, k);
        naive_loop(j + 1, order == Order::Strict ? k + 1 : k, n, d, order, next, total, weight);
    }
}

}  // namespace

Rational eval_naive(SumFamily f, const Composition& c, std::uint64_t n) {
    Rational total;
    auto weight = [&](std::size_t j, std::uint64_t k) {
        int s = c[j];
        Rational kk(BigInt(static_cast<unsigned long>(k)));
        return pow(exact_base(f, s), static_cast<long>(k)) / pow(kk, std::abs(s));
    };
    naive_loop(0, 1, n, c.depth(), order_of(f), Rational(1), total, weight);
    return total;
}

Residue eval_naive(SumFamily f, const Composition& c, std::uint64_t n, Modulus mod) {
    check_range(n, mod, f);
    Residue total(0, mod);
    auto weight = [&](std::size_t j, std::uint64_t k) {
        int s = c[j];
        Residue base(residue_base(f, s, mod), mod);
        Residue kk(k, mod);
        return base.pow(k) * kk.inverse().pow(static_cast<std::uint64_t>(std::abs(s)));
    };
    naive_loop(0, 1, n, c.depth(), order_of(f), Residue(1, mod), total, weight);
    return total;
}

Residue h31(std::uint64_t p, unsigned k) {
    return eval(SumFamily::H, Composition{3, 1}, (p - 1) / 2, Modulus::of(p, k));
}

}  // namespace amhs
