#include "catalog_util.hpp"

#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"
#include "amhs/reduction.hpp"
#include "amhs/stuffle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

namespace amhs {

using namespace detail;

namespace {

constexpr SumFamily kH = SumFamily::H;
constexpr SumFamily kS = SumFamily::S;
constexpr SumFamily kU = SumFamily::U;
constexpr SumFamily kV = SumFamily::V;

Residue b3(CheckContext& c) { return c.B(c.p() - 3); }
Residue qb(CheckContext& c) { return c.q() * b3(c); }

Value U_of(std::vector<int> s) { return sum_of(kU, std::move(s)); }

void add_c22(std::vector<CongruenceCheck>& out) {
    const std::string anchor = "U-sum values";
    auto pre = at_least(7);
    add(out, "C22.-1", anchor, {}, 3, pre, U_of({-1}),
        [](CheckContext& c) { return c.c(-2) * c.q() - c.c(7, 12) * c.P() * c.P() * b3(c); });
    add(out, "C22.-2", anchor, {}, 2, pre, U_of({-2}), [](CheckContext& c) {
        Residue q = c.q();
        return -q.pow(2) + c.c(2, 3) * c.P() * q.pow(3) + c.c(7, 6) * c.P() * b3(c);
    });
    add(out, "C22.-1,1", anchor, {}, 2, pre, U_of({-1, 1}), [](CheckContext& c) {
        Residue q = c.q();
        return q.pow(2) - c.c(2, 3) * c.P() * q.pow(3) - c.c(1, 12) * c.P() * b3(c);
    });
    add(out, "C22.1,-1", anchor, {}, 2, pre, U_of({1, -1}),
        [](CheckContext& c) { return c.c(-13, 12) * c.P() * b3(c); });
    struct Entry {
        std::vector<int> s;
        Value v;
    };
    std::vector<Entry> table{
        {{-3}, [](CheckContext& c) { return c.c(-1, 3) * c.q().pow(3) - c.c(7, 24) * b3(c); }},
        {{-2, 1}, [](CheckContext& c) { return c.c(1, 3) * c.q().pow(3) - c.c(23, 24) * b3(c); }},
        {{1, -2}, [](CheckContext& c) { return c.c(5, 4) * b3(c); }},
        {{2, -1}, [](CheckContext& c) { return c.c(-3, 4) * b3(c); }},
        {{-1, 2}, [](CheckContext& c) { return c.c(1, 3) * c.q().pow(3) + c.c(25, 24) * b3(c); }},
        {{1, 1, -1}, [](CheckContext& c) { return c.c(-1, 2) * b3(c); }},
        {{1, -1, 1}, [](CheckContext& c) { return c.c(1, 2) * b3(c); }},
        {{-1, 1, 1}, [](CheckContext& c) { return c.c(-1, 3) * c.q().pow(3) - c.c(7, 24) * b3(c); }},
        {{1, -3}, [](CheckContext& c) { return c.A() - c.Bc() + c.c(5, 4) * qb(c); }},
    };
    for (auto& e : table) add(out, "C22." + tag(e.s), anchor, {}, 1, pre, U_of(e.s), e.v);
    add(out, "C22.-4.a", anchor, {}, 1, pre, U_of({-4}), H_of({-1, 1, 1, 1}));
    add(out, "C22.-4.b", anchor, {}, 1, pre, U_of({-4}), [](CheckContext& c) { return -c.H({1, 1, 1, -1}); });
    add(out, "C22.-3,1", anchor, {}, 1, pre, U_of({-3, 1}), [](CheckContext& c) {
        return c.H({1, 1, 1, -1}) + c.Bc() - c.A() - c.c(5, 4) * qb(c);
    });
}

// increments |s_j| keeping its sign
std::vector<int> bump(std::vector<int> s, std::size_t j) {
    s[j] += s[j] > 0 ? 1 : -1;
    return s;
}

std::vector<int> reversed(std::vector<int> s) {
    std::reverse(s.begin(), s.end());
    return s;
}

void add_c23(std::vector<CongruenceCheck>& out, unsigned cap) {
    unsigned wmax = std::min(3u, cap > 0 ? cap - 1 : 0);
    for (unsigned w = 1; w <= wmax; ++w) {
        for (const auto& comp : signed_compositions(w)) {
            std::vector<int> s = comp.parts();
            unsigned neg = 0;
            for (int x : s) neg += x < 0;
            int sg = neg_one_pow(w);
            // (-1)^w 2^{+-p neg} [X(rev s) + p sum_j |s_j| X(rev(s (+) e_j))]
            auto dual = [s, neg, sg](SumFamily other, bool inverse_power) {
                return Value([=](CheckContext& c) {
                    Residue acc = c.sum(other, reversed(s), c.p() - 1);
                    Residue tail = c.c(0);
                    for (std::size_t j = 0; j < s.size(); ++j)
                        tail += c.c(std::abs(s[j])) * c.sum(other, reversed(bump(s, j)), c.p() - 1);
                    Residue scale = c.two(c.p() * neg);
                    if (inverse_power) scale = scale.inverse();
                    return c.c(sg) * scale * (acc + c.P() * tail);
                });
            };
            add(out, "C23.U." + tag(s), "U reversal mod p^2", {}, 2, at_least(w + 2), U_of(s), dual(kV, false));
            add(out, "C23.V." + tag(s), "V reversal mod p^2", {}, 2, at_least(w + 2), sum_of(kV, s), dual(kU, true));
        }
    }
    add(out, "C23.Vrev.-1", "V(-1) mod p^3", {}, 3, at_least(7), sum_of(kV, {-1}), [](CheckContext& c) {
        Residue P = c.P();
        return -(c.two(c.p()).inverse() * (c.U({-1}) + P * c.U({-2}) + P * P * c.U({-3})));
    });
}

struct XValue {
    long long num, den;
    std::string label;
};

const std::vector<XValue>& sample_x() {
    static const std::vector<XValue> xs{{-1, 1, "x-1"}, {2, 1, "x2"}, {1, 2, "x1_2"}};
    return xs;
}

std::vector<Residue> inverses(CheckContext& c) {
    std::vector<std::uint64_t> t = inverse_table(c.p() - 1, c.mod().m);
    std::vector<Residue> out;
    for (std::uint64_t j = 1; j < c.p(); ++j) out.emplace_back(t[j], c.mod());
    return out;
}

// S-type sum over 1 <= n_1 <= ... <= n_d <= p-1 with first factor (1-x)^{n_1}/n_1, minus S({1}^d)
Residue generating_lhs(CheckContext& c, Residue x, unsigned d) {
    std::vector<Residue> inv = inverses(c);
    std::vector<std::vector<Residue>> rows(d, inv);
    Residue base = c.c(1) - x, pw = c.c(1);
    for (auto& r : rows[0]) {
        pw *= base;
        r *= pw;
    }
    return nested_sum(rows, Order::Weak, c.mod()) - c.S(std::vector<int>(d, 1));
}

void add_c24(std::vector<CongruenceCheck>& out) {
    add_vector(
        out, "C24.p-1choosej", "(-1)^j C(p-1,j) mod p^3", {}, 3, at_least(7),
        [](CheckContext& c) {
            std::vector<Residue> v;
            for (std::uint64_t j = 1; j < c.p(); ++j) v.push_back(c.c(neg_one_pow(long(j))) * c.binom(c.p() - 1, j));
            return v;
        },
        [](CheckContext& c) {
            std::vector<Residue> v, inv = inverses(c);
            Residue h1 = c.c(0), h11 = c.c(0), P = c.P();
            for (std::uint64_t j = 1; j < c.p(); ++j) {
                h11 += h1 * inv[j - 1];
                h1 += inv[j - 1];
                v.push_back(c.c(1) - P * h1 + P * P * h11);
            }
            return v;
        });
    for (const auto& x : sample_x()) {
        for (unsigned d = 1; d <= 4; ++d) {
            std::string t = "." + x.label + ".d" + std::to_string(d);
            std::vector<long> params{x.num, x.den, long(d)};
            Value lhs = [x, d](CheckContext& c) { return generating_lhs(c, c.c(x.num, x.den), d); };
            add(out, "C24.mygeneral2" + t, "generating sum vs harmonic expansion mod p^3", params, 3, at_least(7), lhs,
                [x, d](CheckContext& c) {
                    std::vector<Residue> inv = inverses(c);
                    Residue xv = c.c(x.num, x.den), xp = c.c(1), h1 = c.c(0), h11 = c.c(0), P = c.P();
                    Residue acc = c.c(0);
                    for (std::uint64_t j = 1; j < c.p(); ++j) {
                        h11 += h1 * inv[j - 1];
                        h1 += inv[j - 1];
                        xp *= xv;
                        acc += xp * inv[j - 1].pow(d) * (c.c(1) - P * h1 + P * P * h11);
                    }
                    return acc;
                });
            add(out, "C24.mygeneral1" + t, "generating sum vs binomial sum at m = p-1", params, 3, at_least(7), lhs,
                [x, d](CheckContext& c) {
                    std::vector<Residue> inv = inverses(c);
                    Residue mx = -c.c(x.num, x.den), xp = c.c(1), acc = c.c(0);
                    for (std::uint64_t j = 1; j < c.p(); ++j) {
                        xp *= mx;
                        acc += xp * c.binom(c.p() - 1, j) * inv[j - 1].pow(d);
                    }
                    return acc;
                });
            add(out, "C24.binomialU" + t, "binomial-weighted S-type sum at m = p-1", params, 3, at_least(7),
                [x, d](CheckContext& c) {
                    std::vector<Residue> inv = inverses(c);
                    std::vector<std::vector<Residue>> rows(d, inv);
                    Residue base = c.c(1) - c.c(x.num, x.den), pw = c.c(1);
                    for (auto& r : rows[0]) {
                        pw *= base;
                        r *= pw;
                    }
                    for (std::uint64_t n = 1; n < c.p(); ++n)
                        rows[d - 1][n - 1] *= c.c(neg_one_pow(long(n))) * c.binom(c.p() - 1, n);
                    return nested_sum(rows, Order::Weak, c.mod());
                },
                [x, d](CheckContext& c) {
                    std::vector<Residue> inv = inverses(c);
                    Residue xv = c.c(x.num, x.den), xp = c.c(1), acc = c.c(0);
                    for (std::uint64_t k = 1; k < c.p(); ++k) {
                        xp *= xv;
                        acc += (xp - c.c(1)) * inv[k - 1].pow(d);
                    }
                    return acc;
                });
        }
    }
}

void add_c25(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (int a = -int(cap); a <= int(cap); ++a) {
        for (int b = -int(cap); b <= int(cap); ++b) {
            if (a == 0 || b == 0) continue;
            unsigned w = unsigned(std::abs(a) + std::abs(b));
            if (w + 1 > cap) continue;
            int sa = a > 0 ? 1 : -1, sb = b > 0 ? 1 : -1;
            int sg = neg_one_pow(a + b) * sa * sb;
            add(out, "C25.a" + std::to_string(a) + ".b" + std::to_string(b), "depth-2 reversal mod p^2", {a, b}, 2,
                at_least(w + 3), H_of({a, b}), [=](CheckContext& c) {
                    Residue P = c.P();
                    return c.c(sg) * (c.H({b, a}) + P * c.c(std::abs(b)) * c.H({b + sb, a}) +
                                      P * c.c(std::abs(a)) * c.H({b, a + sa}));
                });
        }
    }
}

void add_c26_to_c29(std::vector<CongruenceCheck>& out) {
    auto pre = at_least(7);
    add(out, "C26.-1,-1.p3", "H(-1,-1) mod p^3", {}, 3, pre, H_of({-1, -1}), [](CheckContext& c) {
        Residue q = c.q(), P = c.P();
        return c.c(2) * q.pow(2) + P * (c.c(2) * c.X(3) - c.c(2) * q.pow(3)) +
               P * P * (c.c(11, 6) * q.pow(4) + c.c(1, 2) * qb(c));
    });
    add(out, "C26.-1,-1", "H(-1,-1) mod p^2", {}, 2, pre, H_of({-1, -1}), [](CheckContext& c) {
        Residue q = c.q(), P = c.P();
        return c.c(2) * q.pow(2) - c.c(2) * P * q.pow(3) - c.c(1, 3) * P * b3(c);
    });
    add(out, "C26.1,-1", "H(1,-1) mod p^2", {}, 2, pre, H_of({1, -1}), [](CheckContext& c) {
        Residue q = c.q(), P = c.P();
        return q.pow(2) - P * q.pow(3) - c.c(13, 24) * P * b3(c);
    });
    add(out, "C26.-1,1", "H(-1,1) mod p^2", {}, 2, pre, H_of({-1, 1}), [](CheckContext& c) {
        Residue q = c.q(), P = c.P();
        return -q.pow(2) + P * q.pow(3) + c.c(1, 24) * P * b3(c);
    });
    add(out, "C26.-3", "H(-3) mod p^2", {}, 2, pre, H_of({-3}), [](CheckContext& c) { return c.c(3) * c.X(3); });
    add(out, "C26.-2,1", "H(-2,1) mod p^2", {}, 2, pre, H_of({-2, 1}),
        [](CheckContext& c) { return c.c(-3, 2) * c.X(3); });
    add(out, "C26.1,-2", "H(1,-2) mod p^2", {}, 2, pre, H_of({1, -2}),
        [](CheckContext& c) { return c.c(-3, 2) * c.X(3); });
    add(out, "C26.2,-1", "H(2,-1) mod p^2", {}, 2, pre, H_of({2, -1}), [](CheckContext& c) {
        return c.c(-3, 2) * c.X(3) - c.c(7, 6) * c.P() * qb(c) + c.P() * (c.Bc() - c.A());
    });
    add(out, "C26.-1,2", "H(-1,2) mod p^2", {}, 2, pre, H_of({-1, 2}), [](CheckContext& c) {
        return c.c(-3, 2) * c.X(3) - c.c(1, 6) * c.P() * qb(c) + c.P() * (c.A() - c.Bc());
    });

    add(out, "C27.-1", "U(-1) mod p^4", {}, 4, pre, U_of({-1}), [](CheckContext& c) {
        Residue P = c.P();
        return c.c(-2) * c.q() + c.c(7, 2) * c.X(3) * P * P + c.c(1, 2) * P * P * P * c.H({-3, 1});
    });

    add(out, "C28.-1,-2", "H(-1,-2) mod p^2", {}, 2, pre, H_of({-1, -2}), [](CheckContext& c) {
        return c.c(9, 2) * c.X(3) - c.c(5, 6) * c.P() * qb(c) + c.c(1, 4) * c.P() * c.h31();
    });
    add(out, "C28.-2,-1", "H(-2,-1) mod p^2", {}, 2, pre, H_of({-2, -1}), [](CheckContext& c) {
        return c.c(-9, 2) * c.X(3) - c.c(1, 6) * c.P() * qb(c) - c.c(1, 4) * c.P() * c.h31();
    });

    add(out, "C29.-1,-1,-1", "depth-3 mod p^2", {}, 2, pre, H_of({-1, -1, -1}), [](CheckContext& c) {
        Residue q = c.q();
        return c.c(-4, 3) * q.pow(3) + c.X(3) + c.P() * (c.c(2) * q.pow(4) + c.c(2, 3) * qb(c));
    });
    add(out, "C29.-1,1,-1", "depth-3 mod p^2", {}, 2, pre, H_of({-1, 1, -1}),
        [](CheckContext& c) { return c.c(1, 2) * c.P() * (qb(c) + c.Bc() - c.A()); });
    add(out, "C29.1,-1,-1", "depth-3 mod p^2", {}, 2, pre, H_of({1, -1, -1}), [](CheckContext& c) {
        Residue q = c.q();
        return -q.pow(3) + c.c(21, 4) * c.X(3) +
               c.P() * (c.c(3, 2) * q.pow(4) + c.c(3, 8) * qb(c) + c.c(1, 4) * c.A() - c.c(1, 4) * c.Bc()) +
               c.c(1, 8) * c.P() * c.h31();
    });
    add(out, "C29.-1,-1,1", "depth-3 mod p^2", {}, 2, pre, H_of({-1, -1, 1}), [](CheckContext& c) {
        Residue q = c.q();
        return q.pow(3) - c.c(21, 4) * c.X(3) +
               c.P() * (c.c(-3, 2) * q.pow(4) + c.c(1, 8) * qb(c) + c.c(1, 4) * c.A() - c.c(1, 4) * c.Bc()) -
               c.c(1, 8) * c.P() * c.h31();
    });
    add(out, "C29.1,-1,1", "depth-3 mod p^2", {}, 2, pre, H_of({1, -1, 1}), [](CheckContext& c) {
        return c.c(-2) * c.H({1, 1, -1}) + c.c(3) * c.X(3) + c.P() * (c.c(7, 6) * qb(c) + c.A() - c.Bc());
    });
    add(out, "C29.-1,1,1", "depth-3 mod p^2", {}, 2, pre, H_of({-1, 1, 1}), [](CheckContext& c) {
        return c.H({1, 1, -1}) - c.P() * (c.c(1, 2) * qb(c) + c.A() - c.Bc());
    });
}

std::vector<int> random_composition(std::mt19937_64& rng, unsigned weight) {
    std::vector<int> s;
    unsigned left = weight;
    while (left > 0) {
        int part = int(1 + rng() % left);
        left -= unsigned(part);
        s.push_back(rng() % 2 ? -part : part);
    }
    return s;
}

void add_c30_c31(std::vector<CongruenceCheck>& out, const CatalogOptions& options) {
    std::mt19937_64 rng(options.seed);
    unsigned cap = options.weight_cap;
    std::set<std::vector<int>> seen;
    for (int i = 0; i < 24 && cap >= 1; ++i) {
        unsigned w = unsigned(1 + rng() % cap);
        std::vector<int> s = random_composition(rng, w);
        if (!seen.insert(s).second) continue;
        int sign = 1;
        for (int x : s) sign *= x < 0 ? -1 : 1;
        int factor = sign * neg_one_pow(w);
        std::vector<int> r = reversed(s);
        add(out, "C30.H." + tag(s), "reversal relation", {}, 1, at_least(w + 1), H_of(s),
            [r, factor](CheckContext& c) { return c.c(factor) * c.H(r); });
        add(out, "C30.S." + tag(s), "reversal relation", {}, 1, at_least(w + 1), sum_of(kS, s),
            [r, factor](CheckContext& c) { return c.c(factor) * c.S(r); });
    }
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (int i = 0; i < 24 && cap >= 2; ++i) {
        unsigned w1 = unsigned(1 + rng() % (cap - 1));
        unsigned w2 = unsigned(1 + rng() % (cap - w1));
        Word a = random_composition(rng, w1), b = random_composition(rng, w2);
        if (!pairs.insert({a, b}).second) continue;
        add(out, "C31." + tag(a) + "*" + tag(b), "stuffle homomorphism", {}, 1, any_prime(),
            [a, b](CheckContext& c) { return c.H(a) * c.H(b); },
            [a, b](CheckContext& c) { return stuffle_product(a, b).evaluate(c.p() - 1, c.mod()); });
    }
}

void add_c32_to_c34(std::vector<CongruenceCheck>& out) {
    auto pre = at_least(7);
    add(out, "C32.1,2", "H(1,2) mod p^2", {}, 2, pre, H_of({1, 2}), [](CheckContext& c) { return c.c(-6) * c.X(3); });
    add(out, "C32.2,1", "H(2,1) mod p^2", {}, 2, pre, H_of({2, 1}), [](CheckContext& c) { return c.c(6) * c.X(3); });
    add(out, "C33.1,1,-1", "H(1,1,-1) through U-sums mod p^2", {}, 2, pre, H_of({1, 1, -1}), [](CheckContext& c) {
        return c.U({-3}) - c.P() * (c.U({-4}) + c.c(7, 12) * qb(c) + c.A() - c.Bc());
    });

    Value two_q = [](CheckContext& c) { return c.c(-2) * c.q(); };
    add(out, "C34.taux=-1", "intermediate", {}, 3, pre, [](CheckContext& c) { return c.U({-1}) - c.H({1}); },
        [two_q](CheckContext& c) {
            Residue P = c.P();
            return -P * c.H({-2}) + P * P * c.H({1, -2}) + two_q(c);
        });
    add(out, "C34.taux=1/2", "intermediate", {}, 3, pre,
        [](CheckContext& c) { return c.U({-1}) + c.two(c.p()) * c.H({1}); },
        [two_q](CheckContext& c) {
            Residue P = c.P();
            return P * P * c.U({-3}) + P * P * c.U({-2, 1}) + two_q(c);
        });
    add(out, "C34.taux=2", "intermediate", {}, 3, pre, [](CheckContext& c) { return c.H({-1}) - c.H({1}); },
        [two_q](CheckContext& c) {
            Residue P = c.P();
            return -P * c.U({-2}) + P * P * c.U({1, -2}) + two_q(c);
        });
    Value u2 = [](CheckContext& c) { return c.U({-1, 1}) + c.U({-2}); };
    add(out, "C34.myIIx=-1.a", "intermediate", {}, 2, pre, u2, [](CheckContext& c) {
        return c.H({1, 1}) + c.H({2}) + c.H({-2}) - c.P() * c.H({1, -2}) - c.P() * c.H({-3});
    });
    add(out, "C34.myIIx=-1.b", "intermediate", {}, 2, pre, u2,
        [](CheckContext& c) { return c.c(13, 12) * c.P() * b3(c); });
    Value u3 = [](CheckContext& c) { return c.U({-1, 1, 1}) + c.U({-1, 2}) + c.U({-2, 1}); };
    add(out, "C34.myIIIx=-1.a", "intermediate", {}, 1, pre, u3,
        [](CheckContext& c) { return c.H({-3}) + c.S({1, 1, 1}) - c.U({-3}); });
    add(out, "C34.myIIIx=-1.b", "intermediate", {}, 1, pre, u3,
        [](CheckContext& c) { return c.c(1, 3) * c.q().pow(3) - c.c(5, 24) * b3(c); });
    add(out, "C34.myIIIx=1/2", "intermediate", {}, 1, pre,
        [](CheckContext& c) { return c.U({1, 1, -1}) + c.U({1, -2}) + c.U({2, -1}); }, zero());
    add(out, "C34.tauS", "intermediate", {}, 2, pre,
        [](CheckContext& c) {
            Residue s = c.S({-1, 1, 1});
            return s + c.P() * (c.U({-4}) + c.H({-1, 2, 1}) + c.H({-2, 1, 1}) + c.H({-3, 1}) - c.H({1}) * s);
        },
        [](CheckContext& c) { return c.U({-3}) - c.H({1}); });
    add(out, "C34.myS", "intermediate", {}, 2, pre, [](CheckContext& c) { return c.S({-1, 1, 1}) - c.S({1, 1, 1}); },
        [](CheckContext& c) { return c.U({-3}) - c.P() * c.U({-4}) - c.P() * c.U({1, -3}); });
}

// depth reduction, kept to small primes since each side is O(p) sums
void add_c35(std::vector<CongruenceCheck>& out) {
    constexpr unsigned kWeight = 4;
    constexpr std::uint64_t kMaxPrime = 199;
    for (unsigned a = 1; a < kWeight; ++a) {
        for (unsigned tw = 1; a + tw <= kWeight; ++tw) {
            for (const auto& tail : signed_compositions(tw)) {
                std::string t = ".a" + std::to_string(a) + "." + tag(tail.parts());
                unsigned w = a + tw;
                Pre pre = [w](std::uint64_t p) { return p <= kMaxPrime && p > w; };
                std::vector<int> pos{int(a)}, neg{-int(a)};
                pos.insert(pos.end(), tail.parts().begin(), tail.parts().end());
                neg.insert(neg.end(), tail.parts().begin(), tail.parts().end());
                add(out, "C35.pos" + t, "positive-head reduction", {long(a)}, 1, pre, H_of(pos),
                    [a, tail](CheckContext& c) { return reduce_positive_head(a, tail, c.p()); });
                add(out, "C35.neg" + t, "negative-head reduction", {long(a)}, 1, pre, H_of(neg),
                    [a, tail](CheckContext& c) { return reduce_negative_head(a, tail, c.p()); });
            }
        }
    }
}

}  // namespace

void add_higher_families(std::vector<CongruenceCheck>& out, const CatalogOptions& options) {
    add_c22(out);
    add_c23(out, options.weight_cap);
    add_c24(out);
    add_c25(out, options.weight_cap);
    add_c26_to_c29(out);
    add_c30_c31(out, options);
    add_c32_to_c34(out);
    add_c35(out);
}

}  // namespace amhs
