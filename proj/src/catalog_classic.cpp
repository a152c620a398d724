#include "catalog_util.hpp"

#include "amhs/composition.hpp"
#include "amhs/stuffle.hpp"

namespace amhs {

using namespace detail;

namespace {

constexpr SumFamily kH = SumFamily::H;
constexpr SumFamily kS = SumFamily::S;
constexpr SumFamily kU = SumFamily::U;
constexpr SumFamily kV = SumFamily::V;

void add_c01(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned k = 1; k <= cap; ++k) {
        Value rhs;
        if (k % 2 == 1) {
            rhs = [k](CheckContext& c) {
                auto p = c.p();
                return c.c(k * (k + 1), 2) * c.B(p - 2 - k) * c.inv(p - 2 - k) * c.P() * c.P();
            };
        } else {
            rhs = [k](CheckContext& c) { return c.c(-2 * static_cast<long long>(k)) * c.X(k + 1) * c.P(); };
        }
        Pre pre = at_least(k % 2 == 1 ? k + 3 : k + 4);
        add(out, "C01.k" + std::to_string(k), "H(k; p-1) mod p^3", {long(k)}, 3, pre, H_of({int(k)}), rhs);
        if (k == 4) {
            // at p = k + 3 the even case misses by 98 mod 343
            add(out, "C01.known-fail.k4.p7", "H(k; p-1) mod p^3 at p = k+3", {4}, 3, any_prime(),
                H_of({4}), rhs);
            out.back().known_fail = KnownFail{7, 98};
        }
    }
}

void add_c02(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned k = 1; k <= cap; ++k) {
        Value lhs = [k](CheckContext& c) { return c.half(kH, {int(k)}); };
        Value rhs;
        unsigned power;
        if (k == 1) {
            power = 3;
            rhs = [](CheckContext& c) {
                Residue q = c.q(), P = c.P();
                return c.c(-2) * q + P * q.pow(2) - c.c(2, 3) * P * P * q.pow(3) -
                       c.c(7, 12) * P * P * c.B(c.p() - 3);
            };
        } else if (k % 2 == 1) {
            power = 2;
            rhs = [k](CheckContext& c) { return c.c(2 * ((1LL << k) - 2)) * c.X(k); };
        } else {
            power = 3;
            rhs = [k](CheckContext& c) {
                return c.c(-static_cast<long long>(k) * ((1LL << (k + 1)) - 1)) * c.X(k + 1) * c.P();
            };
        }
        add(out, "C02.k" + std::to_string(k), "H(k; (p-1)/2)", {long(k)}, power, at_least(k + 4), lhs, rhs);
    }
}

void add_c03(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned a = 1; a <= cap; ++a) {
        if (a % 2 == 1) {
            add(out, "C03.a" + std::to_string(a), "H(-a) mod p, a odd", {long(a)}, 1, at_least(a + 2),
                H_of({-int(a)}),
                [a](CheckContext& c) { return c.c(-2, a) * c.EB(c.p() - a); });
        } else {
            add(out, "C03.a" + std::to_string(a), "H(-a) mod p^2, a even", {long(a)}, 2, at_least(a + 2),
                H_of({-int(a)}),
                [a](CheckContext& c) { return c.c(a, a + 1) * c.P() * c.EB(c.p() - 1 - a); });
        }
    }
}

void add_c04(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned w = 2; w <= cap; ++w) {
        for (unsigned a = 1; a < w; ++a) {
            unsigned b = w - a;
            int ia = int(a), ib = int(b);
            std::string t = ".a" + std::to_string(a) + ".b" + std::to_string(b);
            std::vector<long> params{long(a), long(b)};
            Pre pre = at_least(w + 2);
            auto form = [&](const std::string& name, SumFamily f, std::vector<int> s, Value rhs) {
                add(out, "C04." + name + t, "depth 2, " + name, params, 1, pre, sum_of(f, std::move(s)), rhs);
            };
            if (w % 2 == 1) {
                Value plain = [a, b, w](CheckContext& c) {
                    return c.c(neg_one_pow(b), w) * c.binom(w, a) * c.B(c.p() - w);
                };
                // (2^{p-w} - 1)/w (-1)^b C(w,a) B_{p-w}, written with EB
                Value both_neg = [a, b, w](CheckContext& c) {
                    return c.c(-neg_one_pow(b), w) * c.binom(w, a) * c.EB(c.p() - w);
                };
                Value h_mixed = [w](CheckContext& c) { return c.inv(w) * c.EB(c.p() - w); };
                Value s_mixed = [w](CheckContext& c) { return -(c.inv(w) * c.EB(c.p() - w)); };
                form("Hab", kH, {ia, ib}, plain);
                form("Sab", kS, {ia, ib}, plain);
                form("H-a-b", kH, {-ia, -ib}, both_neg);
                form("S-a-b", kS, {-ia, -ib}, both_neg);
                form("H-ab", kH, {-ia, ib}, h_mixed);
                form("Ha-b", kH, {ia, -ib}, h_mixed);
                form("S-ab", kS, {-ia, ib}, s_mixed);
                form("Sa-b", kS, {ia, -ib}, s_mixed);
            } else {
                Value both_neg = [a, b](CheckContext& c) {
                    return c.c(2, a * b) * c.EB(c.p() - a) * c.EB(c.p() - b);
                };
                form("Hab", kH, {ia, ib}, zero());
                form("Sab", kS, {ia, ib}, zero());
                form("H-a-b", kH, {-ia, -ib}, both_neg);
                form("S-a-b", kS, {-ia, -ib}, both_neg);
            }
        }
    }
}

// sum_k C(p-a,k) 2 (1-2^{2p-w-k}) B_k B_{2p-w-k} / ((p-a)(2p-w-k))
Residue c05_rhs(CheckContext& c, unsigned a, unsigned b) {
    auto p = c.p();
    Residue acc = c.c(0);
    for (std::uint64_t k = 0; k + a + 1 <= p; ++k) {
        if (k % 2 == 1 && k != 1) continue;
        std::uint64_t idx = 2 * p - a - b - k;
        if (idx % 2 == 1) continue;
        acc += c.binom(p - a, k) * c.B(unsigned(k)) * c.EB(unsigned(idx)) * c.inv(idx);
    }
    return c.c(2) * acc * c.inv(p - a);
}

Residue c06_rhs(CheckContext& c, unsigned a, unsigned b) {
    auto p = c.p();
    Residue acc = c.c(0);
    for (std::uint64_t k = 1; k + a + 1 <= p; ++k) {
        std::uint64_t idx, den;
        if (k + 2 + a + b <= p) {
            idx = p - a - b - k;
            den = a + b + k;
        } else {
            idx = 2 * p - 1 - a - b - k;
            den = 1 + a + b + k;
        }
        if ((k + 1) % 2 == 1 || idx % 2 == 1) continue;
        acc += c.binom(p - 1 - a, k) * c.EB(unsigned(k + 1)) * c.EB(unsigned(idx)) * c.inv(k + 1) * c.inv(den);
    }
    return c.c(2) * acc;
}

void add_c05_c06(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned w = 2; w <= cap; w += 2) {
        for (unsigned a = 1; a < w; ++a) {
            unsigned b = w - a;
            int ia = int(a), ib = int(b);
            std::string t = ".a" + std::to_string(a) + ".b" + std::to_string(b);
            std::vector<long> params{long(a), long(b)};
            Value r5 = [a, b](CheckContext& c) { return c05_rhs(c, a, b); };
            Value r6 = [a, b](CheckContext& c) { return c06_rhs(c, a, b); };
            auto neg = [](Value v) { return Value([v](CheckContext& c) { return -v(c); }); };
            Pre pre = at_least(w + 2);
            add(out, "C05.H" + t, "H(a,-b), even weight", params, 1, pre, sum_of(kH, {ia, -ib}), r5);
            add(out, "C05.S" + t, "S(a,-b), even weight", params, 1, pre, sum_of(kS, {ia, -ib}), r5);
            add(out, "C05.-S" + t, "-S(-b,a), even weight", params, 1, pre, neg(sum_of(kS, {-ib, ia})), r5);
            add(out, "C05.-H" + t, "-H(-b,a), even weight", params, 1, pre, neg(sum_of(kH, {-ib, ia})), r5);
            add(out, "C06.H" + t, "H(-a,b), even weight", params, 1, pre, sum_of(kH, {-ia, ib}), r6);
            add(out, "C06.S" + t, "S(-a,b), even weight", params, 1, pre, sum_of(kS, {-ia, ib}), r6);
            add(out, "C06.-S" + t, "-S(b,-a), even weight", params, 1, pre, neg(sum_of(kS, {ib, -ia})), r6);
            add(out, "C06.-H" + t, "-H(b,-a), even weight", params, 1, pre, neg(sum_of(kH, {ib, -ia})), r6);
        }
    }
}

void add_c07(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned w = 3; w <= cap; ++w) {
        for (unsigned a = 1; a + 2 <= w; ++a) {
            for (unsigned b = 1; a + b + 1 <= w; ++b) {
                int A = int(a), B = int(b), C = int(w - a - b);
                std::string t = ".a" + std::to_string(A) + ".b" + std::to_string(B) + ".c" + std::to_string(C);
                std::vector<long> params{A, B, C};
                Pre pre = at_least(w + 1);
                auto two_h = [](std::vector<int> s) {
                    return Value([s](CheckContext& c) { return c.c(2) * c.H(s); });
                };
                if (w % 2 == 0) {
                    add(out, "C07.a-bc" + t, "2H(a,-b,c)", params, 1, pre, two_h({A, -B, C}),
                        [=](CheckContext& c) { return c.H({-C - B, A}) + c.H({C, -B - A}); });
                    add(out, "C07.ab-c" + t, "2H(a,b,-c)", params, 1, pre, two_h({A, B, -C}),
                        [=](CheckContext& c) {
                            return -(c.H({-C}) * c.H({B, A})) + c.H({-C - B, A}) + c.H({-C, B + A});
                        });
                    add(out, "C07.-a-b-c" + t, "2H(-a,-b,-c)", params, 1, pre, two_h({-A, -B, -C}),
                        [=](CheckContext& c) {
                            return -(c.H({-C}) * c.H({-B, -A})) - c.H({-C, -B}) * c.H({-A}) +
                                   c.H({C + B, -A}) + c.H({-C, A + B});
                        });
                } else {
                    add(out, "C07.a-b-c" + t, "2H(a,-b,-c)", params, 1, pre, two_h({A, -B, -C}),
                        [=](CheckContext& c) {
                            return c.H({C + B, A}) + c.H({-C, -B - A}) - c.H({-C}) * c.H({-B, A});
                        });
                    add(out, "C07.-ab-c" + t, "2H(-a,b,-c)", params, 1, pre, two_h({-A, B, -C}),
                        [=](CheckContext& c) {
                            return -(c.H({-C}) * c.H({B, -A})) - c.H({-C, B}) * c.H({-A}) +
                                   c.H({-C - B, -A}) + c.H({-C, -B - A});
                        });
                }
                // one product expanded through the stuffle algebra
                Word left{A}, right{-B, C};
                add(out, "C07.stuffle" + t, "H(a) H(-b,c) as a stuffle sum", params, 1, pre,
                    [=](CheckContext& c) { return c.H(left) * c.H(right); },
                    [=](CheckContext& c) { return stuffle_product(left, right).evaluate(c.p() - 1, c.mod()); });
            }
        }
    }
}

Residue c08_rhs(CheckContext& c, unsigned a, unsigned b, unsigned cc) {
    auto p = c.p();
    unsigned w = a + b + cc;
    Residue acc = c.c(0);
    for (std::uint64_t k = 2; k <= p - w + 1; ++k) {
        if (k % 2 == 1) continue;
        acc += c.binom(p - a, p - w - k + 1) * c.binom(k + cc - 1, cc) * c.EB(unsigned(k)) * c.inv(a * k) *
               c.B(unsigned(p - w - k + 1));
    }
    for (std::uint64_t k = p + 1 - b - cc; k <= p - cc; ++k) {
        if (k % 2 == 1) continue;
        acc += c.binom(p - a, 2 * p - w - k) * c.binom(k + cc - 1, cc) * c.EB(unsigned(k)) * c.inv(a * k) *
               c.B(unsigned(2 * p - w - k));
    }
    acc += c.EB(unsigned(p - cc)) * c.EB(unsigned(p - a - b)) * c.inv((a + b) * cc);
    return -acc;
}

void add_c08(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned w = 4; w <= cap; w += 2) {
        for (unsigned a = 1; a + 2 <= w; ++a) {
            for (unsigned b = 1; a + b + 1 <= w; ++b) {
                unsigned cc = w - a - b;
                std::string t = ".a" + std::to_string(a) + ".b" + std::to_string(b) + ".c" + std::to_string(cc);
                add(out, "C08" + t, "H(a,-b,-c), even weight", {long(a), long(b), long(cc)}, 1, at_least(w + 3),
                    H_of({int(a), -int(b), -int(cc)}),
                    [a, b, cc](CheckContext& c) { return c08_rhs(c, a, b, cc); });
            }
        }
    }
    add(out, "C08.known-fail.p7", "H(1,-2,-3) at p = 7 misses by 5", {1, 2, 3}, 1, any_prime(),
        H_of({1, -2, -3}), [](CheckContext& c) { return c08_rhs(c, 1, 2, 3); });
    out.back().known_fail = KnownFail{7, 5};
}

void add_c09(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned a = 1; 2 * a <= cap; ++a) {
        for (unsigned l = 2; a * l <= cap; ++l) {
            std::vector<int> s(l, -int(a));
            long long fact = 1;
            for (unsigned i = 2; i <= l; ++i) fact *= i;
            add(out, "C09.a" + std::to_string(a) + ".l" + std::to_string(l), "homogeneous H({-a}^l)",
                {long(a), long(l)}, 1, at_least(a * l + 2),
                [s, fact](CheckContext& c) { return c.c(fact) * c.H(s); },
                [a, l](CheckContext& c) {
                    Residue acc = c.c(0);
                    for (const auto& lam : odd_partitions(l)) {
                        Residue term = c.red(Rational(c_lambda(lam)));
                        for (unsigned part : lam.parts()) term *= c.H({-int(part * a)});
                        acc += term;
                    }
                    return acc;
                });
        }
    }
    struct Explicit {
        unsigned l;
        std::function<Residue(CheckContext&, Residue, Residue)> f;
    };
    std::vector<Explicit> table{
        {2, [](CheckContext& c, Residue q, Residue) { return c.c(2) * q.pow(2); }},
        {3, [](CheckContext& c, Residue q, Residue b) { return c.c(-4, 3) * q.pow(3) - c.c(1, 6) * b; }},
        {4, [](CheckContext& c, Residue q, Residue b) { return c.c(2, 3) * q.pow(4) + c.c(1, 3) * q * b; }},
        {5,
         [](CheckContext& c, Residue q, Residue b) {
             return c.c(-4, 15) * q.pow(5) - c.c(1, 3) * q.pow(2) * b - c.c(3, 40) * c.B(c.p() - 5);
         }},
        {6,
         [](CheckContext& c, Residue q, Residue b) {
             return c.c(4, 45) * q.pow(6) + c.c(2, 9) * q.pow(3) * b + c.c(1, 72) * b * b +
                    c.c(3, 20) * q * c.B(c.p() - 5);
         }},
    };
    for (const auto& e : table) {
        auto f = e.f;
        add(out, "C09.m1.l" + std::to_string(e.l), "H({-1}^l) closed form", {long(e.l)}, 1, at_least(e.l + 3),
            H_of(std::vector<int>(e.l, -1)),
            [f](CheckContext& c) { return f(c, c.q(), c.B(c.p() - 3)); });
    }
    add(out, "C09.H-1", "H(-1) mod p^3", {}, 3, at_least(7), H_of({-1}), [](CheckContext& c) {
        Residue q = c.q(), P = c.P();
        return c.c(-2) * q + P * q.pow(2) - c.c(2, 3) * P * P * q.pow(3) - c.c(1, 4) * P * P * c.B(c.p() - 3);
    });
}

void add_c10(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned w = 1; w <= cap; ++w) {
        for (const auto& comp : signed_compositions(w)) {
            const auto& s = comp.parts();
            if (comp != reverse(comp)) continue;
            unsigned negs = 0;
            for (int x : s) negs += x < 0;
            if (negs % 2 == w % 2) continue;
            add(out, "C10.H." + tag(s), "palindrome vanishing", {}, 1, at_least(w + 1), H_of(s), zero());
            add(out, "C10.S." + tag(s), "palindrome vanishing", {}, 1, at_least(w + 1), sum_of(kS, s), zero());
        }
    }
}

void add_c11(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned n = 0; n < cap; ++n) {
        std::vector<int> head{-1}, tail(n, 1);
        head.insert(head.end(), tail.begin(), tail.end());
        std::vector<int> back(n, 1);
        back.push_back(-1);
        int sg = neg_one_pow(n);
        int N = int(n);
        Value base = sum_of(kU, {-N - 1});
        auto signed_sum = [](SumFamily f, std::vector<int> s, long long factor) {
            return Value([f, s, factor](CheckContext& c) { return c.c(factor) * c.sum(f, s, c.p() - 1); });
        };
        std::string t = ".n" + std::to_string(n);
        Pre pre = at_least(n + 3);
        add(out, "C11.H" + t, "H(-1,{1}^n) vs U(-n-1)", {N}, 1, pre, signed_sum(kH, head, 1), base);
        add(out, "C11.S" + t, "S(-1,{1}^n) vs U(-n-1)", {N}, 1, pre, signed_sum(kS, head, 1), base);
        add(out, "C11.Hr" + t, "H({1}^n,-1) vs U(-n-1)", {N}, 1, pre, signed_sum(kH, back, sg), base);
        add(out, "C11.Sr" + t, "S({1}^n,-1) vs U(-n-1)", {N}, 1, pre, signed_sum(kS, back, sg), base);
        add(out, "C11.V" + t, "V(-n-1) vs U(-n-1)", {N}, 1, pre, signed_sum(kV, {-N - 1}, -2 * sg), base);
    }
}

void add_c12_c14(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (unsigned a = 1; a <= cap; ++a) {
        for (unsigned m = 0; a * (m + 1) <= cap; ++m) {
            for (unsigned n = 0; a * (m + n + 1) <= cap; ++n) {
                int A = int(a);
                auto pattern = [](int outer, int mid, unsigned m, unsigned n) {
                    std::vector<int> s(m, outer);
                    s.push_back(mid);
                    s.insert(s.end(), n, outer);
                    return s;
                };
                std::string t = ".a" + std::to_string(a) + ".m" + std::to_string(m) + ".n" + std::to_string(n);
                std::vector<long> params{A, long(m), long(n)};
                Pre pre = at_least(a * (m + n) + 3);
                auto s = pattern(A, -A, m, n), r = pattern(A, -A, n, m);
                int sg1 = neg_one_pow(m + n), sg2 = neg_one_pow((m + n + 1) * (a + 1));
                add(out, "C12.1" + t, "H({a}^m,-a,{a}^n) vs reversed S", params, 1, pre, H_of(s),
                    [r, sg1](CheckContext& c) { return c.c(sg1) * c.S(r); });
                add(out, "C12.2" + t, "H({a}^m,-a,{a}^n) vs S", params, 1, pre, H_of(s),
                    [s, sg2](CheckContext& c) { return c.c(sg2) * c.S(s); });
                if (a % 2 == 0) {
                    auto s4 = pattern(-A, A, m, n), r4 = pattern(-A, A, n, m);
                    add(out, "C14.1" + t, "H({-a}^m,a,{-a}^n) vs S", params, 1, pre, H_of(s4),
                        [s4](CheckContext& c) { return c.S(s4); });
                    add(out, "C14.2" + t, "H({-a}^m,a,{-a}^n) vs reversed S", params, 1, pre, H_of(s4),
                        [r4, sg1](CheckContext& c) { return c.c(sg1) * c.S(r4); });
                }
            }
        }
    }
}

// Coefficients of the F_p[x] polynomial sum over index tuples of x^{i_k} w(i_1)...w(i_d),
// w(i) = (+-1)^i / i^a, strict or weak indices.
std::vector<std::uint64_t> index_polynomial(std::uint64_t p, unsigned a, unsigned d, unsigned k, bool alternating,
                                            bool strict) {
    std::vector<std::uint64_t> inv = inverse_table(p - 1, p);
    std::vector<std::uint64_t> w(p, 0);
    for (std::uint64_t i = 1; i < p; ++i) {
        std::uint64_t v = pow_mod(inv[i], a, p);
        w[i] = alternating && i % 2 == 1 ? (p - v) % p : v;
    }
    unsigned d1 = k - 1, d2 = d - k;
    // pre[j][i]: j indices all <= i; suf[j][i]: j indices all >= i
    std::vector<std::vector<std::uint64_t>> pre(d1 + 1, std::vector<std::uint64_t>(p + 1, 0));
    std::vector<std::vector<std::uint64_t>> suf(d2 + 1, std::vector<std::uint64_t>(p + 1, 0));
    std::fill(pre[0].begin(), pre[0].end(), 1);
    std::fill(suf[0].begin(), suf[0].end(), 1);
    for (unsigned j = 1; j <= d1; ++j)
        for (std::uint64_t i = 1; i < p; ++i) {
            std::uint64_t prev = strict ? pre[j - 1][i - 1] : pre[j - 1][i];
            pre[j][i] = add_mod(pre[j][i - 1], mul_mod(prev, w[i], p), p);
        }
    for (unsigned j = 1; j <= d2; ++j)
        for (std::uint64_t i = p - 1; i >= 1; --i) {
            std::uint64_t prev = strict ? suf[j - 1][i + 1] : suf[j - 1][i];
            suf[j][i] = add_mod(suf[j][i + 1], mul_mod(prev, w[i], p), p);
        }
    std::vector<std::uint64_t> coef(p, 0);
    for (std::uint64_t i = 1; i < p; ++i) {
        std::uint64_t left = strict ? pre[d1][i - 1] : pre[d1][i];
        std::uint64_t right = strict ? suf[d2][i + 1] : suf[d2][i];
        coef[i] = mul_mod(mul_mod(left, right, p), w[i], p);
    }
    return coef;
}

// value of the polynomial at every x in F_p, times sign
std::vector<Residue> values_everywhere(const std::vector<std::uint64_t>& coef, std::uint64_t p, int sign,
                                       Modulus mod) {
    std::vector<Residue> out;
    out.reserve(p);
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        if (p < (1u << 15)) {
            std::uint32_t a32 = 0, x32 = std::uint32_t(x), p32 = std::uint32_t(p);
            for (std::size_t i = coef.size(); i-- > 0;) a32 = (a32 * x32 + std::uint32_t(coef[i])) % p32;
            acc = a32;
        } else {
            for (std::size_t i = coef.size(); i-- > 0;) acc = (acc * x + coef[i]) % p;
        }
        if (sign < 0) acc = (p - acc) % p;
        out.emplace_back(acc, mod);
    }
    return out;
}

void add_c13(std::vector<CongruenceCheck>& out, unsigned cap) {
    for (int alt = 0; alt <= 1; ++alt) {
        for (unsigned a = 1; a <= cap; ++a) {
            // the boundary conventions behind the alternating identity need a even
            if (alt && a % 2 == 1) continue;
            for (unsigned d = 1; d * a <= cap; ++d) {
                for (unsigned k = 1; k <= d; ++k) {
                    std::string id = std::string("C13.") + (alt ? "hs" : "HS") + ".a" + std::to_string(a) + ".d" +
                                     std::to_string(d) + ".k" + std::to_string(k);
                    bool alternating = alt;
                    add_vector(
                        out, id, alt ? "h_{d,k} + (-1)^d s_{d,d+1-k} = 0 in F_p[x]" : "H_{d,k} + (-1)^d S_{d,d+1-k} = 0 in F_p[x]",
                        {long(a), long(d), long(k)}, 1, at_least(d * a + 3),
                        [=](CheckContext& c) {
                            return values_everywhere(index_polynomial(c.p(), a, d, k, alternating, true), c.p(), 1,
                                                     c.mod());
                        },
                        [=](CheckContext& c) {
                            return values_everywhere(index_polynomial(c.p(), a, d, d + 1 - k, alternating, false),
                                                     c.p(), d % 2 == 0 ? -1 : 1, c.mod());
                        });
                }
            }
        }
    }
}

}  // namespace

void add_classic_families(std::vector<CongruenceCheck>& out, const CatalogOptions& options) {
    unsigned cap = options.weight_cap;
    add_c01(out, cap);
    add_c02(out, cap);
    add_c03(out, cap);
    add_c04(out, cap);
    add_c05_c06(out, cap);
    add_c07(out, cap);
    add_c08(out, cap);
    add_c09(out, cap);
    add_c10(out, cap);
    add_c11(out, cap);
    add_c12_c14(out, cap);
    add_c13(out, cap);
}

}  // namespace amhs
