#include "amhs/reduction.hpp"

#include "amhs/evaluator.hpp"
#include "amhs/specialnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace amhs {

namespace {

Composition with_head(int head, const Composition& tail) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), tail.parts().begin() + 1, tail.parts().end());
    return Composition(std::move(parts));
}

}  // namespace

ReductionTermSum positive_head_terms(unsigned a, const Composition& tail, std::uint64_t p) {
    if (a == 0 || p < a + 2) throw std::domain_error("reduction needs p >= a + 2");
    if (a + tail.weight() >= p) throw std::domain_error("reduction needs a + weight(tail) < p");
    ReductionTermSum sum{{}, p};
    int s1 = tail[0];
    Rational pa(static_cast<long>(p - a));
    sum.terms.push_back({Rational(-1) / Rational(static_cast<long>(a)),
                         with_head(oplus(static_cast<int>(a) - 1, s1), tail)});
    for (std::uint64_t k = 1; k + a + 1 <= p; ++k) {
        const Rational& b = bernoulli(static_cast<unsigned>(k));
        if (b.is_zero()) continue;
        Rational coef = Rational(binomial(static_cast<unsigned long>(p - a), k)) * b / pa;
        sum.terms.push_back({coef, with_head(oplus(static_cast<int>(k + a - 1), s1), tail)});
    }
    return sum;
}

ReductionTermSum negative_head_terms(unsigned a, const Composition& tail, std::uint64_t p) {
    if (a == 0 || p < a + 2) throw std::domain_error("reduction needs p >= a + 2");
    ReductionTermSum sum{{}, p};
    int s1 = tail[0];
    long pa = static_cast<long>(p - a);
    Rational lead = (Rational(1) - pow2(pa)) * bernoulli(static_cast<unsigned>(pa)) / Rational(pa);
    if (!lead.is_zero()) {
        sum.terms.push_back({lead, tail});
        sum.terms.push_back({-lead, with_head(-s1, tail)});
    }
    for (std::uint64_t k = 0; k + a + 2 <= p; ++k) {
        Rational e = euler_zero(static_cast<unsigned>(k)) / Rational(2);
        if (e.is_zero()) continue;
        Rational coef = -Rational(binomial(static_cast<unsigned long>(p - 1 - a), k)) * e;
        sum.terms.push_back({coef, with_head(oplus(static_cast<int>(k + a), -s1), tail)});
    }
    return sum;
}

Residue evaluate_direct(const ReductionTermSum& sum) {
    Modulus mod = Modulus::of(sum.p, 1);
    Residue total(0, mod);
    for (const auto& t : sum.terms)
        total += reduce_mod(t.coefficient, mod) * eval(SumFamily::H, t.composition, sum.p - 1, mod);
    return total;
}

Residue evaluate(const ReductionTermSum& sum) {
    Modulus mod = Modulus::of(sum.p, 1);
    const std::uint64_t p = sum.p, m = mod.m, n = p - 1;
    if (sum.terms.empty()) return Residue(0, mod);

    // suffix[j] = H(tail after the head) restricted to indices > j
    const Composition& first = sum.terms.front().composition;
    std::vector<std::uint64_t> suffix(n + 2, 1 % m);
    if (first.depth() > 1) {
        std::vector<std::vector<Residue>> w;
        for (std::size_t i = 1; i < first.depth(); ++i)
            w.push_back(part_weights(SumFamily::H, first[i], n, mod));
        auto s = suffix_sums(w, Order::Strict, mod);
        for (std::uint64_t j = 0; j + 1 <= n + 1; ++j) suffix[j] = s[j + 1].value();
        suffix[n + 1] = 0;
    }

    // group coefficients by head part, then sweep heads by increasing exponent
    std::map<int, std::uint64_t> by_head;
    for (const auto& t : sum.terms) {
        if (t.composition.depth() != first.depth() ||
            !std::equal(first.parts().begin() + 1, first.parts().end(), t.composition.parts().begin() + 1))
            throw std::invalid_argument("reduction terms must share their tail");
        auto& c = by_head[t.composition[0]];
        c = add_mod(c, reduce_mod(t.coefficient, mod).value(), m);
    }
    auto inv = inverse_table(n, m);
    std::uint64_t total = 0;
    for (int sign : {1, -1}) {
        std::vector<std::pair<unsigned, std::uint64_t>> heads;
        for (const auto& [h, c] : by_head)
            if ((h > 0) == (sign > 0) && c != 0) heads.emplace_back(static_cast<unsigned>(std::abs(h)), c);
        std::sort(heads.begin(), heads.end());
        std::vector<std::uint64_t> pw(n + 1, 1 % m);
        unsigned e = 0;
        for (const auto& [exp, coef] : heads) {
            if (exp - e > 8) {
                for (std::uint64_t j = 1; j <= n; ++j) pw[j] = mul_mod(pw[j], pow_mod(inv[j], exp - e, m), m);
            } else {
                for (unsigned step = e; step < exp; ++step)
                    for (std::uint64_t j = 1; j <= n; ++j) pw[j] = mul_mod(pw[j], inv[j], m);
            }
            e = exp;
            std::uint64_t h = 0;
            for (std::uint64_t j = 1; j <= n; ++j) {
                std::uint64_t term = mul_mod(pw[j], suffix[j], m);
                h = (sign < 0 && j % 2 == 1) ? sub_mod(h, term, m) : add_mod(h, term, m);
            }
            total = add_mod(total, mul_mod(coef, h, m), m);
        }
    }
    return Residue(total, mod);
}

Residue reduce_positive_head(unsigned a, const Composition& tail, std::uint64_t p) {
    return evaluate(positive_head_terms(a, tail, p));
}

Residue reduce_negative_head(unsigned a, const Composition& tail, std::uint64_t p) {
    return evaluate(negative_head_terms(a, tail, p));
}

}  // namespace amhs
