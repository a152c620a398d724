#include "amhs/stuffle.hpp"

#include <algorithm>

namespace amhs {

WordSum WordSum::word(const Word& w, const Rational& coef) {
    WordSum s;
    s.add(w, coef);
    return s;
}

Rational WordSum::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordSum::add(const Word& w, const Rational& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coef] : terms_) coef *= c;
    return *this;
}

Rational WordSum::evaluate(std::uint64_t n) const {
    Rational total;
    for (const auto& [w, c] : terms_)
        total += c * (w.empty() ? Rational(1) : eval(SumFamily::H, Composition(w), n));
    return total;
}

Residue WordSum::evaluate(std::uint64_t n, Modulus mod) const {
    Residue total(0, mod);
    for (const auto& [w, c] : terms_)
        total += reduce_mod(c, mod) *
                 (w.empty() ? Residue(1, mod) : eval(SumFamily::H, Composition(w), n, mod));
    return total;
}

std::string WordSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coef = c.str();
        if (!first) {
            if (c.sign() < 0) {
                s += " - ";
                coef = (-c).str();
            } else {
                s += " + ";
            }
        }
        s += coef + "·(" + format_word(w) + ")";
        first = false;
    }
    return s;
}

namespace {

Word prepend(int letter, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(letter);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

WordSum prefix_all(int letter, const WordSum& s) {
    WordSum out;
    for (const auto& [w, c] : s.terms()) out.add(prepend(letter, w), c);
    return out;
}

}  // namespace

WordSum stuffle_product(const Word& w1, const Word& w2) {
    if (w1.empty()) return WordSum::word(w2);
    if (w2.empty()) return WordSum::word(w1);
    Word r1(w1.begin() + 1, w1.end()), r2(w2.begin() + 1, w2.end());
    int s = w1.front(), t = w2.front();
    WordSum out = prefix_all(s, stuffle_product(r1, w2));
    out += prefix_all(t, stuffle_product(w1, r2));
    out += prefix_all(oplus(s, t), stuffle_product(r1, r2));
    return out;
}

WordSum stuffle_product(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [w1, c1] : a.terms())
        for (const auto& [w2, c2] : b.terms()) out += stuffle_product(w1, w2) * (c1 * c2);
    return out;
}

bool homomorphism_check(const Word& w1, const Word& w2, std::uint64_t n, std::optional<Modulus> mod) {
    WordSum product = stuffle_product(w1, w2);
    WordSum a = WordSum::word(w1), b = WordSum::word(w2);
    if (mod) return a.evaluate(n, *mod) * b.evaluate(n, *mod) == product.evaluate(n, *mod);
    return a.evaluate(n) * b.evaluate(n) == product.evaluate(n);
}

BigInt quasi_shuffle_count(unsigned d1, unsigned d2) {
    // choose j merged positions: (d1+d2-j)! / (j! (d1-j)! (d2-j)!)
    BigInt total = 0;
    for (unsigned j = 0; j <= std::min(d1, d2); ++j)
        total += binomial(d1 + d2 - j, j) * binomial(d1 + d2 - 2 * j, d1 - j);
    return total;
}

}  // namespace amhs
