#pragma once

#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"
#include "amhs/rational.hpp"
#include "amhs/residue.hpp"

#include <map>
#include <optional>
#include <string>

namespace amhs {

// Formal rational combination of words; zero coefficients are never stored.
class WordSum {
public:
    WordSum() = default;
    static WordSum unit() { return word({}); }
    static WordSum word(const Word& w, const Rational& coef = Rational(1));

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add(const Word& w, const Rational& coef);
    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    WordSum& operator*=(const Rational& c);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    friend WordSum operator*(WordSum a, const Rational& c) { return a *= c; }
    friend bool operator==(const WordSum&, const WordSum&) = default;

    // H evaluated termwise at n; the empty word evaluates to 1
    Rational evaluate(std::uint64_t n) const;
    Residue evaluate(std::uint64_t n, Modulus mod) const;

    // "2·(1,1) + 1·(2)"; terms in lexicographic word order
    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

WordSum stuffle_product(const Word& w1, const Word& w2);
WordSum stuffle_product(const WordSum& a, const WordSum& b);

// H(w1;n) H(w2;n) == sum of H over w1 * w2, exact or mod p^k
bool homomorphism_check(const Word& w1, const Word& w2, std::uint64_t n,
                        std::optional<Modulus> mod = std::nullopt);

// number of quasi-shuffles of words of depths d1, d2 counted with multiplicity
BigInt quasi_shuffle_count(unsigned d1, unsigned d2);

}  // namespace amhs
