#pragma once

#include "amhs/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amhs {

struct NotPIntegral : std::domain_error {
    using std::domain_error::domain_error;
};

// Z/p^k Z, p^k must stay below 2^62.
struct Modulus {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t m = 0;

    static Modulus of(std::uint64_t p, unsigned k);
    Modulus lower(unsigned j) const { return of(p, j); }
    friend bool operator==(const Modulus&, const Modulus&) = default;
};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// inverse of a unit; throws NotPIntegral when gcd(a, m) != 1
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

class Residue {
public:
    Residue() = default;
    Residue(std::uint64_t value, Modulus mod) : v_(value % mod.m), mod_(mod) {}
    static Residue from_int(long long x, Modulus mod);

    std::uint64_t value() const { return v_; }
    const Modulus& modulus() const { return mod_; }
    std::uint64_t p() const { return mod_.p; }
    unsigned k() const { return mod_.k; }

    Residue operator-() const { return Residue(v_ == 0 ? 0 : mod_.m - v_, mod_); }
    Residue& operator+=(const Residue& o) { check(o); v_ = add_mod(v_, o.v_, mod_.m); return *this; }
    Residue& operator-=(const Residue& o) { check(o); v_ = sub_mod(v_, o.v_, mod_.m); return *this; }
    Residue& operator*=(const Residue& o) { check(o); v_ = mul_mod(v_, o.v_, mod_.m); return *this; }
    Residue& operator*=(long long c) { return *this *= from_int(c, mod_); }

    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator*(Residue a, long long c) { return a *= c; }
    friend Residue operator*(long long c, Residue a) { return a *= c; }

    Residue pow(std::uint64_t e) const { return Residue(pow_mod(v_, e, mod_.m), mod_); }
    bool is_unit() const;
    Residue inverse() const;
    // image in Z/p^j Z, j <= k
    Residue project(unsigned j) const;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.mod_ == b.mod_ && a.v_ == b.v_;
    }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const Residue& o) const {
        if (!(mod_ == o.mod_)) throw std::invalid_argument("residue moduli differ");
    }
    std::uint64_t v_ = 0;
    Modulus mod_{};
};

Residue reduce_mod(const Rational& r, std::uint64_t p, unsigned k);
Residue reduce_mod(const Rational& r, Modulus mod);

}  // namespace amhs
