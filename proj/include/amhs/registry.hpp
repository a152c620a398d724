#pragma once

#include "amhs/prime_context.hpp"
#include "amhs/residue.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace amhs {

// Arithmetic shorthand handed to check recipes: one prime, one power.
class CheckContext {
public:
    CheckContext(PrimeContext& prime, unsigned k) : ctx_(prime), k_(k), mod_(prime.mod(k)) {}

    std::uint64_t p() const { return ctx_.p(); }
    unsigned k() const { return k_; }
    Modulus mod() const { return mod_; }
    PrimeContext& prime() { return ctx_; }

    Residue c(long long num, long long den = 1) const;
    Residue red(const Rational& r) const { return reduce_mod(r, mod_); }
    // p itself as a residue
    Residue P() const { return Residue(mod_.p % mod_.m, mod_); }
    Residue inv(std::uint64_t j) const { return Residue(j, mod_).inverse(); }
    Residue two(std::uint64_t e) const { return Residue(2, mod_).pow(e); }

    Residue q() { return red(ctx_.fermat_quotient_exact()); }
    Residue B(unsigned n) { return ctx_.bernoulli(n, k_); }
    // (1 - 2^n) B_n
    Residue EB(unsigned n) { return ctx_.euler_bernoulli(n, k_); }
    Residue X(unsigned j) { return ctx_.chi(j, k_); }
    Residue binom(std::uint64_t n, std::uint64_t j) {
        return j > n ? Residue(0, mod_) : ctx_.binomial_row(n)[j].project(k_);
    }

    Residue H(const std::vector<int>& s) { return ctx_.full(SumFamily::H, s, k_); }
    Residue S(const std::vector<int>& s) { return ctx_.full(SumFamily::S, s, k_); }
    Residue U(const std::vector<int>& s) { return ctx_.full(SumFamily::U, s, k_); }
    Residue V(const std::vector<int>& s) { return ctx_.full(SumFamily::V, s, k_); }
    Residue sum(SumFamily f, const std::vector<int>& s, std::uint64_t n) { return ctx_.sum(f, s, n, k_); }
    Residue half(SumFamily f, const std::vector<int>& s) { return sum(f, s, (p() - 1) / 2); }
    Residue h31() { return half(SumFamily::H, {3, 1}); }

    Residue A() { return ctx_.constants().A.project(k_); }
    Residue Bc() { return ctx_.constants().B.project(k_); }
    Residue C() { return ctx_.constants().C.project(k_); }
    Residue D() { return ctx_.constants().D.project(k_); }
    Residue E() { return ctx_.constants().E.project(k_); }
    Residue F() { return ctx_.constants().F.project(k_); }
    Residue G() { return ctx_.constants().G.project(k_); }
    Residue J() { return ctx_.constants().J.project(k_); }
    Residue K() { return ctx_.constants().K.project(k_); }

private:
    PrimeContext& ctx_;
    unsigned k_;
    Modulus mod_;
};

// A side may produce several residues (coefficient vectors, point values);
// the sides agree when every entry agrees.
using Recipe = std::function<std::vector<Residue>(CheckContext&)>;

struct KnownFail {
    std::uint64_t p;
    long long delta;  // lhs - rhs reproduced by the counterexample
};

struct CongruenceCheck {
    std::string id;
    std::string anchor;
    std::vector<long> params;
    unsigned power = 1;
    std::function<bool(std::uint64_t)> precondition;
    Recipe lhs;
    Recipe rhs;
    std::optional<KnownFail> known_fail;
};

enum class CheckStatus { Pass, Fail, Skipped };
const char* status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::string lhs;
    std::string rhs;
    CheckStatus status = CheckStatus::Skipped;
    std::int64_t elapsed_us = 0;
    std::string diagnostic;
};

struct CatalogOptions {
    unsigned weight_cap = 6;
    std::uint64_t seed = 20240601;
};

std::vector<CongruenceCheck> catalog(const CatalogOptions& options = {});

// power_override lowers the modulus exponent of checks stated at a higher power
CheckResult run_check(const CongruenceCheck& check, PrimeContext& ctx,
                      std::optional<unsigned> power_override = std::nullopt);
CheckResult run_check(const CongruenceCheck& check, std::uint64_t p,
                      std::optional<unsigned> power_override = std::nullopt);

// families in three groups; used by catalog()
void add_classic_families(std::vector<CongruenceCheck>& out, const CatalogOptions& options);
void add_weight4_families(std::vector<CongruenceCheck>& out, const CatalogOptions& options);
void add_higher_families(std::vector<CongruenceCheck>& out, const CatalogOptions& options);

}  // namespace amhs
