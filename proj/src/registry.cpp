#include "amhs/registry.hpp"

#include <chrono>
#include <set>

namespace amhs {

Residue CheckContext::c(long long num, long long den) const {
    Residue n = Residue::from_int(num, mod_);
    if (den == 1) return n;
    return n * Residue::from_int(den, mod_).inverse();
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::vector<CongruenceCheck> catalog(const CatalogOptions& options) {
    std::vector<CongruenceCheck> out;
    add_classic_families(out, options);
    add_weight4_families(out, options);
    add_higher_families(out, options);
    std::set<std::string> seen;
    for (const auto& c : out)
        if (!seen.insert(c.id).second) throw std::logic_error("duplicate check id " + c.id);
    return out;
}

namespace {

// short vectors are listed; long ones are reported through a positional fingerprint
std::string render(const std::vector<Residue>& v) {
    if (v.size() == 1) return v[0].str();
    if (v.empty()) return "";
    if (v.size() <= 8) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + "]";
    }
    Modulus mod = v[0].modulus();
    Residue acc(0, mod), base(1000003 % mod.m, mod);
    for (const auto& r : v) acc = acc * base + r;
    return "#" + acc.str();
}

}  // namespace

CheckResult run_check(const CongruenceCheck& check, PrimeContext& ctx,
                      std::optional<unsigned> power_override) {
    CheckResult res;
    res.id = check.id;
    res.p = ctx.p();
    res.k = power_override ? std::min(check.power, *power_override) : check.power;
    auto start = std::chrono::steady_clock::now();
    auto stop_clock = [&] {
        res.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    };
    if (!check.precondition(ctx.p()) || (check.known_fail && check.known_fail->p != ctx.p())) {
        res.status = CheckStatus::Skipped;
        stop_clock();
        return res;
    }
    try {
        CheckContext cc(ctx, res.k);
        std::vector<Residue> lhs = check.lhs(cc);
        std::vector<Residue> rhs = check.rhs(cc);
        res.lhs = render(lhs);
        res.rhs = render(rhs);
        if (lhs.size() != rhs.size()) {
            res.status = CheckStatus::Fail;
            res.diagnostic = "sides have different lengths";
        } else if (check.known_fail) {
            Residue delta = lhs.at(0) - rhs.at(0);
            Residue want = Residue::from_int(check.known_fail->delta, cc.mod());
            res.status = delta == want ? CheckStatus::Pass : CheckStatus::Fail;
            res.diagnostic = "delta " + delta.str();
        } else {
            res.status = CheckStatus::Pass;
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                if (!(lhs[i] == rhs[i])) {
                    res.status = CheckStatus::Fail;
                    res.diagnostic = "first mismatch at entry " + std::to_string(i) + ": " +
                                     lhs[i].str() + " vs " + rhs[i].str();
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        res.status = CheckStatus::Fail;
        res.diagnostic = e.what();
    }
    stop_clock();
    return res;
}

CheckResult run_check(const CongruenceCheck& check, std::uint64_t p,
                      std::optional<unsigned> power_override) {
    PrimeContext ctx(p);
    return run_check(check, ctx, power_override);
}

}  // namespace amhs
