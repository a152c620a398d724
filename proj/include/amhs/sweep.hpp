#pragma once

#include "amhs/registry.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace amhs {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
    std::uint64_t prime_lo = 7;
    std::uint64_t prime_hi = 100;
    std::vector<std::string> suites;  // id prefixes; empty or "all" selects everything
    std::optional<unsigned> power_override;
    unsigned jobs = 1;
    std::uint64_t seed = CatalogOptions{}.seed;
    unsigned weight_cap = CatalogOptions{}.weight_cap;
    bool timing = true;  // false writes 0 for every elapsed field
};

struct SweepSummary {
    std::size_t pass = 0, fail = 0, skipped = 0;
    std::int64_t wall_us = 0;
    std::size_t total() const { return pass + fail + skipped; }
};

struct Report {
    std::vector<CheckResult> results;  // sorted by (id, p)
    SweepSummary summary;
};

// throws UsageError
void validate(const SweepConfig& config);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);
std::vector<CongruenceCheck> select(std::vector<CongruenceCheck> checks, const std::vector<std::string>& suites);

Report run_sweep(const SweepConfig& config, const std::vector<CongruenceCheck>& checks);
// the catalog built from the config
Report run_sweep(const SweepConfig& config);

std::string json_line(const CheckResult& r, bool timing);
std::string summary_line(const SweepSummary& s, bool timing);
void write_report(std::ostream& os, const Report& report, bool timing);

// 0 when nothing failed, 1 otherwise
int exit_code(const Report& report);

}  // namespace amhs
