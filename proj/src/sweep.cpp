#include "amhs/sweep.hpp"

#include "amhs/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace amhs {

void validate(const SweepConfig& c) {
    if (c.prime_lo < 7) throw UsageError("prime range must start at 7 or above");
    if (c.prime_lo > c.prime_hi) throw UsageError("empty prime range");
    if (c.jobs < 1) throw UsageError("jobs must be at least 1");
    if (c.power_override && *c.power_override < 1) throw UsageError("power must be at least 1");
    if (c.weight_cap < 1) throw UsageError("weight cap must be at least 1");
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::vector<CongruenceCheck> select(std::vector<CongruenceCheck> checks, const std::vector<std::string>& suites) {
    if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) return checks;
    std::vector<CongruenceCheck> out;
    for (auto& c : checks)
        for (const auto& s : suites)
            if (c.id.compare(0, s.size(), s) == 0) {
                out.push_back(std::move(c));
                break;
            }
    return out;
}

Report run_sweep(const SweepConfig& config, const std::vector<CongruenceCheck>& checks) {
    validate(config);
    auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> primes = primes_in(config.prime_lo, config.prime_hi);
    std::vector<std::vector<CheckResult>> per_prime(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            PrimeContext ctx(primes[i]);
            auto& bucket = per_prime[i];
            bucket.reserve(checks.size());
            for (const auto& check : checks) bucket.push_back(run_check(check, ctx, config.power_override));
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(1, primes.size()))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Report report;
    for (auto& bucket : per_prime)
        for (auto& r : bucket) report.results.push_back(std::move(r));
    std::sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.id != b.id ? a.id < b.id : a.p < b.p;
    });
    for (const auto& r : report.results) {
        switch (r.status) {
            case CheckStatus::Pass: ++report.summary.pass; break;
            case CheckStatus::Fail: ++report.summary.fail; break;
            case CheckStatus::Skipped: ++report.summary.skipped; break;
        }
    }
    report.summary.wall_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Report run_sweep(const SweepConfig& config) {
    validate(config);
    CatalogOptions options;
    options.seed = config.seed;
    options.weight_cap = config.weight_cap;
    return run_sweep(config, select(catalog(options), config.suites));
}

std::string json_line(const CheckResult& r, bool timing) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["p"] = r.p;
    j["k"] = r.k;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["status"] = status_name(r.status);
    j["elapsed_us"] = timing ? r.elapsed_us : 0;
    return j.dump();
}

std::string summary_line(const SweepSummary& s, bool timing) {
    nlohmann::ordered_json j;
    j["summary"] = true;
    j["total"] = s.total();
    j["pass"] = s.pass;
    j["fail"] = s.fail;
    j["skipped"] = s.skipped;
    j["wall_us"] = timing ? s.wall_us : 0;
    return j.dump();
}

void write_report(std::ostream& os, const Report& report, bool timing) {
    for (const auto& r : report.results) os << json_line(r, timing) << '\n';
    os << summary_line(report.summary, timing) << '\n';
}

int exit_code(const Report& report) { return report.summary.fail == 0 ? 0 : 1; }

}  // namespace amhs
