#include "amhs/composition.hpp"
#include "amhs/evaluator.hpp"
#include "amhs/stuffle.hpp"
#include "amhs/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kUsage = 2;

void parse_range(const std::string& text, amhs::SweepConfig& cfg) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw amhs::UsageError("--primes expects LO..HI");
    try {
        std::size_t used = 0;
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        cfg.prime_lo = std::stoull(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(lo);
        cfg.prime_hi = std::stoull(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
    } catch (const std::logic_error&) {
        throw amhs::UsageError("--primes expects LO..HI with integer bounds");
    }
}

int cmd_verify(const std::string& primes, const std::vector<std::string>& suites, unsigned jobs, std::uint64_t seed,
               const std::string& out, unsigned weight_cap, std::optional<unsigned> power, bool no_timing) {
    amhs::SweepConfig cfg;
    parse_range(primes, cfg);
    cfg.suites = suites;
    cfg.jobs = jobs;
    cfg.seed = seed;
    cfg.weight_cap = weight_cap;
    cfg.power_override = power;
    cfg.timing = !no_timing;
    amhs::validate(cfg);
    amhs::Report report = amhs::run_sweep(cfg);
    for (const auto& r : report.results)
        if (r.status == amhs::CheckStatus::Fail)
            std::cerr << "FAIL " << r.id << " p=" << r.p << " k=" << r.k << ": " << r.diagnostic << '\n';
    if (out.empty() || out == "-") {
        amhs::write_report(std::cout, report, cfg.timing);
    } else {
        std::ofstream f(out);
        if (!f) throw amhs::UsageError("cannot open " + out);
        amhs::write_report(f, report, cfg.timing);
    }
    return amhs::exit_code(report);
}

int cmd_eval(const std::string& family, const std::string& text, std::uint64_t n, std::optional<std::uint64_t> prime,
             unsigned power) {
    amhs::SumFamily f = amhs::parse_family(family);
    amhs::Composition c = amhs::Composition::parse(text);
    if (!prime) {
        std::cout << amhs::eval(f, c, n).str() << '\n';
        return 0;
    }
    if (!amhs::is_prime(*prime)) throw amhs::UsageError("--prime must be prime");
    amhs::Residue r = amhs::eval(f, c, n, *prime, power);
    std::cout << r.str() << " (mod " << *prime;
    if (power > 1) std::cout << "^" << power;
    std::cout << ")\n";
    return 0;
}

int cmd_stuffle(const std::string& w1, const std::string& w2) {
    std::cout << amhs::stuffle_product(amhs::parse_word(w1), amhs::parse_word(w2)).str() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating multiple harmonic sums: evaluation and congruence sweeps"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "check every catalog identity over a prime range");
    std::string primes = "7..100", out;
    std::vector<std::string> suites;
    unsigned jobs = 1, weight_cap = amhs::CatalogOptions{}.weight_cap;
    std::uint64_t seed = amhs::CatalogOptions{}.seed;
    std::optional<unsigned> power;
    bool no_timing = false;
    verify->add_option("--primes", primes, "prime range LO..HI");
    verify->add_option("--suite", suites, "family id prefix, repeatable; 'all' for everything");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--seed", seed, "seed of the randomized families");
    verify->add_option("--out", out, "report path, stdout by default");
    verify->add_option("--weight-cap", weight_cap, "largest weight of enumerated families");
    verify->add_option("--power", power, "lower the modulus exponent to at most K");
    verify->add_flag("--no-timing", no_timing, "write 0 for elapsed times so reports are reproducible");

    auto* ev = app.add_subcommand("eval", "evaluate one sum exactly or modulo p^k");
    std::string family, composition;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> prime;
    unsigned eval_power = 1;
    ev->add_option("family", family, "H, S, U or V")->required();
    ev->add_option("composition", composition, "parts like 1,-3")->required();
    ev->add_option("n", n, "upper limit")->required();
    ev->add_option("--prime,-p", prime, "reduce modulo this prime");
    ev->add_option("--power,-k", eval_power, "modulus exponent");
    ev->allow_extras(false);

    auto* st = app.add_subcommand("stuffle", "expand the stuffle product of two words");
    std::string w1, w2;
    st->add_option("w1", w1, "first word")->required();
    st->add_option("w2", w2, "second word")->required();

    // compositions like -1,-3 would otherwise be read as flags
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    for (auto& a : args)
        if (a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == ','))
            a = " " + a;

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(primes, suites, jobs, seed, out, weight_cap, power, no_timing);
        if (ev->parsed()) return cmd_eval(family, composition, n, prime, eval_power);
        if (st->parsed()) return cmd_stuffle(w1, w2);
    } catch (const amhs::IndexNotInvertible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
