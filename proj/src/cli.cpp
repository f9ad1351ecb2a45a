#include "fourdist/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fourdist/filters.hpp"
#include "fourdist/model.hpp"
#include "fourdist/report.hpp"
#include "fourdist/search.hpp"
#include "fourdist/verify.hpp"

namespace fourdist {

namespace {

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
    std::string format = "text";
    std::string out_path;
};

struct FilterOptions {
    std::string filters = "all";
    std::string attribution = "first";
    UInt prime_bound = 100;
    UInt lemma3_bound = 10000;

    FilterConfig config() const {
        std::vector<FilterId> enabled;
        if (filters == "all") {
            enabled.assign(kAllFilters.begin(), kAllFilters.end());
        } else {
            std::stringstream ss(filters);
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto id = parse_filter_id(item);
                if (!id) throw UsageError("unknown filter '" + item + "'");
                enabled.push_back(*id);
            }
            if (enabled.empty()) throw UsageError("--filters names no filter");
        }
        if (prime_bound < 3) throw UsageError("--prime-bound must be at least 3");
        return FilterConfig(std::move(enabled), two_nonresidue_primes(prime_bound),
                            two_nonresidue_primes(prime_bound), lemma3_bound);
    }

    AttributionMode mode() const {
        const auto m = parse_mode(attribution);
        if (!m) throw UsageError("--attribution must be 'first' or 'full'");
        return *m;
    }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

void add_filters(CLI::App* cmd, FilterOptions& o) {
    cmd->add_option("--filters", o.filters, "Comma-separated filter ids, or 'all'")
        ->capture_default_str();
    cmd->add_option("--attribution", o.attribution, "first or full")
        ->check(CLI::IsMember({"first", "full"}))
        ->capture_default_str();
    cmd->add_option("--prime-bound", o.prime_bound,
                    "Largest prime used by the theorem2/theorem4 filters")
        ->capture_default_str();
    cmd->add_option("--lemma3-bound", o.lemma3_bound, "Largest Lemma 3 multiplier considered")
        ->capture_default_str();
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + o.out_path);
    file << text;
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Searches integer-sided squares for points with integer distances to all four "
                 "vertices."};
    app.require_subcommand(1, 1);
    app.name(args.empty() ? "fourdist" : args.front());

    CommonOptions common;
    FilterOptions filter_opts;

    Int z = 0;
    auto* sieve = app.add_subcommand("sieve", "Apply the filters to every candidate at one side length");
    sieve->add_option("--z", z, "Side length")->required();
    add_filters(sieve, filter_opts);
    add_common(sieve, common);

    Int z_min = 0, z_max = 0;
    unsigned threads = 1;
    bool mod12_only = false;
    auto* search = app.add_subcommand("search", "Sieve every side length in a range");
    search->add_option("--z-min", z_min, "Smallest side length")->required();
    search->add_option("--z-max", z_max, "Largest side length")->required();
    search->add_flag("--mod12-only", mod12_only, "Only side lengths divisible by 12");
    search->add_option("--threads", threads, "Worker threads")->capture_default_str();
    add_filters(search, filter_opts);
    add_common(search, common);

    Int px = -1, py = -1, pz = 0;
    auto* distances = app.add_subcommand("distances", "Exact vertex distances of one point");
    distances->add_option("--x", px, "Distance to side AB")->required();
    distances->add_option("--y", py, "Distance to side AD")->required();
    distances->add_option("--z", pz, "Side length")->required();
    add_common(distances, common);

    ScanRequest scan;
    bool all_orbit_members = false;
    bool non_primitive = false;
    auto* three = app.add_subcommand("three-distance", "Brute-force scan for points with many integer distances");
    three->add_option("--z-max", scan.z_max, "Largest side length")->required();
    three->add_option("--z-min", scan.z_min, "Smallest side length")->capture_default_str();
    three->add_option("--min-count", scan.min_count, "Minimum integer distances")
        ->capture_default_str();
    three->add_flag("--include-boundary", scan.include_boundary, "Include points on the edges");
    three->add_flag("--non-primitive", non_primitive, "Keep points with gcd(x, y, z) > 1");
    three->add_flag("--mod12-only", scan.mod12_only, "Only side lengths divisible by 12");
    three->add_flag("--all-orbit-members", all_orbit_members,
                    "Report every symmetric image instead of canonical representatives");
    three->add_option("--budget", scan.budget, "Maximum number of points examined")
        ->capture_default_str();
    add_common(three, common);

    Int lz = 0;
    UInt list_prime_bound = 100;
    auto* lists = app.add_subcommand("lists", "Side distances ruled out by each theorem at one z");
    lists->add_option("--z", lz, "Side length (even)")->required();
    lists->add_option("--prime-bound", list_prime_bound, "Largest prime used for theorem4")
        ->capture_default_str();
    add_common(lists, common);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run built-in consistency checks");
    verify->add_option("--suite", suite, "arith, filters or paper")
        ->required()
        ->check(CLI::IsMember({"arith", "filters", "paper"}));

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("fourdist");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format format = parse_format(common.format);
        if (*sieve) {
            if (z < 1) throw UsageError("--z must be positive");
            const SieveResult r = sieve_z(z, filter_opts.config(), filter_opts.mode());
            emit(common, serialize(r, format), out);
        } else if (*search) {
            if (z_min < 1) throw UsageError("--z-min must be positive");
            if (z_min > z_max) throw UsageError("--z-min exceeds --z-max");
            if (threads < 1) throw UsageError("--threads must be positive");
            const FilterConfig cfg = filter_opts.config();
            std::vector<Int> zs;
            for (Int v = z_min; v <= z_max; ++v) {
                if (!mod12_only || v % 12 == 0) zs.push_back(v);
            }
            emit(common, serialize(search_sides(zs, cfg, threads, filter_opts.mode()), format), out);
        } else if (*distances) {
            const Candidate c{px, py, pz};
            if (pz < 1 || !c.in_bounds()) throw UsageError("need 0 <= x, y <= z and z >= 1");
            emit(common, serialize(c, distance_profile(c), format), out);
        } else if (*three) {
            scan.primitive_only = !non_primitive;
            scan.dedup = !all_orbit_members;
            if (scan.z_min < 1 || scan.z_min > scan.z_max)
                throw UsageError("need 1 <= --z-min <= --z-max");
            if (scan.min_count < 0 || scan.min_count > 4)
                throw UsageError("--min-count must be between 0 and 4");
            emit(common, serialize(oracle_scan(scan), format), out);
        } else if (*lists) {
            if (lz < 2 || lz % 2 != 0) throw UsageError("--z must be even and positive");
            if (list_prime_bound < 3) throw UsageError("--prime-bound must be at least 3");
            const FilterConfig cfg({kAllFilters.begin(), kAllFilters.end()},
                                   two_nonresidue_primes(list_prime_bound),
                                   two_nonresidue_primes(list_prime_bound));
            emit(common, serialize(unavailable_lists(lz, cfg), format), out);
        } else if (*verify) {
            bool all_passed = true;
            for (const CheckResult& r : run_verify_suite(suite)) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) out << ": " << r.detail;
                out << "\n";
                all_passed = all_passed && r.passed;
            }
            return all_passed ? kExitOk : kExitComputation;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitOk;
}

}  // namespace fourdist
