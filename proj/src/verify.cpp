#include "fourdist/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fourdist/arith.hpp"
#include "fourdist/filters.hpp"
#include "fourdist/report.hpp"
#include "fourdist/search.hpp"
#include "fourdist/witness.hpp"

namespace fourdist {

namespace {

using Check = std::function<std::string()>;  // empty string on success

CheckResult run_check(std::string name, const Check& check) {
    try {
        std::string failure = check();
        return {std::move(name), failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

std::string mismatch(std::string_view what, UInt at) {
    std::ostringstream os;
    os << what << " mismatch at " << at;
    return os.str();
}

std::vector<CheckResult> arith_suite() {
    std::vector<CheckResult> out;
    out.push_back(run_check("jacobi agrees with brute-force residues for odd p < 500", [] {
        for (UInt p : primes_up_to(499)) {
            if (p == 2) continue;
            for (Int a = 1; a < static_cast<Int>(p); ++a) {
                const bool qr = is_qr_bruteforce(a, static_cast<Int>(p));
                if ((jacobi(a, static_cast<Int>(p)) == 1) != qr) return mismatch("jacobi", p);
            }
        }
        return std::string();
    }));
    out.push_back(run_check("(2/p) = -1 iff p mod 8 in {3,5} for p < 10^4", [] {
        for (UInt p : primes_up_to(9999)) {
            if (p == 2) continue;
            const bool rule = p % 8 == 3 || p % 8 == 5;
            if ((jacobi(2, static_cast<Int>(p)) == -1) != rule) return mismatch("residue rule", p);
        }
        return std::string();
    }));
    out.push_back(run_check("y-shape prime predicate: literal form equals p mod 8 != 7", [] {
        for (UInt p : primes_up_to(9999)) {
            if (p == 2) continue;
            if (shape_prime_allowed(p) != shape_prime_allowed_literal(p))
                return mismatch("shape predicate", p);
        }
        return std::string();
    }));
    out.push_back(run_check("pythagorean_partners equals a naive scan for a <= 200", [] {
        for (UInt a = 1; a <= 200; ++a) {
            std::vector<UInt> naive;
            for (UInt b = 1; b <= (a * a) / 2; ++b) {
                if (isqrt(a * a + b * b).exact) naive.push_back(b);
            }
            if (naive != pythagorean_partners(a)) return mismatch("partners", a);
        }
        return std::string();
    }));
    out.push_back(run_check("odd leg decompositions give the same partners, max (a^2-1)/2", [] {
        for (UInt a = 3; a <= 999; a += 2) {
            std::set<UInt> legs;
            for (const auto& d : odd_leg_decompositions(a)) legs.insert(d.even_leg());
            const std::vector<UInt> partners = pythagorean_partners(a);
            if (std::vector<UInt>(legs.begin(), legs.end()) != partners)
                return mismatch("decompositions", a);
            if (partners.empty() || partners.back() != (a * a - 1) / 2)
                return mismatch("max partner", a);
        }
        return std::string();
    }));
    out.push_back(run_check("factorize multiplies back for n <= 10^5", [] {
        for (UInt n = 1; n <= 100000; ++n) {
            if (factorize(n).value() != n) return mismatch("factorize", n);
        }
        return std::string();
    }));
    return out;
}

std::vector<CheckResult> filters_suite() {
    constexpr Int kMaxZ = 120;
    std::vector<CheckResult> out;
    const FilterConfig cfg;
    out.push_back(run_check("every elimination witness re-validates for z <= 120", [&] {
        for (Int z = 3; z <= kMaxZ; ++z) {
            for (const Candidate& c : enumerate_candidates(z, true)) {
                for (const auto& o : run_pipeline(c, cfg, AttributionMode::Full).outcomes) {
                    if (o.verdict && !witness_holds(c, *o.verdict)) {
                        std::ostringstream os;
                        os << filter_name(o.filter) << " witness fails at (" << c.x << "," << c.y << ","
                           << c.z << ")";
                        return os.str();
                    }
                }
            }
        }
        return std::string();
    }));
    out.push_back(run_check("four-distance points found by the oracle survive every filter", [&] {
        ScanRequest req;
        req.z_max = kMaxZ;
        req.min_count = 4;
        for (const ScanEntry& e : oracle_scan(req).entries) {
            if (!run_pipeline(e.candidate, cfg, AttributionMode::Full).survived())
                return std::string("a four-distance point was eliminated");
        }
        return std::string();
    }));
    out.push_back(run_check("first-hit and full attribution agree on survival", [&] {
        for (Int z = 3; z <= kMaxZ; ++z) {
            for (const Candidate& c : enumerate_candidates(z, true)) {
                if (run_pipeline(c, cfg, AttributionMode::FirstHit).survived() !=
                    run_pipeline(c, cfg, AttributionMode::Full).survived())
                    return mismatch("attribution modes", static_cast<UInt>(z));
            }
        }
        return std::string();
    }));
    return out;
}

std::vector<CheckResult> paper_suite() {
    std::vector<CheckResult> out;
    const FilterConfig cfg;
    out.push_back(run_check("z = 60 unavailable lists", [&] {
        const UnavailableLists l = unavailable_lists(60, cfg);
        const std::vector<Int> t3 = {1,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                     31, 37, 41, 43, 47, 49, 53, 55, 57, 59};
        if (l.theorem3_x.combined != t3) return std::string("theorem3_x combined differs");
        if (l.theorem5_y.direct != std::vector<Int>{4, 8, 16, 24, 32, 48})
            return std::string("theorem5_y direct differs");
        if (l.theorem5_y.combined != std::vector<Int>{4, 8, 12, 16, 24, 28, 32, 36, 44, 48, 52, 56})
            return std::string("theorem5_y combined differs");
        if (l.lemma3_y.combined != std::vector<Int>{20, 40}) return std::string("lemma3_y differs");
        for (Int v : {3, 5, 9, 25, 27}) {
            if (!std::binary_search(l.theorem4_x.direct.begin(), l.theorem4_x.direct.end(), v))
                return std::string("theorem4_x direct is missing a listed value");
        }
        return std::string();
    }));
    out.push_back(run_check("z = 60 has no survivors under parity, Lemma 3 and Theorem 5", [] {
        const FilterConfig restricted = FilterConfig::with_filters(
            {FilterId::ParityResidue, FilterId::Lemma3, FilterId::Theorem5});
        const SieveResult r = sieve_z(60, restricted);
        if (r.totals.survivors != 0) return std::string("survivors remain");
        return std::string();
    }));
    out.push_back(run_check("three-distance triples (7,24,52) and (297,304,700)", [] {
        ScanRequest req;
        req.z_min = 52;
        req.z_max = 700;
        req.min_count = 3;
        const ScanReport rep = oracle_scan(req);
        auto has = [&](Candidate c) {
            return std::any_of(rep.entries.begin(), rep.entries.end(),
                               [&](const ScanEntry& e) { return e.candidate == c; });
        };
        if (!has({7, 24, 52})) return std::string("(7,24,52) missing");
        if (!has({297, 304, 700})) return std::string("(297,304,700) missing");
        return std::string();
    }));
    return out;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::string_view suite) {
    if (suite == "arith") return arith_suite();
    if (suite == "filters") return filters_suite();
    if (suite == "paper") return paper_suite();
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
}

}  // namespace fourdist
