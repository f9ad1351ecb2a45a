#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "fourdist/filters.hpp"
#include "fourdist/model.hpp"

namespace fourdist {

/// Raised when an oracle scan would examine more points than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScanRequest {
    Int z_min = 1;
    Int z_max = 1;
    int min_count = 3;
    bool include_boundary = false;
    bool primitive_only = true;
    bool mod12_only = false;
    /// Emit one canonical representative per symmetry orbit.
    bool dedup = true;
    /// Maximum number of (x, y, z) points examined.
    UInt budget = 1'000'000'000;

    void validate() const;
};

struct ScanEntry {
    Candidate candidate;
    DistanceProfile profile;
    std::size_t orbit_size = 1;

    friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

struct ScanReport {
    ScanRequest request;
    std::vector<ScanEntry> entries;  // ascending z, then x, then y
};

/// Number of points oracle_scan(req) would examine.
UInt scan_cost(const ScanRequest& req);

/// Brute-force distance oracle. Throws BudgetExceeded before doing any work
/// when scan_cost(req) exceeds req.budget.
ScanReport oracle_scan(const ScanRequest& req);

/// Primitive interior points of the square of side z in ascending (x, y).
/// With dedup, only canonical representatives.
std::vector<Candidate> enumerate_candidates(Int z, bool dedup);

struct SieveTotals {
    UInt candidates = 0;
    std::map<FilterId, UInt> eliminated;  // one entry per enabled filter
    UInt survivors = 0;

    friend bool operator==(const SieveTotals&, const SieveTotals&) = default;
};

struct Survivor {
    Candidate candidate;
    /// Full attribution over every filter, including disabled ones.
    Attribution attribution;

    friend bool operator==(const Survivor&, const Survivor&) = default;
};

struct OracleSummary {
    int max_count = 0;
    std::vector<Candidate> witnesses;  // survivors reaching max_count

    friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct SieveResult {
    Int z = 0;
    AttributionMode mode = AttributionMode::FirstHit;
    SieveTotals totals;
    std::vector<Survivor> survivors;
    OracleSummary oracle;

    friend bool operator==(const SieveResult&, const SieveResult&) = default;
};

/// Runs the pipeline on every primitive interior candidate at z. With dedup
/// (the default) only canonical representatives are examined; without it
/// every point is counted and judged through its canonical representative.
SieveResult sieve_z(Int z, const FilterConfig& cfg, AttributionMode mode = AttributionMode::FirstHit,
                    bool dedup = true);

/// sieve_z for every z in [z_min, z_max], ascending, split across `workers`
/// threads by whole z values. Output does not depend on the worker count.
std::vector<SieveResult> search_range(Int z_min, Int z_max, const FilterConfig& cfg,
                                      unsigned workers,
                                      AttributionMode mode = AttributionMode::FirstHit);

/// As search_range over an explicit list of side lengths; results follow
/// the order of `zs`.
std::vector<SieveResult> search_sides(const std::vector<Int>& zs, const FilterConfig& cfg,
                                      unsigned workers,
                                      AttributionMode mode = AttributionMode::FirstHit);

}  // namespace fourdist
