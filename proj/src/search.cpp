#include "fourdist/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace fourdist {

namespace {

// Perfect-square lookup for small sums; falls back to isqrt past the table.
class SquareTable {
public:
    explicit SquareTable(UInt limit) {
        if (limit > kMaxTable) return;
        is_square_.assign(limit + 1, false);
        for (UInt r = 0; r * r <= limit; ++r) is_square_[r * r] = true;
    }

    bool operator()(UInt n) const {
        if (n < is_square_.size()) return is_square_[n];
        return isqrt(n).exact;
    }

private:
    static constexpr UInt kMaxTable = UInt{1} << 26;
    std::vector<bool> is_square_;
};

}  // namespace

void ScanRequest::validate() const {
    if (z_min < 1) throw std::invalid_argument("scan: z_min must be positive");
    if (z_min > z_max) throw std::invalid_argument("scan: z_min exceeds z_max");
    if (min_count < 0 || min_count > 4) throw std::invalid_argument("scan: min_count must be 0..4");
    // 2*z^2 must stay inside 64 bits.
    if (z_max > (Int{1} << 31)) throw std::overflow_error("scan: z_max too large");
}

UInt scan_cost(const ScanRequest& req) {
    req.validate();
    unsigned __int128 total = 0;
    for (Int z = req.z_min; z <= req.z_max; ++z) {
        if (req.mod12_only && z % 12 != 0) continue;
        const auto side = static_cast<unsigned __int128>(req.include_boundary ? z + 1 : z - 1);
        total += side * side;
    }
    if (total > static_cast<unsigned __int128>(UInt(-1))) return UInt(-1);
    return static_cast<UInt>(total);
}

ScanReport oracle_scan(const ScanRequest& req) {
    const UInt cost = scan_cost(req);
    if (cost > req.budget) {
        throw BudgetExceeded("scan would examine " + std::to_string(cost) +
                             " points, budget is " + std::to_string(req.budget));
    }
    ScanReport report{req, {}};
    const UInt max_sq = 2 * static_cast<UInt>(req.z_max) * static_cast<UInt>(req.z_max);
    const SquareTable square(max_sq);
    const Int lo_off = req.include_boundary ? 0 : 1;

    for (Int z = req.z_min; z <= req.z_max; ++z) {
        if (req.mod12_only && z % 12 != 0) continue;
        for (Int x = lo_off; x <= z - lo_off; ++x) {
            const UInt x2 = static_cast<UInt>(x * x);
            const UInt rx2 = static_cast<UInt>((z - x) * (z - x));
            for (Int y = lo_off; y <= z - lo_off; ++y) {
                const UInt y2 = static_cast<UInt>(y * y);
                const UInt ry2 = static_cast<UInt>((z - y) * (z - y));
                const int count = int(square(x2 + y2)) + int(square(x2 + ry2)) +
                                  int(square(rx2 + ry2)) + int(square(rx2 + y2));
                if (count < req.min_count) continue;
                const Candidate c{x, y, z};
                if (req.primitive_only && !c.primitive()) continue;
                if (req.dedup && !is_canonical(c)) continue;
                report.entries.push_back({c, distance_profile(c), orbit(c).size()});
            }
        }
    }
    return report;
}

std::vector<Candidate> enumerate_candidates(Int z, bool dedup) {
    if (z < 1) throw std::invalid_argument("enumerate_candidates: z must be positive");
    std::vector<Candidate> out;
    for (Int x = 1; x < z; ++x) {
        const Int gx = gcd(x, z);
        for (Int y = 1; y < z; ++y) {
            if (gcd(gx, y) != 1) continue;
            const Candidate c{x, y, z};
            if (dedup && !is_canonical(c)) continue;
            out.push_back(c);
        }
    }
    return out;
}

SieveResult sieve_z(Int z, const FilterConfig& cfg, AttributionMode mode, bool dedup) {
    if (z < 1) throw std::invalid_argument("sieve_z: z must be positive");
    SieveResult result;
    result.z = z;
    result.mode = mode;
    for (FilterId id : cfg.enabled_filters()) result.totals.eliminated[id] = 0;

    for (const Candidate& raw : enumerate_candidates(z, dedup)) {
        const Candidate c = dedup ? raw : canonicalize(raw);
        ++result.totals.candidates;
        const Attribution a = run_pipeline(c, cfg, mode);
        for (const auto& o : a.outcomes) {
            if (o.verdict) ++result.totals.eliminated[o.filter];
        }
        if (!a.survived()) continue;
        ++result.totals.survivors;

        Survivor s{raw, {}};
        for (FilterId id : kAllFilters) s.attribution.outcomes.push_back({id, run_filter(id, c, cfg)});
        result.survivors.push_back(std::move(s));
    }

    for (const Survivor& s : result.survivors) {
        const int count = distance_profile(s.candidate).integer_count;
        if (count > result.oracle.max_count) {
            result.oracle.max_count = count;
            result.oracle.witnesses.clear();
        }
        if (count == result.oracle.max_count) result.oracle.witnesses.push_back(s.candidate);
    }
    return result;
}

std::vector<SieveResult> search_range(Int z_min, Int z_max, const FilterConfig& cfg,
                                      unsigned workers, AttributionMode mode) {
    if (z_min < 1 || z_min > z_max)
        throw std::invalid_argument("search_range: need 1 <= z_min <= z_max");
    std::vector<Int> zs;
    for (Int z = z_min; z <= z_max; ++z) zs.push_back(z);
    return search_sides(zs, cfg, workers, mode);
}

std::vector<SieveResult> search_sides(const std::vector<Int>& zs, const FilterConfig& cfg,
                                      unsigned workers, AttributionMode mode) {
    if (workers == 0) throw std::invalid_argument("search_range: workers must be positive");
    if (zs.empty()) return {};

    const std::size_t count = zs.size();
    std::vector<SieveResult> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr error;
    Int error_z = 0;

    auto work = [&] {
        for (;;) {
            if (failed.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            const Int z = zs[i];
            try {
                results[i] = sieve_z(z, cfg, mode);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error || z < error_z) {  // report the smallest failing z
                    error = std::current_exception();
                    error_z = z;
                }
                failed.store(true);
                return;
            }
        }
    };

    const unsigned n = std::min<std::size_t>(workers, count);
    {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned w = 1; w < n; ++w) pool.emplace_back(work);
        work();
    }

    if (error) {
        std::string what = "unknown error";
        try {
            std::rethrow_exception(error);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        throw std::runtime_error("search_range: worker failed at z=" + std::to_string(error_z) +
                                 ": " + what);
    }
    return results;
}

}  // namespace fourdist
