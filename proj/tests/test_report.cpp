#include <doctest.h>

#include <algorithm>
#include <random>

#include "fourdist/report.hpp"

using namespace fourdist;

namespace {

struct Gen {
    std::mt19937_64 rng;

    Int i(Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<UInt>(hi - lo + 1)); }
    UInt u(UInt hi) { return rng() % (hi + 1); }
    template <typename E>
    E pick(int n) {
        return static_cast<E>(rng() % static_cast<UInt>(n));
    }

    Witness witness() {
        switch (rng() % 10) {
            case 0: return BoundaryWitness{pick<BoundaryLine>(8)};
            case 1: return Lemma3Witness{pick<Side>(4), i(1, 1000), u(1000)};
            case 2: {
                ParityWitness w{pick<ParityClause>(4), std::nullopt};
                if (w.clause == ParityClause::CornerWithoutMultipleOf3) w.corner = pick<Corner>(4);
                return w;
            }
            case 3: return InequalityWitness{pick<Corner>(4), i(0, 99), i(0, 99), u(1 << 20), u(1 << 20)};
            case 4: return CongruenceWitness{u(1000), pick<Corner>(4), i(0, 999), i(0, 999)};
            case 5: return PrimeWitness{pick<Side>(4), i(1, 1 << 30)};
            case 6:
                return PrimePowerWitness{pick<Side>(4), i(1, 1 << 30), u(1000),
                                         static_cast<unsigned>(u(9))};
            case 7: {
                const UInt m = 2 * u(5000) + 1;
                return ShapeWitness{pick<Side>(4), i(1, 1 << 30), static_cast<unsigned>(1 + u(20)), m,
                                    factorize(m)};
            }
            case 8:
                return Cor52Witness{pick<Side>(4), i(1, 1 << 30), u(999), u(999),
                                    static_cast<unsigned>(u(20)), u(999)};
            default: return Theorem6Witness{u(99), u(99), u(99), u(99)};
        }
    }

    Candidate candidate(Int z) { return {i(1, z - 1), i(1, z - 1), z}; }

    SieveResult result() {
        SieveResult r;
        r.z = i(2, 100000);
        r.mode = rng() % 2 ? AttributionMode::Full : AttributionMode::FirstHit;
        r.totals.candidates = u(1'000'000);
        r.totals.survivors = u(10);
        for (FilterId id : kAllFilters)
            if (rng() % 2) r.totals.eliminated[id] = u(100000);
        const int n = static_cast<int>(u(3));
        for (int k = 0; k < n; ++k) {
            Survivor s{candidate(r.z), {}};
            for (FilterId id : kAllFilters) {
                FilterOutcome o{id, std::nullopt};
                if (rng() % 3 == 0) o.verdict = Elimination{id, witness()};
                s.attribution.outcomes.push_back(o);
            }
            r.survivors.push_back(s);
        }
        r.oracle.max_count = static_cast<int>(u(4));
        for (UInt k = u(2); k > 0; --k) r.oracle.witnesses.push_back(candidate(r.z));
        return r;
    }
};

}  // namespace

TEST_CASE("SieveResult JSON round trip on random values") {
    Gen g{std::mt19937_64(5)};
    for (int t = 0; t < 1000; ++t) {
        const SieveResult r = g.result();
        const Json j = to_json(r);
        REQUIRE(sieve_result_from_json(j) == r);
        REQUIRE(sieve_result_from_json(Json::parse(j.dump())) == r);
    }
}

TEST_CASE("witness JSON round trip on real eliminations") {
    const FilterConfig cfg;
    for (Int z = 12; z <= 120; z += 12) {
        for (const Candidate& c : enumerate_candidates(z, true)) {
            for (const auto& o : run_pipeline(c, cfg, AttributionMode::Full).outcomes) {
                if (o.verdict) REQUIRE(witness_from_json(to_json(o.verdict->witness)) == o.verdict->witness);
            }
        }
    }
    CHECK_THROWS(witness_from_json(Json{{"kind", "nonsense"}}));
}

TEST_CASE("scan CSV rows") {
    ScanRequest req;
    req.z_min = 52;
    req.z_max = 52;
    const std::string csv = serialize(oracle_scan(req), Format::Csv);
    CHECK(csv == "z,x,y,verdict,filter_id,detail\n52,7,24,3,,A=25;B=-;C=53;D=51\n");

    req.z_min = req.z_max = 5;
    CHECK(serialize(oracle_scan(req), Format::Csv) == "z,x,y,verdict,filter_id,detail\n");
    CHECK(roots_cell(distance_profile({297, 304, 700})) == "A=425;B=495;C=565;D=-");
}

TEST_CASE("sieve JSON and text at z = 60") {
    const SieveResult r = sieve_z(60, FilterConfig());
    const Json j = Json::parse(serialize(r, Format::Json));
    CHECK(j.at("z") == 60);
    CHECK(j.at("survivors") == Json::array());
    CHECK(j.at("totals").at("survivors") == 0);
    CHECK(serialize(r, Format::Text).find("survivors: 0") != std::string::npos);
    CHECK(serialize(r, Format::Csv) == "z,x,y,verdict,filter_id,detail\n");

    const Json arr = Json::parse(serialize(std::vector<SieveResult>{r}, Format::Json));
    CHECK(arr.is_array());
    CHECK(arr.size() == 1);
}

TEST_CASE("survivor CSV lists one row per filter") {
    const SieveResult r = sieve_z(24, FilterConfig::with_filters({FilterId::Boundary}));
    REQUIRE_FALSE(r.survivors.empty());
    const std::string csv = serialize(r, Format::Csv);
    const auto rows = std::count(csv.begin(), csv.end(), '\n') - 1;
    CHECK(rows == static_cast<long>(r.survivors.size() * kAllFilters.size()));
}

TEST_CASE("unavailable lists at z = 60") {
    const UnavailableLists l = unavailable_lists(60, FilterConfig());
    CHECK(l.theorem3_x.combined == std::vector<Int>{1, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                    43, 47, 49, 53, 55, 57, 59});
    CHECK(l.theorem5_y.direct == std::vector<Int>{4, 8, 16, 24, 32, 48});
    CHECK(l.theorem5_y.combined ==
          std::vector<Int>{4, 8, 12, 16, 24, 28, 32, 36, 44, 48, 52, 56});
    CHECK(l.lemma3_y.combined == std::vector<Int>{20, 40});
    for (Int v : {3, 5, 9, 25, 27})
        CHECK(std::binary_search(l.theorem4_x.direct.begin(), l.theorem4_x.direct.end(), v));
    CHECK_THROWS_AS(unavailable_lists(61, FilterConfig()), std::invalid_argument);
    CHECK_THROWS_AS(unavailable_lists(0, FilterConfig()), std::invalid_argument);
}

TEST_CASE("unavailable lists are sorted, symmetric and of the right parity") {
    const FilterConfig cfg;
    for (Int z = 2; z <= 400; z += 2) {
        const UnavailableLists l = unavailable_lists(z, cfg);
        const std::pair<const ValueList*, bool> lists[] = {
            {&l.theorem3_x, true}, {&l.theorem4_x, true}, {&l.theorem5_y, false}, {&l.lemma3_y, false}};
        for (auto [list, odd] : lists) {
            REQUIRE(std::is_sorted(list->direct.begin(), list->direct.end()));
            REQUIRE(std::adjacent_find(list->combined.begin(), list->combined.end()) ==
                    list->combined.end());
            for (Int v : list->combined) {
                REQUIRE(v > 0);
                REQUIRE(v < z);
                REQUIRE((v % 2 != 0) == odd);
                REQUIRE(std::binary_search(list->combined.begin(), list->combined.end(), z - v));
            }
        }
        for (Int v : l.lemma3_y.combined)
            REQUIRE_FALSE(std::binary_search(l.theorem5_y.combined.begin(), l.theorem5_y.combined.end(), v));
    }
}

TEST_CASE("theorem5_y agrees with the theorem5 filter") {
    const FilterConfig cfg;
    for (Int z = 4; z <= 240; z += 4) {
        const UnavailableLists l = unavailable_lists(z, cfg);
        for (Int y = 2; y < z; y += 2) {
            const bool listed =
                std::binary_search(l.theorem5_y.combined.begin(), l.theorem5_y.combined.end(), y);
            REQUIRE(filter_theorem5({1, y, z}).has_value() == listed);
        }
    }
}

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("text") == Format::Text);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
