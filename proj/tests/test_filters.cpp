#include <doctest.h>

#include <random>

#include "fourdist/filters.hpp"
#include "fourdist/search.hpp"
#include "fourdist/witness.hpp"
#include "oracles.hpp"

using namespace fourdist;

namespace {

template <typename W>
W witness_of(const Verdict& v) {
    REQUIRE(v.has_value());
    return std::get<W>(v->witness);
}

std::vector<UInt> primes_3_5_11_13() { return {3, 5, 11, 13}; }

}  // namespace

TEST_CASE("filter names round-trip and follow the enumeration order") {
    const std::vector<std::string_view> expected = {"boundary", "lemma3",   "parity_residue",
                                                    "theorem1", "theorem2", "theorem3",
                                                    "theorem4", "theorem5", "corollary52",
                                                    "theorem6"};
    for (std::size_t i = 0; i < kAllFilters.size(); ++i) {
        CHECK(filter_name(kAllFilters[i]) == expected[i]);
        CHECK(parse_filter_id(expected[i]) == kAllFilters[i]);
    }
    CHECK_FALSE(parse_filter_id("theorem7").has_value());
}

TEST_CASE("filter_boundary") {
    CHECK(boundary_kind(witness_of<BoundaryWitness>(filter_boundary({0, 5, 12})).line) ==
          BoundaryKind::Edge);
    CHECK(boundary_kind(witness_of<BoundaryWitness>(filter_boundary({30, 14, 60})).line) ==
          BoundaryKind::Midline);
    CHECK(boundary_kind(witness_of<BoundaryWitness>(filter_boundary({5, 7, 12})).line) ==
          BoundaryKind::Diagonal);
    CHECK(boundary_kind(witness_of<BoundaryWitness>(filter_boundary({5, 5, 12})).line) ==
          BoundaryKind::Diagonal);
    CHECK_FALSE(filter_boundary({7, 24, 52}).has_value());
}

TEST_CASE("filter_lemma3") {
    const auto a = witness_of<Lemma3Witness>(filter_lemma3({13, 20, 60}));
    CHECK(a.d == 20);
    CHECK(a.n == 3);
    CHECK(a.side == Side::Y);

    const auto b = witness_of<Lemma3Witness>(filter_lemma3({13, 40, 60}));
    CHECK(b.d == 20);
    CHECK(b.n == 3);
    CHECK(b.side == Side::ZMinusY);

    CHECK_FALSE(filter_lemma3({7, 24, 52}).has_value());

    const FilterConfig cfg;
    CHECK(filter_lemma3({13, 20, 60}, cfg) == filter_lemma3({13, 20, 60}));
    const FilterConfig tiny({FilterId::Lemma3}, {3}, {3}, 2);
    CHECK_FALSE(filter_lemma3({13, 20, 60}, tiny).has_value());
}

TEST_CASE("filter_parity_residue") {
    CHECK(witness_of<ParityWitness>(filter_parity_residue({7, 24, 52})).clause ==
          ParityClause::ZNotMultipleOf12);
    CHECK_FALSE(filter_parity_residue({7, 24, 60}).has_value());
    CHECK(witness_of<ParityWitness>(filter_parity_residue({9, 15, 60})).clause ==
          ParityClause::NotExactlyOneOdd);
    CHECK(witness_of<ParityWitness>(filter_parity_residue({7, 22, 60})).clause ==
          ParityClause::EvenNotMultipleOf4);
    const auto w = witness_of<ParityWitness>(filter_parity_residue({1, 4, 12}));
    CHECK(w.clause == ParityClause::CornerWithoutMultipleOf3);
    CHECK(w.corner == Corner::A);
}

TEST_CASE("filter_theorem1") {
    const auto a = witness_of<InequalityWitness>(filter_theorem1({3, 40, 60}));
    CHECK(a.lhs == 9);
    CHECK(a.lhs < a.rhs);

    const auto b = witness_of<InequalityWitness>(filter_theorem1({7, 4, 60}));
    CHECK(b.corner == Corner::B);
    CHECK(b.lhs == 49);
    CHECK(b.rhs == 113);

    CHECK_FALSE(filter_theorem1({25, 36, 60}).has_value());
}

TEST_CASE("filter_theorem2") {
    const auto w = witness_of<CongruenceWitness>(filter_theorem2({5, 8, 24}, std::vector<UInt>{3}));
    CHECK(w.p == 3);
    CHECK(w.leg_a == 5);
    CHECK(w.leg_b == 8);

    CHECK_FALSE(filter_theorem2({7, 24, 60}, primes_3_5_11_13()).has_value());
    // 7 + 24 - 60 = -29 and 29 = 5 (mod 8), so the default list does eliminate.
    CHECK(witness_of<CongruenceWitness>(filter_theorem2({7, 24, 60}, two_nonresidue_primes(100))).p ==
          29);

    for (UInt p : primes_3_5_11_13())
        CHECK(filter_theorem2({11, 11, 24}, std::vector<UInt>{p}).has_value());

    CHECK_THROWS_AS(filter_theorem2({5, 8, 24}, std::vector<UInt>{7}), std::invalid_argument);
    CHECK_THROWS_AS(filter_theorem2({5, 8, 24}, std::vector<UInt>{9}), std::invalid_argument);
    CHECK_THROWS_AS(FilterConfig({FilterId::Theorem2}, {3, 17}, {3}), std::invalid_argument);
}

TEST_CASE("theorem2: two congruences are equivalent to checking all four corners") {
    for (Int z = 2; z <= 300; ++z) {
        for (Int x = 1; x < z; ++x) {
            for (Int y = 1; y < z; ++y) {
                const Candidate c{x, y, z};
                for (UInt p : primes_3_5_11_13()) {
                    const Int ip = static_cast<Int>(p);
                    const bool four = (x - y) % ip == 0 || (x - (z - y)) % ip == 0 ||
                                      ((z - x) - (z - y)) % ip == 0 || ((z - x) - y) % ip == 0;
                    REQUIRE(filter_theorem2(c, std::vector<UInt>{p}).has_value() == four);
                }
            }
        }
    }
}

TEST_CASE("filter_theorem3") {
    CHECK(witness_of<PrimeWitness>(filter_theorem3({7, 24, 60})).value == 7);
    const auto w = witness_of<PrimeWitness>(filter_theorem3({49, 24, 60}));
    CHECK(w.side == Side::ZMinusX);
    CHECK(w.value == 11);
    CHECK_FALSE(filter_theorem3({9, 20, 60}).has_value());
}

TEST_CASE("filter_theorem4") {
    const auto primes = two_nonresidue_primes(100);
    const auto a = witness_of<PrimePowerWitness>(filter_theorem4({27, 4, 60}, primes));
    CHECK(a.p == 3);
    CHECK(a.e == 3);
    const auto b = witness_of<PrimePowerWitness>(filter_theorem4({51, 4, 60}, primes));
    CHECK(b.side == Side::ZMinusX);
    CHECK(b.value == 9);
    CHECK(b.p == 3);
    CHECK(b.e == 2);
    const auto c = witness_of<PrimePowerWitness>(filter_theorem4({49, 4, 60}, primes));
    CHECK(c.side == Side::ZMinusX);
    CHECK(c.p == 11);
    CHECK(c.e == 1);
    // 49 = 7^2 alone is not a qualifying prime power.
    CHECK_FALSE(filter_theorem4({49, 4, 64}, primes).has_value());
    CHECK_THROWS_AS(filter_theorem4({27, 4, 60}, std::vector<UInt>{7}), std::invalid_argument);
}

TEST_CASE("filter_theorem5") {
    const auto a = witness_of<ShapeWitness>(filter_theorem5({7, 24, 60}));
    CHECK(a.side == Side::Y);
    CHECK(a.h == 2);
    CHECK(a.m == 3);
    CHECK_FALSE(filter_theorem5({7, 20, 60}).has_value());
    const auto c = witness_of<ShapeWitness>(filter_theorem5({7, 12, 60}));
    CHECK(c.side == Side::ZMinusY);
    CHECK(c.target == 48);
    CHECK(c.h == 3);
    CHECK(c.m == 3);
    CHECK(witness_of<ShapeWitness>(filter_theorem5({7, 32, 72})).m == 1);
    // 56 = 2^3 * 7 and 7 = 7 (mod 8) is not an allowed prime.
    CHECK_FALSE(filter_theorem5({7, 56, 66}).has_value());
}

TEST_CASE("filter_cor52") {
    const auto a = witness_of<Cor52Witness>(filter_cor52({15, 4, 64}));
    CHECK(a.q1 == 5);
    CHECK(a.q2 == 3);
    CHECK(a.h == 2);
    CHECK(a.m == 1);
    CHECK_FALSE(filter_cor52({9, 4, 16}).has_value());
    CHECK_FALSE(filter_cor52({7, 4, 14}).has_value());
    // Composite q1 = 21 = 3 * 7 has Jacobi symbol (2/21) = -1.
    const auto b = witness_of<Cor52Witness>(filter_cor52({231, 4, 462}));
    CHECK(b.q1 == 21);
    CHECK(b.q2 == 11);
    CHECK(b.h == 4);
    CHECK(b.m == 5);
}

TEST_CASE("filter_theorem6") {
    const auto w = witness_of<Theorem6Witness>(filter_theorem6({15, 4, 48}));
    CHECK(w.p1 == 5);
    CHECK(w.p2 == 3);
    CHECK(w.q1 == 11);
    CHECK(w.q2 == 3);
    CHECK_FALSE(filter_theorem6({33, 4, 60}).has_value());
    CHECK_FALSE(filter_theorem6({15, 4, 64}).has_value());
}

TEST_CASE("run_pipeline") {
    const FilterConfig cfg;
    const Attribution full = run_pipeline({7, 24, 60}, cfg, AttributionMode::Full);
    CHECK(full.outcomes.size() == kAllFilters.size());
    CHECK(full.outcomes[static_cast<std::size_t>(FilterId::Theorem3)].verdict.has_value());

    const Attribution diag = run_pipeline({5, 5, 12}, cfg, AttributionMode::FirstHit);
    CHECK(diag.first_hit() == FilterId::Boundary);
    CHECK(diag.outcomes.size() == 1);
    CHECK_THROWS_AS(run_pipeline({0, 5, 12}, cfg, AttributionMode::FirstHit), std::invalid_argument);
    CHECK_THROWS_AS(run_pipeline({14, 48, 104}, cfg, AttributionMode::FirstHit),
                    std::invalid_argument);

    std::vector<FilterId> hits;
    for (const auto& o : run_pipeline({25, 36, 60}, cfg, AttributionMode::Full).outcomes) {
        if (o.verdict) hits.push_back(o.filter);
    }
    CHECK(hits == std::vector<FilterId>{FilterId::Theorem2, FilterId::Theorem4, FilterId::Theorem5});
}

TEST_CASE("every elimination re-validates and attribution modes agree (z <= 200)") {
    const FilterConfig cfg;
    std::size_t checked = 0;
    for (Int z = 3; z <= 200; ++z) {
        for (const Candidate& c : enumerate_candidates(z, true)) {
            const Attribution full = run_pipeline(c, cfg, AttributionMode::Full);
            for (const auto& o : full.outcomes) {
                if (!o.verdict) continue;
                ++checked;
                REQUIRE(o.verdict->filter == o.filter);
                REQUIRE(witness_holds(c, *o.verdict));
            }
            const Attribution first = run_pipeline(c, cfg, AttributionMode::FirstHit);
            REQUIRE(first.survived() == full.survived());
            REQUIRE(first.first_hit() == full.first_hit());
        }
    }
    CHECK(checked > 100000);
}

TEST_CASE("witness checker rejects tampered witnesses") {
    const Candidate c{7, 24, 60};
    Elimination e = *filter_theorem3(c);
    CHECK(witness_holds(c, e));
    std::get<PrimeWitness>(e.witness).value = 9;
    CHECK_FALSE(witness_holds(c, e));

    Elimination shape = *filter_theorem5(c);
    CHECK(witness_holds(c, shape));
    CHECK_FALSE(witness_holds(Candidate{7, 20, 60}, shape));
    shape.filter = FilterId::Theorem4;
    CHECK_FALSE(witness_holds(c, shape));

    Elimination cong{FilterId::Theorem2, CongruenceWitness{7, Corner::A, 7, 14}};
    CHECK_FALSE(witness_holds({7, 14, 60}, cong));  // (2/7) = +1
}

TEST_CASE("enlarging prime lists never rescues a candidate") {
    std::mt19937_64 rng(99);
    const auto all = two_nonresidue_primes(200);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<UInt> small, large;
        for (UInt p : all) {
            const bool in_large = rng() % 2;
            if (in_large) large.push_back(p);
            if (in_large && rng() % 2) small.push_back(p);
        }
        const FilterConfig lo({FilterId::Theorem2, FilterId::Theorem4}, small, small);
        const FilterConfig hi({FilterId::Theorem2, FilterId::Theorem4}, large, large);
        for (Int z = 12; z <= 96; z += 12) {
            for (const Candidate& c : enumerate_candidates(z, true)) {
                if (!run_pipeline(c, lo, AttributionMode::FirstHit).survived())
                    REQUIRE_FALSE(run_pipeline(c, hi, AttributionMode::FirstHit).survived());
            }
        }
    }
}

TEST_CASE("four-distance points from the oracle survive every filter (z <= 200)") {
    const FilterConfig cfg;
    for (Int z = 2; z <= 200; ++z) {
        for (Int x = 1; x < z; ++x) {
            for (Int y = 1; y < z; ++y) {
                if (oracle::integer_distance_count(x, y, z) < 4 || !oracle::primitive(x, y, z))
                    continue;
                REQUIRE(run_pipeline(canonicalize({x, y, z}), cfg, AttributionMode::Full).survived());
            }
        }
    }
}
