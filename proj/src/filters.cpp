#include "fourdist/filters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fourdist {

namespace {

constexpr std::array<std::string_view, 10> kFilterNames = {
    "boundary", "lemma3",   "parity_residue", "theorem1",    "theorem2",
    "theorem3", "theorem4", "theorem5",       "corollary52", "theorem6",
};

constexpr std::array<std::string_view, 10> kFilterLabels = {
    "Lemmas 1-2 / diagonals", "Lemma 3",   "parity and residues mod 4, 3, 12",
    "Theorem 1",              "Theorem 2", "Theorem 3",
    "Theorem 4",              "Theorem 5 / Corollary 5.1",
    "Corollaries 5.2-5.3",    "Theorem 6",
};

constexpr std::array<std::string_view, 4> kSideNames = {"x", "y", "z-x", "z-y"};

constexpr std::array<std::string_view, 8> kLineNames = {
    "x=0", "x=z", "y=0", "y=z", "x=z/2", "y=z/2", "x=y", "x=z-y",
};

constexpr std::array<std::string_view, 4> kClauseNames = {
    "not_exactly_one_odd", "even_not_multiple_of_4", "z_not_multiple_of_12",
    "corner_without_multiple_of_3",
};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
    for (std::size_t i = 0; i < N; ++i) {
        if (names[i] == s) return static_cast<Enum>(i);
    }
    return std::nullopt;
}

Elimination eliminated(FilterId id, Witness w) { return Elimination{id, std::move(w)}; }

bool contains_sorted(std::span<const UInt> v, UInt p) {
    return std::binary_search(v.begin(), v.end(), p);
}

bool two_is_nonresidue(UInt q) { return q % 2 == 1 && jacobi(2, static_cast<Int>(q)) == -1; }

// Distinct odd primes p1 > p2, both with (2/p) = -1, whose product is n.
std::optional<std::pair<UInt, UInt>> nonresidue_semiprime(UInt n) {
    if (n < 15 || n % 2 == 0) return std::nullopt;
    const Factorization f = factorize(n);
    if (f.factors.size() != 2) return std::nullopt;
    const auto& lo = f.factors[0];
    const auto& hi = f.factors[1];
    if (lo.exponent != 1 || hi.exponent != 1) return std::nullopt;
    if (!two_is_nonresidue(lo.prime) || !two_is_nonresidue(hi.prime)) return std::nullopt;
    return std::pair{hi.prime, lo.prime};
}

}  // namespace

std::string_view filter_name(FilterId id) { return kFilterNames[static_cast<std::size_t>(id)]; }
std::string_view filter_label(FilterId id) { return kFilterLabels[static_cast<std::size_t>(id)]; }
std::optional<FilterId> parse_filter_id(std::string_view name) {
    return lookup<FilterId>(kFilterNames, name);
}

std::string_view side_name(Side s) { return kSideNames[static_cast<std::size_t>(s)]; }
std::optional<Side> parse_side(std::string_view s) { return lookup<Side>(kSideNames, s); }

Int side_value(const Candidate& c, Side s) {
    switch (s) {
        case Side::X: return c.x;
        case Side::Y: return c.y;
        case Side::ZMinusX: return c.z - c.x;
        case Side::ZMinusY: return c.z - c.y;
    }
    return 0;
}

BoundaryKind boundary_kind(BoundaryLine line) {
    switch (line) {
        case BoundaryLine::XZero:
        case BoundaryLine::XFull:
        case BoundaryLine::YZero:
        case BoundaryLine::YFull: return BoundaryKind::Edge;
        case BoundaryLine::XMidline:
        case BoundaryLine::YMidline: return BoundaryKind::Midline;
        case BoundaryLine::Diagonal:
        case BoundaryLine::AntiDiagonal: return BoundaryKind::Diagonal;
    }
    return BoundaryKind::Edge;
}

std::string_view boundary_line_name(BoundaryLine line) {
    return kLineNames[static_cast<std::size_t>(line)];
}

std::optional<BoundaryLine> parse_boundary_line(std::string_view s) {
    return lookup<BoundaryLine>(kLineNames, s);
}

std::string_view boundary_kind_name(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::Edge: return "edge";
        case BoundaryKind::Midline: return "midline";
        case BoundaryKind::Diagonal: return "diagonal";
    }
    return "?";
}

std::string_view parity_clause_name(ParityClause clause) {
    return kClauseNames[static_cast<std::size_t>(clause)];
}

std::optional<ParityClause> parse_parity_clause(std::string_view s) {
    return lookup<ParityClause>(kClauseNames, s);
}

void validate_nonresidue_primes(std::span<const UInt> primes) {
    for (UInt p : primes) {
        if (p < 3 || !is_prime(p) || jacobi(2, static_cast<Int>(p)) != -1) {
            throw std::invalid_argument("configured prime " + std::to_string(p) +
                                        " is not an odd prime with (2/p) = -1");
        }
    }
}

FilterConfig::FilterConfig()
    : FilterConfig({kAllFilters.begin(), kAllFilters.end()}, two_nonresidue_primes(100),
                   two_nonresidue_primes(100)) {}

FilterConfig::FilterConfig(std::vector<FilterId> enabled, std::vector<UInt> theorem2_primes,
                           std::vector<UInt> theorem4_primes, UInt lemma3_bound)
    : theorem2_primes_(std::move(theorem2_primes)),
      theorem4_primes_(std::move(theorem4_primes)),
      lemma3_bound_(lemma3_bound) {
    validate_nonresidue_primes(theorem2_primes_);
    validate_nonresidue_primes(theorem4_primes_);
    for (auto* v : {&theorem2_primes_, &theorem4_primes_}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    for (FilterId id : enabled) enabled_[static_cast<std::size_t>(id)] = true;
    if (lemma3_bound_ >= 2) lemma3_multipliers_ = lemma3_multipliers(lemma3_bound_);
}

FilterConfig FilterConfig::with_filters(std::vector<FilterId> enabled) {
    return FilterConfig(std::move(enabled), two_nonresidue_primes(100), two_nonresidue_primes(100));
}

std::vector<FilterId> FilterConfig::enabled_filters() const {
    std::vector<FilterId> out;
    for (FilterId id : kAllFilters) {
        if (enabled(id)) out.push_back(id);
    }
    return out;
}

bool FilterConfig::is_lemma3_multiplier(UInt n) const {
    return contains_sorted(lemma3_multipliers_, n);
}

std::optional<ShapeSplit> shape_split(UInt w) {
    if (w == 0) return std::nullopt;
    const unsigned h = two_adic_valuation(w);
    if (h < 1 || h >= 63) return std::nullopt;
    const UInt m = w >> h;
    if ((UInt{1} << h) <= m) return std::nullopt;
    Factorization f = factorize(m);
    for (const auto& pf : f.factors) {
        if (!shape_prime_allowed(pf.prime)) return std::nullopt;
    }
    return ShapeSplit{h, m, std::move(f)};
}

Verdict filter_boundary(const Candidate& c) {
    if (!c.in_bounds()) throw std::invalid_argument("candidate outside its square");
    auto hit = [](BoundaryLine l) { return eliminated(FilterId::Boundary, BoundaryWitness{l}); };
    if (c.x == 0) return hit(BoundaryLine::XZero);
    if (c.x == c.z) return hit(BoundaryLine::XFull);
    if (c.y == 0) return hit(BoundaryLine::YZero);
    if (c.y == c.z) return hit(BoundaryLine::YFull);
    if (2 * c.x == c.z) return hit(BoundaryLine::XMidline);
    if (2 * c.y == c.z) return hit(BoundaryLine::YMidline);
    if (c.x == c.y) return hit(BoundaryLine::Diagonal);
    if (c.x == c.z - c.y) return hit(BoundaryLine::AntiDiagonal);
    return std::nullopt;
}

namespace {

template <typename IsMultiplier>
Verdict lemma3_impl(const Candidate& c, IsMultiplier&& is_multiplier) {
    for (Side s : {Side::X, Side::Y, Side::ZMinusX, Side::ZMinusY}) {
        const Int d = side_value(c, s);
        if (d <= 0 || c.z % d != 0) continue;
        const UInt n = static_cast<UInt>(c.z / d);
        if (is_multiplier(n)) return eliminated(FilterId::Lemma3, Lemma3Witness{s, d, n});
    }
    return std::nullopt;
}

}  // namespace

Verdict filter_lemma3(const Candidate& c, const FilterConfig& cfg) {
    return lemma3_impl(c, [&](UInt n) { return cfg.is_lemma3_multiplier(n); });
}

Verdict filter_lemma3(const Candidate& c) {
    return lemma3_impl(c, [](UInt n) {
        return is_prime(n) && is_prime(checked_add(checked_mul(n, n), UInt{4}));
    });
}

Verdict filter_parity_residue(const Candidate& c) {
    auto hit = [](ParityClause clause, std::optional<Corner> corner = std::nullopt) {
        return eliminated(FilterId::ParityResidue, ParityWitness{clause, corner});
    };
    const bool x_odd = c.x % 2 != 0;
    const bool y_odd = c.y % 2 != 0;
    if (x_odd == y_odd) return hit(ParityClause::NotExactlyOneOdd);
    const Int even = x_odd ? c.y : c.x;
    if (even % 4 != 0) return hit(ParityClause::EvenNotMultipleOf4);
    if (c.z % 12 != 0) return hit(ParityClause::ZNotMultipleOf12);
    const CornerLegs legs = corner_legs(c);
    for (Corner k : kCorners) {
        if (legs[k].a % 3 != 0 && legs[k].b % 3 != 0)
            return hit(ParityClause::CornerWithoutMultipleOf3, k);
    }
    return std::nullopt;
}

Verdict filter_theorem1(const Candidate& c) {
    const CornerLegs legs = corner_legs(c);
    for (Corner k : kCorners) {
        const LegPair& l = legs[k];
        for (auto [sq, other] : {std::pair{l.a, l.b}, std::pair{l.b, l.a}}) {
            const UInt lhs = checked_mul(static_cast<UInt>(sq), static_cast<UInt>(sq));
            const UInt rhs = 2 * static_cast<UInt>(other) + 1;
            if (lhs < rhs)
                return eliminated(FilterId::Theorem1, InequalityWitness{k, sq, other, lhs, rhs});
        }
    }
    return std::nullopt;
}

namespace {

Verdict theorem2_impl(const Candidate& c, std::span<const UInt> primes) {
    const CornerLegs legs = corner_legs(c);
    for (UInt p : primes) {
        const Int ip = static_cast<Int>(p);
        // Corners A and C share x = y (mod p); B and D share x + y = z (mod p).
        const bool same_xy = (c.x - c.y) % ip == 0;
        const bool same_sum = (c.x + c.y - c.z) % ip == 0;
        if (!same_xy && !same_sum) continue;
        const Corner k = same_xy ? Corner::A : Corner::B;
        return eliminated(FilterId::Theorem2, CongruenceWitness{p, k, legs[k].a, legs[k].b});
    }
    return std::nullopt;
}

}  // namespace

Verdict filter_theorem2(const Candidate& c, std::span<const UInt> primes) {
    validate_nonresidue_primes(primes);
    return theorem2_impl(c, primes);
}

Verdict filter_theorem3(const Candidate& c) {
    for (Side s : {Side::X, Side::ZMinusX}) {
        const Int v = side_value(c, s);
        if (v > 2 && v % 2 != 0 && is_prime(static_cast<UInt>(v)))
            return eliminated(FilterId::Theorem3, PrimeWitness{s, v});
    }
    return std::nullopt;
}

namespace {

Verdict theorem4_impl(const Candidate& c, std::span<const UInt> primes) {
    for (Side s : {Side::X, Side::ZMinusX}) {
        const Int v = side_value(c, s);
        if (v < 2) continue;
        const auto pp = prime_power_root(static_cast<UInt>(v));
        if (pp && std::find(primes.begin(), primes.end(), pp->prime) != primes.end())
            return eliminated(FilterId::Theorem4, PrimePowerWitness{s, v, pp->prime, pp->exponent});
    }
    return std::nullopt;
}

}  // namespace

Verdict filter_theorem4(const Candidate& c, std::span<const UInt> primes) {
    validate_nonresidue_primes(primes);
    return theorem4_impl(c, primes);
}

Verdict filter_theorem5(const Candidate& c) {
    for (Side s : {Side::Y, Side::ZMinusY}) {
        const Int t = side_value(c, s);
        if (t <= 0 || t % 4 != 0) continue;
        if (auto split = shape_split(static_cast<UInt>(t) / 2)) {
            return eliminated(FilterId::Theorem5,
                              ShapeWitness{s, t, split->h, split->m, std::move(split->m_factors)});
        }
    }
    return std::nullopt;
}

Verdict filter_cor52(const Candidate& c) {
    for (Side s : {Side::X, Side::ZMinusX}) {
        const Int t = side_value(c, s);
        if (t < 3 || t % 2 == 0) continue;
        const UInt ut = static_cast<UInt>(t);
        for (UInt q2 : divisors(ut)) {
            const UInt q1 = ut / q2;
            if (q1 <= q2) break;
            if (!two_is_nonresidue(q1) || !two_is_nonresidue(q2)) continue;
            const UInt quarter = (checked_mul(q1, q1) - q2 * q2) / 4;
            if (auto split = shape_split(quarter)) {
                return eliminated(FilterId::Corollary52,
                                  Cor52Witness{s, t, q1, q2, split->h, split->m});
            }
        }
    }
    return std::nullopt;
}

Verdict filter_theorem6(const Candidate& c) {
    if (c.x <= 0 || c.x >= c.z) return std::nullopt;
    const auto first = nonresidue_semiprime(static_cast<UInt>(c.x));
    if (!first) return std::nullopt;
    const auto second = nonresidue_semiprime(static_cast<UInt>(c.z - c.x));
    if (!second) return std::nullopt;
    return eliminated(FilterId::Theorem6,
                      Theorem6Witness{first->first, first->second, second->first, second->second});
}

Verdict run_filter(FilterId id, const Candidate& c, const FilterConfig& cfg) {
    switch (id) {
        case FilterId::Boundary: return filter_boundary(c);
        case FilterId::Lemma3: return filter_lemma3(c, cfg);
        case FilterId::ParityResidue: return filter_parity_residue(c);
        case FilterId::Theorem1: return filter_theorem1(c);
        case FilterId::Theorem2: return theorem2_impl(c, cfg.theorem2_primes());
        case FilterId::Theorem3: return filter_theorem3(c);
        case FilterId::Theorem4: return theorem4_impl(c, cfg.theorem4_primes());
        case FilterId::Theorem5: return filter_theorem5(c);
        case FilterId::Corollary52: return filter_cor52(c);
        case FilterId::Theorem6: return filter_theorem6(c);
    }
    return std::nullopt;
}

std::string_view mode_name(AttributionMode m) {
    return m == AttributionMode::FirstHit ? "first" : "full";
}

std::optional<AttributionMode> parse_mode(std::string_view s) {
    if (s == "first") return AttributionMode::FirstHit;
    if (s == "full") return AttributionMode::Full;
    return std::nullopt;
}

bool Attribution::survived() const {
    return std::none_of(outcomes.begin(), outcomes.end(),
                        [](const FilterOutcome& o) { return o.verdict.has_value(); });
}

std::optional<FilterId> Attribution::first_hit() const {
    for (const auto& o : outcomes) {
        if (o.verdict) return o.filter;
    }
    return std::nullopt;
}

Attribution run_pipeline(const Candidate& c, const FilterConfig& cfg, AttributionMode mode) {
    if (!is_primitive_interior(c))
        throw std::invalid_argument("run_pipeline requires a primitive interior candidate");
    Attribution out;
    for (FilterId id : kAllFilters) {
        if (!cfg.enabled(id)) continue;
        Verdict v = run_filter(id, c, cfg);
        if (mode == AttributionMode::FirstHit) {
            if (v) {
                out.outcomes.push_back({id, std::move(v)});
                break;
            }
        } else {
            out.outcomes.push_back({id, std::move(v)});
        }
    }
    return out;
}

}  // namespace fourdist
