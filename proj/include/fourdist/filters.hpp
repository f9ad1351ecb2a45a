#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "fourdist/arith.hpp"
#include "fourdist/model.hpp"

// Necessary conditions for a four-distance point, one filter per result.
// "Eliminated" means the candidate cannot have four integer vertex
// distances; every elimination carries a witness that can be re-checked
// from the candidate with arithmetic alone (see witness.hpp).

namespace fourdist {

enum class FilterId {
    Boundary,
    Lemma3,
    ParityResidue,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Theorem5,
    Corollary52,
    Theorem6,
};

inline constexpr std::array<FilterId, 10> kAllFilters = {
    FilterId::Boundary, FilterId::Lemma3,   FilterId::ParityResidue, FilterId::Theorem1,
    FilterId::Theorem2, FilterId::Theorem3, FilterId::Theorem4,      FilterId::Theorem5,
    FilterId::Corollary52, FilterId::Theorem6,
};

/// Stable report identifier, e.g. "parity_residue".
std::string_view filter_name(FilterId id);
/// Human label, e.g. "Theorem 5 / Corollary 5.1".
std::string_view filter_label(FilterId id);
std::optional<FilterId> parse_filter_id(std::string_view name);

/// Which of the four side distances a witness talks about.
enum class Side { X, Y, ZMinusX, ZMinusY };

std::string_view side_name(Side s);
std::optional<Side> parse_side(std::string_view s);
Int side_value(const Candidate& c, Side s);

enum class BoundaryLine { XZero, XFull, YZero, YFull, XMidline, YMidline, Diagonal, AntiDiagonal };
enum class BoundaryKind { Edge, Midline, Diagonal };

BoundaryKind boundary_kind(BoundaryLine line);
std::string_view boundary_line_name(BoundaryLine line);
std::optional<BoundaryLine> parse_boundary_line(std::string_view s);
std::string_view boundary_kind_name(BoundaryKind kind);

enum class ParityClause { NotExactlyOneOdd, EvenNotMultipleOf4, ZNotMultipleOf12, CornerWithoutMultipleOf3 };

std::string_view parity_clause_name(ParityClause clause);
std::optional<ParityClause> parse_parity_clause(std::string_view s);

struct BoundaryWitness {
    BoundaryLine line{};
    friend bool operator==(const BoundaryWitness&, const BoundaryWitness&) = default;
};

/// side distance d divides z with n = z/d, n and n^2+4 both prime.
struct Lemma3Witness {
    Side side{};
    Int d = 0;
    UInt n = 0;
    friend bool operator==(const Lemma3Witness&, const Lemma3Witness&) = default;
};

struct ParityWitness {
    ParityClause clause{};
    std::optional<Corner> corner;  // set for CornerWithoutMultipleOf3
    friend bool operator==(const ParityWitness&, const ParityWitness&) = default;
};

/// At `corner`, lhs = squared_leg^2 < rhs = 2*other_leg + 1.
struct InequalityWitness {
    Corner corner{};
    Int squared_leg = 0;
    Int other_leg = 0;
    UInt lhs = 0;
    UInt rhs = 0;
    friend bool operator==(const InequalityWitness&, const InequalityWitness&) = default;
};

/// The two legs at `corner` are congruent mod p, where (2/p) = -1.
struct CongruenceWitness {
    UInt p = 0;
    Corner corner{};
    Int leg_a = 0;
    Int leg_b = 0;
    friend bool operator==(const CongruenceWitness&, const CongruenceWitness&) = default;
};

struct PrimeWitness {
    Side side{};
    Int value = 0;
    friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

struct PrimePowerWitness {
    Side side{};
    Int value = 0;
    UInt p = 0;
    unsigned e = 0;
    friend bool operator==(const PrimePowerWitness&, const PrimePowerWitness&) = default;
};

/// target = 2^(h+1) * m, m odd, h >= 1, 2^h > m, every prime of m allowed.
struct ShapeWitness {
    Side side{};
    Int target = 0;
    unsigned h = 0;
    UInt m = 0;
    Factorization m_factors;
    friend bool operator==(const ShapeWitness&, const ShapeWitness&) = default;
};

/// target = q1 * q2, (2/q1) = (2/q2) = -1, (q1^2 - q2^2)/4 = 2^h * m in shape.
struct Cor52Witness {
    Side side{};
    Int target = 0;
    UInt q1 = 0;
    UInt q2 = 0;
    unsigned h = 0;
    UInt m = 0;
    friend bool operator==(const Cor52Witness&, const Cor52Witness&) = default;
};

/// x = p1*p2 and z-x = q1*q2, distinct odd primes within each pair, all with (2/.) = -1.
struct Theorem6Witness {
    UInt p1 = 0;
    UInt p2 = 0;
    UInt q1 = 0;
    UInt q2 = 0;
    friend bool operator==(const Theorem6Witness&, const Theorem6Witness&) = default;
};

using Witness = std::variant<BoundaryWitness, Lemma3Witness, ParityWitness, InequalityWitness,
                             CongruenceWitness, PrimeWitness, PrimePowerWitness, ShapeWitness,
                             Cor52Witness, Theorem6Witness>;

struct Elimination {
    FilterId filter{};
    Witness witness;
    friend bool operator==(const Elimination&, const Elimination&) = default;
};

/// nullopt is Undecided.
using Verdict = std::optional<Elimination>;

/// Immutable after construction. The constructor rejects theorem-2/4 primes
/// that are not odd primes with (2/p) = -1.
class FilterConfig {
public:
    FilterConfig();
    FilterConfig(std::vector<FilterId> enabled, std::vector<UInt> theorem2_primes,
                 std::vector<UInt> theorem4_primes, UInt lemma3_bound = 10000);

    static FilterConfig with_filters(std::vector<FilterId> enabled);

    bool enabled(FilterId id) const { return enabled_[static_cast<std::size_t>(id)]; }
    std::vector<FilterId> enabled_filters() const;
    std::span<const UInt> theorem2_primes() const { return theorem2_primes_; }
    std::span<const UInt> theorem4_primes() const { return theorem4_primes_; }
    UInt lemma3_bound() const { return lemma3_bound_; }
    bool is_lemma3_multiplier(UInt n) const;

private:
    std::array<bool, kAllFilters.size()> enabled_{};
    std::vector<UInt> theorem2_primes_;
    std::vector<UInt> theorem4_primes_;
    UInt lemma3_bound_ = 10000;
    std::vector<UInt> lemma3_multipliers_;
};

/// Throws std::invalid_argument unless every p is an odd prime with (2/p) = -1.
void validate_nonresidue_primes(std::span<const UInt> primes);

/// w = 2^h * m with m odd, h >= 1, 2^h > m and every prime of m allowed.
struct ShapeSplit {
    unsigned h = 0;
    UInt m = 0;
    Factorization m_factors;
};
std::optional<ShapeSplit> shape_split(UInt w);

Verdict filter_boundary(const Candidate& c);
Verdict filter_lemma3(const Candidate& c, const FilterConfig& cfg);
Verdict filter_lemma3(const Candidate& c);
Verdict filter_parity_residue(const Candidate& c);
Verdict filter_theorem1(const Candidate& c);
Verdict filter_theorem2(const Candidate& c, std::span<const UInt> primes);
Verdict filter_theorem3(const Candidate& c);
Verdict filter_theorem4(const Candidate& c, std::span<const UInt> primes);
Verdict filter_theorem5(const Candidate& c);
Verdict filter_cor52(const Candidate& c);
Verdict filter_theorem6(const Candidate& c);

/// Runs a single filter with its configured parameters.
Verdict run_filter(FilterId id, const Candidate& c, const FilterConfig& cfg);

enum class AttributionMode { FirstHit, Full };

std::string_view mode_name(AttributionMode m);
std::optional<AttributionMode> parse_mode(std::string_view s);

struct FilterOutcome {
    FilterId filter{};
    Verdict verdict;
    friend bool operator==(const FilterOutcome&, const FilterOutcome&) = default;
};

/// FirstHit: at most one outcome, the first elimination in FilterId order.
/// Full: one outcome per enabled filter, in FilterId order.
struct Attribution {
    std::vector<FilterOutcome> outcomes;

    bool survived() const;
    std::optional<FilterId> first_hit() const;

    friend bool operator==(const Attribution&, const Attribution&) = default;
};

/// Requires is_primitive_interior(c); throws std::invalid_argument otherwise.
Attribution run_pipeline(const Candidate& c, const FilterConfig& cfg, AttributionMode mode);

}  // namespace fourdist
