#include "fourdist/witness.hpp"

#include <sstream>

namespace fourdist {

namespace {

Int distance_to_side(const Candidate& c, Side s) {
    switch (s) {
        case Side::X: return c.x;
        case Side::Y: return c.y;
        case Side::ZMinusX: return c.z - c.x;
        case Side::ZMinusY: return c.z - c.y;
    }
    return -1;
}

std::pair<Int, Int> legs_at(const Candidate& c, Corner k) {
    switch (k) {
        case Corner::A: return {c.x, c.y};
        case Corner::B: return {c.x, c.z - c.y};
        case Corner::C: return {c.z - c.x, c.z - c.y};
        case Corner::D: return {c.z - c.x, c.y};
    }
    return {-1, -1};
}

bool two_nonresidue_mod(UInt q) {
    if (q % 2 == 0) return false;
    // Brute-force residue check for primes in the usual range keeps this path
    // independent of the Jacobi evaluation used by the filters.
    if (q < (UInt{1} << 20) && is_prime(q)) return !is_qr_bruteforce(2, static_cast<Int>(q));
    return jacobi(2, static_cast<Int>(q)) == -1;
}

bool odd_prime_nonresidue(UInt p) { return p > 2 && is_prime(p) && two_nonresidue_mod(p); }

std::optional<UInt> pow_checked(UInt base, unsigned e) {
    UInt r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    }
    return r;
}

// w == 2^h * m with m odd, h >= 1, 2^h > m, every prime of m is 1 mod 4 or
// has 2 as a non-residue.
bool shape_holds(UInt w, unsigned h, UInt m) {
    if (h < 1 || h >= 63 || m % 2 == 0) return false;
    const UInt two_h = UInt{1} << h;
    UInt prod;
    if (__builtin_mul_overflow(two_h, m, &prod) || prod != w) return false;
    if (two_h <= m) return false;
    for (const auto& pf : factorize(m).factors) {
        if (!shape_prime_allowed_literal(pf.prime)) return false;
    }
    return true;
}

bool is_x_side(Side s) { return s == Side::X || s == Side::ZMinusX; }
bool is_y_side(Side s) { return s == Side::Y || s == Side::ZMinusY; }

struct Checker {
    const Candidate& c;

    bool operator()(const BoundaryWitness& w) const {
        switch (w.line) {
            case BoundaryLine::XZero: return c.x == 0;
            case BoundaryLine::XFull: return c.x == c.z;
            case BoundaryLine::YZero: return c.y == 0;
            case BoundaryLine::YFull: return c.y == c.z;
            case BoundaryLine::XMidline: return 2 * c.x == c.z;
            case BoundaryLine::YMidline: return 2 * c.y == c.z;
            case BoundaryLine::Diagonal: return c.x == c.y;
            case BoundaryLine::AntiDiagonal: return c.x + c.y == c.z;
        }
        return false;
    }

    bool operator()(const Lemma3Witness& w) const {
        if (w.d <= 0 || distance_to_side(c, w.side) != w.d) return false;
        if (static_cast<UInt>(w.d) * w.n != static_cast<UInt>(c.z)) return false;
        return is_prime(w.n) && is_prime(w.n * w.n + 4);
    }

    bool operator()(const ParityWitness& w) const {
        const bool exactly_one_odd = ((c.x + c.y) & 1) == 1;
        switch (w.clause) {
            case ParityClause::NotExactlyOneOdd: return !exactly_one_odd;
            case ParityClause::EvenNotMultipleOf4: {
                if (!exactly_one_odd) return false;
                const Int even = (c.x & 1) ? c.y : c.x;
                return even % 4 != 0;
            }
            case ParityClause::ZNotMultipleOf12: return c.z % 12 != 0;
            case ParityClause::CornerWithoutMultipleOf3: {
                if (!w.corner) return false;
                const auto [a, b] = legs_at(c, *w.corner);
                return a % 3 != 0 && b % 3 != 0;
            }
        }
        return false;
    }

    bool operator()(const InequalityWitness& w) const {
        const auto [a, b] = legs_at(c, w.corner);
        const bool legs_match = (w.squared_leg == a && w.other_leg == b) ||
                                (w.squared_leg == b && w.other_leg == a);
        if (!legs_match) return false;
        const auto sq = static_cast<unsigned __int128>(w.squared_leg) * w.squared_leg;
        const auto bound = static_cast<unsigned __int128>(2) * w.other_leg + 1;
        return sq == w.lhs && bound == w.rhs && sq < bound;
    }

    bool operator()(const CongruenceWitness& w) const {
        if (!odd_prime_nonresidue(w.p)) return false;
        const auto [a, b] = legs_at(c, w.corner);
        if (a != w.leg_a || b != w.leg_b) return false;
        return (a - b) % static_cast<Int>(w.p) == 0;
    }

    bool operator()(const PrimeWitness& w) const {
        if (!is_x_side(w.side) || distance_to_side(c, w.side) != w.value) return false;
        return w.value % 2 == 1 && is_prime(static_cast<UInt>(w.value));
    }

    bool operator()(const PrimePowerWitness& w) const {
        if (!is_x_side(w.side) || distance_to_side(c, w.side) != w.value) return false;
        if (w.e < 1 || !odd_prime_nonresidue(w.p)) return false;
        const auto power = pow_checked(w.p, w.e);
        return power && *power == static_cast<UInt>(w.value);
    }

    bool operator()(const ShapeWitness& w) const {
        if (!is_y_side(w.side) || distance_to_side(c, w.side) != w.target) return false;
        if (w.target <= 0 || w.target % 2 != 0) return false;
        if (w.m_factors.value() != w.m) return false;
        for (const auto& pf : w.m_factors.factors) {
            if (!is_prime(pf.prime)) return false;
        }
        return shape_holds(static_cast<UInt>(w.target) / 2, w.h, w.m);
    }

    bool operator()(const Cor52Witness& w) const {
        if (!is_x_side(w.side) || distance_to_side(c, w.side) != w.target) return false;
        if (w.q1 <= w.q2 || w.q1 * w.q2 != static_cast<UInt>(w.target)) return false;
        if (!two_nonresidue_mod(w.q1) || !two_nonresidue_mod(w.q2)) return false;
        const auto diff = static_cast<unsigned __int128>(w.q1) * w.q1 -
                          static_cast<unsigned __int128>(w.q2) * w.q2;
        if (diff % 4 != 0) return false;
        return shape_holds(static_cast<UInt>(diff / 4), w.h, w.m);
    }

    bool operator()(const Theorem6Witness& w) const {
        if (w.p1 == w.p2 || w.q1 == w.q2) return false;
        for (UInt p : {w.p1, w.p2, w.q1, w.q2}) {
            if (!odd_prime_nonresidue(p)) return false;
        }
        return w.p1 * w.p2 == static_cast<UInt>(c.x) &&
               w.q1 * w.q2 == static_cast<UInt>(c.z - c.x);
    }
};

}  // namespace

bool witness_holds(const Candidate& c, const Elimination& e) {
    if (e.witness.index() != static_cast<std::size_t>(e.filter)) return false;
    if (!c.in_bounds()) return false;
    return std::visit(Checker{c}, e.witness);
}

std::string describe_witness(const Witness& witness) {
    std::ostringstream os;
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, BoundaryWitness>) {
                os << boundary_kind_name(boundary_kind(w.line)) << " " << boundary_line_name(w.line);
            } else if constexpr (std::is_same_v<T, Lemma3Witness>) {
                os << side_name(w.side) << "=" << w.d << " with z/" << w.d << "=" << w.n << ", "
                   << w.n << " and " << w.n << "^2+4 prime";
            } else if constexpr (std::is_same_v<T, ParityWitness>) {
                os << parity_clause_name(w.clause);
                if (w.corner) os << " at " << corner_name(*w.corner);
            } else if constexpr (std::is_same_v<T, InequalityWitness>) {
                os << "corner " << corner_name(w.corner) << ": " << w.squared_leg << "^2=" << w.lhs
                   << " < 2*" << w.other_leg << "+1=" << w.rhs;
            } else if constexpr (std::is_same_v<T, CongruenceWitness>) {
                os << "corner " << corner_name(w.corner) << ": " << w.leg_a << " = " << w.leg_b
                   << " (mod " << w.p << ")";
            } else if constexpr (std::is_same_v<T, PrimeWitness>) {
                os << side_name(w.side) << "=" << w.value << " is an odd prime";
            } else if constexpr (std::is_same_v<T, PrimePowerWitness>) {
                os << side_name(w.side) << "=" << w.value << " = " << w.p << "^" << w.e;
            } else if constexpr (std::is_same_v<T, ShapeWitness>) {
                os << side_name(w.side) << "=" << w.target << " = 2^" << (w.h + 1) << "*" << w.m
                   << ", 2^" << w.h << " > " << w.m;
            } else if constexpr (std::is_same_v<T, Cor52Witness>) {
                os << side_name(w.side) << "=" << w.target << " = " << w.q1 << "*" << w.q2
                   << ", (q1^2-q2^2)/4 = 2^" << w.h << "*" << w.m;
            } else if constexpr (std::is_same_v<T, Theorem6Witness>) {
                os << "x = " << w.p1 << "*" << w.p2 << ", z-x = " << w.q1 << "*" << w.q2;
            }
        },
        witness);
    return os.str();
}

}  // namespace fourdist
