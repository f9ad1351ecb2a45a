#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "fourdist/arith.hpp"

namespace fourdist {

/// A lattice point (x, y) in the square with vertices A=(0,0), B=(0,z),
/// C=(z,z), D=(z,0). x is the distance to side AB, y to side AD.
struct Candidate {
    Int x = 0;
    Int y = 0;
    Int z = 1;

    bool in_bounds() const { return z >= 1 && 0 <= x && x <= z && 0 <= y && y <= z; }
    bool primitive() const { return gcd(gcd(x, y), z) == 1; }

    friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

/// Orders by z, then x, then y (report order).
struct ByZThenXY {
    bool operator()(const Candidate& a, const Candidate& b) const {
        return std::tie(a.z, a.x, a.y) < std::tie(b.z, b.x, b.y);
    }
};

enum class Corner { A, B, C, D };

inline constexpr std::array<Corner, 4> kCorners = {Corner::A, Corner::B, Corner::C, Corner::D};

std::string_view corner_name(Corner c);

struct LegPair {
    Int a = 0;
    Int b = 0;

    friend bool operator==(const LegPair&, const LegPair&) = default;
};

/// Axis-parallel legs from the point to each vertex, in A, B, C, D order:
/// A:(x,y), B:(x,z-y), C:(z-x,z-y), D:(z-x,y).
struct CornerLegs {
    std::array<LegPair, 4> legs;

    const LegPair& operator[](Corner c) const { return legs[static_cast<std::size_t>(c)]; }

    friend bool operator==(const CornerLegs&, const CornerLegs&) = default;
};

struct CornerDistance {
    UInt squared = 0;
    std::optional<UInt> root;

    friend bool operator==(const CornerDistance&, const CornerDistance&) = default;
};

struct DistanceProfile {
    std::array<CornerDistance, 4> corners;
    int integer_count = 0;

    const CornerDistance& operator[](Corner c) const {
        return corners[static_cast<std::size_t>(c)];
    }

    friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

CornerLegs corner_legs(const Candidate& c);

/// Exact squared vertex distances and their roots where they are squares.
/// Throws std::overflow_error if a squared distance leaves 64 bits.
DistanceProfile distance_profile(const Candidate& c);

/// Images of c under the eight symmetries of the square, sorted and unique.
std::vector<Candidate> orbit(const Candidate& c);

/// Least (x, y) over the orbit, restricted to odd-x images when any exist.
Candidate canonicalize(const Candidate& c);

bool is_canonical(const Candidate& c);

/// 0 < x < z, 0 < y < z and gcd(x, y, z) == 1.
bool is_primitive_interior(const Candidate& c);

}  // namespace fourdist
