#include "fourdist/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourdist {

namespace {

void require_bounds(const Candidate& c) {
    if (!c.in_bounds()) throw std::invalid_argument("candidate outside its square");
}

}  // namespace

std::string_view corner_name(Corner c) {
    switch (c) {
        case Corner::A: return "A";
        case Corner::B: return "B";
        case Corner::C: return "C";
        case Corner::D: return "D";
    }
    return "?";
}

CornerLegs corner_legs(const Candidate& c) {
    require_bounds(c);
    const Int rx = c.z - c.x;
    const Int ry = c.z - c.y;
    return CornerLegs{{LegPair{c.x, c.y}, LegPair{c.x, ry}, LegPair{rx, ry}, LegPair{rx, c.y}}};
}

DistanceProfile distance_profile(const Candidate& c) {
    const CornerLegs legs = corner_legs(c);
    DistanceProfile p;
    for (std::size_t i = 0; i < 4; ++i) {
        const UInt sq = sum_of_squares(legs.legs[i].a, legs.legs[i].b);
        const SqrtResult r = isqrt(sq);
        p.corners[i].squared = sq;
        if (r.exact) {
            p.corners[i].root = r.root;
            ++p.integer_count;
        }
    }
    return p;
}

std::vector<Candidate> orbit(const Candidate& c) {
    require_bounds(c);
    std::vector<Candidate> out;
    out.reserve(8);
    for (Int x : {c.x, c.z - c.x}) {
        for (Int y : {c.y, c.z - c.y}) {
            out.push_back({x, y, c.z});
            out.push_back({y, x, c.z});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Candidate canonicalize(const Candidate& c) {
    require_bounds(c);
    const Int xs[2] = {c.x, c.z - c.x};
    const Int ys[2] = {c.y, c.z - c.y};
    std::optional<Candidate> best_odd;
    std::optional<Candidate> best;
    auto consider = [&](Int x, Int y) {
        const Candidate im{x, y, c.z};
        if (!best || im < *best) best = im;
        if (x % 2 != 0 && (!best_odd || im < *best_odd)) best_odd = im;
    };
    for (Int x : xs) {
        for (Int y : ys) {
            consider(x, y);
            consider(y, x);
        }
    }
    return best_odd ? *best_odd : *best;
}

bool is_canonical(const Candidate& c) { return canonicalize(c) == c; }

bool is_primitive_interior(const Candidate& c) {
    return c.z >= 1 && 0 < c.x && c.x < c.z && 0 < c.y && c.y < c.z && c.primitive();
}

}  // namespace fourdist
