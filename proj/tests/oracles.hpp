#pragma once

// Brute-force reference implementations. Nothing here calls into the
// fourdist library, so the tests compare two independent routes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 isqrt(u64 n) {
    u64 lo = 0, hi = std::min<u64>(n, 4294967295ULL);
    while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        if (static_cast<unsigned __int128>(mid) * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline bool is_square(u64 n) {
    const u64 r = isqrt(n);
    return r * r == n;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool residue_exists(i64 a, i64 p) {
    i64 r = ((a % p) + p) % p;
    for (i64 w = 0; w < p; ++w) {
        if ((w * w) % p == r) return true;
    }
    return false;
}

// Legendre symbol by exhaustive residue search; Jacobi by multiplicativity.
inline int legendre(i64 a, i64 p) {
    if (((a % p) + p) % p == 0) return 0;
    return residue_exists(a, p) ? 1 : -1;
}

inline int jacobi(i64 a, i64 n) {
    int s = 1;
    for (auto [p, e] : factorize(static_cast<u64>(n))) {
        const int l = legendre(a, static_cast<i64>(p));
        for (unsigned i = 0; i < e; ++i) s *= l;
    }
    return s;
}

inline std::vector<u64> partners(u64 a) {
    std::vector<u64> out;
    for (u64 b = 1; b <= (a * a) / 2; ++b) {
        if (is_square(a * a + b * b)) out.push_back(b);
    }
    return out;
}

inline u64 gcd(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::vector<std::tuple<u64, u64, u64>> leg_decompositions(u64 a) {
    std::vector<std::tuple<u64, u64, u64>> out;
    for (u64 k = 1; k <= a; ++k) {
        if (a % k) continue;
        for (u64 u = 2; u <= a; ++u) {
            for (u64 v = 1; v < u; ++v) {
                if ((u + v) % 2 == 0 || gcd(u, v) != 1) continue;
                if (k * (u * u - v * v) == a) out.emplace_back(k, u, v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Point {
    i64 x, y, z;
    auto operator<=>(const Point&) const = default;
};

// The dihedral group of the square acting on (x, y) in [0, z]^2.
inline std::set<Point> orbit(Point p) {
    std::set<Point> out;
    const i64 z = p.z;
    const std::array<std::array<i64, 2>, 8> images = {{
        {p.x, p.y},
        {z - p.x, p.y},
        {p.x, z - p.y},
        {z - p.x, z - p.y},
        {p.y, p.x},
        {z - p.y, p.x},
        {p.y, z - p.x},
        {z - p.y, z - p.x},
    }};
    for (auto [x, y] : images) out.insert({x, y, z});
    return out;
}

inline Point canonical(Point p) {
    const std::set<Point> o = orbit(p);
    for (const Point& q : o) {
        if (q.x % 2 != 0) return q;
    }
    return *o.begin();
}

inline int integer_distance_count(i64 x, i64 y, i64 z) {
    auto sq = [](i64 a, i64 b) { return static_cast<u64>(a * a + b * b); };
    return int(is_square(sq(x, y))) + int(is_square(sq(x, z - y))) + int(is_square(sq(z - x, z - y))) +
           int(is_square(sq(z - x, y)));
}

inline bool primitive(i64 x, i64 y, i64 z) {
    return gcd(gcd(static_cast<u64>(x), static_cast<u64>(y)), static_cast<u64>(z)) == 1;
}

}  // namespace oracle
