#include "fourdist/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fourdist {

namespace {

using u128 = unsigned __int128;

[[noreturn]] void overflow(const char* what) {
    throw std::overflow_error(std::string("integer overflow in ") + what);
}

UInt mulmod(UInt a, UInt b, UInt m) {
    return static_cast<UInt>(static_cast<u128>(a) * b % m);
}

UInt powmod(UInt base, UInt exp, UInt m) {
    UInt result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(UInt n, UInt a, UInt d, unsigned s) {
    UInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

constexpr UInt kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Brent's variant of Pollard rho. n must be odd and composite.
UInt pollard_brent(UInt n) {
    for (UInt c = 1;; ++c) {
        UInt y = 2, x = 2, g = 1, q = 1, ys = 2;
        const UInt m = 128;
        UInt r = 1;
        auto f = [&](UInt v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (UInt i = 0; i < r; ++i) y = f(y);
            UInt k = 0;
            do {
                ys = y;
                for (UInt i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void collect_factors(UInt n, std::vector<UInt>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    UInt d = pollard_brent(n);
    collect_factors(d, out);
    collect_factors(n / d, out);
}

}  // namespace

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

UInt checked_add(UInt a, UInt b) {
    UInt r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

UInt checked_mul(UInt a, UInt b) {
    UInt r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

UInt sum_of_squares(Int a, Int b) {
    UInt ua = static_cast<UInt>(a < 0 ? -static_cast<u128>(a) : a);
    UInt ub = static_cast<UInt>(b < 0 ? -static_cast<u128>(b) : b);
    return checked_add(checked_mul(ua, ua), checked_mul(ub, ub));
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

SqrtResult isqrt(UInt n) {
    UInt r = static_cast<UInt>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return {r, static_cast<u128>(r) * r == n};
}

bool is_prime(UInt n) {
    if (n < 2) return false;
    for (UInt p : kSmallPrimes) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    UInt d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are deterministic below 3.3e24.
    for (UInt a : kSmallPrimes) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

UInt Factorization::value() const {
    UInt v = 1;
    for (const auto& f : factors) {
        for (unsigned i = 0; i < f.exponent; ++i) v = checked_mul(v, f.prime);
    }
    return v;
}

Factorization factorize(UInt n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<UInt> primes;
    for (UInt p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    collect_factors(n, primes);
    std::sort(primes.begin(), primes.end());

    Factorization f;
    for (UInt p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

std::vector<UInt> divisors(const Factorization& f) {
    std::vector<UInt> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        UInt pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<UInt> divisors(UInt n) { return divisors(factorize(n)); }

int jacobi(Int a_signed, Int n_signed) {
    if (n_signed <= 0 || n_signed % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    UInt n = static_cast<UInt>(n_signed);
    Int m = a_signed % n_signed;
    if (m < 0) m += n_signed;
    UInt a = static_cast<UInt>(m);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const UInt r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool is_qr_bruteforce(Int a, Int p) {
    if (p < 3 || !is_prime(static_cast<UInt>(p)))
        throw std::invalid_argument("is_qr_bruteforce: modulus must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    for (Int w = 0; w < p; ++w) {
        if (static_cast<Int>(static_cast<u128>(w) * w % static_cast<UInt>(p)) == r) return true;
    }
    return false;
}

std::optional<PrimePower> prime_power_root(UInt n) {
    if (n < 2) throw std::invalid_argument("prime_power_root: n must be at least 2");
    const Factorization f = factorize(n);
    if (!f.is_prime_power()) return std::nullopt;
    return PrimePower{f.factors[0].prime, f.factors[0].exponent};
}

std::vector<UInt> primes_up_to(UInt bound) {
    std::vector<UInt> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (UInt p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (UInt m = p * p; m <= bound; m += p) composite[m] = true;
    }
    return out;
}

std::vector<UInt> two_nonresidue_primes(UInt bound) {
    if (bound < 3) throw std::invalid_argument("two_nonresidue_primes: bound must be at least 3");
    std::vector<UInt> out;
    for (UInt p : primes_up_to(bound)) {
        if (p != 2 && jacobi(2, static_cast<Int>(p)) == -1) out.push_back(p);
    }
    return out;
}

std::vector<UInt> lemma3_multipliers(UInt bound) {
    if (bound < 2) throw std::invalid_argument("lemma3_multipliers: bound must be at least 2");
    std::vector<UInt> out;
    for (UInt n : primes_up_to(bound)) {
        if (is_prime(checked_add(checked_mul(n, n), UInt{4}))) out.push_back(n);
    }
    return out;
}

bool shape_prime_allowed_literal(UInt p) {
    return p % 4 == 1 || jacobi(2, static_cast<Int>(p)) == -1;
}

bool shape_prime_allowed(UInt p) { return p % 8 != 7; }

UInt LegDecomposition::odd_leg() const {
    return checked_mul(k, checked_mul(u + v, u - v));
}

UInt LegDecomposition::even_leg() const {
    return checked_mul(checked_mul(2 * k, u), v);
}

std::vector<LegDecomposition> odd_leg_decompositions(UInt a) {
    if (a % 2 == 0) throw std::invalid_argument("odd_leg_decompositions: leg must be odd");
    std::vector<LegDecomposition> out;
    if (a == 1) return out;
    for (UInt k : divisors(a)) {
        const UInt m = a / k;
        // m = (u+v)(u-v) with u+v > u-v >= 1, both odd since m is odd.
        for (UInt d : divisors(m)) {
            const UInt s = m / d;
            if (s <= d) break;
            const UInt u = (s + d) / 2;
            const UInt v = (s - d) / 2;
            if (std::gcd(u, v) == 1) out.push_back({k, u, v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<UInt> pythagorean_partners(UInt a) {
    if (a == 0) throw std::invalid_argument("pythagorean_partners: leg must be positive");
    const UInt sq = checked_mul(a, a);
    Factorization f = factorize(a);
    for (auto& pf : f.factors) pf.exponent *= 2;
    std::vector<UInt> out;
    for (UInt d : divisors(f)) {
        const UInt e = sq / d;
        if (e <= d) break;
        if ((d & 1) == (e & 1)) out.push_back((e - d) / 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned two_adic_valuation(UInt n) {
    if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
    return static_cast<unsigned>(std::countr_zero(n));
}

}  // namespace fourdist
