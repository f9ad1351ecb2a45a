#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Exact integer number theory used by the filters and the distance oracle.
// Values are 64-bit; products go through 128-bit intermediates and any
// result that does not fit raises std::overflow_error.

namespace fourdist {

using Int = std::int64_t;
using UInt = std::uint64_t;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
UInt checked_add(UInt a, UInt b);
UInt checked_mul(UInt a, UInt b);

/// a*a + b*b, throwing std::overflow_error when the sum leaves 64 bits.
UInt sum_of_squares(Int a, Int b);

Int gcd(Int a, Int b);

struct SqrtResult {
    UInt root = 0;
    bool exact = false;

    friend bool operator==(const SqrtResult&, const SqrtResult&) = default;
};

/// floor(sqrt(n)) plus whether n is a perfect square. Total on 64-bit input.
SqrtResult isqrt(UInt n);

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(UInt n);

struct PrimeFactor {
    UInt prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Canonical prime factorization: primes strictly increasing, empty for 1.
struct Factorization {
    std::vector<PrimeFactor> factors;

    UInt value() const;
    bool is_prime_power() const { return factors.size() == 1; }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Throws std::invalid_argument for n == 0.
Factorization factorize(UInt n);

/// All positive divisors of n, ascending.
std::vector<UInt> divisors(const Factorization& f);
std::vector<UInt> divisors(UInt n);

/// Jacobi symbol (a/n) for odd n >= 1; throws std::invalid_argument otherwise.
int jacobi(Int a, Int n);

/// True iff some w in [0, p) has w^2 = a (mod p). p must be an odd prime.
bool is_qr_bruteforce(Int a, Int p);

struct PrimePower {
    UInt prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, e) with p^e == n, or nullopt when n has two or more distinct primes.
/// Throws std::invalid_argument for n < 2.
std::optional<PrimePower> prime_power_root(UInt n);

/// Primes up to bound (inclusive), ascending, by sieve of Eratosthenes.
std::vector<UInt> primes_up_to(UInt bound);

/// Odd primes p <= bound with (2/p) = -1. Requires bound >= 3.
std::vector<UInt> two_nonresidue_primes(UInt bound);

/// Primes n <= bound with n^2 + 4 also prime. Requires bound >= 2.
std::vector<UInt> lemma3_multipliers(UInt bound);

/// Odd prime allowed as a factor of the odd part in the y-shape test:
/// p = 1 (mod 4) or (2/p) = -1. The literal form evaluates the Jacobi symbol;
/// the fast form uses the equivalent residue rule p mod 8 != 7.
bool shape_prime_allowed_literal(UInt p);
bool shape_prime_allowed(UInt p);

/// Realizes an odd leg as k(u^2 - v^2) with even partner 2kuv.
struct LegDecomposition {
    UInt k = 0;
    UInt u = 0;
    UInt v = 0;

    UInt odd_leg() const;
    UInt even_leg() const;

    friend auto operator<=>(const LegDecomposition&, const LegDecomposition&) = default;
};

/// Every (k, u, v) with u > v >= 1, gcd(u, v) = 1, u + v odd and
/// k(u^2 - v^2) == a, sorted by (k, u, v). Empty for a == 1; throws for even a.
std::vector<LegDecomposition> odd_leg_decompositions(UInt a);

/// All b >= 1 with a^2 + b^2 a perfect square, ascending. Uses divisor pairs
/// of a^2 of equal parity.
std::vector<UInt> pythagorean_partners(UInt a);

/// Largest e with 2^e | n (n > 0).
unsigned two_adic_valuation(UInt n);

}  // namespace fourdist
