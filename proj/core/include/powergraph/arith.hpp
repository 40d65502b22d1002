#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Small-integer number theory by trial division. Inputs are bounded by the
// group order cap or by the cyclic closed-form cap (10^6), so nothing here
// needs to be clever.
namespace powergraph::arith {

inline constexpr std::uint64_t kClosedFormCap = 1'000'000;

/// Prime factorization as (prime, exponent) pairs with ascending primes.
/// factorize(1) is empty. Throws std::invalid_argument for 0.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True for 1 and for p^k with p prime, k >= 1.
bool is_prime_power(std::uint64_t n);

/// Ascending list of positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace powergraph::arith
