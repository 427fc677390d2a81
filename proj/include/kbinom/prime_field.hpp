#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "kbinom/bigcount.hpp"

namespace kbinom {

using Rng = std::mt19937_64;

/// Raised when the prime sampler exhausts its candidate budget.
class SamplingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seed of the independent stream `stream` derived from `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [0, 2^bits).
BigInt random_bits(Rng& rng, std::size_t bits);

/// Uniform in [0, bound), bound > 0.
BigInt random_below(Rng& rng, const BigInt& bound);

/// Miller-Rabin test with `rounds` uniformly random bases in [2, m-2].
/// Requires m >= 3 and odd. Primes always pass; a composite survives a
/// single round with probability at most 1/4.
bool miller_rabin(const BigInt& m, unsigned rounds, Rng& rng);

/// Draws uniformly random odd t-bit numbers until one passes `rounds` rounds
/// of Miller-Rabin, trying at most `budget` candidates.
/// Throws SamplingFailure when the budget runs out, InputError when t < 2.
struct PrimeSample {
    BigInt prime;
    std::size_t candidates_tried;
};
PrimeSample sample_prime(std::size_t t, Rng& rng, std::size_t budget, unsigned rounds);

inline BigInt random_prime(std::size_t t, Rng& rng, std::size_t budget, unsigned rounds = 30) {
    return sample_prime(t, rng, budget, rounds).prime;
}

/// Integers modulo a prime p with 2^(t-1) <= p < 2^t.
class PrimeField {
public:
    explicit PrimeField(BigInt modulus);

    const BigInt& modulus() const noexcept { return p_; }
    std::size_t bit_length() const noexcept { return bits_; }

    BigInt reduce(const BigInt& a) const;
    BigInt add(const BigInt& a, const BigInt& b) const;
    BigInt sub(const BigInt& a, const BigInt& b) const;
    BigInt mul(const BigInt& a, const BigInt& b) const;
    BigInt pow(const BigInt& base, const BigInt& exponent) const;

    BigInt random_element(Rng& rng) const { return random_below(rng, p_); }

private:
    BigInt p_;
    std::size_t bits_;
};

}  // namespace kbinom
