#include "kbinom/prime_field.hpp"

#include <string>

#include "kbinom/word.hpp"

namespace kbinom {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BigInt random_bits(Rng& rng, std::size_t bits) {
    BigInt value = 0;
    std::size_t filled = 0;
    while (filled < bits) {
        std::uint64_t chunk = rng();
        std::size_t take = std::min<std::size_t>(64, bits - filled);
        if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
        value |= BigInt(chunk) << filled;
        filled += take;
    }
    return value;
}

BigInt random_below(Rng& rng, const BigInt& bound) {
    if (bound <= 0) throw InputError("random_below needs a positive bound");
    const std::size_t bits = msb(bound) + 1;
    for (;;) {
        BigInt candidate = random_bits(rng, bits);
        if (candidate < bound) return candidate;
    }
}

bool miller_rabin(const BigInt& m, unsigned rounds, Rng& rng) {
    if (m < 3 || (m & 1) == 0) throw InputError("miller_rabin needs an odd integer >= 3");
    if (m == 3) return true;
    const BigInt m_minus_1 = m - 1;
    const std::size_t s = lsb(m_minus_1);
    const BigInt d = m_minus_1 >> s;
    const BigInt base_span = m - 3;  // bases in [2, m-2]

    for (unsigned round = 0; round < rounds; ++round) {
        BigInt a = 2 + random_below(rng, base_span);
        BigInt x = powm(a, d, m);
        if (x == 1 || x == m_minus_1) continue;
        bool composite = true;
        for (std::size_t r = 1; r < s; ++r) {
            x = (x * x) % m;
            if (x == m_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeSample sample_prime(std::size_t t, Rng& rng, std::size_t budget, unsigned rounds) {
    if (t < 2) throw InputError("prime bit length must be at least 2, got " + std::to_string(t));
    const BigInt top = BigInt(1) << (t - 1);
    for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
        BigInt candidate = random_bits(rng, t - 1) | top | 1;
        if (miller_rabin(candidate, rounds, rng)) return {std::move(candidate), attempt};
    }
    throw SamplingFailure("no " + std::to_string(t) + "-bit prime found in " +
                          std::to_string(budget) + " candidates");
}

PrimeField::PrimeField(BigInt modulus) : p_(std::move(modulus)) {
    if (p_ < 2) throw InputError("field modulus must be at least 2");
    bits_ = msb(p_) + 1;
}

BigInt PrimeField::reduce(const BigInt& a) const {
    BigInt r = a % p_;
    if (r < 0) r += p_;
    return r;
}

BigInt PrimeField::add(const BigInt& a, const BigInt& b) const {
    BigInt r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

BigInt PrimeField::sub(const BigInt& a, const BigInt& b) const {
    BigInt r = a - b;
    if (r < 0) r += p_;
    return r;
}

BigInt PrimeField::mul(const BigInt& a, const BigInt& b) const { return (a * b) % p_; }

BigInt PrimeField::pow(const BigInt& base, const BigInt& exponent) const {
    if (exponent == 0) return 1;
    return powm(reduce(base), exponent, p_);
}

}  // namespace kbinom
