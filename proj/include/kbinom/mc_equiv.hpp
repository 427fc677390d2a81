#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kbinom/bigcount.hpp"
#include "kbinom/prime_field.hpp"
#include "kbinom/word.hpp"

namespace kbinom {

/// Parameters of the randomized decider. Unset fields take the defaults
/// computed from (k, sigma, n) by `resolve`.
struct McConfig {
    std::optional<std::size_t> bits;    ///< prime bit length t
    unsigned rounds = 30;               ///< Miller-Rabin rounds per candidate
    std::optional<std::size_t> budget;  ///< candidate cap, default 4 t^2
    unsigned trials = 1;
    std::uint64_t seed = 0;
    /// One Miller-Rabin round per candidate, overriding `rounds`.
    bool paper_faithful = false;
};

/// McConfig with every parameter fixed.
struct ResolvedMcConfig {
    std::size_t bits;
    unsigned rounds;
    std::size_t budget;
    unsigned trials;
    std::uint64_t seed;
};

/// ceil(k * ceil(log2 sigma) + 1 + 2 log2 n), at least 4 and large enough that
/// every prime of that length exceeds the degree of Q_{k,w}.
std::size_t default_bit_length(std::size_t k, std::size_t sigma, std::size_t n);

ResolvedMcConfig resolve(const McConfig& config, std::size_t k, std::size_t sigma, std::size_t n);

/// Exponent encoding a nonempty word v over an alphabet of size sigma:
/// sigma^|v| plus the base-sigma value of v's digits (bin(1v) for binary).
/// Over a unary alphabet, where that sum is always 1, the code is |v| + 1.
BigInt exponent_code(const Word& v);

/// Upper bound on the degree of Q_{k,w} over an alphabet of size sigma.
BigInt degree_bound(std::size_t k, std::size_t sigma);

/// Q_{k,w}(x) mod p where Q_{k,w} = sum over nonempty |v| <= k of
/// (w choose v) x^{exponent_code(v)}, in O(n k^2) field operations.
BigInt evaluate_q(const Word& w, Order k, const BigInt& x, const PrimeField& field);

struct McTrial {
    BigInt prime;
    BigInt point;
    BigInt difference;  ///< Q_{k,w1}(x) - Q_{k,w2}(x) in F_p
    std::size_t candidates_tried;
};

struct McVerdict {
    /// False only when some trial certified a difference (or lengths differ).
    bool probably_equivalent;
    bool length_mismatch = false;
    ResolvedMcConfig config;
    std::vector<McTrial> trials;
};

/// Monte-Carlo decision of w1 ~_k w2. Each trial samples a prime p, a point
/// x in {2, ..., p-1} and compares the fingerprints; trial i draws from the stream
/// derive_seed(seed, i). Equivalent words are never rejected.
/// Throws SamplingFailure if a prime cannot be found within the budget.
McVerdict mc_equivalent(const Word& w1, const Word& w2, Order k, const McConfig& config);

}  // namespace kbinom
