#include "kbinom/mc_equiv.hpp"

#include <algorithm>
#include <cmath>

namespace kbinom {

namespace {

std::size_t ceil_log2(std::size_t x) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < x) ++bits;
    return bits;
}

// Exponent of the sentinel multiplying the length-t part of Q.
BigInt sentinel_exponent(std::size_t t, std::size_t sigma) {
    if (sigma <= 1) return BigInt(t + 1);
    return boost::multiprecision::pow(BigInt(sigma), static_cast<unsigned>(t));
}

}  // namespace

BigInt degree_bound(std::size_t k, std::size_t sigma) {
    if (sigma <= 1) return BigInt(k + 1);
    // Largest code: sigma^k + (sigma^k - 1).
    return 2 * boost::multiprecision::pow(BigInt(sigma), static_cast<unsigned>(k)) - 1;
}

std::size_t default_bit_length(std::size_t k, std::size_t sigma, std::size_t n) {
    const double raw = static_cast<double>(k * ceil_log2(std::max<std::size_t>(sigma, 1))) + 1.0 +
                       2.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
    auto t = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    t = std::max<std::size_t>(t, 4);
    // 2^(t-1) > degree guarantees p > degree.
    const std::size_t degree_bits = msb(degree_bound(k, sigma)) + 1;
    return std::max(t, degree_bits + 1);
}

ResolvedMcConfig resolve(const McConfig& config, std::size_t k, std::size_t sigma, std::size_t n) {
    ResolvedMcConfig r{};
    r.bits = config.bits.value_or(default_bit_length(k, sigma, n));
    if (r.bits < 2) throw InputError("prime bit length must be at least 2");
    r.rounds = config.paper_faithful ? 1 : config.rounds;
    if (r.rounds < 1) throw InputError("at least one Miller-Rabin round is required");
    r.budget = config.budget.value_or(4 * r.bits * r.bits);
    if (r.budget < 1) throw InputError("candidate budget must be positive");
    r.trials = config.trials;
    if (r.trials < 1) throw InputError("at least one trial is required");
    r.seed = config.seed;
    return r;
}

BigInt exponent_code(const Word& v) {
    if (v.empty()) throw InputError("exponent code needs a nonempty word");
    const std::size_t sigma = v.alphabet().size();
    if (sigma == 1) return BigInt(v.size() + 1);
    BigInt value = 1;
    for (Digit d : v.digits()) value = value * sigma + d;
    return value;
}

BigInt evaluate_q(const Word& w, Order k, const BigInt& x, const PrimeField& field) {
    const std::size_t n = w.size();
    const std::size_t sigma = w.alphabet().size();
    const std::size_t depth = std::min<std::size_t>(k.value(), n);
    if (depth == 0) return 0;

    // step[j][d] = x^(d * sigma^(j-1)): the factor contributed by choosing a
    // letter with digit d as the first of j remaining positions.
    std::vector<std::vector<BigInt>> step(depth + 1);
    BigInt base = field.reduce(x);  // x^(sigma^(j-1))
    for (std::size_t j = 1; j <= depth; ++j) {
        step[j].resize(std::max<std::size_t>(sigma, 1));
        step[j][0] = 1;
        for (std::size_t d = 1; d < sigma; ++d) step[j][d] = field.mul(step[j][d - 1], base);
        if (sigma > 1) base = field.mul(step[j][sigma - 1], base);
    }

    // row[j] = T[j][i] = Q'_{j, w[i..n]}(x), swept from i = n+1 down to 1.
    std::vector<BigInt> row(depth + 1, BigInt(0));
    row[0] = 1;
    const auto digits = w.digits();
    for (std::size_t i = n; i >= 1; --i) {
        const Digit d = digits[i - 1];
        const std::size_t top = std::min(depth, n - i + 1);
        for (std::size_t j = top; j >= 1; --j) {
            row[j] = field.add(row[j], d == 0 ? row[j - 1] : field.mul(row[j - 1], step[j][d]));
        }
    }

    BigInt q = 0;
    for (std::size_t j = 1; j <= depth; ++j) {
        q = field.add(q, field.mul(field.pow(x, sentinel_exponent(j, sigma)), row[j]));
    }
    return q;
}

McVerdict mc_equivalent(const Word& w1, const Word& w2, Order k, const McConfig& config) {
    auto [a, b] = common_alphabet(w1, w2);
    const std::size_t n = std::max(a.size(), b.size());
    McVerdict verdict{true, false, resolve(config, k, a.alphabet().size(), n), {}};
    if (a.size() != b.size()) {
        verdict.probably_equivalent = false;
        verdict.length_mismatch = true;
        return verdict;
    }
    const auto& cfg = verdict.config;
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
        Rng rng(derive_seed(cfg.seed, trial));
        auto sample = sample_prime(cfg.bits, rng, cfg.budget, cfg.rounds);
        const PrimeField field(sample.prime);
        // 0 and 1 are roots of Q_{k,w1} - Q_{k,w2} whenever |w1| = |w2|.
        BigInt x = 2 + random_below(rng, field.modulus() - 2);
        BigInt diff = field.sub(evaluate_q(a, k, x, field), evaluate_q(b, k, x, field));
        const bool differs = !diff.is_zero();
        verdict.trials.push_back({field.modulus(), std::move(x), std::move(diff),
                                  sample.candidates_tried});
        if (differs) {
            verdict.probably_equivalent = false;
            break;
        }
    }
    return verdict;
}

}  // namespace kbinom
