#include "kbinom/matcher.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

#include "kbinom/nfa_equiv.hpp"
#include "kbinom/oracle.hpp"

namespace kbinom {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::det: return "det";
        case Method::mc: return "mc";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "oracle") return Method::oracle;
    if (name == "det") return Method::det;
    if (name == "mc") return Method::mc;
    throw InputError("unknown method '" + std::string(name) + "' (expected oracle, det or mc)");
}

bool decide(const Word& w1, const Word& w2, Order k, Method method, const McConfig& config) {
    switch (method) {
        case Method::oracle: return oracle_equivalent(w1, w2, k);
        case Method::det: return path_equivalent(w1, w2, k).equivalent;
        case Method::mc: return mc_equivalent(w1, w2, k, config).probably_equivalent;
    }
    return false;
}

MatchResult find_equivalent_factors(const Word& text, const Word& pattern, Order k, Method method,
                                    const McConfig& config, const MatchOptions& options) {
    if (pattern.empty()) throw InputError("pattern must be nonempty");
    MatchResult result;
    const std::size_t m = pattern.size();
    if (m > text.size()) return result;

    auto [t, p] = common_alphabet(text, pattern);
    const std::size_t windows = t.size() - m + 1;

    // Abelian equivalence is necessary for every k >= 1.
    std::vector<char> candidate(windows, 1);
    if (options.parikh_prefilter) {
        const auto target = letter_counts(p);
        auto counts = std::vector<std::size_t>(target.size(), 0);
        const auto digits = t.digits();
        std::size_t mismatched = 0;  // letters whose window count differs from target
        auto bump = [&](Digit d, bool add) {
            bool before = counts[d] == target[d];
            add ? ++counts[d] : --counts[d];
            bool after = counts[d] == target[d];
            if (before && !after) ++mismatched;
            if (!before && after) --mismatched;
        };
        for (std::size_t d = 0; d < target.size(); ++d) mismatched += target[d] != 0;
        for (std::size_t i = 0; i < m; ++i) bump(digits[i], true);
        for (std::size_t start = 0; start < windows; ++start) {
            if (start > 0) {
                bump(digits[start - 1], false);
                bump(digits[start + m - 1], true);
            }
            candidate[start] = mismatched == 0;
        }
    }

    std::optional<BinomialTable> pattern_table;
    if (method == Method::oracle) pattern_table = binomial_table(p, k);

    auto test_window = [&](std::size_t start) {
        Word window = factor(t, start + 1, start + m);
        switch (method) {
            case Method::oracle: return binomial_table(window, k) == *pattern_table;
            case Method::det: return path_equivalent(window, p, k).equivalent;
            case Method::mc: {
                McConfig window_config = config;
                window_config.seed = derive_seed(config.seed, start + 1);
                return mc_equivalent(window, p, k, window_config).probably_equivalent;
            }
        }
        return false;
    };

    std::vector<char> hit(windows, 0);
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, windows));
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](unsigned worker) {
        try {
            for (std::size_t start = worker; start < windows; start += threads) {
                if (candidate[start]) hit[start] = test_window(start);
            }
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    for (std::size_t start = 0; start < windows; ++start) {
        result.windows_tested += candidate[start];
        if (hit[start]) result.positions.push_back(start + 1);
    }
    return result;
}

}  // namespace kbinom
