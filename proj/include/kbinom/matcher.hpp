#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kbinom/mc_equiv.hpp"
#include "kbinom/word.hpp"

namespace kbinom {

enum class Method { oracle, det, mc };

std::string_view to_string(Method m);
/// Throws InputError for anything other than "oracle", "det" or "mc".
Method parse_method(std::string_view name);

/// Decides w1 ~_k w2 with the chosen method; `config` is only read for mc.
bool decide(const Word& w1, const Word& w2, Order k, Method method, const McConfig& config);

struct MatchOptions {
    /// Skip windows whose Parikh vector differs from the pattern's.
    bool parikh_prefilter = true;
    /// Worker threads; 0 means hardware concurrency. Output never depends on it.
    unsigned threads = 1;
};

struct MatchResult {
    /// Sorted 1-based start positions.
    std::vector<std::size_t> positions;
    std::size_t windows_tested = 0;
};

/// Every i with text[i .. i+|pattern|-1] ~_k pattern. With method mc, the
/// window at position i uses seed derive_seed(config.seed, i).
/// Throws InputError for an empty pattern.
MatchResult find_equivalent_factors(const Word& text, const Word& pattern, Order k, Method method,
                                    const McConfig& config = {}, const MatchOptions& options = {});

}  // namespace kbinom
