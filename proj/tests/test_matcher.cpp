#include <doctest.h>

#include <algorithm>
#include <random>

#include "kbinom/matcher.hpp"
#include "support/brute_force.hpp"

using namespace kbinom;

namespace {

std::vector<std::size_t> brute_positions(const std::string& text, const std::string& pattern, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
        if (brute::equivalent(text.substr(i, pattern.size()), pattern, k)) out.push_back(i + 1);
    }
    return out;
}

}  // namespace

TEST_CASE("find_equivalent_factors worked values") {
    for (Method m : {Method::oracle, Method::det, Method::mc}) {
        CAPTURE(to_string(m));
        Word text = parse_word("abba");
        Word pattern = parse_word("ba");
        CHECK(find_equivalent_factors(text, pattern, 1, m).positions == std::vector<std::size_t>{1, 3});
        CHECK(find_equivalent_factors(text, pattern, 2, m).positions == std::vector<std::size_t>{3});
        CHECK(find_equivalent_factors(text, text, 3, m).positions == std::vector<std::size_t>{1});
        CHECK(find_equivalent_factors(parse_word("ab"), parse_word("abc"), 1, m).positions.empty());
        CHECK_THROWS_AS(find_equivalent_factors(text, parse_word(""), 1, m), InputError);
    }
}

TEST_CASE("method names") {
    CHECK(parse_method("det") == Method::det);
    CHECK(to_string(parse_method("oracle")) == "oracle");
    CHECK_THROWS_AS(parse_method("fast"), InputError);
}

TEST_CASE("pattern letters missing from the text") {
    CHECK(find_equivalent_factors(parse_word("aaaa"), parse_word("ab"), 1, Method::det).positions.empty());
    CHECK(find_equivalent_factors(parse_word("xaby"), parse_word("ba"), 1, Method::oracle).positions ==
          std::vector<std::size_t>{2});
}

TEST_CASE("prefilter and threading never change results") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        std::string text, pattern;
        std::size_t n = rng() % 60 + 1, m = rng() % 6 + 1;
        for (std::size_t i = 0; i < n; ++i) text.push_back(static_cast<char>('a' + rng() % 2));
        for (std::size_t i = 0; i < m; ++i) pattern.push_back(static_cast<char>('a' + rng() % 2));
        long long k = static_cast<long long>(rng() % 3 + 1);
        Word t = parse_word(text), p = parse_word(pattern);
        McConfig cfg;
        cfg.seed = rng();
        cfg.trials = 3;
        auto expect = brute_positions(text, pattern, static_cast<std::size_t>(k));
        for (Method method : {Method::oracle, Method::det, Method::mc}) {
            auto filtered = find_equivalent_factors(t, p, k, method, cfg, {true, 1});
            auto unfiltered = find_equivalent_factors(t, p, k, method, cfg, {false, 1});
            auto threaded = find_equivalent_factors(t, p, k, method, cfg, {true, 4});
            CHECK(filtered.positions == expect);
            if (method == Method::mc) {
                // Without the filter, non-abelian windows reach the randomized
                // decider, which may only ever add false positives.
                CHECK(std::includes(unfiltered.positions.begin(), unfiltered.positions.end(),
                                    filtered.positions.begin(), filtered.positions.end()));
            } else {
                CHECK(unfiltered.positions == filtered.positions);
            }
            CHECK(threaded.positions == filtered.positions);
            CHECK(unfiltered.windows_tested >= filtered.windows_tested);
        }
    }
}

TEST_CASE("all methods report the same positions on random texts") {
    std::mt19937_64 rng(404);
    std::size_t total = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 1 + rng() % 200;
        const std::size_t m = 1 + rng() % 8;
        const long long k = 1 + static_cast<long long>(rng() % 3);
        std::string text, pattern;
        for (std::size_t i = 0; i < n; ++i) text.push_back(rng() & 1 ? 'b' : 'a');
        for (std::size_t i = 0; i < m; ++i) pattern.push_back(rng() & 1 ? 'b' : 'a');
        const Alphabet ab = Alphabet::from_symbols("ab");
        const Word t(text, ab), p(pattern, ab);
        McConfig cfg;
        cfg.trials = 3;
        cfg.seed = static_cast<std::uint64_t>(iter);
        auto det = find_equivalent_factors(t, p, k, Method::det);
        auto oracle = find_equivalent_factors(t, p, k, Method::oracle);
        auto mc = find_equivalent_factors(t, p, k, Method::mc, cfg);
        CAPTURE(text);
        CAPTURE(pattern);
        CAPTURE(k);
        CHECK(det.positions == oracle.positions);
        CHECK(mc.positions == oracle.positions);
        total += oracle.positions.size();
    }
    CHECK(total > 0);
}
