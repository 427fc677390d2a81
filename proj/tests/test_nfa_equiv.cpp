#include <doctest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "kbinom/nfa_equiv.hpp"
#include "kbinom/oracle.hpp"
#include "support/brute_force.hpp"

using namespace kbinom;

namespace {

const Alphabet kBinary = Alphabet::from_symbols("ab");

Word ab(const std::string& s) { return parse_word(s, kBinary); }

// Rank over Q by plain rational Gaussian elimination.
std::size_t rational_rank(const std::vector<PathCountVector>& vs) {
    using boost::multiprecision::cpp_rational;
    if (vs.empty()) return 0;
    std::vector<std::vector<cpp_rational>> m;
    for (const auto& v : vs) {
        std::vector<cpp_rational> row;
        for (const auto& c : v.counts) row.emplace_back(c.str());
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            cpp_rational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("automaton size") {
    CHECK(LayeredNfa(parse_word("ab"), 1).state_count() == 4);
    CHECK(LayeredNfa(parse_word("0010"), 2).state_count() == 10);
    CHECK(LayeredNfa(parse_word("0010"), 2).states().size() == 10);
}

TEST_CASE("transition structure") {
    for (const auto& s : {std::string("bbaab"), std::string("abcab"), std::string("a")}) {
        for (long long k = 1; k <= 3; ++k) {
            LayeredNfa nfa(parse_word(s), k);
            const auto err = nfa.error();
            CHECK_FALSE(nfa.is_final(nfa.initial()));
            CHECK_FALSE(nfa.is_final(err));
            for (char a : nfa.word().alphabet().symbols()) {
                CHECK(nfa.successors(err, a) == std::vector<LayeredNfa::State>{err});
                for (const auto& st : nfa.states()) {
                    if (st != nfa.initial() && st != err && !nfa.is_final(st)) {
                        CHECK(st.position < st.layer);  // unreachable
                    }
                    if (st == err) continue;
                    for (const auto& next : nfa.successors(st, a)) {
                        if (next == err) continue;
                        CHECK(next.position > st.position);
                        CHECK(next.layer == st.layer + 1);
                        CHECK(nfa.word().at(next.position) == a);
                    }
                }
            }
        }
    }
}

TEST_CASE("accepting paths count scattered occurrences") {
    LayeredNfa bbaa(parse_word("bbaa"), 2);
    CHECK(bbaa.count_accepting_paths(parse_word("ba", bbaa.word().alphabet())) == 4);
    CHECK(bbaa.count_accepting_paths(parse_word("bab", bbaa.word().alphabet())) == 0);
    LayeredNfa bits(parse_word("0010"), 2);
    CHECK(bits.count_accepting_paths(parse_word("00")) == 3);
    CHECK(bits.count_accepting_paths(parse_word("000")) == 0);
}

TEST_CASE("path counts match subset enumeration for binary words up to length 7") {
    for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& w : brute::words_of_length("ab", n)) {
            for (long long k = 1; k <= 3; ++k) {
                LayeredNfa nfa(ab(w), k);
                for (const auto& x : brute::words_up_to("ab", static_cast<std::size_t>(k) + 1)) {
                    BigCount paths = nfa.count_accepting_paths(ab(x));
                    std::uint64_t expect = x.size() <= static_cast<std::size_t>(k) ? brute::binomial(w, x) : 0;
                    CHECK(paths == expect);
                }
            }
        }
    }
}

TEST_CASE("propagate") {
    AutomatonPair pair(parse_word("bbaa"), parse_word("abab"), 2);
    auto eps = pair.initial();
    CHECK(eps.counts.size() == pair.dimension());
    CHECK(pair.dimension() == 2 * (4 * 2 + 1));
    CHECK(eps.counts[0] == 1);
    CHECK(eps.counts[1] == 1);

    auto b = pair.propagate(eps, 'b');
    CHECK(b.label == "b");
    for (std::size_t i = 1; i <= 4; ++i) {
        CHECK(b.counts[pair.index(0, {i, 1})] == (i <= 2 ? 1 : 0));
        CHECK(b.counts[pair.index(1, {i, 1})] == (i % 2 == 0 ? 1 : 0));
    }
    CHECK(b.counts[0] == 0);

    AutomatonPair shared(parse_word("ab"), parse_word("ac"), 2);
    auto absent = shared.propagate(shared.propagate(shared.initial(), 'a'), 'a');
    CHECK(absent.is_zero());

    // Length k+1 leaves no non-error state.
    auto deep = pair.propagate(pair.propagate(b, 'a'), 'a');
    CHECK(deep.is_zero());
}

TEST_CASE("is_in_span") {
    AutomatonPair pair(parse_word("abba"), parse_word("baab"), 2);
    BasisList basis;
    auto a = pair.propagate(pair.initial(), 'a');
    CHECK_FALSE(basis.is_in_span(a));
    PathCountVector zero{"", std::vector<BigInt>(pair.dimension(), BigInt(0))};
    CHECK(basis.is_in_span(zero));
    CHECK_FALSE(basis.insert(zero));

    CHECK(basis.insert(a));
    CHECK(basis.is_in_span(a));
    auto twice = a;
    for (auto& c : twice.counts) c *= 2;
    CHECK(basis.is_in_span(twice));
    CHECK_FALSE(basis.insert(twice));

    auto b = pair.propagate(pair.initial(), 'b');
    CHECK_FALSE(basis.is_in_span(b));
    basis.insert(b);
    auto combo = a;
    for (std::size_t i = 0; i < combo.counts.size(); ++i) combo.counts[i] = 3 * a.counts[i] - 5 * b.counts[i];
    CHECK(basis.is_in_span(combo));
    CHECK(basis.size() == 2);
}

TEST_CASE("path_equivalent worked values") {
    auto eq = path_equivalent(parse_word("abba"), parse_word("baab"), 2);
    CHECK(eq.equivalent);
    CHECK_FALSE(eq.witness);

    auto ne = path_equivalent(parse_word("abba"), parse_word("baab"), 3);
    CHECK_FALSE(ne.equivalent);
    REQUIRE(ne.witness);
    CHECK(*ne.witness == "aab");

    for (const auto& w : {"", "a", "abcabc", "0010", "bbaa"}) {
        for (long long k = 1; k <= 4; ++k) CHECK(path_equivalent(parse_word(w), parse_word(w), k).equivalent);
    }
    CHECK_FALSE(path_equivalent(parse_word("ab"), parse_word("abb"), 2).equivalent);
    CHECK(path_equivalent(parse_word("aaa"), parse_word("aaa"), 5).equivalent);
    CHECK_FALSE(path_equivalent(parse_word("aaa"), parse_word("aa"), 1).equivalent);
}

TEST_CASE("path_equivalent agrees with the oracle on binary words up to length 6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        auto words = brute::words_of_length("ab", n);
        for (const auto& a : words) {
            for (const auto& b : words) {
                for (long long k = 1; k <= 4; ++k) {
                    auto v = path_equivalent(ab(a), ab(b), k);
                    CHECK(v.equivalent == brute::equivalent(a, b, static_cast<std::size_t>(k)));
                    CHECK(v.longest_explored <= static_cast<std::size_t>(k) + 1);
                    CHECK(v.basis_size <= 2 * (n * static_cast<std::size_t>(k) + 2));
                    if (!v.equivalent) {
                        REQUIRE(v.witness);
                        CHECK(v.witness == brute::first_difference(a, b, "ab", static_cast<std::size_t>(k)));
                    }
                }
            }
        }
    }
}

TEST_CASE("path_equivalent on larger alphabets and unequal lengths") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 400; ++iter) {
        std::string a, b;
        std::size_t na = rng() % 7, nb = iter % 4 == 0 ? rng() % 7 : na;
        std::size_t sigma = rng() % 3 + 1;
        for (std::size_t i = 0; i < na; ++i) a.push_back(static_cast<char>('a' + rng() % sigma));
        // Permutations of a are far more likely to be equivalent than random words.
        b = a;
        std::shuffle(b.begin(), b.end(), rng);
        b.resize(nb, 'a');
        long long k = static_cast<long long>(rng() % 4 + 1);
        auto [wa, wb] = common_alphabet(parse_word(a), parse_word(b));
        auto v = path_equivalent(wa, wb, k);
        CHECK(v.equivalent == oracle_equivalent(wa, wb, k));
        if (!v.equivalent) {
            REQUIRE(v.witness);
            CHECK(v.witness == brute::first_difference(a, b, wa.alphabet().symbols(), static_cast<std::size_t>(k)));
        }
    }
}

TEST_CASE("basis members are linearly independent") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 60; ++iter) {
        std::string a;
        std::size_t n = rng() % 6 + 1;
        for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<char>('a' + rng() % 2));
        std::string b = a;
        std::shuffle(b.begin(), b.end(), rng);
        auto [wa, wb] = common_alphabet(parse_word(a), parse_word(b));
        AutomatonPair pair(wa, wb, 3);
        BasisList basis;
        // Insert every word up to length 4 and compare against an independent rank.
        std::vector<PathCountVector> all{pair.initial()};
        basis.insert(all.back());
        for (const auto& x : brute::words_up_to(wa.alphabet().symbols(), 4)) {
            PathCountVector p = pair.initial();
            for (char c : x) p = pair.propagate(p, c);
            all.push_back(p);
            basis.insert(p);
        }
        CHECK(rational_rank(basis.members()) == basis.size());
        CHECK(rational_rank(all) == basis.size());
        for (const auto& p : all) CHECK(basis.is_in_span(p));
    }
}
