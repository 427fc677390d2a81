#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kbinom/bigcount.hpp"
#include "kbinom/word.hpp"

namespace kbinom {

/// The layered automaton A_{w,k}.
///
/// States are (0,0), (i,j) for 1 <= i <= n and 1 <= j <= k, and the error
/// state (n+1,k+1); n*k+2 in total. Reading letter a in (i,j) moves to every
/// (l,j+1) with l > i and w[l] = a, or to the error state if there is none.
/// Every (i,j) with 1 <= j <= k and i >= j is final. Accepting paths labelled
/// x are in bijection with the occurrences of x as a scattered factor of w.
class LayeredNfa {
public:
    struct State {
        std::size_t position;
        std::size_t layer;
        bool operator==(const State&) const = default;
    };

    LayeredNfa(Word w, Order k);

    const Word& word() const noexcept { return word_; }
    std::size_t order() const noexcept { return k_; }
    std::size_t length() const noexcept { return word_.size(); }

    std::size_t state_count() const noexcept { return length() * k_ + 2; }
    std::vector<State> states() const;

    State initial() const noexcept { return {0, 0}; }
    State error() const noexcept { return {length() + 1, k_ + 1}; }
    bool is_final(State s) const noexcept;

    /// The transition function, with the error state made explicit.
    std::vector<State> successors(State s, char a) const;

    /// Number of accepting paths labelled `x`; zero for the empty word.
    BigCount count_accepting_paths(const Word& x) const;

private:
    Word word_;
    std::size_t k_;
};

/// Path counts for one label over the non-error states of two automata.
///
/// Coordinates are grouped by layer: the two initial states first, then
/// for each layer j the states (1..n1, j) of the first automaton followed by
/// (1..n2, j) of the second. The label is kept for witness reporting.
struct PathCountVector {
    std::string label;
    std::vector<BigInt> counts;

    bool is_zero() const;
};

/// The pair (A_{w1,k}, A_{w2,k}) explored jointly.
class AutomatonPair {
public:
    AutomatonPair(const Word& w1, const Word& w2, Order k);

    const LayeredNfa& first() const noexcept { return first_; }
    const LayeredNfa& second() const noexcept { return second_; }
    const Alphabet& alphabet() const noexcept { return first_.word().alphabet(); }

    std::size_t dimension() const noexcept { return 2 + k_ * (n1_ + n2_); }

    /// Coordinate of a non-error state; `side` is 0 or 1.
    std::size_t index(int side, LayeredNfa::State s) const;

    /// P(epsilon): one path to each initial state.
    PathCountVector initial() const;

    /// P(v a) from P(v).
    PathCountVector propagate(const PathCountVector& p, char a) const;

    /// Accepting-path totals of each automaton.
    BigInt accepted_first(const PathCountVector& p) const;
    BigInt accepted_second(const PathCountVector& p) const;

private:
    AutomatonPair(WordPair words, Order k);

    LayeredNfa first_;
    LayeredNfa second_;
    std::size_t k_;
    std::size_t n1_;
    std::size_t n2_;
};

/// Linearly independent PathCountVectors with an incrementally maintained
/// fraction-free echelon form over the integers.
class BasisList {
public:
    bool is_in_span(const PathCountVector& p) const;

    /// Adds `p` unless it is already in the span; returns whether it was added.
    bool insert(const PathCountVector& p);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<PathCountVector>& members() const noexcept { return members_; }

private:
    struct Row {
        std::vector<BigInt> values;
        std::size_t pivot;
        std::size_t lo;
        std::size_t hi;
    };

    // Reduces `v` against every row, leaving zeros in all pivot columns.
    void reduce(std::vector<BigInt>& v) const;

    std::vector<Row> rows_;
    std::vector<PathCountVector> members_;
};

struct PathVerdict {
    bool equivalent;
    /// Lexicographically first word with differing path counts.
    std::optional<std::string> witness;
    std::size_t basis_size = 0;
    std::size_t words_explored = 0;
    std::size_t longest_explored = 0;
};

/// Deterministic decision of w1 ~_k w2 by path equivalence of A_{w1,k} and
/// A_{w2,k}. Words are explored depth-first in lexicographic order; a word is
/// extended only if its path-count vector is independent of those kept so
/// far. The first kept word whose accepting-path totals differ is the
/// lexicographically smallest witness and stops the search.
PathVerdict path_equivalent(const Word& w1, const Word& w2, Order k);

}  // namespace kbinom
