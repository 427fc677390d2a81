#pragma once

#include <map>
#include <ostream>
#include <string>

#include "kbinom/bigcount.hpp"
#include "kbinom/word.hpp"

namespace kbinom {

/// Orders scattered factors by length, then lexicographically. Letters are
/// compared by byte value, which matches every Alphabet's symbol order.
struct ShortlexLess {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Sparse table of the nonzero coefficients (w choose v), 1 <= |v| <= k.
/// Absent entries are zero.
class BinomialTable {
public:
    using Entries = std::map<std::string, BigCount, ShortlexLess>;

    BinomialTable(std::size_t k, Entries entries) : k_(k), entries_(std::move(entries)) {}

    std::size_t order() const noexcept { return k_; }
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// The stored coefficient, or zero.
    BigCount operator[](const std::string& v) const;

    /// Equal when every coefficient agrees; both tables must have the same order.
    bool operator==(const BinomialTable& other) const {
        return k_ == other.k_ && entries_ == other.entries_;
    }

    /// Lines "v<TAB>count", shortlex order, each terminated by '\n'.
    std::string serialize() const;

private:
    std::size_t k_;
    Entries entries_;
};

std::ostream& operator<<(std::ostream& os, const BinomialTable& table);

/// Number of index sequences i_1 < ... < i_|v| with u[i_j] = v[j].
/// `v` must be nonempty; both words must share an alphabet.
BigCount binomial_coefficient(const Word& u, const Word& v);

BinomialTable binomial_table(const Word& w, Order k);

/// Exhaustive decision of w1 ~_k w2 by comparing binomial tables.
bool oracle_equivalent(const Word& w1, const Word& w2, Order k);

}  // namespace kbinom
