#include "kbinom/oracle.hpp"

#include <sstream>
#include <vector>

namespace kbinom {

BigCount BinomialTable::operator[](const std::string& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? BigCount(0) : it->second;
}

std::string BinomialTable::serialize() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const BinomialTable& table) {
    for (const auto& [v, count] : table.entries()) os << v << '\t' << count << '\n';
    return os;
}

namespace {

// C[j] = occurrences of v[1..j] in the prefix of u read so far; one pass over
// u with j descending realises C[i][j] = C[i-1][j] + [u[i] = v[j]] C[i-1][j-1].
BigCount count_occurrences(std::string_view u, std::string_view v) {
    if (v.size() > u.size()) return 0;
    std::vector<BigCount> c(v.size() + 1, BigCount(0));
    c[0] = 1;
    for (char letter : u) {
        for (std::size_t j = v.size(); j >= 1; --j) {
            if (v[j - 1] == letter) c[j] += c[j - 1];
        }
    }
    return c[v.size()];
}

}  // namespace

BigCount binomial_coefficient(const Word& u, const Word& v) {
    if (v.empty()) throw InputError("binomial coefficient needs a nonempty scattered factor");
    for (std::size_t pos = 1; pos <= v.size(); ++pos) {
        if (!u.alphabet().contains(v.at(pos))) {
            throw InputError(std::string("letter '") + v.at(pos) + "' at position " +
                             std::to_string(pos) + " is not in the alphabet {" +
                             u.alphabet().symbols() + "}");
        }
    }
    return count_occurrences(u.text(), v.text());
}

BinomialTable binomial_table(const Word& w, Order k) {
    BinomialTable::Entries entries;
    // Level t holds the scattered factors of length t; longer factors can only
    // extend occurring ones, so the candidate set stays sparse.
    std::vector<std::string> level{std::string()};
    const auto& symbols = w.alphabet().symbols();
    for (std::size_t t = 1; t <= k.value() && t <= w.size(); ++t) {
        std::vector<std::string> next;
        for (const auto& prefix : level) {
            for (char a : symbols) {
                std::string v = prefix + a;
                BigCount count = count_occurrences(w.text(), v);
                if (count != 0) {
                    entries.emplace(v, std::move(count));
                    next.push_back(std::move(v));
                }
            }
        }
        level = std::move(next);
    }
    return BinomialTable(k.value(), std::move(entries));
}

bool oracle_equivalent(const Word& w1, const Word& w2, Order k) {
    if (w1.size() != w2.size()) return false;
    return binomial_table(w1, k) == binomial_table(w2, k);
}

}  // namespace kbinom
