#include "kbinom/word.hpp"

#include <algorithm>

namespace kbinom {

namespace {

bool is_token_char(unsigned char c) { return c > 0x20 && c < 0x7f; }

std::string describe(char c) {
    auto u = static_cast<unsigned char>(c);
    if (is_token_char(u)) return std::string("'") + c + "'";
    static constexpr char hex[] = "0123456789abcdef";
    return std::string("byte 0x") + hex[u >> 4] + hex[u & 0xf];
}

}  // namespace

Alphabet Alphabet::from_symbols(std::string_view symbols) {
    std::array<bool, 256> seen{};
    for (std::size_t pos = 0; pos < symbols.size(); ++pos) {
        auto c = static_cast<unsigned char>(symbols[pos]);
        if (!is_token_char(c)) {
            throw InputError("invalid symbol " + describe(symbols[pos]) + " at position " +
                             std::to_string(pos + 1));
        }
        seen[c] = true;
    }
    Alphabet result;
    for (unsigned c = 0; c < 256; ++c) {
        if (seen[c]) {
            result.digit_[c] = static_cast<std::uint8_t>(result.symbols_.size());
            result.symbols_.push_back(static_cast<char>(c));
        }
    }
    return result;
}

Digit Alphabet::digit(char c) const {
    auto d = digit_[static_cast<unsigned char>(c)];
    if (d == kNone) throw InputError("symbol " + describe(c) + " is not in the alphabet");
    return d;
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    return Alphabet::from_symbols(a.symbols() + b.symbols());
}

Word::Word(std::string_view text, Alphabet alphabet)
    : alphabet_(std::move(alphabet)), text_(text) {
    digits_.reserve(text_.size());
    for (std::size_t pos = 0; pos < text_.size(); ++pos) {
        if (!alphabet_.contains(text_[pos])) {
            throw InputError("symbol " + describe(text_[pos]) + " at position " +
                             std::to_string(pos + 1) + " is not in the alphabet {" +
                             alphabet_.symbols() + "}");
        }
        digits_.push_back(alphabet_.digit(text_[pos]));
    }
}

char Word::at(std::size_t i) const {
    if (i < 1 || i > size()) {
        throw InputError("position " + std::to_string(i) + " outside [1, " +
                         std::to_string(size()) + "]");
    }
    return text_[i - 1];
}

Digit Word::digit_at(std::size_t i) const {
    at(i);
    return digits_[i - 1];
}

Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet) {
    if (alphabet) return Word(text, *alphabet);
    return Word(text, Alphabet::from_symbols(text));
}

Alphabet joint_alphabet(const Word& w1, const Word& w2) {
    return alphabet_union(w1.alphabet(), w2.alphabet());
}

WordPair common_alphabet(const Word& w1, const Word& w2) {
    if (w1.alphabet() == w2.alphabet()) return {w1, w2};
    auto sigma = joint_alphabet(w1, w2);
    return {w1.over(sigma), w2.over(sigma)};
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
    if (i < 1 || j < i || j > w.size()) {
        throw InputError("factor [" + std::to_string(i) + ".." + std::to_string(j) +
                         "] is not a nonempty range of a word of length " +
                         std::to_string(w.size()));
    }
    return Word(std::string_view(w.text()).substr(i - 1, j - i + 1), w.alphabet());
}

Order::Order(long long k) {
    if (k < 1) throw InputError("order k must be at least 1, got " + std::to_string(k));
    k_ = static_cast<std::size_t>(k);
}

std::vector<std::size_t> letter_counts(const Word& w) {
    std::vector<std::size_t> counts(w.alphabet().size(), 0);
    for (auto d : w.digits()) ++counts[d];
    return counts;
}

}  // namespace kbinom
