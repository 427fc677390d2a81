#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kbinom {

/// Raised for malformed words, bad positions and invalid parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Digit = std::uint8_t;

/// A finite ordered alphabet of single-byte symbols.
///
/// Symbols are kept sorted by byte value, which fixes the order used for
/// lexicographic exploration and for exponent encoding. A symbol's digit is
/// its rank in that order.
class Alphabet {
public:
    Alphabet() { digit_.fill(kNone); }

    /// Builds an alphabet from arbitrary symbols; duplicates are merged.
    /// Throws InputError for whitespace, control or non-ASCII bytes.
    static Alphabet from_symbols(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char c) const noexcept {
        return digit_[static_cast<unsigned char>(c)] != kNone;
    }

    /// Rank of `c`; throws InputError if `c` is not a symbol.
    Digit digit(char c) const;
    char symbol(Digit d) const { return symbols_.at(d); }

    bool operator==(const Alphabet& other) const noexcept {
        return symbols_ == other.symbols_;
    }

private:
    static constexpr std::uint8_t kNone = 0xff;

    std::string symbols_;
    std::array<std::uint8_t, 256> digit_{};
};

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

/// A finite word over an Alphabet.
///
/// Positions are 1-based: `at(1)` is the first letter, `at(size())` the last.
/// The digit sequence is cached so the deciders never touch characters.
class Word {
public:
    Word() = default;

    /// Throws InputError if some letter of `text` is not in `alphabet`.
    Word(std::string_view text, Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& text() const noexcept { return text_; }
    std::span<const Digit> digits() const noexcept { return digits_; }

    std::size_t size() const noexcept { return text_.size(); }
    bool empty() const noexcept { return text_.empty(); }

    char at(std::size_t i) const;
    Digit digit_at(std::size_t i) const;

    /// Same letters, re-expressed over `alphabet` (a superset of the current one).
    Word over(const Alphabet& alphabet) const { return Word(text_, alphabet); }

    bool operator==(const Word& other) const noexcept {
        return text_ == other.text_ && alphabet_ == other.alphabet_;
    }

private:
    Alphabet alphabet_;
    std::string text_;
    std::vector<Digit> digits_;
};

/// Parses a single token. Without an alphabet, the alphabet is the sorted
/// set of letters occurring in `text`.
Word parse_word(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

Alphabet joint_alphabet(const Word& w1, const Word& w2);

/// Both words re-expressed over their joint alphabet.
struct WordPair {
    Word first;
    Word second;
};
WordPair common_alphabet(const Word& w1, const Word& w2);

/// The factor w[i..j], 1 <= i <= j <= |w|.
Word factor(const Word& w, std::size_t i, std::size_t j);

/// Order of the equivalence. Constructing from k < 1 throws InputError.
class Order {
public:
    Order(long long k);  // NOLINT(google-explicit-constructor)
    std::size_t value() const noexcept { return k_; }
    operator std::size_t() const noexcept { return k_; }

private:
    std::size_t k_;
};

/// Parikh vector of `w` indexed by digit.
std::vector<std::size_t> letter_counts(const Word& w);

}  // namespace kbinom
