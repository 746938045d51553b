#pragma once

// Finite words over a small integer alphabet, plus the border and
// occurrence primitives everything else is defined in terms of.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace privword {

using Symbol = std::uint8_t;

/// A finite sequence of symbol codes over an alphabet of size k.
/// Every code is < k; the empty word is valid.
class Word {
public:
    Word() = default;

    Word(std::vector<Symbol> symbols, unsigned alphabet_size)
        : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
        if (alphabet_size_ == 0 || alphabet_size_ > 256)
            throw std::invalid_argument("alphabet size must be in [1, 256]");
        for (Symbol s : symbols_)
            if (s >= alphabet_size_)
                throw std::invalid_argument("symbol code out of range for alphabet");
    }

    /// Maps each character of `text` to its position in `alphabet`.
    /// The default alphabet is binary ASCII: '0' -> 0, '1' -> 1.
    static Word parse(std::string_view text, std::string_view alphabet = "01") {
        if (alphabet.empty() || alphabet.size() > 256)
            throw std::invalid_argument("alphabet must have between 1 and 256 symbols");
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet.find(alphabet[i], i + 1) != std::string_view::npos)
                throw std::invalid_argument("alphabet contains a duplicate symbol");
        std::vector<Symbol> symbols;
        symbols.reserve(text.size());
        for (char c : text) {
            auto pos = alphabet.find(c);
            if (pos == std::string_view::npos)
                throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
            symbols.push_back(static_cast<Symbol>(pos));
        }
        return Word(std::move(symbols), static_cast<unsigned>(alphabet.size()));
    }

    /// Renders symbol codes back to characters of `alphabet`.
    std::string str(std::string_view alphabet = "01") const {
        std::string out;
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) {
            if (s >= alphabet.size())
                throw std::invalid_argument("alphabet too small to render word");
            out.push_back(alphabet[s]);
        }
        return out;
    }

    std::span<const Symbol> view() const { return {symbols_.data(), symbols_.size()}; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    unsigned alphabet_size() const { return alphabet_size_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    Word prefix(std::size_t len) const {
        if (len > size()) throw std::out_of_range("prefix length exceeds word length");
        return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len), alphabet_size_);
    }

    Word suffix(std::size_t len) const {
        if (len > size()) throw std::out_of_range("suffix length exceeds word length");
        return Word(std::vector<Symbol>(symbols_.end() - len, symbols_.end()), alphabet_size_);
    }

    Word operator+(const Word& other) const {
        std::vector<Symbol> joined(symbols_);
        joined.insert(joined.end(), other.symbols_.begin(), other.symbols_.end());
        return Word(std::move(joined), std::max(alphabet_size_, other.alphabet_size_));
    }

    /// The j-fold concatenation of this word with itself; j = 0 gives the empty word.
    Word repeated(unsigned j) const {
        std::vector<Symbol> out;
        out.reserve(symbols_.size() * j);
        for (unsigned r = 0; r < j; ++r)
            out.insert(out.end(), symbols_.begin(), symbols_.end());
        return Word(std::move(out), alphabet_size_);
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Symbol> symbols_;
    unsigned alphabet_size_ = 2;
};

/// The lengths of the nonempty proper borders of a word, strictly increasing.
/// A border is a word that is both a prefix and a suffix.
struct BorderSet {
    std::vector<std::size_t> lengths;

    bool operator==(const BorderSet&) const = default;
};

inline BorderSet borders(std::span<const Symbol> w) {
    BorderSet result;
    const std::size_t n = w.size();
    for (std::size_t len = 1; len < n; ++len)
        if (std::equal(w.begin(), w.begin() + len, w.end() - len))
            result.lengths.push_back(len);
    return result;
}

inline BorderSet borders(const Word& w) { return borders(w.view()); }

/// Number of (possibly overlapping) occurrences of u in w.
/// u must be nonempty; the count of the empty word is degenerate and refused.
inline std::size_t count_occurrences(std::span<const Symbol> u, std::span<const Symbol> w) {
    if (u.empty())
        throw std::invalid_argument("occurrence count of the empty word is not defined here");
    if (u.size() > w.size()) return 0;
    std::size_t count = 0;
    const std::size_t last = w.size() - u.size();
    for (std::size_t i = 0; i <= last; ++i)
        if (std::equal(u.begin(), u.end(), w.begin() + i)) ++count;
    return count;
}

inline std::size_t count_occurrences(const Word& u, const Word& w) {
    return count_occurrences(u.view(), w.view());
}

struct Run {
    Symbol symbol;
    std::size_t length;

    bool operator==(const Run&) const = default;
};

/// First symbol of w and the length of its maximal run at the front.
inline Run leading_run(std::span<const Symbol> w) {
    if (w.empty()) throw std::invalid_argument("leading_run of empty word");
    std::size_t len = 1;
    while (len < w.size() && w[len] == w[0]) ++len;
    return {w[0], len};
}

/// Last symbol of w and the length of its maximal run at the back.
inline Run trailing_run(std::span<const Symbol> w) {
    if (w.empty()) throw std::invalid_argument("trailing_run of empty word");
    const std::size_t n = w.size();
    std::size_t len = 1;
    while (len < n && w[n - 1 - len] == w[n - 1]) ++len;
    return {w[n - 1], len};
}

inline Run leading_run(const Word& w) { return leading_run(w.view()); }
inline Run trailing_run(const Word& w) { return trailing_run(w.view()); }

} // namespace privword
