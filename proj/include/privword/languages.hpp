#pragma once

// Executable membership characterizations for two slices of the privileged
// language over {0,1}, plus the power-closure property. The characterizations
// are validated exhaustively against the definitional oracle at small lengths.

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "privword/linear.hpp"
#include "privword/word.hpp"

namespace privword {

/// Exponent triple of the pattern 0^(a+1) 1 0^(b+1) 1 1 0^(c+1).
struct RunTriple {
    std::size_t a, b, c;

    bool operator==(const RunTriple&) const = default;
};

namespace detail {

// Length of the zero run starting at `pos`.
inline std::size_t zero_run_at(std::span<const Symbol> w, std::size_t pos) {
    std::size_t len = 0;
    while (pos + len < w.size() && w[pos + len] == 0) ++len;
    return len;
}

} // namespace detail

/// Parses w as 0^(a+1) 1 0^(b+1) 1 1 0^(c+1) with a, b, c >= 0;
/// empty if w is not of that shape (symbols other than 0/1 never match).
inline std::optional<RunTriple> parse_triple_run_pattern(std::span<const Symbol> w) {
    std::size_t pos = 0;
    const std::size_t first = detail::zero_run_at(w, pos);
    if (first == 0) return std::nullopt;
    pos += first;
    if (pos >= w.size() || w[pos] != 1) return std::nullopt;
    ++pos;
    const std::size_t second = detail::zero_run_at(w, pos);
    if (second == 0) return std::nullopt;
    pos += second;
    if (pos + 1 >= w.size() || w[pos] != 1 || w[pos + 1] != 1) return std::nullopt;
    pos += 2;
    const std::size_t third = detail::zero_run_at(w, pos);
    if (third == 0 || pos + third != w.size()) return std::nullopt;
    return RunTriple{first - 1, second - 1, third - 1};
}

inline std::optional<RunTriple> parse_triple_run_pattern(const Word& w) {
    return parse_triple_run_pattern(w.view());
}

/// Membership condition for privileged words inside the triple-run pattern:
/// a == c and a > b. Throws if w is not in the pattern.
inline bool triple_run_membership(std::span<const Symbol> w) {
    const auto triple = parse_triple_run_pattern(w);
    if (!triple) throw std::invalid_argument("word is not of the form 0+10+110+");
    return triple->a == triple->c && triple->a > triple->b;
}

inline bool triple_run_membership(const Word& w) { return triple_run_membership(w.view()); }

/// Parses w as 0^i 1 0^j with i, j >= 1; empty if not of that shape.
inline std::optional<std::pair<std::size_t, std::size_t>> parse_zero_one_zero(
    std::span<const Symbol> w) {
    const std::size_t first = detail::zero_run_at(w, 0);
    if (first == 0 || first >= w.size() || w[first] != 1) return std::nullopt;
    const std::size_t second = detail::zero_run_at(w, first + 1);
    if (second == 0 || first + 1 + second != w.size()) return std::nullopt;
    return std::make_pair(first, second);
}

inline std::optional<std::pair<std::size_t, std::size_t>> parse_zero_one_zero(const Word& w) {
    return parse_zero_one_zero(w.view());
}

/// Membership condition for privileged words inside 0+10+: the two zero runs
/// have equal length. Throws if w is not in the pattern.
inline bool zero_one_zero_membership(std::span<const Symbol> w) {
    const auto runs = parse_zero_one_zero(w);
    if (!runs) throw std::invalid_argument("word is not of the form 0+10+");
    return runs->first == runs->second;
}

inline bool zero_one_zero_membership(const Word& w) {
    return zero_one_zero_membership(w.view());
}

/// True iff the powers of w behave all-or-nothing up to j_max: if any w^k
/// with 1 <= k <= j_max is privileged, then every w^j with 0 <= j <= j_max is.
inline bool check_power_closure(const Word& w, unsigned j_max) {
    if (j_max < 1) throw std::invalid_argument("check_power_closure requires j_max >= 1");
    LinearChecker checker;
    bool any = false;
    bool all = true;
    for (unsigned j = 1; j <= j_max; ++j) {
        const bool privileged = checker.check(w.repeated(j)).privileged;
        any = any || privileged;
        all = all && privileged;
    }
    // w^0 is the empty word, privileged unconditionally.
    return !any || all;
}

} // namespace privword
