#pragma once

// Definition-based privilege oracle: a word is privileged if it has length
// <= 1 or has a privileged border occurring exactly twice in it (occurrences
// may overlap). This is the reference the linear checker is validated
// against, so it deliberately works from the raw definition and nothing else.

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "privword/word.hpp"

namespace privword {

/// Memoizing definitional oracle. Verdicts are cached by word value, so an
/// instance can be reused across many queries (e.g. exhaustive sweeps).
/// Instances are not thread-safe; give each thread its own.
class NaiveOracle {
public:
    bool is_privileged(std::span<const Symbol> w) {
        if (w.size() <= 1) return true;
        std::string key(reinterpret_cast<const char*>(w.data()), w.size());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // The empty border occurs |w|+1 > 2 times, so only nonempty proper
        // borders can witness privilege.
        bool result = false;
        const std::size_t n = w.size();
        for (std::size_t len = 1; len < n && !result; ++len) {
            if (!std::equal(w.begin(), w.begin() + len, w.end() - len)) continue;
            auto border = w.first(len);
            if (is_privileged(border) && count_occurrences(border, w) == 2)
                result = true;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    bool is_privileged(const Word& w) { return is_privileged(w.view()); }

    std::size_t memo_size() const { return memo_.size(); }

private:
    std::unordered_map<std::string, bool> memo_;
};

/// One-shot definitional check with a per-call memo table.
inline bool is_privileged_naive(const Word& w) {
    NaiveOracle oracle;
    return oracle.is_privileged(w);
}

inline bool is_privileged_naive(std::span<const Symbol> w) {
    NaiveOracle oracle;
    return oracle.is_privileged(w);
}

/// Length of the longest proper privileged prefix of w (0 when only the
/// empty prefix qualifies). Requires |w| >= 1.
inline std::size_t longest_proper_privileged_prefix_len(NaiveOracle& oracle,
                                                        std::span<const Symbol> w) {
    if (w.empty())
        throw std::invalid_argument("longest proper privileged prefix of empty word");
    for (std::size_t len = w.size() - 1; len > 0; --len)
        if (oracle.is_privileged(w.first(len))) return len;
    return 0;
}

/// The longest prefix u of w with |u| < |w| that is privileged; the empty
/// word when no longer one exists. Requires |w| >= 1.
inline Word longest_proper_privileged_prefix(const Word& w) {
    NaiveOracle oracle;
    return w.prefix(longest_proper_privileged_prefix_len(oracle, w.view()));
}

/// Length of the longest (not necessarily proper) privileged prefix of w.
inline std::size_t longest_privileged_prefix_len_naive(NaiveOracle& oracle,
                                                       std::span<const Symbol> w) {
    for (std::size_t len = w.size(); len > 0; --len)
        if (oracle.is_privileged(w.first(len))) return len;
    return 0;
}

/// The chain of nested privileged prefixes ending at w: each element is the
/// longest proper privileged prefix of the next. Requires w privileged.
inline std::vector<Word> privileged_chain(const Word& w) {
    NaiveOracle oracle;
    if (!oracle.is_privileged(w.view()))
        throw std::invalid_argument("privileged_chain requires a privileged word");
    std::vector<Word> chain{w};
    while (chain.back().size() > 1) {
        std::size_t len = longest_proper_privileged_prefix_len(oracle, chain.back().view());
        chain.push_back(chain.back().prefix(len));
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace privword
