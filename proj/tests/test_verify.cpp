#include <catch2/catch_amalgamated.hpp>

#include "privword/verify.hpp"

using namespace privword;

TEST_CASE("word-property sweeps find no counterexamples") {
    CHECK_FALSE(verify_borders_privileged(10).has_value());
    CHECK_FALSE(verify_privileged_prefix_suffix(10).has_value());
    CHECK_FALSE(verify_run_symmetry(10).has_value());
    CHECK_FALSE(verify_longest_prefix_criterion(10).has_value());
    CHECK_FALSE(verify_power_closure_all(7, 4).has_value());
    CHECK_FALSE(verify_unary_closure(20, 3).has_value());
    CHECK_FALSE(verify_checker_equivalence(10, 2).has_value());
    CHECK_FALSE(verify_checker_equivalence(7, 3).has_value());
    CHECK_FALSE(verify_longest_prefix_agreement(10).has_value());
    CHECK_FALSE(verify_triple_run_characterization(12).has_value());
    CHECK_FALSE(verify_zero_one_zero_characterization(12).has_value());
    CHECK_FALSE(verify_iteration_budget(12).has_value());
}

TEST_CASE("bound sweeps find no counterexamples") {
    CHECK_FALSE(verify_gfib_dp_agreement(40, 5).has_value());
    CHECK_FALSE(verify_gfib_fibonacci(30).has_value());
    CHECK_FALSE(verify_binomial_truncation_sweep(16).has_value());
    CHECK_FALSE(verify_alpha_root_bound_sweep(12).has_value());
    CHECK_FALSE(verify_gfib_lower_bound_sweep(64, 6).has_value());
    CHECK_FALSE(verify_seed_family(14, 3).has_value());
    CHECK_FALSE(verify_count_lower_bound_sweep(12).has_value());
    CHECK_FALSE(verify_count_parity(10).has_value());
}

TEST_CASE("equivalence sweep catches a broken checker") {
    // A checker that only accepts trivial words: first divergence is "00".
    const auto result = verify_checker_equivalence_with(
        4, 2, [](std::span<const Symbol> w) { return w.size() <= 1; });
    REQUIRE(result.has_value());
    CHECK(result->find("00") != std::string::npos);
    CHECK(result->find("oracle says privileged") != std::string::npos);
}

TEST_CASE("equivalence sweep catches a subtly broken checker") {
    // Correct table construction, but the running prefix length never
    // advances past its seed, so every longer privileged word is missed.
    const auto broken = [](std::span<const Symbol> w) {
        const std::size_t n = w.size();
        if (n <= 1) return true;
        std::vector<std::uint32_t> table(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t j = table[i - 1];
            for (;;) {
                if (w[j] == w[i]) {
                    table[i] = static_cast<std::uint32_t>(j + 1);
                    break;
                }
                if (j == 0) {
                    table[i] = 0;
                    break;
                }
                j = table[j - 1];
            }
        }
        return table[n - 1] == n;  // unreachable for n > 0: borders are proper
    };
    const auto result = verify_checker_equivalence_with(6, 2, broken);
    REQUIRE(result.has_value());
}

TEST_CASE("iteration statistics report the worst case") {
    const IterationStats stats = iteration_stats(8);
    CHECK(stats.max_iterations > 0);
    CHECK(stats.max_iterations <= 16);
    CHECK(stats.argmax_length <= 8);
    CHECK_FALSE(stats.argmax_word.empty());
    LinearChecker checker;
    const Word w = Word::parse(stats.argmax_word);
    CHECK(checker.check(w.view()).while_iterations == stats.max_iterations);
}
