#include <catch2/catch_amalgamated.hpp>

#include "privword/enumerate.hpp"
#include "privword/languages.hpp"
#include "privword/naive.hpp"

#include "support.hpp"

using namespace privword;

TEST_CASE("triple-run pattern parsing") {
    CHECK(parse_triple_run_pattern(Word::parse("00101100").view()) == RunTriple{1, 0, 1});
    CHECK(parse_triple_run_pattern(Word::parse("010110").view()) == RunTriple{0, 0, 0});
    CHECK(parse_triple_run_pattern(Word::parse("001001100").view()) == RunTriple{1, 1, 1});

    CHECK_FALSE(parse_triple_run_pattern(Word::parse("").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("0110").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("101100").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("01011").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("0110110").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("00100").view()).has_value());
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("0010110010").view()).has_value());
    // Three separated 1s instead of a double: not in the pattern.
    CHECK_FALSE(parse_triple_run_pattern(Word::parse("01010100").view()).has_value());
}

TEST_CASE("triple-run membership requires equal outer runs and a shorter middle") {
    CHECK(triple_run_membership(Word::parse("00101100").view()));        // a=1, b=0, c=1
    CHECK_FALSE(triple_run_membership(Word::parse("010110").view()));    // a=0, b=0 not less
    CHECK_FALSE(triple_run_membership(Word::parse("001001100").view()));  // a=1, b=1 not less
    CHECK_FALSE(triple_run_membership(Word::parse("000101100").view()));  // a=2 != c=1
    CHECK(triple_run_membership(Word::parse("0001011000").view()));  // a=2, b=0, c=2
    CHECK_THROWS_AS(triple_run_membership(Word::parse("0110").view()), std::invalid_argument);
}

TEST_CASE("triple-run membership equals the oracle on every pattern instance") {
    NaiveOracle oracle;
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = 1; j <= 5; ++j)
            for (std::size_t l = 1; l <= 5; ++l) {
                std::vector<Symbol> w(i + j + l + 3, 0);
                w[i] = 1;
                w[i + 1 + j] = 1;
                w[i + 2 + j] = 1;
                const std::span<const Symbol> view(w.data(), w.size());
                REQUIRE(triple_run_membership(view) == oracle.is_privileged(view));
            }
}

TEST_CASE("zero-one-zero pattern parsing and membership") {
    CHECK(parse_zero_one_zero(Word::parse("00100").view()) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(parse_zero_one_zero(Word::parse("010").view()) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_zero_one_zero(Word::parse("0010").view()) == std::pair<std::size_t, std::size_t>{2, 1});

    CHECK_FALSE(parse_zero_one_zero(Word::parse("").view()).has_value());
    CHECK_FALSE(parse_zero_one_zero(Word::parse("0").view()).has_value());
    CHECK_FALSE(parse_zero_one_zero(Word::parse("01").view()).has_value());
    CHECK_FALSE(parse_zero_one_zero(Word::parse("10").view()).has_value());
    CHECK_FALSE(parse_zero_one_zero(Word::parse("00110").view()).has_value());
    CHECK_FALSE(parse_zero_one_zero(Word::parse("01010").view()).has_value());

    CHECK(zero_one_zero_membership(Word::parse("00100").view()));
    CHECK(zero_one_zero_membership(Word::parse("010").view()));
    CHECK_FALSE(zero_one_zero_membership(Word::parse("0010").view()));
    CHECK_FALSE(zero_one_zero_membership(Word::parse("0100").view()));
    CHECK_THROWS_AS(zero_one_zero_membership(Word::parse("0101").view()),
                    std::invalid_argument);
}

TEST_CASE("zero-one-zero membership equals the oracle on every pattern instance") {
    NaiveOracle oracle;
    for (std::size_t i = 1; i <= 8; ++i)
        for (std::size_t j = 1; j <= 8; ++j) {
            std::vector<Symbol> w(i + j + 1, 0);
            w[i] = 1;
            const std::span<const Symbol> view(w.data(), w.size());
            REQUIRE(zero_one_zero_membership(view) == oracle.is_privileged(view));
        }
}

TEST_CASE("power closure on hand-picked bases") {
    CHECK(check_power_closure(Word::parse("0110"), 4));   // all powers privileged
    CHECK(check_power_closure(Word::parse("01"), 4));     // no power privileged
    CHECK(check_power_closure(Word::parse("0"), 6));
    CHECK(check_power_closure(Word::parse(""), 3));
    CHECK_THROWS_AS(check_power_closure(Word::parse("01"), 0), std::invalid_argument);
}

TEST_CASE("power closure holds for every small base") {
    for (std::size_t n = 0; n <= 7; ++n) {
        for_each_word(n, 2, [&](std::span<const Symbol> w) {
            REQUIRE(check_power_closure(Word(std::vector<Symbol>(w.begin(), w.end()), 2u), 4));
        });
    }
}

TEST_CASE("powers of a privileged word stay privileged individually") {
    NaiveOracle oracle;
    for (const char* base : {"0110", "00", "010", "1001", "00100"}) {
        const Word w = Word::parse(base);
        REQUIRE(oracle.is_privileged(w));
        for (unsigned j = 2; j <= 4; ++j) CHECK(oracle.is_privileged(w.repeated(j)));
    }
}
