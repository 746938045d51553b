#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "privword/bfile.hpp"

using namespace privword;

TEST_CASE("b-file round trip") {
    const std::vector<BfileEntry> entries = {
        {0, BigInt(1)}, {5, BigInt(8)}, {17, BigInt(3388)},
        {99, BigInt("123456789012345678901234567890")}};
    std::ostringstream out;
    write_bfile(out, entries);
    std::istringstream in(out.str());
    CHECK(read_bfile(in) == entries);
}

TEST_CASE("reader tolerates comments, blanks, and CRLF") {
    std::istringstream in(
        "# generated table\n"
        "\n"
        "0 1\r\n"
        "  1   2  \n"
        "# trailing comment\n"
        "-3 7\n");
    const auto entries = read_bfile(in);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0] == BfileEntry{0, BigInt(1)});
    CHECK(entries[1] == BfileEntry{1, BigInt(2)});
    CHECK(entries[2] == BfileEntry{-3, BigInt(7)});
}

TEST_CASE("reader rejects malformed lines with the line number") {
    auto expect_error_at = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_bfile(in);
            FAIL("expected bfile_parse_error");
        } catch (const bfile_parse_error& e) {
            CHECK(e.line == line);
        }
    };
    expect_error_at("foo bar\n", 1);
    expect_error_at("0 1\n1 2 3\n", 2);
    expect_error_at("5\n", 1);
    expect_error_at("0 1\n\n# note\n1.5 3\n", 4);
    expect_error_at("2 12x\n", 1);
}

TEST_CASE("empty input yields no entries") {
    std::istringstream in("");
    CHECK(read_bfile(in).empty());
    std::istringstream comments("# nothing\n\n");
    CHECK(read_bfile(comments).empty());
}

TEST_CASE("output format is one index-value pair per line") {
    std::ostringstream out;
    write_bfile(out, {{12, BigInt(176)}});
    CHECK(out.str() == "12 176\n");
}
