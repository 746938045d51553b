#pragma once

// OEIS b-file interchange: one "n a(n)" pair per line, single space.
// Blank lines and '#' comments are tolerated on input.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "privword/bigmath.hpp"

namespace privword {

struct bfile_parse_error : std::runtime_error {
    explicit bfile_parse_error(int line_number, const std::string& line)
        : std::runtime_error("unparsable b-file line " + std::to_string(line_number) + ": \"" +
                             line + "\""),
          line(line_number) {}
    int line;
};

struct BfileEntry {
    long long index = 0;
    BigInt value;

    bool operator==(const BfileEntry&) const = default;
};

inline std::vector<BfileEntry> read_bfile(std::istream& in) {
    std::vector<BfileEntry> entries;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text)) continue;  // blank line
        if (index_text.front() == '#') continue;
        if (!(fields >> value_text) || (fields >> extra))
            throw bfile_parse_error(line_number, line);
        try {
            std::size_t consumed = 0;
            const long long index = std::stoll(index_text, &consumed);
            if (consumed != index_text.size()) throw bfile_parse_error(line_number, line);
            entries.push_back({index, BigInt(value_text)});
        } catch (const bfile_parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw bfile_parse_error(line_number, line);
        }
    }
    return entries;
}

inline void write_bfile(std::ostream& out, const std::vector<BfileEntry>& entries) {
    for (const auto& entry : entries)
        out << entry.index << ' ' << entry.value.str() << '\n';
}

} // namespace privword
