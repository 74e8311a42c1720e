#pragma once

#include "logrank/f2core/f2set.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace logrank {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace detail

// One 0/1 string per line, most significant coordinate first. Blank lines
// and '#' comments are skipped. An empty file needs expected_n > 0.
inline F2Set read_set(std::istream& in, int expected_n = 0) {
    std::vector<Word> words;
    int n = expected_n;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            // "# n=<dim>" lets an empty set keep its dimension.
            if (n == 0 && line.rfind("# n=", 0) == 0) n = std::stoi(line.substr(4));
            continue;
        }
        const int len = static_cast<int>(line.size());
        if (n == 0) n = len;
        if (len != n)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                             " characters, got " + std::to_string(len));
        words.push_back(F2Vector::parse(line).bits());
    }
    if (n == 0) throw ParseError("empty set file with unknown dimension");
    return F2Set(n, std::move(words));
}

inline F2Set parse_set(const std::string& text, int expected_n = 0) {
    std::istringstream in(text);
    return read_set(in, expected_n);
}

inline void write_set(std::ostream& out, const F2Set& s) {
    out << "# n=" << s.dimension() << '\n';
    for (Word w : s) out << F2Vector(s.dimension(), w).str() << '\n';
}

inline std::string format_set(const F2Set& s) {
    std::ostringstream out;
    write_set(out, s);
    return out.str();
}

}  // namespace logrank
