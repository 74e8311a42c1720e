#pragma once

#include "logrank/boolmatrix/bool_matrix.hpp"
#include "logrank/f2core/set_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace logrank {

// First non-comment line "k l", then k lines of l characters from {0,1}.
inline BoolMatrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t k = 0, l = 0;
    bool have_header = false;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            long long kk = 0, ll = 0;
            if (!(hs >> kk >> ll) || kk <= 0 || ll <= 0)
                throw ParseError("line " + std::to_string(lineno) + ": expected header \"k l\"");
            k = static_cast<std::size_t>(kk);
            l = static_cast<std::size_t>(ll);
            have_header = true;
            continue;
        }
        if (line.size() != l)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(l) + " entries");
        for (char c : line)
            if (c != '0' && c != '1') throw ParseError("line " + std::to_string(lineno) + ": entries must be 0/1");
        rows.push_back(line);
    }
    if (!have_header) throw ParseError("matrix file has no header");
    if (rows.size() != k)
        throw ParseError("expected " + std::to_string(k) + " rows, got " + std::to_string(rows.size()));
    return BoolMatrix::from_strings(rows);
}

inline BoolMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const BoolMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) out << m.row_string(i) << '\n';
}

inline std::string format_matrix(const BoolMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

}  // namespace logrank
