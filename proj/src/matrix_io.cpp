#include "detmax/matrix_io.hpp"

#include <sstream>

namespace detmax {

namespace {

bool is_compact_row(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c != '+' && c != '-') return false;
    return true;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

SignMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw MatrixParseError(1, "missing header");
    ++lineno;
    line = strip_cr(line);
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(line, &pos);
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos != line.size()) throw std::invalid_argument("trailing junk");
    } catch (...) {
        throw MatrixParseError(lineno, "malformed header (expected the order n)");
    }
    if (n < 1) throw MatrixParseError(lineno, "order must be >= 1");

    SignMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw MatrixParseError(lineno + 1, "unexpected end of input");
        ++lineno;
        line = strip_cr(line);
        if (is_compact_row(line)) {
            if (static_cast<int>(line.size()) != n) throw MatrixParseError(lineno, "ragged row");
            for (int j = 0; j < n; ++j) m.set(i, j, line[j] == '+' ? 1 : -1);
        } else {
            std::istringstream row(line);
            std::string tok;
            int j = 0;
            while (row >> tok) {
                if (j >= n) throw MatrixParseError(lineno, "ragged row");
                if (tok == "1" || tok == "+1")
                    m.set(i, j, 1);
                else if (tok == "-1")
                    m.set(i, j, -1);
                else
                    throw MatrixParseError(lineno, "non-±1 entry");
                ++j;
            }
            if (j != n) throw MatrixParseError(lineno, "ragged row");
        }
    }
    // anything but trailing blank lines is an error
    while (std::getline(in, line)) {
        ++lineno;
        if (!strip_cr(line).empty()) throw MatrixParseError(lineno, "trailing data");
    }
    return m;
}

std::string render_matrix(const SignMatrix& m) {
    const int n = m.order();
    std::string out = std::to_string(n);
    out += '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += m(i, j) == 1 ? "1" : "-1";
        }
        out += '\n';
    }
    return out;
}

}  // namespace detmax
