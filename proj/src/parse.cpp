#include "bott/bottcore.hpp"

namespace bott {
namespace {

struct Cell {
    unsigned value;
    std::size_t line;
    std::size_t column;
};

struct Grid {
    std::vector<std::vector<Cell>> rows;
    std::vector<std::size_t> row_lines;
};

std::string where(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Rows end at a newline or '/'; '#' comments run to end of line; spaces,
// tabs, and commas between digits are ignored.
Grid read_grid(std::string_view text, unsigned max_digit) {
    Grid g;
    std::vector<Cell> current;
    std::size_t line = 1;
    std::size_t column = 0;
    std::size_t current_line = 1;
    bool in_comment = false;

    auto finish_row = [&] {
        if (!current.empty()) {
            g.rows.push_back(std::move(current));
            g.row_lines.push_back(current_line);
            current.clear();
        }
    };

    for (char c : text) {
        ++column;
        if (c == '\n') {
            finish_row();
            in_comment = false;
            ++line;
            column = 0;
            continue;
        }
        if (in_comment) {
            continue;
        }
        if (c == '#') {
            in_comment = true;
        } else if (c == '/') {
            finish_row();
        } else if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
            // separator
        } else if (c >= '0' && c <= '9') {
            const auto v = static_cast<unsigned>(c - '0');
            if (v > max_digit) {
                throw ValidationError(where(line, column) + ": entry " + std::string(1, c) +
                                          " is outside the alphabet 0.." +
                                          std::to_string(max_digit),
                                      line, column);
            }
            if (current.empty()) {
                current_line = line;
            }
            current.push_back({v, line, column});
        } else {
            throw ValidationError(where(line, column) + ": unexpected character '" +
                                      std::string(1, c) + "'",
                                  line, column);
        }
    }
    finish_row();

    if (g.rows.empty()) {
        throw ValidationError("input contains no matrix rows");
    }
    const std::size_t width = g.rows.front().size();
    for (std::size_t r = 1; r < g.rows.size(); ++r) {
        if (g.rows[r].size() != width) {
            throw ValidationError("row " + std::to_string(r + 1) + " (line " +
                                      std::to_string(g.row_lines[r]) + ") has " +
                                      std::to_string(g.rows[r].size()) + " entries, expected " +
                                      std::to_string(width),
                                  g.row_lines[r], 0);
        }
    }
    if (g.rows.size() > kMaxDim || width > kMaxDim) {
        throw ValidationError("matrices are limited to " + std::to_string(kMaxDim) +
                              " rows and columns");
    }
    return g;
}

}  // namespace

BottMatrix parse_bott(std::string_view text) {
    const Grid g = read_grid(text, 1);
    const std::size_t n = g.rows.size();
    if (g.rows.front().size() != n) {
        throw ValidationError("Bott matrix must be square, got " + std::to_string(n) + " rows of " +
                              std::to_string(g.rows.front().size()) + " entries");
    }
    BottMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Cell& c = g.rows[i][j];
            if (c.value == 0) {
                continue;
            }
            if (i >= j) {
                throw ValidationError(where(c.line, c.column) + ": entry (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ") must be 0 in a strictly upper-triangular matrix",
                                      c.line, c.column);
            }
            a.set(i, j, true);
        }
    }
    return a;
}

PMatrix parse_pmatrix(std::string_view text) {
    const Grid g = read_grid(text, 3);
    PMatrix p(g.rows.size(), g.rows.front().size());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            p.set(i, j, DElement(g.rows[i][j].value));
        }
    }
    return p;
}

std::string serialize(const BottMatrix& a) {
    std::string s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i > 0) {
            s += '/';
        }
        for (std::size_t j = 0; j < a.dim(); ++j) {
            s += a(i, j) ? '1' : '0';
        }
    }
    return s;
}

std::string serialize(const PMatrix& p) {
    std::string s;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        if (i > 0) {
            s += '/';
        }
        for (std::size_t j = 0; j < p.cols(); ++j) {
            s += static_cast<char>('0' + p(i, j).label());
        }
    }
    return s;
}

}  // namespace bott
