#include "barbell/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace barbell {

namespace {

constexpr int kBias = 63;
// Adjacency is dense (n^2 bits), so refuse headers that would allocate
// gigabytes before reading a single edge.
constexpr long kMaxOrder = 20000;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("graph6: " + msg); }

int value_at(std::string_view s, size_t i) {
    if (i >= s.size()) fail("truncated input");
    unsigned char c = s[i];
    if (c < 63 || c > 126) fail("character '" + std::string(1, s[i]) + "' outside the printable 63..126 range");
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Trim whitespace and the optional format header.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, 2) == ">>") {
        if (text.substr(0, header.size()) != header) fail("malformed format header");
        text.remove_prefix(header.size());
    }
    if (text.empty()) fail("empty input");

    size_t pos = 0;
    long n;
    if (value_at(text, 0) < 63) {
        n = value_at(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && value_at(text, 1) < 63) {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | value_at(text, i);
        pos = 4;
        if (n < 63) fail("malformed length header: non-minimal long form");
    } else {
        if (value_at(text, 1) != 63) fail("malformed length header");
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | value_at(text, i);
        pos = 8;
        if (n <= 258047) fail("malformed length header: non-minimal very long form");
    }
    if (n > kMaxOrder) fail("vertex count " + std::to_string(n) + " exceeds supported maximum");

    const long bits = n * (n - 1) / 2;
    const size_t bytes = size_t((bits + 5) / 6);
    if (text.size() - pos < bytes) fail("truncated input: expected " + std::to_string(bytes) + " data characters");
    if (text.size() - pos > bytes) fail("trailing data after " + std::to_string(bytes) + " data characters");

    Graph g{int(n)};
    long idx = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++idx) {
            int word = value_at(text, pos + size_t(idx / 6));
            if ((word >> (5 - idx % 6)) & 1) g.add_edge(row, col);
        }
    }
    // Padding bits beyond the matrix must be zero.
    for (long p = bits; p < long(bytes) * 6; ++p) {
        int word = value_at(text, pos + size_t(p / 6));
        if ((word >> (5 - p % 6)) & 1) fail("nonzero trailing padding bits");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(char(((n >> s) & 63) + kBias));
    }
    int word = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            word = (word << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(word + kBias));
                word = filled = 0;
            }
        }
    }
    if (filled) out.push_back(char((word << (6 - filled)) + kBias));
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::pair<int, int>> edges;
    long declared_n = -1;
    long max_label = 0;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        long u, v;
        try {
            u = std::stol(first);
        } catch (...) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected an integer, got '" + first + "'");
        }
        if (!(ls >> v)) {
            if (declared_n >= 0 || !edges.empty())
                throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected 'u v' pair");
            declared_n = u;
            if (declared_n < 0) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": negative vertex count");
            continue;
        }
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": unexpected trailing token '" + extra + "'");
        if (u < 1 || v < 1) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": vertices are 1-based");
        if (u == v) throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
        edges.push_back({int(u - 1), int(v - 1)});
        max_label = std::max({max_label, u, v});
    }
    long n = std::max(declared_n, max_label);
    if (n < 0) n = 0;
    if (n > kMaxOrder) throw std::invalid_argument("edge list: vertex count too large");
    if (declared_n >= 0 && max_label > declared_n)
        throw std::invalid_argument("edge list: vertex " + std::to_string(max_label) + " exceeds declared count " + std::to_string(declared_n));
    Graph g{int(n)};
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int u) {
            if (u > v) out << v + 1 << " " << u + 1 << "\n";
        });
}

}  // namespace barbell
