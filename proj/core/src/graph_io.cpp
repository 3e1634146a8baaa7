#include "dpcolor/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "dpcolor/errors.hpp"

namespace dpcolor {

namespace {

constexpr const char* kHeader = ">>graph6<<";

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw TooLarge("graph6 output restricted to n <= 258047");
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_size(out, g.n);
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw ParseError("graph6 string truncated");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range at position " + std::to_string(pos - 1));
        return c - 63;
    };

    long long n = next();
    if (n == 63) {  // 126 - 63: multi-byte size
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > 4096) throw TooLarge("graph6 input larger than supported desk scale");

    std::vector<std::pair<int, int>> edges;
    int bit = -1;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit < 0) {
                cur = next();
                bit = 5;
            }
            if ((cur >> bit) & 1) edges.emplace_back(i, j);
            --bit;
        }
    }
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 payload");
    return build_graph(edges, static_cast<int>(n));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string first;
    if (!std::getline(is, first)) throw ParseError("empty edge-list input");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(first, &used);
        while (used < first.size() && std::isspace(static_cast<unsigned char>(first[used]))) ++used;
        if (used != first.size()) throw ParseError("");
    } catch (...) {
        throw ParseError("edge-list line 1: expected a vertex count");
    }
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("edge-list line " + std::to_string(lineno) + ": expected 'u v'");
        std::string rest;
        if (ls >> rest) throw ParseError("edge-list line " + std::to_string(lineno) + ": trailing tokens");
        edges.emplace_back(u, v);
    }
    try {
        return build_graph(edges, n);
    } catch (const InvalidGraph& e) {
        throw ParseError(std::string("edge-list: ") + e.what());
    }
}

Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string first;
    std::getline(is, first);
    std::istringstream fs(first);
    int n;
    std::string rest;
    if (fs >> n && !(fs >> rest)) return from_edge_list(text);
    return from_graph6(first);
}

}  // namespace dpcolor
