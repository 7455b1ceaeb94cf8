#include "turan/graph6.hpp"

namespace turan {

namespace {
constexpr int kBias = 63;

long long parse_header(std::string_view s, size_t& pos) {
    if (pos >= s.size()) throw Graph6Error("graph6: empty input");
    unsigned char c = s[pos];
    if (c < 63 || c > 126) throw Graph6Error("graph6: header byte out of range");
    if (c < 126) {
        ++pos;
        return c - kBias;
    }
    // '~': 18-bit form; '~~' (36-bit) exceeds the vertex cap and is rejected
    if (pos + 1 < s.size() && (unsigned char)s[pos + 1] == 126)
        throw Graph6Error("graph6: vertex count beyond supported range");
    if (pos + 3 >= s.size()) throw Graph6Error("graph6: truncated header");
    long long n = 0;
    for (int i = 1; i <= 3; ++i) {
        unsigned char b = s[pos + i];
        if (b < 63 || b > 126) throw Graph6Error("graph6: header byte out of range");
        n = (n << 6) | (b - kBias);
    }
    pos += 4;
    return n;
}
}  // namespace

Graph from_graph6(std::string_view text) {
    std::string_view s = text;
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (s.substr(0, kPrefix.size()) == kPrefix) s.remove_prefix(kPrefix.size());

    size_t pos = 0;
    long long n = parse_header(s, pos);
    if (n > kMaxVertices) throw Graph6Error("graph6: vertex count exceeds cap");

    long long nbits = n * (n - 1) / 2;
    size_t need = size_t((nbits + 5) / 6);
    if (s.size() - pos != need) throw Graph6Error("graph6: length mismatch");

    Graph g{int(n)};
    long long bit = 0;
    int u = 0, v = 1;
    for (size_t i = pos; i < s.size(); ++i) {
        unsigned char c = s[i];
        if (c < 63 || c > 126) throw Graph6Error("graph6: body byte out of range");
        int group = c - kBias;
        for (int b = 5; b >= 0; --b, ++bit) {
            int set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set) throw Graph6Error("graph6: nonzero padding bits");
                continue;
            }
            if (set) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + kBias));
        out.push_back(char(((n >> 6) & 63) + kBias));
        out.push_back(char((n & 63) + kBias));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(char((group << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(from_graph6(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace turan
