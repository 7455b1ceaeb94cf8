#include "turan/pattern.hpp"

#include <cctype>

namespace turan {

Pattern Pattern::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite pattern: sides must be >= 1");
    if (a > b) std::swap(a, b);
    Pattern p;
    p.kind = PatternKind::CompleteBipartite;
    p.a = a;
    p.b = b;
    return p;
}

Pattern Pattern::even_cycle(int length) {
    if (length < 4 || length % 2 != 0)
        throw std::invalid_argument("even_cycle pattern: length must be even and >= 4");
    Pattern p;
    p.kind = PatternKind::EvenCycle;
    p.size = length;
    return p;
}

Pattern Pattern::path(int vertices) {
    if (vertices < 1) throw std::invalid_argument("path pattern: needs at least 1 vertex");
    Pattern p;
    p.kind = PatternKind::Path;
    p.size = vertices;
    return p;
}

Pattern Pattern::clique(int r) {
    if (r < 1) throw std::invalid_argument("clique pattern: needs at least 1 vertex");
    Pattern p;
    p.kind = PatternKind::Clique;
    p.size = r;
    return p;
}

Pattern Pattern::arbitrary(Graph g) {
    if (g.n() < 1) throw std::invalid_argument("arbitrary pattern: empty graph");
    Pattern p;
    p.kind = PatternKind::Arbitrary;
    p.shape = std::move(g);
    return p;
}

Pattern Pattern::times(int t) const {
    if (t < 1) throw std::invalid_argument("pattern copies must be >= 1");
    Pattern p = *this;
    p.copies = copies * t;  // copies of copies flatten by multiplication
    return p;
}

int Pattern::base_vertex_count() const {
    switch (kind) {
        case PatternKind::CompleteBipartite: return a + b;
        case PatternKind::EvenCycle:
        case PatternKind::Path:
        case PatternKind::Clique: return size;
        case PatternKind::Arbitrary: return shape.n();
    }
    return 0;
}

Graph Pattern::base_graph() const {
    switch (kind) {
        case PatternKind::CompleteBipartite: return turan::complete_bipartite(a, b);
        case PatternKind::EvenCycle: return turan::cycle(size);
        case PatternKind::Path: return turan::path(size);
        case PatternKind::Clique: return turan::complete_graph(size);
        case PatternKind::Arbitrary: return shape;
    }
    return Graph();
}

std::string Pattern::to_string() const {
    std::string base;
    switch (kind) {
        case PatternKind::CompleteBipartite:
            base = "K(" + std::to_string(a) + "," + std::to_string(b) + ")";
            break;
        case PatternKind::EvenCycle: base = "C" + std::to_string(size); break;
        case PatternKind::Path: base = "P" + std::to_string(size); break;
        case PatternKind::Clique: base = "K" + std::to_string(size); break;
        case PatternKind::Arbitrary: base = "G" + std::to_string(shape.n()); break;
    }
    return copies == 1 ? base : std::to_string(copies) + "*" + base;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool take(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > kMaxVertices * 2) throw PatternParseError("integer too large", start);
            ++pos;
        }
        if (pos == start) throw PatternParseError("expected integer", pos);
        return v;
    }
};

}  // namespace

Pattern parse_pattern(std::string_view text) {
    Cursor c{text};

    int copies = 1;
    if (std::isdigit((unsigned char)c.peek())) {
        size_t at = c.pos;
        copies = int(c.integer());
        if (copies < 1) throw PatternParseError("copy count must be >= 1", at);
        if (!c.take('*')) throw PatternParseError("expected '*' after copy count", c.pos);
    }

    Pattern base;
    size_t at = c.pos;
    if (c.take('K')) {
        if (c.take('(')) {
            size_t at_a = c.pos;
            int a = int(c.integer());
            if (!c.take(',')) throw PatternParseError("expected ','", c.pos);
            int b = int(c.integer());
            if (!c.take(')')) throw PatternParseError("expected ')'", c.pos);
            if (a < 1 || b < 1)
                throw PatternParseError("bipartite sides must be >= 1", at_a);
            base = Pattern::complete_bipartite(a, b);  // a > b normalized by swap
        } else {
            size_t at_r = c.pos;
            int r = int(c.integer());
            if (r < 2) throw PatternParseError("clique pattern needs at least one edge", at_r);
            base = Pattern::clique(r);
        }
    } else if (c.take('C')) {
        size_t at_m = c.pos;
        int m = int(c.integer());
        if (m < 3) throw PatternParseError("cycle needs at least 3 vertices", at_m);
        if (m % 2 != 0) throw PatternParseError("even cycles only", at_m);
        base = Pattern::even_cycle(m);
    } else if (c.take('P')) {
        size_t at_l = c.pos;
        int len = int(c.integer());
        if (len < 1) throw PatternParseError("path needs at least 1 vertex", at_l);
        base = Pattern::path(len);
    } else {
        throw PatternParseError("expected K, C or P", at);
    }

    if (!c.eof()) throw PatternParseError("trailing input", c.pos);
    return copies == 1 ? base : base.times(copies);
}

bool verify_embedding(const Graph& g, const Graph& shape, const std::vector<int>& embedding) {
    if (int(embedding.size()) != shape.n()) return false;
    for (size_t i = 0; i < embedding.size(); ++i) {
        if (embedding[i] < 0 || embedding[i] >= g.n()) return false;
        for (size_t j = i + 1; j < embedding.size(); ++j) {
            if (embedding[i] == embedding[j]) return false;
            if (shape.has_edge(int(i), int(j)) && !g.has_edge(embedding[i], embedding[j]))
                return false;
        }
    }
    return true;
}

}  // namespace turan
