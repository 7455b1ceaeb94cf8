#include "turan/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace turan {

namespace {
constexpr std::int64_t kMaxOrder = 1LL << 20;

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

// polynomial remainder of a by monic b, coefficients mod p
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
    int db = int(b.size()) - 1;
    for (int i = int(a.size()) - 1; i >= db; --i) {
        std::int64_t c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = mod_pos(a[i - db + j] - c * b[j], p);
    }
    a.resize(size_t(db), 0);  // entries at i >= db are zero after reduction
    return a;
}

std::vector<std::int64_t> poly_mul_mod(const std::vector<std::int64_t>& x,
                                       const std::vector<std::int64_t>& y,
                                       const std::vector<std::int64_t>& modulus, std::int64_t p) {
    std::vector<std::int64_t> prod(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) prod[i + j] = mod_pos(prod[i + j] + x[i] * y[j], p);
    }
    return poly_mod(std::move(prod), modulus, p);
}

bool poly_is_zero(const std::vector<std::int64_t>& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

// trial division by every monic polynomial of degree 1..deg/2
bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
    int deg = int(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int64_t> div(d + 1, 0);
            std::int64_t t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = t % p;
                t /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(poly, div, p))) return false;
        }
    }
    return true;
}

void check_element(const FieldSpec& f, const FieldElement& x) {
    if (int(x.size()) != f.m) throw std::invalid_argument("field element has wrong length");
    for (auto c : x)
        if (c < 0 || c >= f.p) throw std::invalid_argument("field element coefficient out of range");
}
}  // namespace

FieldElement FieldSpec::one() const {
    FieldElement e(m, 0);
    e[0] = 1;
    return e;
}

FieldElement FieldSpec::from_index(std::int64_t idx) const {
    FieldElement e(m, 0);
    for (int i = 0; i < m; ++i) {
        e[i] = idx % p;
        idx /= p;
    }
    return e;
}

std::int64_t FieldSpec::to_index(const FieldElement& x) const {
    std::int64_t idx = 0;
    for (int i = m - 1; i >= 0; --i) idx = idx * p + x[i];
    return idx;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec field_make(std::int64_t p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field_make: p is not prime");
    if (m < 1) throw std::invalid_argument("field_make: degree must be >= 1");
    std::int64_t order = 1;
    for (int i = 0; i < m; ++i) {
        order *= p;
        if (order > kMaxOrder) throw std::invalid_argument("field_make: order exceeds 2^20");
    }

    FieldSpec f;
    f.p = p;
    f.m = m;
    f.order = order;
    // smallest irreducible: candidates ordered by value of the non-leading
    // coefficient vector read constant term first
    for (std::int64_t idx = 0;; ++idx) {
        if (idx >= order) throw std::logic_error("field_make: no irreducible found");
        std::vector<std::int64_t> cand(m + 1, 0);
        std::int64_t t = idx;
        for (int i = 0; i < m; ++i) {
            cand[i] = t % p;
            t /= p;
        }
        cand[m] = 1;
        if (is_irreducible(cand, p)) {
            f.modulus = cand;
            break;
        }
    }
    return f;
}

FieldElement field_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_element(f, x);
    check_element(f, y);
    FieldElement out(f.m);
    for (int i = 0; i < f.m; ++i) out[i] = mod_pos(x[i] + y[i], f.p);
    return out;
}

FieldElement field_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_element(f, x);
    check_element(f, y);
    FieldElement out(f.m);
    for (int i = 0; i < f.m; ++i) out[i] = mod_pos(x[i] - y[i], f.p);
    return out;
}

FieldElement field_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_element(f, x);
    check_element(f, y);
    auto prod = poly_mul_mod(x, y, f.modulus, f.p);
    prod.resize(f.m, 0);
    return prod;
}

FieldElement field_pow(const FieldSpec& f, const FieldElement& x, std::uint64_t e) {
    check_element(f, x);
    FieldElement base = x;
    FieldElement result = f.one();
    while (e > 0) {
        if (e & 1) result = field_mul(f, result, base);
        base = field_mul(f, base, base);
        e >>= 1;
    }
    return result;
}

FieldElement field_inv(const FieldSpec& f, const FieldElement& x) {
    check_element(f, x);
    if (poly_is_zero(x)) throw std::invalid_argument("field_inv: zero has no inverse");
    return field_pow(f, x, std::uint64_t(f.order - 2));
}

FieldElement norm_map(const FieldSpec& f, const FieldElement& x, std::int64_t q) {
    check_element(f, x);
    if (q < 2 || f.order % q != 0) throw std::invalid_argument("norm_map: incompatible subfield order");
    // q must be p^d with d dividing m
    std::int64_t t = q;
    int d = 0;
    while (t > 1) {
        if (t % f.p != 0) throw std::invalid_argument("norm_map: q is not a power of p");
        t /= f.p;
        ++d;
    }
    if (f.m % d != 0) throw std::invalid_argument("norm_map: subfield degree does not divide m");
    std::uint64_t e = std::uint64_t((f.order - 1) / (q - 1));
    return field_pow(f, x, e);
}

std::vector<FieldElement> subfield_elements(const FieldSpec& f, std::int64_t q) {
    std::vector<FieldElement> out;
    for (std::int64_t idx = 0; idx < f.order; ++idx) {
        FieldElement x = f.from_index(idx);
        if (field_pow(f, x, std::uint64_t(q)) == x) out.push_back(x);
    }
    if (std::int64_t(out.size()) != q)
        throw std::logic_error("subfield_elements: unexpected subfield size");
    return out;
}

Graph norm_graph(std::int64_t q, int a) {
    if (a < 2) throw std::invalid_argument("norm_graph: a must be >= 2");
    // factor q as p^e
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("norm_graph: q is not a prime power");
    int e = 0;
    std::int64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("norm_graph: q is not a prime power");
        t /= p;
        ++e;
    }

    std::int64_t ambient = 1;  // q^(a-1)
    for (int i = 0; i < a - 1; ++i) {
        ambient *= q;
        if (ambient > kMaxOrder) throw std::invalid_argument("norm_graph: field order overflow");
    }
    long long nverts = (long long)ambient * (q - 1);
    if (nverts > kMaxVertices) throw std::invalid_argument("norm_graph: size overflow");

    FieldSpec f = field_make(p, e * (a - 1));
    std::vector<FieldElement> sub = subfield_elements(f, q);  // sorted by index already
    std::vector<FieldElement> sub_nonzero;
    for (auto& x : sub)
        if (!std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; }))
            sub_nonzero.push_back(x);

    // norms of every ambient element, by index
    std::vector<std::int64_t> norm_index(size_t(f.order));
    for (std::int64_t idx = 0; idx < f.order; ++idx)
        norm_index[size_t(idx)] = f.to_index(norm_map(f, f.from_index(idx), q));

    // products x*y over the nonzero subfield part, by pair of positions
    int s = int(sub_nonzero.size());
    std::vector<std::int64_t> prod(size_t(s) * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            prod[size_t(i) * s + j] = f.to_index(field_mul(f, sub_nonzero[i], sub_nonzero[j]));

    Graph g{int(nverts)};
    for (std::int64_t xi = 0; xi < ambient; ++xi) {
        FieldElement X = f.from_index(xi);
        for (std::int64_t yi = xi; yi < ambient; ++yi) {
            std::int64_t sum_norm = norm_index[size_t(f.to_index(field_add(f, X, f.from_index(yi))))];
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < s; ++j) {
                    int u = int(xi) * s + i;
                    int v = int(yi) * s + j;
                    if (u >= v) continue;  // symmetric rule, visit each pair once
                    if (prod[size_t(i) * s + j] == sum_norm) g.add_edge(u, v);
                }
            }
        }
    }
    return g;
}

}  // namespace turan
