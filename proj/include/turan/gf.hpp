#pragma once
// Arithmetic in GF(p^m). Elements are coefficient vectors modulo a fixed
// monic irreducible polynomial; the modulus is chosen deterministically
// (smallest by constant-term-first coefficient order) so that every run and
// every implementation agrees on element representation.

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

using FieldElement = std::vector<std::int64_t>;  // coeffs[i] is the x^i coefficient, in [0,p)

struct FieldSpec {
    std::int64_t p = 0;                // prime characteristic
    int m = 0;                         // extension degree
    std::vector<std::int64_t> modulus; // m+1 coefficients, monic, irreducible
    std::int64_t order = 0;            // p^m

    FieldElement zero() const { return FieldElement(m, 0); }
    FieldElement one() const;
    FieldElement from_index(std::int64_t idx) const;  // base-p digits
    std::int64_t to_index(const FieldElement& x) const;
};

bool is_prime(std::int64_t p);

// order p^m must stay within 2^20
FieldSpec field_make(std::int64_t p, int m);

FieldElement field_add(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement field_sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement field_mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement field_pow(const FieldSpec& f, const FieldElement& x, std::uint64_t e);
FieldElement field_inv(const FieldSpec& f, const FieldElement& x);

// Norm down to the subfield of order q: N(x) = x^((order-1)/(q-1)).
// q must be a power of p whose degree divides m. N(x) satisfies N(x)^q = N(x)
// and is multiplicative.
FieldElement norm_map(const FieldSpec& f, const FieldElement& x, std::int64_t q);

// All elements fixed by x -> x^q, i.e. the embedded copy of GF(q).
std::vector<FieldElement> subfield_elements(const FieldSpec& f, std::int64_t q);

// Norm graph on pairs (X, x), X in GF(q^(a-1)), x in GF(q) \ {0};
// (X,x) ~ (Y,y) iff N(X+Y) = x*y and the two pairs differ. Vertex order:
// index = element_index(X) * (q-1) + (nonzero subfield index of x),
// with subfield elements sorted by their tower representation.
Graph norm_graph(std::int64_t q, int a);

}  // namespace turan
