#pragma once
// Closed-form bound expressions for clique counts in graphs excluding
// disjoint complete bipartite graphs or even cycles. The real-valued bounds
// are leading-order envelopes: every o(1) error term is dropped, and callers
// receive an explicit asymptotic-envelope flag alongside the value. Reals
// use 80-bit extended precision (long double, round to nearest); the
// even-cycle bounds are exact 64-bit integer arithmetic.

#include <stdexcept>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct BoundRegimeError : std::invalid_argument {
    explicit BoundRegimeError(const std::string& what) : std::invalid_argument(what) {}
};

struct KabBoundParams {
    long long n = 0;
    int t = 0, r = 0, a = 0, b = 0;
};

struct BoundValue {
    long double value = 0.0L;
    bool asymptotic_envelope = true;  // always true for the real-valued bounds
    bool out_of_regime = false;       // set when computed under override
};

// regime: t >= r >= 3, a >= 2(r-1), b >= (a-1)!+1, n > t
// sum_{s=0..r} C(t,r-s) * (1/s!) * (b-1)^(s(s-1)/2a) * (n-t)^(s - s(s-1)/2a)
BoundValue thm1_upper(const KabBoundParams& p, bool override_regime = false);
// same with the (b-1) factor removed
BoundValue thm1_lower(const KabBoundParams& p, bool override_regime = false);

// regime: b >= a >= r-1
// (1/r!) * (b-1)^(r(r-1)/2a) * n^(r - r(r-1)/2a)
BoundValue as_bound(long long n, int r, int a, int b, bool override_regime = false);

struct C2kBoundInputs {
    int t = 0, r = 0;
    // ex_values[i] = max number of K_i in a C_2k-free graph on n-t vertices;
    // ex_values[0] = 1 and ex_values[1] = n-t by convention
    std::vector<long long> ex_values;
};

// exact: sum_{i=0..r} C(t,r-i) * ex_values[i]
long long thm2_upper(const C2kBoundInputs& c);
// exact: C(t,r) + C(t,r-1)(n-t) + max_{2<=s<=r} C(t,r-s) * ex_values[s]
long long thm2_lower(const C2kBoundInputs& c);

// C(n,k) in checked 64-bit arithmetic; 0 when k < 0 or k > n
long long binomial(long long n, long long k);

}  // namespace turan
