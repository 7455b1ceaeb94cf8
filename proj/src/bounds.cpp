#include "turan/bounds.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "turan/checked.hpp"

namespace turan {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // multiply first, divide after: the running product C(n-k+i, i) stays
    // integral; 128-bit intermediates keep the final overflow check exact
    unsigned __int128 out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
        if (out > (unsigned __int128)INT64_MAX) throw std::overflow_error("binomial overflow");
    }
    return (long long)out;
}

namespace {

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool factorial_at_most(int n, long long cap) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        f = checked_mul(f, i);
        if (f > cap) return false;
    }
    return f <= cap;
}

void check_kab_regime(const KabBoundParams& p, bool override_regime, bool& flagged) {
    std::string why;
    if (!(p.t >= p.r && p.r >= 3))
        why = "requires t >= r >= 3";
    else if (!(p.a >= 2 * (p.r - 1)))
        why = "requires a >= 2(r-1)";
    else if (p.b < 1 || !factorial_at_most(p.a - 1, (long long)p.b - 1))
        why = "requires b >= (a-1)!+1";  // i.e. (a-1)! <= b-1
    else if (!(p.n > p.t))
        why = "requires n > t";
    if (!why.empty()) {
        if (!override_regime) throw BoundRegimeError("out of theorem regime: " + why);
        flagged = true;
    }
}

long double kab_sum(const KabBoundParams& p, bool with_b_factor) {
    long double total = 0.0L;
    long double nt = (long double)(p.n - p.t);
    for (int s = 0; s <= p.r; ++s) {
        long long choose = binomial(p.t, p.r - s);
        if (choose == 0) continue;
        long double expo = (long double)s * (s - 1) / (2.0L * p.a);
        long double term = (long double)choose / factorial_ld(s) * powl(nt, (long double)s - expo);
        if (with_b_factor) term *= powl((long double)(p.b - 1), expo);
        total += term;
    }
    return total;
}

}  // namespace

BoundValue thm1_upper(const KabBoundParams& p, bool override_regime) {
    BoundValue out;
    check_kab_regime(p, override_regime, out.out_of_regime);
    out.value = kab_sum(p, true);
    return out;
}

BoundValue thm1_lower(const KabBoundParams& p, bool override_regime) {
    BoundValue out;
    check_kab_regime(p, override_regime, out.out_of_regime);
    out.value = kab_sum(p, false);
    return out;
}

BoundValue as_bound(long long n, int r, int a, int b, bool override_regime) {
    BoundValue out;
    if (!(b >= a && a >= r - 1)) {
        if (!override_regime) throw BoundRegimeError("out of theorem regime: requires b >= a >= r-1");
        out.out_of_regime = true;
    }
    if (r < 0 || n < 0 || a < 1) throw std::invalid_argument("as_bound: invalid parameters");
    long double expo = (long double)r * (r - 1) / (2.0L * a);
    out.value = powl((long double)(b - 1), expo) / factorial_ld(r) *
                powl((long double)n, (long double)r - expo);
    return out;
}

namespace {
void check_c2k_inputs(const C2kBoundInputs& c) {
    if (c.r < 2) throw std::invalid_argument("even-cycle bounds need r >= 2");
    if (int(c.ex_values.size()) < c.r + 1)
        throw std::invalid_argument("ex_values must cover indices 0..r");
    if (c.ex_values[0] != 1) throw std::invalid_argument("ex_values[0] must be 1");
    if (c.ex_values[1] < 0) throw std::invalid_argument("ex_values[1] must be n-t >= 0");
}
}  // namespace

long long thm2_upper(const C2kBoundInputs& c) {
    check_c2k_inputs(c);
    long long total = 0;
    for (int i = 0; i <= c.r; ++i)
        total = checked_add(total, checked_mul(binomial(c.t, c.r - i), c.ex_values[i]));
    return total;
}

long long thm2_lower(const C2kBoundInputs& c) {
    check_c2k_inputs(c);
    long long nt = c.ex_values[1];
    long long total = checked_add(binomial(c.t, c.r), checked_mul(binomial(c.t, c.r - 1), nt));
    long long best = 0;
    for (int s = 2; s <= c.r; ++s)
        best = std::max(best, checked_mul(binomial(c.t, c.r - s), c.ex_values[s]));
    return checked_add(total, best);
}

}  // namespace turan
