#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "turan/bounds.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

// independent evaluator: descending summation order and a log-space route
// through lgammal for the factorial and the powers
long double ref_kab_sum(const KabBoundParams& p, bool with_b_factor) {
    long double total = 0.0L;
    for (int s = p.r; s >= 0; --s) {
        long long choose = binomial(p.t, p.r - s);
        if (choose == 0) continue;
        long double expo = (long double)s * (s - 1) / (2.0L * p.a);
        long double log_term = -lgammal((long double)s + 1.0L);
        if (s > 0) log_term += ((long double)s - expo) * logl((long double)(p.n - p.t));
        if (with_b_factor && p.b > 1) log_term += expo * logl((long double)(p.b - 1));
        total += (long double)choose * expl(log_term);
    }
    return total;
}

bool agree_12_digits(long double x, long double y) {
    if (x == y) return true;
    long double scale = std::max(fabsl(x), fabsl(y));
    return fabsl(x - y) <= scale * 1e-12L;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(62, 31) == 465428353255261088LL);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("the s <= 1 terms reduce to their closed forms") {
    // at t = r the s=0 term is exactly 1; s=1 contributes C(t, r-1)(n-t)
    KabBoundParams p{103, 3, 3, 4, 7};
    BoundValue lower = thm1_lower(p);
    BoundValue upper = thm1_upper(p);
    long double nt = 100.0L;
    long double s0 = 1.0L, s1 = 3.0L * nt;
    long double s2 = 3.0L * 0.5L * powl(nt, 2.0L - 2.0L / 8.0L);
    long double s3 = (1.0L / 6.0L) * powl(nt, 3.0L - 6.0L / 8.0L);
    CHECK(double(lower.value) == doctest::Approx(double(s0 + s1 + s2 + s3)).epsilon(1e-15));
    CHECK(lower.asymptotic_envelope);
    CHECK_FALSE(lower.out_of_regime);
    CHECK(agree_12_digits(lower.value, ref_kab_sum(p, false)));
    CHECK(agree_12_digits(upper.value, ref_kab_sum(p, true)));
    CHECK(upper.value >= lower.value);
}

TEST_CASE("evaluators agree with the independent route on random tuples") {
    SplitMix64 rng(2025);
    int done = 0;
    while (done < 1000) {
        int r = 3 + int(rng.next() % 3);           // 3..5
        int t = r + int(rng.next() % 4);           // >= r
        int a = 2 * (r - 1) + int(rng.next() % 3);
        long long fact = 1;
        for (int i = 2; i <= a - 1; ++i) fact *= i;
        if (fact > 100000) continue;  // keep b sane
        int b = int(fact) + 1 + int(rng.next() % 10);
        long long n = t + 2 + (long long)(rng.next() % 10000);
        KabBoundParams p{n, t, r, a, b};
        CHECK(agree_12_digits(thm1_upper(p).value, ref_kab_sum(p, true)));
        CHECK(agree_12_digits(thm1_lower(p).value, ref_kab_sum(p, false)));
        CHECK(thm1_lower(p).value <= thm1_upper(p).value);

        BoundValue as = as_bound(n, r, a, b);
        long double expo = (long double)r * (r - 1) / (2.0L * a);
        long double ref = expl(expo * logl((long double)(b - 1)) - lgammal((long double)r + 1) +
                               ((long double)r - expo) * logl((long double)n));
        CHECK(agree_12_digits(as.value, ref));
        ++done;
    }
}

TEST_CASE("single-count bound specializations") {
    CHECK(double(as_bound(100, 1, 2, 2).value) == doctest::Approx(100.0));
    CHECK(double(as_bound(100, 2, 2, 2).value) ==
          doctest::Approx(0.5 * std::pow(100.0, 1.5)));
}

TEST_CASE("regime enforcement") {
    KabBoundParams bad{103, 2, 3, 4, 7};  // t < r
    CHECK_THROWS_AS(thm1_upper(bad), BoundRegimeError);
    BoundValue forced = thm1_upper(bad, true);
    CHECK(forced.out_of_regime);

    KabBoundParams small_a{103, 3, 3, 3, 7};  // a < 2(r-1)
    CHECK_THROWS_AS(thm1_lower(small_a), BoundRegimeError);

    KabBoundParams small_b{103, 3, 3, 4, 6};  // b < (a-1)!+1 = 7
    CHECK_THROWS_AS(thm1_upper(small_b), BoundRegimeError);

    KabBoundParams small_n{3, 3, 3, 4, 7};  // n <= t
    CHECK_THROWS_AS(thm1_upper(small_n), BoundRegimeError);

    CHECK_THROWS_AS(as_bound(100, 4, 2, 2), BoundRegimeError);  // a < r-1
    CHECK(as_bound(100, 4, 2, 2, true).out_of_regime);
}

TEST_CASE("even-cycle bound sums are exact integers") {
    // ex_values (1, 5, 6, 2), t = r = 3:
    //   upper = 1 + 3*5 + 3*6 + 2 = 36
    //   lower = 1 + 15 + max(3*6, 1*2) = 34
    C2kBoundInputs c{3, 3, {1, 5, 6, 2}};
    CHECK(thm2_upper(c) == 36);
    CHECK(thm2_lower(c) == 34);
    CHECK(thm2_upper(c) >= thm2_lower(c));

    // all zero beyond index 1 leaves only the two leading terms
    C2kBoundInputs z{3, 3, {1, 7, 0, 0}};
    CHECK(thm2_upper(z) == 1 + 3 * 7);
    CHECK(thm2_lower(z) == 1 + 3 * 7);

    // only indices 2..r feed the max term
    C2kBoundInputs c2{4, 3, {1, 9, 5, 7}};
    C2kBoundInputs c3{4, 3, {1, 9, 5, 7}};
    c3.ex_values.push_back(999);  // beyond r: ignored
    CHECK(thm2_lower(c2) == thm2_lower(c3));
    CHECK(thm2_upper(c2) == thm2_upper(c3));

    CHECK_THROWS_AS(thm2_upper(C2kBoundInputs{3, 3, {2, 5, 6, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(thm2_upper(C2kBoundInputs{3, 3, {1, 5}}), std::invalid_argument);
}

TEST_CASE("upper dominates lower on random even-cycle inputs") {
    SplitMix64 rng(4);
    for (int it = 0; it < 200; ++it) {
        int r = 2 + int(rng.next() % 4);
        int t = int(rng.next() % 7);
        C2kBoundInputs c;
        c.t = t;
        c.r = r;
        c.ex_values.push_back(1);
        c.ex_values.push_back(int(rng.next() % 50));
        for (int i = 2; i <= r; ++i) c.ex_values.push_back(int(rng.next() % 1000));
        CHECK(thm2_upper(c) >= thm2_lower(c));
    }
}
