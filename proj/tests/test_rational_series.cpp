// Exact-arithmetic layer: rationals, polynomials, truncated series.
//
// Derived expectations are frozen after being computed by an independent
// route inside this file (multiply-back for division, an order-by-order
// undetermined-coefficients solve for reversion, hand-expanded polynomial
// products), never by the routine under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moonj/series.hpp"

using namespace moonj;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

TruncatedSeries from_list(std::initializer_list<const char*> cs) {
    std::vector<Rational> v;
    for (const char* c : cs) v.push_back(Rational::parse(c));
    return TruncatedSeries(std::move(v), static_cast<int>(cs.size()) - 1);
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Rational(num(rng), den(rng)));
    if (unit && s.coeff(0).is_zero()) s.set_coeff(0, Rational(1));
    return s;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Q("-8/12").str() == "-2/3");
    CHECK(Q("318822.4") == Q("1594112/5"));
    CHECK(Q("0.25") == Rational(1, 4));
    CHECK(Q(".5") == Rational(1, 2));
    CHECK(Q("-0.125") == Rational(-1, 8));
    CHECK(Q("7").is_integer());
    CHECK(Q("7").to_long() == 7);
    CHECK_THROWS_AS(Q("1/0"), Error);
    CHECK_THROWS_AS(Q("abc"), Error);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), Error);
}

TEST_CASE("rational arithmetic and helpers") {
    CHECK(Q("1/3") + Q("1/6") == Q("1/2"));
    CHECK(Q("2/3") * Q("9/4") == Q("3/2"));
    CHECK(Q("1/3") / Q("2/9") == Q("3/2"));
    CHECK(Rational::pow(Q("-2/3"), 3) == Q("-8/27"));
    CHECK(Rational::pow(Q("2/3"), -2) == Q("9/4"));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::binomial(10, 3) == Rational(120));
    CHECK(Q("-5/7") < Q("1/7"));
    CHECK_THROWS_AS(Q("1/2") / Rational(0), Error);
}

TEST_CASE("polynomial basics") {
    Polynomial p{Q("1"), Q("0"), Q("3")};  // 1 + 3t^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Q("2")) == Rational(13));
    CHECK(p.derivative() == Polynomial{Q("0"), Q("6")});
    Polynomial q{Q("-1"), Q("1")};
    CHECK(p * q == Polynomial{Q("-1"), Q("1"), Q("-3"), Q("3")});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(Polynomial::pow(q, 2) == Polynomial{Q("1"), Q("-2"), Q("1")});
}

TEST_CASE("series division: frozen example and multiply-back oracle") {
    // (t - t^4/3) / (1 - t^3/6).  Expected prefix derived by hand:
    // q1 = 1, q4 = -1/3 + 1/6 = -1/6, q7 = -(−1/6)(−1/6) = -1/36, rest zero.
    TruncatedSeries num = from_list({"0", "1", "0", "0", "-1/3", "0", "0", "0"});
    TruncatedSeries den = from_list({"1", "0", "0", "-1/6", "0", "0", "0", "0"});
    TruncatedSeries q = series_div(num, den);
    CHECK(q == from_list({"0", "1", "0", "0", "-1/6", "0", "0", "-1/36"}));

    // Multiply-back: q*den must reproduce num to the common order.
    CHECK(series_mul(q, den) == num);

    CHECK_THROWS_AS(series_div(num, from_list({"0", "1"})), Error);
}

TEST_CASE("series division multiply-back on random inputs") {
    std::mt19937_64 rng(0xD1A7);
    for (int it = 0; it < 40; ++it) {
        TruncatedSeries a = random_series(rng, 12);
        TruncatedSeries b = random_series(rng, 12, /*unit=*/true);
        CHECK(series_mul(series_div(a, b), b) == a);
    }
}

TEST_CASE("series reversion: frozen example and undetermined-coefficients oracle") {
    // s = t + t^2.  Undetermined coefficients: matching t^n in r + r^2 = t
    // gives r_n = -sum_{i+j=n, i,j>=1} r_i r_j for n >= 2, r_1 = 1.
    const int N = 10;
    std::vector<Rational> r_oracle(N + 1);
    r_oracle[1] = Rational(1);
    for (int n = 2; n <= N; ++n) {
        Rational acc;
        for (int i = 1; i < n; ++i) acc += r_oracle[i] * r_oracle[n - i];
        r_oracle[n] = -acc;
    }
    CHECK(r_oracle[2] == Rational(-1));
    CHECK(r_oracle[3] == Rational(2));
    CHECK(r_oracle[4] == Rational(-5));

    TruncatedSeries s = from_list({"0", "1", "1", "0", "0", "0", "0", "0", "0", "0", "0"});
    TruncatedSeries r = series_reversion(s);
    CHECK(r == TruncatedSeries(r_oracle, N));

    CHECK_THROWS_AS(series_reversion(from_list({"1", "1"})), Error);
    CHECK_THROWS_AS(series_reversion(from_list({"0", "0", "1"})), Error);
}

TEST_CASE("reversion inverts composition both ways") {
    std::mt19937_64 rng(0x5EED);
    TruncatedSeries id(10);
    id.set_coeff(1, Rational(1));
    for (int it = 0; it < 25; ++it) {
        TruncatedSeries s = random_series(rng, 10);
        s.set_coeff(0, Rational(0));
        if (s.coeff(1).is_zero()) s.set_coeff(1, Rational(1));
        TruncatedSeries r = series_reversion(s);
        CHECK(series_compose(s, r) == id);
        CHECK(series_compose(r, s) == id);
    }
}

TEST_CASE("composition requires vanishing inner constant term") {
    TruncatedSeries outer = from_list({"1", "2", "3"});
    CHECK_THROWS_AS(series_compose(outer, from_list({"1", "1", "0"})), Error);
}

TEST_CASE("series ring laws on random inputs") {
    std::mt19937_64 rng(0xAB12);
    for (int it = 0; it < 25; ++it) {
        TruncatedSeries a = random_series(rng, 9);
        TruncatedSeries b = random_series(rng, 9);
        TruncatedSeries c = random_series(rng, 9);
        CHECK(series_add(a, b) == series_add(b, a));
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_add(series_add(a, b), c) == series_add(a, series_add(b, c)));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("binary operations truncate to the smaller order") {
    TruncatedSeries a(8);
    TruncatedSeries b(5);
    CHECK(series_add(a, b).order() == 5);
    CHECK(series_mul(a, b).order() == 5);
    TruncatedSeries u(5);
    u.set_coeff(0, Rational(1));
    CHECK(series_div(a, u).order() == 5);
    TruncatedSeries inner(6);
    inner.set_coeff(1, Rational(1));
    CHECK(series_compose(a, inner).order() == 6);
}

TEST_CASE("series_add spot value") {
    // Order-3 prefixes t and 1 - t^3/6 sum to 1 + t - t^3/6.
    TruncatedSeries h = from_list({"0", "1", "0", "0"});
    TruncatedSeries g = from_list({"1", "0", "0", "-1/6"});
    CHECK(series_add(h, g) == from_list({"1", "1", "0", "-1/6"}));
}

TEST_CASE("series_mul against hand-expanded product") {
    // (1-4t^2)^2 times the expansion of 64(3+4t^2)^3/(1-4t^2)^2 recovers the
    // cube: 64(3+4t^2)^3 = 1728 + 6912t^2 + 9216t^4 + 4096t^6.
    Polynomial P = Rational(64) * Polynomial::pow(Polynomial{Q("3"), Q("0"), Q("4")}, 3);
    Polynomial C2{Q("1"), Q("0"), Q("-4")};
    Polynomial Qp = Polynomial::pow(C2, 2);
    CHECK(P == Polynomial{Q("1728"), Q("0"), Q("6912"), Q("0"), Q("9216"), Q("0"), Q("4096")});
    TruncatedSeries expanded = rational_function_expand(P, Qp, 6);
    CHECK(series_mul(expanded, TruncatedSeries(Qp, 6)) == TruncatedSeries(P, 6));
}

TEST_CASE("rational_function_expand rejects poles at the origin") {
    CHECK_THROWS_AS(rational_function_expand(Polynomial{Q("1")}, Polynomial{Q("0"), Q("1")}, 4), Error);
}

TEST_CASE("multifactorial values and guards") {
    CHECK(multifactorial(3, 2, 2) == Rational(4));       // 1*4
    CHECK(multifactorial(3, 2, 1) == Rational(10));      // 2*5
    CHECK(multifactorial(3, 3, 1) == Rational(80));      // 2*5*8
    CHECK(multifactorial(4, 2, 3) == Rational(5));       // 1*5
    CHECK(multifactorial(4, 3, 1) == Rational(231));     // 3*7*11
    CHECK(multifactorial(3, 0, 1) == Rational(1));       // empty product
    for (int n = 1; n <= 8; ++n) CHECK(multifactorial(1, n, 0) == Rational::factorial(n));
    CHECK_THROWS_AS(multifactorial(0, 1, 0), Error);
    CHECK_THROWS_AS(multifactorial(3, 1, 3), Error);
    CHECK_THROWS_AS(multifactorial(3, -1, 0), Error);
}

TEST_CASE("p polynomial seeds, degree bound, and support") {
    auto p = p_polynomials(60);
    CHECK(p[0] == Polynomial::monomial(Rational(1), 3));
    CHECK(p[1] == Polynomial::monomial(Rational(-1), 2));
    // Hand-iterated n=2: (t^3-1)/3 (-2t) - 7/6 t^2 (-t^2) = 1/2 t^4 + 2/3 t.
    CHECK(p[2] == Polynomial{Q("0"), Q("2/3"), Q("0"), Q("0"), Q("1/2")});
    for (int n = 0; n <= 60; ++n) {
        CHECK(p[static_cast<size_t>(n)].degree() <= n + 3);
        // Constant term vanishes off the 3Z lattice.
        if (n % 3 != 0) CHECK(p[static_cast<size_t>(n)].coeff(0).is_zero());
    }
}
