#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "muldep/rational.hpp"

using namespace muldep;

TEST_CASE("factorization of rationals") {
    FactoredRational f = factor(mpq_class(12, 5));
    CHECK(f.sign == 1);
    REQUIRE(f.exponents.size() == 3);
    CHECK(f.exponents.at(2) == 2);
    CHECK(f.exponents.at(3) == 1);
    CHECK(f.exponents.at(5) == -1);

    FactoredRational minus_one = factor(mpq_class(-1));
    CHECK(minus_one.sign == -1);
    CHECK(minus_one.exponents.empty());

    FactoredRational one = factor(mpq_class(1));
    CHECK(one.sign == 1);
    CHECK(one.exponents.empty());
    CHECK(one.is_one());

    CHECK_THROWS_AS(factor(mpq_class(0)), invalid_input);
}

TEST_CASE("factor/unfactor round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 300; i++) {
        long p = num(rng);
        if (p == 0) p = 1;
        mpq_class x(p, den(rng));
        x.canonicalize();
        CHECK(unfactor(factor(x)) == x);
    }
}

TEST_CASE("factored arithmetic") {
    FactoredRational a = factor(mpq_class(12, 5));
    FactoredRational b = factor(mpq_class(5, 4));
    CHECK(unfactor(a * b) == mpq_class(3));
    CHECK(unfactor(a.inverse()) == mpq_class(5, 12));
    CHECK(unfactor(a.pow(2)) == mpq_class(144, 25));
    CHECK(unfactor(a.pow(0)) == 1);
    CHECK(unfactor(factor(mpq_class(-2)).pow(2)) == 4);
    CHECK(unfactor(factor(mpq_class(-2)).pow(3)) == -8);
}

TEST_CASE("heights of rationals") {
    HeightValue h = height(mpq_class(2, 3));
    CHECK(h.max_abs == 3);
    CHECK(h.value == doctest::Approx(std::log(3.0)));
    CHECK(height(mpq_class(-5)).max_abs == 5);
    CHECK(height(mpq_class(1)).value == 0.0);
    CHECK_THROWS_AS(height(mpq_class(0)), invalid_input);
}

TEST_CASE("height bounds under products and powers") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-60, 60);
    for (int i = 0; i < 200; i++) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        mpq_class x(a, 1 + std::abs(d(rng))), y(b, 1 + std::abs(d(rng)));
        x.canonicalize();
        y.canonicalize();
        CHECK(height(x * y).value <= height(x).value + height(y).value + 1e-9);
        long k = d(rng) % 11;
        mpq_class xk = 1;
        for (long j = 0; j < std::labs(k); j++) xk *= x;
        if (k < 0) xk = 1 / xk;
        if (k != 0)
            CHECK(height(xk).value ==
                  doctest::Approx(std::labs(k) * height(x).value).epsilon(1e-9));
    }
}

TEST_CASE("S-norm") {
    PlaceSet s2 = PlaceSet::of({mpz_class(2)});
    PlaceSet s23 = PlaceSet::of({mpz_class(2), mpz_class(3)});
    CHECK(s_norm(factor(mpq_class(12)), s2) == 3);
    CHECK(s_norm(factor(mpq_class(12)), s23) == 1);
    CHECK(s_norm(factor(mpq_class(10)), PlaceSet::infinite_only()) == 10);
}

TEST_CASE("product formula: full support inside S gives norm 1") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> d(-500, 500);
    for (int i = 0; i < 100; i++) {
        long a = d(rng);
        if (a == 0) a = 7;
        mpq_class x(a, 1 + std::abs(d(rng)));
        x.canonicalize();
        FactoredRational f = factor(x);
        std::vector<mpz_class> primes;
        for (const auto& [p, e] : f.exponents) primes.push_back(p);
        CHECK(s_norm(f, PlaceSet::of(primes)) == 1);
    }
}

TEST_CASE("P_S and Q_S") {
    CHECK(p_s_q_s(PlaceSet::of({mpz_class(2), mpz_class(3)})) ==
          std::pair<mpz_class, mpz_class>{3, 6});
    CHECK(p_s_q_s(PlaceSet::infinite_only()) == std::pair<mpz_class, mpz_class>{1, 1});
    CHECK(p_s_q_s(PlaceSet::of({mpz_class(5)})) == std::pair<mpz_class, mpz_class>{5, 5});
}

TEST_CASE("PlaceSet validates primality") {
    CHECK_THROWS_AS(PlaceSet::of({mpz_class(4)}), invalid_input);
    CHECK_THROWS_AS(PlaceSet::of({mpz_class(1)}), invalid_input);
}

TEST_CASE("log*") {
    CHECK(log_star(1.0) == 1.0);
    CHECK(log_star(std::exp(2.0)) == doctest::Approx(2.0));
    CHECK(log_star(0.5) == 1.0);
    CHECK_THROWS_AS(log_star(0.0), invalid_input);
    CHECK_THROWS_AS(log_star(-3.0), invalid_input);
    double prev = log_star(0.01);
    for (double x = 0.02; x < 20.0; x += 0.37) {
        double cur = log_star(x);
        CHECK(cur >= prev);
        CHECK(cur >= 1.0);
        prev = cur;
    }
}

TEST_CASE("height ball radius is the exact floor of e^H") {
    CHECK(height_ball_radius(mpq_class(0)) == 1);
    CHECK(height_ball_radius(parse_rational("0.6932")) == 2);   // just above log 2
    CHECK(height_ball_radius(parse_rational("1.0987")) == 3);   // just above log 3
    CHECK(height_ball_radius(parse_rational("1.0985")) == 2);   // just below log 3
    CHECK(height_ball_radius_scaled(mpq_class(0), mpz_class(32)) == 32);
    CHECK(height_ball_radius_scaled(parse_rational("0.1"), mpz_class(2)) == 2);
    CHECK_THROWS_AS(height_ball_radius(mpq_class(-1)), invalid_input);
}

TEST_CASE("bounded height enumeration: golden sets") {
    // h <= log 2
    std::vector<mpq_class> e2 = enumerate_bounded_height(parse_rational("0.6932"));
    std::vector<mpq_class> want = {mpq_class(1),     mpq_class(-1),   mpq_class(1, 2),
                                   mpq_class(-1, 2), mpq_class(2),    mpq_class(-2)};
    CHECK(e2 == want);

    // h = 0: only the units
    std::vector<mpq_class> e0 = enumerate_bounded_height(mpq_class(0));
    CHECK(e0 == std::vector<mpq_class>{mpq_class(1), mpq_class(-1)});

    // h <= log 3: independently counted coprime pairs
    long count = 0;
    for (long p = 1; p <= 3; p++)
        for (long q = 1; q <= 3; q++)
            if (std::gcd(p, q) == 1) count += 2;
    CHECK(count == 14);
    CHECK(enumerate_bounded_height(parse_rational("1.0987")).size() == 14);
}

TEST_CASE("bounded height enumeration: invariants") {
    mpq_class H = parse_rational("2.1");
    std::vector<mpq_class> all = enumerate_bounded_height(H);
    std::set<mpq_class> seen;
    double Hd = H.get_d();
    for (const auto& x : all) {
        CHECK(height(x).value <= Hd + 1e-12);
        CHECK(!seen.count(x));
        seen.insert(x);
    }
    // cardinality monotone in H
    size_t prev = 0;
    for (const char* h : {"0", "0.5", "1.0", "1.5", "2.0", "2.5"}) {
        size_t n = enumerate_bounded_height(parse_rational(h)).size();
        CHECK(n >= prev);
        prev = n;
    }
    // canonical order is strictly increasing
    for (size_t i = 0; i + 1 < all.size(); i++)
        CHECK(canonical_rational_less(all[i], all[i + 1]));
}

TEST_CASE("enumeration cap refuses loudly") {
    EnumLimits tight;
    tight.max_elements = 100;
    CHECK_THROWS_AS(enumerate_max_abs(mpz_class(50), tight), resource_error);
    CHECK_THROWS_AS(enumerate_max_abs(mpz_class(100000), tight), resource_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == mpq_class(3, 4));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("0.125") == mpq_class(1, 8));
    CHECK(parse_rational("2.5") == mpq_class(5, 2));
    CHECK(parse_rational("-0.5") == mpq_class(-1, 2));
    CHECK(parse_rational("6/4") == mpq_class(3, 2));
    CHECK_THROWS_AS(parse_rational(""), invalid_input);
    CHECK_THROWS_AS(parse_rational("abc"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1/0"), invalid_input);
    CHECK_THROWS_AS(parse_rational("1.2.3"), invalid_input);
    CHECK(rational_to_string(mpq_class(3, 4)) == "3/4");
    CHECK(rational_to_string(mpq_class(-7)) == "-7");
}
