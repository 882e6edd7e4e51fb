#include <doctest.h>

#include <cmath>
#include <random>

#include "muldep/poly.hpp"

using namespace muldep;

namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<mpq_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

std::mt19937& rng() {
    static std::mt19937 r(29);
    return r;
}

Poly random_poly(long max_deg, long coeff_bound) {
    std::uniform_int_distribution<long> dd(0, max_deg), dc(-coeff_bound, coeff_bound);
    long deg = dd(rng());
    std::vector<mpq_class> c;
    for (long i = 0; i <= deg; i++) c.emplace_back(dc(rng()));
    Poly p{std::move(c)};
    return p.is_zero() ? Poly::constant(1) : p;
}

// Independent oracle: resultant as the Sylvester determinant, by exact
// Gaussian elimination over Q.
mpq_class sylvester_resultant(const Poly& f, const Poly& g) {
    long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    long N = m + n;
    std::vector<std::vector<mpq_class>> S(static_cast<size_t>(N),
                                          std::vector<mpq_class>(static_cast<size_t>(N), 0));
    for (long i = 0; i < n; i++)
        for (long j = 0; j <= m; j++) S[static_cast<size_t>(i)][static_cast<size_t>(i + j)] =
            f.coeffs()[static_cast<size_t>(j)];
    for (long i = 0; i < m; i++)
        for (long j = 0; j <= n; j++) S[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] =
            g.coeffs()[static_cast<size_t>(j)];
    mpq_class det = 1;
    for (long col = 0; col < N; col++) {
        long pivot = -1;
        for (long r = col; r < N; r++)
            if (S[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(S[static_cast<size_t>(pivot)], S[static_cast<size_t>(col)]);
            det = -det;
        }
        det *= S[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (long r = col + 1; r < N; r++) {
            if (S[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            mpq_class fct = S[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                            S[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (long c = col; c < N; c++)
                S[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    fct * S[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    det.canonicalize();
    return det;
}

} // namespace

TEST_CASE("polynomial basics") {
    Poly f = P({1, 0, -4});
    CHECK(f.degree() == 2);
    CHECK(f.eval(3) == 5);
    CHECK(f.derivative() == P({2, 0}));
    CHECK(f.str() == "X^2-4");
    CHECK(P({0, 0, 7}).degree() == 0);
    CHECK(Poly().is_zero());
    auto [q, r] = P({1, 0, -4}).divrem(P({1, -2}));
    CHECK(q == P({1, 2}));
    CHECK(r.is_zero());
    CHECK(Poly::from_strings({"1/2", "1"}) == Poly({mpq_class(1, 2), mpq_class(1)}));
}

TEST_CASE("polynomial heights") {
    auto [h1, hh1] = poly_heights(P({2, 0, 3}));
    CHECK(h1.max_abs == 3);
    CHECK(hh1.max_abs == 3);
    auto [h2, hh2] = poly_heights(Poly({mpq_class(1, 2), mpq_class(1)}));
    CHECK(h2.max_abs == 2);
    CHECK(hh2.max_abs == 2);
    auto [h3, hh3] = poly_heights(P({1, 0}));
    CHECK(h3.value == 0.0);
    CHECK(hh3.value == 0.0);
    CHECK_THROWS_AS(poly_heights(Poly()), invalid_input);

    // h_hom <= h always
    for (int i = 0; i < 100; i++) {
        Poly f = random_poly(6, 40);
        auto [h, hh] = poly_heights(f);
        CHECK(hh.value <= h.value + 1e-12);
    }
}

TEST_CASE("squarefree decomposition") {
    Poly f = P({1, -1}) * P({1, -1}) * P({1, 2});  // (X-1)^2 (X+2)
    SquarefreeDecomposition d = squarefree_decompose(f);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0] == std::pair<Poly, long>{P({1, 2}), 1});
    CHECK(d.parts[1] == std::pair<Poly, long>{P({1, -1}), 2});
    CHECK(d.distinct_root_count() == 2);
    CHECK(d.reconstruct() == f);

    SquarefreeDecomposition d2 = squarefree_decompose(P({1, 0, 7}));
    REQUIRE(d2.parts.size() == 1);
    CHECK(d2.parts[0].second == 1);
    CHECK(d2.distinct_root_count() == 2);

    Poly c = P({1, 1, 1});
    SquarefreeDecomposition d3 = squarefree_decompose(c * c * c);
    REQUIRE(d3.parts.size() == 1);
    CHECK(d3.parts[0] == std::pair<Poly, long>{c, 3});
    CHECK(d3.distinct_root_count() == 2);

    CHECK_THROWS_AS(squarefree_decompose(P({5})), invalid_input);
}

TEST_CASE("squarefree decomposition: random round trips") {
    for (int iter = 0; iter < 150; iter++) {
        Poly f = Poly::constant(1);
        int parts = 1 + static_cast<int>(rng()() % 3);
        for (int i = 0; i < parts; i++) {
            Poly g = random_poly(3, 8);
            if (g.degree() < 1) g = g + Poly::X();
            f = f * g.pow(1 + static_cast<long>(rng()() % 3));
        }
        SquarefreeDecomposition d = squarefree_decompose(f);
        CHECK(d.reconstruct() == f);
        Poly rad = d.radical();
        CHECK(gcd_poly(rad, rad.derivative()).degree() == 0);
        long prev = 0;
        for (const auto& [p, m] : d.parts) {
            (void)p;
            CHECK(m > prev);
            prev = m;
        }
        for (size_t i = 0; i < d.parts.size(); i++)
            for (size_t j = i + 1; j < d.parts.size(); j++)
                CHECK(gcd_poly(d.parts[i].first, d.parts[j].first).degree() == 0);
    }
}

TEST_CASE("resultants: golden values and Sylvester oracle") {
    CHECK(resultant(P({1, -1}), P({1, -2})) == -1);
    CHECK(resultant(P({1, 0, -1}), P({1, 0, -4})) == 9);
    CHECK(resultant(P({1, 0}), P({1, 0})) == 0);

    for (int iter = 0; iter < 250; iter++) {
        Poly f = random_poly(6, 9), g = random_poly(6, 9);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
        bool nonconst_gcd = gcd_poly(f, g).degree() > 0;
        CHECK((resultant(f, g) == 0) == nonconst_gcd);
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(P({1, 0, 7})) == -28);
    CHECK(discriminant(P({1, -2, 1})) == 0);
    CHECK(discriminant(P({1, 0, -1})) == 4);
    CHECK_THROWS_AS(discriminant(P({1, 2})), invalid_input);

    for (int iter = 0; iter < 120; iter++) {
        Poly f = random_poly(5, 8);
        if (f.degree() < 2) continue;
        bool repeated = squarefree_decompose(f).distinct_root_count() < f.degree();
        CHECK((discriminant(f) == 0) == repeated);
    }
}

TEST_CASE("bad reduction primes") {
    Poly f1 = Poly({mpq_class(1, 3), mpq_class(0), mpq_class(2)});
    CHECK(bad_reduction_primes(f1) == std::vector<mpz_class>{3});
    CHECK(bad_reduction_primes(P({3, 0, 2})) == std::vector<mpz_class>{3});
    CHECK(bad_reduction_primes(P({1, 0, 1})).empty());
}

TEST_CASE("coprime basis: golden cases") {
    CoprimeBasis cb = coprime_basis({P({1, 0, -1}), P({1, -1})});
    REQUIRE(cb.basis.size() == 2);
    CHECK(cb.basis[0] == P({1, -1}));
    CHECK(cb.basis[1] == P({1, 1}));
    CHECK(cb.exponents[0] == std::vector<long>{1, 1});
    CHECK(cb.exponents[1] == std::vector<long>{1, 0});

    CoprimeBasis cb2 = coprime_basis({P({1, 0, 0}), P({1, 0, 0, 0})});
    REQUIRE(cb2.basis.size() == 1);
    CHECK(cb2.basis[0] == Poly::X());
    CHECK(cb2.exponents[0] == std::vector<long>{2});
    CHECK(cb2.exponents[1] == std::vector<long>{3});

    // A coprime pair is its own gcd-free basis: splitting only ever comes
    // from gcds, never from factoring.
    CoprimeBasis cb3 = coprime_basis({P({1, 0, -1}), P({1, 0, -4})});
    REQUIRE(cb3.basis.size() == 2);
    CHECK(cb3.basis[0] == P({1, 0, -4}));
    CHECK(cb3.basis[1] == P({1, 0, -1}));
    CHECK(cb3.exponents[0] == std::vector<long>{0, 1});
    CHECK(cb3.exponents[1] == std::vector<long>{1, 0});

    // Shared factors do get split out.
    CoprimeBasis cb4 = coprime_basis({P({1, 2, 0}), P({1, 3, 2})});  // X(X+2), (X+1)(X+2)
    REQUIRE(cb4.basis.size() == 3);
    CHECK(cb4.basis[0] == P({1, 0}));
    CHECK(cb4.basis[1] == P({1, 1}));
    CHECK(cb4.basis[2] == P({1, 2}));
    CHECK(cb4.exponents[0] == std::vector<long>{1, 0, 1});
    CHECK(cb4.exponents[1] == std::vector<long>{0, 1, 1});
}

TEST_CASE("coprime basis: random reconstruction") {
    for (int iter = 0; iter < 100; iter++) {
        std::vector<Poly> fs;
        int n = 1 + static_cast<int>(rng()() % 3);
        std::vector<Poly> atoms = {P({1, 0}), P({1, 1}), P({1, -1}), P({1, 2}), P({1, 1, 1})};
        for (int i = 0; i < n; i++) {
            Poly f = Poly::constant(mpq_class(1 + static_cast<long>(rng()() % 5)));
            for (const auto& a : atoms)
                if (rng()() % 2) f = f * a.pow(1 + static_cast<long>(rng()() % 2));
            if (f.degree() < 1) f = f * P({1, 3});
            fs.push_back(f);
        }
        CoprimeBasis cb = coprime_basis(fs);
        for (size_t i = 0; i < cb.basis.size(); i++)
            for (size_t j = i + 1; j < cb.basis.size(); j++)
                CHECK(gcd_poly(cb.basis[i], cb.basis[j]).degree() == 0);
        for (size_t i = 0; i < fs.size(); i++) {
            Poly rec = Poly::constant(cb.contents[i]);
            for (size_t j = 0; j < cb.basis.size(); j++)
                rec = rec * cb.basis[j].pow(cb.exponents[i][j]);
            CHECK(rec == fs[i]);
        }
    }
}

TEST_CASE("radical height inequality h(f*) <= 2 h(f) + n log 2") {
    // Structured repeated-root inputs where the radical genuinely differs.
    std::vector<Poly> structured = {
        P({1, -1}).pow(3) * P({1, 2}).pow(2),
        P({2, 1}).pow(4),
        P({1, 0, 7}).pow(2) * P({1, -5}),
        P({3, -2}).pow(2) * P({1, 1, 1}).pow(2),
    };
    for (const auto& f : structured) {
        SquarefreeDecomposition d = squarefree_decompose(f);
        double hf = poly_heights(f).first.value;
        double hstar = poly_heights(d.with_lc_radical()).first.value;
        CHECK(hstar <= 2 * hf + f.degree() * std::log(2.0) + 1e-9);
    }
    std::uniform_int_distribution<long> dc(-100, 100);
    for (int iter = 0; iter < 300; iter++) {
        std::vector<mpq_class> c;
        long deg = 1 + static_cast<long>(rng()() % 8);
        for (long i = 0; i <= deg; i++) c.emplace_back(dc(rng()));
        Poly f{std::move(c)};
        if (f.degree() < 1) continue;
        SquarefreeDecomposition d = squarefree_decompose(f);
        double hf = poly_heights(f).first.value;
        double hstar = poly_heights(d.with_lc_radical()).first.value;
        CHECK(hstar <= 2 * hf + f.degree() * std::log(2.0) + 1e-9);
    }
}

TEST_CASE("evaluate and iterate") {
    CHECK(evaluate_and_iterate(P({1, 0, 1}), 0, 3) ==
          std::vector<mpq_class>{1, 2, 5});
    CHECK(evaluate_and_iterate(Poly::X(), 7, 2) == std::vector<mpq_class>{7, 7});
    CHECK(evaluate_and_iterate(P({1, 0, -1}), 0, 4) ==
          std::vector<mpq_class>{-1, 0, -1, 0});
    try {
        evaluate_and_iterate(P({1, 0, 1}), 2, 50, 10.0);
        CHECK(false);
    } catch (const resource_error& e) {
        CHECK(std::string(e.what()).find("index") != std::string::npos);
    }
}
