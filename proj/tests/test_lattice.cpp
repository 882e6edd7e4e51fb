#include <doctest.h>

#include <random>

#include "muldep/lattice.hpp"

using namespace muldep;

namespace {

IntMat make(long rows, long cols, std::initializer_list<long> entries) {
    IntMat M(rows, cols);
    auto it = entries.begin();
    for (long r = 0; r < rows; r++)
        for (long c = 0; c < cols; c++) M.at(r, c) = *it++;
    return M;
}

bool in_kernel(const IntMat& M, const IntVec& v) {
    for (long r = 0; r < M.rows; r++) {
        mpz_class acc = 0;
        for (long c = 0; c < M.cols; c++) acc += M.at(r, c) * v[static_cast<size_t>(c)];
        if (acc != 0) return false;
    }
    return true;
}

// Lattice equality through the canonical form: both bases Hermite-reduce to
// the same column set.
std::vector<IntVec> canon(std::vector<IntVec> basis, long dim) {
    IntMat K(dim, static_cast<long>(basis.size()));
    for (size_t c = 0; c < basis.size(); c++)
        for (long r = 0; r < dim; r++) K.at(r, static_cast<long>(c)) = basis[c][r];
    IntMat U;
    hermite_columns(K, U);
    std::vector<IntVec> out;
    for (long c = 0; c < K.cols; c++) {
        IntVec v(dim);
        bool nz = false;
        for (long r = 0; r < dim; r++) {
            v[r] = K.at(r, c);
            if (v[r] != 0) nz = true;
        }
        if (nz) out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("integer kernel: golden cases") {
    // [2 2]: the relation lattice of two equal degrees
    std::vector<IntVec> k1 = integer_kernel(make(1, 2, {2, 2}));
    REQUIRE(k1.size() == 1);
    CHECK(((k1[0][0] == 1 && k1[0][1] == -1) || (k1[0][0] == -1 && k1[0][1] == 1)));

    // [1 2 3]: rank-one row, kernel of rank two, equal as a lattice to the
    // textbook basis
    std::vector<IntVec> k2 = integer_kernel(make(1, 3, {1, 2, 3}));
    REQUIRE(k2.size() == 2);
    for (const auto& v : k2) CHECK(in_kernel(make(1, 3, {1, 2, 3}), v));
    std::vector<IntVec> text = {{-2, 1, 0}, {-3, 0, 1}};
    CHECK(canon(k2, 3) == canon(text, 3));

    // identity: trivial kernel
    CHECK(integer_kernel(make(2, 2, {1, 0, 0, 1})).empty());
}

TEST_CASE("integer kernel: random matrices") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int iter = 0; iter < 200; iter++) {
        long rows = 1 + static_cast<long>(rng() % 4);
        long cols = 1 + static_cast<long>(rng() % 4);
        IntMat M(rows, cols);
        for (long r = 0; r < rows; r++)
            for (long c = 0; c < cols; c++) M.at(r, c) = d(rng);
        std::vector<IntVec> ker = integer_kernel(M);
        for (const auto& v : ker) {
            CHECK(!is_zero(v));
            CHECK(in_kernel(M, v));
        }
        // rank-nullity against the rational kernel dimension
        CHECK(ker.size() == rational_kernel(M).size());
    }
}

TEST_CASE("integer solve") {
    IntMat M = make(2, 3, {1, 2, 3, 0, 1, 1});
    IntVec v = {7, 2};
    std::optional<IntVec> x = solve_integer(M, v);
    REQUIRE(x.has_value());
    for (long r = 0; r < M.rows; r++) {
        mpz_class acc = 0;
        for (long c = 0; c < M.cols; c++) acc += M.at(r, c) * (*x)[static_cast<size_t>(c)];
        CHECK(acc == v[static_cast<size_t>(r)]);
    }
    CHECK(!solve_integer(make(1, 1, {2}), {1}).has_value());
    CHECK(solve_integer(make(1, 1, {2}), {6}).value()[0] == 3);

    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int iter = 0; iter < 200; iter++) {
        long rows = 1 + static_cast<long>(rng() % 3);
        long cols = 1 + static_cast<long>(rng() % 3);
        IntMat M2(rows, cols);
        for (long r = 0; r < rows; r++)
            for (long c = 0; c < cols; c++) M2.at(r, c) = d(rng);
        IntVec x0(static_cast<size_t>(cols));
        for (auto& e : x0) e = d(rng);
        IntVec rhs(static_cast<size_t>(rows), mpz_class(0));
        for (long r = 0; r < rows; r++)
            for (long c = 0; c < cols; c++)
                rhs[static_cast<size_t>(r)] += M2.at(r, c) * x0[static_cast<size_t>(c)];
        std::optional<IntVec> sol = solve_integer(M2, rhs);
        REQUIRE(sol.has_value());
        for (long r = 0; r < rows; r++) {
            mpz_class acc = 0;
            for (long c = 0; c < cols; c++)
                acc += M2.at(r, c) * (*sol)[static_cast<size_t>(c)];
            CHECK(acc == rhs[static_cast<size_t>(r)]);
        }
    }
}

TEST_CASE("coset reduction is idempotent and stays in the coset") {
    IntMat M = make(1, 3, {1, 2, 3});
    std::vector<IntVec> L = integer_kernel(M);
    IntVec v = {5, -1, 2};
    IntVec r = reduce_mod_lattice(v, L);
    // difference lies in the lattice
    IntVec diff(3);
    for (size_t i = 0; i < 3; i++) diff[i] = v[i] - r[i];
    IntMat D(3, 1);
    for (long i = 0; i < 3; i++) D.at(i, 0) = diff[static_cast<size_t>(i)];
    // solvable over the kernel basis
    IntMat B(3, static_cast<long>(L.size()));
    for (size_t c = 0; c < L.size(); c++)
        for (long r2 = 0; r2 < 3; r2++) B.at(r2, static_cast<long>(c)) = L[c][static_cast<size_t>(r2)];
    CHECK(solve_integer(B, diff).has_value());
    CHECK(reduce_mod_lattice(r, L) == r);
}

TEST_CASE("rational kernel and left null space") {
    IntMat M = make(2, 3, {1, 2, 3, 2, 4, 6});
    std::vector<QVec> ker = rational_kernel(M);
    CHECK(ker.size() == 2);
    for (const auto& v : ker)
        for (long r = 0; r < M.rows; r++) {
            mpq_class acc = 0;
            for (long c = 0; c < M.cols; c++) acc += mpq_class(M.at(r, c)) * v[static_cast<size_t>(c)];
            CHECK(acc == 0);
        }
    std::vector<QVec> left = left_nullspace(M);
    CHECK(left.size() == 1);
    for (const auto& u : left)
        for (long c = 0; c < M.cols; c++) {
            mpq_class acc = 0;
            for (long r = 0; r < M.rows; r++) acc += u[static_cast<size_t>(r)] * mpq_class(M.at(r, c));
            CHECK(acc == 0);
        }
}

TEST_CASE("rational solve") {
    IntMat M = make(2, 2, {2, 0, 0, 3});
    std::optional<QVec> x = solve_rational(M, {mpq_class(1), mpq_class(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == mpq_class(1, 2));
    CHECK((*x)[1] == mpq_class(2, 3));
    CHECK(!solve_rational(make(2, 1, {1, 2}), {mpq_class(1), mpq_class(3)}).has_value());
}

TEST_CASE("primitive vectors") {
    CHECK(primitive({4, -6, 8}) == IntVec{2, -3, 4});
    CHECK(primitive({0, 0}) == IntVec{0, 0});
    CHECK(content({4, -6, 8}) == 2);
}
