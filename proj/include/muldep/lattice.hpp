#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "muldep/errors.hpp"

namespace muldep {

// Dense row-major integer matrix, small by construction (rows = primes in a
// support set, cols = generators / unknowns).
struct IntMat {
    long rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    mpz_class& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpz_class& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

using IntVec = std::vector<mpz_class>;
using QVec = std::vector<mpq_class>;

// Column-style Hermite reduction of M in place, tracking the unimodular
// transform U (M_out = M_in * U). Pivot entries positive, entries left of a
// pivot reduced into [0, pivot).
void hermite_columns(IntMat& M, IntMat& U);

// Canonical basis of {k in Z^c : M k = 0}, each vector length M.cols.
// The basis matrix is itself Hermite-reduced, so the result is unique for
// the kernel lattice.
std::vector<IntVec> integer_kernel(const IntMat& M);

// One integer solution of M x = v, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMat& M, const IntVec& v);

// Reduce v modulo the lattice spanned by `basis` (columns in Hermite form);
// deterministic representative of the coset.
IntVec reduce_mod_lattice(IntVec v, const std::vector<IntVec>& basis);

// Rational kernel of M (rows x cols over Q given as integer matrix):
// basis of {u : M u = 0} with u rational, one vector per free column.
std::vector<QVec> rational_kernel(const IntMat& M);

// Basis of the left null space {u : u^T M = 0} as rational row vectors.
std::vector<QVec> left_nullspace(const IntMat& M);

// Solve M y = v over Q; nullopt when inconsistent. When the solution is not
// unique, free variables are set to 0 (deterministic).
std::optional<QVec> solve_rational(const IntMat& M, const QVec& v);

// gcd of entries; 0 for the zero vector.
mpz_class content(const IntVec& v);
// v / content(v); zero vector unchanged.
IntVec primitive(IntVec v);

bool is_zero(const IntVec& v);

} // namespace muldep
