#pragma once

#include <gmpxx.h>

#include <vector>

#include "muldep/lattice.hpp"
#include "muldep/rational.hpp"

namespace muldep {

// Finitely generated subgroup of Q* given by its generators, with the
// derived prime support and exponent lattice.
struct GroupSpec {
    std::vector<FactoredRational> generators;  // nonzero
    std::vector<mpz_class> support;            // sorted union of supports
    IntMat exponent_matrix;                    // rows = support, cols = generators
    std::vector<int> sign_row;                 // generator signs
    mpz_class max_gen_abs = 1;                 // max(|p|,|q|) over generators

    long rank() const { return static_cast<long>(generators.size()); }
    // H_gen = log(max_gen_abs): height bound of the given generating set.
    double h_gen() const { return max_gen_abs == 1 ? 0.0 : log_mpz(max_gen_abs); }
    // floor(e^eps * max_gen_abs^rank): radius of the Lemma-style superset
    // ball A(Q, eps + r*H_gen); exact when eps = 0.
    mpz_class superset_radius(const mpq_class& eps) const;

    static GroupSpec from_rationals(const std::vector<mpq_class>& gens);
    static GroupSpec trivial() { return from_rationals({mpq_class(1)}); }
};

} // namespace muldep
