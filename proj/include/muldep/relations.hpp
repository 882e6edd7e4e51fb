#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "muldep/group.hpp"
#include "muldep/lattice.hpp"
#include "muldep/poly.hpp"
#include "muldep/rational.hpp"

namespace muldep {

// A multiplicative relation certificate. The defining identity, checkable in
// exact arithmetic, is
//     (prod_i alpha_i^k_i / eta)^m = prod_j g_j^gamma_exponents_j.
// For absolute dependence eta/m/gamma_exponents are absent and the product
// itself equals 1.
struct RelationWitness {
    std::vector<long> k;  // not all zero
    std::optional<mpq_class> eta;
    std::optional<long> m;
    std::optional<std::vector<long>> gamma_exponents;
};

enum class VerdictKind { IN, OUT, BOUNDARY };

struct Verdict {
    VerdictKind kind = VerdictKind::OUT;
    std::optional<RelationWitness> witness;
    std::string reason;

    bool is_in() const { return kind == VerdictKind::IN; }
    bool is_hit() const { return kind != VerdictKind::OUT; }
};

std::string to_string(VerdictKind k);

// Nonzero k with prod alpha_i^k_i = 1 exactly, or nullopt (independence).
std::optional<RelationWitness> dependence_absolute(const std::vector<mpq_class>& alphas);

// Exponents c with x = prod g_j^c_j exactly (sign included), else nullopt.
std::optional<std::vector<long>> gamma_membership(const mpq_class& x, const GroupSpec& G);

// x in Gamma^div iff the exponent vector of x lies in the rational span of
// the generator columns (signs never obstruct over Q: squaring absorbs -1).
// IN ships the smallest m with x^m in Gamma, verified exactly.
Verdict gamma_div_membership(const mpq_class& x, const GroupSpec& G);

// Nonzero k with exponent-vector(prod alpha^k) in the rational span of
// Gamma's columns; absence proves independence mod Gamma^div within Q*.
std::optional<RelationWitness> dependence_mod_gamma_div(const std::vector<mpq_class>& alphas,
                                                        const GroupSpec& G);

// Three-valued membership test for the approximate division group:
// IN  -- some eta with h(eta) <= eps has x/eta in Gamma^div (certificate);
// OUT -- no eta in the superset ball A(Q, eps + r*H_gen) has x/eta in Gamma;
// BOUNDARY otherwise.
Verdict eps_membership_sandwich(const mpq_class& x, const GroupSpec& G,
                                const mpq_class& eps, const EnumLimits& limits = {});

// Same sandwich at the level of a dependence relation among several values;
// solvability per eta is decided by exact linear algebra.
Verdict dependence_mod_gamma_eps(const std::vector<mpq_class>& alphas, const GroupSpec& G,
                                 const mpq_class& eps, const EnumLimits& limits = {});

struct RationalFunction {
    Poly num, den;
};

// Nonzero k with prod f_i^k_i a constant lying in Gamma (exactly), else
// nullopt = the functions are multiplicatively independent modulo Gamma.
std::optional<RelationWitness> rf_independence_mod_gamma(const std::vector<RationalFunction>& fs,
                                                         const GroupSpec& G);

// Can f1^k1 f2^k2 be a constant times a power of a linear fractional
// function over the algebraic closure? Decided over the coprime basis:
// the combined exponent vector must vanish, or live on one linear basis
// element, or on two linear elements with opposite equal exponents.
struct LfWitness {
    std::array<long, 2> k{0, 0};
    bool constant_case = false;
    Poly ell_num, ell_den;  // monic; den = 1 unless the two-point case
    long t = 0;             // f1^k1 f2^k2 = scale * (ell_num/ell_den)^t
    mpq_class scale;
    std::string ell_text() const;
};

std::optional<LfWitness> lf_generation_check(const Poly& f1, const Poly& f2);

// Exact recheck of a witness against the inputs it was issued for.
bool verify_witness(const std::vector<mpq_class>& alphas, const GroupSpec& G,
                    const RelationWitness& w);

mpq_class mpq_pow_si(const mpq_class& x, long e);

} // namespace muldep
