#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "muldep/errors.hpp"
#include "muldep/rational.hpp"

namespace muldep {

// Univariate polynomial over Q, coefficients in descending degree order
// (a0 X^n + ... + an). The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> desc_coeffs);
    static Poly constant(const mpq_class& c);
    static Poly X();
    static Poly from_strings(const std::vector<std::string>& coeffs);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpq_class& lc() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }
    // Coefficient of X^i.
    mpq_class coeff_of(long i) const;

    mpq_class eval(const mpq_class& x) const;
    Poly derivative() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const mpq_class& c) const;
    Poly monic() const;
    Poly pow(long e) const;

    // Exact field division: q, r with *this = q * d + r, deg r < deg d.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    // Exact division; throws invalid_input when the remainder is nonzero.
    Poly divexact(const Poly& d) const;

    bool operator==(const Poly& o) const = default;

    std::string str() const;  // "X^2-4", "1/3*X^2+2", ...

private:
    std::vector<mpq_class> c_;
};

// Deterministic total order: degree, then coefficients lexicographically.
bool poly_less(const Poly& a, const Poly& b);

// Monic gcd; gcd(f, 0) = monic f; gcd(0, 0) = 0.
Poly gcd_poly(const Poly& f, const Poly& g);

// f = unit * prod parts[i]^mult[i] with monic squarefree pairwise-coprime
// parts and strictly increasing multiplicities (Yun's cascade).
struct SquarefreeDecomposition {
    mpq_class unit;
    std::vector<std::pair<Poly, long>> parts;

    Poly radical() const;  // monic product of the parts
    // lc(f) * radical: same distinct roots as f, leading coefficient kept.
    Poly with_lc_radical() const;
    long distinct_root_count() const { return radical().degree(); }
    Poly reconstruct() const;
};

SquarefreeDecomposition squarefree_decompose(const Poly& f);

// (h(f), h_hom(f)): heights of the projective vectors [1,a0,...,an] and
// [a0,...,an] after clearing to a coprime integer vector.
std::pair<HeightValue, HeightValue> poly_heights(const Poly& f);

// Sylvester-convention resultant, computed with the subresultant PRS.
mpq_class resultant(const Poly& f, const Poly& g);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f); requires deg f >= 2.
mpq_class discriminant(const Poly& f);

// Primes p with v_p(a_i) < 0 for some i, or v_p(a0) > 0.
std::vector<mpz_class> bad_reduction_primes(const Poly& f);

// Primes outside S at which f has bad reduction (empty iff f is in O_S[X]
// with S-unit leading coefficient up to good reduction).
std::vector<mpz_class> bad_reduction_primes_outside(const Poly& f, const PlaceSet& S);

// gcd-free basis: pairwise coprime monic nonconstant polynomials such that
// every input is contents[i] * prod basis[j]^exponents[i][j] exactly.
struct CoprimeBasis {
    std::vector<Poly> basis;                  // sorted by poly_less
    std::vector<std::vector<long>> exponents; // one row per input
    std::vector<mpq_class> contents;
};

CoprimeBasis coprime_basis(const std::vector<Poly>& fs);

// [f(a), f^(2)(a), ..., f^(m)(a)]; throws resource_error naming the first
// index whose height exceeds the cap (natural-log scale).
std::vector<mpq_class> evaluate_and_iterate(const Poly& f, const mpq_class& alpha,
                                            long m, double height_cap_log = 5000.0);

} // namespace muldep
