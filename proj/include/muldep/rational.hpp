#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "muldep/errors.hpp"

namespace muldep {

// Exact nonzero rational as sign * prod p^e, the working currency for
// valuations and exponent-lattice columns.
struct FactoredRational {
    int sign = 1;                         // +1 or -1
    std::map<mpz_class, long> exponents;  // prime -> nonzero exponent

    long valuation(const mpz_class& p) const {
        auto it = exponents.find(p);
        return it == exponents.end() ? 0 : it->second;
    }
    bool is_unit() const { return exponents.empty(); }  // +-1
    bool is_one() const { return sign == 1 && exponents.empty(); }

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational inverse() const;
    FactoredRational pow(long k) const;
    mpq_class value() const;

    bool operator==(const FactoredRational& o) const = default;
};

FactoredRational operator*(FactoredRational a, const FactoredRational& b);

// Unique factorization; throws invalid_input on zero.
FactoredRational factor(const mpq_class& x);
mpq_class unfactor(const FactoredRational& f);

// Prime factorization of |n|, n != 0.
std::map<mpz_class, long> factor_integer(const mpz_class& n);

// A finite set of places of Q. The archimedean place is always a member and
// stays implicit; only the finite primes are stored.
struct PlaceSet {
    std::vector<mpz_class> finite_primes;  // sorted, distinct, each prime

    long s() const { return 1 + static_cast<long>(finite_primes.size()); }
    bool contains(const mpz_class& p) const;

    static PlaceSet infinite_only() { return PlaceSet{}; }
    // Validates primality and dedupes/sorts.
    static PlaceSet of(std::vector<mpz_class> primes);

    bool operator==(const PlaceSet&) const = default;
};

// Natural-log Weil height. `exact` marks values that are log of the held
// integer max_abs = max(|p|,|q|).
struct HeightValue {
    double value = 0.0;
    bool exact = true;
    mpz_class max_abs = 1;
};

// log of a positive integer, correctly rounded to double precision.
double log_mpz(const mpz_class& z);

HeightValue height(const mpq_class& x);  // throws invalid_input on zero

// S-norm N_S(b) = |b| * prod_{p in S} p^{-v_p(b)}, exact.
mpq_class s_norm(const FactoredRational& b, const PlaceSet& S);

// (P_S, Q_S): max and product of the finite primes of S, both 1 when S has
// no finite place.
std::pair<mpz_class, mpz_class> p_s_q_s(const PlaceSet& S);

// log* x = max(1, log x); throws invalid_input for x <= 0.
double log_star(double x);

struct EnumLimits {
    unsigned long max_elements = 10'000'000;
};

// floor(e^H) for exact rational H >= 0, computed with directed rounding so
// the integer bound is exact. floor(e^H * scale) variant used for the
// eps + r*H_gen balls (exact when H == 0).
mpz_class height_ball_radius(const mpq_class& H);
mpz_class height_ball_radius_scaled(const mpq_class& H, const mpz_class& scale);

// {x in Q* : h(x) <= H} = {+-p/q : gcd(p,q)=1, 1 <= p,q <= floor(e^H)} in
// canonical order: ascending max(|p|,|q|), then numerator, then denominator,
// then sign (+ before -).
std::vector<mpq_class> enumerate_bounded_height(const mpq_class& H,
                                                const EnumLimits& limits = {});
std::vector<mpq_class> enumerate_max_abs(const mpz_class& B,
                                         const EnumLimits& limits = {});

// Canonical order key used by the enumeration and by scan reports.
bool canonical_rational_less(const mpq_class& a, const mpq_class& b);

// "p/q", "n", or a plain decimal like "0.125"; exact. Throws invalid_input.
mpq_class parse_rational(const std::string& s);
std::string rational_to_string(const mpq_class& x);

} // namespace muldep
