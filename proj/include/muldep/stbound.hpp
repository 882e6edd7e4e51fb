#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "muldep/errors.hpp"

namespace muldep {

// Thin RAII wrapper over mpfr_t; value semantics, fixed precision per value.
// Everything the bound evaluator needs and nothing more.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec = 128) : prec_(prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_swap(v_, o.v_); }
    BigReal& operator=(BigReal o) { std::swap(prec_, o.prec_); mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal of_ui(unsigned long x, mpfr_prec_t prec);
    static BigReal of_double(double x, mpfr_prec_t prec);
    static BigReal of_mpz(const mpz_class& x, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int significant_digits = 30) const;

    BigReal operator+(const BigReal& o) const;
    BigReal operator-(const BigReal& o) const;
    BigReal operator*(const BigReal& o) const;
    BigReal times_si(long f) const;
    BigReal log() const;           // natural log, argument must be positive
    BigReal exp() const;

    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    int sign() const { return mpfr_sgn(v_); }

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    mpfr_prec_t prec_;
    mpfr_t v_;
};

// log* x = max(1, log x), in arbitrary precision.
BigReal log_star(const BigReal& x);

// Inputs of the generalized Schinzel-Tijdeman bound. Over Q the caller
// computes P_S and N_S(b) exactly; for a general field they are opaque.
struct BoundInputs {
    long n = 2;            // degree of f, >= 2
    long s = 1;            // #S >= 1
    long d = 1;            // field degree, d <= 2s
    double h_f = 0.0;      // Weil height of f, >= 0
    double abs_disc = 1.0; // |D_K| >= 1, = 1 when d = 1
    double P_S = 1.0;      // >= 1
    double N_S_b = 1.0;    // > 0

    void validate() const;  // throws invalid_input naming the field
};

// Every constant of the bound in natural-log space.
struct BoundReport {
    BoundInputs inputs;
    long prec_bits = 128;
    BigReal log_C0, log_C1, log_C2, log_C3, log_C4, log_C5, log_C6;
    BigReal log_C;
    // The lower-threshold display assumed during the proof; informational.
    BigReal log_m_threshold;
    // m <= 2 C log C; log form always, plain value only when it fits a double.
    BigReal log_m_bound;
    std::optional<double> m_bound_plain;
    bool overflow = false;

    BoundReport() = default;
};

BoundReport compute_constants(const BoundInputs& in, long prec_bits = 128);

// Returns the report with the exponent bound fields filled (same as
// compute_constants; kept as the named operation for the bound itself).
BoundReport exponent_bound(const BoundInputs& in, long prec_bits = 128);

// log of the field-discriminant bound (2^n n e^{h_f})^{2 k n^k d} |D_K|^{n^k};
// for k = 1 the sharper 2^{(2n-2)nd} n^{(2n-1)d} e^{(2n-2)d h_f} |D_K|^n form.
BigReal lemma_disc_rhs(long n, long k, long d, double h_f, double abs_disc,
                       long prec_bits = 128);

} // namespace muldep
