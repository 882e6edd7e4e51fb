#include "muldep/stbound.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <vector>

namespace muldep {

BigReal BigReal::of_ui(unsigned long x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_double(double x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_mpz(const mpz_class& x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

std::string BigReal::str(int significant_digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRe", significant_digits - 1);
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), fmt, v_);
    return buf;
}

BigReal BigReal::operator+(const BigReal& o) const {
    BigReal r(std::max(prec_, o.prec_));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-(const BigReal& o) const {
    BigReal r(std::max(prec_, o.prec_));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator*(const BigReal& o) const {
    BigReal r(std::max(prec_, o.prec_));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::times_si(long f) const {
    BigReal r(prec_);
    mpfr_mul_si(r.v_, v_, f, MPFR_RNDN);
    return r;
}

BigReal BigReal::log() const {
    if (mpfr_sgn(v_) <= 0) throw invalid_input("log of a nonpositive value");
    BigReal r(prec_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(prec_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal log_star(const BigReal& x) {
    if (x.sign() <= 0) throw invalid_input("log* needs a positive argument");
    BigReal l = x.log();
    BigReal one = BigReal::of_ui(1, x.prec());
    return l < one ? one : l;
}

void BoundInputs::validate() const {
    if (n < 2) throw invalid_input("n must be >= 2 (two distinct roots)");
    if (s < 1) throw invalid_input("s must be >= 1");
    if (d < 1) throw invalid_input("d must be >= 1");
    if (d > 2 * s) throw invalid_input("d must satisfy d <= 2s");
    if (!(h_f >= 0)) throw invalid_input("h_f must be >= 0");
    if (!(abs_disc >= 1)) throw invalid_input("abs_disc must be >= 1");
    if (d == 1 && abs_disc != 1) throw invalid_input("abs_disc must be 1 when d = 1");
    if (!(P_S >= 1)) throw invalid_input("P_S must be >= 1");
    if (!(N_S_b > 0)) throw invalid_input("N_S_b must be positive");
}

namespace {

// log of an exact integer product base^1, built in mpz to keep the argument exact.
BigReal log_of_product(const std::vector<std::pair<mpz_class, long>>& powers,
                       mpfr_prec_t prec) {
    mpz_class acc = 1;
    for (const auto& [base, e] : powers) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        acc *= pw;
    }
    return BigReal::of_mpz(acc, prec).log();
}

} // namespace

BoundReport compute_constants(const BoundInputs& in, long prec_bits) {
    in.validate();
    const mpfr_prec_t P = static_cast<mpfr_prec_t>(prec_bits);
    const long n = in.n, s = in.s, d = in.d;

    BigReal h_f = BigReal::of_double(in.h_f, P);
    BigReal log_disc = BigReal::of_double(in.abs_disc, P).log();
    BigReal log_PS = BigReal::of_double(in.P_S, P).log();
    BigReal log_star_PS = log_star(BigReal::of_double(in.P_S, P));
    BigReal log_star_NSb = log_star(BigReal::of_double(in.N_S_b, P));
    BigReal log_log_star_PS = log_star_PS.log();
    BigReal log_log_star_NSb = log_star_NSb.log();
    BigReal log2 = BigReal::of_ui(2, P).log();
    BigReal log1200 = BigReal::of_ui(1200, P).log();

    BoundReport rep;
    rep.inputs = in;
    rep.prec_bits = prec_bits;

    // C0 = (4^n n^3 s)^{2ns} e^{(2n-2) d h_f} |D_K|^n
    rep.log_C0 = log_of_product({{4, n}, {n, 3}, {s, 1}}, P).times_si(2 * n * s) +
                 h_f.times_si((2 * n - 2) * d) + log_disc.times_si(n);

    // C1 = 1200 (4^{2n} n^9 s^4)^{ns} e^{(2n-2) d h_f} |D_K|^n (log* P_S)^{ns-1}
    rep.log_C1 = log1200 + log_of_product({{4, 2 * n}, {n, 9}, {s, 4}}, P).times_si(n * s) +
                 h_f.times_si((2 * n - 2) * d) + log_disc.times_si(n) +
                 log_log_star_PS.times_si(n * s - 1);

    // C2 = (4^n n^4 s)^{4ns} e^{4 n d h_f} |D_K|^{2n} (log* P_S)(log* N_S(b))
    rep.log_C2 = log_of_product({{4, n}, {n, 4}, {s, 1}}, P).times_si(4 * n * s) +
                 h_f.times_si(4 * n * d) + log_disc.times_si(2 * n) +
                 log_log_star_PS + log_log_star_NSb;

    // C3 = 4^{4n^2 s} (10 n^2 s)^{37ns} e^{11 n d h_f} |D_K|^{6n} P_S^{n^2} log* N_S(b)
    rep.log_C3 = log2.times_si(2 * 4 * n * n * s) +
                 log_of_product({{10, 1}, {n, 2}, {s, 1}}, P).times_si(37 * n * s) +
                 h_f.times_si(11 * n * d) + log_disc.times_si(6 * n) +
                 log_PS.times_si(n * n) + log_log_star_NSb;

    // C4 = (4^n n^4 s)^{4ns} e^{4 n d h_f} |D_K|^{2n} (log* P_S)^{ns-1}
    rep.log_C4 = log_of_product({{4, n}, {n, 4}, {s, 1}}, P).times_si(4 * n * s) +
                 h_f.times_si(4 * n * d) + log_disc.times_si(2 * n) +
                 log_log_star_PS.times_si(n * s - 1);

    // C5 = 2 * 1200^2 (4^{6n} n^25 s^8)^{2ns} e^{12 n d h_f} |D_K|^{6n}
    //      (log* P_S)^{3ns} log* N_S(b)
    rep.log_C5 = log2 + log1200.times_si(2) +
                 log_of_product({{4, 6 * n}, {n, 25}, {s, 8}}, P).times_si(2 * n * s) +
                 h_f.times_si(12 * n * d) + log_disc.times_si(6 * n) +
                 log_log_star_PS.times_si(3 * n * s) + log_log_star_NSb;

    // C6 = (32 e n^2 s)^{6ns+3}
    rep.log_C6 = (log_of_product({{32, 1}, {n, 2}, {s, 1}}, P) + BigReal::of_ui(1, P))
                     .times_si(6 * n * s + 3);

    // C = 4^{12 n^2 s} (10 n^2 s)^{38ns} e^{12 n d h_f} |D_K|^{6n} P_S^{n^2}
    //     (log* P_S)^{3ns} log* N_S(b)
    rep.log_C = log2.times_si(2 * 12 * n * n * s) +
                log_of_product({{10, 1}, {n, 2}, {s, 1}}, P).times_si(38 * n * s) +
                h_f.times_si(12 * n * d) + log_disc.times_si(6 * n) +
                log_PS.times_si(n * n) + log_log_star_PS.times_si(3 * n * s) +
                log_log_star_NSb;

    // The proof's working assumption on m, reported for transparency only:
    // m >= 4^{4n^2 s} (10 n^2 s)^{38ns} e^{11 n d h_f} |D_K|^{6n} P_S^{n^2} log* N_S(b)
    rep.log_m_threshold = log2.times_si(2 * 4 * n * n * s) +
                          log_of_product({{10, 1}, {n, 2}, {s, 1}}, P).times_si(38 * n * s) +
                          h_f.times_si(11 * n * d) + log_disc.times_si(6 * n) +
                          log_PS.times_si(n * n) + log_log_star_NSb;

    // m <= 2 C log C, in log form: log 2 + log C + log log C.
    rep.log_m_bound = log2 + rep.log_C + rep.log_C.log();
    double lm = rep.log_m_bound.to_double();
    if (lm < std::log(DBL_MAX)) {
        rep.m_bound_plain = rep.log_m_bound.exp().to_double();
        rep.overflow = false;
    } else {
        rep.overflow = true;
    }
    return rep;
}

BoundReport exponent_bound(const BoundInputs& in, long prec_bits) {
    return compute_constants(in, prec_bits);
}

BigReal lemma_disc_rhs(long n, long k, long d, double h_f, double abs_disc,
                       long prec_bits) {
    if (n < 1) throw invalid_input("n must be >= 1");
    if (k < 1 || k > n) throw invalid_input("k must satisfy 1 <= k <= n");
    if (d < 1) throw invalid_input("d must be >= 1");
    if (!(h_f >= 0)) throw invalid_input("h_f must be >= 0");
    if (!(abs_disc >= 1)) throw invalid_input("abs_disc must be >= 1");
    const mpfr_prec_t P = static_cast<mpfr_prec_t>(prec_bits);
    BigReal log2 = BigReal::of_ui(2, P).log();
    BigReal logn = BigReal::of_ui(static_cast<unsigned long>(n), P).log();
    BigReal hf = BigReal::of_double(h_f, P);
    BigReal logD = BigReal::of_double(abs_disc, P).log();
    if (k == 1) {
        // 2^{(2n-2) n d} n^{(2n-1) d} e^{(2n-2) d h_f} |D_K|^{[L:K]}, [L:K] <= n.
        return log2.times_si((2 * n - 2) * n * d) + logn.times_si((2 * n - 1) * d) +
               hf.times_si((2 * n - 2) * d) + logD.times_si(n);
    }
    mpz_class nk;  // n^k
    mpz_pow_ui(nk.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class outer_z = nk * 2 * k * d;
    if (!outer_z.fits_slong_p())
        throw resource_error("exponent 2 k n^k d exceeds machine range");
    long outer = outer_z.get_si();
    // (2^n n e^{h_f})^{2 k n^k d} |D_K|^{n^k}
    return (log2.times_si(n) + logn + hf).times_si(outer) +
           logD.times_si(nk.get_si());
}

} // namespace muldep
