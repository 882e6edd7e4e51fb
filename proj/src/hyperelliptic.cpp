#include <omp.h>

#include <algorithm>
#include <cmath>

#include "muldep/search.hpp"

namespace muldep {

namespace {

// Run fn(i) for i in [0, n); workers == 1 is the plain serial loop kept as
// the reference path, anything else goes through OpenMP.
template <typename F>
void parallel_indices(long n, int workers, F&& fn) {
    if (workers == 1) {
        for (long i = 0; i < n; i++) fn(i);
        return;
    }
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (long i = 0; i < n; i++) fn(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; i++) fn(i);
    }
}

bool denominator_supported(const mpq_class& x, const PlaceSet& S) {
    if (x.get_den() == 1) return true;
    for (const auto& [p, e] : factor_integer(x.get_den())) {
        (void)e;
        if (!S.contains(p)) return false;
    }
    return true;
}

} // namespace

HyperellipticReport hyperelliptic_search(const Poly& f_in, const mpq_class& b,
                                         const PlaceSet& S, const mpq_class& H,
                                         long m_max, const EnumLimits& limits,
                                         int workers) {
    if (f_in.is_zero() || f_in.degree() < 1)
        throw invalid_input("the polynomial must be nonconstant");
    if (b == 0) throw invalid_input("b must be nonzero");
    if (m_max < 3) throw invalid_input("m_max must be at least 3");

    // S-clearing: scale (f, b) by the positive integer killing the non-S
    // denominators of f; the solution set is unchanged.
    mpz_class clear = 1;
    for (const auto& c : f_in.coeffs()) {
        if (c == 0) continue;
        for (const auto& [p, e] : factor_integer(c.get_den())) {
            if (S.contains(p)) continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), clear.get_mpz_t(), pw.get_mpz_t());
            clear *= pw / g;
        }
    }
    Poly f = f_in.scaled(clear);
    mpq_class bb = b * clear;
    if (!denominator_supported(bb, S))
        throw invalid_input("b is not an S-integer");

    std::vector<mpq_class> candidates;
    candidates.push_back(0);
    for (const auto& x : enumerate_max_abs(height_ball_radius(H), limits))
        if (denominator_supported(x, S)) candidates.push_back(x);

    long n = static_cast<long>(candidates.size());
    std::vector<std::vector<HyperellipticSolution>> found(static_cast<size_t>(n));
    std::vector<std::optional<ScanSkip>> skips(static_cast<size_t>(n));

    parallel_indices(n, workers, [&](long i) {
        const mpq_class& x = candidates[static_cast<size_t>(i)];
        try {
        mpq_class z = f.eval(x) / bb;
        z.canonicalize();
        if (z == 0) {
            skips[static_cast<size_t>(i)] = ScanSkip{x, "f(x) = 0"};
            return;
        }
        FactoredRational fz = factor(z);
        // y exists for m iff every valuation of z is divisible by m, the
        // non-S part of z is a nonnegative power with at least one positive
        // exponent (y not an S-unit), and the sign is feasible.
        bool has_positive_outside = false;
        bool nonneg_outside = true;
        for (const auto& [p, e] : fz.exponents) {
            if (S.contains(p)) continue;
            if (e < 0) nonneg_outside = false;
            if (e > 0) has_positive_outside = true;
        }
        if (!nonneg_outside || !has_positive_outside) return;
        for (long m = 3; m <= m_max; m++) {
            bool divisible = true;
            for (const auto& [p, e] : fz.exponents)
                if (e % m != 0) { divisible = false; break; }
            if (!divisible) continue;
            if (m % 2 == 0 && fz.sign < 0) continue;
            FactoredRational fy;
            fy.sign = (m % 2 == 0) ? 1 : fz.sign;
            for (const auto& [p, e] : fz.exponents) fy.exponents[p] = e / m;
            found[static_cast<size_t>(i)].push_back(
                HyperellipticSolution{x, fy.value(), m});
        }
        } catch (const std::exception& e) {
            skips[static_cast<size_t>(i)] = ScanSkip{x, std::string("error: ") + e.what()};
        }
    });

    HyperellipticReport out;
    for (long i = 0; i < n; i++) {
        for (auto& sol : found[static_cast<size_t>(i)]) out.solutions.push_back(sol);
        if (skips[static_cast<size_t>(i)]) out.skipped.push_back(*skips[static_cast<size_t>(i)]);
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const HyperellipticSolution& a, const HyperellipticSolution& b2) {
                  if (a.x != b2.x) return canonical_rational_less(a.x, b2.x);
                  return a.m < b2.m;
              });
    return out;
}

ValidateReport validate_bound(const Poly& f, const mpq_class& b, const PlaceSet& S,
                              const mpq_class& H, long m_max, const EnumLimits& limits,
                              int workers, long prec_bits) {
    if (f.degree() < 1) throw invalid_input("the polynomial must be nonconstant");
    long distinct = squarefree_decompose(f).distinct_root_count();
    if (distinct < 2)
        throw hypothesis_error("the polynomial has fewer than two distinct roots");

    ValidateReport rep;
    rep.search = hyperelliptic_search(f, b, S, H, m_max, limits, workers);

    BoundInputs in;
    in.n = f.degree();
    in.s = S.s();
    in.d = 1;
    in.h_f = poly_heights(f).first.value;
    in.abs_disc = 1.0;
    auto [ps, qs] = p_s_q_s(S);
    (void)qs;
    in.P_S = ps.get_d();
    in.N_S_b = s_norm(factor(b), S).get_d();
    rep.bound = exponent_bound(in, prec_bits);

    long max_m = 0;
    for (const auto& sol : rep.search.solutions) max_m = std::max(max_m, sol.m);
    double log_bound = rep.bound.log_m_bound.to_double();
    if (max_m > 0) {
        rep.all_below = std::log(static_cast<double>(max_m)) <= log_bound;
        rep.log_margin = log_bound - std::log(static_cast<double>(max_m));
    } else {
        rep.all_below = true;
        rep.log_margin = log_bound;
    }
    return rep;
}

} // namespace muldep
