#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muldep/group.hpp"
#include "muldep/poly.hpp"
#include "muldep/relations.hpp"
#include "muldep/stbound.hpp"

namespace muldep {

struct InstanceSpec {
    std::vector<Poly> polys;
    GroupSpec gamma = GroupSpec::trivial();
    mpq_class epsilon = 0;       // eps >= 0
    mpq_class height_bound = 0;  // H >= 0, candidates have h(alpha) <= H
    bool override_hypotheses = false;
    int workers = 0;  // 0 = library default; 1 = serial reference path
    EnumLimits limits;
    double iterate_height_cap = 5000.0;
};

struct HypothesisItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct HypothesisReport {
    std::vector<HypothesisItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

struct ScanHit {
    mpq_class alpha;
    long iterate_offset = -1;  // orbit-window scans only
    Verdict verdict;
};

struct ScanSkip {
    mpq_class alpha;
    std::string reason;
};

struct ScanReport {
    HypothesisReport hypotheses;
    std::vector<ScanHit> hits;       // sorted by height then canonical order
    std::vector<ScanSkip> skipped;
    std::vector<long> shell_counts;  // hits per height shell of width 0.5
    bool stabilized = false;         // last two shells empty
};

// S_Gamma: the archimedean place plus the primes supporting the generators.
PlaceSet s_gamma(const GroupSpec& G);

// S_{f,Gamma,eps} with its per-stage breakdown.
struct PlaceBreakdown {
    PlaceSet total;
    std::vector<mpz_class> gamma_primes;
    std::vector<mpz_class> bad_reduction;
    std::vector<mpz_class> resultant_primes;
    std::vector<mpz_class> eta_primes;
};

PlaceBreakdown s_f_gamma_eps(const InstanceSpec& inst);

// Integer kernel of the degree equation k1 d1 + ... + kn dn = 0, plus the
// power-product function built from the first basis vector.
struct DiophantineBasis {
    std::vector<std::vector<long>> basis;
    std::optional<RationalFunction> F;
};

DiophantineBasis diophantine_exponent_basis(const std::vector<long>& degrees,
                                            const std::vector<Poly>* polys = nullptr);

// Solutions of f(x) = b y^m with x, y S-integers, y not an S-unit,
// h(x) <= H, 3 <= m <= m_max. For even m the sign-paired solutions (x, -y)
// are collapsed to the canonical y > 0.
struct HyperellipticSolution {
    mpq_class x, y;
    long m = 0;
};

struct HyperellipticReport {
    std::vector<HyperellipticSolution> solutions;
    std::vector<ScanSkip> skipped;  // x with f(x) = 0
};

HyperellipticReport hyperelliptic_search(const Poly& f, const mpq_class& b,
                                         const PlaceSet& S, const mpq_class& H,
                                         long m_max, const EnumLimits& limits = {},
                                         int workers = 0);

struct ValidateReport {
    HyperellipticReport search;
    BoundReport bound;
    bool all_below = true;
    double log_margin = 0.0;  // log(bound) - log(max found m)
};

ValidateReport validate_bound(const Poly& f, const mpq_class& b, const PlaceSet& S,
                              const mpq_class& H, long m_max,
                              const EnumLimits& limits = {}, int workers = 0,
                              long prec_bits = 128);

// Scan for alpha where the values f_1(alpha),...,f_n(alpha) are
// multiplicatively dependent modulo the approximate division group.
ScanReport scan_theorem12(const InstanceSpec& inst);

// Orbit-window variant: windows f^(m+1)(alpha),...,f^(m+window) for
// 0 <= m <= m_max.
ScanReport scan_corollary13(const Poly& f, const GroupSpec& G, const mpq_class& eps,
                            long window, long m_max, const mpq_class& H,
                            bool override_hypotheses = false, int workers = 0,
                            const EnumLimits& limits = {},
                            double iterate_height_cap = 400.0);

enum class Periodicity { PERIODIC, NOT_PERIODIC, UNDECIDED };

std::string to_string(Periodicity p);

struct PeriodicityReport {
    Periodicity verdict = Periodicity::UNDECIDED;
    std::vector<mpq_class> orbit;  // values after 0, up to the decision point
    std::string detail;
};

// Orbit of 0 under f: cycle detection up to step_cap plus a height-escape
// criterion (see detail strings).
PeriodicityReport check_zero_periodicity(const Poly& f, long step_cap);

// Two-polynomial scan with the linear-fractional hypothesis check; witness
// exponents are gcd-reduced.
ScanReport scan_theorem15(const Poly& f1, const Poly& f2, const GroupSpec& G,
                          const mpq_class& eps, const mpq_class& H,
                          bool override_hypotheses = false, int workers = 0,
                          const EnumLimits& limits = {});

} // namespace muldep
