#include <omp.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "muldep/search.hpp"

namespace muldep {

namespace {

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

double height_or_zero(const mpq_class& x) { return x == 0 ? 0.0 : height(x).value; }

void finish_report(ScanReport& rep, const mpq_class& H) {
    double Hd = mpq_class(H).get_d();
    long shells = static_cast<long>(std::floor(Hd / 0.5)) + 1;
    rep.shell_counts.assign(static_cast<size_t>(shells), 0);
    for (const auto& hit : rep.hits) {
        long shell = static_cast<long>(std::floor(height_or_zero(hit.alpha) / 0.5));
        shell = std::clamp<long>(shell, 0, shells - 1);
        rep.shell_counts[static_cast<size_t>(shell)]++;
    }
    rep.stabilized = shells >= 2 &&
                     rep.shell_counts[static_cast<size_t>(shells - 1)] == 0 &&
                     rep.shell_counts[static_cast<size_t>(shells - 2)] == 0;
}

std::string failed_names(const HypothesisReport& hr) {
    std::string out;
    for (const auto& item : hr.items) {
        if (item.pass) continue;
        if (!out.empty()) out += ", ";
        out += item.name + " (" + item.detail + ")";
    }
    return out;
}

void gate_hypotheses(const HypothesisReport& hr, bool override_hypotheses) {
    if (hr.all_pass() || override_hypotheses) return;
    throw hypothesis_error("hypothesis check failed: " + failed_names(hr) +
                           "; pass the override flag to scan anyway");
}

HypothesisItem distinct_roots_item(const Poly& f, const std::string& name) {
    if (f.degree() < 1) return {name, false, "constant polynomial"};
    long roots = squarefree_decompose(f).distinct_root_count();
    return {name, roots >= 2, std::to_string(roots) + " distinct roots"};
}

// Candidate list {0} union A(Q, H), already in canonical scan order.
std::vector<mpq_class> scan_candidates(const mpq_class& H, const EnumLimits& limits) {
    std::vector<mpq_class> out;
    out.push_back(0);
    for (auto& x : enumerate_max_abs(height_ball_radius(H), limits))
        out.push_back(std::move(x));
    return out;
}

} // namespace

ScanReport scan_theorem12(const InstanceSpec& inst) {
    if (inst.polys.empty()) throw invalid_input("no polynomials given");
    for (const auto& f : inst.polys)
        if (f.degree() < 1) throw invalid_input("polynomials must be nonconstant");

    ScanReport rep;
    for (size_t i = 0; i < inst.polys.size(); i++)
        rep.hypotheses.items.push_back(
            distinct_roots_item(inst.polys[i], "distinct_roots_f" + std::to_string(i + 1)));
    {
        bool coprime = true;
        std::string detail = "all resultants nonzero";
        for (size_t i = 0; i < inst.polys.size() && coprime; i++)
            for (size_t j = i + 1; j < inst.polys.size() && coprime; j++)
                if (resultant(inst.polys[i], inst.polys[j]) == 0) {
                    coprime = false;
                    detail = "Res(f" + std::to_string(i + 1) + ",f" + std::to_string(j + 1) +
                             ") = 0";
                }
        rep.hypotheses.items.push_back({"pairwise_coprime", coprime, detail});
    }
    gate_hypotheses(rep.hypotheses, inst.override_hypotheses);

    std::vector<mpq_class> candidates = scan_candidates(inst.height_bound, inst.limits);
    long n = static_cast<long>(candidates.size());
    std::vector<std::optional<ScanHit>> hits(static_cast<size_t>(n));
    std::vector<std::optional<ScanSkip>> skips(static_cast<size_t>(n));

    parallel_indices(n, inst.workers, [&](long i) {
        const mpq_class& a = candidates[static_cast<size_t>(i)];
        try {
            std::vector<mpq_class> values;
            for (size_t j = 0; j < inst.polys.size(); j++) {
                mpq_class v = inst.polys[j].eval(a);
                if (v == 0) {
                    skips[static_cast<size_t>(i)] =
                        ScanSkip{a, "f" + std::to_string(j + 1) + "(alpha) = 0"};
                    return;
                }
                values.push_back(std::move(v));
            }
            Verdict v = dependence_mod_gamma_eps(values, inst.gamma, inst.epsilon, inst.limits);
            if (v.is_hit()) hits[static_cast<size_t>(i)] = ScanHit{a, -1, std::move(v)};
        } catch (const std::exception& e) {
            skips[static_cast<size_t>(i)] = ScanSkip{a, std::string("error: ") + e.what()};
        }
    });

    for (long i = 0; i < n; i++) {
        if (hits[static_cast<size_t>(i)]) rep.hits.push_back(*hits[static_cast<size_t>(i)]);
        if (skips[static_cast<size_t>(i)]) rep.skipped.push_back(*skips[static_cast<size_t>(i)]);
    }
    finish_report(rep, inst.height_bound);
    return rep;
}

std::string to_string(Periodicity p) {
    switch (p) {
        case Periodicity::PERIODIC: return "PERIODIC";
        case Periodicity::NOT_PERIODIC: return "NOT_PERIODIC";
        case Periodicity::UNDECIDED: return "UNDECIDED";
    }
    return "?";
}

PeriodicityReport check_zero_periodicity(const Poly& f, long step_cap) {
    if (step_cap < 1) throw invalid_input("step_cap must be >= 1");
    if (f.is_zero() || f.degree() < 1)
        throw invalid_input("periodicity check needs a nonconstant polynomial");
    PeriodicityReport rep;
    double threshold = 2.0 * static_cast<double>(f.degree()) *
                           (poly_heights(f).first.value + 1.0) + 10.0;
    std::set<mpq_class> seen;
    mpq_class x = 0;
    double prev_h = 0.0;
    int growth = 0;
    for (long step = 1; step <= step_cap; step++) {
        x = f.eval(x);
        rep.orbit.push_back(x);
        if (x == 0) {
            rep.verdict = Periodicity::PERIODIC;
            rep.detail = "orbit returns to 0 after " + std::to_string(step) + " steps";
            return rep;
        }
        if (seen.count(x)) {
            rep.verdict = Periodicity::NOT_PERIODIC;
            rep.detail = "orbit enters a cycle that avoids 0 (value " +
                         rational_to_string(x) + " repeats)";
            return rep;
        }
        seen.insert(x);
        double h = height(x).value;
        if (h > threshold && h > prev_h)
            growth++;
        else
            growth = 0;
        prev_h = h;
        if (growth >= 3) {
            rep.verdict = Periodicity::NOT_PERIODIC;
            rep.detail = "height escape: h grew for 3 consecutive steps above " +
                         std::to_string(threshold);
            return rep;
        }
    }
    rep.verdict = Periodicity::UNDECIDED;
    rep.detail = "no decision within " + std::to_string(step_cap) + " steps";
    return rep;
}

ScanReport scan_corollary13(const Poly& f, const GroupSpec& G, const mpq_class& eps,
                            long window, long m_max, const mpq_class& H,
                            bool override_hypotheses, int workers,
                            const EnumLimits& limits, double iterate_height_cap) {
    if (window < 1) throw invalid_input("window must be >= 1");
    if (m_max < 0) throw invalid_input("m_max must be >= 0");

    ScanReport rep;
    rep.hypotheses.items.push_back(distinct_roots_item(f, "distinct_roots"));
    {
        PeriodicityReport pr = check_zero_periodicity(f, std::max<long>(64, m_max + window + 8));
        rep.hypotheses.items.push_back({"zero_not_periodic",
                                        pr.verdict == Periodicity::NOT_PERIODIC,
                                        to_string(pr.verdict) + ": " + pr.detail});
    }
    gate_hypotheses(rep.hypotheses, override_hypotheses);

    std::vector<mpq_class> candidates = scan_candidates(H, limits);
    long n = static_cast<long>(candidates.size());
    std::vector<std::vector<ScanHit>> hits(static_cast<size_t>(n));
    std::vector<std::optional<ScanSkip>> skips(static_cast<size_t>(n));

    parallel_indices(n, workers, [&](long i) {
        const mpq_class& a = candidates[static_cast<size_t>(i)];
        try {
            std::vector<mpq_class> orbit =
                evaluate_and_iterate(f, a, m_max + window, iterate_height_cap);
            for (long m = 0; m <= m_max; m++) {
                std::vector<mpq_class> values(orbit.begin() + m, orbit.begin() + m + window);
                bool zero = false;
                for (const auto& v : values)
                    if (v == 0) zero = true;
                if (zero) {
                    if (!skips[static_cast<size_t>(i)])
                        skips[static_cast<size_t>(i)] =
                            ScanSkip{a, "orbit window at m = " + std::to_string(m) +
                                            " contains 0"};
                    continue;
                }
                Verdict v = dependence_mod_gamma_eps(values, G, eps, limits);
                if (v.is_hit())
                    hits[static_cast<size_t>(i)].push_back(ScanHit{a, m, std::move(v)});
            }
        } catch (const resource_error& e) {
            skips[static_cast<size_t>(i)] = ScanSkip{a, std::string("skipped: ") + e.what()};
        } catch (const std::exception& e) {
            skips[static_cast<size_t>(i)] = ScanSkip{a, std::string("error: ") + e.what()};
        }
    });

    for (long i = 0; i < n; i++) {
        for (auto& h : hits[static_cast<size_t>(i)]) rep.hits.push_back(std::move(h));
        if (skips[static_cast<size_t>(i)]) rep.skipped.push_back(*skips[static_cast<size_t>(i)]);
    }
    finish_report(rep, H);
    return rep;
}

ScanReport scan_theorem15(const Poly& f1, const Poly& f2, const GroupSpec& G,
                          const mpq_class& eps, const mpq_class& H,
                          bool override_hypotheses, int workers, const EnumLimits& limits) {
    ScanReport rep;
    rep.hypotheses.items.push_back(
        {"degree_f1", f1.degree() >= 2, "deg = " + std::to_string(f1.degree())});
    rep.hypotheses.items.push_back(
        {"degree_f2", f2.degree() >= 2, "deg = " + std::to_string(f2.degree())});
    rep.hypotheses.items.push_back(distinct_roots_item(f1, "distinct_roots_f1"));
    rep.hypotheses.items.push_back(distinct_roots_item(f2, "distinct_roots_f2"));
    {
        std::optional<LfWitness> lf =
            (f1.degree() >= 1 && f2.degree() >= 1) ? lf_generation_check(f1, f2) : std::nullopt;
        rep.hypotheses.items.push_back(
            {"no_linear_fractional_power", !lf.has_value(),
             lf ? "f1^" + std::to_string(lf->k[0]) + " f2^" + std::to_string(lf->k[1]) +
                      " = c * (" + lf->ell_text() + ")^" + std::to_string(lf->t)
                : "no combination collapses to a linear fractional power"});
    }
    gate_hypotheses(rep.hypotheses, override_hypotheses);

    std::vector<mpq_class> candidates = scan_candidates(H, limits);
    long n = static_cast<long>(candidates.size());
    std::vector<std::optional<ScanHit>> hits(static_cast<size_t>(n));
    std::vector<std::optional<ScanSkip>> skips(static_cast<size_t>(n));

    parallel_indices(n, workers, [&](long i) {
        const mpq_class& a = candidates[static_cast<size_t>(i)];
        try {
            mpq_class v1 = f1.eval(a), v2 = f2.eval(a);
            if (v1 == 0 || v2 == 0) {
                skips[static_cast<size_t>(i)] =
                    ScanSkip{a, std::string(v1 == 0 ? "f1" : "f2") + "(alpha) = 0"};
                return;
            }
            Verdict v = dependence_mod_gamma_eps({v1, v2}, G, eps, limits);
            if (v.is_hit()) hits[static_cast<size_t>(i)] = ScanHit{a, -1, std::move(v)};
        } catch (const std::exception& e) {
            skips[static_cast<size_t>(i)] = ScanSkip{a, std::string("error: ") + e.what()};
        }
    });

    for (long i = 0; i < n; i++) {
        if (hits[static_cast<size_t>(i)]) rep.hits.push_back(*hits[static_cast<size_t>(i)]);
        if (skips[static_cast<size_t>(i)]) rep.skipped.push_back(*skips[static_cast<size_t>(i)]);
    }
    finish_report(rep, H);
    return rep;
}

} // namespace muldep
