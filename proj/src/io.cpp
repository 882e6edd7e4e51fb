#include "muldep/io.hpp"

#include <sstream>

namespace muldep {

namespace {

ojson primes_json(const std::vector<mpz_class>& ps) {
    ojson a = ojson::array();
    for (const auto& p : ps) a.push_back(p.get_str());
    return a;
}

ojson longs_json(const std::vector<long>& v) {
    ojson a = ojson::array();
    for (long x : v) a.push_back(x);
    return a;
}

} // namespace

ojson to_json(const mpq_class& x) { return rational_to_string(x); }

ojson to_json(const Poly& f) {
    ojson a = ojson::array();
    for (const auto& c : f.coeffs()) a.push_back(rational_to_string(c));
    return a;
}

ojson to_json(const PlaceSet& S) { return primes_json(S.finite_primes); }

ojson to_json(const HeightValue& h) {
    return ojson{{"value", h.value}, {"exact", h.exact}, {"max_abs", h.max_abs.get_str()}};
}

ojson to_json(const GroupSpec& G) {
    ojson a = ojson::array();
    for (const auto& g : G.generators) a.push_back(rational_to_string(g.value()));
    return a;
}

ojson to_json(const RelationWitness& w) {
    ojson j;
    j["k"] = longs_json(w.k);
    j["eta"] = w.eta ? ojson(rational_to_string(*w.eta)) : ojson(nullptr);
    j["m"] = w.m ? ojson(*w.m) : ojson(nullptr);
    j["gamma_exponents"] = w.gamma_exponents ? longs_json(*w.gamma_exponents) : ojson(nullptr);
    return j;
}

ojson to_json(const Verdict& v) {
    ojson j;
    j["verdict"] = to_string(v.kind);
    j["witness"] = v.witness ? to_json(*v.witness) : ojson(nullptr);
    j["reason"] = v.reason;
    return j;
}

ojson to_json(const HypothesisReport& hr) {
    ojson items = ojson::array();
    for (const auto& i : hr.items)
        items.push_back(ojson{{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
    return ojson{{"all_pass", hr.all_pass()}, {"items", items}};
}

ojson to_json(const ScanReport& rep) {
    ojson hits = ojson::array();
    for (const auto& h : rep.hits) {
        ojson e;
        e["alpha"] = rational_to_string(h.alpha);
        e["height"] = h.alpha == 0 ? 0.0 : height(h.alpha).value;
        if (h.iterate_offset >= 0) e["m"] = h.iterate_offset;
        e["verdict"] = to_json(h.verdict);
        hits.push_back(std::move(e));
    }
    ojson skipped = ojson::array();
    for (const auto& s : rep.skipped)
        skipped.push_back(ojson{{"alpha", rational_to_string(s.alpha)}, {"reason", s.reason}});
    ojson j;
    j["version"] = kVersion;
    j["hypotheses"] = to_json(rep.hypotheses);
    j["hit_count"] = rep.hits.size();
    j["hits"] = std::move(hits);
    j["skipped"] = std::move(skipped);
    j["shell_counts"] = longs_json(rep.shell_counts);
    j["stabilized"] = rep.stabilized;
    return j;
}

std::string scan_report_csv(const ScanReport& rep) {
    std::ostringstream out;
    out << "alpha,height,offset,verdict,k,eta,m,gamma_exponents\n";
    auto join = [](const std::vector<long>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); i++) {
            if (i) s += " ";
            s += std::to_string(v[i]);
        }
        return s;
    };
    for (const auto& h : rep.hits) {
        out << rational_to_string(h.alpha) << ","
            << (h.alpha == 0 ? 0.0 : height(h.alpha).value) << ","
            << (h.iterate_offset >= 0 ? std::to_string(h.iterate_offset) : "") << ","
            << to_string(h.verdict.kind) << ",";
        if (h.verdict.witness) {
            const RelationWitness& w = *h.verdict.witness;
            out << join(w.k) << ",";
            out << (w.eta ? rational_to_string(*w.eta) : "") << ",";
            out << (w.m ? std::to_string(*w.m) : "") << ",";
            out << (w.gamma_exponents ? join(*w.gamma_exponents) : "");
        } else {
            out << ",,,";
        }
        out << "\n";
    }
    return out.str();
}

ojson to_json(const HyperellipticReport& rep) {
    ojson sols = ojson::array();
    for (const auto& s : rep.solutions)
        sols.push_back(ojson{{"x", rational_to_string(s.x)},
                             {"y", rational_to_string(s.y)},
                             {"m", s.m}});
    ojson skipped = ojson::array();
    for (const auto& s : rep.skipped)
        skipped.push_back(ojson{{"alpha", rational_to_string(s.alpha)}, {"reason", s.reason}});
    return ojson{{"version", kVersion},
                 {"solution_count", rep.solutions.size()},
                 {"solutions", sols},
                 {"skipped", skipped}};
}

ojson to_json(const BoundReport& rep) {
    ojson j;
    j["version"] = kVersion;
    j["inputs"] = ojson{{"n", rep.inputs.n},     {"s", rep.inputs.s},
                        {"d", rep.inputs.d},     {"h_f", rep.inputs.h_f},
                        {"abs_disc", rep.inputs.abs_disc},
                        {"P_S", rep.inputs.P_S}, {"N_S_b", rep.inputs.N_S_b}};
    j["precision_bits"] = rep.prec_bits;
    j["log_C0"] = rep.log_C0.str();
    j["log_C1"] = rep.log_C1.str();
    j["log_C2"] = rep.log_C2.str();
    j["log_C3"] = rep.log_C3.str();
    j["log_C4"] = rep.log_C4.str();
    j["log_C5"] = rep.log_C5.str();
    j["log_C6"] = rep.log_C6.str();
    j["log_C"] = rep.log_C.str();
    j["log_m_threshold"] = rep.log_m_threshold.str();
    j["log_m_bound"] = rep.log_m_bound.str();
    j["m_bound"] = rep.m_bound_plain ? ojson(*rep.m_bound_plain) : ojson(nullptr);
    j["overflow"] = rep.overflow;
    return j;
}

ojson to_json(const ValidateReport& rep) {
    ojson j;
    j["version"] = kVersion;
    j["search"] = to_json(rep.search);
    j["bound"] = to_json(rep.bound);
    j["all_below_bound"] = rep.all_below;
    j["log_margin"] = rep.log_margin;
    return j;
}

ojson to_json(const PlaceBreakdown& b) {
    return ojson{{"version", kVersion},
                 {"finite_primes", to_json(b.total)},
                 {"includes_infinity", true},
                 {"stages",
                  ojson{{"gamma_support", primes_json(b.gamma_primes)},
                        {"bad_reduction", primes_json(b.bad_reduction)},
                        {"resultant_primes", primes_json(b.resultant_primes)},
                        {"eta_primes", primes_json(b.eta_primes)}}}};
}

ojson to_json(const PeriodicityReport& rep) {
    ojson orbit = ojson::array();
    for (const auto& x : rep.orbit) orbit.push_back(rational_to_string(x));
    return ojson{{"version", kVersion},
                 {"verdict", to_string(rep.verdict)},
                 {"detail", rep.detail},
                 {"orbit", orbit}};
}

ojson to_json(const LfWitness& w) {
    ojson j;
    j["k"] = ojson::array({w.k[0], w.k[1]});
    j["constant_case"] = w.constant_case;
    j["ell"] = w.ell_text();
    j["t"] = w.t;
    j["scale"] = rational_to_string(w.scale);
    return j;
}

ojson to_json(const CoprimeBasis& cb) {
    ojson basis = ojson::array();
    for (const auto& b : cb.basis) basis.push_back(to_json(b));
    ojson rows = ojson::array();
    for (const auto& r : cb.exponents) rows.push_back(longs_json(r));
    ojson contents = ojson::array();
    for (const auto& c : cb.contents) contents.push_back(rational_to_string(c));
    return ojson{{"basis", basis}, {"exponents", rows}, {"contents", contents}};
}

ojson to_json(const SquarefreeDecomposition& d) {
    ojson parts = ojson::array();
    for (const auto& [p, m] : d.parts)
        parts.push_back(ojson{{"part", to_json(p)}, {"multiplicity", m}});
    return ojson{{"unit", rational_to_string(d.unit)},
                 {"parts", parts},
                 {"radical", to_json(d.radical())},
                 {"distinct_roots", d.distinct_root_count()}};
}

ojson to_json(const DiophantineBasis& d) {
    ojson basis = ojson::array();
    for (const auto& r : d.basis) basis.push_back(longs_json(r));
    ojson j;
    j["basis"] = basis;
    if (d.F) {
        j["F_num"] = to_json(d.F->num);
        j["F_den"] = to_json(d.F->den);
    }
    return j;
}

Poly poly_from_json(const ojson& j) {
    if (!j.is_array()) throw invalid_input("polynomial must be a JSON array of rationals");
    std::vector<std::string> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(c.get<std::string>());
        else if (c.is_number_integer())
            coeffs.push_back(std::to_string(c.get<long>()));
        else
            throw invalid_input("polynomial coefficients must be rational strings");
    }
    return Poly::from_strings(coeffs);
}

mpq_class rational_from_json(const ojson& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    throw invalid_input("expected a rational string");
}

GroupSpec group_from_json(const ojson& j) {
    if (!j.is_array()) throw invalid_input("group generators must be a JSON array");
    std::vector<mpq_class> gens;
    for (const auto& g : j) gens.push_back(rational_from_json(g));
    return GroupSpec::from_rationals(gens);
}

} // namespace muldep
