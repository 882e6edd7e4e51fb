// Command-line front end: every operation as a subcommand with JSON output.
// Exit codes: 0 ok, 2 invalid input, 3 hypothesis failure without override,
// 4 resource cap exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "muldep/io.hpp"

using namespace muldep;

namespace {

long default_prec_bits() {
    if (const char* env = std::getenv("MULDEP_PREC_BITS")) {
        long v = std::atol(env);
        if (v >= 16 && v <= 1 << 20) return v;
    }
    return 128;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Poly parse_poly_arg(const std::string& s) {
    return Poly::from_strings(split_commas(s));
}

std::vector<mpq_class> parse_rationals_arg(const std::string& s) {
    std::vector<mpq_class> out;
    for (const auto& t : split_commas(s)) out.push_back(parse_rational(t));
    return out;
}

PlaceSet parse_places_arg(const std::string& s) {
    if (s.empty()) return PlaceSet::infinite_only();
    std::vector<mpz_class> ps;
    for (const auto& t : split_commas(s)) ps.emplace_back(t);
    return PlaceSet::of(ps);
}

void emit(const ojson& j, const std::string& format, const ScanReport* csv_source = nullptr) {
    if (format == "csv" && csv_source) {
        std::cout << scan_report_csv(*csv_source);
        return;
    }
    std::cout << j.dump(2) << "\n";
}

// Flat key/value config files mirroring the command flags; unknown keys are
// rejected so typos fail loudly.
ojson load_config(const std::string& path, const std::vector<std::string>& allowed) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open config file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw invalid_input(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw invalid_input("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw invalid_input("unknown config field: " + key);
    }
    return j;
}

struct ScanArgs {
    std::string config;
    std::vector<std::string> polys;
    std::string gamma = "1";
    std::string eps = "0";
    std::string H = "1";
    bool override_hypotheses = false;
    int workers = 0;
    std::string format = "json";
    unsigned long max_enum = 10'000'000;

    void apply_config(const std::vector<std::string>& extra_allowed = {}) {
        if (config.empty()) return;
        std::vector<std::string> allowed = {"polys", "gamma",  "epsilon", "H",
                                            "override", "workers", "format", "max_enum"};
        allowed.insert(allowed.end(), extra_allowed.begin(), extra_allowed.end());
        ojson j = load_config(config, allowed);
        if (j.contains("polys")) {
            polys.clear();
            for (const auto& p : j["polys"]) polys.push_back(p.dump());
        }
        if (j.contains("gamma")) {
            std::string g;
            for (const auto& x : j["gamma"]) {
                if (!g.empty()) g += ",";
                g += x.is_string() ? x.get<std::string>() : x.dump();
            }
            gamma = g;
        }
        if (j.contains("epsilon")) eps = j["epsilon"].is_string() ? j["epsilon"].get<std::string>() : j["epsilon"].dump();
        if (j.contains("H")) H = j["H"].is_string() ? j["H"].get<std::string>() : j["H"].dump();
        if (j.contains("override")) override_hypotheses = j["override"].get<bool>();
        if (j.contains("workers")) workers = j["workers"].get<int>();
        if (j.contains("format")) format = j["format"].get<std::string>();
        if (j.contains("max_enum")) max_enum = j["max_enum"].get<unsigned long>();
    }

    Poly poly_at(size_t i) const {
        const std::string& s = polys.at(i);
        if (!s.empty() && s[0] == '[') {
            return poly_from_json(ojson::parse(s));
        }
        return parse_poly_arg(s);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for multiplicative dependence of rational values modulo approximate division groups"};
    app.require_subcommand(1);
    long prec = default_prec_bits();

    // ---- height ----
    auto* c_height = app.add_subcommand("height", "Absolute logarithmic Weil height h(x) of a rational");
    std::string height_x;
    c_height->add_option("--x", height_x, "rational, e.g. 2/3")->required();
    c_height->callback([&] {
        HeightValue h = height(parse_rational(height_x));
        emit(ojson{{"version", kVersion}, {"x", height_x}, {"height", to_json(h)}}, "json");
    });

    // ---- snorm ----
    auto* c_snorm = app.add_subcommand("snorm", "S-norm N_S(b) = prod_{v in S} |b|_v");
    std::string snorm_b, snorm_s;
    c_snorm->add_option("--b", snorm_b)->required();
    c_snorm->add_option("--primes", snorm_s, "finite primes of S, comma separated (infinity implicit)");
    c_snorm->callback([&] {
        PlaceSet S = parse_places_arg(snorm_s);
        mpq_class v = s_norm(factor(parse_rational(snorm_b)), S);
        emit(ojson{{"version", kVersion},
                   {"s_norm", rational_to_string(v)},
                   {"P_S", p_s_q_s(S).first.get_str()},
                   {"Q_S", p_s_q_s(S).second.get_str()}},
             "json");
    });

    // ---- enum ----
    auto* c_enum = app.add_subcommand("enum", "Enumerate A(Q,H), the rationals of height at most H");
    std::string enum_H = "0";
    unsigned long enum_cap = 10'000'000;
    c_enum->add_option("--H", enum_H)->required();
    c_enum->add_option("--max-elements", enum_cap);
    c_enum->callback([&] {
        EnumLimits lim;
        lim.max_elements = enum_cap;
        std::vector<mpq_class> v = enumerate_bounded_height(parse_rational(enum_H), lim);
        ojson arr = ojson::array();
        for (const auto& x : v) arr.push_back(rational_to_string(x));
        emit(ojson{{"version", kVersion}, {"count", v.size()}, {"elements", arr}}, "json");
    });

    // ---- polyinfo ----
    auto* c_poly = app.add_subcommand("polyinfo", "Heights, squarefree structure, discriminant and bad-reduction primes of f");
    std::string poly_f;
    c_poly->add_option("--f", poly_f, "descending coefficients, e.g. 1,0,-4")->required();
    c_poly->callback([&] {
        Poly f = parse_poly_arg(poly_f);
        ojson j;
        j["version"] = kVersion;
        j["f"] = to_json(f);
        j["text"] = f.str();
        j["degree"] = f.degree();
        auto [h, hh] = poly_heights(f);
        j["h"] = to_json(h);
        j["h_hom"] = to_json(hh);
        if (f.degree() >= 1) j["squarefree"] = to_json(squarefree_decompose(f));
        if (f.degree() >= 2) j["discriminant"] = rational_to_string(discriminant(f));
        ojson bad = ojson::array();
        for (const auto& p : bad_reduction_primes(f)) bad.push_back(p.get_str());
        j["bad_reduction_primes"] = bad;
        emit(j, "json");
    });

    // ---- deptest ----
    auto* c_dep = app.add_subcommand("deptest", "Multiplicative dependence: is alpha_1^k1 ... alpha_n^kn = 1 solvable?");
    std::string dep_alphas;
    c_dep->add_option("--alphas", dep_alphas, "comma separated rationals")->required();
    c_dep->callback([&] {
        std::vector<mpq_class> alphas = parse_rationals_arg(dep_alphas);
        std::optional<RelationWitness> w = dependence_absolute(alphas);
        ojson j{{"version", kVersion}, {"dependent", w.has_value()}};
        if (w) {
            j["k"] = to_json(*w)["k"];
        }
        emit(j, "json");
    });

    // ---- gmember ----
    auto* c_gm = app.add_subcommand("gmember", "Exact membership of x in the subgroup generated by the given rationals");
    std::string gm_x, gm_gamma;
    c_gm->add_option("--x", gm_x)->required();
    c_gm->add_option("--gamma", gm_gamma, "generators, comma separated")->required();
    c_gm->callback([&] {
        GroupSpec G = GroupSpec::from_rationals(parse_rationals_arg(gm_gamma));
        std::optional<std::vector<long>> c = gamma_membership(parse_rational(gm_x), G);
        ojson j{{"version", kVersion}, {"member", c.has_value()}};
        if (c) {
            ojson arr = ojson::array();
            for (long e : *c) arr.push_back(e);
            j["exponents"] = arr;
        }
        emit(j, "json");
    });

    // ---- gdivmember ----
    auto* c_gd = app.add_subcommand("gdivmember", "Membership of x in the division group (some power of x lands in Gamma)");
    std::string gd_x, gd_gamma;
    c_gd->add_option("--x", gd_x)->required();
    c_gd->add_option("--gamma", gd_gamma)->required();
    c_gd->callback([&] {
        GroupSpec G = GroupSpec::from_rationals(parse_rationals_arg(gd_gamma));
        emit(to_json(gamma_div_membership(parse_rational(gd_x), G)), "json");
    });

    // ---- epsmember ----
    auto* c_em = app.add_subcommand("epsmember", "Sandwich test for membership in the approximate division group Gamma^div_eps");
    std::string em_x, em_gamma, em_eps = "0";
    c_em->add_option("--x", em_x)->required();
    c_em->add_option("--gamma", em_gamma)->required();
    c_em->add_option("--eps", em_eps);
    c_em->callback([&] {
        GroupSpec G = GroupSpec::from_rationals(parse_rationals_arg(em_gamma));
        emit(to_json(eps_membership_sandwich(parse_rational(em_x), G, parse_rational(em_eps))),
             "json");
    });

    // ---- depgamma ----
    auto* c_dg = app.add_subcommand("depgamma", "Dependence of values modulo the division group; with --eps, modulo Gamma^div_eps");
    std::string dg_alphas, dg_gamma, dg_eps;
    c_dg->add_option("--alphas", dg_alphas)->required();
    c_dg->add_option("--gamma", dg_gamma)->required();
    c_dg->add_option("--eps", dg_eps, "height budget of the eta factor");
    c_dg->callback([&] {
        std::vector<mpq_class> alphas = parse_rationals_arg(dg_alphas);
        GroupSpec G = GroupSpec::from_rationals(parse_rationals_arg(dg_gamma));
        if (dg_eps.empty()) {
            std::optional<RelationWitness> w = dependence_mod_gamma_div(alphas, G);
            ojson j{{"version", kVersion}, {"dependent", w.has_value()}};
            if (w) j["witness"] = to_json(*w);
            emit(j, "json");
        } else {
            emit(to_json(dependence_mod_gamma_eps(alphas, G, parse_rational(dg_eps))), "json");
        }
    });

    // ---- rfindep ----
    auto* c_rf = app.add_subcommand("rfindep", "Multiplicative independence of rational functions modulo Gamma");
    std::vector<std::string> rf_fs;
    std::string rf_gamma;
    c_rf->add_option("--f", rf_fs, "num;den with comma-separated coefficients, repeatable")->required();
    c_rf->add_option("--gamma", rf_gamma)->required();
    c_rf->callback([&] {
        std::vector<RationalFunction> fs;
        for (const auto& s : rf_fs) {
            auto semi = s.find(';');
            Poly num = parse_poly_arg(semi == std::string::npos ? s : s.substr(0, semi));
            Poly den = semi == std::string::npos ? Poly::constant(1)
                                                 : parse_poly_arg(s.substr(semi + 1));
            fs.push_back(RationalFunction{num, den});
        }
        GroupSpec G = GroupSpec::from_rationals(parse_rationals_arg(rf_gamma));
        std::optional<RelationWitness> w = rf_independence_mod_gamma(fs, G);
        ojson j{{"version", kVersion}, {"independent", !w.has_value()}};
        if (w) j["witness"] = to_json(*w);
        emit(j, "json");
    });

    // ---- lfcheck ----
    auto* c_lf = app.add_subcommand("lfcheck", "Can f1, f2 multiplicatively generate a power of a linear fractional function?");
    std::string lf_f1, lf_f2;
    c_lf->add_option("--f1", lf_f1)->required();
    c_lf->add_option("--f2", lf_f2)->required();
    c_lf->callback([&] {
        std::optional<LfWitness> w = lf_generation_check(parse_poly_arg(lf_f1), parse_poly_arg(lf_f2));
        ojson j{{"version", kVersion}, {"generates", w.has_value()}};
        if (w) j["witness"] = to_json(*w);
        emit(j, "json");
    });

    // ---- stbound ----
    auto* c_st = app.add_subcommand("stbound", "Constants and exponent ceiling 2C log C of the generalized Schinzel-Tijdeman bound");
    BoundInputs bi;
    double st_hf = 0.0, st_disc = 1.0, st_ps = 1.0, st_nsb = 1.0;
    c_st->add_option("--n", bi.n)->required();
    c_st->add_option("--s", bi.s)->required();
    c_st->add_option("--d", bi.d);
    c_st->add_option("--hf", st_hf);
    c_st->add_option("--disc", st_disc);
    c_st->add_option("--ps", st_ps);
    c_st->add_option("--nsb", st_nsb);
    long st_prec = 0;
    c_st->add_option("--prec", st_prec, "mantissa bits (default from MULDEP_PREC_BITS or 128)");
    c_st->callback([&] {
        bi.h_f = st_hf;
        bi.abs_disc = st_disc;
        bi.P_S = st_ps;
        bi.N_S_b = st_nsb;
        emit(to_json(compute_constants(bi, st_prec > 0 ? st_prec : prec)), "json");
    });

    // ---- hsearch ----
    auto* c_hs = app.add_subcommand("hsearch", "Solve f(x) = b y^m over S-integers with y not an S-unit, h(x) <= H, 3 <= m <= m_max");
    std::string hs_f, hs_b = "1", hs_primes, hs_H = "1";
    long hs_mmax = 20;
    int hs_workers = 0;
    c_hs->add_option("--f", hs_f)->required();
    c_hs->add_option("--b", hs_b);
    c_hs->add_option("--primes", hs_primes);
    c_hs->add_option("--H", hs_H);
    c_hs->add_option("--mmax", hs_mmax);
    c_hs->add_option("--workers", hs_workers);
    c_hs->callback([&] {
        emit(to_json(hyperelliptic_search(parse_poly_arg(hs_f), parse_rational(hs_b),
                                          parse_places_arg(hs_primes), parse_rational(hs_H),
                                          hs_mmax, {}, hs_workers)),
             "json");
    });

    // ---- validate ----
    auto* c_val = app.add_subcommand("validate", "Run hsearch and check every exponent against the Schinzel-Tijdeman ceiling");
    std::string val_f, val_b = "1", val_primes, val_H = "1";
    long val_mmax = 20;
    int val_workers = 0;
    c_val->add_option("--f", val_f)->required();
    c_val->add_option("--b", val_b);
    c_val->add_option("--primes", val_primes);
    c_val->add_option("--H", val_H);
    c_val->add_option("--mmax", val_mmax);
    c_val->add_option("--workers", val_workers);
    c_val->callback([&] {
        emit(to_json(validate_bound(parse_poly_arg(val_f), parse_rational(val_b),
                                    parse_places_arg(val_primes), parse_rational(val_H),
                                    val_mmax, {}, val_workers, prec)),
             "json");
    });

    // ---- sets ----
    auto* c_sets = app.add_subcommand("sets", "Place sets: S_Gamma and the enlarged S_{f,Gamma,eps} with per-stage breakdown");
    ScanArgs sets_args;
    c_sets->add_option("--config", sets_args.config);
    c_sets->add_option("--polys", sets_args.polys, "one polynomial per flag, comma-separated coefficients");
    c_sets->add_option("--gamma", sets_args.gamma);
    c_sets->add_option("--eps", sets_args.eps);
    c_sets->callback([&] {
        sets_args.apply_config();
        InstanceSpec inst;
        for (size_t i = 0; i < sets_args.polys.size(); i++) inst.polys.push_back(sets_args.poly_at(i));
        inst.gamma = GroupSpec::from_rationals(parse_rationals_arg(sets_args.gamma));
        inst.epsilon = parse_rational(sets_args.eps);
        ojson j = to_json(s_f_gamma_eps(inst));
        j["S_gamma"] = to_json(s_gamma(inst.gamma));
        emit(j, "json");
    });

    // ---- scan12 ----
    auto* c12 = app.add_subcommand("scan12", "Scan alpha with f_1(alpha),...,f_n(alpha) multiplicatively dependent modulo Gamma^div_eps");
    ScanArgs a12;
    c12->add_option("--config", a12.config);
    c12->add_option("--polys", a12.polys);
    c12->add_option("--gamma", a12.gamma);
    c12->add_option("--eps", a12.eps);
    c12->add_option("--H", a12.H);
    c12->add_flag("--override", a12.override_hypotheses);
    c12->add_option("--workers", a12.workers);
    c12->add_option("--format", a12.format);
    c12->callback([&] {
        a12.apply_config();
        InstanceSpec inst;
        for (size_t i = 0; i < a12.polys.size(); i++) inst.polys.push_back(a12.poly_at(i));
        inst.gamma = GroupSpec::from_rationals(parse_rationals_arg(a12.gamma));
        inst.epsilon = parse_rational(a12.eps);
        inst.height_bound = parse_rational(a12.H);
        inst.override_hypotheses = a12.override_hypotheses;
        inst.workers = a12.workers;
        inst.limits.max_elements = a12.max_enum;
        ScanReport rep = scan_theorem12(inst);
        emit(to_json(rep), a12.format, &rep);
    });

    // ---- scan13 ----
    auto* c13 = app.add_subcommand("scan13", "Scan orbit windows f^(m+1)(alpha),...,f^(m+n)(alpha) for dependence modulo Gamma^div_eps");
    ScanArgs a13;
    long w13 = 2, mmax13 = 3;
    c13->add_option("--config", a13.config);
    c13->add_option("--poly", a13.polys);
    c13->add_option("--gamma", a13.gamma);
    c13->add_option("--eps", a13.eps);
    c13->add_option("--H", a13.H);
    c13->add_option("--window", w13);
    c13->add_option("--mmax", mmax13);
    c13->add_flag("--override", a13.override_hypotheses);
    c13->add_option("--workers", a13.workers);
    c13->add_option("--format", a13.format);
    c13->callback([&] {
        a13.apply_config({"window", "mmax", "poly"});
        if (a13.polys.empty()) throw invalid_input("scan13 needs --poly");
        ScanReport rep = scan_corollary13(a13.poly_at(0),
                                          GroupSpec::from_rationals(parse_rationals_arg(a13.gamma)),
                                          parse_rational(a13.eps), w13, mmax13,
                                          parse_rational(a13.H), a13.override_hypotheses,
                                          a13.workers);
        emit(to_json(rep), a13.format, &rep);
    });

    // ---- scan15 ----
    auto* c15 = app.add_subcommand("scan15", "Scan alpha with f_1(alpha), f_2(alpha) multiplicatively dependent modulo Gamma^div_eps (two-polynomial case)");
    ScanArgs a15;
    c15->add_option("--config", a15.config);
    c15->add_option("--polys", a15.polys);
    c15->add_option("--gamma", a15.gamma);
    c15->add_option("--eps", a15.eps);
    c15->add_option("--H", a15.H);
    c15->add_flag("--override", a15.override_hypotheses);
    c15->add_option("--workers", a15.workers);
    c15->add_option("--format", a15.format);
    c15->callback([&] {
        a15.apply_config();
        if (a15.polys.size() != 2) throw invalid_input("scan15 needs exactly two polynomials");
        ScanReport rep = scan_theorem15(a15.poly_at(0), a15.poly_at(1),
                                        GroupSpec::from_rationals(parse_rationals_arg(a15.gamma)),
                                        parse_rational(a15.eps), parse_rational(a15.H),
                                        a15.override_hypotheses, a15.workers);
        emit(to_json(rep), a15.format, &rep);
    });

    // ---- zeroperiod (support op for scan13 hypotheses) ----
    auto* c_zp = app.add_subcommand("zeroperiod", "Is 0 a periodic point of f? Cycle detection plus height escape");
    std::string zp_f;
    long zp_cap = 64;
    c_zp->add_option("--f", zp_f)->required();
    c_zp->add_option("--steps", zp_cap);
    c_zp->callback([&] { emit(to_json(check_zero_periodicity(parse_poly_arg(zp_f), zp_cap)), "json"); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

ojson error_json(const char* kind, const std::string& what) {
    return ojson{{"error", ojson{{"kind", kind}, {"message", what}}}};
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hypothesis_error& e) {
        std::cerr << error_json("hypothesis", e.what()).dump(2) << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << error_json("resource", e.what()).dump(2) << "\n";
        return 4;
    } catch (const invalid_input& e) {
        std::cerr << error_json("invalid_input", e.what()).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json("internal", e.what()).dump(2) << "\n";
        return 2;
    }
}
