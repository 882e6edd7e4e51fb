#include "muldep/search.hpp"

#include <set>

namespace muldep {

PlaceSet s_gamma(const GroupSpec& G) {
    return PlaceSet{G.support};
}

PlaceBreakdown s_f_gamma_eps(const InstanceSpec& inst) {
    PlaceBreakdown out;
    std::set<mpz_class> total(inst.gamma.support.begin(), inst.gamma.support.end());
    out.gamma_primes = inst.gamma.support;

    std::set<mpz_class> bad;
    for (const auto& f : inst.polys) {
        if (f.is_zero()) throw invalid_input("zero polynomial in instance");
        for (const auto& p : bad_reduction_primes(f)) bad.insert(p);
    }
    out.bad_reduction.assign(bad.begin(), bad.end());
    total.insert(bad.begin(), bad.end());

    std::set<mpz_class> res;
    for (size_t i = 0; i < inst.polys.size(); i++) {
        for (size_t j = i + 1; j < inst.polys.size(); j++) {
            mpq_class r = resultant(inst.polys[i], inst.polys[j]);
            if (r == 0)
                throw invalid_input("not pairwise coprime: polynomials " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) + " share a root");
            for (const auto& [p, e] : factor_integer(r.get_num())) {
                (void)e;
                res.insert(p);
            }
            for (const auto& [p, e] : factor_integer(r.get_den())) {
                (void)e;
                res.insert(p);
            }
        }
    }
    out.resultant_primes.assign(res.begin(), res.end());
    total.insert(res.begin(), res.end());

    std::set<mpz_class> etas;
    for (const auto& eta : enumerate_max_abs(inst.gamma.superset_radius(inst.epsilon),
                                             inst.limits)) {
        if (eta == 1 || eta == -1) continue;
        for (const auto& [p, e] : factor(eta).exponents) {
            (void)e;
            etas.insert(p);
        }
    }
    out.eta_primes.assign(etas.begin(), etas.end());
    total.insert(etas.begin(), etas.end());

    out.total = PlaceSet{{total.begin(), total.end()}};
    return out;
}

DiophantineBasis diophantine_exponent_basis(const std::vector<long>& degrees,
                                            const std::vector<Poly>* polys) {
    for (long d : degrees)
        if (d <= 0) throw invalid_input("degrees must be positive");
    IntMat M(1, static_cast<long>(degrees.size()));
    for (size_t i = 0; i < degrees.size(); i++) M.at(0, static_cast<long>(i)) = degrees[i];
    DiophantineBasis out;
    for (const auto& v : integer_kernel(M)) {
        std::vector<long> row;
        for (const auto& z : v) row.push_back(z.get_si());
        out.basis.push_back(std::move(row));
    }
    if (polys && !out.basis.empty()) {
        if (polys->size() != degrees.size())
            throw invalid_input("polynomial list does not match the degree list");
        Poly num = Poly::constant(1), den = Poly::constant(1);
        for (size_t i = 0; i < polys->size(); i++) {
            long t = out.basis[0][i];
            if (t > 0) num = num * (*polys)[i].pow(t);
            if (t < 0) den = den * (*polys)[i].pow(-t);
        }
        out.F = RationalFunction{num, den};
    }
    return out;
}

} // namespace muldep
