#include "muldep/group.hpp"

#include <algorithm>
#include <set>

namespace muldep {

GroupSpec GroupSpec::from_rationals(const std::vector<mpq_class>& gens) {
    if (gens.empty()) throw invalid_input("a group needs at least one generator");
    GroupSpec g;
    std::set<mpz_class> supp;
    for (const auto& q : gens) {
        if (q == 0) throw invalid_input("zero cannot generate a subgroup of Q*");
        g.generators.push_back(factor(q));
        for (const auto& [p, e] : g.generators.back().exponents) {
            (void)e;
            supp.insert(p);
        }
        g.max_gen_abs = std::max(g.max_gen_abs,
                                 std::max(mpz_class(abs(q.get_num())), mpz_class(q.get_den())));
    }
    g.support.assign(supp.begin(), supp.end());
    g.exponent_matrix = IntMat(static_cast<long>(g.support.size()),
                               static_cast<long>(g.generators.size()));
    for (long c = 0; c < g.exponent_matrix.cols; c++) {
        g.sign_row.push_back(g.generators[static_cast<size_t>(c)].sign);
        for (long r = 0; r < g.exponent_matrix.rows; r++)
            g.exponent_matrix.at(r, c) =
                g.generators[static_cast<size_t>(c)].valuation(g.support[static_cast<size_t>(r)]);
    }
    return g;
}

mpz_class GroupSpec::superset_radius(const mpq_class& eps) const {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), max_gen_abs.get_mpz_t(),
               static_cast<unsigned long>(rank()));
    return height_ball_radius_scaled(eps, scale);
}

} // namespace muldep
