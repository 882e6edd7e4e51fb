#include "muldep/relations.hpp"

#include <algorithm>
#include <set>

namespace muldep {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::IN: return "IN";
        case VerdictKind::OUT: return "OUT";
        case VerdictKind::BOUNDARY: return "BOUNDARY";
    }
    return "?";
}

mpq_class mpq_pow_si(const mpq_class& x, long e) {
    if (e == 0) return 1;
    mpq_class b = e > 0 ? x : mpq_class(1) / x;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class r = 1;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    r.canonicalize();
    return r;
}

namespace {

struct ExponentContext {
    std::vector<mpz_class> primes;  // sorted

    long index_of(const mpz_class& p) const {
        auto it = std::lower_bound(primes.begin(), primes.end(), p);
        if (it == primes.end() || *it != p) return -1;
        return static_cast<long>(it - primes.begin());
    }

    // nullopt when x has a prime outside this context.
    std::optional<IntVec> vector_of(const FactoredRational& x) const {
        IntVec v(primes.size(), mpz_class(0));
        for (const auto& [p, e] : x.exponents) {
            long i = index_of(p);
            if (i < 0) return std::nullopt;
            v[static_cast<size_t>(i)] = e;
        }
        return v;
    }
};

ExponentContext make_context(const std::vector<FactoredRational>& xs, const GroupSpec* G) {
    std::set<mpz_class> s;
    for (const auto& x : xs)
        for (const auto& [p, e] : x.exponents) {
            (void)e;
            s.insert(p);
        }
    if (G)
        for (const auto& p : G->support) s.insert(p);
    return ExponentContext{{s.begin(), s.end()}};
}

IntMat columns_matrix(const ExponentContext& ctx, const std::vector<FactoredRational>& xs) {
    IntMat M(static_cast<long>(ctx.primes.size()), static_cast<long>(xs.size()));
    for (long c = 0; c < M.cols; c++) {
        IntVec v = *ctx.vector_of(xs[static_cast<size_t>(c)]);
        for (long r = 0; r < M.rows; r++) M.at(r, c) = v[static_cast<size_t>(r)];
    }
    return M;
}

int sign_character(const std::vector<int>& signs, const IntVec& exps) {
    int s = 1;
    for (size_t i = 0; i < exps.size(); i++)
        if (signs[i] == -1 && mpz_odd_p(exps[i].get_mpz_t())) s = -s;
    return s;
}

int sign_pow(int sign, long e) { return (sign == -1 && (e % 2 != 0)) ? -1 : 1; }

std::vector<long> to_longs(const IntVec& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const auto& z : v) {
        if (!z.fits_slong_p()) throw resource_error("witness exponent exceeds machine range");
        out.push_back(z.get_si());
    }
    return out;
}

IntVec scaled_copy(const IntVec& v, long f) {
    IntVec out = v;
    for (auto& z : out) z *= f;
    return out;
}

// Sign normalization conventions (both keep the relation valid; flipping k
// inverts the relation value and, where present, eta and the gamma side):
IntVec normalize_first_positive(IntVec v) {
    for (const auto& z : v) {
        if (z == 0) continue;
        if (z < 0)
            for (auto& w : v) w = -w;
        break;
    }
    return v;
}

IntVec normalize_last_positive(IntVec v) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it == 0) continue;
        if (*it < 0)
            for (auto& w : v) w = -w;
        break;
    }
    return v;
}

bool last_nonzero_negative(const IntVec& v) {
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        if (*it != 0) return *it < 0;
    return false;
}

std::vector<FactoredRational> factor_all(const std::vector<mpq_class>& xs,
                                         const char* what) {
    std::vector<FactoredRational> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        if (x == 0) throw invalid_input(std::string("zero ") + what);
        out.push_back(factor(x));
    }
    return out;
}

} // namespace

std::optional<RelationWitness> dependence_absolute(const std::vector<mpq_class>& alphas) {
    auto fs = factor_all(alphas, "alpha");
    long n = static_cast<long>(fs.size());
    if (n == 0) return std::nullopt;
    for (long i = 0; i < n; i++) {
        if (fs[static_cast<size_t>(i)].is_one()) {
            RelationWitness w;
            w.k.assign(static_cast<size_t>(n), 0);
            w.k[static_cast<size_t>(i)] = 1;
            return w;
        }
    }
    ExponentContext ctx = make_context(fs, nullptr);
    IntMat A = columns_matrix(ctx, fs);
    std::vector<IntVec> kernel = integer_kernel(A);
    if (kernel.empty()) return std::nullopt;

    std::vector<int> signs;
    for (const auto& f : fs) signs.push_back(f.sign);

    std::vector<IntVec> candidates;
    for (const auto& b : kernel) candidates.push_back(primitive(b));
    for (size_t i = 0; i < kernel.size(); i++)
        for (size_t j = i + 1; j < kernel.size(); j++) {
            IntVec s(kernel[i].size());
            for (size_t t = 0; t < s.size(); t++) s[t] = kernel[i][t] + kernel[j][t];
            candidates.push_back(primitive(std::move(s)));
        }
    candidates.push_back(scaled_copy(primitive(kernel[0]), 2));

    for (const auto& cand : candidates) {
        if (is_zero(cand)) continue;
        if (sign_character(signs, cand) != 1) continue;
        RelationWitness w;
        w.k = to_longs(normalize_first_positive(cand));
        return w;
    }
    return std::nullopt;
}

std::optional<std::vector<long>> gamma_membership(const mpq_class& x, const GroupSpec& G) {
    if (x == 0) throw invalid_input("zero is not a group element");
    FactoredRational fx = factor(x);
    ExponentContext ctx = make_context({fx}, &G);
    IntMat Gm = columns_matrix(ctx, G.generators);
    IntVec e = *ctx.vector_of(fx);
    std::optional<IntVec> sol = solve_integer(Gm, e);
    if (!sol) return std::nullopt;
    if (sign_character(G.sign_row, *sol) != fx.sign) {
        bool fixed = false;
        for (const auto& b : integer_kernel(Gm)) {
            if (sign_character(G.sign_row, b) == -1) {
                for (size_t i = 0; i < sol->size(); i++) (*sol)[i] += b[i];
                fixed = true;
                break;
            }
        }
        if (!fixed) return std::nullopt;
    }
    return to_longs(*sol);
}

namespace {

// Smallest m >= 1 with m * e in the lattice spanned by the columns of Gm,
// given that e lies in the rational span. Returns m and integer exponents C
// with Gm * C = m * e.
std::pair<long, IntVec> smallest_lattice_multiple(const IntMat& Gm, const IntVec& e) {
    // Hermite basis of the column lattice.
    IntMat H = Gm, U;
    hermite_columns(H, U);
    long rank = 0;
    for (long c = 0; c < H.cols; c++) {
        bool nz = false;
        for (long r = 0; r < H.rows; r++)
            if (H.at(r, c) != 0) { nz = true; break; }
        if (nz) rank++;
    }
    IntMat B(H.rows, rank);
    for (long c = 0; c < rank; c++)
        for (long r = 0; r < H.rows; r++) B.at(r, c) = H.at(r, c);
    QVec rhs(e.size());
    for (size_t i = 0; i < e.size(); i++) rhs[i] = mpq_class(e[i]);
    std::optional<QVec> y = solve_rational(B, rhs);
    if (!y) throw invalid_input("internal: vector not in rational span");
    mpz_class m = 1;
    for (const auto& q : *y) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den().get_mpz_t());
    if (!m.fits_slong_p()) throw resource_error("division-group power exceeds machine range");
    long m_l = m.get_si();
    std::optional<IntVec> C = solve_integer(Gm, scaled_copy(e, m_l));
    if (!C) throw invalid_input("internal: lattice solve failed after span check");
    return {m_l, *C};
}

} // namespace

Verdict gamma_div_membership(const mpq_class& x, const GroupSpec& G) {
    if (x == 0) throw invalid_input("zero is not in any division group");
    FactoredRational fx = factor(x);
    ExponentContext ctx = make_context({fx}, &G);
    IntMat Gm = columns_matrix(ctx, G.generators);
    IntVec e = *ctx.vector_of(fx);
    QVec rhs(e.size());
    for (size_t i = 0; i < e.size(); i++) rhs[i] = mpq_class(e[i]);
    if (!solve_rational(Gm, rhs)) {
        Verdict v;
        v.kind = VerdictKind::OUT;
        v.reason = "exponent vector lies outside the rational span of the generator lattice";
        return v;
    }
    auto [m0, C] = smallest_lattice_multiple(Gm, e);
    long m = m0;
    int want = sign_pow(fx.sign, m0);
    if (sign_character(G.sign_row, C) != want) {
        bool fixed = false;
        for (const auto& b : integer_kernel(Gm)) {
            if (sign_character(G.sign_row, b) == -1) {
                for (size_t i = 0; i < C.size(); i++) C[i] += b[i];
                fixed = true;
                break;
            }
        }
        if (!fixed) {
            m = 2 * m0;
            for (auto& c : C) c *= 2;
        }
    }
    RelationWitness w;
    w.k = {1};
    w.m = m;
    w.gamma_exponents = to_longs(C);
    Verdict v;
    v.kind = VerdictKind::IN;
    v.witness = w;
    v.reason = "x^" + std::to_string(m) + " lies in the group";
    return v;
}

namespace {

// Homogeneous machinery shared by the Gamma^div and Gamma^div_eps relation
// tests: left null space of the generator columns, applied to the value
// columns and cleared to an integer system (row scaling keeps solutions).
struct SpanSystem {
    ExponentContext ctx;
    IntMat A;                    // value exponent columns
    std::vector<QVec> U;         // left null space rows of the generator columns
    IntMat Mk;                   // scaled integer version of U*A
    std::vector<mpz_class> row_scale;
    std::vector<IntVec> L;       // integer kernel of Mk = valid homogeneous k

    // rhs for "A k - e in span": nullopt when no integer k can work.
    std::optional<IntVec> rhs_for(const IntVec& e) const {
        IntVec out(U.size());
        for (size_t i = 0; i < U.size(); i++) {
            mpq_class acc = 0;
            for (size_t r = 0; r < e.size(); r++) acc += U[i][r] * mpq_class(e[r]);
            acc *= row_scale[i];
            acc.canonicalize();
            if (acc.get_den() != 1) return std::nullopt;
            out[i] = acc.get_num();
        }
        return out;
    }
};

SpanSystem make_span_system(const std::vector<FactoredRational>& values, const GroupSpec& G) {
    SpanSystem s;
    s.ctx = make_context(values, &G);
    s.A = columns_matrix(s.ctx, values);
    IntMat Gm = columns_matrix(s.ctx, G.generators);
    s.U = left_nullspace(Gm);
    s.Mk = IntMat(static_cast<long>(s.U.size()), s.A.cols);
    for (size_t i = 0; i < s.U.size(); i++) {
        mpz_class lcm = 1;
        QVec row(static_cast<size_t>(s.A.cols));
        for (long c = 0; c < s.A.cols; c++) {
            mpq_class acc = 0;
            for (long r = 0; r < s.A.rows; r++)
                acc += s.U[i][static_cast<size_t>(r)] * mpq_class(s.A.at(r, c));
            acc.canonicalize();
            row[static_cast<size_t>(c)] = acc;
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), acc.get_den().get_mpz_t());
        }
        s.row_scale.push_back(lcm);
        for (long c = 0; c < s.A.cols; c++) {
            mpq_class v = row[static_cast<size_t>(c)] * lcm;
            v.canonicalize();
            s.Mk.at(static_cast<long>(i), c) = v.get_num();
        }
    }
    s.L = integer_kernel(s.Mk);
    return s;
}

// Canonical nonzero k with A k - e(eta) in the rational span, if any.
std::optional<IntVec> solve_span_relation(const SpanSystem& s, const FactoredRational& eta) {
    std::optional<IntVec> e = s.ctx.vector_of(eta);
    if (!e) return std::nullopt;  // eta carries a prime no value or generator has
    std::optional<IntVec> rhs = s.rhs_for(*e);
    if (!rhs) return std::nullopt;
    std::optional<IntVec> part = solve_integer(s.Mk, *rhs);
    if (!part) return std::nullopt;
    if (is_zero(*part)) {
        if (s.L.empty()) return std::nullopt;
        return primitive(s.L[0]);
    }
    return reduce_mod_lattice(*part, s.L);
}

mpq_class product_pow(const std::vector<mpq_class>& xs, const std::vector<long>& k) {
    mpq_class z = 1;
    for (size_t i = 0; i < xs.size(); i++) z *= mpq_pow_si(xs[i], k[i]);
    z.canonicalize();
    return z;
}

std::optional<RelationWitness> ones_shortcut(const std::vector<FactoredRational>& fs) {
    for (size_t i = 0; i < fs.size(); i++) {
        if (fs[i].is_one()) {
            RelationWitness w;
            w.k.assign(fs.size(), 0);
            w.k[i] = 1;
            w.eta = mpq_class(1);
            w.m = 1;
            w.gamma_exponents = std::vector<long>();
            return w;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<RelationWitness> dependence_mod_gamma_div(const std::vector<mpq_class>& alphas,
                                                        const GroupSpec& G) {
    auto fs = factor_all(alphas, "alpha");
    if (fs.empty()) return std::nullopt;
    if (auto w = ones_shortcut(fs)) {
        w->eta.reset();
        w->gamma_exponents = std::vector<long>(G.generators.size(), 0);
        return w;
    }
    SpanSystem s = make_span_system(fs, G);
    if (s.L.empty()) return std::nullopt;
    IntVec k = normalize_last_positive(primitive(s.L[0]));
    RelationWitness w;
    w.k = to_longs(k);
    mpq_class z = product_pow(alphas, w.k);
    Verdict mem = gamma_div_membership(z, G);
    w.m = mem.witness->m;
    w.gamma_exponents = mem.witness->gamma_exponents;
    return w;
}

Verdict dependence_mod_gamma_eps(const std::vector<mpq_class>& alphas, const GroupSpec& G,
                                 const mpq_class& eps, const EnumLimits& limits) {
    if (eps < 0) throw invalid_input("eps must be nonnegative");
    auto fs = factor_all(alphas, "alpha");
    if (fs.empty()) {
        Verdict v;
        v.kind = VerdictKind::OUT;
        v.reason = "no values given";
        return v;
    }
    if (auto w = ones_shortcut(fs)) {
        w->gamma_exponents = std::vector<long>(G.generators.size(), 0);
        Verdict v;
        v.kind = VerdictKind::IN;
        v.witness = *w;
        v.reason = "a value equals 1";
        return v;
    }
    SpanSystem s = make_span_system(fs, G);

    // Certification pass: eta restricted to h(eta) <= eps.
    for (const auto& eta : enumerate_max_abs(height_ball_radius(eps), limits)) {
        std::optional<IntVec> k = solve_span_relation(s, factor(eta));
        if (!k) continue;
        mpq_class eta_used = eta;
        if (last_nonzero_negative(*k)) {
            for (auto& z : *k) z = -z;
            eta_used = 1 / eta_used;
        }
        RelationWitness w;
        w.k = to_longs(*k);
        w.eta = eta_used;
        mpq_class z = product_pow(alphas, w.k) / eta_used;
        Verdict mem = gamma_div_membership(z, G);
        w.m = mem.witness->m;
        w.gamma_exponents = mem.witness->gamma_exponents;
        Verdict v;
        v.kind = VerdictKind::IN;
        v.witness = w;
        v.reason = "certified with eta = " + rational_to_string(eta_used);
        return v;
    }

    // Refutation pass over the superset ball A(Q, eps + r*H_gen).
    for (const auto& eta : enumerate_max_abs(G.superset_radius(eps), limits)) {
        if (solve_span_relation(s, factor(eta))) {
            Verdict v;
            v.kind = VerdictKind::BOUNDARY;
            v.reason = "superset ball admits a relation via eta = " + rational_to_string(eta) +
                       " but no certificate with h(eta) <= eps";
            return v;
        }
    }
    Verdict v;
    v.kind = VerdictKind::OUT;
    v.reason = "no eta in A(Q, eps + r*H_gen) admits a nonzero relation";
    return v;
}

Verdict eps_membership_sandwich(const mpq_class& x, const GroupSpec& G,
                                const mpq_class& eps, const EnumLimits& limits) {
    if (x == 0) throw invalid_input("zero is not in any approximate division group");
    if (eps < 0) throw invalid_input("eps must be nonnegative");

    for (const auto& eta : enumerate_max_abs(height_ball_radius(eps), limits)) {
        Verdict mem = gamma_div_membership(x / eta, G);
        if (mem.is_in()) {
            RelationWitness w = *mem.witness;
            w.eta = eta;
            Verdict v;
            v.kind = VerdictKind::IN;
            v.witness = w;
            v.reason = "x/eta lies in the division group for eta = " + rational_to_string(eta);
            return v;
        }
    }
    for (const auto& eta : enumerate_max_abs(G.superset_radius(eps), limits)) {
        mpq_class q = x / eta;
        if (gamma_membership(q, G)) {
            Verdict v;
            v.kind = VerdictKind::BOUNDARY;
            v.reason = "x = (group element) * eta with eta = " + rational_to_string(eta) +
                       " in the superset ball; no certificate with h(eta) <= eps";
            return v;
        }
    }
    Verdict v;
    v.kind = VerdictKind::OUT;
    v.reason = "for every eta in A(Q, eps + r*H_gen) the quotient x/eta misses the group";
    return v;
}

std::optional<RelationWitness> rf_independence_mod_gamma(const std::vector<RationalFunction>& fs,
                                                         const GroupSpec& G) {
    long n = static_cast<long>(fs.size());
    if (n == 0) return std::nullopt;
    std::vector<Poly> all;
    for (const auto& f : fs) {
        if (f.num.is_zero() || f.den.is_zero())
            throw invalid_input("zero rational function");
        all.push_back(f.num);
        all.push_back(f.den);
    }
    CoprimeBasis cb = coprime_basis(all);
    long B = static_cast<long>(cb.basis.size());

    // rows[i] = divisor exponents of f_i over the basis; c[i] = constant part.
    std::vector<std::vector<long>> rows;
    std::vector<mpq_class> consts;
    for (long i = 0; i < n; i++) {
        std::vector<long> row(static_cast<size_t>(B));
        for (long j = 0; j < B; j++)
            row[static_cast<size_t>(j)] = cb.exponents[static_cast<size_t>(2 * i)][static_cast<size_t>(j)] -
                                          cb.exponents[static_cast<size_t>(2 * i + 1)][static_cast<size_t>(j)];
        rows.push_back(std::move(row));
        mpq_class c = cb.contents[static_cast<size_t>(2 * i)] / cb.contents[static_cast<size_t>(2 * i + 1)];
        c.canonicalize();
        consts.push_back(c);
    }

    // Step 1: k must make the function part constant.
    IntMat M1(B, n);
    for (long b = 0; b < B; b++)
        for (long i = 0; i < n; i++) M1.at(b, i) = rows[static_cast<size_t>(i)][static_cast<size_t>(b)];
    std::vector<IntVec> L1 = integer_kernel(M1);
    if (L1.empty()) return std::nullopt;
    long t = static_cast<long>(L1.size());

    // Step 2: within that kernel, the constant must land in Gamma exactly.
    std::vector<FactoredRational> cf;
    for (const auto& c : consts) cf.push_back(factor(c));
    ExponentContext ctx = make_context(cf, &G);
    IntMat C = columns_matrix(ctx, cf);
    IntMat Gm = columns_matrix(ctx, G.generators);
    long r = Gm.cols;
    IntMat comp(C.rows, t + r);
    for (long row = 0; row < C.rows; row++) {
        for (long u = 0; u < t; u++) {
            mpz_class acc = 0;
            for (long i = 0; i < n; i++) acc += C.at(row, i) * L1[static_cast<size_t>(u)][static_cast<size_t>(i)];
            comp.at(row, u) = acc;
        }
        for (long j = 0; j < r; j++) comp.at(row, t + j) = Gm.at(row, j);
    }
    std::vector<IntVec> K2 = integer_kernel(comp);

    auto try_vec = [&](const IntVec& v) -> std::optional<RelationWitness> {
        IntVec u(static_cast<size_t>(t)), d(static_cast<size_t>(r));
        for (long i = 0; i < t; i++) u[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
        for (long j = 0; j < r; j++) d[static_cast<size_t>(j)] = v[static_cast<size_t>(t + j)];
        if (is_zero(u)) return std::nullopt;
        IntVec k(static_cast<size_t>(n), mpz_class(0));
        for (long i = 0; i < n; i++)
            for (long uu = 0; uu < t; uu++)
                k[static_cast<size_t>(i)] += u[static_cast<size_t>(uu)] * L1[static_cast<size_t>(uu)][static_cast<size_t>(i)];
        if (is_zero(k)) return std::nullopt;
        std::vector<long> kl = to_longs(k);
        mpq_class z = product_pow(consts, kl);
        IntVec gamma_exp(static_cast<size_t>(r));
        for (long j = 0; j < r; j++) gamma_exp[static_cast<size_t>(j)] = -d[static_cast<size_t>(j)];
        std::vector<long> ge = to_longs(gamma_exp);
        mpq_class gval = 1;
        for (long j = 0; j < r; j++)
            gval *= mpq_pow_si(G.generators[static_cast<size_t>(j)].value(), ge[static_cast<size_t>(j)]);
        gval.canonicalize();
        if (z != gval) return std::nullopt;  // sign obstruction for this vector
        RelationWitness w;
        IntVec kn = normalize_first_positive(k);
        bool flipped = kn != k;
        w.k = to_longs(kn);
        w.m = 1;
        if (flipped)
            for (auto& g : ge) g = -g;
        w.gamma_exponents = ge;
        return w;
    };

    for (const auto& v : K2)
        if (auto w = try_vec(v)) return w;
    for (size_t i = 0; i < K2.size(); i++)
        for (size_t j = i + 1; j < K2.size(); j++) {
            IntVec sum(K2[i].size());
            for (size_t z = 0; z < sum.size(); z++) sum[z] = K2[i][z] + K2[j][z];
            if (auto w = try_vec(sum)) return w;
        }
    for (const auto& v : K2) {
        bool u_nonzero = false;
        for (long i = 0; i < t; i++)
            if (v[static_cast<size_t>(i)] != 0) { u_nonzero = true; break; }
        if (!u_nonzero) continue;
        if (auto w = try_vec(scaled_copy(v, 2))) return w;
        break;
    }
    return std::nullopt;
}

std::string LfWitness::ell_text() const {
    if (constant_case) return "constant";
    if (ell_den.is_zero() || ell_den == Poly::constant(1)) return ell_num.str();
    auto wrap = [](const Poly& p) {
        std::string s = p.str();
        return p.coeffs().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(ell_num) + "/" + wrap(ell_den);
}

std::optional<LfWitness> lf_generation_check(const Poly& f1, const Poly& f2) {
    if (f1.degree() < 1 || f2.degree() < 1)
        throw invalid_input("linear-fractional generation check needs nonconstant inputs");
    CoprimeBasis cb = coprime_basis({f1, f2});
    long B = static_cast<long>(cb.basis.size());
    auto row_of = [&](int i, long b) {
        return cb.exponents[static_cast<size_t>(i)][static_cast<size_t>(b)];
    };
    auto combo_at = [&](const IntVec& k, long b) {
        return k[0] * row_of(0, b) + k[1] * row_of(1, b);
    };
    auto scale_of = [&](const std::vector<long>& k) {
        mpq_class c = mpq_pow_si(cb.contents[0], k[0]) * mpq_pow_si(cb.contents[1], k[1]);
        c.canonicalize();
        return c;
    };

    // Vanishing combination: the power product is a constant.
    {
        IntMat M(B, 2);
        for (long b = 0; b < B; b++) {
            M.at(b, 0) = row_of(0, b);
            M.at(b, 1) = row_of(1, b);
        }
        std::vector<IntVec> K = integer_kernel(M);
        if (!K.empty()) {
            IntVec k = normalize_first_positive(primitive(K[0]));
            LfWitness w;
            w.k = {k[0].get_si(), k[1].get_si()};
            w.constant_case = true;
            w.ell_num = Poly::constant(1);
            w.ell_den = Poly::constant(1);
            w.t = 0;
            w.scale = scale_of({w.k[0], w.k[1]});
            return w;
        }
    }

    // One linear basis element carrying the whole divisor.
    for (long j = 0; j < B; j++) {
        if (cb.basis[static_cast<size_t>(j)].degree() != 1) continue;
        IntMat M(B - 1, 2);
        long rr = 0;
        for (long b = 0; b < B; b++) {
            if (b == j) continue;
            M.at(rr, 0) = row_of(0, b);
            M.at(rr, 1) = row_of(1, b);
            rr++;
        }
        std::vector<IntVec> K = integer_kernel(M);
        if (K.empty()) continue;
        IntVec k = primitive(K[0]);
        mpz_class wj = combo_at(k, j);
        if (wj == 0) continue;  // the vanishing case, already handled
        if (wj < 0) {
            k[0] = -k[0];
            k[1] = -k[1];
            wj = -wj;
        }
        LfWitness w;
        w.k = {k[0].get_si(), k[1].get_si()};
        w.ell_num = cb.basis[static_cast<size_t>(j)];
        w.ell_den = Poly::constant(1);
        w.t = wj.get_si();
        w.scale = scale_of({w.k[0], w.k[1]});
        return w;
    }

    // Two linear elements with opposite equal exponents: ((X-b)/(X-c))^t.
    for (long i = 0; i < B; i++) {
        if (cb.basis[static_cast<size_t>(i)].degree() != 1) continue;
        for (long j = i + 1; j < B; j++) {
            if (cb.basis[static_cast<size_t>(j)].degree() != 1) continue;
            IntMat M(B - 1, 2);
            long rr = 0;
            for (long b = 0; b < B; b++) {
                if (b == i || b == j) continue;
                M.at(rr, 0) = row_of(0, b);
                M.at(rr, 1) = row_of(1, b);
                rr++;
            }
            // opposite equal exponents on i and j
            M.at(rr, 0) = row_of(0, i) + row_of(0, j);
            M.at(rr, 1) = row_of(1, i) + row_of(1, j);
            std::vector<IntVec> K = integer_kernel(M);
            if (K.empty()) continue;
            IntVec k = primitive(K[0]);
            mpz_class wj = combo_at(k, j);
            if (wj == 0) continue;
            // The basis is sorted by ascending constant term, so basis[j]
            // has the smaller root; give it the positive exponent.
            if (wj < 0) {
                k[0] = -k[0];
                k[1] = -k[1];
                wj = -wj;
            }
            LfWitness w;
            w.k = {k[0].get_si(), k[1].get_si()};
            w.ell_num = cb.basis[static_cast<size_t>(j)];
            w.ell_den = cb.basis[static_cast<size_t>(i)];
            w.t = wj.get_si();
            w.scale = scale_of({w.k[0], w.k[1]});
            return w;
        }
    }
    return std::nullopt;
}

bool verify_witness(const std::vector<mpq_class>& alphas, const GroupSpec& G,
                    const RelationWitness& w) {
    if (w.k.size() != alphas.size()) return false;
    bool nonzero = false;
    for (long ki : w.k)
        if (ki != 0) nonzero = true;
    if (!nonzero) return false;
    mpq_class z = product_pow(alphas, w.k);
    if (w.eta) z /= *w.eta;
    z.canonicalize();
    if (!w.m && !w.gamma_exponents) return z == 1;
    long m = w.m.value_or(1);
    if (m < 1) return false;
    mpq_class lhs = mpq_pow_si(z, m);
    mpq_class rhs = 1;
    static const std::vector<long> no_exponents;
    const std::vector<long>& ge = w.gamma_exponents ? *w.gamma_exponents : no_exponents;
    if (ge.size() > G.generators.size()) return false;
    for (size_t j = 0; j < ge.size(); j++)
        rhs *= mpq_pow_si(G.generators[j].value(), ge[j]);
    rhs.canonicalize();
    return lhs == rhs;
}

} // namespace muldep
