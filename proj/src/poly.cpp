#include "muldep/poly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace muldep {

Poly::Poly(std::vector<mpq_class> desc) : c_(std::move(desc)) {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) lead++;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
}

Poly Poly::constant(const mpq_class& c) { return Poly(std::vector<mpq_class>{c}); }

Poly Poly::X() { return Poly({mpq_class(1), mpq_class(0)}); }

Poly Poly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpq_class> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(parse_rational(s));
    return Poly(std::move(c));
}

const mpq_class& Poly::lc() const {
    if (is_zero()) throw invalid_input("zero polynomial has no leading coefficient");
    return c_.front();
}

mpq_class Poly::coeff_of(long i) const {
    long n = degree();
    if (i < 0 || i > n) return 0;
    return c_[static_cast<size_t>(n - i)];
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (const auto& c : c_) acc = acc * x + c;
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<mpq_class> d;
    long n = degree();
    d.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; i++) d.push_back(c_[static_cast<size_t>(i)] * (n - i));
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); i++) r[r.size() - c_.size() + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); i++) r[r.size() - o.c_.size() + i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<mpq_class> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); i++)
        for (size_t j = 0; j < o.c_.size(); j++) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return Poly();
    std::vector<mpq_class> r = c_;
    for (auto& x : r) x *= c;
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(mpq_class(1) / lc());
}

Poly Poly::pow(long e) const {
    if (e < 0) throw invalid_input("negative polynomial power");
    Poly r = Poly::constant(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw invalid_input("division by the zero polynomial");
    std::vector<mpq_class> rem = c_;
    long dr = static_cast<long>(rem.size()) - 1, dd = d.degree();
    if (dr < dd) return {Poly(), *this};
    std::vector<mpq_class> quot(static_cast<size_t>(dr - dd + 1), mpq_class(0));
    for (long i = 0; i + dd <= dr; i++) {
        mpq_class q = rem[static_cast<size_t>(i)] / d.lc();
        quot[static_cast<size_t>(i)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= dd; j++)
            rem[static_cast<size_t>(i + j)] -= q * d.coeffs()[static_cast<size_t>(j)];
    }
    rem.erase(rem.begin(), rem.begin() + (dr - dd + 1));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw invalid_input("inexact polynomial division");
    return q;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    long n = degree();
    for (long i = 0; i <= n; i++) {
        const mpq_class& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        long p = n - i;
        mpq_class a = abs(c);
        std::string term;
        if (p == 0) {
            term = rational_to_string(a);
        } else {
            std::string xs = p == 1 ? "X" : "X^" + std::to_string(p);
            term = (a == 1) ? xs : rational_to_string(a) + "*" + xs;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? "-" : "+") + term;
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); i++) {
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return false;
}

Poly gcd_poly(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = b;
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

SquarefreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw invalid_input("squarefree decomposition needs degree >= 1");
    SquarefreeDecomposition out;
    out.unit = f.lc();
    Poly F = f.monic();
    Poly Fp = F.derivative();
    Poly g = gcd_poly(F, Fp);
    Poly b = F.divexact(g);
    Poly c = Fp.divexact(g);
    Poly d = c - b.derivative();
    long i = 1;
    while (b.degree() > 0) {
        Poly a = gcd_poly(b, d);
        b = b.divexact(a);
        c = d.divexact(a);
        d = c - b.derivative();
        if (a.degree() > 0) out.parts.emplace_back(a, i);
        i++;
    }
    return out;
}

Poly SquarefreeDecomposition::radical() const {
    Poly r = Poly::constant(1);
    for (const auto& [p, m] : parts) r = r * p;
    return r;
}

Poly SquarefreeDecomposition::with_lc_radical() const { return radical().scaled(unit); }

Poly SquarefreeDecomposition::reconstruct() const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, m] : parts) r = r * p.pow(m);
    return r;
}

namespace {

// Clear a rational vector to a coprime integer vector (up to sign).
std::vector<mpz_class> clear_to_coprime(const std::vector<mpq_class>& v) {
    mpz_class L = 1;
    for (const auto& q : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> w;
    w.reserve(v.size());
    mpz_class g = 0;
    for (const auto& q : v) {
        mpz_class z = q.get_num() * (L / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        w.push_back(std::move(z));
    }
    if (g > 1)
        for (auto& z : w) z /= g;
    return w;
}

HeightValue height_of_vector(const std::vector<mpq_class>& v) {
    std::vector<mpz_class> w = clear_to_coprime(v);
    mpz_class m = 0;
    for (const auto& z : w) m = std::max(m, mpz_class(abs(z)));
    return HeightValue{m == 1 ? 0.0 : log_mpz(m), true, m};
}

} // namespace

std::pair<HeightValue, HeightValue> poly_heights(const Poly& f) {
    if (f.is_zero()) throw invalid_input("height of the zero polynomial");
    std::vector<mpq_class> hom = f.coeffs();
    std::vector<mpq_class> aff = f.coeffs();
    aff.insert(aff.begin(), mpq_class(1));
    return {height_of_vector(aff), height_of_vector(hom)};
}

namespace {

using ZPoly = std::vector<mpz_class>;  // descending, nonempty, lc != 0

long zdeg(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void ztrim(ZPoly& p) {
    size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) lead++;
    p.erase(p.begin(), p.begin() + static_cast<long>(lead));
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, with the full
// power applied even when intermediate degrees drop by more than one.
ZPoly prem(ZPoly A, const ZPoly& B) {
    long dB = zdeg(B);
    const mpz_class& lb = B.front();
    long e = zdeg(A) - dB + 1;
    while (true) {
        ztrim(A);
        long dA = zdeg(A);
        if (A.empty() || dA < dB) break;
        // A = lb*A - lead(A)*X^(dA-dB)*B; descending storage puts the
        // leading terms of both at index 0.
        mpz_class la = A.front();
        for (auto& c : A) c *= lb;
        for (long j = 0; j <= dB; j++)
            A[static_cast<size_t>(j)] -= la * B[static_cast<size_t>(j)];
        e--;
    }
    if (e > 0 && !A.empty()) {
        mpz_class lbp;
        mpz_pow_ui(lbp.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : A) c *= lbp;
    }
    return A;
}

// Subresultant PRS resultant of primitive integer polynomials, after the
// content and swap bookkeeping already done by the caller.
mpz_class subresultant_core(ZPoly A, ZPoly B, int& sign) {
    mpz_class g = 1, h = 1;
    while (true) {
        long dA = zdeg(A), dB = zdeg(B);
        long delta = dA - dB;
        if (dA % 2 == 1 && dB % 2 == 1) sign = -sign;
        ZPoly R = prem(A, B);
        ztrim(R);
        if (R.empty()) {
            if (dB > 0) return 0;  // nonconstant common factor
            // deg B == 0 handled below; R empty with dB == 0 cannot happen
            // because prem against a constant clears everything only if A==0.
            return 0;
        }
        A = B;
        // B = R / (g * h^delta)
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class div = g * hp;
        for (auto& c : R) {
            mpz_class q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
            c = q;
        }
        B = R;
        g = A.front();
        // h = g^delta / h^(delta-1), exact in Z
        mpz_class gp;
        mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
        if (delta == 0) {
            // h unchanged
        } else {
            mpz_class hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gp / hd;
        }
        if (zdeg(B) == 0) {
            long dA2 = zdeg(A);
            mpz_class lbp;
            mpz_pow_ui(lbp.get_mpz_t(), B.front().get_mpz_t(),
                       static_cast<unsigned long>(dA2));
            mpz_class hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(dA2 - 1));
            return lbp / hd;
        }
    }
}

} // namespace

mpq_class resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero())
        throw invalid_input("resultant of the zero polynomial");
    long df = f.degree(), dg = g.degree();
    if (df == 0 && dg == 0) return 1;
    if (dg == 0) {
        mpq_class r = 1;
        for (long i = 0; i < df; i++) r *= g.lc();
        return r;
    }
    if (df == 0) {
        mpq_class r = 1;
        for (long i = 0; i < dg; i++) r *= f.lc();
        return r;
    }
    // Clear denominators: Res(c f, g) = c^(deg g) Res(f, g).
    auto clear = [](const Poly& p, mpq_class& scale_out) {
        mpz_class L = 1;
        for (const auto& c : p.coeffs())
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
        ZPoly z;
        for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (L / c.get_den()));
        mpz_class ct = zcontent(z);
        for (auto& c : z) c /= ct;
        scale_out = mpq_class(ct, L);
        scale_out.canonicalize();
        return z;
    };
    mpq_class cf, cg;
    ZPoly A = clear(f, cf), B = clear(g, cg);
    int sign = 1;
    if (zdeg(A) < zdeg(B)) {
        std::swap(A, B);
        if ((df % 2 == 1) && (dg % 2 == 1)) sign = -sign;
    }
    mpz_class core = subresultant_core(A, B, sign);
    mpq_class scale = 1;
    for (long i = 0; i < dg; i++) scale *= cf;
    for (long i = 0; i < df; i++) scale *= cg;
    mpq_class out = scale * core * sign;
    out.canonicalize();
    return out;
}

mpq_class discriminant(const Poly& f) {
    if (f.degree() < 2) throw invalid_input("discriminant needs degree >= 2");
    long n = f.degree();
    mpq_class r = resultant(f, f.derivative()) / f.lc();
    if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
    r.canonicalize();
    return r;
}

std::vector<mpz_class> bad_reduction_primes(const Poly& f) {
    if (f.is_zero()) return {};
    std::set<mpz_class> primes;
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        for (const auto& [p, e] : factor_integer(c.get_den())) {
            (void)e;
            primes.insert(p);
        }
    }
    const mpq_class& a0 = f.lc();
    for (const auto& [p, e] : factor_integer(a0.get_num())) {
        (void)e;
        if (a0.get_den() % p != 0) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

std::vector<mpz_class> bad_reduction_primes_outside(const Poly& f, const PlaceSet& S) {
    std::vector<mpz_class> out;
    for (const auto& p : bad_reduction_primes(f))
        if (!S.contains(p)) out.push_back(p);
    return out;
}

CoprimeBasis coprime_basis(const std::vector<Poly>& fs) {
    for (const auto& f : fs)
        if (f.is_zero()) throw invalid_input("coprime basis of the zero polynomial");

    // Pool the squarefree parts, then split pairs until pairwise coprime.
    std::set<Poly, decltype(&poly_less)> pool(&poly_less);
    for (const auto& f : fs) {
        if (f.degree() < 1) continue;
        for (const auto& [part, mult] : squarefree_decompose(f).parts) {
            (void)mult;
            pool.insert(part);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = pool.begin(); it != pool.end() && !changed; ++it) {
            for (auto jt = std::next(it); jt != pool.end() && !changed; ++jt) {
                Poly g = gcd_poly(*it, *jt);
                if (g.degree() < 1) continue;
                Poly a = it->divexact(g), b = jt->divexact(g);
                pool.erase(jt);
                pool.erase(it);
                pool.insert(g);
                if (a.degree() >= 1) pool.insert(a.monic());
                if (b.degree() >= 1) pool.insert(b.monic());
                changed = true;
            }
        }
    }

    CoprimeBasis out;
    out.basis.assign(pool.begin(), pool.end());
    for (const auto& f : fs) {
        std::vector<long> row(out.basis.size(), 0);
        Poly rem = f.degree() >= 1 ? f.monic() : Poly::constant(1);
        for (size_t j = 0; j < out.basis.size(); j++) {
            while (rem.degree() >= out.basis[j].degree()) {
                auto [q, r] = rem.divrem(out.basis[j]);
                if (!r.is_zero()) break;
                rem = q;
                row[j]++;
            }
        }
        if (rem.degree() != 0)
            throw invalid_input("internal: input does not factor over the coprime basis");
        out.exponents.push_back(std::move(row));
        out.contents.push_back(f.degree() < 1 ? f.coeff_of(0) : f.lc());
    }
    return out;
}

std::vector<mpq_class> evaluate_and_iterate(const Poly& f, const mpq_class& alpha,
                                            long m, double height_cap_log) {
    std::vector<mpq_class> out;
    mpq_class x = alpha;
    for (long i = 1; i <= m; i++) {
        x = f.eval(x);
        if (x != 0 && height(x).value > height_cap_log)
            throw resource_error("iterate height cap exceeded at index " + std::to_string(i));
        out.push_back(x);
    }
    return out;
}

} // namespace muldep
