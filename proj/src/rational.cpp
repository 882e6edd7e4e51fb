#include "muldep/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace muldep {

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    sign *= o.sign;
    for (const auto& [p, e] : o.exponents) {
        long& slot = exponents[p];
        slot += e;
        if (slot == 0) exponents.erase(p);
    }
    return *this;
}

FactoredRational operator*(FactoredRational a, const FactoredRational& b) {
    a *= b;
    return a;
}

FactoredRational FactoredRational::inverse() const {
    FactoredRational r;
    r.sign = sign;
    for (const auto& [p, e] : exponents) r.exponents[p] = -e;
    return r;
}

FactoredRational FactoredRational::pow(long k) const {
    FactoredRational r;
    r.sign = (k % 2 == 0) ? 1 : sign;
    if (k != 0)
        for (const auto& [p, e] : exponents) r.exponents[p] = e * k;
    return r;
}

mpq_class FactoredRational::value() const {
    mpz_class num = 1, den = 1;
    for (const auto& [p, e] : exponents) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
        if (e > 0)
            num *= pw;
        else
            den *= pw;
    }
    mpq_class q(sign > 0 ? num : -num, den);
    q.canonicalize();
    return q;
}

mpq_class unfactor(const FactoredRational& f) { return f.value(); }

namespace {

// Pollard-Brent rho; n odd composite, not a prime power issue handled by caller loop.
mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, q = 1, g = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; i++) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); i++) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, long>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<mpz_class, long> factor_integer(const mpz_class& n_in) {
    if (n_in == 0) throw invalid_input("zero has no factorization");
    mpz_class n = abs(n_in);
    std::map<mpz_class, long> out;
    for (const unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    unsigned long d = 17;
    while (n > 1 && d <= 1'000'000 && mpz_cmp_ui(n.get_mpz_t(), d * d) >= 0) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out[mpz_class(d)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
        d += 2;
    }
    factor_into(n, out);
    return out;
}

FactoredRational factor(const mpq_class& x) {
    if (x == 0) throw invalid_input("zero has no factorization");
    FactoredRational f;
    f.sign = sgn(x) > 0 ? 1 : -1;
    for (const auto& [p, e] : factor_integer(x.get_num())) f.exponents[p] += e;
    for (const auto& [p, e] : factor_integer(x.get_den())) f.exponents[p] -= e;
    std::erase_if(f.exponents, [](const auto& kv) { return kv.second == 0; });
    return f;
}

bool PlaceSet::contains(const mpz_class& p) const {
    return std::binary_search(finite_primes.begin(), finite_primes.end(), p);
}

PlaceSet PlaceSet::of(std::vector<mpz_class> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes)
        if (p < 2 || !mpz_probab_prime_p(p.get_mpz_t(), 32))
            throw invalid_input("not a prime: " + p.get_str());
    return PlaceSet{std::move(primes)};
}

double log_mpz(const mpz_class& z) {
    if (z <= 0) throw invalid_input("log of nonpositive integer");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

HeightValue height(const mpq_class& x) {
    if (x == 0) throw invalid_input("height of zero is undefined");
    mpz_class m = std::max(mpz_class(abs(x.get_num())), mpz_class(x.get_den()));
    return HeightValue{m == 1 ? 0.0 : log_mpz(m), true, m};
}

mpq_class s_norm(const FactoredRational& b, const PlaceSet& S) {
    mpq_class r = abs(b.value());
    for (const auto& p : S.finite_primes) {
        long v = b.valuation(p);
        if (v == 0) continue;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(v)));
        if (v > 0)
            r /= pw;
        else
            r *= pw;
    }
    r.canonicalize();
    return r;
}

std::pair<mpz_class, mpz_class> p_s_q_s(const PlaceSet& S) {
    if (S.finite_primes.empty()) return {1, 1};
    mpz_class q = 1;
    for (const auto& p : S.finite_primes) q *= p;
    return {S.finite_primes.back(), q};
}

double log_star(double x) {
    if (!(x > 0)) throw invalid_input("log* needs a positive argument");
    return std::max(1.0, std::log(x));
}

namespace {

// floor(e^H * scale) via interval arithmetic at growing precision. For
// rational H != 0 the value e^H * scale is irrational, so the two directed
// roundings eventually agree on the floor.
mpz_class floor_exp_scaled(const mpq_class& H, const mpz_class& scale) {
    if (H < 0) throw invalid_input("height bound must be nonnegative");
    if (H == 0) return scale;
    for (mpfr_prec_t prec = 96; prec <= 1 << 16; prec *= 2) {
        mpfr_t h, lo, hi;
        mpfr_inits2(prec, h, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpz_class flo, fhi;

        mpfr_set_q(h, H.get_mpq_t(), MPFR_RNDD);
        mpfr_exp(lo, h, MPFR_RNDD);
        mpfr_mul_z(lo, lo, scale.get_mpz_t(), MPFR_RNDD);
        mpfr_get_z(flo.get_mpz_t(), lo, MPFR_RNDD);

        mpfr_set_q(h, H.get_mpq_t(), MPFR_RNDU);
        mpfr_exp(hi, h, MPFR_RNDU);
        mpfr_mul_z(hi, hi, scale.get_mpz_t(), MPFR_RNDU);
        mpfr_get_z(fhi.get_mpz_t(), hi, MPFR_RNDD);

        mpfr_clears(h, lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (flo == fhi) return flo;
    }
    throw resource_error("could not resolve floor(e^H) at maximum precision");
}

} // namespace

mpz_class height_ball_radius(const mpq_class& H) { return floor_exp_scaled(H, 1); }

mpz_class height_ball_radius_scaled(const mpq_class& H, const mpz_class& scale) {
    return floor_exp_scaled(H, scale);
}

std::vector<mpq_class> enumerate_max_abs(const mpz_class& B, const EnumLimits& limits) {
    if (B < 1) return {};
    // 2 * #Farey(B) ~ (12/pi^2) B^2; refuse early when hopeless.
    mpz_class rough = 2 * B * B;
    if (rough > 8 * mpz_class(limits.max_elements))
        throw resource_error("height ball of radius " + B.get_str() +
                             " exceeds the enumeration cap");
    std::vector<mpq_class> out;
    unsigned long count = 0;
    auto push = [&](const mpz_class& p, const mpz_class& q) {
        count += 2;
        if (count > limits.max_elements)
            throw resource_error("enumeration cap exceeded");
        mpq_class v(p, q);  // already coprime
        out.push_back(v);
        out.push_back(-v);
    };
    mpz_class g;
    for (mpz_class M = 1; M <= B; ++M) {
        for (mpz_class p = 1; p < M; ++p) {
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), M.get_mpz_t());
            if (g == 1) push(p, M);
        }
        if (M == 1) {
            push(1, 1);
            continue;
        }
        for (mpz_class q = 1; q < M; ++q) {
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), M.get_mpz_t());
            if (g == 1) push(M, q);
        }
    }
    return out;
}

std::vector<mpq_class> enumerate_bounded_height(const mpq_class& H, const EnumLimits& limits) {
    return enumerate_max_abs(height_ball_radius(H), limits);
}

bool canonical_rational_less(const mpq_class& a, const mpq_class& b) {
    if (a == b) return false;
    // 0 sorts first; then by (max(|p|,|q|), p, q, sign) with + before -.
    if (a == 0) return true;
    if (b == 0) return false;
    mpz_class ma = std::max(mpz_class(abs(a.get_num())), mpz_class(a.get_den()));
    mpz_class mb = std::max(mpz_class(abs(b.get_num())), mpz_class(b.get_den()));
    if (ma != mb) return ma < mb;
    mpz_class pa = abs(a.get_num()), pb = abs(b.get_num());
    if (pa != pb) return pa < pb;
    if (a.get_den() != b.get_den()) return a.get_den() < b.get_den();
    return a > 0 && b < 0;
}

namespace {

// Digits-only string to mpz, always base 10 (leading zeros stay decimal).
mpz_class digits_to_mpz(const std::string& t) {
    mpz_class z = 0;
    for (char ch : t) z = z * 10 + (ch - '0');
    return z;
}

bool all_digits(const std::string& t) {
    if (t.empty()) return false;
    for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Optional sign followed by digits; sign returned separately.
bool split_signed(const std::string& t, bool& neg, std::string& digits) {
    if (t.empty()) return false;
    size_t i = 0;
    neg = false;
    if (t[0] == '-' || t[0] == '+') {
        neg = t[0] == '-';
        i = 1;
    }
    digits = t.substr(i);
    return all_digits(digits);
}

} // namespace

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        bool nneg = false, dneg = false;
        std::string nd, dd;
        if (!split_signed(s.substr(0, slash), nneg, nd) ||
            !split_signed(s.substr(slash + 1), dneg, dd))
            throw invalid_input("malformed rational: " + s);
        mpz_class nz = digits_to_mpz(nd), dz = digits_to_mpz(dd);
        if (dz == 0) throw invalid_input("zero denominator: " + s);
        mpq_class q(nz, dz);
        q.canonicalize();
        return (nneg != dneg) ? mpq_class(-q) : q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        bool neg = false;
        std::string ip;
        std::string head = s.substr(0, dot);
        if (head.empty() || head == "-" || head == "+") head += "0";
        if (!split_signed(head, neg, ip)) throw invalid_input("malformed decimal: " + s);
        std::string fp = s.substr(dot + 1);
        if (!fp.empty() && !all_digits(fp)) throw invalid_input("malformed decimal: " + s);
        mpz_class den = 1;
        for (size_t i = 0; i < fp.size(); i++) den *= 10;
        mpz_class total = digits_to_mpz(ip) * den + (fp.empty() ? mpz_class(0) : digits_to_mpz(fp));
        mpq_class q(total, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    }
    bool neg = false;
    std::string digits;
    if (!split_signed(s, neg, digits)) throw invalid_input("malformed rational: " + s);
    mpz_class z = digits_to_mpz(digits);
    return neg ? mpq_class(-z) : mpq_class(z);
}

std::string rational_to_string(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace muldep
