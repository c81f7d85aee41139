#include "polybloch/lifted_polylog.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace pb {

namespace {

constexpr int kMaxWeight = 40;

std::mutex g_mu;

double rat_d(const Rational& r) { return r.get_d(); }

cplx ipow(cplx x, int e) {
    cplx r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

double fact_d(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// coefficients zeta(n-k)/k! of the expansion of Li_n around z = 1, k != n-1
const std::vector<double>& log_series_coeffs(int n) {
    static std::vector<std::vector<double>> cache(kMaxWeight + 1);
    std::lock_guard<std::mutex> lock(g_mu);
    auto& c = cache.at(n);
    if (!c.empty()) return c;
    const int K = 110;
    c.assign(K, 0.0);
    for (int k = 0; k < K; ++k) {
        int s = n - k;
        if (k == n - 1) continue;
        if (s >= 2) {
            c[k] = std::riemann_zeta(double(s)) / fact_d(k);
        } else {
            // zeta(-m) = (-1)^m B_{m+1}/(m+1)
            int m = -s;
            Rational z = bernoulli(m + 1) / Rational(m + 1);
            if (m % 2) z = -z;
            Rational t = z / Rational(factorial(k));
            c[k] = rat_d(t);
        }
    }
    return c;
}

const std::vector<double>& bernoulli_d() {
    static std::vector<double> b;
    std::lock_guard<std::mutex> lock(g_mu);
    if (b.empty())
        for (int i = 0; i <= kMaxWeight; ++i) b.push_back(rat_d(bernoulli(i)));
    return b;
}

cplx bernoulli_poly(int n, cplx x) {
    const auto& b = bernoulli_d();
    cplx s = 0;
    for (int k = 0; k <= n; ++k) s += binomial(n, k).get_d() * b[k] * ipow(x, n - k);
    return s;
}

cplx li_series(int n, cplx z) {
    cplx s = 0, zk = 1;
    for (int k = 1; k < 400; ++k) {
        zk *= z;
        cplx t = zk / std::pow(double(k), n);
        s += t;
        if (std::abs(zk) < 1e-18) break;
    }
    return s;
}

double harmonic(int m) {
    double h = 0;
    for (int i = 1; i <= m; ++i) h += 1.0 / i;
    return h;
}

bool is_real(cplx z) { return z.imag() == 0.0; }

}  // namespace

cplx log_sided(cplx z, Side side) {
    if (!is_real(z)) return std::log(z);
    double x = z.real();
    if (x > 0) return {std::log(x), 0.0};
    if (x == 0) throw DomainError("log of zero");
    if (side == Side::None) throw DomainError("log on the negative axis needs a side");
    return {std::log(-x), static_cast<int>(side) * kPi};
}

double zeta(int n) {
    if (n < 2) throw std::invalid_argument("zeta: n >= 2");
    static std::vector<double> cache;
    std::lock_guard<std::mutex> lock(g_mu);
    if (cache.empty()) {
        cache.assign(kMaxWeight + 1, 0.0);
        for (int k = 2; k <= kMaxWeight; ++k) cache[k] = std::riemann_zeta(double(k));
        cache[3] = kZeta3;
    }
    if (n > kMaxWeight) return 1.0;
    return cache[n];
}

cplx li_principal(int n, cplx z, Side side) {
    if (n < 1 || n > kMaxWeight) throw std::invalid_argument("li_principal: weight out of range");
    if (z == cplx(0, 0)) return 0;
    if (n == 1) {
        if (z == cplx(1, 0)) throw BranchPoint("Li_1 at 1");
        return -log_sided(cplx(1.0 - z.real(), -z.imag() + 0.0), flip(side));
    }
    if (z == cplx(1, 0)) return zeta(n);
    if (is_real(z) && z.real() > 1 && side == Side::None) throw DomainError("Li_n on the cut needs a side");
    double r = std::abs(z);
    if (r <= 0.5) return li_series(n, z);
    if (r >= 2.0) {
        cplx w = 1.0 / z;
        if (is_real(w)) w = cplx(w.real(), 0.0);
        cplx L = log_sided(cplx(-z.real(), -z.imag() + 0.0), flip(side));
        cplx inv = li_series(n, w);
        double sgn = (n % 2) ? -1.0 : 1.0;
        return -sgn * inv - ipow(2.0 * kPi * kI, n) / fact_d(n) * bernoulli_poly(n, 0.5 + L / (2.0 * kPi * kI));
    }
    // either determination of Log on the negative axis gives the principal value
    cplx mu = (is_real(z) && z.real() < 0) ? log_sided(z, Side::Above) : log_sided(z, side);
    const auto& c = log_series_coeffs(n);
    cplx s = 0, mk = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0.0) s += c[k] * mk;
        mk *= mu;
        if (std::abs(mk) < 1e-30) break;
    }
    cplx lm;
    if (mu.imag() == 0.0) {
        if (mu.real() < 0)
            lm = std::log(-mu.real());
        else
            lm = cplx(std::log(mu.real()), -static_cast<int>(side) * kPi);
    } else {
        lm = std::log(-mu);
    }
    s += ipow(mu, n - 1) / fact_d(n - 1) * (harmonic(n - 1) - lm);
    return s;
}

double zagier_L(int n, cplx z) {
    if (n < 2) throw std::invalid_argument("zagier_L: n >= 2");
    if (std::isinf(z.real()) || std::isinf(z.imag())) return 0.0;
    if (z == cplx(0, 0)) return 0.0;
    double lr = std::log(std::abs(z));
    Side side = (is_real(z) && z.real() > 1) ? Side::Above : Side::None;
    cplx s = 0;
    double lp = 1;
    for (int r = 0; r < n; ++r) {
        double b = rat_d(bernoulli(r)) * std::ldexp(1.0, r) / fact_d(r);
        if (b != 0.0) {
            if (n - r == 1 && z == cplx(1, 0)) {
                // log^r|z| = 0 kills the log singularity
            } else {
                s += b * li_principal(n - r, z, side) * lp;
            }
        }
        lp *= lr;
    }
    return (n % 2) ? s.real() : s.imag();
}

// ------------------------------------------------------------- ExtendedPoint

bool ExtendedPoint::needs_side() const {
    if (!is_real(z)) return false;
    double x = z.real();
    // a log argument on the negative axis, or Li_n's own cut
    return sign1 * x < 0 || sign2 * (1 - x) < 0 || x > 1;
}

static Side scaled_side(Side s, int sign) { return sign > 0 ? s : flip(s); }

std::pair<cplx, cplx> ExtendedPoint::to_uv() const {
    if (needs_side() && side == Side::None) throw DomainError("point on a cut needs a side");
    cplx a = double(sign1) * z;
    cplx b = double(sign2) * (1.0 - z);
    cplx u = log_sided(a, scaled_side(side, sign1)) + 2.0 * kPi * kI * double(p);
    cplx v = log_sided(b, scaled_side(flip(side), sign2)) + 2.0 * kPi * kI * double(q);
    return {u, v};
}

ExtendedPoint ExtendedPoint::from_uv(cplx u, cplx v, int s1, int s2, double tol) {
    ExtendedPoint pt;
    pt.sign1 = s1;
    pt.sign2 = s2;
    cplx z = double(s1) * std::exp(u);
    if (std::abs(z.imag()) <= 1e-14 * std::abs(z)) {
        z = cplx(z.real(), 0.0);
        pt.side = Side::Above;
    }
    pt.z = z;
    if (z == cplx(0, 0) || z == cplx(1, 0)) throw DomainError("from_uv: degenerate point");
    cplx a = log_sided(double(s1) * z, scaled_side(pt.side, s1));
    cplx b = log_sided(double(s2) * (1.0 - z), scaled_side(flip(pt.side), s2));
    double fp = (u - a).imag() / (2 * kPi), fq = (v - b).imag() / (2 * kPi);
    pt.p = std::lround(fp);
    pt.q = std::lround(fq);
    double ru = std::abs(u - a - 2.0 * kPi * kI * double(pt.p));
    double rv = std::abs(v - b - 2.0 * kPi * kI * double(pt.q));
    if (ru > tol * (1 + std::abs(u)) || rv > tol * (1 + std::abs(v)))
        throw DomainError("from_uv: (u,v) does not lie on the requested component");
    return pt;
}

cplx lhat_raw(int n, const ExtendedPoint& pt) {
    if (n < 1) throw std::invalid_argument("lhat: n >= 1");
    if (pt.z == cplx(0, 0) || pt.z == cplx(1, 0)) throw DomainError("lhat at 0 or 1");
    auto [u, v] = pt.to_uv();
    Side s = pt.side;
    cplx lz = 0;
    bool need_lz = pt.q != 0;
    if (need_lz) lz = log_sided(pt.z, s);
    cplx sum = 0, ur = 1;
    double rf = 1;
    for (int r = 0; r < n; ++r) {
        int k = n - r;
        cplx lik = li_principal(k, pt.z, s);
        if (need_lz) lik -= 2.0 * kPi * kI * double(pt.q) / fact_d(k - 1) * ipow(lz, k - 1);
        double sg = (r % 2) ? -1.0 : 1.0;
        sum += sg / rf * lik * ur;
        ur *= u;
        rf *= (r + 1);
    }
    double sn = (n % 2) ? -1.0 : 1.0;
    sum -= sn / fact_d(n) * ipow(u, n - 1) * v;
    return sum;
}

cplx lhat(int n, const ExtendedPoint& pt) {
    cplx val = lhat_raw(n, pt);
    if (pt.sign1 == -1 && pt.sign2 == -1) {
        int im = is_real(pt.z) ? static_cast<int>(pt.side) : (pt.z.imag() > 0 ? 1 : -1);
        Rational half(1, 2);
        Rational c = rat_pow(-half, n - 1);
        if (im > 0) c -= rat_pow(Rational(-pt.p) - half, n - 1);
        val += lattice_unit(n) * rat_d(c);
    }
    return val;
}

cplx lhat_uv(int n, cplx u, cplx v, int sign1, int sign2) {
    return lhat(n, ExtendedPoint::from_uv(u, v, sign1, sign2));
}

// ------------------------------------------------------------------ jumps

Rational delta_fn(const Rational& p, int n) {
    Rational s = rat_pow(p - 1, n - 1) - rat_pow(p, n - 1);
    return (n % 2) ? Rational(-s) : s;
}

Rational cut_jump(int n, Interval iv, int s1, int s2, long p, long q) {
    Rational P(p), Q(q), half(1, 2);
    if (iv == Interval::NegReal) {
        if (s1 == 1 && s2 == 1) return Q * delta_fn(P + 1, n);
        if (s1 == -1 && s2 == 1) return Q * delta_fn(P + half, n);
        if (s1 == 1 && s2 == -1) return rat_pow(-P - 1, n - 1) + Q * delta_fn(P + 1, n);
        return rat_pow(-P - half, n - 1) + Q * delta_fn(P + half, n);
    }
    if (s2 == 1) return 0;
    if (s1 == 1) return rat_pow(-P, n - 1);
    return rat_pow(half - P, n - 1);
}

Rational kappa(int n) {
    if (n < 2) throw std::invalid_argument("kappa: n >= 2");
    int e;
    if (n % 2 == 0) {
        e = 2 - n;
    } else {
        int m = n - 1, nu = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++nu;
        }
        e = 3 + nu - n;
    }
    Rational r = 1;
    if (e >= 0)
        r = Rational(Int(1) << e);
    else
        r = Rational(Int(1), Int(1) << (-e));
    return r;
}

cplx lattice_unit(int n) { return ipow(2.0 * kPi * kI, n) / fact_d(n - 1); }
cplx half_lattice_unit(int n) { return ipow(kPi * kI, n) / fact_d(n - 1); }

LatticeModulus period_modulus(int n, int s1, int s2) {
    (void)s2;
    if (s1 == 1) return {lattice_unit(n)};
    return {lattice_unit(n) * rat_d(kappa(n))};
}

Congruence congruent_mod(cplx x, cplx y, const LatticeModulus& m, double tol) {
    Congruence c;
    cplx d = x - y;
    c.k = std::llround((d / m.base).real());
    c.residual = std::abs(d - double(c.k) * m.base);
    c.ok = c.residual <= tol;
    return c;
}

// ------------------------------------------------------------- comparison

Rational comparison_ci(int i) {
    Rational beta = bernoulli(i) * Rational(Int(1) << i) / Rational(factorial(i));
    Rational two_pow = (i >= 1) ? Rational(Int(1), Int(1) << (i - 1)) : Rational(2);
    return (1 - two_pow) * beta;
}

static int eta_sign(int j, int n) {
    int e = (n % 2 == 0) ? j * (j - 1) / 2 : j * (j + 1) / 2;
    return (e % 2) ? -1 : 1;
}

static int eps_sign(int j) {
    int e = (j % 2 == 0) ? j / 2 : (j + 1) / 2;
    return (e % 2) ? -1 : 1;
}

ComparisonTable comparison_table(int n) {
    ComparisonTable t;
    t.n = n;
    for (int s = 0; s <= n - 2; ++s)
        for (int i = 0; i <= s; ++i) {
            int j = s - i;
            Rational cij = 0, dij = 0;
            if (i % 2 == 0) {
                cij = comparison_ci(i) / Rational(factorial(j)) * eta_sign(j, n);
                Rational sum = 0;
                for (int r = 0; r <= i; ++r) sum += comparison_ci(r) / Rational(factorial(i + j + 2 - r));
                int sg = (((i + 2) / 2) % 2) ? -1 : 1;
                dij = sum * (sg * eps_sign(n));
            }
            t.c[{i, j}] = cij;
            if (s == n - 2) t.d[{i, j}] = dij;
        }
    return t;
}

static double re_n(int n, cplx x) { return (n % 2) ? x.real() : x.imag(); }

double comparison_residual(int n, const ExtendedPoint& pt) {
    if (n < 2 || n > 12) throw std::invalid_argument("comparison_residual: 2 <= n <= 12");
    auto tab = comparison_table(n);
    auto [u, v] = pt.to_uv();
    double lhs = re_n(n, lhat(n, pt)) - zagier_L(n, pt.z);
    double ru = u.real(), iu = u.imag();
    double rhs = 0;
    for (int s = 1; s <= n - 2; ++s) {
        double poly = 0;
        for (int i = 0; i <= s; ++i) poly += rat_d(tab.c.at({i, s - i})) * std::pow(ru, i) * std::pow(iu, s - i);
        rhs += re_n(n - s, lhat(n - s, pt)) * poly;
    }
    double det = u.real() * v.imag() - u.imag() * v.real();
    double poly = 0;
    for (int i = 0; i <= n - 2; ++i) poly += rat_d(tab.d.at({i, n - 2 - i})) * std::pow(ru, i) * std::pow(iu, n - 2 - i);
    rhs += det * poly;
    return std::abs(lhs - rhs);
}

cplx neumann_R(cplx z, long p, long q) {
    cplx lz = std::log(z), l1 = std::log(1.0 - z);
    return li_principal(2, z) + 0.5 * (lz + double(p) * kPi * kI) * (l1 - double(q) * kPi * kI) - kPi * kPi / 6.0;
}

}  // namespace pb
