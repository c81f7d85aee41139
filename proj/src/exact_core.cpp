#include "polybloch/exact_core.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <string>
#include <sstream>

namespace pb {

Rational bernoulli(unsigned r) {
    // sum_{j<=m} C(m+1,j) B_j = 0
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= r) {
        unsigned m = cache.size();
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[r];
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational rat_pow(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

Rational rat_gcd(const std::vector<Rational>& xs) {
    Int den = 1;
    for (auto& x : xs) den = lcm(den, Int(x.get_den()));
    Int g = 0;
    for (auto& x : xs) {
        Rational y = x * den;
        g = gcd(g, Int(y.get_num()));
    }
    Rational out(g, den);
    out.canonicalize();
    return abs(out);
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Int& c) {
    LaurentPoly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int power) {
    Exp e(nvars, 0);
    e.at(i) = power;
    return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const Int& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
    if (e.size() != nvars_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    if (r.nvars_ == 0 && r.terms_.empty()) r.nvars_ = o.nvars_;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(std::max(nvars_, o.nvars_));
    Exp e(r.nvars_);
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return terms_ < o.terms_;
}

std::pair<LaurentPoly::Exp, LaurentPoly::Exp> LaurentPoly::degree_box() const {
    if (terms_.empty()) throw std::invalid_argument("degree_box of zero polynomial");
    Exp lo = terms_.begin()->first, hi = lo;
    for (auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) {
            lo[i] = std::min(lo[i], e[i]);
            hi[i] = std::max(hi[i], e[i]);
        }
    return {lo, hi};
}

static unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return (unsigned long long)((unsigned __int128)a * b % m);
}

static unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

unsigned long long LaurentPoly::eval_mod(const std::vector<unsigned long long>& pt, unsigned long long prime) const {
    std::vector<unsigned long long> inv(pt.size());
    for (std::size_t i = 0; i < pt.size(); ++i) inv[i] = powmod(pt[i], prime - 2, prime);
    unsigned long long s = 0;
    Int pz = (unsigned long)prime;
    for (auto& [e, c] : terms_) {
        Int cm = c % pz;
        if (cm < 0) cm += pz;
        unsigned long long t = cm.get_ui();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) t = mulmod(t, powmod(pt[i], e[i], prime), prime);
            else if (e[i] < 0) t = mulmod(t, powmod(inv[i], -e[i], prime), prime);
        }
        s = (s + t) % prime;
    }
    return s;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = true;
        for (int x : e) unit = unit && x == 0;
        Int a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool wrote = false;
        if (a != 1 || unit) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (wrote) os << "*";
            os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (e[i] != 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

LaurentPoly laurent_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("laurent_divide_exact: zero divisor");
    std::size_t nv = std::max(num.nvars(), den.nvars());
    LaurentPoly q(nv);
    if (num.is_zero()) return q;
    // every quotient exponent lies in this box, since per-variable degree ranges add
    auto [nlo, nhi] = num.degree_box();
    auto [dlo, dhi] = den.degree_box();
    LaurentPoly::Exp qlo(nv), qhi(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        qlo[i] = nlo[i] - dlo[i];
        qhi[i] = nhi[i] - dhi[i];
        if (qlo[i] > qhi[i]) throw NonDivisible("laurent_divide_exact: degree box empty");
    }
    const auto& [dle, dlc] = *den.terms().rbegin();
    LaurentPoly rem = num;
    LaurentPoly::Exp t(nv);
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        if (!mpz_divisible_p(rc.get_mpz_t(), dlc.get_mpz_t()))
            throw NonDivisible("laurent_divide_exact: coefficient not divisible");
        for (std::size_t i = 0; i < nv; ++i) {
            t[i] = re[i] - dle[i];
            if (t[i] < qlo[i] || t[i] > qhi[i]) throw NonDivisible("laurent_divide_exact: not a Laurent quotient");
        }
        Int c = rc / dlc;
        q.add_term(t, c);
        LaurentPoly step = LaurentPoly::monomial(t, c) * den;
        rem = rem - step;
    }
    return q;
}

// ------------------------------------------------------------------ echelon

void make_primitive(IntVec& v) {
    Int g = 0;
    for (auto& x : v) {
        if (x != 0) g = gcd(g, x);
        if (g == 1) break;
    }
    if (g == 0) return;
    bool neg = false;
    for (auto& x : v)
        if (x != 0) {
            neg = x < 0;
            break;
        }
    if (neg) g = -g;
    if (g != 1)
        for (auto& x : v)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

static std::size_t lead(const IntVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

bool IncrementalEchelon::add_row(IntVec row) {
    if (row.size() != cols_) throw std::invalid_argument("IncrementalEchelon: row length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (row[p] == 0) continue;
        const IntVec& r = rows_[i];
        Int g = gcd(r[p], row[p]);
        Int a = r[p] / g, b = row[p] / g;
        for (std::size_t j = 0; j < cols_; ++j) row[j] = row[j] * a - r[j] * b;
        make_primitive(row);
    }
    std::size_t l = lead(row);
    if (l == cols_) return false;
    make_primitive(row);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), l) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, l);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool IncrementalEchelon::add_sparse_row(const std::vector<std::pair<std::size_t, Int>>& entries) {
    IntVec row(cols_);
    for (auto& [j, c] : entries) row.at(j) += c;
    return add_row(std::move(row));
}

std::vector<IntVec> IncrementalEchelon::nullspace() const {
    // back-substitute to reduced form over Q
    std::size_t r = rows_.size();
    std::vector<std::vector<Rational>> R(r, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < r; ++i) {
        Rational piv = Rational(rows_[i][pivots_[i]]);
        for (std::size_t j = 0; j < cols_; ++j) R[i][j] = Rational(rows_[i][j]) / piv;
    }
    for (std::size_t i = r; i-- > 0;) {
        std::size_t p = pivots_[i];
        for (std::size_t k = 0; k < i; ++k) {
            if (R[k][p] == 0) continue;
            Rational f = R[k][p];
            for (std::size_t j = p; j < cols_; ++j) R[k][j] -= f * R[i][j];
        }
    }
    std::vector<bool> is_piv(cols_, false);
    for (auto p : pivots_) is_piv[p] = true;
    std::vector<IntVec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivots_[i]] = -R[i][f];
        Int den = 1;
        for (auto& x : v) den = lcm(den, Int(x.get_den()));
        IntVec iv(cols_);
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational y = v[j] * den;
            iv[j] = y.get_num();
        }
        make_primitive(iv);
        out.push_back(std::move(iv));
    }
    return out;
}

std::vector<IntVec> rational_nullspace(const RatMatrix& m) {
    IncrementalEchelon ech(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int den = 1;
        for (std::size_t j = 0; j < m.cols; ++j) den = lcm(den, Int(m(i, j).get_den()));
        IntVec row(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) {
            Rational y = m(i, j) * den;
            row[j] = y.get_num();
        }
        ech.add_row(std::move(row));
    }
    return ech.nullspace();
}

std::size_t rational_rank(const std::vector<IntVec>& rows, std::size_t cols) {
    IncrementalEchelon ech(cols);
    for (auto& r : rows) ech.add_row(r);
    return ech.rank();
}

// ------------------------------------------------------------------ lattice

void IntegerLattice::insert(IntVec v) {
    if (v.size() != cols_) throw std::invalid_argument("IntegerLattice: length");
    while (true) {
        std::size_t c = lead(v);
        if (c == cols_) return;
        auto it = std::find(piv_.begin(), piv_.end(), c);
        if (it == piv_.end()) {
            if (v[c] < 0)
                for (auto& x : v) x = -x;
            auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
            piv_.insert(piv_.begin() + pos, c);
            rows_.insert(rows_.begin() + pos, std::move(v));
            return;
        }
        IntVec& r = rows_[it - piv_.begin()];
        if (mpz_divisible_p(v[c].get_mpz_t(), r[c].get_mpz_t())) {
            Int f = v[c] / r[c];
            for (std::size_t j = c; j < cols_; ++j) v[j] -= f * r[j];
            continue;
        }
        // unimodular 2x2 step: new pivot gcd(r[c], v[c])
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[c].get_mpz_t(), v[c].get_mpz_t());
        Int a = r[c] / g, b = v[c] / g;
        IntVec nr(cols_), nv(cols_);
        for (std::size_t j = c; j < cols_; ++j) {
            nr[j] = s * r[j] + t * v[j];
            nv[j] = a * v[j] - b * r[j];
        }
        if (nr[c] < 0)
            for (auto& x : nr) x = -x;
        r = std::move(nr);
        v = std::move(nv);
    }
}

bool IntegerLattice::contains(IntVec v) const {
    if (v.size() != cols_) return false;
    while (true) {
        std::size_t c = lead(v);
        if (c == cols_) return true;
        auto it = std::find(piv_.begin(), piv_.end(), c);
        if (it == piv_.end()) return false;
        const IntVec& r = rows_[it - piv_.begin()];
        if (!mpz_divisible_p(v[c].get_mpz_t(), r[c].get_mpz_t())) return false;
        Int f = v[c] / r[c];
        for (std::size_t j = c; j < cols_; ++j) v[j] -= f * r[j];
    }
}

}  // namespace pb

// ------------------------------------------------------------------ modular nullspace

namespace pb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return u64((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

u64 residue(const Int& x, u64 p) {
    static_assert(sizeof(unsigned long) == 8);
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

std::vector<u64> prime_list(std::size_t count) {
    std::vector<u64> out;
    Int x = Int(1) << 62;
    x -= 1;
    while (out.size() < count) {
        x -= 2;
        if (mpz_probab_prime_p(x.get_mpz_t(), 30)) out.push_back(std::stoull(x.get_str()));
    }
    return out;
}

struct ModNull {
    std::vector<std::size_t> pivots;
    std::vector<std::vector<u64>> basis;  // one per free column
};

ModNull mod_nullspace(const std::vector<SparseIntRow>& rows, std::size_t cols, u64 p, std::mt19937_64& rng) {
    std::size_t k = std::min(rows.size(), cols + 8);
    std::vector<std::vector<u64>> m(k, std::vector<u64>(cols, 0));
    std::vector<std::vector<std::pair<std::size_t, u64>>> red(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [j, c] : rows[r]) red[r].push_back({j, residue(c, p)});
    if (rows.size() <= cols + 8) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (auto& [j, c] : red[r]) m[r][j] = (m[r][j] + c) % p;
    } else {
        std::uniform_int_distribution<u64> dist(1, p - 1);
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t r = 0; r < rows.size(); ++r) {
                u64 c = dist(rng);
                for (auto& [j, v] : red[r]) m[b][j] = (m[b][j] + mulmod(c, v, p)) % p;
            }
    }
    // reduced row echelon form
    ModNull out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < k; ++c) {
        std::size_t sel = row;
        while (sel < k && m[sel][c] == 0) ++sel;
        if (sel == k) continue;
        std::swap(m[sel], m[row]);
        u64 inv = powmod(m[row][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) m[row][j] = mulmod(m[row][j], inv, p);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || m[i][c] == 0) continue;
            u64 f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[row][j]) m[i][j] = (m[i][j] + p - mulmod(f, m[row][j], p)) % p;
        }
        out.pivots.push_back(c);
        ++row;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : out.pivots) is_piv[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<u64> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < out.pivots.size(); ++i) v[out.pivots[i]] = m[i][f] ? p - m[i][f] : 0;
        out.basis.push_back(std::move(v));
    }
    return out;
}

bool rational_reconstruct(const Int& a, const Int& mod, Rational& out) {
    Int bound;
    Int half = mod / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    Int r0 = mod, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    if (abs(t1) > bound || t1 == 0 || gcd(r1, t1) != 1) return false;
    out = Rational(r1, t1);
    out.canonicalize();
    return true;
}

}  // namespace

std::vector<IntVec> sparse_nullspace(const std::vector<SparseIntRow>& rows, std::size_t cols, std::uint64_t seed) {
    if (cols == 0) return {};
    if (rows.empty()) {
        std::vector<IntVec> out;
        for (std::size_t f = 0; f < cols; ++f) {
            IntVec v(cols, 0);
            v[f] = 1;
            out.push_back(std::move(v));
        }
        return out;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto primes = prime_list(24);
    std::vector<std::size_t> pivots;
    std::vector<IntVec> acc;
    Int mod = 0;
    for (u64 p : primes) {
        auto mn = mod_nullspace(rows, cols, p, rng);
        if (mod == 0 || mn.pivots.size() > pivots.size()) {
            // first prime, or a larger rank shows the earlier ones were unlucky
            pivots = mn.pivots;
            acc.assign(mn.basis.size(), IntVec(cols, 0));
            for (std::size_t b = 0; b < mn.basis.size(); ++b)
                for (std::size_t j = 0; j < cols; ++j) acc[b][j] = Int(std::to_string(mn.basis[b][j]));
            mod = Int(std::to_string(p));
        } else if (mn.pivots != pivots) {
            continue;
        } else {
            Int P(std::to_string(p));
            Int inv;
            mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), P.get_mpz_t());
            for (std::size_t b = 0; b < acc.size(); ++b)
                for (std::size_t j = 0; j < cols; ++j) {
                    Int a = acc[b][j];
                    Int d = Int(std::to_string(mn.basis[b][j])) - a;
                    Int t = d * inv;
                    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
                    acc[b][j] = a + mod * t;
                }
            mod *= P;
        }
        // try to lift
        std::vector<IntVec> cand;
        bool ok = true;
        for (std::size_t b = 0; b < acc.size() && ok; ++b) {
            std::vector<Rational> q(cols);
            Int den = 1;
            for (std::size_t j = 0; j < cols && ok; ++j) {
                ok = rational_reconstruct(acc[b][j], mod, q[j]);
                if (ok) den = lcm(den, Int(q[j].get_den()));
            }
            if (!ok) break;
            IntVec v(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                Rational y = q[j] * den;
                v[j] = y.get_num();
            }
            make_primitive(v);
            cand.push_back(std::move(v));
        }
        if (!ok) continue;
        for (auto& r : rows) {
            for (auto& v : cand) {
                Int s = 0;
                for (auto& [j, c] : r) s += c * v[j];
                if (s != 0) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) return cand;
    }
    // exact fallback
    IncrementalEchelon ech(cols);
    for (auto& r : rows) ech.add_sparse_row(r);
    return ech.nullspace();
}

}  // namespace pb
