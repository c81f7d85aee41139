#include "polybloch/regulator_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace pb {

namespace {

const GrassmannianClass& gr36() {
    static const GrassmannianClass gc = grassmannian_class(3, 3);
    return gc;
}

const RelationSum& eta() {
    static const RelationSum e = gr36_eta_tilde(gr36());
    return e;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> cyclic_powers(int n, int len) {
    // powers of (1 2 ... len) inside S_n
    std::vector<std::vector<int>> out;
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    for (int i = 0; i < len; ++i) c[i] = (i + 1) % len;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int j = 0; j < len; ++j) {
        out.push_back(p);
        p = perm_compose(c, p);
    }
    return out;
}

CMatrix permute_columns(const CMatrix& m, const std::vector<int>& perm) {
    CMatrix out(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) out.col(j) = m.col(perm[j]);
    return out;
}

// sort a signed label triple; returns the permutation sign, 0 if two labels coincide
int sort_with_sign(std::vector<int>& v) {
    int s = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                s = -s;
            }
        }
    return s;
}

template <class T>
int sort_wedge(std::array<T, 3>& w) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (w[i] == w[j]) return 0;
            if (w[j] < w[i]) {
                std::swap(w[i], w[j]);
                s = -s;
            }
        }
    return s;
}

Label permute_label(const Label& l, const std::vector<int>& perm, int* sign) {
    Label out;
    for (int i : l) out.push_back(perm[i - 1] + 1);
    int s = sort_with_sign(out);
    if (sign) *sign = s;
    return out;
}

double scale_of(const CMatrix& m) {
    double s = 1;
    for (int j = 0; j < m.cols(); ++j) s = std::max(s, m.col(j).norm());
    return s * s * s;
}

}  // namespace

PluckerMonomial minor_monomial(std::vector<int> cols) {
    int s = sort_with_sign(cols);
    if (s == 0) throw Degenerate("minor with repeated column");
    PluckerMonomial m;
    m.sign = s;
    m.exps[cols] = 1;
    return m;
}

PluckerMonomial mono_mul(const PluckerMonomial& a, const PluckerMonomial& b, int eb) {
    PluckerMonomial r = a;
    if (b.sign < 0 && (eb % 2)) r.sign = -r.sign;
    for (auto& [l, e] : b.exps) {
        int& x = r.exps[l];
        x += e * eb;
        if (x == 0) r.exps.erase(l);
    }
    return r;
}

PluckerMonomial mono_permute(const PluckerMonomial& m, const std::vector<int>& perm) {
    PluckerMonomial r;
    r.sign = m.sign;
    for (auto& [l, e] : m.exps) {
        int s = 1;
        Label nl = permute_label(l, perm, &s);
        if (s < 0 && (e % 2)) r.sign = -r.sign;
        int& x = r.exps[nl];
        x += e;
        if (x == 0) r.exps.erase(nl);
    }
    return r;
}

cplx mono_eval(const PluckerMonomial& m, const CMatrix& c) {
    cplx v = double(m.sign);
    for (auto& [l, e] : m.exps) v *= std::pow(plucker_eval(c, l), e);
    return v;
}

std::string format_label(const Label& l) {
    std::string s = "a";
    for (int i : l) s += std::to_string(i);
    return s;
}

std::string format_monomial(const PluckerMonomial& m) {
    std::string num, den;
    for (auto& [l, e] : m.exps)
        for (int k = 0; k < std::abs(e); ++k) (e > 0 ? num : den) += format_label(l);
    std::string s = (m.sign < 0 ? "-" : "") + (num.empty() ? std::string("1") : num);
    if (!den.empty()) s += "/(" + den + ")";
    return s;
}

PluckerMonomial parse_monomial(const std::string& num, const std::string& den) {
    PluckerMonomial m;
    auto eat = [&](const std::string& s, int e) {
        for (std::size_t i = 0; i < s.size();) {
            if (s[i] != 'a' || i + 3 >= s.size()) throw std::invalid_argument("parse_monomial: " + s);
            std::vector<int> cols{s[i + 1] - '0', s[i + 2] - '0', s[i + 3] - '0'};
            m = mono_mul(m, minor_monomial(cols), e);
            i += 4;
        }
    };
    eat(num, 1);
    eat(den, -1);
    return m;
}

GenericConfig make_config(const CMatrix& m, double tol) {
    GenericConfig c;
    c.m = m;
    c.generic = true;
    double sc = scale_of(m);
    int k = int(m.cols());
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int l = j + 1; l <= k; ++l) {
                cplx v = plucker_eval(m, {i, j, l});
                c.minors[{i, j, l}] = v;
                if (std::abs(v) <= tol * sc) c.generic = false;
            }
    if (k == 6) {
        c.y1 = y_eval(m, 1);
        c.y2 = y_eval(m, 2);
        if (std::abs(c.y1) <= tol * sc * sc || std::abs(c.y2) <= tol * sc * sc) c.generic = false;
    }
    return c;
}

std::vector<std::pair<int, std::vector<int>>> face_boundary_columns(const std::vector<int>& cols) {
    std::vector<std::pair<int, std::vector<int>>> out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<int> f;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) f.push_back(cols[j]);
        out.push_back({(i % 2) ? -1 : 1, f});
    }
    return out;
}

std::vector<SignedFace> face_boundary(const CMatrix& m) {
    if (m.cols() < 5) throw std::invalid_argument("face_boundary: need at least 5 columns");
    std::vector<int> cols(m.cols());
    std::iota(cols.begin(), cols.end(), 1);
    std::vector<SignedFace> out;
    for (auto& [s, f] : face_boundary_columns(cols)) {
        CMatrix fm(m.rows(), Eigen::Index(f.size()));
        for (std::size_t j = 0; j < f.size(); ++j) fm.col(j) = m.col(f[j] - 1);
        out.push_back({s, f, fm});
    }
    return out;
}

std::map<std::vector<int>, long long> boundary_squared(int k) {
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 1);
    std::map<std::vector<int>, long long> acc;
    for (auto& [s1, f1] : face_boundary_columns(cols))
        for (auto& [s2, f2] : face_boundary_columns(f1)) acc[f2] += s1 * s2;
    std::erase_if(acc, [](auto& kv) { return kv.second == 0; });
    return acc;
}

cplx cross_ratio(cplx x1, cplx x2, cplx x3, cplx x4) {
    cplx d = (x1 - x4) * (x2 - x3);
    if (d == cplx(0, 0)) throw Degenerate("cross_ratio: coinciding points");
    return (x1 - x3) * (x2 - x4) / d;
}

cplx cross_ratio_projected(const CMatrix& c5) {
    if (c5.rows() != 3 || c5.cols() != 5) throw std::invalid_argument("cross_ratio_projected: need 3x5");
    Eigen::Vector3cd v1 = c5.col(0);
    // w -> w x v1 is linear with kernel <v1>; its image is 2-dimensional
    int drop = 0;
    for (int r = 1; r < 3; ++r)
        if (std::abs(v1(r)) > std::abs(v1(drop))) drop = r;
    if (std::abs(v1(drop)) == 0) throw Degenerate("cross_ratio_projected: v1 = 0");
    std::array<std::array<cplx, 2>, 4> p;
    for (int j = 0; j < 4; ++j) {
        Eigen::Vector3cd w = c5.col(j + 1);
        cplx c[3] = {w(1) * v1(2) - w(2) * v1(1), w(2) * v1(0) - w(0) * v1(2), w(0) * v1(1) - w(1) * v1(0)};
        int t = 0;
        for (int r = 0; r < 3; ++r)
            if (r != drop) p[j][t++] = c[r];
    }
    auto det = [&](int a, int b) { return p[a][0] * p[b][1] - p[a][1] * p[b][0]; };
    double n = 0;
    for (int j = 0; j < 5; ++j) n = std::max(n, c5.col(j).norm());
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (std::abs(det(a, b)) <= 1e-12 * std::pow(n, 4)) throw Degenerate("cross_ratio_projected: coinciding projections");
    return det(0, 2) * det(1, 3) / (det(0, 3) * det(1, 2));
}

FormalOutput g_map(int level) {
    FormalOutput f;
    f.level = level;
    if (level == 3) {
        f.prefactor = Rational(1, 6);
        std::array<Label, 3> base{Label{1, 3, 4}, Label{1, 2, 4}, Label{1, 2, 3}};
        for (auto& p : all_perms(4)) {
            std::array<Label, 3> w;
            for (int i = 0; i < 3; ++i) w[i] = permute_label(base[i], p, nullptr);
            int s = sort_wedge(w);
            ++f.raw_terms;
            if (s) f.wedge[w] += s * perm_sign(p);
        }
        std::erase_if(f.wedge, [](auto& kv) { return kv.second == 0; });
    } else if (level == 4) {
        f.prefactor = Rational(1, 12);
        auto r = parse_monomial("a124a135", "a125a134");
        for (auto& p : all_perms(5)) {
            ++f.raw_terms;
            f.tensor[{mono_permute(r, p), permute_label({1, 2, 3}, p, nullptr)}] += perm_sign(p);
        }
        std::erase_if(f.tensor, [](auto& kv) { return kv.second == 0; });
    } else if (level == 5) {
        f.prefactor = Rational(1, 90);
        auto x = parse_monomial("a124a235a136", "a125a236a134");
        for (auto& p : all_perms(6)) {
            ++f.raw_terms;
            f.points[mono_permute(x, p)] += perm_sign(p);
        }
        std::erase_if(f.points, [](auto& kv) { return kv.second == 0; });
    } else {
        throw std::invalid_argument("g_map: level must be 3, 4 or 5");
    }
    return f;
}

FormalOutput f3_labels() {
    FormalOutput f;
    f.level = 3;
    std::array<Label, 3> base{Label{1, 3, 4}, Label{1, 2, 4}, Label{1, 2, 3}};
    for (auto& p : cyclic_powers(4, 4)) {
        std::array<Label, 3> w;
        int lsign = 1;
        for (int i = 0; i < 3; ++i) {
            int s = 1;
            w[i] = permute_label(base[i], p, &s);
            lsign *= s;
        }
        if (lsign != 1) throw std::logic_error("f3: cyclic relabelling changed a minor's sign");
        int s = sort_wedge(w);
        ++f.raw_terms;
        if (s) f.wedge[w] += s * perm_sign(p);
    }
    std::erase_if(f.wedge, [](auto& kv) { return kv.second == 0; });
    return f;
}

std::vector<LiftedTensorTerm> f4_terms() {
    auto x = parse_monomial("a125a134", "a123a145");
    auto x1 = parse_monomial("a124a135", "a123a145");
    std::vector<LiftedTensorTerm> out;
    for (auto& p : cyclic_powers(5, 5)) {
        LiftedTensorTerm t;
        t.coef = perm_sign(p);
        t.x = mono_permute(x, p);
        t.one_plus_x = mono_permute(x1, p);
        if (t.x.sign != 1 || t.one_plus_x.sign != 1) throw std::logic_error("f4: cyclic relabelling changed a sign");
        for (Label l : {Label{1, 2, 3}, Label{1, 4, 5}}) {
            int s = 1;
            t.tensor = permute_label(l, p, &s);
            if (s != 1) throw std::logic_error("f4: cyclic relabelling changed a sign");
            out.push_back(t);
        }
    }
    return out;
}

double L3_of_g5(const CMatrix& m) {
    auto g = g_map(5);
    double s = 0;
    for (auto& [x, c] : g.points) s += double(c) * zagier_L(3, mono_eval(x, m));
    return s * g.prefactor.get_d();
}

Realization f5_realization(const CMatrix& m) { return grassmannian_realization(gr36(), eta(), m); }

cplx lhat3_of_f5(const CMatrix& m) { return evaluate_relation(3, eta(), f5_realization(m)).value; }

MultisetComparison compare_multisets(const WeightedPoints& a, const WeightedPoints& b, double tol) {
    struct Cluster {
        cplx z;
        Rational ca = 0, cb = 0;
        int hits = 0;
    };
    std::vector<Cluster> cl;
    auto insert = [&](const Rational& c, cplx z, bool left) {
        for (auto& k : cl)
            if (std::abs(k.z - z) <= tol * std::max(1.0, std::abs(z))) {
                (left ? k.ca : k.cb) += c;
                ++k.hits;
                return;
            }
        cl.push_back({z, left ? c : Rational(0), left ? Rational(0) : c, 1});
    };
    MultisetComparison r;
    for (auto& [c, z] : a) insert(c, z, true);
    std::size_t after_a = cl.size();
    for (auto& [c, z] : b) insert(c, z, false);
    r.match = true;
    for (std::size_t i = 0; i < cl.size(); ++i) {
        auto& k = cl[i];
        if (k.ca != 0) ++r.lhs_terms;
        if (k.cb != 0) ++r.rhs_terms;
        if (i < after_a && k.hits > 1) ++r.collisions;
        Rational d = k.ca - k.cb;
        r.max_coef_diff = std::max(r.max_coef_diff, std::abs(d.get_d()));
        if (d != 0) r.match = false;
    }
    return r;
}

WeightedPoints identify(const WeightedPoints& pts, Identify how) {
    WeightedPoints out;
    for (auto [c, z] : pts) {
        if (how == Identify::inversion) {
            if (std::abs(z) > 1 || (std::abs(z) == 1 && z.imag() < 0)) z = 1.0 / z;
        } else if (how == Identify::anharmonic) {
            // orbit of z under z -> 1/(1-z) (sign +) and z -> 1/z (sign -); pick the lexicographically least
            cplx best = z;
            int sbest = 1;
            cplx w = z;
            for (int k = 0; k < 3; ++k) {
                for (int inv = 0; inv < 2; ++inv) {
                    cplx v = inv ? 1.0 / w : w;
                    int s = inv ? -1 : 1;
                    if (v.real() < best.real() - 1e-12 ||
                        (std::abs(v.real() - best.real()) <= 1e-12 && v.imag() < best.imag())) {
                        best = v;
                        sbest = s;
                    }
                }
                w = 1.0 / (1.0 - w);
            }
            z = best;
            if (sbest < 0) c = -c;
        }
        out.push_back({c, z});
    }
    return out;
}

WeightedPoints alt6_r_f5(const CMatrix& m, bool triple_only) {
    WeightedPoints out;
    const auto& e = eta();
    for (auto& p : all_perms(6)) {
        auto vals = a_coordinate_values(gr36(), permute_columns(m, p));
        int s = perm_sign(p);
        for (auto& t : e.terms) {
            if (triple_only && t.pair.u.size() != 6) continue;
            cplx x = 1;
            for (auto& [g, k] : t.pair.u) x *= std::pow(vals[g], int(k));
            out.push_back({Rational(long(s * t.coef), 720L), double(t.sign1) * x});
        }
    }
    return out;
}

WeightedPoints g5_points(const CMatrix& m) {
    WeightedPoints out;
    auto x = parse_monomial("a124a235a136", "a125a236a134");
    for (auto& p : all_perms(6)) out.push_back({Rational(perm_sign(p), 90), mono_eval(x, permute_columns(m, p))});
    return out;
}

Alt6Comparison compare_alt6(const CMatrix& m) {
    Alt6Comparison r;
    auto lhs = alt6_r_f5(m), rhs = g5_points(m);
    r.raw = compare_multisets(lhs, rhs);
    r.triple_part = compare_multisets(alt6_r_f5(m, true), rhs);
    r.modulo_inversion = compare_multisets(identify(lhs, Identify::inversion), identify(rhs, Identify::inversion));
    return r;
}

double bloch_wigner_sum(const WeightedPoints& pts) {
    double s = 0;
    for (auto& [c, z] : pts) s += c.get_d() * zagier_L(2, z);
    return s;
}

namespace {

struct Term {
    int coef;
    const char* num;
    const char* den;
};

WeightedPoints x_coordinate_terms(const CMatrix& m, std::initializer_list<Term> ts) {
    // r(X^(X)) = -X
    WeightedPoints out;
    for (auto& t : ts) out.push_back({Rational(t.coef), -mono_eval(parse_monomial(t.num, t.den), m)});
    return out;
}

void ft_plus(WeightedPoints& out, int coef, cplx x, cplx y) {
    for (cplx z : {-x, -y, -(1.0 + y) / x, -(1.0 + x + y) / (x * y), -(1.0 + x) / y}) out.push_back({Rational(coef), z});
}

cplx mv(const CMatrix& m, const char* num, const char* den) { return mono_eval(parse_monomial(num, den), m); }

}  // namespace

WeightedPoints R1_points(const CMatrix& m) {
    return x_coordinate_terms(m, {{1, "a123a245", "a125a234"},
                                  {1, "a125a134", "a123a145"},
                                  {1, "a135a234", "a123a345"},
                                  {1, "a126a135", "a123a156"},
                                  {-1, "a126a134", "a123a146"},
                                  {1, "a123a156a245", "a126a145a235"},
                                  {1, "a136a145a235", "a123a156a345"},
                                  {1, "a123a146a345", "a136a145a234"},
                                  {1, "a126a145a234", "a123a146a245"}});
}

WeightedPoints R2_points(const CMatrix& m) {
    return x_coordinate_terms(m, {{1, "a145a235", "a125a345"},
                                  {1, "a136a145", "a134a156"},
                                  {-1, "a126a145", "a124a156"},
                                  {1, "a125a134", "a123a145"},
                                  {1, "a124a345", "a145a234"},
                                  {-1, "a123a156a245", "a126a145a235"},
                                  {-1, "a136a145a235", "a123a156a345"},
                                  {-1, "a123a146a345", "a136a145a234"},
                                  {-1, "a126a145a234", "a123a146a245"}});
}

WeightedPoints x_points(const CMatrix& m) {
    WeightedPoints out;
    ft_plus(out, 1, mv(m, "a125a134", "a123a145"), mv(m, "a126a135", "a123a156"));
    ft_plus(out, 1, mv(m, "a134a156", "a136a145"), mv(m, "a135a234", "a123a345"));
    ft_plus(out, -1, mv(m, "a124a156", "a126a145"), mv(m, "a125a234", "a123a245"));
    return out;
}

WeightedPoints y_points(const CMatrix& m) {
    WeightedPoints out;
    ft_plus(out, 1, mv(m, "a125a134", "a123a145"), mv(m, "a126a135", "a123a156"));
    ft_plus(out, -1, mv(m, "a126a135", "a123a156"), mv(m, "a125a345", "a145a235"));
    ft_plus(out, 1, mv(m, "a126a134", "a123a146"), mv(m, "a124a345", "a145a234"));
    return out;
}

namespace {

struct AlphaBeta {
    cplx a[3], b[3];
    AlphaBeta(cplx a1, cplx a2, cplx a3) : a{a1, a2, a3} {
        for (int i = 0; i < 3; ++i) b[i] = 1.0 - a[i] * (1.0 - a[(i + 2) % 3]);
    }
    cplx A(int i) const { return a[((i % 3) + 3) % 3]; }
    cplx B(int i) const { return b[((i % 3) + 3) % 3]; }
};

}  // namespace

WeightedPoints R1i_points(int i, cplx a1, cplx a2, cplx a3) {
    AlphaBeta ab(a1, a2, a3);
    auto A = [&](int d) { return ab.A(i + d); };
    auto B = [&](int d) { return ab.B(i + d); };
    return {{1, A(0)},
            {-1, B(0) / (A(-1) * A(0))},
            {1, A(0) * B(-1) / B(1)},
            {-1, -B(0) / (A(0) * B(-1))},
            {-1, A(-1) * A(0) * B(1) / B(0)},
            {-1, A(0) / B(1)},
            {-1, B(1) / (A(0) * A(1))},
            {-1, A(0) * A(1) * B(-1) / B(1)},
            {1, -a1 * a2 * a3}};
}

WeightedPoints R2i_points(int i, cplx a1, cplx a2, cplx a3) {
    AlphaBeta ab(a1, a2, a3);
    auto A = [&](int d) { return ab.A(i + d); };
    auto B = [&](int d) { return ab.B(i + d); };
    return {{1, B(0)},
            {1, A(-1) / B(0)},
            {1, B(0) / (A(-1) * A(0))},
            {1, -B(0) / (A(0) * B(-1))},
            {1, A(-1) * A(0) * B(1) / B(0)},
            {1, A(1) * B(0) / B(-1)},
            {-1, -B(1) / (A(1) * B(0))},
            {-1, A(-1) * B(1) / B(0)},
            {-1, A(-1) * A(1) * B(0) / B(-1)}};
}

ConsistencyReport consistency_checks(const CMatrix& c6, std::array<cplx, 3> alpha) {
    if (!make_config(c6).generic) throw Degenerate("consistency_checks: non-generic configuration");
    ConsistencyReport r;
    auto r1 = R1_points(c6), r2 = R2_points(c6), x = x_points(c6), y = y_points(c6);
    r.L2_R1 = std::abs(bloch_wigner_sum(r1));
    r.L2_R2 = std::abs(bloch_wigner_sum(r2));
    r.x_vs_R1_raw = compare_multisets(x, r1);
    r.y_vs_R2_raw = compare_multisets(y, r2);
    r.x_vs_R1 = compare_multisets(identify(x, Identify::anharmonic), identify(r1, Identify::anharmonic));
    r.y_vs_R2 = compare_multisets(identify(y, Identify::anharmonic), identify(r2, Identify::anharmonic));
    r.ft_arguments = x.size() + y.size();
    for (int i = 0; i < 3; ++i) {
        r.L2_R1i = std::max(r.L2_R1i, std::abs(bloch_wigner_sum(R1i_points(i, alpha[0], alpha[1], alpha[2]))));
        r.L2_R2i = std::max(r.L2_R2i, std::abs(bloch_wigner_sum(R2i_points(i, alpha[0], alpha[1], alpha[2]))));
    }
    r.pass = r.L2_R1 < 1e-8 && r.L2_R2 < 1e-8 && r.L2_R1i < 1e-8 && r.L2_R2i < 1e-8 && r.x_vs_R1.match &&
             r.y_vs_R2.match;
    return r;
}

BoundaryCheck boundary_check(const CMatrix& c7) {
    if (c7.rows() != 3 || c7.cols() != 7) throw std::invalid_argument("boundary_check: need 3x7");
    BoundaryCheck b;
    cplx sum = 0;
    for (auto& f : face_boundary(c7)) {
        if (!make_config(f.m).generic) throw Degenerate("boundary_check: non-generic face");
        sum += double(f.sign) * lhat3_of_f5(f.m);
        b.L3_g5 += f.sign * L3_of_g5(f.m);
    }
    b.L3_g5 = std::abs(b.L3_g5);
    cplx unit = std::pow(cplx(0, kPi), 3) / 2.0;
    cplx q = sum / unit;
    b.multiple = std::llround(q.real());
    b.lhat_residual = std::abs(sum - double(b.multiple) * unit);
    return b;
}

RegulatorReport regulator_suite(std::uint64_t seed, int configs6, int configs7) {
    RegulatorReport r;
    r.dd_zero = boundary_squared(6).empty() && boundary_squared(7).empty();
    std::mt19937_64 rng(seed * 1000003 + 7);
    std::normal_distribution<double> nd;
    r.multisets_match = true;
    for (int t = 0; t < configs6; ++t) {
        CMatrix m;
        do m = random_matrix(3, 6, rng);
        while (!make_config(m).generic);
        std::array<cplx, 3> al{cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng)), cplx(nd(rng), nd(rng))};
        auto c = consistency_checks(m, al);
        auto c0 = consistency_checks(m);
        r.max_L2 = std::max({r.max_L2, c.L2_R1, c.L2_R2, c.L2_R1i, c.L2_R2i, c0.L2_R1i, c0.L2_R2i});
        if (!c.x_vs_R1.match || !c.y_vs_R2.match) r.multisets_match = false;
        if (!compare_alt6(m).pass()) r.multisets_match = false;
    }
    for (int t = 0; t < configs7; ++t) {
        CMatrix m;
        do m = random_matrix(3, 7, rng);
        while (!make_config(m).generic);
        auto b = boundary_check(m);
        r.max_boundary_residual = std::max(r.max_boundary_residual, b.lhat_residual);
        r.max_L3_boundary = std::max(r.max_L3_boundary, b.L3_g5);
    }
    r.pass = r.dd_zero && r.max_L2 < 1e-8 && r.multisets_match && r.max_boundary_residual < 1e-7 &&
             r.max_L3_boundary < 1e-7;
    return r;
}

}  // namespace pb
