#include "polybloch/quiver_engine.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <deque>
#include <numeric>
#include <random>
#include <set>

namespace pb {

std::vector<std::size_t> Quiver::mutable_vertices() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < m; ++i)
        if (!frozen[i]) r.push_back(i);
    return r;
}

Quiver mutate_quiver(const Quiver& q, std::size_t k) {
    if (k >= q.m) throw std::out_of_range("mutate: vertex out of range");
    if (q.frozen[k]) throw FrozenVertex("mutate: vertex " + q.names[k] + " is frozen");
    Quiver r = q;
    for (std::size_t i = 0; i < q.m; ++i)
        for (std::size_t j = 0; j < q.m; ++j) {
            if (i == k || j == k) {
                r.eps[i][j] = -q.eps[i][j];
                continue;
            }
            int a = q.eps[i][k], b = q.eps[k][j];
            if (a * b > 0) r.eps[i][j] = q.eps[i][j] + std::abs(a) * b;
        }
    return r;
}

// ---------------------------------------------------------------- registry

std::size_t ACoordRegistry::intern(const LaurentPoly& p) {
    auto it = ids_.find(p);
    if (it != ids_.end()) return it->second;
    ids_.emplace(p, polys_.size());
    polys_.push_back(p);
    return polys_.size() - 1;
}

std::optional<std::size_t> ACoordRegistry::find(const LaurentPoly& p) const {
    auto it = ids_.find(p);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------- seeds

Seed initial_seed(const Quiver& q0, ACoordRegistry& reg) {
    Seed s{q0, {}};
    for (std::size_t i = 0; i < q0.m; ++i) s.coords.push_back(reg.intern(LaurentPoly::variable(q0.m, i)));
    return s;
}

LaurentPoly exchange(const Seed& s, std::size_t k, const ACoordRegistry& reg) {
    const auto& q = s.quiver;
    std::size_t nv = reg.nvars();
    LaurentPoly pos = LaurentPoly::constant(nv, 1), neg = LaurentPoly::constant(nv, 1);
    for (std::size_t j = 0; j < q.m; ++j) {
        int e = q.eps[k][j];
        if (e > 0) pos = pos * reg.poly(s.coords[j]).pow(e);
        if (e < 0) neg = neg * reg.poly(s.coords[j]).pow(-e);
    }
    return laurent_divide_exact(pos + neg, reg.poly(s.coords[k]));
}

Seed mutate_seed(const Seed& s, std::size_t k, ACoordRegistry& reg) {
    if (s.quiver.frozen.at(k)) throw FrozenVertex("mutate: vertex " + s.quiver.names[k] + " is frozen");
    Seed r{mutate_quiver(s.quiver, k), s.coords};
    r.coords[k] = reg.intern(exchange(s, k, reg));
    return r;
}

Seed canonical_seed(const Seed& s) {
    auto mut = s.quiver.mutable_vertices();
    auto sorted = mut;
    std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return s.coords[a] < s.coords[b]; });
    // position mut[i] receives the vertex sorted[i]
    std::vector<std::size_t> src(s.quiver.m);
    std::iota(src.begin(), src.end(), 0);
    for (std::size_t i = 0; i < mut.size(); ++i) src[mut[i]] = sorted[i];
    Seed r = s;
    for (std::size_t i = 0; i < s.quiver.m; ++i) {
        r.coords[i] = s.coords[src[i]];
        r.quiver.names[i] = s.quiver.names[src[i]];
        for (std::size_t j = 0; j < s.quiver.m; ++j) r.quiver.eps[i][j] = s.quiver.eps[src[i]][src[j]];
    }
    return r;
}

std::size_t MutationClass::triple_index(std::size_t seed, std::size_t k) const {
    auto it = std::lower_bound(triples.begin(), triples.end(), std::make_pair(seed, k),
                               [](const MutationTriple& t, const std::pair<std::size_t, std::size_t>& key) {
                                   return std::make_pair(t.seed, t.k) < key;
                               });
    if (it == triples.end() || it->seed != seed || it->k != k) throw std::out_of_range("no such triple");
    return std::size_t(it - triples.begin());
}

MutationClass mutation_class(const Quiver& q0, std::size_t cap) {
    MutationClass mc{q0, ACoordRegistry(q0.m), {}, {}};
    std::map<std::vector<std::size_t>, std::size_t> index;
    mc.seeds.push_back(canonical_seed(initial_seed(q0, mc.reg)));
    index[mc.seeds[0].coords] = 0;
    for (std::size_t s = 0; s < mc.seeds.size(); ++s) {
        for (std::size_t k : mc.seeds[s].quiver.mutable_vertices()) {
            Seed next = mutate_seed(mc.seeds[s], k, mc.reg);
            std::size_t nc = next.coords[k];
            Seed canon = canonical_seed(next);
            auto [it, fresh] = index.emplace(canon.coords, mc.seeds.size());
            if (fresh) {
                if (mc.seeds.size() >= cap)
                    throw CapExceeded("mutation class exceeds " + std::to_string(cap) + " seeds");
                mc.seeds.push_back(std::move(canon));
            } else if (!(mc.seeds[it->second].quiver == canon.quiver)) {
                throw std::logic_error("mutation_class: same cluster with different quivers");
            }
            mc.triples.push_back({s, k, nc, it->second});
        }
    }
    return mc;
}

std::vector<std::size_t> sub_mutation_class(const MutationClass& mc, std::size_t seed,
                                            const std::vector<std::size_t>& vertices) {
    // vertices are tracked by the A-coordinate they carry
    std::set<std::size_t> seen{seed};
    std::deque<std::pair<std::size_t, std::set<std::size_t>>> todo;
    std::set<std::size_t> live;
    for (auto v : vertices) live.insert(mc.seeds[seed].coords[v]);
    todo.push_back({seed, live});
    std::vector<std::size_t> out{seed};
    while (!todo.empty()) {
        auto [s, coords] = todo.front();
        todo.pop_front();
        const Seed& sd = mc.seeds[s];
        for (std::size_t k = 0; k < sd.quiver.m; ++k) {
            if (sd.quiver.frozen[k] || !coords.count(sd.coords[k])) continue;
            const auto& t = mc.triples[mc.triple_index(s, k)];
            if (!seen.insert(t.target).second) continue;
            auto nc = coords;
            nc.erase(sd.coords[k]);
            nc.insert(t.new_coord);
            out.push_back(t.target);
            todo.push_back({t.target, nc});
        }
    }
    return out;
}

XCoordinate x_coordinate(const MutationClass& mc, const MutationTriple& t) {
    const Seed& s = mc.seeds[t.seed];
    XCoordinate x;
    for (std::size_t j = 0; j < s.quiver.m; ++j)
        if (s.quiver.eps[t.k][j]) x = lc_add(x, lc_gen(s.coords[j], s.quiver.eps[t.k][j]));
    return x;
}

SymbolicLogPair x_log_pair(const MutationClass& mc, const MutationTriple& t) {
    const Seed& s = mc.seeds[t.seed];
    SymbolicLogPair p;
    p.u = x_coordinate(mc, t);
    p.v = lc_add(lc_gen(s.coords[t.k]), lc_gen(t.new_coord));
    for (std::size_t j = 0; j < s.quiver.m; ++j) {
        int e = s.quiver.eps[t.k][j];
        if (e < 0) p.v = lc_add(p.v, lc_gen(s.coords[j], e));
    }
    return p;
}

std::vector<XCoordinate> distinct_x_coordinates(const MutationClass& mc) {
    std::set<XCoordinate> xs;
    for (auto& t : mc.triples) xs.insert(x_coordinate(mc, t));
    return {xs.begin(), xs.end()};
}

std::map<XCoordinate, SymbolicLogPair> xhat_by_x(const MutationClass& mc) {
    std::map<XCoordinate, SymbolicLogPair> out;
    for (auto& t : mc.triples) {
        auto p = x_log_pair(mc, t);
        auto [it, fresh] = out.emplace(p.u, p);
        if (!fresh && !(it->second == p)) throw std::logic_error("xhat_by_x: pair depends on more than X");
    }
    return out;
}

// ---------------------------------------------------------------- Grassmannians

GrassmannianQuiver grassmannian_quiver(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("grassmannian_quiver: p,q >= 2");
    int n = p + q;
    std::size_t m = 1 + std::size_t(p) * q;
    GrassmannianQuiver g{p, q, Quiver(m), std::vector<std::vector<int>>(m)};
    auto vid = [&](int i, int j) { return std::size_t(1 + (i - 1) * q + (j - 1)); };
    for (int k = 1; k <= p; ++k) g.labels[0].push_back(k);
    g.quiver.frozen[0] = true;
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            std::vector<int> I;
            if (i <= j) {
                for (int k = i + 1; k <= p; ++k) I.push_back(k);
                for (int k = n + 1 - j; k <= n + i - j; ++k) I.push_back(k);
            } else {
                for (int k = 1; k <= i - j; ++k) I.push_back(k);
                for (int k = i + 1; k <= p; ++k) I.push_back(k);
                for (int k = n + 1 - j; k <= n; ++k) I.push_back(k);
            }
            std::sort(I.begin(), I.end());
            g.labels[vid(i, j)] = I;
            g.quiver.frozen[vid(i, j)] = (i == p || j == q);
        }
    auto arrow = [&](std::size_t a, std::size_t b) {
        if (g.quiver.frozen[a] && g.quiver.frozen[b]) return;
        g.quiver.add_arrow(a, b);
    };
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            if (j < q) arrow(vid(i, j), vid(i, j + 1));
            if (i < p) arrow(vid(i, j), vid(i + 1, j));
            if (i < p && j < q) arrow(vid(i + 1, j + 1), vid(i, j));
        }
    arrow(0, vid(1, 1));
    for (std::size_t v = 0; v < m; ++v) {
        std::string nm = "a";
        for (int k : g.labels[v]) nm += std::to_string(k);
        g.quiver.names[v] = nm;
    }
    return g;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int k = start; k <= n; ++k) {
            cur.push_back(k);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

using IMatrix = std::vector<std::vector<Int>>;  // p rows, n columns

Int det_exact(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d.get_num();
}

Int minor_exact(const IMatrix& m, const std::vector<int>& I) {
    std::vector<std::vector<Rational>> a(m.size(), std::vector<Rational>(I.size()));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < I.size(); ++c) a[r][c] = m[r][I[c] - 1];
    return det_exact(a);
}

std::array<Int, 3> cross(const IMatrix& m, int a, int b) {
    auto col = [&](int c, int r) { return m[r][c - 1]; };
    return {col(a, 1) * col(b, 2) - col(a, 2) * col(b, 1), col(a, 2) * col(b, 0) - col(a, 0) * col(b, 2),
            col(a, 0) * col(b, 1) - col(a, 1) * col(b, 0)};
}

Int det3(const std::array<Int, 3>& x, const std::array<Int, 3>& y, const std::array<Int, 3>& z) {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
}

Int y_exact(const IMatrix& m, int which) {
    if (which == 1) return det3(cross(m, 1, 2), cross(m, 3, 4), cross(m, 5, 6));
    return det3(cross(m, 2, 3), cross(m, 4, 5), cross(m, 6, 1));
}

Rational eval_exact(const LaurentPoly& p, const std::vector<Rational>& x) {
    Rational s = 0;
    for (auto& [e, c] : p.terms()) {
        Rational t = Rational(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) t *= rat_pow(x[i], unsigned(e[i]));
            if (e[i] < 0) t /= rat_pow(x[i], unsigned(-e[i]));
        }
        s += t;
    }
    return s;
}

IMatrix random_int_matrix(int p, int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-100000, 100000);
    IMatrix m(p, std::vector<Int>(n));
    for (auto& row : m)
        for (auto& x : row) x = Int(d(rng));
    return m;
}

std::vector<Rational> coord_values_exact(const GrassmannianClass& gc, const IMatrix& m) {
    std::vector<Rational> init;
    for (auto& I : gc.gq.labels) init.push_back(Rational(minor_exact(m, I)));
    std::vector<Rational> out;
    for (std::size_t c = 0; c < gc.mc.reg.size(); ++c) out.push_back(eval_exact(gc.mc.reg.poly(c), init));
    return out;
}

IMatrix permute_columns(const IMatrix& m, const std::vector<int>& perm) {
    IMatrix r = m;
    for (std::size_t rr = 0; rr < m.size(); ++rr)
        for (std::size_t j = 0; j < perm.size(); ++j) r[rr][j] = m[rr][perm[j]];
    return r;
}

}  // namespace

GrassmannianClass grassmannian_class(int p, int q, std::size_t cap) {
    GrassmannianClass gc{grassmannian_quiver(p, q), MutationClass{Quiver(0), ACoordRegistry(0), {}, {}}, {}};
    gc.mc = mutation_class(gc.gq.quiver, cap);
    int n = p + q;
    auto all = subsets(n, p);
    std::vector<std::vector<std::string>> cand(gc.mc.reg.size());
    for (unsigned trial = 0; trial < 2; ++trial) {
        IMatrix m = random_int_matrix(p, n, 1234 + trial);
        auto vals = coord_values_exact(gc, m);
        std::map<Rational, std::string> known;
        for (auto& I : all) {
            std::string nm = "a";
            for (int k : I) nm += std::to_string(k);
            known.emplace(Rational(minor_exact(m, I)), nm);
        }
        if (p == 3 && n == 6) {
            known.emplace(Rational(y_exact(m, 1)), "y1");
            known.emplace(Rational(y_exact(m, 2)), "y2");
        }
        for (std::size_t c = 0; c < vals.size(); ++c) {
            auto it = known.find(vals[c]);
            cand[c].push_back(it == known.end() ? std::string() : it->second);
        }
    }
    std::size_t extra = 0;
    for (std::size_t c = 0; c < cand.size(); ++c) {
        std::string nm = cand[c][0];
        if (nm.empty() || nm != cand[c][1]) nm = "c" + std::to_string(++extra);
        if (gc.names.find(nm)) throw std::logic_error("grassmannian_class: duplicate label " + nm);
        gc.names.add(nm);
    }
    return gc;
}

std::complex<double> plucker_eval(const CMatrix& m, const std::vector<int>& I) {
    Eigen::MatrixXcd sub(m.rows(), Eigen::Index(I.size()));
    for (std::size_t c = 0; c < I.size(); ++c) sub.col(Eigen::Index(c)) = m.col(I[c] - 1);
    return sub.determinant();
}

std::complex<double> y_eval(const CMatrix& m, int which) {
    auto v = [&](int c) { return Eigen::Vector3cd(m.col(c - 1)); };
    // Eigen's cross() conjugates for complex scalars
    auto cross = [](const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
        return Eigen::Vector3cd(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
    };
    auto det = [](const Eigen::Vector3cd& a, const Eigen::Vector3cd& b, const Eigen::Vector3cd& c) {
        Eigen::Matrix3cd t;
        t << a, b, c;
        return t.determinant();
    };
    if (which == 1) return det(cross(v(1), v(2)), cross(v(3), v(4)), cross(v(5), v(6)));
    return det(cross(v(2), v(3)), cross(v(4), v(5)), cross(v(6), v(1)));
}

std::vector<std::complex<double>> a_coordinate_values(const GrassmannianClass& gc, const CMatrix& m) {
    std::vector<std::complex<double>> init;
    for (auto& I : gc.gq.labels) init.push_back(plucker_eval(m, I));
    std::vector<std::complex<double>> out;
    for (std::size_t c = 0; c < gc.mc.reg.size(); ++c) {
        const std::string& nm = gc.names.name(c);
        if (nm[0] == 'a') {
            std::vector<int> I;
            for (char ch : nm.substr(1)) I.push_back(ch - '0');
            out.push_back(plucker_eval(m, I));
        } else if (nm == "y1" || nm == "y2") {
            out.push_back(y_eval(m, nm == "y1" ? 1 : 2));
        } else {
            out.push_back(gc.mc.reg.poly(c).evaluate<std::complex<double>>([&](std::size_t i, int e) {
                return std::pow(init[i], e);
            }));
        }
    }
    return out;
}

std::vector<std::size_t> coordinate_permutation(const GrassmannianClass& gc, const std::vector<int>& perm) {
    int n = gc.gq.p + gc.gq.q;
    if (int(perm.size()) != n) throw std::invalid_argument("coordinate_permutation: size");
    IMatrix m = random_int_matrix(gc.gq.p, n, 99);
    auto base = coord_values_exact(gc, m);
    auto moved = coord_values_exact(gc, permute_columns(m, perm));
    std::map<Rational, std::size_t> lookup;
    for (std::size_t c = 0; c < base.size(); ++c) lookup.emplace(base[c], c);
    std::vector<std::size_t> out(base.size());
    for (std::size_t c = 0; c < moved.size(); ++c) {
        auto it = lookup.find(moved[c]);
        if (it == lookup.end()) it = lookup.find(-moved[c]);
        if (it == lookup.end()) throw std::logic_error("coordinate_permutation: image is not an A-coordinate");
        out[c] = it->second;
    }
    return out;
}

XCoordinate permute_x(const XCoordinate& x, const std::vector<std::size_t>& coord_perm) {
    XCoordinate r;
    for (auto& [j, e] : x) r[coord_perm.at(j)] += e;
    return r;
}

std::vector<int> cyclic_perm(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
    return r;
}

std::vector<int> reflection_perm(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
    return r;
}

std::vector<std::size_t> x_orbit_sizes(const GrassmannianClass& gc, const std::vector<std::vector<int>>& gens) {
    auto xs = distinct_x_coordinates(gc.mc);
    auto rep = [](const XCoordinate& x) { return std::min(x, lc_scale(x, -1)); };
    std::set<XCoordinate> classes;
    for (auto& x : xs) classes.insert(rep(x));
    std::vector<std::vector<std::size_t>> cps;
    for (auto& g : gens) cps.push_back(coordinate_permutation(gc, g));
    std::set<XCoordinate> done;
    std::vector<std::size_t> sizes;
    for (auto& c : classes) {
        if (done.count(c)) continue;
        std::set<XCoordinate> orbit{c};
        std::deque<XCoordinate> todo{c};
        while (!todo.empty()) {
            auto x = todo.front();
            todo.pop_front();
            for (auto& cp : cps) {
                auto y = rep(permute_x(x, cp));
                if (!classes.count(y)) throw std::logic_error("x_orbit_sizes: image is not an X-coordinate");
                if (orbit.insert(y).second) todo.push_back(y);
            }
        }
        done.insert(orbit.begin(), orbit.end());
        sizes.push_back(orbit.size());
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace pb
