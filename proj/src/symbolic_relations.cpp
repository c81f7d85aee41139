#include "polybloch/symbolic_relations.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pb {

// ---------------------------------------------------------------- registry

GeneratorRegistry::GeneratorRegistry(std::vector<std::string> names) {
    for (auto& n : names) add(n);
}

std::size_t GeneratorRegistry::add(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    index_[name] = names_.size();
    names_.push_back(name);
    return names_.size() - 1;
}

std::size_t GeneratorRegistry::id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown generator " + name);
    return it->second;
}

std::optional<std::size_t> GeneratorRegistry::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------- LinComb

LinComb lc_add(const LinComb& a, const LinComb& b, long long sb) {
    LinComb r = a;
    for (auto& [j, c] : b) {
        long long& s = r[j];
        s += sb * c;
        if (s == 0) r.erase(j);
    }
    return r;
}

LinComb lc_scale(const LinComb& a, long long s) {
    if (s == 0) return {};
    LinComb r;
    for (auto& [j, c] : a) r[j] = c * s;
    return r;
}

long long lc_coeff(const LinComb& a, std::size_t j) {
    auto it = a.find(j);
    return it == a.end() ? 0 : it->second;
}

LinComb lc_gen(std::size_t j, long long c) {
    LinComb r;
    if (c) r[j] = c;
    return r;
}

SymbolicLogPair tau_pair(const SymbolicLogPair& p) { return {lc_scale(p.u, -1), lc_add(p.v, p.u, -1)}; }

LinComb parse_lincomb(GeneratorRegistry& reg, const std::string& s) {
    LinComb out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i == s.size() || s == "0") return out;
    while (i < s.size()) {
        long long sign = 1;
        skip();
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip();
        }
        long long mult = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mult = std::stoll(s.substr(i, j - i));
            i = j;
            skip();
            if (i < s.size() && s[i] == '*') ++i;
            skip();
        }
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        if (j == i) throw std::invalid_argument("bad linear combination: " + s);
        std::size_t g = reg.add(s.substr(i, j - i));
        out = lc_add(out, lc_gen(g, sign * mult));
        i = j;
        skip();
    }
    return out;
}

std::string format_lincomb(const GeneratorRegistry& reg, const LinComb& c) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [j, k] : c) {
        if (k < 0)
            out += first ? "-" : "-";
        else if (!first)
            out += "+";
        long long a = k < 0 ? -k : k;
        if (a != 1) out += std::to_string(a);
        out += reg.name(j);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- RelationSum

void RelationSum::add(long long coef, SymbolicLogPair p, int s1, int s2) {
    if (coef) terms.push_back({coef, std::move(p), s1, s2});
}

void RelationSum::canonicalize() {
    std::map<std::tuple<SymbolicLogPair, int, int>, long long> m;
    for (auto& t : terms) m[{t.pair, t.sign1, t.sign2}] += t.coef;
    terms.clear();
    for (auto& [k, c] : m)
        if (c) terms.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k)});
}

// ---------------------------------------------------------------- w_n

void OneForm::add(const std::vector<std::uint32_t>& key, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

namespace {

using Poly = std::map<std::vector<std::uint32_t>, Int>;  // sorted multiset -> coefficient

Poly poly_mul_linear(const Poly& p, const LinComb& u) {
    Poly out;
    for (auto& [m, c] : p)
        for (auto& [j, k] : u) {
            auto key = m;
            key.insert(std::upper_bound(key.begin(), key.end(), std::uint32_t(j)), std::uint32_t(j));
            Int add = c * long(k);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(std::move(key), add);
            else
                it->second += add;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Poly poly_pow(const LinComb& u, int e) {
    Poly p{{{}, Int(1)}};
    for (int i = 0; i < e; ++i) p = poly_mul_linear(p, u);
    return p;
}

void add_w(OneForm& out, int n, const SymbolicLogPair& p, const Int& coef, const std::vector<std::uint32_t>& suffix) {
    Poly um2 = poly_pow(p.u, n - 2);
    Poly um1 = poly_mul_linear(um2, p.u);
    Poly um2v = poly_mul_linear(um2, p.v);
    std::vector<std::uint32_t> key;
    for (auto& [m, c] : um1)
        for (auto& [j, l] : p.v) {
            key = m;
            key.push_back(std::uint32_t(j));
            key.insert(key.end(), suffix.begin(), suffix.end());
            out.add(key, coef * c * long(l));
        }
    for (auto& [m, c] : um2v)
        for (auto& [j, k] : p.u) {
            key = m;
            key.push_back(std::uint32_t(j));
            key.insert(key.end(), suffix.begin(), suffix.end());
            out.add(key, -coef * c * long(k));
        }
}

}  // namespace

OneForm w_pair(int n, const SymbolicLogPair& p, long long coef) {
    if (n < 2) throw std::invalid_argument("w_n: n >= 2");
    OneForm f;
    add_w(f, n, p, Int(long(coef)), {});
    return f;
}

OneForm w_form(int n, const RelationSum& alpha) {
    if (n < 2) throw std::invalid_argument("w_n: n >= 2");
    OneForm f;
    for (auto& t : alpha.terms) add_w(f, n, t.pair, Int(long(t.coef)), {});
    return f;
}

OneForm w_tensor_sym(int n, int l, const RelationSum& alpha) {
    if (n - l < 2 || l < 0) throw std::invalid_argument("w_tensor_sym: need n-l >= 2");
    OneForm f;
    for (auto& t : alpha.terms) {
        Poly ul = poly_pow(t.pair.u, l);
        for (auto& [m, c] : ul) add_w(f, n - l, t.pair, Int(long(t.coef)) * c, m);
    }
    return f;
}

RelationSum level_projection(const RelationSum& alpha, const std::vector<std::size_t>& indices) {
    RelationSum out;
    out.reg = alpha.reg;
    for (auto& t : alpha.terms) {
        long long c = t.coef;
        for (auto j : indices) c *= lc_coeff(t.pair.u, j);
        out.add(c, t.pair, t.sign1, t.sign2);
    }
    out.canonicalize();
    return out;
}

bool is_differential_relation(int n, const RelationSum& alpha) { return w_form(n, alpha).is_zero(); }

namespace {

std::vector<std::size_t> u_support(const RelationSum& alpha) {
    std::set<std::size_t> s;
    for (auto& t : alpha.terms)
        for (auto& [j, k] : t.pair.u) s.insert(j);
    return {s.begin(), s.end()};
}

// every multiset of size r drawn from gens
template <class F>
void for_multisets(const std::vector<std::size_t>& gens, int r, F&& f) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (int(pick.size()) == r) {
            f(pick);
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
            pick.push_back(gens[i]);
            rec(i);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace

DiffRelReport differential_relation_report(int n, const RelationSum& alpha) {
    DiffRelReport r;
    r.direct = w_form(n, alpha).is_zero();
    // all level l projections, l = 2..n (l = n is alpha itself)
    bool lower = true;
    auto gens = u_support(alpha);
    for (int l = 2; l < n && lower; ++l)
        for_multisets(gens, n - l, [&](const std::vector<std::size_t>& J) {
            if (!lower) return;
            if (!w_form(l, level_projection(alpha, J)).is_zero()) lower = false;
        });
    r.projections = lower && r.direct;
    r.one_lower = n > 2 ? w_tensor_sym(n, 1, alpha).is_zero() : r.direct;
    bool symk = true;
    for (int l = 1; l <= n - 2; ++l) symk = symk && w_tensor_sym(n, l, alpha).is_zero();
    r.symk = n > 2 ? symk : r.direct;
    return r;
}

WedgeElem nu(const RelationSum& alpha) {
    std::map<std::pair<std::size_t, std::size_t>, long long> off;
    std::map<std::size_t, long long> diag;
    for (auto& t : alpha.terms)
        for (auto& [a, k] : t.pair.u)
            for (auto& [b, l] : t.pair.v) {
                long long c = t.coef * k * l;
                if (a < b)
                    off[{a, b}] += c;
                else if (a > b)
                    off[{b, a}] -= c;
                else
                    diag[a] += c;
            }
    WedgeElem w;
    for (auto& [k, c] : off)
        if (c) w.off[k] = c;
    for (auto& [k, c] : diag)
        if (c % 2) w.diag[k] = 1;
    return w;
}

Ambiguity ambiguity_vector(int n, const RelationSum& alpha) {
    Ambiguity a;
    a.entries.assign(alpha.reg.size(), Int(0));
    for (auto& t : alpha.terms)
        for (auto& [j, k] : t.pair.u) {
            long long l = lc_coeff(t.pair.v, j);
            if (!l) continue;
            Int kp;
            mpz_pow_ui(kp.get_mpz_t(), Int(long(k)).get_mpz_t(), n - 1);
            if (j >= a.entries.size()) a.entries.resize(j + 1, Int(0));
            a.entries[j] += Int(long(t.coef)) * kp * long(l);
        }
    a.proper = true;
    for (auto& e : a.entries)
        if (e % n != 0) a.proper = false;
    if (n == 2) a.wedge = nu(alpha);
    return a;
}

// ---------------------------------------------------------------- permutations

int perm_sign(const std::vector<int>& image) {
    std::vector<bool> seen(image.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::vector<SignedPerm> generate_group(std::size_t k, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(k);
    for (std::size_t i = 0; i < k; ++i) id[i] = int(i);
    std::set<std::vector<int>> seen{id};
    std::deque<std::vector<int>> todo{id};
    while (!todo.empty()) {
        auto g = todo.front();
        todo.pop_front();
        for (auto& h : gens) {
            if (h.size() != k) throw std::invalid_argument("generate_group: size mismatch");
            auto x = perm_compose(h, g);
            if (seen.insert(x).second) todo.push_back(x);
        }
    }
    std::vector<SignedPerm> out;
    for (auto& g : seen) out.push_back({g, perm_sign(g)});
    return out;
}

}  // namespace pb
