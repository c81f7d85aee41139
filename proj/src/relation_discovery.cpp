#include "polybloch/relation_discovery.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pb {

OrientedRep xhat_canonical(const SymbolicLogPair& p, int n) {
    if (p.u.empty()) throw std::invalid_argument("xhat_canonical: u must be nonzero");
    LinComb neg = lc_scale(p.u, -1);
    if (p.u < neg) return {p, 1};
    return {tau_pair(p), (n % 2) ? 1 : -1};
}

std::optional<std::pair<std::size_t, int>> XhatBasis::locate(const SymbolicLogPair& p) const {
    auto c = xhat_canonical(p, n);
    auto it = index.find(c.rep);
    if (it == index.end()) return std::nullopt;
    return std::make_pair(it->second, c.sign);
}

XhatBasis xhat_basis(const MutationClass& mc, const GeneratorRegistry& names, int n) {
    if (n < 2) throw std::invalid_argument("xhat_basis: n >= 2");
    XhatBasis b;
    b.n = n;
    b.names = names;
    std::set<SymbolicLogPair> reps;
    for (auto& t : mc.triples) reps.insert(xhat_canonical(x_log_pair(mc, t), n).rep);
    b.reps.assign(reps.begin(), reps.end());
    for (std::size_t i = 0; i < b.reps.size(); ++i) b.index[b.reps[i]] = i;
    return b;
}

XhatBasis xhat_basis(const GrassmannianClass& gc, int n) { return xhat_basis(gc.mc, gc.names, n); }

XhatBasis xhat_basis(const Quiver& q0, int n, std::size_t cap) {
    auto mc = mutation_class(q0, cap);
    GeneratorRegistry names;
    for (std::size_t i = 0; i < mc.reg.size(); ++i) names.add("A" + std::to_string(i + 1));
    return xhat_basis(mc, names, n);
}

std::vector<std::size_t> basis_columns(const MutationClass& mc, const XhatBasis& b,
                                       const std::vector<std::size_t>& seeds) {
    std::set<std::size_t> in(seeds.begin(), seeds.end()), cols;
    for (auto& t : mc.triples) {
        if (!in.count(t.seed) || !in.count(t.target)) continue;
        auto loc = b.locate(x_log_pair(mc, t));
        if (!loc) throw std::logic_error("basis_columns: triple outside the basis");
        cols.insert(loc->first);
    }
    return {cols.begin(), cols.end()};
}

std::size_t support(const IntVec& v) {
    return std::size_t(std::count_if(v.begin(), v.end(), [](const Int& x) { return x != 0; }));
}

bool equal_up_to_sign(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return false;
    if (a == b) return true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != -b[i]) return false;
    return true;
}

void reduce_supports(std::vector<IntVec>& basis) {
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                for (int c : {1, -1}) {
                    IntVec cand = basis[i];
                    for (std::size_t k = 0; k < cand.size(); ++k) cand[k] += c * basis[j][k];
                    if (support(cand) < support(basis[i])) {
                        make_primitive(cand);
                        basis[i] = std::move(cand);
                        changed = true;
                    }
                }
            }
        if (!changed) break;
    }
}

std::vector<IntVec> kernel_vectors(const XhatBasis& b, const std::vector<std::size_t>& columns) {
    std::map<std::vector<std::uint32_t>, SparseIntRow> rows;
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (auto& [key, coef] : w_pair(b.n, b.reps.at(columns[c])).terms) rows[key].push_back({c, coef});
    std::vector<SparseIntRow> mat;
    mat.reserve(rows.size());
    for (auto& [k, r] : rows) mat.push_back(std::move(r));
    auto local = sparse_nullspace(mat, columns.size());
    std::vector<IntVec> out;
    for (auto& v : local) {
        IntVec full(b.dim(), 0);
        for (std::size_t c = 0; c < columns.size(); ++c) full[columns[c]] = v[c];
        out.push_back(std::move(full));
    }
    reduce_supports(out);
    return out;
}

std::vector<IntVec> kernel_vectors(const XhatBasis& b) {
    std::vector<std::size_t> all(b.dim());
    std::iota(all.begin(), all.end(), 0);
    return kernel_vectors(b, all);
}

RelationSum relation_from_vector(const XhatBasis& b, const IntVec& v) {
    RelationSum r;
    r.reg = b.names;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] != 0) {
            if (!v[c].fits_slong_p()) throw std::overflow_error("relation_from_vector: coefficient too large");
            r.add(v[c].get_si(), b.reps[c], -1, 1);
        }
    r.canonicalize();
    return r;
}

std::optional<IntVec> to_quotient(const XhatBasis& b, const RelationSum& alpha) {
    IntVec v(b.dim(), 0);
    for (auto& t : alpha.terms) {
        SymbolicLogPair p;
        // translate through names so registries need not share ids
        for (auto& [j, c] : t.pair.u) {
            auto id = b.names.find(alpha.reg.name(j));
            if (!id) return std::nullopt;
            p.u[*id] = c;
        }
        for (auto& [j, c] : t.pair.v) {
            auto id = b.names.find(alpha.reg.name(j));
            if (!id) return std::nullopt;
            p.v[*id] = c;
        }
        auto loc = b.locate(p);
        if (!loc) return std::nullopt;
        v[loc->first] += Int(long(t.coef * loc->second));
    }
    return v;
}

std::vector<RelationSum> discover_kernel(const XhatBasis& b) {
    std::vector<RelationSum> out;
    for (auto& v : kernel_vectors(b)) out.push_back(relation_from_vector(b, v));
    return out;
}

bool is_nonalt_five_instance(const RelationSum& alpha, int n) {
    if (alpha.terms.size() != 5) return false;
    long long flip = (n % 2) ? 1 : -1;
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<SymbolicLogPair> q;
        std::vector<long long> c;
        for (int i = 0; i < 5; ++i) {
            const auto& t = alpha.terms[i];
            bool f = mask >> i & 1;
            q.push_back(f ? tau_pair(t.pair) : t.pair);
            c.push_back(f ? t.coef * flip : t.coef);
        }
        if (std::abs(c[0]) != 1 || std::any_of(c.begin(), c.end(), [&](long long x) { return x != c[0]; }))
            continue;
        std::vector<int> perm{1, 2, 3, 4};
        do {
            int ord[5] = {0, perm[0], perm[1], perm[2], perm[3]};
            bool ok = true;
            for (int i = 0; i < 5 && ok; ++i) {
                const auto& prev = q[ord[(i + 4) % 5]].u;
                const auto& next = q[ord[(i + 1) % 5]].u;
                ok = q[ord[i]].v == lc_add(prev, next);
            }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

std::vector<SubclassKernel> subclass_kernels(const MutationClass& mc, const XhatBasis& b, std::size_t size,
                                             std::size_t class_size) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<SubclassKernel> out;
    for (std::size_t s = 0; s < mc.seeds.size(); ++s) {
        auto mut = mc.seeds[s].quiver.mutable_vertices();
        if (mut.size() < size) continue;
        std::vector<bool> pick(mut.size(), false);
        std::fill(pick.begin(), pick.begin() + long(size), true);
        do {
            std::vector<std::size_t> verts;
            for (std::size_t i = 0; i < mut.size(); ++i)
                if (pick[i]) verts.push_back(mut[i]);
            auto sub = sub_mutation_class(mc, s, verts);
            if (sub.size() != class_size) continue;
            std::sort(sub.begin(), sub.end());
            if (!seen.insert(sub).second) continue;
            out.push_back({sub, kernel_vectors(b, basis_columns(mc, b, sub))});
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

SpanReport subclass_span_report(const MutationClass& mc, const XhatBasis& b, std::size_t size, std::size_t class_size,
                                bool check_lattice) {
    SpanReport rep;
    auto kernel = kernel_vectors(b);
    rep.kernel_dim = kernel.size();
    auto subs = subclass_kernels(mc, b, size, class_size);
    rep.subclasses = subs.size();
    std::set<IntVec> rels;
    for (auto& s : subs)
        for (auto v : s.kernel) {
            make_primitive(v);
            rels.insert(v);
        }
    rep.distinct_relations = rels.size();
    rep.relation_terms_min = rels.empty() ? 0 : b.dim();
    for (auto& v : rels) {
        rep.relation_terms_min = std::min(rep.relation_terms_min, support(v));
        rep.relation_terms_max = std::max(rep.relation_terms_max, support(v));
    }
    std::vector<IntVec> sub_rows(rels.begin(), rels.end());
    std::vector<IntVec> both = kernel;
    both.insert(both.end(), sub_rows.begin(), sub_rows.end());
    rep.contained = rational_rank(both, b.dim()) == kernel.size();
    rep.spans = rep.contained && rational_rank(sub_rows, b.dim()) == kernel.size();
    if (check_lattice) {
        IntegerLattice lat(b.dim());
        for (auto& v : sub_rows) lat.insert(v);
        rep.lattice = std::all_of(kernel.begin(), kernel.end(), [&](const IntVec& v) { return lat.contains(v); });
    }
    return rep;
}

}  // namespace pb
