#include <functional>
#include <memory>
#include <stdexcept>

#include "polybloch/quiver_engine.hpp"
#include "polybloch/symbolic_relations.hpp"

namespace pb {

namespace {

struct Builder {
    RelationSum r;
    void term(long long c, const std::string& u, const std::string& v, int s1 = 0, int s2 = 0) {
        SymbolicLogPair p{parse_lincomb(r.reg, u), parse_lincomb(r.reg, v)};
        r.add(c, std::move(p), s1, s2);
    }
};

cplx pi_i_pow(int n) { return std::pow(kPi * kI, n); }

RelationSum r40_sum() {
    auto gc = grassmannian_class(3, 3);
    return gr36_r40(gc);
}

}  // namespace

namespace {

FormalSum<XCoordinate> gr36_eta_x(const GrassmannianClass& gc) {
    auto xhat = xhat_by_x(gc.mc);
    auto mono = [&](std::initializer_list<const char*> num, std::initializer_list<const char*> den) {
        XCoordinate x;
        for (auto* a : num) x = lc_add(x, lc_gen(gc.names.id(a)));
        for (auto* a : den) x = lc_add(x, lc_gen(gc.names.id(a), -1));
        if (!xhat.count(x)) throw std::logic_error("eta: not an X-coordinate");
        return x;
    };
    FormalSum<XCoordinate> core;
    core[mono({"a156", "a236", "a345"}, {"a136", "a235", "a456"})] += 1;
    core[mono({"a126", "a145"}, {"a124", "a156"})] -= 1;
    core[mono({"a136", "a145"}, {"a134", "a156"})] += 1;
    FormalSum<XCoordinate> tail;
    tail[mono({"a136", "a145", "a235"}, {"a123", "a156", "a345"})] += 1;
    auto act = gr36_column_action(gc);
    auto sigma = cyclic_perm(6), tau = reflection_perm(6);
    auto eta = alt_apply(generate_group(6, {perm_compose(sigma, sigma), tau}), core, act);
    for (auto& [x, c] : alt_apply(generate_group(6, {tau}), tail, act)) eta[x] -= c;
    std::erase_if(eta, [](auto& kv) { return kv.second == 0; });
    return eta;
}

RelationSum to_relation(const GrassmannianClass& gc, const FormalSum<XCoordinate>& xs) {
    auto xhat = xhat_by_x(gc.mc);
    RelationSum r;
    r.reg = gc.names;
    for (auto& [x, c] : xs) {
        if (!c) continue;
        auto it = xhat.find(x);
        if (it == xhat.end()) throw std::logic_error("permuted monomial is not an X-coordinate");
        r.add(c, it->second, -1, 1);
    }
    r.canonicalize();
    return r;
}

}  // namespace

std::function<XCoordinate(const std::vector<int>&, const XCoordinate&)> gr36_column_action(const GrassmannianClass& gc) {
    auto cache = std::make_shared<std::map<std::vector<int>, std::vector<std::size_t>>>();
    return [cache, &gc](const std::vector<int>& g, const XCoordinate& x) {
        auto it = cache->find(g);
        if (it == cache->end()) it = cache->emplace(g, coordinate_permutation(gc, g)).first;
        return permute_x(x, it->second);
    };
}

RelationSum gr36_eta_tilde(const GrassmannianClass& gc) { return to_relation(gc, gr36_eta_x(gc)); }

RelationSum gr36_r40(const GrassmannianClass& gc) {
    auto eta = gr36_eta_x(gc);
    auto act = gr36_column_action(gc);
    auto sigma = cyclic_perm(6);
    FormalSum<XCoordinate> total;
    for (auto& [x, c] : eta) {
        total[x] += c;
        total[act(sigma, x)] += c;
    }
    return to_relation(gc, total);
}

std::vector<NamedRelation> all_named() {
    return {NamedRelation::lifted_ft,  NamedRelation::inverted_lifted_ft, NamedRelation::nonalt_lifted_ft,
            NamedRelation::two_term,   NamedRelation::three_term,         NamedRelation::nonalt_five,
            NamedRelation::bad_l4,     NamedRelation::goncharov22,        NamedRelation::r40};
}

std::string to_string(NamedRelation r) {
    switch (r) {
        case NamedRelation::lifted_ft: return "lifted_ft";
        case NamedRelation::inverted_lifted_ft: return "inverted_lifted_ft";
        case NamedRelation::nonalt_lifted_ft: return "nonalt_lifted_ft";
        case NamedRelation::two_term: return "two_term";
        case NamedRelation::three_term: return "three_term";
        case NamedRelation::nonalt_five: return "nonalt_five";
        case NamedRelation::bad_l4: return "bad_l4";
        case NamedRelation::goncharov22: return "goncharov22";
        case NamedRelation::r40: return "r40";
    }
    return "?";
}

std::optional<NamedRelation> named_from_string(const std::string& s) {
    for (auto r : all_named())
        if (to_string(r) == s) return r;
    return std::nullopt;
}

NamedBuild build_named(NamedRelation name, int weight) {
    NamedBuild out{name, 0, {}, {}};
    Builder b;
    auto constant = [&](cplx v, cplx m) { out.expected = {true, v, m}; };
    switch (name) {
        case NamedRelation::lifted_ft:
            out.n = 2;
            b.term(1, "a1", "a3", 1, 1);
            b.term(-1, "a2", "a4", 1, 1);
            b.term(1, "a2-a1", "a5-a1", 1, 1);
            b.term(-1, "a2+a3-a1-a4", "a5-a1-a4", 1, 1);
            b.term(1, "a3-a4", "a5-a4", 1, 1);
            constant(kPi * kPi / 6, kPi * kPi);
            break;
        case NamedRelation::inverted_lifted_ft:
            out.n = 2;
            b.term(-1, "a3", "a1", 1, 1);
            b.term(1, "a4", "a2", 1, 1);
            b.term(-1, "a5-a1", "a2-a1", 1, 1);
            b.term(1, "a5-a1-a4", "a2+a3-a1-a4", 1, 1);
            b.term(-1, "a5-a4", "a3-a4", 1, 1);
            constant(0, kPi * kPi);
            break;
        case NamedRelation::nonalt_lifted_ft:
            out.n = 2;
            b.term(1, "a1", "a3", 1, 1);
            b.term(1, "a4", "a2", 1, 1);
            b.term(1, "a2-a1", "a5-a1", 1, 1);
            b.term(1, "a5-a1-a4", "a2+a3-a1-a4", 1, 1);
            b.term(1, "a3-a4", "a5-a4", 1, 1);
            constant(kPi * kPi / 2, kPi * kPi);
            break;
        case NamedRelation::two_term: {
            int n = weight;
            if (n < 2) throw std::invalid_argument("two_term: weight >= 2");
            out.n = n;
            b.term(1, "a1", "a2", -1, 1);
            b.term(n % 2 ? -1 : 1, "-a1", "a2-a1", -1, 1);
            cplx m = kappa(n).get_d() * lattice_unit(n);
            if (n % 2 == 0)
                constant((std::pow(2.0, n) - 2) * pi_i_pow(n) * bernoulli(n).get_d() / factorial(n).get_d(), m);
            else
                constant(0, m);
            break;
        }
        case NamedRelation::three_term:
            out.n = 3;
            b.term(1, "a1", "a2", 1, 1);
            b.term(1, "-a2", "a1-a2", 1, -1);
            b.term(1, "a2-a1", "-a1", -1, 1);
            constant(kZeta3, 4 * std::pow(kPi, 3) * kI);
            break;
        case NamedRelation::nonalt_five:
            out.n = 2;
            b.term(1, "a1", "a2+a5", -1, 1);
            b.term(1, "a2", "a3+a1", -1, 1);
            b.term(1, "a3", "a4+a2", -1, 1);
            b.term(1, "a4", "a5+a3", -1, 1);
            b.term(1, "a5", "a1+a4", -1, 1);
            constant(-kPi * kPi / 2, 4 * kPi * kPi);
            break;
        case NamedRelation::bad_l4:
            out.n = 4;
            b.term(1, "2a1+2a3", "-a1+a2");
            b.term(-8, "a1+a3", "-2a1+a2-a3");
            break;
        case NamedRelation::goncharov22: {
            out.n = 3;
            for (const char* g : {"alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3", "gamma1", "gamma2",
                                  "gamma3", "delta"})
                b.r.reg.add(g);
            auto A = [](int i) { return "alpha" + std::to_string((i + 2) % 3 + 1); };
            auto B = [](int i) { return "beta" + std::to_string((i + 2) % 3 + 1); };
            auto G = [](int i) { return "gamma" + std::to_string((i + 2) % 3 + 1); };
            for (int i = 1; i <= 3; ++i) {
                b.term(1, A(i), G(i), 1, 1);
                b.term(1, B(i), A(i) + "+" + G(i - 1), 1, 1);
                b.term(-1, A(i - 1) + "-" + B(i), G(i - 1) + "+" + G(i) + "-" + B(i), 1, 1);
                b.term(1, B(i) + "-" + A(i - 1) + "-" + A(i), G(i) + "-" + A(i - 1) + "-" + A(i), 1, -1);
                b.term(1, A(i) + "+" + B(i - 1) + "-" + B(i + 1), G(i + 1) + "+" + B(i) + "-" + B(i + 1), 1, 1);
                b.term(1, B(i) + "-" + A(i) + "-" + B(i - 1), "delta-" + A(i) + "-" + B(i - 1), -1, 1);
                b.term(-1, A(i - 1) + "+" + A(i) + "+" + B(i + 1) + "-" + B(i), "delta+" + G(i) + "-" + B(i), 1, 1);
            }
            b.term(1, "alpha1+alpha2+alpha3", "delta", -1, 1);
            constant(3 * kZeta3, pi_i_pow(3) / 2.0);
            break;
        }
        case NamedRelation::r40:
            out.n = 3;
            b.r = r40_sum();
            constant(0, pi_i_pow(3) / 2.0);
            break;
    }
    out.alpha = std::move(b.r);
    return out;
}

}  // namespace pb
