#include "polybloch/realization_verify.hpp"

#include <cmath>

namespace pb {

namespace {

cplx eval_log(const RelationSum& alpha, const Realization& r, const LinComb& c) {
    cplx s = 0;
    for (auto& [j, e] : c) {
        auto it = r.logs.find(alpha.reg.name(j));
        if (it == r.logs.end()) throw MismatchedRegistry("realization has no log for " + alpha.reg.name(j));
        s += double(e) * it->second;
    }
    return s;
}

cplx eval_value(const RelationSum& alpha, const Realization& r, const LinComb& c) {
    cplx s = 1;
    for (auto& [j, e] : c) {
        auto it = r.values.find(alpha.reg.name(j));
        if (it == r.values.end()) throw MismatchedRegistry("realization has no value for " + alpha.reg.name(j));
        s *= std::pow(it->second, int(e));
    }
    return s;
}

void require_signs(const RelationSum& alpha, const Realization& r) {
    if (r.signs.size() != alpha.terms.size()) throw MismatchedRegistry("sign determination length differs from term count");
}

}  // namespace

SignDetermination signs_of(const RelationSum& alpha) {
    SignDetermination s;
    for (auto& t : alpha.terms) {
        if (!t.sign1 || !t.sign2) throw std::invalid_argument("signs_of: term without a sign pair");
        s.push_back({t.sign1, t.sign2});
    }
    return s;
}

RealizationCheck check_realization(const RelationSum& alpha, const Realization& r, double tol) {
    require_signs(alpha, r);
    RealizationCheck out;
    for (auto& name : alpha.reg.names()) {
        auto v = r.values.find(name);
        auto l = r.logs.find(name);
        if (v == r.values.end() || l == r.logs.end()) throw MismatchedRegistry("realization misses generator " + name);
        out.lift_residual = std::max(out.lift_residual, std::abs(std::exp(l->second) - v->second) / std::abs(v->second));
    }
    double worst = 0;
    for (std::size_t i = 0; i < alpha.terms.size(); ++i) {
        auto& t = alpha.terms[i];
        cplx lhs = double(r.signs[i].first) * eval_value(alpha, r, t.pair.u) +
                   double(r.signs[i].second) * eval_value(alpha, r, t.pair.v);
        out.term_residuals.push_back(std::abs(lhs - 1.0));
        worst = std::max(worst, out.term_residuals.back());
    }
    out.ok = out.lift_residual < 1e-10 && worst < tol;
    return out;
}

Realization realize(const RelationSum& alpha, const std::map<std::string, cplx>& values) {
    Realization r;
    r.signs = signs_of(alpha);
    for (auto& name : alpha.reg.names()) {
        auto it = values.find(name);
        if (it == values.end()) throw MismatchedRegistry("realize: no value for " + name);
        r.values[name] = it->second;
        r.logs[name] = std::log(it->second);
    }
    return r;
}

Evaluation evaluate_relation(int n, const RelationSum& alpha, const Realization& r) {
    require_signs(alpha, r);
    Evaluation ev;
    for (std::size_t i = 0; i < alpha.terms.size(); ++i) {
        auto& t = alpha.terms[i];
        cplx u = eval_log(alpha, r, t.pair.u), v = eval_log(alpha, r, t.pair.v);
        ExtendedPoint pt;
        try {
            pt = ExtendedPoint::from_uv(u, v, r.signs[i].first, r.signs[i].second);
        } catch (const DomainError& e) {
            throw ComponentMismatch("term " + std::to_string(i) + ": " + e.what());
        }
        ev.value += double(t.coef) * lhat(n, pt);
        ev.points.push_back(pt);
    }
    return ev;
}

Realization sign_flip(const Realization& r, const RelationSum& alpha, const std::string& gen) {
    require_signs(alpha, r);
    auto j = alpha.reg.find(gen);
    if (!j) throw MismatchedRegistry("sign_flip: unknown generator " + gen);
    Realization out = r;
    out.values.at(gen) = -r.values.at(gen);
    out.logs.at(gen) = r.logs.at(gen) + kPi * kI;
    for (std::size_t i = 0; i < alpha.terms.size(); ++i) {
        if (lc_coeff(alpha.terms[i].pair.u, *j) % 2) out.signs[i].first = -out.signs[i].first;
        if (lc_coeff(alpha.terms[i].pair.v, *j) % 2) out.signs[i].second = -out.signs[i].second;
    }
    return out;
}

double flip_invariance_check(int n, const RelationSum& alpha, const Realization& r) {
    cplx base = evaluate_relation(n, alpha, r).value;
    LatticeModulus m{half_lattice_unit(n)};
    double worst = 0;
    for (auto& g : alpha.reg.names()) {
        cplx v = evaluate_relation(n, alpha, sign_flip(r, alpha, g)).value;
        worst = std::max(worst, congruent_mod(v, base, m, 1e300).residual);
    }
    return worst;
}

CMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = {d(rng), d(rng)};
    return m;
}

Realization grassmannian_realization(const GrassmannianClass& gc, const RelationSum& alpha, const CMatrix& m) {
    auto vals = a_coordinate_values(gc, m);
    std::map<std::string, cplx> named;
    for (std::size_t c = 0; c < vals.size(); ++c) named[gc.names.name(c)] = vals[c];
    return realize(alpha, named);
}

namespace {

cplx random_point(std::mt19937_64& rng) {
    // stay away from 0 and 1
    std::uniform_real_distribution<double> d(-2.5, 2.5);
    while (true) {
        cplx z{d(rng), d(rng)};
        if (std::abs(z) > 0.2 && std::abs(z - 1.0) > 0.2 && std::abs(z + 1.0) > 0.2) return z;
    }
}

const GrassmannianClass& gr36() {
    static const GrassmannianClass gc = grassmannian_class(3, 3);
    return gc;
}

}  // namespace

Realization random_realization(NamedRelation name, const RelationSum& alpha, std::mt19937_64& rng) {
    std::map<std::string, cplx> v;
    switch (name) {
        case NamedRelation::lifted_ft:
        case NamedRelation::inverted_lifted_ft:
        case NamedRelation::nonalt_lifted_ft: {
            cplx a1 = random_point(rng), a2 = random_point(rng);
            while (std::abs(a1 - a2) < 0.2) a2 = random_point(rng);
            v = {{"a1", a1}, {"a2", a2}, {"a3", 1.0 - a1}, {"a4", 1.0 - a2}, {"a5", a1 - a2}};
            break;
        }
        case NamedRelation::two_term: {
            cplx a1 = random_point(rng);
            v = {{"a1", a1}, {"a2", 1.0 + a1}};
            break;
        }
        case NamedRelation::three_term: {
            cplx a1 = random_point(rng);
            v = {{"a1", a1}, {"a2", 1.0 - a1}};
            break;
        }
        case NamedRelation::nonalt_five: {
            cplx x1 = random_point(rng), x2 = random_point(rng);
            v = {{"a1", x1},
                 {"a2", x2},
                 {"a3", (1.0 + x2) / x1},
                 {"a4", (1.0 + x1 + x2) / (x1 * x2)},
                 {"a5", (1.0 + x1) / x2}};
            break;
        }
        case NamedRelation::goncharov22: {
            std::uniform_real_distribution<double> d(0.1, 0.9);
            double a[3] = {d(rng), d(rng), d(rng)};
            for (int i = 0; i < 3; ++i) {
                int prev = (i + 2) % 3;
                v["alpha" + std::to_string(i + 1)] = a[i];
                v["gamma" + std::to_string(i + 1)] = 1 - a[i];
                v["beta" + std::to_string(i + 1)] = 1 - a[i] * (1 - a[prev]);
            }
            v["delta"] = 1 + a[0] * a[1] * a[2];
            break;
        }
        case NamedRelation::r40: return grassmannian_realization(gr36(), alpha, random_matrix(3, 6, rng));
        case NamedRelation::bad_l4: throw std::invalid_argument("random_realization: bad_l4 carries no sign pairs");
    }
    return realize(alpha, v);
}

cplx lhat_shift_rhs(int n, cplx u, cplx v, int s1, int s2, long k, long l) {
    cplx kb = double(k) * kPi * kI, lb = double(l) * kPi * kI;
    cplx sum = 0;
    double fact = 1;
    for (int r = 1; r <= n - 2; ++r) {
        fact *= r;
        sum += ((r % 2) ? -1.0 : 1.0) * std::pow(kb, r) / fact * lhat_uv(n - r, u, v, s1, s2);
    }
    cplx w = kb * v - lb * u;
    cplx A = w * std::pow(u + kb, n - 2);
    cplx Ar = 0;
    for (int r = 0; r <= n - 3; ++r) Ar += w * binomial(n - 2, r + 1).get_d() * std::pow(u, r) * std::pow(kb, n - 2 - r);
    cplx tail = A + Ar - std::pow(kb, n - 1) * lb;
    return sum + ((n % 2) ? -1.0 : 1.0) / factorial(n).get_d() * tail;
}

// ------------------------------------------------------------------ scenarios

std::vector<std::string> scenario_names() {
    return {"inversion_n2",  "inversion_n3", "inversion_n4",  "inversion_n5",     "inversion_n6",
            "sigma2",        "sigma3",       "sigma3_minusminus", "nonalt_five", "goncharov22",
            "r40",           "lifted_ft",    "inverted_lifted_ft", "nonalt_lifted_ft", "lifted_ft_constancy"};
}

namespace {

void record(ScenarioReport& rep, cplx value) {
    auto c = congruent_mod(value, rep.expected, {rep.modulus}, 1e-7);
    rep.max_residual = std::max(rep.max_residual, c.residual);
    rep.multiples.push_back(c.k);
    ++rep.samples;
}

ScenarioReport named_scenario(const std::string& label, NamedBuild b, std::mt19937_64& rng, int samples,
                              NamedRelation gen_as) {
    ScenarioReport rep;
    rep.name = label;
    rep.expected = b.expected.value;
    rep.modulus = b.expected.modulus;
    for (int s = 0; s < samples; ++s) {
        auto r = random_realization(gen_as, b.alpha, rng);
        if (!check_realization(b.alpha, r).ok) throw std::logic_error(label + ": generated realization fails its equations");
        record(rep, evaluate_relation(b.n, b.alpha, r).value);
    }
    return rep;
}

}  // namespace

ScenarioReport run_scenario(const std::string& name, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed * 1000003ULL + std::hash<std::string>{}(name));
    ScenarioReport rep;
    if (name.rfind("inversion_n", 0) == 0) {
        int n = std::stoi(name.substr(11));
        rep = named_scenario(name, build_named(NamedRelation::two_term, n), rng, samples, NamedRelation::two_term);
    } else if (name == "sigma2") {
        rep.name = name;
        rep.expected = -kPi * kPi / 6;
        rep.modulus = kPi * kPi / 2;
        const int comps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        std::uniform_int_distribution<int> br(-2, 2);
        for (int s = 0; s < samples; ++s)
            for (auto& c : comps) {
                ExtendedPoint pt;
                pt.sign1 = c[0];
                pt.sign2 = c[1];
                pt.z = random_point(rng);
                pt.p = br(rng);
                pt.q = br(rng);
                auto [u, v] = pt.to_uv();
                record(rep, lhat(2, pt) - lhat_uv(2, -v, u - v, c[1], -c[0] * c[1]));
            }
    } else if (name == "sigma3") {
        rep = named_scenario(name, build_named(NamedRelation::three_term), rng, samples, NamedRelation::three_term);
    } else if (name == "sigma3_minusminus") {
        auto b = build_named(NamedRelation::three_term);
        for (auto& t : b.alpha.terms) t.sign1 = t.sign2 = -1;
        b.expected = {true, kZeta3 - 1.5 * std::pow(kPi, 3) * kI, 8 * std::pow(kPi, 3) * kI};
        rep.name = name;
        rep.expected = b.expected.value;
        rep.modulus = b.expected.modulus;
        for (int s = 0; s < samples; ++s) {
            cplx a1 = random_point(rng);
            auto r = realize(b.alpha, {{"a1", a1}, {"a2", -1.0 - a1}});
            if (!check_realization(b.alpha, r).ok) throw std::logic_error("sigma3_minusminus: bad realization");
            record(rep, evaluate_relation(3, b.alpha, r).value);
        }
    } else if (name == "lifted_ft_constancy") {
        auto b = build_named(NamedRelation::lifted_ft);
        rep.name = name;
        rep.modulus = b.expected.modulus;
        cplx a2 = random_point(rng), a1 = random_point(rng), d = random_point(rng) * 0.05;
        cplx first = 0;
        for (int s = 0; s < samples; ++s) {
            cplx x = a1 + double(s) * d;
            auto r = realize(b.alpha, {{"a1", x}, {"a2", a2}, {"a3", 1.0 - x}, {"a4", 1.0 - a2}, {"a5", x - a2}});
            cplx val = evaluate_relation(2, b.alpha, r).value;
            if (s == 0) rep.expected = first = val;
            record(rep, val);
        }
        rep.note = "reference value is the first point of the family";
    } else {
        auto nr = named_from_string(name);
        if (!nr || *nr == NamedRelation::bad_l4 || *nr == NamedRelation::two_term)
            throw std::invalid_argument("unknown scenario: " + name);
        rep = named_scenario(name, build_named(*nr), rng, samples, *nr);
    }
    rep.pass = rep.samples > 0 && rep.max_residual < 1e-7;
    return rep;
}

}  // namespace pb
