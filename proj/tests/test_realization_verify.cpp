#include <random>
#include <set>

#include "doctest.h"
#include "polybloch/realization_verify.hpp"
#include "test_support.hpp"

using namespace pb;

namespace {

// multiset of points eps1 * exp(u) per term, with coefficients
std::multiset<std::pair<long long, std::pair<double, double>>> projected(const RelationSum& a, const Realization& r,
                                                                          int n) {
    std::multiset<std::pair<long long, std::pair<double, double>>> out;
    auto ev = evaluate_relation(n, a, r);
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        auto z = ev.points[i].z;
        out.insert({a.terms[i].coef, {std::round(z.real() * 1e8) / 1e8, std::round(z.imag() * 1e8) / 1e8}});
    }
    return out;
}

}  // namespace

TEST_CASE("generated realizations satisfy their equations") {
    std::mt19937_64 rng(2);
    for (auto nm : all_named()) {
        if (nm == NamedRelation::bad_l4) continue;
        auto b = build_named(nm, 4);
        for (int s = 0; s < 5; ++s) {
            auto r = random_realization(nm, b.alpha, rng);
            auto c = check_realization(b.alpha, r);
            CHECK(c.ok);
            CHECK(c.term_residuals.size() == b.alpha.size());
        }
    }
}

TEST_CASE("perturbed log or value breaks the realization") {
    std::mt19937_64 rng(3);
    auto b = build_named(NamedRelation::goncharov22);
    auto r = random_realization(NamedRelation::goncharov22, b.alpha, rng);
    auto bad = r;
    bad.logs["beta2"] += 0.1;
    CHECK_FALSE(check_realization(b.alpha, bad).ok);
    bad = r;
    bad.values["delta"] *= 1.01;
    CHECK_FALSE(check_realization(b.alpha, bad).ok);
    bad = r;
    bad.values.erase("delta");
    CHECK_THROWS_AS(check_realization(b.alpha, bad), MismatchedRegistry);
}

TEST_CASE("22-term lift at a positive real realization") {
    std::mt19937_64 rng(4);
    auto b = build_named(NamedRelation::goncharov22);
    for (int s = 0; s < 10; ++s) {
        auto r = random_realization(NamedRelation::goncharov22, b.alpha, rng);
        for (auto& [k, v] : r.values) CHECK(v.real() > 0);
        cplx val = evaluate_relation(3, b.alpha, r).value;
        CHECK(congruent_mod(val, 3 * kZeta3, {std::pow(kPi * kI, 3) / 2.0}, 1e-9).ok);
        CHECK(std::abs(val.imag()) < 1e-9);
    }
}

TEST_CASE("wrong component is reported") {
    auto b = build_named(NamedRelation::two_term, 2);
    std::mt19937_64 rng(5);
    auto r = random_realization(NamedRelation::two_term, b.alpha, rng);
    r.signs[0] = {1, 1};
    CHECK_THROWS_AS(evaluate_relation(2, b.alpha, r), ComponentMismatch);
}

TEST_CASE("sign flips") {
    auto b = build_named(NamedRelation::two_term, 2);
    std::mt19937_64 rng(6);
    auto r = random_realization(NamedRelation::two_term, b.alpha, rng);
    auto f = sign_flip(r, b.alpha, "a1");
    CHECK(check_realization(b.alpha, f).ok);
    std::multiset<std::pair<int, int>> got(f.signs.begin(), f.signs.end());
    CHECK(got == std::multiset<std::pair<int, int>>{{1, 1}, {1, -1}});
    auto ff = sign_flip(f, b.alpha, "a1");
    CHECK(std::abs(ff.values["a1"] - r.values["a1"]) == 0);
    CHECK(std::abs(ff.logs["a1"] - r.logs["a1"] - 2.0 * kPi * kI) < 1e-14);
    CHECK(ff.signs == r.signs);
    CHECK(projected(b.alpha, f, 2) == projected(b.alpha, r, 2));
}

TEST_CASE("flip invariance for proper relations") {
    std::mt19937_64 rng(7);
    for (auto nm : {NamedRelation::goncharov22, NamedRelation::r40, NamedRelation::lifted_ft, NamedRelation::nonalt_five}) {
        auto b = build_named(nm);
        for (int s = 0; s < 3; ++s) {
            auto r = random_realization(nm, b.alpha, rng);
            CHECK(flip_invariance_check(b.n, b.alpha, r) < 1e-8);
        }
    }
}

TEST_CASE("shift formula for lhat") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> sh(-3, 3);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 50; ++t) {
            auto& c = pbtest::kComponents[t % 4];
            auto pt = pbtest::random_point(rng, c[0], c[1]);
            auto [u, v] = pt.to_uv();
            long k = sh(rng), l = sh(rng);
            bool fine = c[0] == 1 && c[1] == 1 && t % 3 == 0;
            if (fine) {
                k &= ~1L;
                l &= ~1L;
            }
            cplx lhs = lhat_uv(n, u + double(k) * kPi * kI, v + double(l) * kPi * kI, (k % 2) ? -c[0] : c[0],
                               (l % 2) ? -c[1] : c[1]) -
                       lhat(n, pt);
            cplx rhs = lhat_shift_rhs(n, u, v, c[0], c[1], k, l);
            cplx m = fine ? lattice_unit(n) : half_lattice_unit(n);
            auto cong = congruent_mod(lhs, rhs, {m}, 1e-7);
            CHECK_MESSAGE(cong.ok, "n=", n, " k=", k, " l=", l, " residual ", cong.residual);
        }
}

TEST_CASE("limit along spirals into zero") {
    for (int n = 2; n <= 5; ++n)
        for (int s = 0; s < 5; ++s) {
            double prev = 1e300;
            for (int j = 10; j <= 40; j += 10) {
                double r = std::pow(10.0, -j / 2.0);
                cplx z = std::polar(r, 0.7 * j + s);
                long p = (s % 3) - 1;
                cplx u = std::log(z) + double(p) * kPi * kI, v = std::log(1.0 - z);
                double a = std::abs(lhat_uv(n, u, v, (p % 2) ? -1 : 1, 1));
                CHECK(a < std::max(prev, 1e-12) * 1.01);
                prev = a;
            }
            CHECK(prev < 1e-10);
        }
}

TEST_CASE("scenario table") {
    for (auto& name : scenario_names()) {
        auto r = run_scenario(name, 0, 10);
        CHECK_MESSAGE(r.pass, name, " residual ", r.max_residual);
        CHECK(r.samples >= 10);
    }
    CHECK_THROWS(run_scenario("no_such"));
}

TEST_CASE("scenarios are deterministic per seed") {
    auto a = run_scenario("r40", 5), b = run_scenario("r40", 5);
    CHECK(a.multiples == b.multiples);
    CHECK(a.max_residual == b.max_residual);
}
