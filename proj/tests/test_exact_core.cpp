#include <random>

#include "doctest.h"
#include "polybloch/exact_core.hpp"
#include "polybloch/lifted_polylog.hpp"

using namespace pb;

TEST_CASE("bernoulli values") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli recurrence up to 40") {
    for (unsigned r = 1; r <= 40; ++r) {
        Rational s = 0;
        for (unsigned j = 0; j <= r; ++j) s += Rational(binomial(r + 1, j)) * bernoulli(j);
        CHECK(s == 0);
    }
}

static Rational beta(int r) { return bernoulli(r) * Rational(Int(1) << r) / Rational(factorial(r)); }

TEST_CASE("c_i against beta: first identity") {
    for (int k = 0; k <= 20; ++k) {
        Rational s = 0;
        for (int i = 0; i <= k; ++i) s += comparison_ci(i) / Rational(factorial(k - i));
        Rational rhs = ((k - 1) % 2 == 0 ? 1 : -1) * beta(k);
        CHECK(s == rhs);
    }
}

TEST_CASE("c_i against beta: second identity") {
    for (int l = 3; l <= 21; l += 2) {
        Rational s = 0;
        for (int i = 0; i <= l - 1; ++i) s += Rational(l - 1 - i) / Rational(factorial(l - i)) * comparison_ci(i);
        CHECK(s == -beta(l - 1));
    }
}

TEST_CASE("alternating binomial reciprocal sum") {
    for (int s = 1; s <= 15; ++s)
        for (int l = 1; l <= 15; ++l) {
            Rational lhs = 0;
            for (int j = 0; j <= l; ++j) lhs += Rational((j % 2 ? -1 : 1) * binomial(l, j)) / Rational(s + l - j);
            Rational rhs = Rational(l % 2 ? -1 : 1) / Rational(s * binomial(l + s, l));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("laurent exact division") {
    auto x1 = LaurentPoly::variable(2, 0), x2 = LaurentPoly::variable(2, 1);
    auto one = LaurentPoly::constant(2, 1);
    CHECK(laurent_divide_exact(x1 * x2 + x2 * x2, x2) == x1 + x2);
    auto a3 = laurent_divide_exact(one + x2, x1);
    CHECK(a3 == LaurentPoly::variable(2, 0, -1) + LaurentPoly::variable(2, 0, -1) * x2);
    CHECK(laurent_divide_exact(x1 + one, x2) == (x1 + one) * LaurentPoly::variable(2, 1, -1));
    CHECK_THROWS_AS(laurent_divide_exact(x1 + one, x1 + x2), NonDivisible);
    CHECK_THROWS_AS(laurent_divide_exact(one, x1 * LaurentPoly::constant(2, 2)), NonDivisible);
}

TEST_CASE("laurent division round trip on random polynomials") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> ex(-2, 2), co(-5, 5), nt(1, 4);
    for (int t = 0; t < 200; ++t) {
        auto rnd = [&] {
            LaurentPoly p(3);
            int k = nt(rng);
            for (int i = 0; i < k; ++i) p.add_term({ex(rng), ex(rng), ex(rng)}, co(rng));
            if (p.is_zero()) p.add_term({0, 0, 0}, 1);
            return p;
        };
        auto a = rnd(), b = rnd();
        CHECK(laurent_divide_exact(a * b, b) == a);
    }
}

TEST_CASE("nullspace basics") {
    RatMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(rational_nullspace(id).empty());
    RatMatrix row(1, 3);
    row(0, 0) = row(0, 1) = row(0, 2) = 1;
    auto ns = rational_nullspace(row);
    REQUIRE(ns.size() == 2);
    CHECK(ns[0] == IntVec{1, -1, 0});
    CHECK(ns[1] == IntVec{1, 0, -1});
}

TEST_CASE("nullspace on random rational matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> co(-4, 4), dn(1, 3), sz(1, 7);
    for (int t = 0; t < 100; ++t) {
        int r = sz(rng), c = sz(rng);
        RatMatrix m(r, c);
        for (auto& x : m.data) {
            x = Rational(co(rng), dn(rng));
            x.canonicalize();
        }
        // force some dependent rows
        if (r > 2)
            for (int j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
        auto ns = rational_nullspace(m);
        for (auto& v : ns)
            for (int i = 0; i < r; ++i) {
                Rational s = 0;
                for (int j = 0; j < c; ++j) s += m(i, j) * Rational(v[j]);
                CHECK(s == 0);
            }
        std::vector<IntVec> rows;
        for (int i = 0; i < r; ++i) {
            Int den = 1;
            for (int j = 0; j < c; ++j) den = lcm(den, Int(m(i, j).get_den()));
            IntVec iv(c);
            for (int j = 0; j < c; ++j) {
                Rational y = m(i, j) * den;
                iv[j] = y.get_num();
            }
            rows.push_back(iv);
        }
        std::size_t rank = rational_rank(rows, c);
        CHECK(ns.size() == c - rank);
        CHECK(rational_rank(ns, c) == ns.size());
        for (auto& v : ns) {
            Int g = 0;
            for (auto& x : v) g = gcd(g, x);
            CHECK(g == 1);
            for (auto& x : v)
                if (x != 0) {
                    CHECK(x > 0);
                    break;
                }
        }
    }
}

TEST_CASE("integer lattice membership") {
    IntegerLattice L(3);
    L.insert({2, 0, 0});
    L.insert({0, 3, 0});
    L.insert({4, 6, 5});
    CHECK(L.contains({6, 3, 0}));
    CHECK_FALSE(L.contains({1, 0, 0}));
    CHECK(L.contains({2, 6, 5}));
    CHECK_FALSE(L.contains({0, 0, 1}));
    L.insert({3, 0, 0});
    CHECK(L.contains({1, 0, 0}));
}

TEST_CASE("rational gcd") {
    CHECK(rat_gcd({Rational(1, 2), Rational(3, 4)}) == Rational(1, 4));
    CHECK(rat_gcd({Rational(6), Rational(-4)}) == Rational(2));
}

TEST_CASE("modular sparse nullspace agrees with exact elimination") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> co(-3, 3), sz(1, 30), pick(0, 4);
    for (int t = 0; t < 60; ++t) {
        std::size_t c = sz(rng), r = sz(rng) * 3;
        std::vector<SparseIntRow> rows;
        IncrementalEchelon ech(c);
        for (std::size_t i = 0; i < r; ++i) {
            SparseIntRow row;
            for (std::size_t j = 0; j < c; ++j)
                if (pick(rng) == 0) row.push_back({j, Int(co(rng))});
            // low rank: keep some rows inside a fixed span
            if (t % 2 && i >= 3 && !rows.empty()) {
                row = rows[i % 3];
                for (auto& e : rows[(i + 1) % 3]) row.push_back({e.first, e.second * 2});
            }
            ech.add_sparse_row(row);
            rows.push_back(std::move(row));
        }
        CHECK(sparse_nullspace(rows, c, t) == ech.nullspace());
    }
}

TEST_CASE("modular sparse nullspace with large rational entries") {
    // kernel vector with big coprime entries forces several primes
    std::size_t c = 3;
    Int a("123456789012345678901"), b("98765432109876543211");
    std::vector<SparseIntRow> rows{{{0, b}, {1, -a}}, {{2, Int(1)}}};
    auto ns = sparse_nullspace(rows, c);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == IntVec{a, b, 0});
}
