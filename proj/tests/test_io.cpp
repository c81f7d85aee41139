#include <random>

#include "doctest.h"
#include "polybloch/io.hpp"

using namespace pb;

TEST_CASE("relation json round trip for every named relation") {
    for (auto n : all_named()) {
        auto b = build_named(n, 3);
        auto j = relation_to_json(b.alpha);
        auto back = relation_from_json(json::parse(j.dump()));
        CHECK(back.reg == b.alpha.reg);
        REQUIRE(back.size() == b.alpha.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(back.terms[i].coef == b.alpha.terms[i].coef);
            CHECK(back.terms[i].pair == b.alpha.terms[i].pair);
            CHECK(back.terms[i].sign1 == b.alpha.terms[i].sign1);
            CHECK(back.terms[i].sign2 == b.alpha.terms[i].sign2);
        }
        CHECK(w_form(b.n, back) == w_form(b.n, b.alpha));
    }
}

TEST_CASE("relation json rejects malformed input") {
    CHECK_THROWS_AS(relation_from_json(json::parse(R"({"terms":[]})")), FormatError);
    CHECK_THROWS_AS(relation_from_json(json::parse(R"({"generators":["a"],"terms":[{"coef":1,"u":{"b":1},"v":{}}]})")),
                    FormatError);
    CHECK_THROWS_AS(
        relation_from_json(json::parse(R"({"generators":["a"],"terms":[{"coef":1,"u":{"a":1},"v":{},"sign1":1}]})")),
        FormatError);
    CHECK_THROWS_AS(relation_from_json(json::parse(R"({"generators":["a","a"],"terms":[]})")), FormatError);
    auto ok = relation_from_json(
        json::parse(R"({"generators":["a1","a2"],"terms":[{"coef":2,"u":{"a1":1},"v":{"a2":-1},"sign1":-1,"sign2":1}]})"));
    CHECK(ok.size() == 1);
}

TEST_CASE("realization json round trip keeps full precision") {
    auto b = build_named(NamedRelation::goncharov22);
    std::mt19937_64 rng(3);
    auto r = random_realization(b.name, b.alpha, rng);
    auto back = realization_from_json(json::parse(realization_to_json(r).dump()));
    CHECK(back.signs == r.signs);
    CHECK(back.values == r.values);
    CHECK(back.logs == r.logs);
    CHECK(evaluate_relation(3, b.alpha, back).value == evaluate_relation(3, b.alpha, r).value);
}

TEST_CASE("quiver dsl") {
    auto q = quiver_from_json(json::parse(
        R"({"vertices":[{"name":"x"},{"name":"y"},{"name":"f","frozen":true}],"edges":[[0,1],[2,0,2]]})"));
    CHECK(q.m == 3);
    CHECK(q.frozen[2]);
    CHECK(q.eps[0][1] == 1);
    CHECK(q.eps[0][2] == -2);
    auto back = quiver_from_json(quiver_to_json(q));
    CHECK(back == q);
    CHECK(back.names == q.names);
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices":[{}],"edges":[[0,3]]})")), FormatError);
    auto mc = mutation_class(q);
    auto s = seed_to_json(mc, 0);
    CHECK(s["coordinates"][0] == "x");
}

TEST_CASE("matrix json") {
    CMatrix m(2, 3);
    m << cplx(1, 2), cplx(0.1, -3), 4, 5, cplx(6, 7), cplx(1e-300, 1e300);
    CHECK(matrix_from_json(json::parse(matrix_to_json(m).dump())) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), FormatError);
    CHECK(cplx_from_json(json::parse("2.5")) == cplx(2.5, 0));
}

TEST_CASE("scenario report json") {
    auto r = run_scenario("sigma2", 0, 3);
    auto j = scenario_to_json(r);
    CHECK(j["name"] == "sigma2");
    CHECK(j["samples"].get<int>() >= 3);
    CHECK(j["pass"] == true);
    CHECK(j["multiples"].size() == j["samples"].get<std::size_t>());
}
