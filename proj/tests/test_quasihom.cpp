#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wqs/quasihom.hpp"

using namespace wqs;

TEST_CASE("three-power form solves to the closed-form weight system") {
    auto nf = NormalForm::from_class(NormalFormClass::I, 2, 3, 7);
    WeightSystem ws = solve_weights(nf);
    CHECK(ws.w == std::vector<Int>{21, 14, 6});
    CHECK(ws.d == 42);
    CHECK(milnor_number(ws) == 12);
}

TEST_CASE("closed form agrees with the linear solver on random exponent triples") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 200; ++t) {
        Int p0 = 2 + rng() % 29, p1 = 2 + rng() % 29, p2 = 2 + rng() % 29;
        WeightSystem closed = class_I_weights(p0, p1, p2);
        WeightSystem solved =
            solve_weights(NormalForm::from_class(NormalFormClass::I, p0, p1, p2));
        CHECK(closed.w == solved.w);
        CHECK(closed.d == solved.d);
        Int g = gcd(gcd(closed.w[0], closed.w[1]), closed.w[2]);
        CHECK(g == 1);
    }
}

TEST_CASE("solved weights make every defining monomial the same degree") {
    struct Case {
        NormalFormClass tag;
        Int p0, p1, p2;
    };
    for (const Case& c : {Case{NormalFormClass::II, 2, 3, 5},
                          Case{NormalFormClass::III, 2, 3, 4},
                          Case{NormalFormClass::IV, 2, 3, 4},
                          Case{NormalFormClass::V, 2, 2, 3}}) {
        auto nf = NormalForm::from_class(c.tag, c.p0, c.p1, c.p2);
        WeightSystem ws = solve_weights(nf);
        for (const auto& m : nf.monomials)
            CHECK(ws.weighted_degree(m) == ws.d);
    }
}

TEST_CASE("known mixed-form weight systems") {
    CHECK(solve_weights(NormalForm::from_class(NormalFormClass::II, 2, 3, 5)).w ==
          std::vector<Int>{15, 10, 4});
    CHECK(solve_weights(NormalForm::from_class(NormalFormClass::III, 2, 3, 4)).w ==
          std::vector<Int>{11, 6, 4});
    // x^2 + y^3 z + z^6
    auto nf = NormalForm::raw({{2, 0, 0}, {0, 3, 1}, {0, 0, 6}});
    WeightSystem ws = solve_weights(nf);
    CHECK(ws.w == std::vector<Int>{9, 5, 3});
    CHECK(ws.d == 18);
    CHECK(milnor_number(ws) == 13);
}

TEST_CASE("underdetermined supports are rejected") {
    CHECK_THROWS_AS(solve_weights(NormalForm::raw({{1, 1, 1}})),
                    DegenerateSystem);
    CHECK_THROWS_AS(solve_weights(NormalForm::raw({{1, 1, 1}, {2, 2, 2}})),
                    DegenerateSystem);
}

TEST_CASE("milnor number rejects non-isolated weight systems") {
    WeightSystem ws;
    ws.w = {1, 1, 3};
    ws.d = 3;  // (d - w2)/w2 = 0
    CHECK_THROWS_AS(milnor_number(ws), NonIsolated);
}

TEST_CASE("generic support enumerates exactly the degree-d monomials") {
    WeightSystem ws;
    ws.w = {21, 14, 6, 1};
    ws.d = 42;
    MonomialSupport sup = generic_support(ws);
    CHECK(sup.nvars == 4);
    for (const auto& m : sup.monomials) CHECK(ws.weighted_degree(m) == 42);
    auto contains = [&](const Monomial& m) {
        return std::find(sup.monomials.begin(), sup.monomials.end(), m) !=
               sup.monomials.end();
    };
    CHECK(contains({2, 0, 0, 0}));
    CHECK(contains({0, 3, 0, 0}));
    CHECK(contains({0, 0, 7, 0}));
    CHECK(contains({0, 0, 0, 42}));
    CHECK(contains({1, 1, 1, 1}));
    CHECK(!sup.monomials.empty());
}

TEST_CASE("support predicates: pure powers, partners, edges") {
    // x^2 z + x y^2 + y z^3 in three variables
    MonomialSupport sup;
    sup.nvars = 3;
    sup.monomials = {{2, 0, 1}, {1, 2, 0}, {0, 1, 3}};
    CHECK(!sup.has_pure_power(0));
    CHECK(!sup.has_pure_power(1));
    CHECK(!sup.has_pure_power(2));
    CHECK(sup.eliminating_partners(0) == std::vector<int>{2});
    CHECK(sup.eliminating_partners(1) == std::vector<int>{0});
    CHECK(sup.eliminating_partners(2) == std::vector<int>{1});
    CHECK(sup.has_monomial_within({0, 1}));
    CHECK(!sup.has_monomial_within({0}));
    CHECK(sup.touches_edge(0, 1));
    CHECK(sup.touches_edge(0, 2));
    MonomialSupport partial;
    partial.nvars = 3;
    partial.monomials = {{2, 0, 1}, {1, 2, 0}};
    CHECK(!partial.touches_edge(1, 2));
}

TEST_CASE("normal-form support is degree-checked against the weight system") {
    auto nf = NormalForm::from_class(NormalFormClass::I, 2, 3, 7);
    WeightSystem ws = solve_weights(nf);
    MonomialSupport sup = normal_form_support(nf, ws);
    CHECK(sup.monomials.size() == 3);
    WeightSystem wrong = ws;
    wrong.d = 43;
    CHECK_THROWS_AS(normal_form_support(nf, wrong), Error);
}

TEST_CASE("side-condition classes validate their extra exponents") {
    CHECK_THROWS_AS(
        NormalForm::from_class(NormalFormClass::VI, 3, 3, 3, {{1, 1}}),
        InvalidInput);
    CHECK_THROWS_AS(NormalForm::from_class(NormalFormClass::VI, 3, 3, 3),
                    InvalidInput);
}
