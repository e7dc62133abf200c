#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wqs/wps.hpp"

using namespace wqs;

namespace {

HypersurfaceFamily generic_family(std::vector<Int> w, Int d) {
    WeightSystem ws;
    ws.w = w;
    ws.d = d;
    return HypersurfaceFamily::make(std::move(w), d, generic_support(ws));
}

std::vector<CyclicQuotient> sorted_types(const SingularLocusReport& rep) {
    auto ts = rep.all_types();
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return a.r != b.r ? a.r < b.r : a.a < b.a;
    });
    return ts;
}

}  // namespace

TEST_CASE("well-formedness of the ambient space") {
    CHECK(is_well_formed_space({{1, 1, 1, 1}}));
    CHECK(is_well_formed_space({{1, 1, 4, 6}}));
    CHECK(!is_well_formed_space({{1, 2, 2, 4}}));   // triple with gcd 2
    CHECK(!is_well_formed_space({{21, 14, 6, 3}}));  // triple with gcd 3
    CHECK(is_well_formed_space({{21, 14, 6, 1}}));
}

TEST_CASE("smooth quartic threefold section has no singular points") {
    auto H = generic_family({1, 1, 1, 1}, 4);
    CHECK(is_quasismooth(H));
    auto rep = singular_locus(H);
    CHECK(rep.quasismooth);
    CHECK(rep.well_formed);
    CHECK(rep.edge_points.empty());
    CHECK(rep.vertex_points.empty());
    CHECK(is_k3(H));
}

TEST_CASE("degree-12 surface with one half point") {
    auto H = generic_family({1, 1, 4, 6}, 12);
    CHECK(is_quasismooth(H));
    auto rep = singular_locus(H);
    REQUIRE(rep.edge_points.size() == 1);
    CHECK(rep.edge_points[0].i == 2);
    CHECK(rep.edge_points[0].j == 3);
    CHECK(rep.edge_points[0].count == 1);
    CHECK(rep.edge_points[0].type == CyclicQuotient::surface(2, 1, 1));
    CHECK(rep.vertex_points.empty());
    CHECK(is_k3(H));
}

TEST_CASE("weight sum different from the degree blocks the trivial-canonical verdict") {
    auto H = generic_family({1, 1, 1, 2}, 4);
    CHECK(is_quasismooth(H));
    CHECK(!is_k3(H));  // weight sum 5 != 4
}

TEST_CASE("vertex points use the eliminating-monomial chart") {
    // P(21,14,6,1), degree 42: x^2, y^3, z^7, t^42 all present, so every
    // vertex is missed by the generic member and only edges contribute
    auto H = generic_family({21, 14, 6, 1}, 42);
    auto rep = singular_locus(H);
    CHECK(rep.quasismooth);
    CHECK(rep.well_formed);
    CHECK(rep.vertex_points.empty());
    auto ts = sorted_types(rep);
    REQUIRE(ts.size() == 3);
    CHECK(ts[0] == CyclicQuotient::surface(2, 1, 1));
    CHECK(ts[1] == CyclicQuotient::surface(3, 1, 2));
    CHECK(ts[2] == CyclicQuotient::surface(7, 1, 6));
    CHECK(is_k3(H));
}

TEST_CASE("vertices on the surface report their transverse quotient") {
    // P(5,4,3,1)/13: no weight divides 13, so the surface passes through all
    // three heavy vertices; each carries the chart quotient
    auto H = generic_family({5, 4, 3, 1}, 13);
    auto rep = singular_locus(H);
    CHECK(rep.quasismooth);
    CHECK(rep.well_formed);
    CHECK(rep.edge_points.empty());
    REQUIRE(rep.vertex_points.size() == 3);
    auto ts = sorted_types(rep);
    CHECK(ts[0] == CyclicQuotient::surface(3, 1, 2));
    CHECK(ts[1] == CyclicQuotient::surface(4, 1, 3));
    CHECK(ts[2] == CyclicQuotient::surface(5, 1, 4));
    for (const auto& t : ts) CHECK(is_du_val(t));
}

TEST_CASE("contained singular edges fail hypersurface well-formedness") {
    // P(6,5,3,2)/15: no monomial avoids both y and z, and gcd(w0,w3) = 2
    auto H = generic_family({6, 5, 3, 2}, 15);
    CHECK(edge_contained(H, 0, 3));
    auto rep = singular_locus(H);
    CHECK(!rep.well_formed);
    CHECK(std::find(rep.contained_edges.begin(), rep.contained_edges.end(),
                    std::make_pair(0, 3)) != rep.contained_edges.end());
}

TEST_CASE("quasismoothness failures produce a witness subset") {
    // P(12,8,3,13)/24: the last vertex admits no eliminating monomial
    auto H = generic_family({12, 8, 3, 13}, 24);
    auto w = quasismooth_witness(H);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{3});
    CHECK(!is_quasismooth(H));
    CHECK(!is_k3(H));
    auto rep = singular_locus(H);
    CHECK(!rep.quasismooth);
    CHECK(rep.quasismooth_witness == std::vector<int>{3});
}

TEST_CASE("non-well-formed ambient stops at the verdict") {
    WeightSystem ws;
    ws.w = {21, 14, 6, 3};
    ws.d = 42;
    auto H = HypersurfaceFamily::make({21, 14, 6, 3}, 42, generic_support(ws));
    auto rep = singular_locus(H);
    CHECK(!rep.well_formed);
    CHECK(rep.edge_points.empty());
    CHECK(rep.vertex_points.empty());
}

TEST_CASE("allowed multiset budget in the trivial-canonical test") {
    // P(4,3,3,2)/12: four 1/3(1,2) and three 1/2(1,1) points, all du val,
    // so the verdict holds with or without an explicit budget
    auto H = generic_family({4, 3, 3, 2}, 12);
    auto rep = singular_locus(H);
    CHECK(rep.quasismooth);
    CHECK(rep.well_formed);
    auto ts = rep.all_types();
    CHECK(ts.size() == 7);
    std::vector<CyclicQuotient> allowed(4, CyclicQuotient::surface(3, 1, 2));
    CHECK(is_k3(H, allowed));
    CHECK(is_k3(H, {}));
}

TEST_CASE("plane curve points collect edge and vertex stabilizers") {
    WeightSystem ws;
    ws.w = {21, 14, 6};
    ws.d = 42;
    MonomialSupport sup;
    sup.nvars = 3;
    sup.monomials = {{2, 0, 0}, {0, 3, 0}, {0, 0, 7}};
    auto pts = curve_points(ws, sup);
    std::vector<Int> alphas;
    for (const auto& p : pts) alphas.push_back(p.alpha);
    std::sort(alphas.begin(), alphas.end());
    CHECK(alphas == std::vector<Int>{2, 3, 7});

    // x^2 + y^3 + y z^5 in P(15,10,4)/30: a vertex point with alpha = 4
    WeightSystem ws2;
    ws2.w = {15, 10, 4};
    ws2.d = 30;
    MonomialSupport sup2;
    sup2.nvars = 3;
    sup2.monomials = {{2, 0, 0}, {0, 3, 0}, {0, 1, 5}};
    auto pts2 = curve_points(ws2, sup2);
    std::vector<Int> alphas2;
    bool vertex_seen = false;
    for (const auto& p : pts2) {
        alphas2.push_back(p.alpha);
        if (p.vertex == 2) {
            vertex_seen = true;
            CHECK(p.alpha == 4);
        }
    }
    std::sort(alphas2.begin(), alphas2.end());
    CHECK(alphas2 == std::vector<Int>{2, 4, 5});
    CHECK(vertex_seen);
}
