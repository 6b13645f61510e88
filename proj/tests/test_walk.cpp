#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmsx/intersect.hpp"
#include "dmsx/jsonio.hpp"
#include "dmsx/walk.hpp"

using namespace dmsx;

TEST_CASE("dual arcs on disk_a(2)") {
    Surface s(seed_disk_a(2));
    auto duals = dual_arcs(s);
    REQUIRE(duals.size() == 2);
    for (const Walk& d : duals) {
        CHECK(d.size() == 1);
        CHECK(d.chi(0) == BiDegree{});
        CHECK(classify(s, d) == CurveType::ClosedArc);
    }
    // the two duals share exactly one decoration (the middle polygon)
    std::vector<int> polys;
    for (const Walk& d : duals) {
        polys.push_back(d.data().start.polygon);
        polys.push_back(d.data().end.polygon);
    }
    int shared = 0;
    for (int p = 0; p < s.polygonCount(); ++p) {
        int cnt = (int)std::count(polys.begin(), polys.end(), p);
        if (cnt == 2) ++shared;
    }
    CHECK(shared == 1);
}

TEST_CASE("normalize removes spikes") {
    Surface s(seed_disk_a(2));
    // dual of g1 with an inserted zero-sweep spike through g2
    Walk d = dualArc(s, 0);
    CurveWalk w = d.data();
    // spike: cross g2 into its far polygon and come straight back
    int g2 = 1;
    int occ = 0;  // occurrence in the middle polygon is either; find it
    occ = (s.occ(g2, 0).polygon == d.data().end.polygon) ? 1 : 0;
    // after the g1 passage we are in the middle polygon; sweep to g2, spike, return
    std::map<int, BiDegree> chiAt;
    chiAt[0] = w.chi0;
    Walk n = reduceRaw(s, w.start, w.end,
                       {w.passages[0], Passage{g2, occ}, Passage{g2, 1 - occ}}, {1, 0}, chiAt);
    CHECK(n.isNormalized());
    CHECK(n.size() == 1);
    CHECK(n.sameLift(d));
    CHECK(n.normalized().data() == n.data());  // idempotent
}

TEST_CASE("invert and shift") {
    Surface s(seed_disk_a(3));
    Walk d = dualArc(s, 1);
    CHECK(d.reversed().reversed().data() == d.data());
    CHECK(d.shifted({0, 0}).data() == d.data());
    Walk sh = d.shifted({2, -1});
    CHECK(sh.chi(0) == BiDegree{2, -1});
    CHECK(sh.shifted({-2, 1}).data() == d.data());
}

TEST_CASE("canonical form identifies orientations and shifts") {
    Surface s(seed_disk_a(2));
    Walk d = dualArc(s, 0);
    CHECK(d.canonical().key() == d.reversed().canonical().key());
    CHECK(d.canonical().key() == d.shifted({3, 1}).canonical().key());
    CHECK(d.canonical().key() != dualArc(s, 1).canonical().key());
}

TEST_CASE("curve json round trip") {
    Surface s(seed_annulus(2, 1));
    Walk d = dualArc(s, 2).shifted({1, -2});
    std::string text = curveToJson(s, d.data());
    CurveWalk back = curveFromJson(s, text);
    CHECK(back == d.data());
    CHECK(curveToJson(s, back) == text);
}

TEST_CASE("walk validity errors") {
    Surface s(seed_disk_a(2));
    CurveWalk bad;
    bad.start = Endpoint::decoration(0);
    bad.end = Endpoint::decoration(0);
    bad.passages = {Passage{0, 1}, Passage{1, 1}};
    bad.sweeps = {0};  // zero sweep between different arcs
    CHECK_THROWS(Walk(s, bad));
}
