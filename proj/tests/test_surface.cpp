#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmsx/jsonio.hpp"
#include "dmsx/surface.hpp"

using namespace dmsx;

namespace {
// Annulus with a self-folded polygon: marked points {u1,u2} on the outer
// circle, {v1} on the inner one; w loops at u1 around the core, y joins u1 to
// u2 outside w, z joins u1 to v1 inside w. The inner polygon [w, z, boundary,
// z-reversed] is self-folded in z.
SurfaceSpec selfFoldedAnnulus() {
    SurfaceSpec s;
    s.name = "annulus_selffolded";
    s.arcs = {"w", "y", "z"};
    Polygon A;  // digon between y and the short outer segment
    A.sides = {Side::makeArc(1, false), Side::makeBoundary()};
    A.cornerDegrees = {1};
    Polygon B;  // between w and the outer circle
    B.sides = {Side::makeArc(0, false), Side::makeArc(1, true), Side::makeBoundary()};
    B.cornerDegrees = {1, 1};
    Polygon C;  // inside w, around the inner circle
    C.sides = {Side::makeArc(0, true), Side::makeArc(2, false), Side::makeBoundary(),
               Side::makeArc(2, true)};
    C.cornerDegrees = {1, 1, 1};
    s.polygons = {A, B, C};
    return s;
}
}  // namespace

TEST_CASE("disk_a seeds validate") {
    for (int n : {1, 2, 3, 4}) {
        SurfaceSpec spec = seed_disk_a(n);
        ValidationReport rep = Surface::validate(spec);
        INFO(rep.str());
        CHECK(rep.ok);
        CHECK(rep.genus == 0);
        CHECK(rep.boundaryComponents == 1);
        CHECK(rep.openMarked == n + 1);
        CHECK(rep.closedMarked == n + 1);
        CHECK(!rep.selfFolded);
    }
    // disk_a(1): 1 arc, 2 one-sided polygons, f=1 each
    SurfaceSpec d1 = seed_disk_a(1);
    CHECK(d1.polygons.size() == 2);
    for (const auto& p : d1.polygons) CHECK(p.cornerDegrees == std::vector<int>{1});
}

TEST_CASE("disk_a(2) sum rule examples") {
    SurfaceSpec spec = seed_disk_a(2);
    CHECK(spec.polygons.size() == 3);
    // middle polygon has 2 arc sides with f=(1,1)
    CHECK(spec.polygons[1].cornerDegrees == std::vector<int>({1, 1}));
    // f=(2,0) keeps the sum rule; f=(2,1) violates it
    SurfaceSpec ok = spec;
    ok.polygons[1].cornerDegrees = {2, 0};
    CHECK(Surface::validate(ok).ok);
    SurfaceSpec bad = spec;
    bad.polygons[1].cornerDegrees = {2, 1};
    ValidationReport rep = Surface::validate(bad);
    CHECK(!rep.ok);
    CHECK(rep.errors[0].first == SurfaceError::DegreeSumViolation);
}

TEST_CASE("annulus seeds validate") {
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        SurfaceSpec spec = seed_annulus(p, q);
        ValidationReport rep = Surface::validate(spec);
        INFO(spec.name, ": ", rep.str());
        CHECK(rep.ok);
        CHECK(rep.genus == 0);
        CHECK(rep.boundaryComponents == 2);
        CHECK(rep.openMarked == p + q);
    }
    CHECK(seed_annulus(1, 1).arcs.size() == 2);
    CHECK(seed_annulus(1, 1).polygons.size() == 2);
}

TEST_CASE("torus seed validates") {
    SurfaceSpec spec = seed_torus1(4);
    ValidationReport rep = Surface::validate(spec);
    INFO(rep.str());
    CHECK(rep.ok);
    CHECK(rep.genus == 1);
    CHECK(rep.boundaryComponents == 1);
    CHECK(rep.openMarked == 4);
    CHECK(rep.selfFolded);
    CHECK_THROWS(seed_torus1(3));
}

TEST_CASE("self-folded annulus example") {
    SurfaceSpec spec = selfFoldedAnnulus();
    ValidationReport rep = Surface::validate(spec);
    INFO(rep.str());
    CHECK(rep.ok);
    CHECK(rep.genus == 0);
    CHECK(rep.boundaryComponents == 2);
    CHECK(rep.selfFolded);
    bool hasNote = false;
    for (const auto& w : rep.warnings)
        if (w.find("self-folded") != std::string::npos) hasNote = true;
    CHECK(hasNote);
}

TEST_CASE("regrade_arc") {
    SurfaceSpec spec = seed_disk_a(2);
    CHECK(regrade_arc(spec, 0, 0) == spec);
    SurfaceSpec r = regrade_arc(spec, 0, 1);
    CHECK(Surface::validate(r).ok);
    CHECK(regrade_arc(r, 0, -1) == spec);
    CHECK_THROWS(regrade_arc(spec, 5, 1));
}

TEST_CASE("json round trip is bit-exact") {
    for (const SurfaceSpec& spec :
         {seed_disk_a(3), seed_annulus(2, 1), seed_torus1(4), selfFoldedAnnulus()}) {
        std::string text = surfaceToJson(spec);
        SurfaceSpec back = surfaceFromJson(text);
        CHECK(back == spec);
        CHECK(surfaceToJson(back) == text);
    }
}

TEST_CASE("seed name parsing") {
    CHECK(seed_surface("disk_a2").has_value());
    CHECK(seed_surface("disk_a(2)").has_value());
    CHECK(seed_surface("annulus(2,1)").has_value());
    CHECK(seed_surface("annulus2_1").has_value());
    CHECK(seed_surface("torus1_4").has_value());
    CHECK(!seed_surface("sphere").has_value());
}

TEST_CASE("slide on disk_a(2) gives the other dissection") {
    Surface s(seed_disk_a(2));
    bool slid = false;
    for (int arc : {0, 1})
        for (bool toward : {true, false}) {
            try {
                SlideResult res = slide(s, arc, toward);
                CHECK(Surface::validate(res.spec).ok);
                slid = true;
            } catch (const std::exception&) {
            }
        }
    CHECK(slid);
}
