#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmsx/curveops.hpp"
#include "dmsx/intersect.hpp"

using namespace dmsx;

TEST_CASE("classification of twist-orbit curves") {
    Surface s(seed_disk_a(3));
    // braid-twist images of closed arcs stay closed arcs
    std::vector<Walk> frontier = dual_arcs(s);
    for (int depth = 0; depth < 2; ++depth) {
        std::vector<Walk> next;
        for (const Walk& c : frontier)
            for (int g = 0; g < 3; ++g)
                for (int eps : {1, -1}) {
                    Walk img = braidTwistDual(s, g, eps, c);
                    CHECK(classify(s, img) == CurveType::ClosedArc);
                    CHECK(img.isNormalized());
                    next.push_back(img);
                }
        frontier = std::move(next);
    }
}

TEST_CASE("normalize is idempotent and preserves q_int on orbit samples") {
    Surface s(seed_annulus(2, 1));
    Walk a = applyWord(s, {{0, 1}, {1, -1}}, dualArc(s, 2));
    Walk b = applyWord(s, {{2, 1}, {0, 1}}, dualArc(s, 1));
    CHECK(a.normalized().data() == a.data());
    CHECK(b.normalized().data() == b.data());
    BiLaurent v = q_int(s, a, b);
    CHECK(v == q_int(s, a.normalized(), b.normalized()));
}

TEST_CASE("extension that disconnects (union of two curves)") {
    Surface s(seed_disk_a(2));
    // a loop at one decoration: extend a dual germ with a shifted copy of
    // itself (identical germs take the full-turn smoothing)
    Walk s1 = dualArc(s, 0);
    Walk s1m = s1.data().start.polygon == 1 ? s1 : s1.reversed();
    auto loop = extend(s, s1m, s1m.shifted({1, 1}));
    REQUIRE(loop.size() == 1);
    Walk eta = loop[0];
    CHECK(eta.data().start == eta.data().end);
    auto t = classify(s, eta);
    CHECK((t == CurveType::AdmissibleClosed || t == CurveType::ClosedArc));
    // sigma-bar wedge sigma on the loop splits into two curves
    auto split = extend(s, eta, eta.reversed());
    CHECK(split.size() == 2);
    for (const Walk& piece : split) {
        auto tp = classify(s, piece);
        CHECK((tp == CurveType::ClosedArc || tp == CurveType::AdmissibleClosed));
    }
}

TEST_CASE("decompose requires a reachable decoration") {
    Surface s(seed_disk_a(3));
    Walk tw = applyWord(s, {{1, 1}, {0, 1}}, dualArc(s, 2));
    REQUIRE(tw.size() >= 2);
    bool any = false;
    for (int seg = 0; seg + 1 < tw.size(); ++seg) {
        try {
            DecomposeResult r = decompose(s, tw, seg, true);
            any = true;
        } catch (const std::exception&) {
        }
    }
    CHECK(any);
}

TEST_CASE("twist word conjugation acts like the twist along the image arc") {
    Surface s(seed_disk_a(3));
    // alpha = B_{g1}(dual g2); B_alpha = w B_{g2} w^{-1}
    TwistWord w = {{0, 1}};
    Walk beta = dualArc(s, 2);
    Walk viaConj = braidTwist(s, w, 1, 1, beta);
    // invariance: q_int(alpha, beta) = q_int(alpha, B_alpha^{-1} beta) etc.
    Walk alpha = applyWord(s, w, dualArc(s, 1));
    BiLaurent before = q_int(s, alpha, beta);
    Walk back = braidTwist(s, w, 1, -1, viaConj);
    CHECK(back.canonical().key() == beta.canonical().key());
    CHECK(q_int(s, alpha, viaConj) == q_int(s, braidTwist(s, w, 1, -1, alpha), beta));
    (void)before;
}

TEST_CASE("curve operations on the self-folded torus") {
    Surface s(seed_torus1(4));
    // duals of the chain arcs are closed arcs; core arcs are self-folded
    int closedArcDuals = 0;
    for (int a = 0; a < s.arcCount(); ++a) {
        Walk d = dualArc(s, a);
        if (classify(s, d) == CurveType::ClosedArc) ++closedArcDuals;
    }
    CHECK(closedArcDuals >= 3);
    // twist along a chain dual and check q_int invariance
    int g = -1;
    for (int a = 0; a < s.arcCount(); ++a)
        if (s.occ(a, 0).polygon != s.occ(a, 1).polygon) g = a;
    REQUIRE(g >= 0);
    Walk x = dualArc(s, g);
    for (int a = 0; a < s.arcCount(); ++a) {
        Walk y = dualArc(s, a);
        BiLaurent v = q_int(s, x, y);
        Walk tx = braidTwistDual(s, g, 1, x);
        Walk ty = braidTwistDual(s, g, 1, y);
        CHECK(q_int(s, tx, ty) == v);
    }
}
