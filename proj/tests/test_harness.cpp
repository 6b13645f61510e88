#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dmsx/harness.hpp"
#include "dmsx/intersect.hpp"

using namespace dmsx;

TEST_CASE("orbit enumeration on disk_a(2)") {
    Surface s(seed_disk_a(2));
    auto depth0 = enumerateClosedArcs(s, OrbitSpec{0, 1, 1000});
    CHECK(depth0.size() == 2);  // exactly the dual arcs
    auto depth1 = enumerateClosedArcs(s, OrbitSpec{1, 1, 1000});
    auto depth2 = enumerateClosedArcs(s, OrbitSpec{2, 1, 1000});
    CHECK(depth1.size() >= depth0.size());
    CHECK(depth2.size() >= depth1.size());
    // deduplicated: all canonical keys distinct
    std::set<std::string> keys;
    for (const auto& ec : depth2) keys.insert(ec.walk.key());
    CHECK(keys.size() == depth2.size());
    // every enumerated curve is a closed arc reproducible from its word
    for (const auto& ec : depth2) {
        CHECK(classify(s, ec.walk) == CurveType::ClosedArc);
        Walk again = applyWord(s, ec.word, dualArc(s, ec.seedArc)).canonical();
        CHECK(again.key() == ec.walk.key());
    }
}

TEST_CASE("injectivity witness: distinct curves have distinct signatures") {
    Surface s(seed_disk_a(2));
    QuiverDGA q(s);
    ExtAlgebra ext(q);
    StringCat cat(ext);
    auto arcs = enumerateClosedArcs(s, OrbitSpec{2, 1, 1000});
    // fingerprints separate distinct enumerated curves here
    std::set<std::string> sigs;
    for (const auto& ec : arcs) {
        std::string sig;
        for (const auto& p : cat.fingerprint(cat.stringOfCurve(ec.walk))) sig += p.str() + "|";
        sigs.insert(sig);
    }
    CHECK(sigs.size() == arcs.size());
}

TEST_CASE("extension partners are admissible and deduplicated") {
    Surface s(seed_disk_a(3));
    auto arcs = enumerateClosedArcs(s, OrbitSpec{1, 1, 1000});
    auto partners = extendPartners(s, arcs, 12, 7);
    CHECK(partners.size() >= 8);
    std::set<std::string> keys;
    for (const Walk& p : partners) {
        auto t = classify(s, p);
        CHECK((t == CurveType::ClosedArc || t == CurveType::AdmissibleClosed));
        keys.insert(p.key());
    }
    CHECK(keys.size() == partners.size());
}

TEST_CASE("verification campaign on disk_a(2) passes and is deterministic") {
    Surface s(seed_disk_a(2));
    OrbitSpec orbit{2, 1, 2000};
    VerificationReport a = verifyMainTheorem(s, orbit, 1, 10, true);
    INFO(a.str(false));
    CHECK(a.ok());
    CHECK(a.checks["main-identity"].pass > 0);
    VerificationReport b = verifyMainTheorem(s, orbit, 4, 10, true);
    CHECK(a.json() == b.json());  // parallel == serial, byte-identical
}

TEST_CASE("twist compatibility campaign on disk_a(2)") {
    Surface s(seed_disk_a(2));
    OrbitSpec orbit{1, 3, 2000};
    VerificationReport rep = verifyTwistCompat(s, orbit, 12, 2);
    INFO(rep.str(false));
    CHECK(rep.ok());
    CHECK(rep.checks["twist-compatibility"].pass > 0);
    CHECK(rep.checks["braid-relation"].pass > 0);
}

TEST_CASE("slide invariance campaign on disk_a(3)") {
    Surface s(seed_disk_a(3));
    bool ran = false;
    for (int arc = 0; arc < 3 && !ran; ++arc)
        for (bool toward : {true, false}) {
            try {
                VerificationReport rep = verifySlideInvariance(s, arc, toward, OrbitSpec{1, 5, 1000}, 8);
                INFO(rep.str(false));
                CHECK(rep.ok());
                ran = true;
                break;
            } catch (const std::exception&) {
            }
        }
    CHECK(ran);
}
