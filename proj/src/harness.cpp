#include "dmsx/harness.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "dmsx/intersect.hpp"
#include "dmsx/jsonio.hpp"

namespace dmsx {

void VerificationReport::add(const std::string& name, bool pass, const std::string& artifact) {
    auto& c = checks[name];
    if (pass)
        ++c.pass;
    else {
        ++c.fail;
        if (!artifact.empty() && counterexamples.size() < 32) counterexamples.push_back(artifact);
    }
}

void VerificationReport::merge(const VerificationReport& o) {
    for (const auto& [k, c] : o.checks) {
        checks[k].pass += c.pass;
        checks[k].fail += c.fail;
    }
    for (const auto& a : o.counterexamples)
        if (counterexamples.size() < 32) counterexamples.push_back(a);
    truncated = truncated || o.truncated;
}

std::string VerificationReport::str(bool withTiming) const {
    std::ostringstream os;
    for (const auto& [k, c] : checks)
        os << (c.fail ? "FAIL " : "pass ") << k << ": " << c.pass << " ok, " << c.fail << " failed\n";
    if (truncated) os << "note: enumeration truncated by the memory cap\n";
    for (const auto& a : counterexamples) os << "counterexample: " << a << "\n";
    if (withTiming) os << "elapsed: " << elapsedMs << " ms\n";
    return os.str();
}

std::string VerificationReport::json() const {
    std::ostringstream os;
    os << "{\n  \"checks\": {";
    bool first = true;
    for (const auto& [k, c] : checks) {
        os << (first ? "" : ",") << "\n    \"" << k << "\": {\"pass\": " << c.pass
           << ", \"fail\": " << c.fail << "}";
        first = false;
    }
    os << "\n  },\n  \"truncated\": " << (truncated ? "true" : "false") << ",\n  \"ok\": "
       << (ok() ? "true" : "false") << ",\n  \"counterexamples\": [";
    first = true;
    for (const auto& a : counterexamples) {
        os << (first ? "" : ",") << "\n    " << a;
        first = false;
    }
    os << "\n  ]\n}\n";
    return os.str();
}

std::vector<EnumeratedCurve> enumerateClosedArcs(const Surface& s, const OrbitSpec& orbit,
                                                 bool* truncated) {
    std::vector<EnumeratedCurve> out;
    std::map<std::string, int> seen;
    std::vector<int> generatorArcs;
    for (int a = 0; a < s.arcCount(); ++a)
        if (s.occ(a, 0).polygon != s.occ(a, 1).polygon) generatorArcs.push_back(a);
    if (truncated) *truncated = false;

    std::vector<EnumeratedCurve> frontier;
    for (int a = 0; a < s.arcCount(); ++a) {
        Walk d = dualArc(s, a);
        if (classify(s, d) != CurveType::ClosedArc) continue;
        EnumeratedCurve ec{d.canonical(), {}, a};
        std::string key = ec.walk.key();
        if (seen.emplace(key, 1).second) {
            out.push_back(ec);
            frontier.push_back(ec);
        }
    }
    for (int depth = 1; depth <= orbit.depth; ++depth) {
        std::vector<EnumeratedCurve> next;
        for (const EnumeratedCurve& ec : frontier) {
            for (int g : generatorArcs)
                for (int eps : {1, -1}) {
                    if (out.size() >= orbit.maxCurves) {
                        if (truncated) *truncated = true;
                        return out;
                    }
                    Walk img = braidTwistDual(s, g, eps, ec.walk).canonical();
                    std::string key = img.key();
                    if (!seen.emplace(key, 1).second) continue;
                    TwistWord w = ec.word;
                    w.push_back({g, eps});
                    EnumeratedCurve img2{img, w, ec.seedArc};
                    out.push_back(img2);
                    next.push_back(img2);
                }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<Walk> extendPartners(const Surface& s, const std::vector<EnumeratedCurve>& arcs,
                                 size_t want, unsigned seed) {
    std::vector<Walk> out;
    std::map<std::string, int> seen;
    std::mt19937 rng(seed);
    if (arcs.empty()) return out;
    size_t guard = 40 * (want + 1);
    while (out.size() < want && guard-- > 0) {
        const Walk& a = arcs[rng() % arcs.size()].walk;
        const Walk& b = arcs[rng() % arcs.size()].walk;
        // orient both out of a shared decoration, if any
        for (bool aStart : {true, false}) {
            for (bool bStart : {true, false}) {
                Endpoint ea = aStart ? a.data().start : a.data().end;
                Endpoint eb = bStart ? b.data().start : b.data().end;
                if (!(ea == eb) || ea.kind != Endpoint::Decoration) continue;
                Walk sa = aStart ? a : a.reversed();
                Walk sb = bStart ? b : b.reversed();
                for (Walk& r : extend(s, sa, sb)) {
                    CurveType t = classify(s, r);
                    if (t != CurveType::ClosedArc && t != CurveType::AdmissibleClosed) continue;
                    if (r.size() == 0) continue;
                    Walk c = r.canonical();
                    if (seen.emplace(c.key(), 1).second) out.push_back(c);
                }
                if (out.size() >= want) return out;
            }
        }
    }
    return out;
}

namespace {

template <typename Task>
VerificationReport runParallel(int jobs, size_t n, Task task) {
    if (jobs < 1) jobs = 1;
    std::vector<VerificationReport> parts(n);
    std::atomic<size_t> nextIdx{0};
    auto worker = [&] {
        for (;;) {
            size_t i = nextIdx.fetch_add(1);
            if (i >= n) break;
            task(i, parts[i]);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    VerificationReport rep;
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

std::string pairArtifact(const Surface& s, const Walk& a, const Walk& b, const BiLaurent& lhs,
                         const BiLaurent& rhs) {
    std::ostringstream os;
    os << "{\"surface\": \"" << s.name() << "\", \"curveA\": " << curveToJson(s, a.data())
       << ", \"curveB\": " << curveToJson(s, b.data()) << ", \"lhs\": \"" << lhs.str()
       << "\", \"rhs\": \"" << rhs.str() << "\"}";
    std::string t = os.str();
    std::string clean;
    for (char c : t)
        if (c != '\n') clean += c;
    return clean;
}

}  // namespace

VerificationReport verifyMainTheorem(const Surface& s, const OrbitSpec& orbit, int jobs,
                                     size_t extendSamples, bool withOracle) {
    auto t0 = std::chrono::steady_clock::now();
    bool truncated = false;
    std::vector<EnumeratedCurve> arcs = enumerateClosedArcs(s, orbit, &truncated);
    std::vector<Walk> partners = extendPartners(s, arcs, extendSamples, orbit.seed);

    QuiverDGA quiver(s);
    ExtAlgebra ext(quiver);
    StringCat cat(ext);

    std::vector<Walk> sigmas, taus;
    for (const auto& ec : arcs) sigmas.push_back(ec.walk);
    taus = sigmas;
    for (const auto& p : partners) taus.push_back(p);

    std::vector<TwistedComplex> sigmaStrings, tauStrings;
    for (const auto& w : sigmas) sigmaStrings.push_back(cat.stringOfCurve(w));
    for (const auto& w : taus) tauStrings.push_back(cat.stringOfCurve(w));

    size_t nPairs = sigmas.size() * taus.size();
    VerificationReport rep = runParallel(jobs, nPairs, [&](size_t idx, VerificationReport& part) {
        size_t i = idx / taus.size(), j = idx % taus.size();
        const Walk& a = sigmas[i];
        const Walk& b = taus[j];
        BiLaurent geom, alg;
        try {
            CrossingTable tab = crossings(s, a, b);
            geom = tab.qint;
            // crossings() verifies both index sum rules at every crossing
            part.add("index-sum-rules", true);
            alg = cat.qdimHom(sigmaStrings[i], tauStrings[j]);
            part.add("main-identity", geom == alg, geom == alg ? "" : pairArtifact(s, a, b, geom, alg));
            // Serre duality, both sides
            BiLaurent geomT = q_int(s, b, a);
            bool serreGeom = geom == qpow(BiDegree{0, 1}) * bl_involute(geomT);
            BiLaurent algT = cat.qdimHom(tauStrings[j], sigmaStrings[i]);
            bool serreAlg = alg == qpow(BiDegree{0, 1}) * bl_involute(algT);
            part.add("serre-duality", serreGeom && serreAlg,
                     serreGeom && serreAlg ? "" : pairArtifact(s, a, b, geom, geomT));
            if (i == 0 && j < sigmas.size()) {
                BiLaurent diag = cat.qdimHom(tauStrings[j], tauStrings[j]);
                BiLaurent want = BiLaurent(1) + qpow(BiDegree{0, 1});
                part.add("sphericity", diag == want,
                         diag == want ? "" : pairArtifact(s, b, b, diag, want));
            }
            if (withOracle && !a.sameUnderlying(b)) {
                Arrangement arr(s, {&a, &b});
                long long combinatorial = (long long)arr.interiorCrossings(0, 1).size();
                long long drawn = polylineInteriorCount(arr, 0, 1);
                part.add("oracle-agreement", combinatorial == drawn,
                         combinatorial == drawn
                             ? ""
                             : pairArtifact(s, a, b, BiLaurent(combinatorial), BiLaurent(drawn)));
                certifyMinimalPosition(s, a, b);
                part.add("bigon-certification", true);
            }
        } catch (const std::exception& e) {
            part.add("main-identity", false,
                     std::string("{\"error\": \"") + e.what() + "\"}");
        }
    });

    // fingerprints and zero-level restriction, per curve
    for (size_t j = 0; j < taus.size(); ++j) {
        auto fp = cat.fingerprint(tauStrings[j]);
        bool ok = true;
        for (int arc = 0; arc < s.arcCount(); ++arc)
            if (!(fp[arc] == q_int_open(s, arc, {}, taus[j]))) ok = false;
        rep.add("fingerprint", ok, ok ? "" : curveToJson(s, taus[j].data()));
        auto lag = cat.lagrangianCheck(taus[j]);
        if (lag.zeroLevel) rep.add("lagrangian-restriction", lag.stringUsesOnlyZeroPart);
    }
    rep.truncated = truncated;
    rep.elapsedMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

VerificationReport verifyTwistCompat(const Surface& s, const OrbitSpec& orbit, size_t samples,
                                     int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<EnumeratedCurve> arcs = enumerateClosedArcs(s, orbit);
    QuiverDGA quiver(s);
    ExtAlgebra ext(quiver);
    StringCat cat(ext);
    std::vector<TwistedComplex> probes;
    for (int a = 0; a < s.arcCount(); ++a) probes.push_back(cat.simple(a));

    std::mt19937 rng(orbit.seed);
    struct Sample {
        size_t ai, bi;
        int eps;
    };
    std::vector<Sample> picks;
    for (size_t k = 0; k < samples && !arcs.empty(); ++k)
        picks.push_back({rng() % arcs.size(), rng() % arcs.size(), (rng() & 1) ? 1 : -1});

    VerificationReport rep = runParallel(jobs, picks.size(), [&](size_t idx, VerificationReport& part) {
        const auto& pk = picks[idx];
        const EnumeratedCurve& alpha = arcs[pk.ai];
        const EnumeratedCurve& beta = arcs[pk.bi];
        try {
            Walk image = braidTwist(s, alpha.word, alpha.seedArc, pk.eps, beta.walk);
            // braid invariance of q_int
            Walk imageAlpha = braidTwist(s, alpha.word, alpha.seedArc, pk.eps, alpha.walk);
            BiLaurent before = q_int(s, alpha.walk, beta.walk);
            BiLaurent after = q_int(s, imageAlpha, image);
            part.add("twist-qint-invariance", before == after,
                     before == after ? "" : pairArtifact(s, alpha.walk, beta.walk, before, after));
            // spherical twist compatibility on fingerprints + probes
            TwistedComplex Xa = cat.stringOfCurve(alpha.walk);
            TwistedComplex Xb = cat.stringOfCurve(beta.walk);
            TwistedComplex tw = pk.eps > 0 ? cat.sphericalTwist(Xa, Xb) : cat.inverseSphericalTwist(Xa, Xb);
            TwistedComplex Xim = cat.stringOfCurve(image);
            bool match = cat.probeEqual(tw, Xim, probes);
            part.add("twist-compatibility", match,
                     match ? "" : pairArtifact(s, alpha.walk, image, cat.qdimHom(tw, tw),
                                               cat.qdimHom(Xim, Xim)));
            // inverse twists compose to the identity on fingerprints
            TwistedComplex back = pk.eps > 0 ? cat.inverseSphericalTwist(Xa, tw) : cat.sphericalTwist(Xa, tw);
            part.add("twist-inverse", cat.probeEqual(back, Xb, probes));
            Walk backCurve = braidTwist(s, alpha.word, alpha.seedArc, -pk.eps, image);
            part.add("twist-curve-inverse", backCurve.canonical().sameLift(beta.walk.canonical()));
        } catch (const std::exception& e) {
            part.add("twist-compatibility", false, std::string("{\"error\": \"") + e.what() + "\"}");
        }
    });

    // braid relation at Int = 1/2 on dual-arc pairs, to word length 6
    for (int a = 0; a < s.arcCount(); ++a)
        for (int b = 0; b < s.arcCount(); ++b) {
            if (a == b) continue;
            Walk da = dualArc(s, a), db = dualArc(s, b);
            if (classify(s, da) != CurveType::ClosedArc || classify(s, db) != CurveType::ClosedArc)
                continue;
            BiLaurent intAB = q_int(s, da, db);
            // Int_{S_Delta} = 1/2 means exactly one decoration crossing and no interior ones
            if (intAB.evalAtOne() != 1) continue;
            TwistWord lhs = {{a, 1}, {b, 1}, {a, 1}};
            TwistWord rhs = {{b, 1}, {a, 1}, {b, 1}};
            bool ok = true;
            for (int c = 0; c < s.arcCount() && ok; ++c) {
                Walk dc = dualArc(s, c);
                if (classify(s, dc) != CurveType::ClosedArc) continue;
                Walk l = applyWord(s, lhs, dc).canonical();
                Walk r = applyWord(s, rhs, dc).canonical();
                if (!l.sameLift(r) && !l.sameUnderlying(r)) ok = false;
            }
            rep.add("braid-relation", ok);
        }
    rep.elapsedMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

VerificationReport verifySlideInvariance(const Surface& s, int arc, bool towardHead,
                                         const OrbitSpec& orbit, size_t pairs) {
    VerificationReport rep;
    SlideResult sl = slide(s, arc, towardHead);
    Surface s2(sl.spec);
    // Generators usable on both systems: arcs other than the slid one and the
    // moved side, whose duals are the same curves before and after the slide.
    std::vector<int> commonGens;
    for (int a = 0; a < s.arcCount(); ++a) {
        if (a == arc || a == sl.movedArc) continue;
        if (s.occ(a, 0).polygon == s.occ(a, 1).polygon) continue;
        if (s2.occ(a, 0).polygon == s2.occ(a, 1).polygon) continue;
        commonGens.push_back(a);
    }
    if (commonGens.empty()) {
        rep.add("slide-qint-invariance", false, "{\"error\": \"no common generators\"}");
        return rep;
    }
    std::mt19937 rng(orbit.seed);
    auto randWord = [&](int len) {
        TwistWord w;
        for (int i = 0; i < len; ++i)
            w.push_back({commonGens[rng() % commonGens.size()], (rng() & 1) ? 1 : -1});
        return w;
    };
    for (size_t k = 0; k < pairs; ++k) {
        TwistWord wa = randWord((int)(rng() % (orbit.depth + 1)));
        TwistWord wb = randWord((int)(rng() % (orbit.depth + 1)));
        int sa = commonGens[rng() % commonGens.size()];
        int sb = commonGens[rng() % commonGens.size()];
        try {
            Walk a1 = applyWord(s, wa, dualArc(s, sa));
            Walk b1 = applyWord(s, wb, dualArc(s, sb));
            Walk a2 = applyWord(s2, wa, dualArc(s2, sa));
            Walk b2 = applyWord(s2, wb, dualArc(s2, sb));
            BiLaurent before = q_int(s, a1, b1);
            BiLaurent after = q_int(s2, a2, b2);
            rep.add("slide-qint-invariance", before == after,
                    before == after ? "" : pairArtifact(s, a1, b1, before, after));
        } catch (const std::exception& e) {
            rep.add("slide-qint-invariance", false, std::string("{\"error\": \"") + e.what() + "\"}");
        }
    }
    VerificationReport main2 = verifyMainTheorem(s2, OrbitSpec{1, orbit.seed, orbit.maxCurves}, 1, 10, false);
    rep.add("slide-main-identity", main2.checks["main-identity"].fail == 0);
    rep.merge(VerificationReport{});
    return rep;
}

}  // namespace dmsx
