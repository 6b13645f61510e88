#include "dmsx/curveops.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmsx/intersect.hpp"

namespace dmsx {

namespace {

// Signed ray count of the short clockwise/counterclockwise hop from the angular
// position `from` to the first lift of station `to` in direction eps.
int shortRays(const Arrangement& arr, int polygon, const mpq_class& from, const mpq_class& to,
              int eps) {
    mpq_class target = to;
    if (eps > 0) {
        while (target <= from) target += mqOf(2);
        while (target - mqOf(2) > from) target -= mqOf(2);
        return arr.raysIn(polygon, from, target);
    }
    while (target >= from) target -= mqOf(2);
    while (target + mqOf(2) < from) target += mqOf(2);
    return -arr.raysIn(polygon, target, from);
}

}  // namespace

std::vector<Walk> extend(const Surface& s, const Walk& sigmaIn, const Walk& tauIn) {
    Walk sigma = sigmaIn.normalized();
    Walk tau = tauIn.normalized();
    if (sigma.data().start.kind != Endpoint::Decoration || tau.data().start.kind != Endpoint::Decoration ||
        sigma.data().start.polygon != tau.data().start.polygon)
        throw std::runtime_error("EndpointMismatch");
    int zPoly = sigma.data().start.polygon;
    int t;
    if (sigma.sameUnderlying(tau)) {
        t = s.view(zPoly).m();  // identical germs: the positive smoothing is the 2pi one
    } else {
        Arrangement arr(s, {&sigma, &tau});
        Arrangement::Gap g = arr.germGap(0, true, 1, true);
        t = g.identical ? s.view(zPoly).m() : g.t;
    }
    Walk rsigma = sigma.reversed();
    std::vector<Passage> ps = rsigma.data().passages;
    std::vector<int> sw = rsigma.data().sweeps;
    sw.push_back(t);
    for (const Passage& p : tau.data().passages) ps.push_back(p);
    for (int v : tau.data().sweeps) sw.push_back(v);
    // The tau part keeps its bi-indices (the grading is inherited from tau);
    // the reversed-sigma part is pinned through the smoothing connector.
    std::map<int, BiDegree> chiAt;
    int off = sigma.size();
    for (int j = 0; j < tau.size(); ++j) chiAt[off + j] = tau.chi(j);
    BiDegree lastRsigma;
    if (t >= 1) {
        int fromSlot = s.occ(ps[off - 1].arc, ps[off - 1].toOcc).slot;
        lastRsigma = tau.chi(0) + s.sweepDegree(zPoly, fromSlot, t);
    } else {
        // zero-gap junction: a clockwise hook, chi_in = chi_out + 1
        lastRsigma = tau.chi(0) + BiDegree{1, 0};
    }
    BiDegree delta = lastRsigma - rsigma.chi(rsigma.size() - 1);
    for (int j = 0; j < rsigma.size(); ++j) chiAt[j] = rsigma.chi(j) + delta;
    Walk joined = reduceRaw(s, rsigma.data().start, tau.data().end, std::move(ps), std::move(sw), chiAt);

    // Unknot a once-decorated monogon if the smoothing created one: split the
    // walk at a segment of the wrapped polygon so that both pieces come out
    // admissible, pulling the loop through its decoration.
    if (joined.size() > 0) {
        Arrangement self(s, {&joined});
        const CurveWalk& w = joined.data();
        auto trySplit = [&](int monoPolygon) -> std::optional<std::vector<Walk>> {
            for (int j = 0; j + 1 < joined.size(); ++j) {
                if (joined.polygonAfter(j) != monoPolygon) continue;
                CurveWalk c1;
                c1.start = w.start;
                c1.end = Endpoint::decoration(monoPolygon);
                c1.passages.assign(w.passages.begin(), w.passages.begin() + j + 1);
                c1.sweeps.assign(w.sweeps.begin(), w.sweeps.begin() + j);
                c1.chi0 = w.chi0;
                CurveWalk c2;
                c2.start = Endpoint::decoration(monoPolygon);
                c2.end = w.end;
                c2.passages.assign(w.passages.begin() + j + 1, w.passages.end());
                c2.sweeps.assign(w.sweeps.begin() + j + 1, w.sweeps.end());
                c2.chi0 = joined.chi(j + 1);
                std::vector<Walk> out;
                bool ok = true;
                for (CurveWalk* c : {&c1, &c2}) {
                    Walk piece = Walk(s, *c).normalized();
                    if (piece.size() == 0) continue;
                    CurveType t = classify(s, piece);
                    if (t != CurveType::ClosedArc && t != CurveType::AdmissibleClosed) ok = false;
                    out.push_back(piece);
                }
                if (ok && !out.empty()) return out;
            }
            return std::nullopt;
        };
        for (const InteriorCrossing& sc : self.selfCrossings(0)) {
            auto mono = self.onceDecoratedMonogon(0, sc);
            if (!mono.found) continue;
            if (auto out = trySplit(mono.polygon)) return *out;
        }
    }
    return {joined};
}

DecomposeResult decompose(const Surface& s, const Walk& etaIn, int attachSeg, bool checkPostconditions) {
    Walk eta = etaIn.normalized();
    if (attachSeg < 0 || attachSeg + 1 >= eta.size()) throw std::runtime_error("BadAttachment: no such segment");
    Arrangement arr(s, {&eta});
    const Branch& bj = arr.branches()[arr.branchOf(0, attachSeg)];
    int Q = bj.polygon;
    // candidate radial directions: midpoints of the subdivision of bj's span by
    // the lifts of other branches' endpoints
    std::vector<mpq_class> cuts = {bj.lo(), bj.hi()};
    long long kspan = std::abs(bj.sweep) / 2 + 3;
    for (const Branch& o : arr.branches()) {
        if (o.polygon != Q) continue;
        for (mpq_class v : {o.lo(), o.hi()})
            for (long long k = -kspan; k <= kspan; ++k) {
                mpq_class lv = v + mqOf(2 * k);
                if (bj.lo() < lv && lv < bj.hi()) cuts.push_back(lv);
            }
    }
    std::sort(cuts.begin(), cuts.end());
    std::optional<mpq_class> chosen;
    for (size_t i = 0; i + 1 < cuts.size() && !chosen; ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        mpq_class mid = (cuts[i] + cuts[i + 1]) / 2;
        // bj must be the deepest branch of eta over `mid`: no other branch both
        // spans mid and strictly contains bj's span (those are forced deeper).
        bool ok = true;
        for (const Branch& o : arr.branches()) {
            if (o.polygon != Q || (&o == &bj)) continue;
            if (o.germ) continue;
            long long kspan2 = (std::abs(bj.sweep) + std::abs(o.sweep)) / 2 + 3;
            for (long long k = -kspan2; k <= kspan2 && ok; ++k) {
                mpq_class lo = o.lo() + mqOf(2 * k), hi = o.hi() + mqOf(2 * k);
                if (lo < mid && mid < hi && lo < bj.lo() && bj.hi() < hi) ok = false;
            }
        }
        if (ok) chosen = mid;
    }
    if (!chosen) throw std::runtime_error("BadAttachment: segment is covered by deeper strands");

    const CurveWalk& w = eta.data();
    CurveWalk c1;
    c1.start = w.start;
    c1.end = Endpoint::decoration(Q);
    c1.passages.assign(w.passages.begin(), w.passages.begin() + attachSeg + 1);
    c1.sweeps.assign(w.sweeps.begin(), w.sweeps.begin() + attachSeg);
    c1.chi0 = w.chi0;
    CurveWalk c2;
    c2.start = Endpoint::decoration(Q);
    c2.end = w.end;
    c2.passages.assign(w.passages.begin() + attachSeg + 1, w.passages.end());
    c2.sweeps.assign(w.sweeps.begin() + attachSeg + 1, w.sweeps.end());
    c2.chi0 = eta.chi(attachSeg + 1);
    DecomposeResult res{Walk(s, std::move(c1)).normalized().reversed(), Walk(s, std::move(c2)).normalized()};
    if (checkPostconditions) {
        for (int a = 0; a < s.arcCount(); ++a) {
            BiLaurent lhs = bl_add(q_int_open(s, a, {}, res.alpha), q_int_open(s, a, {}, res.beta));
            if (!(lhs == q_int_open(s, a, {}, eta)))
                throw std::runtime_error("decompose: fingerprint additivity failed");
        }
        auto rec = extend(s, res.alpha, res.beta);
        if (rec.size() != 1 || !rec[0].sameLift(eta))
            throw std::runtime_error("decompose: reconstruction failed");
    }
    return res;
}

Walk braidTwistDual(const Surface& s, int arc, int eps, const Walk& curveIn) {
    if (eps != 1 && eps != -1) throw std::runtime_error("braid twist: eps must be +-1");
    const Occurrence& oA = s.occ(arc, 0);
    const Occurrence& oB = s.occ(arc, 1);
    if (oA.polygon == oB.polygon) throw std::runtime_error("NotAClosedArc: self-folded dual");
    Walk dual = dualArc(s, arc);
    Walk tau = curveIn.normalized();
    // The twist fixes its core arc as a curve; the lift is translated by the
    // half-turn across the cut, measured as eps*(1 - X).
    if (tau.sameUnderlying(dual)) return tau.shifted(BiDegree{eps, -eps});

    Arrangement arr(s, {&tau, &dual});
    PassageRef sp{1, 0};
    auto gHat = [&](int which) { return arr.stationU(sp, which); };
    int mOf[2] = {s.view(oA.polygon).m(), s.view(oB.polygon).m()};
    auto polyOf = [&](int which) { return which == 0 ? oA.polygon : oB.polygon; };

    const CurveWalk& w = tau.data();
    CurveWalk nw;
    nw.start = w.start;
    nw.end = w.end;
    std::vector<int> anchorMap;  // new index of each original passage

    auto whichOf = [&](int polygon) { return polygon == oA.polygon ? 0 : (polygon == oB.polygon ? 1 : -1); };
    std::optional<int> pending;  // sweep before the next pushed passage; nullopt at the very start

    auto pushPassage = [&](Passage p) {
        if (pending) nw.sweeps.push_back(*pending);
        pending.reset();
        nw.passages.push_back(p);
    };

    // start germ
    {
        int which = whichOf(w.start.polygon);
        if (which >= 0) {
            int Q = polyOf(which);
            int Qbar = polyOf(1 - which);
            nw.start = Endpoint::decoration(Qbar);
            pushPassage(Passage{arc, which});
            // short hop from the dual's station to the original first-passage station
            int germWhich = 1 - w.passages[0].toOcc;
            mpq_class u0 = arr.stationU(PassageRef{0, 0}, germWhich);
            pending = shortRays(arr, Q, gHat(which), u0, eps);
        }
    }
    for (int j = 0; j < tau.size(); ++j) {
        pushPassage(w.passages[j]);
        anchorMap.push_back((int)nw.passages.size() - 1);
        if (j + 1 < tau.size()) {
            const Branch& b = arr.branches()[arr.branchOf(0, j)];
            int which = whichOf(b.polygon);
            std::vector<mpq_class> hits;
            if (which >= 0) {
                mpq_class g = gHat(which);
                for (long long k = -std::abs(b.sweep) - 2; k <= std::abs(b.sweep) + 2; ++k) {
                    mpq_class lv = g + mqOf(2 * k);
                    if (b.lo() < lv && lv < b.hi()) hits.push_back(lv);
                }
                std::sort(hits.begin(), hits.end());
                if (b.dir < 0) std::reverse(hits.begin(), hits.end());
            }
            if (hits.empty()) {
                pending = w.sweeps[j];
            } else {
                int Q = b.polygon;
                int Qbar = polyOf(1 - which);
                int prevRays = 0;
                for (const mpq_class& x : hits) {
                    int rb = arr.raysBefore(b, x);
                    pending = (rb - prevRays) + eps * mOf[which];
                    pushPassage(Passage{arc, 1 - which});
                    pending = eps * mOf[1 - which];
                    pushPassage(Passage{arc, which});
                    prevRays = rb;
                }
                pending = w.sweeps[j] - prevRays;
            }
        }
    }
    // end germ
    {
        int which = whichOf(w.end.polygon);
        if (which >= 0) {
            int Q = polyOf(which);
            int Qbar = polyOf(1 - which);
            int germWhich = w.passages[tau.size() - 1].toOcc;
            mpq_class uLast = arr.stationU(PassageRef{0, tau.size() - 1}, germWhich);
            pending = -shortRays(arr, Q, gHat(which), uLast, eps);
            pushPassage(Passage{arc, 1 - which});
            nw.end = Endpoint::decoration(Qbar);
        }
    }

    // The twist is supported near the dual arc: every original passage keeps
    // its bi-index; reduceRaw anchors there and cross-checks the survivors.
    std::map<int, BiDegree> chiAt;
    for (int j = 0; j < tau.size(); ++j) chiAt[anchorMap[j]] = tau.chi(j);
    return reduceRaw(s, nw.start, nw.end, std::move(nw.passages), std::move(nw.sweeps), chiAt);
}

Walk applyWord(const Surface& s, const TwistWord& word, const Walk& curve) {
    Walk w = curve;
    for (const auto& [arc, eps] : word) w = braidTwistDual(s, arc, eps, w);
    return w;
}

TwistWord inverseWord(const TwistWord& word) {
    TwistWord inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back({it->first, -it->second});
    return inv;
}

Walk braidTwist(const Surface& s, const TwistWord& alphaWord, int seedArc, int eps, const Walk& curve) {
    Walk x = applyWord(s, inverseWord(alphaWord), curve);
    x = braidTwistDual(s, seedArc, eps, x);
    return applyWord(s, alphaWord, x);
}

}  // namespace dmsx
