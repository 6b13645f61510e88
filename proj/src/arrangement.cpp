#include "dmsx/arrangement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dmsx {

namespace {

long long floorDiv2(const mpq_class& q) {
    // floor(q/2) as integer
    mpq_class h = q / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return fl.get_si();
}

// number of integers k with lo < r + 2k < hi, assuming neither endpoint hits a lift
long long liftsIn(const mpq_class& lo, const mpq_class& hi, const mpq_class& r) {
    if (hi <= lo) return 0;
    long long kmax = floorDiv2(hi - r);
    long long kmin = floorDiv2(lo - r);
    return kmax - kmin;
}

}  // namespace

Arrangement::Arrangement(const Surface& s, std::vector<const Walk*> curves)
    : surf_(&s), curves_(std::move(curves)) {
    for (const Walk* w : curves_) {
        if (!w->isNormalized()) throw std::runtime_error("NotReduced: arrangement needs normalized curves");
        if (w->size() == 0) throw std::runtime_error("arrangement: degenerate curve");
        if (w->data().start.kind != Endpoint::Decoration || w->data().end.kind != Endpoint::Decoration)
            throw std::runtime_error("arrangement: open curves unsupported");
    }
    buildOrders();
    buildBranches();
}

Arrangement::Event Arrangement::nextEvent(const Cursor& cur) const {
    const Walk& w = curve(cur.curve);
    Event e;
    if (cur.dir > 0) {
        if (cur.passage + 1 >= w.size()) {
            e.dive = true;
            e.key = 0;
            e.sweep = 0;
            return e;
        }
        e.dive = false;
        e.sweep = w.data().sweeps[cur.passage];
    } else {
        if (cur.passage == 0) {
            e.dive = true;
            e.key = 0;
            e.sweep = 0;
            return e;
        }
        e.dive = false;
        e.sweep = -w.data().sweeps[cur.passage - 1];
    }
    if (e.sweep == 0) throw std::runtime_error("internal: zero sweep in normalized walk");
    e.key = mpq_class(-1, e.sweep);
    e.key.canonicalize();
    return e;
}

void Arrangement::advance(Cursor& cur) const { cur.passage += cur.dir; }

int Arrangement::oneSided(PassageRef x, PassageRef y, int arc, int whichOcc) const {
    Cursor cx{x.curve, x.index, curve(x.curve).data().passages[x.index].toOcc == whichOcc ? 1 : -1};
    Cursor cy{y.curve, y.index, curve(y.curve).data().passages[y.index].toOcc == whichOcc ? 1 : -1};
    int guard = curve(x.curve).size() + curve(y.curve).size() + 2;
    // Each arc crossed together reverses the chart orientation in which the
    // divergence is judged, so the verdict carries a parity.
    int parity = 1;
    for (int step = 0; step < guard; ++step) {
        Event ex = nextEvent(cx), ey = nextEvent(cy);
        if (ex.dive && ey.dive) return 0;
        if (ex.key != ey.key) return parity * (ex.key > ey.key ? 1 : -1);
        advance(cx);
        advance(cy);
        parity = -parity;
    }
    throw std::runtime_error("internal: comparator failed to terminate");
}

bool Arrangement::before(PassageRef x, PassageRef y, int arc) const {
    int v0 = oneSided(x, y, arc, 0);
    if (v0 != 0) return v0 > 0;
    int v1 = oneSided(x, y, arc, 1);
    if (v1 != 0) return v1 < 0;
    throw std::runtime_error("internal: comparator tie (equal curves must be special-cased)");
}

void Arrangement::buildOrders() {
    order_.assign(surf_->arcCount(), {});
    for (int c = 0; c < curveCount(); ++c)
        for (int i = 0; i < curve(c).size(); ++i)
            order_[curve(c).data().passages[i].arc].push_back(PassageRef{c, i});
    for (int a = 0; a < surf_->arcCount(); ++a) {
        auto& v = order_[a];
        std::sort(v.begin(), v.end(), [&](PassageRef x, PassageRef y) { return before(x, y, a); });
        for (int i = 0; i < (int)v.size(); ++i) pos_[{v[i].curve, v[i].index}] = i;
    }
}

int Arrangement::position(PassageRef p) const { return pos_.at({p.curve, p.index}); }

mpq_class Arrangement::stationU(PassageRef p, int which) const {
    int arc = curve(p.curve).data().passages[p.index].arc;
    const Occurrence& o = surf_->occ(arc, which);
    int M = surf_->view(o.polygon).m() + 1;
    int N = (int)order_[arc].size();
    int i = position(p);
    if (which == 1) i = N - 1 - i;
    return mqFrac(2 * o.slot, M) + mqFrac(2 * (i + 1), (long long)M * (N + 1));
}

std::vector<mpq_class> Arrangement::rays(int polygon) const {
    const PolygonView& v = surf_->view(polygon);
    int M = v.m() + 1;
    std::vector<mpq_class> r;
    for (int j = 0; j + 1 < v.m(); ++j) r.push_back(mqFrac(2 * (j + 1), M));
    r.push_back(mqFrac(2 * v.m() + 1, M));  // cut ray, inside the boundary span
    return r;
}

mpq_class Arrangement::cutRay(int polygon) const {
    int M = surf_->view(polygon).m() + 1;
    return mqFrac(2 * surf_->view(polygon).m() + 1, M);
}

int Arrangement::raysIn(int polygon, const mpq_class& lo, const mpq_class& hi) const {
    long long total = 0;
    for (const mpq_class& r : rays(polygon)) total += liftsIn(lo, hi, r);
    return (int)total;
}

int Arrangement::cutsIn(int polygon, const mpq_class& lo, const mpq_class& hi) const {
    return (int)liftsIn(lo, hi, cutRay(polygon));
}

mpq_class Arrangement::liftExit(int polygon, const mpq_class& entry, int sweep,
                                const mpq_class& exitBase) const {
    // unique lift L = exitBase + 2k with exactly |sweep| rays between entry and L
    for (long long k = floorDiv2(entry - exitBase) - 1 - std::abs(sweep); ; ++k) {
        mpq_class L = exitBase + mqOf(2 * k);
        int count;
        if (sweep > 0) {
            if (L <= entry) continue;
            count = raysIn(polygon, entry, L);
            if (count == sweep) return L;
            if (count > sweep) break;
        } else if (sweep < 0) {
            if (L >= entry) break;
            count = raysIn(polygon, L, entry);
            if (count == -sweep) return L;
        } else {
            return exitBase;  // same side, no rays
        }
    }
    throw std::runtime_error("internal: no lift matches the sweep");
}

void Arrangement::buildBranches() {
    perPolygon_.assign(surf_->polygonCount(), {});
    std::vector<std::vector<long long>> anchorC(surf_->polygonCount());
    for (int p = 0; p < surf_->polygonCount(); ++p) {
        const PolygonView& v = surf_->view(p);
        anchorC[p].assign(v.m(), 0);
        for (int k = 0; k + 1 < v.m(); ++k) anchorC[p][k + 1] = anchorC[p][k] + v.f[k] - 1;
    }
    auto push = [&](Branch b) {
        branchIndex_[{b.curve, b.seg}] = (int)branches_.size();
        perPolygon_[b.polygon].push_back((int)branches_.size());
        branches_.push_back(std::move(b));
    };
    for (int c = 0; c < curveCount(); ++c) {
        const Walk& w = curve(c);
        const CurveWalk& d = w.data();
        int K = w.size();
        // start germ
        {
            Branch b;
            b.curve = c;
            b.seg = Branch::kStartGerm;
            b.germ = true;
            b.polygon = w.polygonBefore(0);
            int which = 1 - d.passages[0].toOcc;
            b.liftIn = b.liftOut = stationU({c, 0}, which);
            int slot = surf_->occ(d.passages[0].arc, which).slot;
            b.nzIn = b.nzOut = anchorC[b.polygon][slot] + w.chi(0).z + 1;
            b.sheetIn = b.sheetOut = w.chi(0).x;
            b.entryPassage = b.exitPassage = 0;
            push(b);
        }
        for (int j = 0; j + 1 < K; ++j) {
            Branch b;
            b.curve = c;
            b.seg = j;
            b.polygon = w.polygonAfter(j);
            int inWhich = d.passages[j].toOcc;
            int outWhich = 1 - d.passages[j + 1].toOcc;
            b.liftIn = stationU({c, j}, inWhich);
            mpq_class exitBase = stationU({c, j + 1}, outWhich);
            b.sweep = d.sweeps[j];
            b.liftOut = liftExit(b.polygon, b.liftIn, b.sweep, exitBase);
            b.dir = b.sweep > 0 ? 1 : (b.sweep < 0 ? -1 : (b.liftOut > b.liftIn ? 1 : -1));
            int inSlot = surf_->occ(d.passages[j].arc, inWhich).slot;
            int outSlot = surf_->occ(d.passages[j + 1].arc, outWhich).slot;
            b.nzIn = anchorC[b.polygon][inSlot] + w.chi(j).z + 1;
            b.nzOut = anchorC[b.polygon][outSlot] + w.chi(j + 1).z + 1;
            b.sheetIn = w.chi(j).x;
            b.sheetOut = w.chi(j + 1).x;
            b.entryPassage = j;
            b.exitPassage = j + 1;
            push(b);
        }
        // end germ
        {
            Branch b;
            b.curve = c;
            b.seg = Branch::kEndGerm;
            b.germ = true;
            b.polygon = w.polygonAfter(K - 1);
            int which = d.passages[K - 1].toOcc;
            b.liftIn = b.liftOut = stationU({c, K - 1}, which);
            int slot = surf_->occ(d.passages[K - 1].arc, which).slot;
            b.nzIn = b.nzOut = anchorC[b.polygon][slot] + w.chi(K - 1).z + 1;
            b.sheetIn = b.sheetOut = w.chi(K - 1).x;
            b.entryPassage = b.exitPassage = K - 1;
            push(b);
        }
    }
    // Consistency: for interior branches, the phase transported from the entry
    // anchor (two quarter-turn bends of -dir/2 each) must land on the exit anchor.
    for (const Branch& b : branches_) {
        if (b.germ) continue;
        mpq_class phiExitViaEntry = b.liftOut + mqOf(b.nzIn - b.dir);
        mpq_class phiExitAnchored = b.liftOut + mqOf(b.nzOut);
        if (phiExitViaEntry != phiExitAnchored)
            throw std::runtime_error("internal: phase anchors inconsistent along a branch");
        long long cuts = b.dir * cutsIn(b.polygon, std::min(b.liftIn, b.liftOut),
                                        std::max(b.liftIn, b.liftOut));
        if (b.sheetIn + cuts != b.sheetOut)
            throw std::runtime_error("internal: sheet anchors inconsistent along a branch");
    }
}

int Arrangement::branchOf(int c, int seg) const { return branchIndex_.at({c, seg}); }

void Arrangement::phaseAt(const Branch& b, const mpq_class& x, bool railSide, mpq_class* phiZ,
                          long long* sheet) const {
    if (b.germ || !railSide) {
        // a radial foot; anchored at whichever end x matches
        if (x == b.liftIn) {
            *phiZ = b.liftIn + mqOf(b.nzIn);
            *sheet = b.sheetIn;
        } else {
            *phiZ = b.liftOut + mqOf(b.nzOut);
            *sheet = b.sheetOut;
        }
        return;
    }
    *phiZ = x + mqOf(b.nzIn) - mqFrac(b.dir, 2);
    long long cuts;
    if (b.dir > 0)
        cuts = cutsIn(b.polygon, b.liftIn, x);
    else
        cuts = -cutsIn(b.polygon, x, b.liftIn);
    *sheet = b.sheetIn + cuts;
}

BiDegree Arrangement::indexAt(const Branch& a, const mpq_class& xa, const Branch& b,
                              const mpq_class& xb, int shift) const {
    // Determine which branch contributes its rail at the crossing: the crossing
    // sits at the other's foot station. For germ-vs-rail the germ is the foot.
    bool aIsFoot;
    if (a.germ)
        aIsFoot = true;
    else if (b.germ)
        aIsFoot = false;
    else
        aIsFoot = (xa == a.liftIn || xa == a.liftOut);
    mpq_class phiA, phiB;
    long long sheetA, sheetB;
    phaseAt(a, xa, !aIsFoot, &phiA, &sheetA);
    phaseAt(b, xb, aIsFoot, &phiB, &sheetB);
    phiB += mqOf(2 * shift);  // express branch b's frame in a's frame
    mpq_class diff = phiA - phiB;
    mpq_class indq = diff + mpq_class(1, 2);
    if (indq.get_den() != 1) throw std::runtime_error("internal: crossing phases not transversal");
    BiDegree d;
    d.z = mpz_class(indq.get_num()).get_si();
    d.x = sheetA - sheetB;
    return d;
}

void Arrangement::crossingsOfBranchPair(int ia, int ib, bool sameCurve,
                                        std::vector<InteriorCrossing>& out) const {
    const Branch& A = branches_[ia];
    const Branch& B = branches_[ib];
    if (A.polygon != B.polygon) return;
    if (A.germ && B.germ) return;
    mpq_class alo = A.lo(), ahi = A.hi(), blo = B.lo(), bhi = B.hi();
    long long wmin = floorDiv2(alo - bhi) - 1;
    long long wmax = floorDiv2(ahi - blo) + 1;
    for (long long w = wmin; w <= wmax; ++w) {
        if (sameCurve && ia == ib && w <= 0) continue;
        mpq_class lo2 = blo + mqOf(2 * w), hi2 = bhi + mqOf(2 * w);
        std::optional<mpq_class> x;   // crossing position in A's frame
        bool footIsB = true;
        if (A.germ) {
            // A's station inside B's open span
            if (lo2 < alo && alo < hi2) {
                x = alo;
                footIsB = false;
            }
        } else if (B.germ) {
            if (alo < lo2 && lo2 < ahi) {
                x = lo2;
                footIsB = true;
            }
        } else {
            if (alo < lo2 && lo2 < ahi && ahi < hi2) {
                x = lo2;  // B's low foot inside A's rail
                footIsB = true;
            } else if (lo2 < alo && alo < hi2 && hi2 < ahi) {
                x = alo;  // A's low foot inside B's rail
                footIsB = false;
            }
        }
        if (!x) continue;
        InteriorCrossing c;
        c.polygon = A.polygon;
        c.branchA = ia;
        c.branchB = ib;
        c.shift = (int)w;
        c.pos = *x;
        mpq_class xa = *x;
        mpq_class xb = *x - mqOf(2 * w);
        (void)footIsB;
        c.indAB = indexAt(A, xa, B, xb, (int)w);
        // independent computation of the transposed index; the sum rule is a theorem
        BiDegree ba = indexAt(B, xb, A, xa, -(int)w);
        c.indBA = ba;
        if (!((c.indAB + c.indBA) == BiDegree{1, 0}))
            throw std::runtime_error("internal: interior index sum rule violated");
        out.push_back(std::move(c));
    }
}

std::vector<InteriorCrossing> Arrangement::interiorCrossings(int ca, int cb) const {
    if (ca == cb) throw std::runtime_error("use selfCrossings for a single curve");
    std::vector<InteriorCrossing> out;
    for (int ia = 0; ia < (int)branches_.size(); ++ia) {
        if (branches_[ia].curve != ca) continue;
        for (int ib = 0; ib < (int)branches_.size(); ++ib) {
            if (branches_[ib].curve != cb) continue;
            crossingsOfBranchPair(ia, ib, false, out);
        }
    }
    return out;
}

std::vector<InteriorCrossing> Arrangement::selfCrossings(int c) const {
    std::vector<InteriorCrossing> out;
    std::vector<int> mine;
    for (int i = 0; i < (int)branches_.size(); ++i)
        if (branches_[i].curve == c) mine.push_back(i);
    for (size_t a = 0; a < mine.size(); ++a)
        for (size_t b = a; b < mine.size(); ++b) crossingsOfBranchPair(mine[a], mine[b], true, out);
    return out;
}

Arrangement::Gap Arrangement::germGap(int ca, bool aAtStart, int cb, bool bAtStart) const {
    const Walk& A = curve(ca);
    const Walk& B = curve(cb);
    int pa = aAtStart ? 0 : A.size() - 1;
    int pb = bAtStart ? 0 : B.size() - 1;
    int whichA = aAtStart ? 1 - A.data().passages[pa].toOcc : A.data().passages[pa].toOcc;
    int whichB = bAtStart ? 1 - B.data().passages[pb].toOcc : B.data().passages[pb].toOcc;
    int polyA = surf_->occ(A.data().passages[pa].arc, whichA).polygon;
    int polyB = surf_->occ(B.data().passages[pb].arc, whichB).polygon;
    if (polyA != polyB) throw std::runtime_error("germGap: germs at different decorations");
    Gap g;
    g.polygon = polyA;
    g.fromSlot = surf_->occ(A.data().passages[pa].arc, whichA).slot;
    if (ca == cb && pa == pb && whichA == whichB) {
        g.identical = true;
        return g;
    }
    mpq_class ua = stationU({ca, pa}, whichA);
    mpq_class ub = stationU({cb, pb}, whichB);
    if (ua == ub) {
        g.identical = true;  // distinct passages always get distinct stations
        return g;
    }
    if (ub > ua)
        g.t = raysIn(polyA, ua, ub);
    else
        g.t = raysIn(polyA, ua, ub + mqOf(2));
    return g;
}

int Arrangement::raysBefore(const Branch& b, const mpq_class& x) const {
    if (b.germ) return 0;
    if (b.dir > 0) return raysIn(b.polygon, b.liftIn, x);
    return -raysIn(b.polygon, x, b.liftIn);
}

std::vector<DecorationCrossing> Arrangement::decorationCrossings(int ca, int cb) const {
    std::vector<DecorationCrossing> out;
    const Walk& A = curve(ca);
    const Walk& B = curve(cb);
    if (A.sameUnderlying(B))
        throw std::runtime_error("internal: equal underlying curves must not share an arrangement");
    auto endPoly = [&](const Walk& w, bool atStart) {
        return atStart ? w.data().start.polygon : w.data().end.polygon;
    };
    auto chiOut = [&](const Walk& w, bool atStart) {
        return atStart ? w.chi(0) : w.chi(w.size() - 1);
    };
    auto piDeg = [&](const Gap& g) {
        if (g.identical) throw std::runtime_error("internal: identical germs on distinct curves");
        if (g.t == 0) return BiDegree{0, 0};
        return BiDegree{1, 0} - surf_->sweepDegree(g.polygon, g.fromSlot, g.t);
    };
    for (int ea = 0; ea < 2; ++ea)
        for (int eb = 0; eb < 2; ++eb) {
            bool aAtStart = ea == 0, bAtStart = eb == 0;
            if (endPoly(A, aAtStart) != endPoly(B, bAtStart)) continue;
            Gap g = germGap(ca, aAtStart, cb, bAtStart);
            Gap gt = germGap(cb, bAtStart, ca, aAtStart);
            DecorationCrossing dc;
            dc.polygon = g.polygon;
            dc.aAtStart = aAtStart;
            dc.bAtStart = bAtStart;
            dc.indAB = piDeg(g) + chiOut(A, aAtStart) - chiOut(B, bAtStart);
            dc.indBA = piDeg(gt) + chiOut(B, bAtStart) - chiOut(A, aAtStart);
            if (!((dc.indAB + dc.indBA) == BiDegree{0, 1}))
                throw std::runtime_error("internal: decoration index sum rule violated");
            out.push_back(dc);
        }
    return out;
}

// Crossings of a pair with equal underlying curves: never co-arranged; interior
// crossings come from the self-arrangement (two labeled copies of each
// unordered self-crossing) and endpoint coincidences follow the identity /
// 2pi-angle convention.
EqualPairCrossings equalPairCrossings(const Surface& s, const Walk& a, const Walk& b) {
    if (!a.sameUnderlying(b)) throw std::runtime_error("equalPairCrossings: curves differ");
    bool forwardMatch = [&] {
        const CurveWalk& x = a.data();
        const CurveWalk& y = b.data();
        return x.start == y.start && x.end == y.end && x.passages == y.passages && x.sweeps == y.sweeps;
    }();
    Walk bb = forwardMatch ? b : b.reversed();
    BiDegree d = bb.chi(0) - a.chi(0);  // constant lift offset between the two copies
    EqualPairCrossings out;
    Arrangement self(s, {&a});
    for (const InteriorCrossing& sc : self.selfCrossings(0)) {
        // ind shifts by +shift(first) - shift(second); each unordered
        // self-crossing yields two crossings of the labeled pair.
        out.interior.push_back({sc.indAB - d, sc.indBA + d});
        out.interior.push_back({sc.indBA - d, sc.indAB + d});
    }
    // Decoration coincidences: aligned pairs take {identity, 2pi}; for curves
    // with both endpoints at one decoration the cross pairs are generic germ
    // pairs of the self-arrangement.
    auto add = [&](BiDegree indAB) {
        out.decorations.push_back(std::make_pair(indAB, BiDegree{0, 1} - indAB));
    };
    add(BiDegree{0, 0} + a.chi(0) - bb.chi(0));                                  // start pair
    add(BiDegree{0, 1} + a.chi(a.size() - 1) - bb.chi(bb.size() - 1));           // end pair
    if (a.data().start.polygon == a.data().end.polygon &&
        a.data().start.kind == Endpoint::Decoration && a.data().end.kind == Endpoint::Decoration &&
        a.data().start == a.data().end) {
        auto crossPair = [&](bool aAtStart) {
            Arrangement::Gap g = self.germGap(0, aAtStart, 0, !aAtStart);
            BiDegree degPi{};
            if (g.identical) {
                // palindromic: split the pair as {identity, 2pi}
                degPi = aAtStart ? BiDegree{0, 0} : BiDegree{0, 1};
            } else if (g.t > 0) {
                degPi = BiDegree{1, 0} - s.sweepDegree(g.polygon, g.fromSlot, g.t);
            }
            BiDegree chiA = aAtStart ? a.chi(0) : a.chi(a.size() - 1);
            BiDegree chiB = !aAtStart ? bb.chi(0) : bb.chi(bb.size() - 1);
            add(degPi + chiA - chiB);
        };
        crossPair(true);
        crossPair(false);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Loop reduction (bigon / monogon certification)

namespace {
struct LoopItem {
    bool isPass = false;
    Passage pass{};
    int polygon = -1;
    long long sweep = 0;  // rays, signed
};
}  // namespace

class LoopReducer {
public:
    LoopReducer(const Arrangement& arr) : arr_(arr) {}

    // path of curve c between two points (seg, lifted position), in travel order
    std::vector<LoopItem> path(int c, int segA, mpq_class xA, int segB, mpq_class xB) const {
        auto ord = [&](int seg) { return seg == Branch::kStartGerm ? -1
                                   : seg == Branch::kEndGerm      ? arr_.curve(c).size() - 1
                                                                  : seg; };
        bool forward = ord(segA) < ord(segB);
        if (ord(segA) == ord(segB)) {
            const Branch& b = arr_.branches()[arr_.branchOf(c, segA)];
            if (b.germ || xA == xB)
                forward = true;  // both points on one radial foot: empty sweep
            else
                forward = b.dir > 0 ? xA < xB : xA > xB;
        }
        if (!forward) {
            auto w = path(c, segB, xB, segA, xA);
            return reversed(w);
        }
        std::vector<LoopItem> out;
        const Walk& w = arr_.curve(c);
        const Branch& bA = arr_.branches()[arr_.branchOf(c, segA)];
        const Branch& bB = arr_.branches()[arr_.branchOf(c, segB)];
        if (segA == segB) {
            LoopItem it;
            it.polygon = bA.polygon;
            it.sweep = arr_.raysBefore(bA, xB) - arr_.raysBefore(bA, xA);
            out.push_back(it);
            return out;
        }
        {
            LoopItem it;
            it.polygon = bA.polygon;
            it.sweep = (bA.germ ? 0 : bA.sweep) - arr_.raysBefore(bA, xA);
            out.push_back(it);
        }
        int firstPass = segA == Branch::kStartGerm ? 0 : segA + 1;
        int lastPass = segB == Branch::kEndGerm ? w.size() - 1 : segB;
        for (int p = firstPass; p <= lastPass; ++p) {
            LoopItem ip;
            ip.isPass = true;
            ip.pass = w.data().passages[p];
            out.push_back(ip);
            LoopItem is;
            is.polygon = w.polygonAfter(p);
            if (p < lastPass)
                is.sweep = w.data().sweeps[p];
            else
                is.sweep = arr_.raysBefore(bB, xB);
            out.push_back(is);
        }
        return out;
    }

    static std::vector<LoopItem> reversed(const std::vector<LoopItem>& in) {
        std::vector<LoopItem> out;
        for (auto it = in.rbegin(); it != in.rend(); ++it) {
            LoopItem li = *it;
            if (li.isPass)
                li.pass.toOcc = 1 - li.pass.toOcc;
            else
                li.sweep = -li.sweep;
            out.push_back(li);
        }
        return out;
    }

    // Cyclically reduces; returns (residualPassages, residualPolygon, residualSweep).
    struct Result {
        int passages = 0;
        int polygon = -1;
        long long sweep = 0;
    };
    Result reduce(std::vector<LoopItem> loop) const {
        bool changed = true;
        while (changed) {
            changed = false;
            // merge adjacent sweeps (cyclically)
            for (size_t i = 0; i < loop.size() && loop.size() > 1; ++i) {
                size_t j = (i + 1) % loop.size();
                if (!loop[i].isPass && !loop[j].isPass) {
                    if (loop[i].polygon != loop[j].polygon)
                        throw std::runtime_error("internal: loop polygon mismatch");
                    loop[i].sweep += loop[j].sweep;
                    loop.erase(loop.begin() + j);
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            // cancel Pass(g,t) Sweep(0) Pass(g,1-t)
            for (size_t i = 0; i < loop.size(); ++i) {
                size_t j = (i + 1) % loop.size();
                size_t k = (i + 2) % loop.size();
                if (loop.size() < 3) break;
                if (loop[i].isPass && !loop[j].isPass && loop[k].isPass && loop[i].pass.arc == loop[k].pass.arc &&
                    loop[k].pass.toOcc == 1 - loop[i].pass.toOcc && loop[j].sweep == 0) {
                    std::vector<size_t> idx = {i, j, k};
                    std::sort(idx.rbegin(), idx.rend());
                    for (size_t d : idx) loop.erase(loop.begin() + d);
                    changed = true;
                    break;
                }
            }
        }
        Result r;
        for (const auto& li : loop)
            if (li.isPass) r.passages++;
        if (r.passages == 0 && !loop.empty()) {
            r.polygon = loop[0].polygon;
            for (const auto& li : loop) r.sweep += li.sweep;
        }
        return r;
    }

private:
    const Arrangement& arr_;
};

bool Arrangement::crossingPairBoundsBigon(int ca, int cb, const InteriorCrossing& p,
                                          const InteriorCrossing& q) const {
    LoopReducer red(*this);
    auto posOn = [&](const InteriorCrossing& c, bool onA) {
        int br = onA ? c.branchA : c.branchB;
        mpq_class x = onA ? c.pos : c.pos - mqOf(2 * c.shift);
        return std::make_pair(branches_[br].seg, x);
    };
    auto [sa1, xa1] = posOn(p, true);
    auto [sa2, xa2] = posOn(q, true);
    auto [sb1, xb1] = posOn(p, false);
    auto [sb2, xb2] = posOn(q, false);
    auto wa = red.path(ca, sa1, xa1, sa2, xa2);
    auto wb = red.path(cb, sb1, xb1, sb2, xb2);
    auto wbr = LoopReducer::reversed(wb);
    wa.insert(wa.end(), wbr.begin(), wbr.end());
    auto r = red.reduce(std::move(wa));
    return r.passages == 0 && r.sweep == 0;
}

Arrangement::MonogonInfo Arrangement::onceDecoratedMonogon(int c, const InteriorCrossing& sc) const {
    LoopReducer red(*this);
    const Branch& A = branches_[sc.branchA];
    const Branch& B = branches_[sc.branchB];
    mpq_class xa = sc.pos;
    mpq_class xb = sc.pos - mqOf(2 * sc.shift);
    auto loop = red.path(c, A.seg, xa, B.seg, xb);
    auto r = red.reduce(std::move(loop));
    MonogonInfo info;
    if (r.passages == 0) {
        if (r.sweep == 0) throw std::runtime_error("internal: self-bigon in a normalized curve");
        int m = surf_->view(r.polygon).m();
        if (r.sweep == m || r.sweep == -m) {
            info.found = true;
            info.polygon = r.polygon;
        }
    }
    return info;
}

}  // namespace dmsx
