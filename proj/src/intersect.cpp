#include "dmsx/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmsx {

CurveType classify(const Surface& s, const Walk& curve) {
    const CurveWalk& d = curve.data();
    if (!curve.isNormalized()) return classify(s, curve.normalized());
    if (curve.size() == 0) return CurveType::Degenerate;
    bool openEnds = d.start.kind == Endpoint::Marked && d.end.kind == Endpoint::Marked;
    bool closedEnds = d.start.kind == Endpoint::Decoration && d.end.kind == Endpoint::Decoration;
    if (openEnds) {
        // open arc iff embedded; interior self-crossings disqualify
        Arrangement arr(s, {&curve});
        return arr.selfCrossings(0).empty() ? CurveType::OpenArc : CurveType::Inadmissible;
    }
    if (!closedEnds) return CurveType::Inadmissible;
    Arrangement arr(s, {&curve});
    auto self = arr.selfCrossings(0);
    if (self.empty() && !(d.start == d.end)) return CurveType::ClosedArc;
    for (const auto& sc : self)
        if (arr.onceDecoratedMonogon(0, sc).found) return CurveType::Inadmissible;
    return CurveType::AdmissibleClosed;
}

CrossingTable crossings(const Surface& s, const Walk& sigma, const Walk& tau, bool includeSelf) {
    CrossingTable out;
    BiLaurent interior, decor;
    auto pushInterior = [&](BiDegree ab, BiDegree ba, int polygon) {
        out.records.push_back({false, polygon, ab, ba});
        interior.add(ab, 1);
    };
    auto pushDecor = [&](BiDegree ab, BiDegree ba, int polygon) {
        out.records.push_back({true, polygon, ab, ba});
        decor.add(ab, 1);
    };
    if (sigma.sameUnderlying(tau)) {
        EqualPairCrossings eq = equalPairCrossings(s, sigma, tau);
        for (const auto& [ab, ba] : eq.interior) pushInterior(ab, ba, -1);
        for (const auto& [ab, ba] : eq.decorations) pushDecor(ab, ba, -1);
    } else {
        Arrangement arr(s, {&sigma, &tau});
        for (const InteriorCrossing& c : arr.interiorCrossings(0, 1))
            pushInterior(c.indAB, c.indBA, c.polygon);
        for (const DecorationCrossing& c : arr.decorationCrossings(0, 1))
            pushDecor(c.indAB, c.indBA, c.polygon);
    }
    if (includeSelf) {
        Arrangement sa(s, {&sigma});
        for (const InteriorCrossing& c : sa.selfCrossings(0)) {
            pushInterior(c.indAB, c.indBA, c.polygon);
            pushInterior(c.indBA, c.indAB, c.polygon);
        }
    }
    BiLaurent factor = BiLaurent(1) + qpow(BiDegree{-1, 1});  // 1 + q^{X-1}
    out.qint = decor + factor * interior;
    return out;
}

BiLaurent q_int(const Surface& s, const Walk& sigma, const Walk& tau, bool includeSelf) {
    return crossings(s, sigma, tau, includeSelf).qint;
}

BiLaurent q_int_open(const Surface& s, int arc, BiDegree arcShift, const Walk& tau) {
    if (arc < 0 || arc >= s.arcCount()) throw std::runtime_error("UnknownArc");
    Walk n = tau.isNormalized() ? tau : tau.normalized();
    BiLaurent out;
    for (int j = 0; j < n.size(); ++j) {
        if (n.data().passages[j].arc != arc) continue;
        // ind(arc lift, tau) = -chi_j, shifted by the arc lift: ind(g[d], tau) = ind + d
        BiDegree ind = -n.chi(j) + arcShift;
        out.add(ind, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact polyline oracle

namespace {

struct Pt {
    mpq_class x, y;
};

int orient(const Pt& a, const Pt& b, const Pt& c) {
    mpq_class d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool properCross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// Rational points close to the unit circle at angular position u in half-turn
// units (u in [0,2)), via the tangent half-angle parametrization.
Pt circlePoint(const mpq_class& u) {
    // angle theta = pi*u/... u in half turns: theta = u * pi; use t = tan(theta/2)
    // approximated by a rational; exactness of the circle is irrelevant, only
    // convexity/ordering matter, so a fine rational approximation of tan works.
    double theta = u.get_d() * 3.14159265358979323846;
    double t = std::tan(theta / 2);
    if (std::abs(t) > 1e7) t = t > 0 ? 1e7 : -1e7;
    mpq_class tq = mqFrac(llround(t * (1 << 20)), 1 << 20);
    mpq_class den = 1 + tq * tq;
    Pt p;
    p.x = (1 - tq * tq) / den;
    p.y = -2 * tq / den;  // clockwise-positive angular coordinate
    return p;
}

struct DrawnBranch {
    int curve = -1;
    int polygon = -1;
    std::vector<Pt> pts;
};

long long properCrossings(const DrawnBranch& a, const DrawnBranch& b, bool sameBranch) {
    long long n = 0;
    for (size_t i = 0; i + 1 < a.pts.size(); ++i) {
        size_t jFrom = sameBranch ? i + 2 : 0;  // adjacent segments share a vertex
        for (size_t j = jFrom; j + 1 < b.pts.size(); ++j)
            if (properCross(a.pts[i], a.pts[i + 1], b.pts[j], b.pts[j + 1])) ++n;
    }
    return n;
}

}  // namespace

long long polylineInteriorCount(const Arrangement& arr, int ca, int cb) {
    const Surface& s = arr.surface();
    // nesting depth by interval containment, per polygon
    const auto& branches = arr.branches();
    std::vector<int> depth(branches.size(), 0);
    for (int p = 0; p < s.polygonCount(); ++p) {
        const auto& in = arr.branchesIn(p);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i : in)
                for (int j : in) {
                    if (i == j || branches[i].germ || branches[j].germ) continue;
                    // strict containment: j inside i's span -> j shallower than i
                    if (branches[i].lo() < branches[j].lo() && branches[j].hi() < branches[i].hi() &&
                        depth[i] <= depth[j]) {
                        depth[i] = depth[j] + 1;
                        changed = true;
                    }
                }
        }
    }
    // draw
    std::vector<DrawnBranch> drawn;
    for (size_t bi = 0; bi < branches.size(); ++bi) {
        const Branch& b = branches[bi];
        if (b.curve != ca && b.curve != cb) continue;
        DrawnBranch d;
        d.curve = b.curve;
        d.polygon = b.polygon;
        auto dirPoint = [&](const mpq_class& lifted) {
            mpq_class u = lifted;
            while (u < 0) u += 2;
            while (u >= 2) u -= 2;
            return circlePoint(u);
        };
        mpq_class scale(1, 3);
        scale /= (depth[bi] + 1);
        long long wrapIdx = 0;
        auto radial = [&](const Pt& q, const mpq_class& sc) {
            return Pt{q.x * sc, q.y * sc};
        };
        if (b.germ) {
            Pt st = dirPoint(b.liftIn);
            d.pts.push_back(st);
            d.pts.push_back(Pt{mpq_class(0), mpq_class(0)});
        } else {
            Pt pin = dirPoint(b.liftIn);
            d.pts.push_back(pin);
            d.pts.push_back(radial(pin, scale));
            // rail: points at every crossed corner ray, spiraling slightly inward
            std::vector<mpq_class> stops;
            {
                // collect ray lifts strictly between liftIn and liftOut
                mpq_class lo = b.lo(), hi = b.hi();
                for (int j = 0; j < s.view(b.polygon).m(); ++j) {
                    mpq_class base = j + 1 < s.view(b.polygon).m()
                                         ? mqFrac(2 * (j + 1), s.view(b.polygon).m() + 1)
                                         : mqFrac(2 * s.view(b.polygon).m() + 1,
                                                  s.view(b.polygon).m() + 1);
                    for (long long k = -std::abs(b.sweep) - 2; k <= std::abs(b.sweep) + 2; ++k) {
                        mpq_class v = base + mqOf(2 * k);
                        if (lo < v && v < hi) stops.push_back(v);
                    }
                }
                std::sort(stops.begin(), stops.end());
                if (b.dir < 0) std::reverse(stops.begin(), stops.end());
            }
            for (const mpq_class& v : stops) {
                mpq_class sc = scale * (mpq_class(1) - mqFrac(++wrapIdx, 4 * (long long)(stops.size() + 2)));
                d.pts.push_back(radial(dirPoint(v), sc));
            }
            Pt pout = dirPoint(b.liftOut);
            mpq_class scOut = scale * (mpq_class(1) - mqFrac(wrapIdx + 1, 4 * (long long)(stops.size() + 2)));
            d.pts.push_back(radial(pout, scOut));
            d.pts.push_back(pout);
        }
        drawn.push_back(std::move(d));
    }
    // count proper crossings between the two curves' polylines per polygon
    long long count = 0;
    if (ca == cb) {
        for (size_t i = 0; i < drawn.size(); ++i) {
            count += properCrossings(drawn[i], drawn[i], true);
            for (size_t j = i + 1; j < drawn.size(); ++j)
                if (drawn[i].polygon == drawn[j].polygon)
                    count += properCrossings(drawn[i], drawn[j], false);
        }
    } else {
        for (const DrawnBranch& a : drawn) {
            if (a.curve != ca) continue;
            for (const DrawnBranch& b : drawn) {
                if (b.curve != cb || a.polygon != b.polygon) continue;
                count += properCrossings(a, b, false);
            }
        }
    }
    return count;
}

void certifyMinimalPosition(const Surface& s, const Walk& sigma, const Walk& tau) {
    if (sigma.sameUnderlying(tau)) return;  // handled by convention, nothing drawn
    Arrangement arr(s, {&sigma, &tau});
    auto cs = arr.interiorCrossings(0, 1);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            if (arr.crossingPairBoundsBigon(0, 1, cs[i], cs[j]))
                throw std::runtime_error("NotReduced: crossing pair bounds a bigon");
}

}  // namespace dmsx
