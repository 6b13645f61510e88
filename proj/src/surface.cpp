#include "dmsx/surface.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmsx {

std::string to_string(SurfaceError e) {
    switch (e) {
        case SurfaceError::NotASurface: return "NotASurface";
        case SurfaceError::DegreeSumViolation: return "DegreeSumViolation";
        case SurfaceError::MultipleBoundarySides: return "MultipleBoundarySides";
        case SurfaceError::UnknownArc: return "UnknownArc";
        case SurfaceError::BadParameters: return "BadParameters";
        case SurfaceError::SlideDegenerate: return "SlideDegenerate";
    }
    return "?";
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    os << (ok ? "valid" : "INVALID");
    if (ok) {
        os << " genus=" << genus << " boundary=" << boundaryComponents << " |M|=" << openMarked
           << " |Y|=|Delta|=" << closedMarked;
    }
    for (const auto& [e, msg] : errors) os << "\n  error " << to_string(e) << ": " << msg;
    for (const auto& w : warnings) os << "\n  note: " << w;
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int a) {
        while (up[a] != a) a = up[a] = up[up[a]];
        return a;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

// Normalized per-polygon view; empty optional when the polygon is malformed.
std::optional<PolygonView> makeView(const Polygon& poly, std::string* err) {
    int boundaryAt = -1;
    for (int i = 0; i < (int)poly.sides.size(); ++i) {
        if (poly.sides[i].boundary) {
            if (boundaryAt >= 0) {
                *err = "more than one boundary side";
                return std::nullopt;
            }
            boundaryAt = i;
        }
    }
    if (boundaryAt < 0) {
        *err = "no boundary side";
        return std::nullopt;
    }
    PolygonView v;
    int S = (int)poly.sides.size();
    for (int k = 1; k < S; ++k) {
        const Side& s = poly.sides[(boundaryAt + k) % S];
        v.arcOf.push_back(s.arc);
        v.flip.push_back(s.flip);
    }
    v.f = poly.cornerDegrees;
    if ((int)v.f.size() != v.m()) {
        *err = "corner_degrees size != number of arc sides";
        return std::nullopt;
    }
    return v;
}

}  // namespace

ValidationReport Surface::validate(const SurfaceSpec& spec) {
    ValidationReport rep;
    auto fail = [&](SurfaceError e, std::string msg) { rep.errors.emplace_back(e, std::move(msg)); };

    int n = (int)spec.arcs.size();
    int P = (int)spec.polygons.size();
    if (P == 0) fail(SurfaceError::NotASurface, "no polygons");

    std::vector<PolygonView> views;
    for (int p = 0; p < P; ++p) {
        std::string err;
        auto v = makeView(spec.polygons[p], &err);
        if (!v) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "polygon %d: ", p);
            if (err.find("boundary") != std::string::npos)
                fail(SurfaceError::MultipleBoundarySides, buf + err);
            else
                fail(SurfaceError::NotASurface, buf + err);
            return rep;
        }
        int sum = std::accumulate(v->f.begin(), v->f.end(), 0);
        if (sum != v->m()) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "polygon %d: corner degrees sum %d != %d arc sides", p, sum, v->m());
            fail(SurfaceError::DegreeSumViolation, buf);
        }
        views.push_back(std::move(*v));
    }

    // Occurrence table.
    std::vector<std::vector<Occurrence>> occ(n);
    for (int p = 0; p < P; ++p)
        for (int s = 0; s < views[p].m(); ++s) {
            int a = views[p].arcOf[s];
            if (a < 0 || a >= n) {
                fail(SurfaceError::UnknownArc, "arc id out of range");
                return rep;
            }
            occ[a].push_back(Occurrence{p, s, views[p].flip[s]});
        }
    for (int a = 0; a < n; ++a) {
        if (occ[a].size() != 2) {
            fail(SurfaceError::NotASurface, "arc '" + spec.arcs[a] + "' does not occur exactly twice");
            return rep;
        }
        if (occ[a][0].flip == occ[a][1].flip)
            fail(SurfaceError::NotASurface, "arc '" + spec.arcs[a] + "' glued orientation-reversing");
        if (occ[a][0].polygon == occ[a][1].polygon) rep.selfFolded = true;
    }
    if (!rep.errors.empty()) return rep;

    // Vertices: polygon p has m+1 corner points; vertex k sits at the start of
    // arc side k (k=0..m-1), vertex m at the end of arc side m-1.
    std::vector<int> vbase(P + 1, 0);
    for (int p = 0; p < P; ++p) vbase[p + 1] = vbase[p] + views[p].m() + 1;
    UnionFind uf(vbase[P]);
    UnionFind comp(P);
    auto startV = [&](const Occurrence& o) { return vbase[o.polygon] + o.slot; };
    auto endV = [&](const Occurrence& o) { return vbase[o.polygon] + o.slot + 1; };
    auto tailV = [&](const Occurrence& o) { return o.flip ? endV(o) : startV(o); };
    auto headV = [&](const Occurrence& o) { return o.flip ? startV(o) : endV(o); };
    for (int a = 0; a < n; ++a) {
        uf.unite(tailV(occ[a][0]), tailV(occ[a][1]));
        uf.unite(headV(occ[a][0]), headV(occ[a][1]));
        comp.unite(occ[a][0].polygon, occ[a][1].polygon);
    }
    for (int p = 1; p < P; ++p)
        if (comp.find(p) != comp.find(0)) {
            fail(SurfaceError::NotASurface, "glued complex is disconnected");
            return rep;
        }

    // Boundary edges: one per polygon, directed from vertex m to vertex 0.
    std::map<int, std::vector<int>> outAt, inAt;
    for (int p = 0; p < P; ++p) {
        outAt[uf.find(vbase[p] + views[p].m())].push_back(p);
        inAt[uf.find(vbase[p])].push_back(p);
    }
    std::set<int> classes;
    for (int v = 0; v < vbase[P]; ++v) classes.insert(uf.find(v));
    for (int c : classes) {
        int no = outAt.count(c) ? (int)outAt[c].size() : 0;
        int ni = inAt.count(c) ? (int)inAt[c].size() : 0;
        if (no == 0 && ni == 0) {
            fail(SurfaceError::NotASurface, "arc endpoint not on the boundary");
            return rep;
        }
        if (no != 1 || ni != 1) {
            fail(SurfaceError::NotASurface, "non-manifold boundary vertex");
            return rep;
        }
    }
    // Boundary circles: follow polygon boundary edges through vertex classes.
    std::vector<bool> seen(P, false);
    int circles = 0;
    for (int p0 = 0; p0 < P; ++p0) {
        if (seen[p0]) continue;
        ++circles;
        int p = p0;
        while (!seen[p]) {
            seen[p] = true;
            int endClass = uf.find(vbase[p]);  // boundary edge ends at vertex 0
            p = outAt[endClass][0];            // next edge starts there
        }
    }

    int V = (int)classes.size();
    int E = n + P;
    int chi = V - E + P;
    int b = circles;
    int twoG = 2 - b - chi;
    if (twoG < 0 || (twoG % 2) != 0) {
        fail(SurfaceError::NotASurface, "Euler characteristic inconsistent with an oriented surface");
        return rep;
    }

    rep.genus = twoG / 2;
    rep.boundaryComponents = b;
    rep.openMarked = V;
    rep.closedMarked = P;
    if (rep.selfFolded) rep.warnings.push_back("self-folded: some arc bounds one polygon on both sides");
    std::map<std::pair<int, int>, int> sharing;
    for (int a = 0; a < n; ++a) {
        auto key = std::minmax(occ[a][0].polygon, occ[a][1].polygon);
        if (++sharing[{key.first, key.second}] == 2)
            rep.warnings.push_back("polygons " + std::to_string(key.first) + "," + std::to_string(key.second) +
                                   " share more than one arc");
    }
    rep.ok = rep.errors.empty();
    return rep;
}

Surface::Surface(SurfaceSpec spec) : spec_(std::move(spec)) {
    report_ = validate(spec_);
    if (!report_.ok) throw std::runtime_error("invalid surface: " + report_.str());
    for (int p = 0; p < (int)spec_.polygons.size(); ++p) {
        std::string err;
        views_.push_back(*makeView(spec_.polygons[p], &err));
    }
    occ_.assign(spec_.arcs.size(), {});
    std::vector<int> found(spec_.arcs.size(), 0);
    for (int p = 0; p < (int)views_.size(); ++p)
        for (int s = 0; s < views_[p].m(); ++s) {
            int a = views_[p].arcOf[s];
            occ_[a][found[a]++] = Occurrence{p, s, views_[p].flip[s]};
        }
}

int Surface::occurrenceIndex(int arc, int polygon, int slot) const {
    for (int w = 0; w < 2; ++w)
        if (occ_[arc][w].polygon == polygon && occ_[arc][w].slot == slot) return w;
    return -1;
}

int Surface::arcIndex(const std::string& name) const {
    for (int a = 0; a < arcCount(); ++a)
        if (spec_.arcs[a] == name) return a;
    return -1;
}

BiDegree Surface::sweepDegree(int polygon, int startSlot, int t) const {
    const PolygonView& v = views_[polygon];
    long long z = 0;
    int cuts = 0;
    for (int i = 0; i < t; ++i) {
        int c = (startSlot + i) % v.m();
        z += v.f[c];
        if (c == v.m() - 1) ++cuts;
    }
    return BiDegree{z - (t - 1), -cuts};
}

int Surface::cutCrossings(int polygon, int startSlot, int t) const {
    const PolygonView& v = views_[polygon];
    int cuts = 0;
    for (int i = 0; i < t; ++i)
        if ((startSlot + i) % v.m() == v.m() - 1) ++cuts;
    return cuts;
}

SurfaceSpec seed_disk_a(int n) {
    if (n < 1) throw std::runtime_error("BadParameters: disk_a needs n >= 1");
    SurfaceSpec s;
    s.name = "disk_a" + std::to_string(n);
    for (int i = 1; i <= n; ++i) s.arcs.push_back("g" + std::to_string(i));
    // Chain dissection: digon, n-1 triangles between consecutive arcs, digon.
    Polygon d0;
    d0.sides = {Side::makeArc(0, true), Side::makeBoundary()};
    d0.cornerDegrees = {1};
    s.polygons.push_back(d0);
    for (int i = 0; i + 1 < n; ++i) {
        Polygon tri;
        tri.sides = {Side::makeArc(i, false), Side::makeArc(i + 1, true), Side::makeBoundary()};
        tri.cornerDegrees = {1, 1};
        s.polygons.push_back(tri);
    }
    Polygon dn;
    dn.sides = {Side::makeArc(n - 1, false), Side::makeBoundary()};
    dn.cornerDegrees = {1};
    s.polygons.push_back(dn);
    return s;
}

SurfaceSpec seed_annulus(int p, int q) {
    if (p < 1 || q < 1) throw std::runtime_error("BadParameters: annulus needs p,q >= 1");
    int n = p + q;
    SurfaceSpec s;
    s.name = "annulus" + std::to_string(p) + "_" + std::to_string(q);
    for (int i = 0; i < n; ++i) s.arcs.push_back("z" + std::to_string(i));
    for (int k = 0; k < n; ++k) {
        Polygon t;
        bool onFirstCircle = k < p;
        if (onFirstCircle)
            t.sides = {Side::makeArc(k, false), Side::makeArc((k + 1) % n, true), Side::makeBoundary()};
        else
            t.sides = {Side::makeArc(k, false), Side::makeBoundary(), Side::makeArc((k + 1) % n, true)};
        t.cornerDegrees = {1, 1};
        s.polygons.push_back(t);
    }
    return s;
}

SurfaceSpec seed_torus1(int m) {
    if (m < 4) throw std::runtime_error("BadParameters: torus1 needs m >= 4");
    SurfaceSpec s;
    s.name = "torus1_" + std::to_string(m);
    s.arcs = {"a", "b"};
    for (int j = 1; j < m; ++j) s.arcs.push_back("c" + std::to_string(j));
    Polygon core;
    core.sides.push_back(Side::makeArc(0, false));
    core.sides.push_back(Side::makeArc(1, false));
    core.sides.push_back(Side::makeArc(0, true));
    core.sides.push_back(Side::makeArc(1, true));
    for (int j = m - 1; j >= 1; --j) core.sides.push_back(Side::makeArc(1 + j, true));
    core.sides.push_back(Side::makeBoundary());
    core.cornerDegrees.assign(4 + (m - 1), 1);
    s.polygons.push_back(core);
    for (int j = 1; j < m; ++j) {
        Polygon d;
        d.sides = {Side::makeArc(1 + j, false), Side::makeBoundary()};
        d.cornerDegrees = {1};
        s.polygons.push_back(d);
    }
    return s;
}

std::optional<SurfaceSpec> seed_surface(const std::string& name) {
    auto num = [](const std::string& t) -> std::optional<int> {
        if (t.empty()) return std::nullopt;
        for (char c : t)
            if (!isdigit((unsigned char)c)) return std::nullopt;
        return std::stoi(t);
    };
    auto two = [&](const std::string& t) -> std::optional<std::pair<int, int>> {
        auto comma = t.find_first_of(",_");
        if (comma == std::string::npos) return std::nullopt;
        auto a = num(t.substr(0, comma)), b = num(t.substr(comma + 1));
        if (!a || !b) return std::nullopt;
        return std::make_pair(*a, *b);
    };
    std::string body = name;
    // strip "(...)" form
    auto paren = body.find('(');
    if (paren != std::string::npos && body.back() == ')')
        body = body.substr(0, paren) + "_" + body.substr(paren + 1, body.size() - paren - 2);
    std::replace(body.begin(), body.end(), ',', '_');
    try {
        if (body.rfind("disk_a", 0) == 0) {
            auto v = num(body.substr(6) == "" ? "" : (body[6] == '_' ? body.substr(7) : body.substr(6)));
            if (v) return seed_disk_a(*v);
        }
        if (body.rfind("annulus", 0) == 0) {
            std::string rest = body[7] == '_' ? body.substr(8) : body.substr(7);
            if (auto pq = two(rest)) return seed_annulus(pq->first, pq->second);
        }
        if (body.rfind("torus1", 0) == 0) {
            auto v = num(body[6] == '_' ? body.substr(7) : body.substr(6));
            if (v) return seed_torus1(*v);
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

SurfaceSpec regrade_arc(const SurfaceSpec& spec, int arc, int k) {
    if (arc < 0 || arc >= (int)spec.arcs.size()) throw std::runtime_error("UnknownArc");
    Surface surf(spec);
    SurfaceSpec out = spec;
    for (int w = 0; w < 2; ++w) {
        const Occurrence& o = surf.occ(arc, w);
        const PolygonView& v = surf.view(o.polygon);
        int m = v.m();
        int in = (o.slot - 1 + m) % m;   // corner ending at this slot
        int outc = o.slot;               // corner starting at this slot
        out.polygons[o.polygon].cornerDegrees[in] += k;
        out.polygons[o.polygon].cornerDegrees[outc] -= k;
    }
    return out;
}

SlideResult slide(const Surface& surf, int arc, bool towardHead) {
    if (arc < 0 || arc >= surf.arcCount()) throw std::runtime_error("UnknownArc");
    // The polygon on the right of the arc, oriented toward the chosen end, is the
    // occurrence whose clockwise circuit traverses the arc in that direction.
    int rightOcc = -1;
    for (int w = 0; w < 2; ++w)
        if (surf.occ(arc, w).flip == !towardHead) rightOcc = w;
    if (rightOcc < 0) throw std::runtime_error("SlideDegenerate: no right-hand polygon");
    Occurrence oP = surf.occ(arc, rightOcc);
    Occurrence oQ = surf.occ(arc, 1 - rightOcc);
    if (oP.polygon == oQ.polygon) throw std::runtime_error("SlideDegenerate: self-folded arc");
    const PolygonView& P = surf.view(oP.polygon);
    const PolygonView& Q = surf.view(oQ.polygon);
    int mP = P.m(), mQ = Q.m();
    int s = oP.slot;
    if (s + 1 >= mP) throw std::runtime_error("SlideDegenerate: boundary side follows the slid arc");
    int bcArc = P.arcOf[s + 1];
    bool bcFlip = P.flip[s + 1];
    if (bcArc == arc) throw std::runtime_error("SlideDegenerate: arc adjacent to itself");

    int fAlpha = P.f[(s - 1 + mP) % mP];
    int fBeta = P.f[s];
    int fGamma = P.f[s + 1];
    int r = oQ.slot;
    int fDelta = Q.f[(r - 1 + mQ) % mQ];
    int fEpsilon = Q.f[r];

    SurfaceSpec out = surf.spec();
    // Shrunk polygon: sides [.., g, bc, ..] -> [.., g', ..]; g' runs A->C, flip=false here.
    {
        Polygon np;
        std::vector<int> arcs, fs;
        std::vector<bool> flips;
        for (int j = 0; j < mP; ++j) {
            if (j == s) {
                arcs.push_back(arc);  // g' reuses the arc id
                flips.push_back(false);
            } else if (j == s + 1) {
                continue;
            } else {
                arcs.push_back(P.arcOf[j]);
                flips.push_back(P.flip[j]);
            }
        }
        int m2 = mP - 1;
        fs.assign(m2, 0);
        if (m2 == 1) {
            fs[0] = 1;
        } else {
            // positions: g' ends up at index s in the new list
            for (int j = 0; j < m2; ++j) {
                int cornerStartSlot = j;  // corner between new sides j and j+1
                if (cornerStartSlot == (s - 1 + m2) % m2 && m2 > 1)
                    fs[j] = fAlpha;  // corner ending at g'
                else if (cornerStartSlot == s % m2)
                    fs[j] = fBeta + fGamma - 1;  // corner starting at g'
                else {
                    // untouched corner; old index: shift by one past the removed side
                    int oldIdx = j < s ? j : j + 1;
                    fs[j] = P.f[oldIdx];
                }
            }
        }
        for (int j = 0; j < m2; ++j) np.sides.push_back(Side::makeArc(arcs[j], flips[j]));
        np.sides.push_back(Side::makeBoundary());
        np.cornerDegrees = fs;
        out.polygons[oP.polygon] = np;
    }
    // Grown polygon: sides [.., g, ..] -> [.., bc, g', ..]; bc keeps its flip, g' flip=true.
    {
        Polygon np;
        std::vector<int> arcs, fs;
        std::vector<bool> flips;
        for (int j = 0; j < mQ; ++j) {
            if (j == r) {
                arcs.push_back(bcArc);
                flips.push_back(bcFlip);
                arcs.push_back(arc);
                flips.push_back(true);
            } else {
                arcs.push_back(Q.arcOf[j]);
                flips.push_back(Q.flip[j]);
            }
        }
        int m1 = mQ + 1;
        fs.assign(m1, 0);
        for (int j = 0; j < m1; ++j) {
            if (j == (r - 1 + m1) % m1)
                fs[j] = fDelta + fBeta - 1;  // merged corner ending at bc
            else if (j == r)
                fs[j] = 2 - fBeta;  // corner bc -> g'
            else if (j == r + 1)
                fs[j] = fEpsilon;  // corner starting at g'
            else {
                int oldIdx = j < r ? j : j - 1;
                fs[j] = Q.f[oldIdx];
            }
        }
        for (int j = 0; j < m1; ++j) np.sides.push_back(Side::makeArc(arcs[j], flips[j]));
        np.sides.push_back(Side::makeBoundary());
        np.cornerDegrees = fs;
        out.polygons[oQ.polygon] = np;
    }
    out.name = surf.name() + "~slide";
    ValidationReport rep = Surface::validate(out);
    if (!rep.ok) throw std::runtime_error("slide produced an invalid spec (internal error): " + rep.str());
    SlideResult res;
    res.spec = std::move(out);
    res.newArc = arc;
    res.movedArc = bcArc;
    res.shrunkPolygon = oP.polygon;
    res.grownPolygon = oQ.polygon;
    return res;
}

}  // namespace dmsx
