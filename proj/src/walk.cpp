#include "dmsx/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dmsx {

std::string to_string(CurveType t) {
    switch (t) {
        case CurveType::OpenArc: return "open arc";
        case CurveType::ClosedArc: return "closed arc";
        case CurveType::AdmissibleClosed: return "admissible closed curve";
        case CurveType::Inadmissible: return "inadmissible";
        case CurveType::Degenerate: return "degenerate";
    }
    return "?";
}

SegmentClass segmentClass(const Surface& s, const CurveWalk& w, int j) {
    const Passage& a = w.passages[j];
    const Passage& b = w.passages[j + 1];
    const Occurrence& ain = s.occ(a.arc, a.toOcc);
    int polygon = ain.polygon;
    const Occurrence& bout = s.occ(b.arc, 1 - b.toOcc);
    if (bout.polygon != polygon) throw std::runtime_error("InvalidWalk: non-adjacent passages");
    int sweep = w.sweeps[j];
    SegmentClass sc;
    sc.polygon = polygon;
    sc.positive = sweep > 0;
    if (sweep > 0) {
        sc.fromSlot = ain.slot;
        sc.toSlot = bout.slot;
        sc.t = sweep;
    } else if (sweep < 0) {
        sc.fromSlot = bout.slot;
        sc.toSlot = ain.slot;
        sc.t = -sweep;
    } else {
        throw std::runtime_error("InvalidWalk: zero-sweep segment is not an arc segment class");
    }
    int m = s.view(polygon).m();
    if ((sc.fromSlot + sc.t) % m != sc.toSlot % m)
        throw std::runtime_error("InvalidWalk: sweep does not reach the exit side");
    sc.degB = s.sweepDegree(polygon, sc.fromSlot, sc.t);
    return sc;
}

Walk::Walk(const Surface& s, CurveWalk w) : surf_(&s), w_(std::move(w)) {
    checkValid();
    computeChis();
}

void Walk::checkValid() const {
    const Surface& s = *surf_;
    if (w_.passages.empty()) {
        return;  // degenerate; allowed transiently
    }
    if (w_.sweeps.size() + 1 != w_.passages.size())
        throw std::runtime_error("InvalidWalk: sweeps size mismatch");
    for (const Passage& p : w_.passages)
        if (p.arc < 0 || p.arc >= s.arcCount() || (p.toOcc != 0 && p.toOcc != 1))
            throw std::runtime_error("InvalidWalk: bad passage");
    // endpoint adjacency
    int firstPoly = s.occ(w_.passages.front().arc, 1 - w_.passages.front().toOcc).polygon;
    int lastPoly = s.occ(w_.passages.back().arc, w_.passages.back().toOcc).polygon;
    if (w_.start.polygon != firstPoly) throw std::runtime_error("InvalidWalk: start polygon mismatch");
    if (w_.end.polygon != lastPoly) throw std::runtime_error("InvalidWalk: end polygon mismatch");
    for (int j = 0; j + 1 < (int)w_.passages.size(); ++j) {
        const Occurrence& in = s.occ(w_.passages[j].arc, w_.passages[j].toOcc);
        const Occurrence& out = s.occ(w_.passages[j + 1].arc, 1 - w_.passages[j + 1].toOcc);
        if (in.polygon != out.polygon) throw std::runtime_error("InvalidWalk: non-adjacent passages");
        int m = s.view(in.polygon).m();
        int sweep = w_.sweeps[j];
        int reach = ((in.slot + (sweep % m)) % m + m) % m;
        if (reach != out.slot) throw std::runtime_error("InvalidWalk: sweep does not reach the exit side");
        if (sweep == 0 && in.slot != out.slot)
            throw std::runtime_error("InvalidWalk: zero sweep between different sides");
    }
}

void Walk::computeChis() {
    chis_.assign(w_.passages.size(), BiDegree{});
    if (w_.passages.empty()) return;
    chis_[0] = w_.chi0;
    for (int j = 0; j + 1 < (int)w_.passages.size(); ++j) {
        SegmentClass sc = segmentClass(*surf_, w_, j);
        chis_[j + 1] = sc.positive ? chis_[j] - sc.degB : chis_[j] + sc.degB;
    }
}

int Walk::polygonAfter(int j) const {
    return surf_->occ(w_.passages[j].arc, w_.passages[j].toOcc).polygon;
}
int Walk::polygonBefore(int j) const {
    return surf_->occ(w_.passages[j].arc, 1 - w_.passages[j].toOcc).polygon;
}
int Walk::slotAfter(int j) const { return surf_->occ(w_.passages[j].arc, w_.passages[j].toOcc).slot; }
int Walk::slotBefore(int j) const {
    return surf_->occ(w_.passages[j].arc, 1 - w_.passages[j].toOcc).slot;
}

Walk Walk::reversed() const {
    CurveWalk r;
    r.start = w_.end;
    r.end = w_.start;
    int k = (int)w_.passages.size();
    for (int j = k - 1; j >= 0; --j)
        r.passages.push_back(Passage{w_.passages[j].arc, 1 - w_.passages[j].toOcc});
    for (int j = (int)w_.sweeps.size() - 1; j >= 0; --j) r.sweeps.push_back(-w_.sweeps[j]);
    // Inverting keeps the bi-index at each crossing (the grading lift lives in
    // the projectivized tangent, so a curve and its inverse share it).
    r.chi0 = k > 0 ? chis_[k - 1] : BiDegree{};
    return Walk(*surf_, std::move(r));
}

Walk Walk::shifted(BiDegree d) const {
    CurveWalk r = w_;
    r.chi0 = r.chi0 + d;
    return Walk(*surf_, std::move(r));
}

bool Walk::isNormalized() const {
    for (int j = 0; j + 1 < (int)w_.passages.size(); ++j)
        if (w_.passages[j].arc == w_.passages[j + 1].arc && w_.sweeps[j] == 0 &&
            w_.passages[j + 1].toOcc == 1 - w_.passages[j].toOcc)
            return false;
    return true;
}

Walk reduceRaw(const Surface& s, Endpoint start, Endpoint end, std::vector<Passage> ps,
               std::vector<int> sw, const std::map<int, BiDegree>& chiAt) {
    std::vector<std::optional<BiDegree>> ch(ps.size());
    for (const auto& [idx, chi] : chiAt) ch.at(idx) = chi;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = 0; j + 1 < (int)ps.size(); ++j) {
            bool spike = ps[j].arc == ps[j + 1].arc && ps[j + 1].toOcc == 1 - ps[j].toOcc &&
                         sw[j] == 0;
            if (!spike) continue;
            // Remove passages j, j+1; merge the surrounding sweeps (absorbed at
            // endpoints, where initial segments are isotopically unique).
            std::vector<Passage> nps(ps.begin(), ps.begin() + j);
            std::vector<int> nsw;
            std::vector<std::optional<BiDegree>> nch(ch.begin(), ch.begin() + j);
            bool haveLeft = j > 0;
            bool haveRight = j + 2 < (int)ps.size();
            for (int t = 0; t + 1 < j; ++t) nsw.push_back(sw[t]);
            if (haveLeft && haveRight) nsw.push_back(sw[j - 1] + sw[j + 1]);
            for (int t = j + 2; t < (int)sw.size(); ++t) nsw.push_back(sw[t]);
            for (int t = j + 2; t < (int)ps.size(); ++t) {
                nps.push_back(ps[t]);
                nch.push_back(ch[t]);
            }
            ps = std::move(nps);
            sw = std::move(nsw);
            ch = std::move(nch);
            changed = true;
            break;
        }
    }
    CurveWalk r;
    r.start = start;
    r.end = end;
    r.passages = ps;
    r.sweeps = sw;
    if (ps.empty()) {
        if (start.polygon != end.polygon)
            throw std::runtime_error("reduceRaw: curve reduced away but endpoints differ");
        return Walk(s, std::move(r));
    }
    int anchor = -1;
    for (int j = 0; j < (int)ps.size(); ++j)
        if (ch[j]) {
            anchor = j;
            break;
        }
    if (anchor < 0) throw std::runtime_error("reduceRaw: no annotated passage survived");
    r.chi0 = BiDegree{};
    Walk built(s, std::move(r));
    Walk out = built.shifted(*ch[anchor] - built.chi(anchor));
    for (int j = 0; j < (int)ps.size(); ++j)
        if (ch[j] && !(out.chi(j) == *ch[j]))
            throw std::runtime_error("reduceRaw: chi chain inconsistency");
    return out;
}

Walk Walk::normalized() const {
    std::map<int, BiDegree> chiAt;
    for (int j = 0; j < (int)w_.passages.size(); ++j) chiAt[j] = chis_[j];
    return reduceRaw(*surf_, w_.start, w_.end, w_.passages, w_.sweeps, chiAt);
}

bool Walk::sameLift(const Walk& o) const {
    if (w_ == o.w_) return true;
    return reversed().w_ == o.w_;
}

bool Walk::sameUnderlying(const Walk& o) const {
    auto eqIgnoringChi = [](const CurveWalk& a, const CurveWalk& b) {
        return a.start == b.start && a.end == b.end && a.passages == b.passages && a.sweeps == b.sweeps;
    };
    return eqIgnoringChi(w_, o.w_) || eqIgnoringChi(reversed().w_, o.w_);
}

namespace {
std::string serialize(const CurveWalk& w) {
    std::ostringstream os;
    os << (w.start.kind == Endpoint::Decoration ? "D" : "M") << w.start.polygon << "." << w.start.vertex
       << "|";
    for (size_t i = 0; i < w.passages.size(); ++i) {
        if (i) os << ";" << w.sweeps[i - 1];
        os << ":" << w.passages[i].arc << "." << w.passages[i].toOcc;
    }
    os << "|" << (w.end.kind == Endpoint::Decoration ? "D" : "M") << w.end.polygon << "." << w.end.vertex;
    os << "|chi" << w.chi0.z << "," << w.chi0.x;
    return os.str();
}
}  // namespace

Walk Walk::canonical() const {
    Walk n = normalized();
    CurveWalk a = n.w_;
    a.chi0 = BiDegree{};
    Walk wa(*surf_, a);
    Walk wb = wa.reversed();
    CurveWalk b = wb.data();
    b.chi0 = b.chi0 - wb.chi(0);  // first passage bi-index (0,0) after shift
    Walk wbn(*surf_, b);
    std::string sa = serialize(wa.data()), sb = serialize(wbn.data());
    return sa <= sb ? wa : wbn;
}

std::string Walk::key() const { return serialize(canonical().data()); }

Walk dualArc(const Surface& s, int arc) {
    CurveWalk w;
    w.start = Endpoint::decoration(s.occ(arc, 0).polygon);
    w.end = Endpoint::decoration(s.occ(arc, 1).polygon);
    w.passages = {Passage{arc, 1}};
    w.chi0 = BiDegree{};
    return Walk(s, std::move(w));
}

std::vector<Walk> dual_arcs(const Surface& s) {
    std::vector<Walk> out;
    for (int a = 0; a < s.arcCount(); ++a) out.push_back(dualArc(s, a));
    return out;
}

}  // namespace dmsx
