#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmsx/surface.hpp"

namespace dmsx {

// Endpoint of a curve: an interior decoration (one per polygon) or an open
// marked point, addressed as a polygon corner (vertex index in the normalized
// circuit, 0..m).
struct Endpoint {
    enum Kind { Decoration, Marked } kind = Decoration;
    int polygon = -1;
    int vertex = -1;  // used for Marked only
    static Endpoint decoration(int p) { return Endpoint{Decoration, p, -1}; }
    static Endpoint marked(int p, int v) { return Endpoint{Marked, p, v}; }
    bool operator==(const Endpoint&) const = default;
};

// One crossing of an arc: the curve enters the polygon of occurrence
// `toOcc` of `arc`.
struct Passage {
    int arc = -1;
    int toOcc = -1;  // 0 or 1
    bool operator==(const Passage&) const = default;
};

// A double graded curve as an arc-crossing walk. sweeps[i] is the signed
// clockwise corner count of the segment between passages i and i+1, measured
// around the decoration of the polygon that segment lives in. chi0 is the
// bi-index chi_0 = -ind at the first passage against that arc's zero lift.
struct CurveWalk {
    Endpoint start, end;
    std::vector<Passage> passages;
    std::vector<int> sweeps;  // size passages.size()-1 (empty when <2 passages)
    BiDegree chi0{};

    bool operator==(const CurveWalk&) const = default;
};

enum class CurveType { OpenArc, ClosedArc, AdmissibleClosed, Inadmissible, Degenerate };
std::string to_string(CurveType t);

// Polygon a segment of the walk lives in, and entry/exit slots.
struct SegmentInfo {
    int polygon;
    int inSlot;   // slot of entry side (-1 when the segment starts at an endpoint)
    int outSlot;  // slot of exit side (-1 when it ends at an endpoint)
    int sweep;    // 0 for endpoint segments
};

class Walk {
public:
    Walk(const Surface& s, CurveWalk w);  // throws on invalid adjacency

    const Surface& surface() const { return *surf_; }
    const CurveWalk& data() const { return w_; }
    int size() const { return (int)w_.passages.size(); }
    bool closed() const {
        return w_.start.kind == Endpoint::Decoration && w_.end.kind == Endpoint::Decoration;
    }

    // chi at passage j (propagated from chi0).
    BiDegree chi(int j) const { return chis_[j]; }
    const std::vector<BiDegree>& chis() const { return chis_; }

    // The polygon entered by passage j (segment j..j+1 lives there).
    int polygonAfter(int j) const;
    // The polygon the curve is in before passage j.
    int polygonBefore(int j) const;
    // Slot of passage j's arc in polygonAfter(j) / polygonBefore(j).
    int slotAfter(int j) const;
    int slotBefore(int j) const;

    Walk reversed() const;
    Walk shifted(BiDegree d) const;  // sigma[d]: chi += d
    Walk normalized() const;
    bool isNormalized() const;

    // Equality as unoriented curves with gradings.
    bool sameLift(const Walk& o) const;
    // Equality of underlying curves (gradings ignored).
    bool sameUnderlying(const Walk& o) const;
    // Canonical form for enumeration: orientation-normalized, chi shifted so
    // the first passage has bi-index (0,0).
    Walk canonical() const;
    std::string key() const;  // stable serialization of the canonical form

private:
    const Surface* surf_;
    CurveWalk w_;
    std::vector<BiDegree> chis_;
    void computeChis();
    void checkValid() const;
};

// Reduce a raw, possibly spiked passage/sweep sequence. chiAt annotates known
// bi-indices at raw passage indices; at least one annotated passage must
// survive the reduction (it anchors the lift, and every other surviving
// annotation is cross-checked).
Walk reduceRaw(const Surface& s, Endpoint start, Endpoint end, std::vector<Passage> passages,
               std::vector<int> sweeps, const std::map<int, BiDegree>& chiAt);

// Degree of the arc-segment class of segment j (between passages j and j+1),
// oriented along the walk; positive segments return {deg, +1}, negative return
// {deg of the reversed class, -1}.
struct SegmentClass {
    int polygon, fromSlot, toSlot, t;  // positive representative data
    bool positive;                     // orientation of the walk's segment
    BiDegree degB;                     // degree of the positive class
};
SegmentClass segmentClass(const Surface& s, const CurveWalk& w, int j);

// Dual arcs: for each arc, the walk crossing it once with bi-index (0,0).
// Throws when requested for a self-folded arc? No: returns the walk; it is a
// closed arc exactly when the two incident polygons differ.
Walk dualArc(const Surface& s, int arc);
std::vector<Walk> dual_arcs(const Surface& s);

}  // namespace dmsx
