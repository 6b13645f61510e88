#pragma once

#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dmsx/walk.hpp"

namespace dmsx {

struct PassageRef {
    int curve = -1;
    int index = -1;
    bool operator==(const PassageRef&) const = default;
    bool operator<(const PassageRef& o) const {
        return curve != o.curve ? curve < o.curve : index < o.index;
    }
};

// A drawn strand piece inside one polygon. Interior segments have two feet and
// a monotone rail; endpoint germs are a single full-depth radial foot.
struct Branch {
    int curve = -1;
    int seg = 0;  // passages seg -> seg+1; kStartGerm / kEndGerm for germs
    static constexpr int kStartGerm = -1;
    static constexpr int kEndGerm = -2;
    int polygon = -1;
    bool germ = false;
    mpq_class liftIn, liftOut;  // lifted angular positions (half-turn units, CW+)
    int sweep = 0;              // signed corner count (0 for germs)
    int dir = 0;                // +1 CW, -1 CCW, 0 undetermined/germ
    long long nzIn = 0, nzOut = 0;      // integer phase anchors at the feet
    long long sheetIn = 0, sheetOut = 0;  // X-sheet at the feet
    int entryPassage = -1, exitPassage = -1;  // -1 when that end is the decoration
    mpq_class lo() const { return std::min(liftIn, liftOut); }
    mpq_class hi() const { return std::max(liftIn, liftOut); }
};

// An interior crossing between two drawn branches.
struct InteriorCrossing {
    int polygon = -1;
    int branchA = -1, branchB = -1;  // indices into the arrangement's branch list
    int shift = 0;                   // branch B translated by shift full turns
    mpq_class pos;                   // lifted angular position (frame of branch A)
    BiDegree indAB;                  // ind(curve of A, curve of B) at this point
    BiDegree indBA;
};

// A crossing at a decoration between two endpoint germs.
struct DecorationCrossing {
    int polygon = -1;
    bool aAtStart = true, bAtStart = true;  // which ends of the two curves meet
    BiDegree indAB, indBA;
};

// Exact combinatorial arrangement of a family of normalized closed or
// admissible curves: canonical passage order along every arc (two-sided
// continuation comparison), station coordinates, drawn branches, and crossing
// enumeration with bi-indices.
class Arrangement {
public:
    Arrangement(const Surface& s, std::vector<const Walk*> curves);

    const Surface& surface() const { return *surf_; }
    int curveCount() const { return (int)curves_.size(); }
    const Walk& curve(int c) const { return *curves_[c]; }

    // Canonical order of passages along an arc (occurrence-0 chart order).
    const std::vector<PassageRef>& arcOrder(int arc) const { return order_[arc]; }
    // Position of a passage within its arc's canonical order.
    int position(PassageRef p) const;
    // Station coordinate of a passage in the chart of one of the arc's two
    // polygons (which = occurrence index).
    mpq_class stationU(PassageRef p, int which) const;

    const std::vector<Branch>& branches() const { return branches_; }
    const std::vector<int>& branchesIn(int polygon) const { return perPolygon_[polygon]; }
    // Branch index of curve c's segment j (or germ markers).
    int branchOf(int c, int seg) const;

    // All interior crossings between two (distinct) curves of the family.
    std::vector<InteriorCrossing> interiorCrossings(int ca, int cb) const;
    // Interior self-crossings of one curve (each unordered crossing once).
    std::vector<InteriorCrossing> selfCrossings(int c) const;
    // Decoration crossings between two curves (endpoint coincidences). Handles
    // the identical-germ convention.
    std::vector<DecorationCrossing> decorationCrossings(int ca, int cb) const;

    // Number of corner rays a germ of curve `c` at the given end is rotated
    // through, clockwise, to reach the germ of curve `c2`; also reports cut
    // crossings. Used for extension connectors and angle morphisms.
    struct Gap {
        int t = 0;       // corner rays swept clockwise (0..m)
        int polygon = -1;
        int fromSlot = -1;
        bool identical = false;  // germs have identical underlying half-walks
    };
    Gap germGap(int ca, bool aAtStart, int cb, bool bAtStart) const;

    // Rays crossed from branch entry to a lifted position along the branch.
    int raysBefore(const Branch& b, const mpq_class& x) const;
    // Corner rays / cut-ray lifts in an open interval of lifted positions.
    int raysIn(int polygon, const mpq_class& lo, const mpq_class& hi) const;
    int cutsIn(int polygon, const mpq_class& lo, const mpq_class& hi) const;

    // Certification helpers.
    // True if the loop made of the two curve paths between crossings p and q is
    // null-homotopic in the decoration complement (i.e. the pair {p,q} bounds a
    // bigon; must never happen in a minimal arrangement).
    bool crossingPairBoundsBigon(int ca, int cb, const InteriorCrossing& p,
                                 const InteriorCrossing& q) const;
    // For a self-crossing: true when one of the two loops it cuts off bounds a
    // once-decorated monogon (the non-admissibility pattern); reports the split.
    struct MonogonInfo {
        bool found = false;
        int polygon = -1;  // polygon whose decoration is enclosed
    };
    MonogonInfo onceDecoratedMonogon(int c, const InteriorCrossing& sc) const;

private:
    const Surface* surf_;
    std::vector<const Walk*> curves_;
    std::vector<std::vector<PassageRef>> order_;
    std::map<std::pair<int, int>, int> pos_;  // (curve, index) -> position on its arc
    std::vector<Branch> branches_;
    std::vector<std::vector<int>> perPolygon_;
    std::map<std::pair<int, int>, int> branchIndex_;

    struct Cursor {
        int curve;
        int passage;  // current passage
        int dir;      // +1 forward along the walk, -1 backward
    };
    // Key of the next event of a cursor moving away from its current passage:
    // -1/sweep for a continuing segment, 0 for a dive to the decoration.
    // Returns nullopt when the cursor terminates at an open marked point
    // (unsupported in arrangements).
    struct Event {
        mpq_class key;
        bool dive;
        int sweep;  // for non-dive
    };
    Event nextEvent(const Cursor& cur) const;
    void advance(Cursor& cur) const;
    // +1: x strictly first in this occurrence's chart order, -1: y first, 0 tie.
    int oneSided(PassageRef x, PassageRef y, int arc, int whichOcc) const;
    bool before(PassageRef x, PassageRef y, int arc) const;

    void buildOrders();
    void buildBranches();
    mpq_class liftExit(int polygon, const mpq_class& entry, int sweep, const mpq_class& exitBase) const;
    std::vector<mpq_class> rays(int polygon) const;
    mpq_class cutRay(int polygon) const;

    void crossingsOfBranchPair(int ia, int ib, bool sameCurve, std::vector<InteriorCrossing>& out) const;
    BiDegree indexAt(const Branch& a, const mpq_class& xa, const Branch& b, const mpq_class& xb,
                     int shift) const;
    // Phase of a branch's drawn line at a lifted position on it (z part and sheet).
    void phaseAt(const Branch& b, const mpq_class& x, bool railSide, mpq_class* phiZ,
                 long long* sheet) const;
    friend class LoopReducer;
};

// Crossing data for a pair with equal underlying curves (possibly different
// lifts), which cannot share one arrangement.
struct EqualPairCrossings {
    std::vector<std::pair<BiDegree, BiDegree>> interior;     // (ind(a,b), ind(b,a))
    std::vector<std::pair<BiDegree, BiDegree>> decorations;  // one per end coincidence
};
EqualPairCrossings equalPairCrossings(const Surface& s, const Walk& a, const Walk& b);

}  // namespace dmsx
