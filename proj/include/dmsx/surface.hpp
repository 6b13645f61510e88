#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmsx/bigraded.hpp"

namespace dmsx {

// One side of a polygon. Either an arc side (with an orientation flag telling
// whether the arc runs backwards along the polygon's clockwise circuit) or the
// polygon's single boundary side.
struct Side {
    bool boundary = false;
    int arc = -1;
    bool flip = false;

    static Side makeBoundary() { return Side{true, -1, false}; }
    static Side makeArc(int a, bool f) { return Side{false, a, f}; }
    bool operator==(const Side&) const = default;
};

// Polygon of the arc system: clockwise-ordered sides, exactly one boundary side,
// and one integer corner degree per elementary clockwise corner between
// cyclically consecutive arc sides. Corner k sits between arc side k and arc
// side k+1, where arc sides are numbered clockwise starting from the first one
// after the boundary side; corner m-1 is therefore always the cut corner (the
// one whose sweep passes the boundary side and the cut).
struct Polygon {
    std::vector<Side> sides;
    std::vector<int> cornerDegrees;
    bool operator==(const Polygon&) const = default;
};

struct SurfaceSpec {
    std::string name;
    std::vector<std::string> arcs;  // arc identifiers; index = arc id
    std::vector<Polygon> polygons;
    bool operator==(const SurfaceSpec&) const = default;
};

struct Occurrence {
    int polygon = -1;
    int slot = -1;  // index among the polygon's arc sides (normalized order)
    bool flip = false;
    bool operator==(const Occurrence&) const = default;
};

// Normalized view of one polygon: arc sides in clockwise order starting after
// the boundary side, plus the aligned corner degrees.
struct PolygonView {
    std::vector<int> arcOf;    // size m
    std::vector<bool> flip;    // size m
    std::vector<int> f;        // size m, f[m-1] is the cut corner
    int m() const { return static_cast<int>(arcOf.size()); }
};

enum class SurfaceError {
    NotASurface,
    DegreeSumViolation,
    MultipleBoundarySides,
    UnknownArc,
    BadParameters,
    SlideDegenerate,
};

std::string to_string(SurfaceError e);

struct ValidationReport {
    bool ok = false;
    std::vector<std::pair<SurfaceError, std::string>> errors;
    std::vector<std::string> warnings;  // "self-folded", "shared-edge" notes
    int genus = 0;
    int boundaryComponents = 0;
    int openMarked = 0;    // |M|
    int closedMarked = 0;  // |Y| = |Delta| = #polygons
    bool selfFolded = false;
    std::string str() const;
};

// Validated surface with precomputed lookups. Immutable after construction.
class Surface {
public:
    static ValidationReport validate(const SurfaceSpec& spec);
    // Throws std::runtime_error when validation fails.
    explicit Surface(SurfaceSpec spec);

    const SurfaceSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    int arcCount() const { return static_cast<int>(spec_.arcs.size()); }
    int polygonCount() const { return static_cast<int>(views_.size()); }
    const PolygonView& view(int p) const { return views_[p]; }
    const ValidationReport& report() const { return report_; }

    // The two occurrences of an arc, in a fixed canonical order.
    const std::array<Occurrence, 2>& occurrences(int arc) const { return occ_[arc]; }
    const Occurrence& occ(int arc, int which) const { return occ_[arc][which]; }
    // Which occurrence of `arc` lies in polygon `p` at slot `s`.
    int occurrenceIndex(int arc, int polygon, int slot) const;
    int arcIndex(const std::string& name) const;  // -1 if unknown

    // Degree of the positive arc segment class sweeping t corners clockwise from
    // arc-slot `startSlot` in polygon `p` (1 <= t <= m). t == m is the loop.
    BiDegree sweepDegree(int polygon, int startSlot, int t) const;
    int cutCrossings(int polygon, int startSlot, int t) const;  // 0 or 1

private:
    SurfaceSpec spec_;
    std::vector<PolygonView> views_;
    std::vector<std::array<Occurrence, 2>> occ_;
    ValidationReport report_;
};

// Seed surfaces. Throws on bad parameters.
SurfaceSpec seed_disk_a(int n);
SurfaceSpec seed_annulus(int p, int q);
SurfaceSpec seed_torus1(int m);
// Parses "disk_a(n)", "annulus(p,q)", "torus1(m)" and the short forms used by
// the CLI ("disk_a2", "annulus2_1", "torus1_4").
std::optional<SurfaceSpec> seed_surface(const std::string& name);

// Shift the grading of one arc: the four corners adjacent to the two
// occurrences of the arc are adjusted so arrows into it gain (k,0) and arrows
// out of it lose (k,0).
SurfaceSpec regrade_arc(const SurfaceSpec& spec, int arc, int k);

struct SlideResult {
    SurfaceSpec spec;
    int newArc = -1;         // id of the replacement arc (reuses the slid arc's id)
    int movedArc = -1;       // the side the diagonal was drawn across; its dual changes
    int shrunkPolygon = -1;  // former right-hand polygon (lost the triangle)
    int grownPolygon = -1;   // polygon across the slid arc (gained the triangle)
};

// Slide of the arc system: replaces `arc` by the diagonal of the polygon on the
// right of the arc oriented toward `towardHead ? head : tail`.
// Throws on degenerate configurations.
SlideResult slide(const Surface& surf, int arc, bool towardHead);

}  // namespace dmsx
