#pragma once

#include "dmsx/arrangement.hpp"
#include "dmsx/bigraded.hpp"
#include "dmsx/walk.hpp"

namespace dmsx {

struct CrossingRecord {
    bool atDecoration = false;
    int polygon = -1;
    BiDegree ind;   // ind(sigma, tau)
    BiDegree indT;  // ind(tau, sigma)
};

struct CrossingTable {
    std::vector<CrossingRecord> records;
    BiLaurent qint;  // assembled q-intersection
};

// Full classification, including the admissibility scan.
CurveType classify(const Surface& s, const Walk& curve);

// Crossing list and graded q-intersection of two closed/admissible curves.
CrossingTable crossings(const Surface& s, const Walk& sigma, const Walk& tau,
                        bool includeSelf = false);
BiLaurent q_int(const Surface& s, const Walk& sigma, const Walk& tau, bool includeSelf = false);

// q-intersection of the shifted arc lift against a curve: sum of q^{ind} over
// the curve's passages through the arc (no decoration term, no interior factor).
BiLaurent q_int_open(const Surface& s, int arc, BiDegree arcShift, const Walk& tau);

// Independent brute-force oracle: draws every branch as an exact rational
// polyline in convex polygon charts and counts proper segment intersections.
// Returns interior crossing counts per unordered curve pair {a,b} of the
// arrangement (a <= b; self pairs count unordered self-crossings).
long long polylineInteriorCount(const Arrangement& arr, int ca, int cb);

// Bigon-freeness certification: checks every pair of interior crossings of the
// two curves; throws if any pair bounds an empty bigon.
void certifyMinimalPosition(const Surface& s, const Walk& sigma, const Walk& tau);

}  // namespace dmsx
