#pragma once

#include <map>
#include <string>
#include <vector>

#include "dmsx/curveops.hpp"
#include "dmsx/twisted.hpp"

namespace dmsx {

struct OrbitSpec {
    int depth = 2;
    unsigned seed = 1;
    size_t maxCurves = 20000;
};

struct EnumeratedCurve {
    Walk walk;       // canonical form (chi normalized at the first passage)
    TwistWord word;  // braid word generating it from a dual arc
    int seedArc = -1;
};

// All distinct normalized closed arcs obtained from the dual arcs by braid
// words of length <= depth, deduplicated by canonical form.
std::vector<EnumeratedCurve> enumerateClosedArcs(const Surface& s, const OrbitSpec& orbit,
                                                 bool* truncated = nullptr);

// Admissible closed curves built by extending pairs of enumerated closed arcs
// at shared decorations.
std::vector<Walk> extendPartners(const Surface& s, const std::vector<EnumeratedCurve>& arcs,
                                 size_t want, unsigned seed);

struct CheckCounts {
    long long pass = 0, fail = 0;
};

struct VerificationReport {
    std::map<std::string, CheckCounts> checks;
    std::vector<std::string> counterexamples;
    bool truncated = false;
    long long elapsedMs = 0;

    bool ok() const {
        for (const auto& [k, c] : checks)
            if (c.fail) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& artifact = "");
    void merge(const VerificationReport& o);
    std::string str(bool withTiming) const;
    std::string json() const;  // deterministic: no timing field
};

// Criteria 1,2,3,4,6,10,11 over all ordered pairs of the enumeration plus the
// extension partners.
VerificationReport verifyMainTheorem(const Surface& s, const OrbitSpec& orbit, int jobs = 1,
                                     size_t extendSamples = 50, bool withOracle = true);

// Criterion 7 (+ cone tests of criterion 8 via shared-endpoint samples).
VerificationReport verifyTwistCompat(const Surface& s, const OrbitSpec& orbit, size_t samples,
                                     int jobs = 1);

// Criterion 9: slide invariance of q_int on sampled pairs plus the main
// identity on the slid system.
VerificationReport verifySlideInvariance(const Surface& s, int arc, bool towardHead,
                                         const OrbitSpec& orbit, size_t pairs);

}  // namespace dmsx
