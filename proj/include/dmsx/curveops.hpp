#pragma once

#include <utility>
#include <vector>

#include "dmsx/arrangement.hpp"
#include "dmsx/walk.hpp"

namespace dmsx {

// Positive extension tau ^ sigma at the shared starting decoration: concatenate
// the inverse of sigma with tau, smooth clockwise, normalize, and unknot one
// non-admissible self-intersection if it appears (possibly splitting in two).
// The grading is inherited from tau.
std::vector<Walk> extend(const Surface& s, const Walk& sigma, const Walk& tau);

struct DecomposeResult {
    Walk alpha, beta;
};

// Split eta at a decoration reachable from segment `attachSeg` by a radial
// line disjoint from eta. alpha runs from the decoration to eta's start, beta
// from the decoration to eta's end; both inherit eta's grading.
// Throws "BadAttachment" when no valid radial exists on that segment.
DecomposeResult decompose(const Surface& s, const Walk& eta, int attachSeg,
                          bool checkPostconditions = false);

// Braid twist along the dual arc of `arc` (sign eps = +-1). Throws
// NotAClosedArc when the dual is not a closed arc (self-folded).
Walk braidTwistDual(const Surface& s, int arc, int eps, const Walk& curve);

// A braid word: generators are twists along dual arcs, applied left to right.
using TwistWord = std::vector<std::pair<int, int>>;  // (arc, eps)

Walk applyWord(const Surface& s, const TwistWord& word, const Walk& curve);
TwistWord inverseWord(const TwistWord& word);

// General braid twist along alpha = word(dual arc of `seedArc`), via conjugation.
Walk braidTwist(const Surface& s, const TwistWord& alphaWord, int seedArc, int eps,
                const Walk& curve);

}  // namespace dmsx
