#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dmsx/bigraded.hpp"
#include "dmsx/surface.hpp"

namespace dmsx {

// A class of positive arc segments. Ordinary classes have one witness
// (polygon, fromSlot, toSlot, t) with 1 <= t < m; the loop class of an arc has
// one full-turn witness per incident polygon side and is stored once per arc.
struct ArrowClass {
    int src = -1, dst = -1;  // arc ids
    bool loop = false;
    int arc = -1;                     // for loops: the arc
    int polygon = -1, fromSlot = -1;  // witness (ordinary: the unique one)
    int toSlot = -1, t = 0;
    BiDegree degB{};  // bi-degree of the arrow b
    BiDegree degPi{}; // (1,0) - degB, the Ext-side degree of pi
};

// Formal integer combination of length-2 paths (b1, b2), used by the differential.
struct QuadraticTerm {
    int c1 = -1, c2 = -1;  // class ids, path b_{c1} b_{c2}
    long long coeff = 0;
};

class ExtAlgebra;

class QuiverDGA {
public:
    // Builds arrows, degrees and the differential; verifies d^2 = 0 and throws
    // "DSquareNonzero" if it fails.
    explicit QuiverDGA(const Surface& s);

    const Surface& surface() const { return *surf_; }
    int classCount() const { return (int)classes_.size(); }
    const ArrowClass& cls(int id) const { return classes_[id]; }
    const std::vector<ArrowClass>& classes() const { return classes_; }
    const std::vector<std::vector<QuadraticTerm>>& differential() const { return diff_; }

    // Class id of the positive segment sweeping t corners clockwise from
    // fromSlot in polygon p; t = m gives the loop, t = 0 gives nullopt (trivial).
    std::optional<int> classOf(int polygon, int fromSlot, int t) const;
    // Composition of classes (concatenation c1 then c2); nullopt when zero.
    std::optional<int> compose(int c1, int c2) const;

    // Sub-quiver of arrows with X-degree zero, with the induced differential.
    std::vector<int> zeroPartClasses() const;

    std::string describe() const;  // human-readable dump for the CLI

private:
    const Surface* surf_;
    std::vector<ArrowClass> classes_;
    std::map<std::tuple<int, int, int>, int> byWitness_;  // (polygon, fromSlot, t) -> id
    std::vector<std::vector<QuadraticTerm>> diff_;
    void checkDSquare() const;
};

// Element of the Ext algebra restricted to one (source, target) pair of simples:
// rational combination of basis morphisms. Basis ids: -1-i encodes the identity
// at vertex i; otherwise the ArrowClass id of pi_[rho].
class EElem {
public:
    EElem() = default;
    static EElem basis(int id, const mpq_class& c = 1) {
        EElem e;
        e.add(id, c);
        return e;
    }
    void add(int id, const mpq_class& c);
    bool isZero() const { return terms_.empty(); }
    const std::map<int, mpq_class>& terms() const { return terms_; }
    mpq_class coeff(int id) const;
    EElem& operator+=(const EElem& o);
    EElem operator*(const mpq_class& c) const;
    bool operator==(const EElem&) const = default;

private:
    std::map<int, mpq_class> terms_;
};

inline int identityId(int vertex) { return -1 - vertex; }
inline bool isIdentity(int id) { return id < 0; }
inline int identityVertex(int id) { return -1 - id; }

// The Ext algebra E of the direct sum of simples: basis = identities and the
// pi_[rho]; composition per the class composition. Associativity is verified at
// construction (throws "AssociativityFailure").
class ExtAlgebra {
public:
    explicit ExtAlgebra(const QuiverDGA& q);

    const QuiverDGA& quiver() const { return *q_; }
    const Surface& surface() const { return q_->surface(); }
    int vertexCount() const { return surface().arcCount(); }

    int srcOf(int id) const { return isIdentity(id) ? identityVertex(id) : q_->cls(id).src; }
    int dstOf(int id) const { return isIdentity(id) ? identityVertex(id) : q_->cls(id).dst; }
    BiDegree degPi(int id) const { return isIdentity(id) ? BiDegree{} : q_->cls(id).degPi; }

    // pi-basis ids from vertex i to vertex j (identities included when i == j).
    const std::vector<int>& homBasis(int i, int j) const { return basis_[i][j]; }

    // Composition "first a, then b" (requires dst(a) == src(b)); basis x basis.
    std::optional<int> composeBasis(int a, int b) const;
    // Bilinear extension.
    EElem compose(const EElem& a, const EElem& b) const;
    // Inverse of an element of Hom(S_i, S_i) of degree (0,0) whose identity
    // coefficient is nonzero (identity + nilpotent).
    std::optional<EElem> invert(const EElem& e, int vertex) const;

    int loopId(int arc) const { return loopId_[arc]; }

private:
    const QuiverDGA* q_;
    std::vector<std::vector<std::vector<int>>> basis_;
    std::vector<int> loopId_;
    void checkAssociativity() const;
};

}  // namespace dmsx
