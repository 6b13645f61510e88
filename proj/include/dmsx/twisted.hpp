#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmsx/bigraded.hpp"
#include "dmsx/quiver.hpp"
#include "dmsx/walk.hpp"

namespace dmsx {

// Twisted complex over the Ext algebra: shifted simples plus a square-zero
// degree-(1,0) matrix. Entry (u -> v) is homogeneous of pi-degree
// (1,0) - chi_u + chi_v.
struct TwistedComplex {
    struct Slot {
        int vertex = -1;
        BiDegree chi{};
    };
    std::vector<Slot> slots;
    std::map<std::pair<int, int>, EElem> delta;

    EElem entry(int u, int v) const {
        auto it = delta.find({u, v});
        return it == delta.end() ? EElem{} : it->second;
    }
    void addEntry(int u, int v, const EElem& e) {
        if (e.isZero()) return;
        auto [it, fresh] = delta.emplace(std::make_pair(u, v), e);
        if (!fresh) {
            it->second += e;
            if (it->second.isZero()) delta.erase(it);
        }
    }
};

struct HomReport {
    std::map<BiDegree, long long, BiDegreeOrder> dims;  // cohomology dims per bi-degree
    BiLaurent qdim;
};

// Closed morphism X -> Y[nu] of bi-degree 0, stored as its components.
struct MorphismData {
    TwistedComplex X, Y;
    BiDegree nu{};
    std::map<std::pair<int, int>, EElem> components;  // (slot of X, slot of Y)
};

class StringCat {
public:
    explicit StringCat(const ExtAlgebra& ext) : ext_(&ext) {}

    const ExtAlgebra& ext() const { return *ext_; }
    const Surface& surface() const { return ext_->surface(); }

    // Homogeneity and delta^2 = 0; throws on failure.
    void checkDelta(const TwistedComplex& X) const;

    TwistedComplex simple(int vertex, BiDegree chi = {}) const;
    TwistedComplex shift(const TwistedComplex& X, BiDegree d) const;
    TwistedComplex stringOfCurve(const Walk& curve) const;

    HomReport homComplex(const TwistedComplex& X, const TwistedComplex& Y) const;
    BiLaurent qdimHom(const TwistedComplex& X, const TwistedComplex& Y) const;
    std::vector<BiLaurent> fingerprint(const TwistedComplex& X) const;

    TwistedComplex minimize(const TwistedComplex& X) const;

    // Angle morphism of two curves sharing their starting decoration. For equal
    // lifts pass twoPi = true to get the non-identity full-angle morphism.
    MorphismData angleMorphism(const Walk& sigma, const Walk& tau) const;
    MorphismData twoPiMorphism(const Walk& sigma) const;

    bool isClosed(const MorphismData& f) const;
    // g after f (requires g.X compatible with f.Y up to the shift bookkeeping).
    MorphismData composeMorphisms(const MorphismData& f, const MorphismData& g) const;
    // Is a closed morphism null-homotopic?
    bool nullHomotopic(const MorphismData& f) const;

    TwistedComplex coneOf(const MorphismData& f) const;

    bool isSpherical(const TwistedComplex& M) const;
    TwistedComplex sphericalTwist(const TwistedComplex& M, const TwistedComplex& X) const;
    TwistedComplex inverseSphericalTwist(const TwistedComplex& M, const TwistedComplex& X) const;

    // Object-equality proxy: fingerprints plus q-dimensions against a probe set.
    bool probeEqual(const TwistedComplex& A, const TwistedComplex& B,
                    const std::vector<TwistedComplex>& probes) const;

    struct LagrangianReport {
        bool zeroLevel = false;
        bool stringUsesOnlyZeroPart = false;
        std::string offendingChi;
    };
    LagrangianReport lagrangianCheck(const Walk& curve) const;

    std::string describe(const TwistedComplex& X) const;

private:
    const ExtAlgebra* ext_;

    struct HomChain {
        int u, v;       // slot of X, slot of Y
        int basisId;    // E basis id (negative: identity)
        BiDegree deg;   // degPi + chi_u(X) - chi_v(Y)
    };
    std::vector<HomChain> homBasis(const TwistedComplex& X, const TwistedComplex& Y) const;
    // D(chain) in the Hom complex, as coefficients on the chain basis.
    std::map<int, mpq_class> homDiff(const TwistedComplex& X, const TwistedComplex& Y,
                                     const std::vector<HomChain>& basis,
                                     const std::map<std::tuple<int, int, int>, int>& index,
                                     int chainIdx) const;
};

}  // namespace dmsx
