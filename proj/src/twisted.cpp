#include "dmsx/twisted.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dmsx/arrangement.hpp"

namespace dmsx {

namespace {

int signPow(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// rank of a sparse rational matrix given as rows of (col, coeff)
long long rankOf(std::vector<std::map<int, mpq_class>> rows) {
    long long rank = 0;
    std::map<int, size_t> pivotOfCol;
    for (size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        while (!row.empty()) {
            int col = row.begin()->first;
            auto it = pivotOfCol.find(col);
            if (it == pivotOfCol.end()) break;
            const auto& prow = rows[it->second];
            mpq_class factor = row.begin()->second / prow.begin()->second;
            for (const auto& [c, v] : prow) {
                auto jt = row.find(c);
                mpq_class nv = (jt == row.end() ? mpq_class(0) : jt->second) - factor * v;
                if (nv == 0) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[c] = nv;
                }
            }
        }
        if (!row.empty()) {
            pivotOfCol[row.begin()->first] = r;
            ++rank;
        }
    }
    return rank;
}

}  // namespace

void StringCat::checkDelta(const TwistedComplex& X) const {
    const ExtAlgebra& E = *ext_;
    for (const auto& [uv, e] : X.delta) {
        auto [u, v] = uv;
        BiDegree want = BiDegree{1, 0} - X.slots[u].chi + X.slots[v].chi;
        for (const auto& [id, c] : e.terms()) {
            (void)c;
            if (E.srcOf(id) != X.slots[u].vertex || E.dstOf(id) != X.slots[v].vertex)
                throw std::runtime_error("twisted complex: entry endpoints mismatch");
            if (!(E.degPi(id) == want))
                throw std::runtime_error("twisted complex: entry not homogeneous of degree 1");
        }
    }
    // delta^2 = 0 with plain composition
    int n = (int)X.slots.size();
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            EElem acc;
            for (int v = 0; v < n; ++v) {
                EElem a = X.entry(u, v), b = X.entry(v, w);
                if (a.isZero() || b.isZero()) continue;
                acc += E.compose(a, b);
            }
            if (!acc.isZero()) throw std::runtime_error("twisted complex: delta^2 != 0");
        }
}

TwistedComplex StringCat::simple(int vertex, BiDegree chi) const {
    TwistedComplex X;
    X.slots.push_back({vertex, chi});
    return X;
}

TwistedComplex StringCat::shift(const TwistedComplex& X, BiDegree d) const {
    TwistedComplex Y = X;
    for (auto& s : Y.slots) s.chi = s.chi + d;
    if (signPow(d.z) < 0)
        for (auto& [uv, e] : Y.delta) e = e * mpq_class(-1);
    return Y;
}

TwistedComplex StringCat::stringOfCurve(const Walk& curveIn) const {
    if (!curveIn.isNormalized()) throw std::runtime_error("NotNormalized");
    const Walk& curve = curveIn;
    const Surface& s = surface();
    const QuiverDGA& q = ext_->quiver();
    TwistedComplex X;
    for (int j = 0; j < curve.size(); ++j)
        X.slots.push_back({curve.data().passages[j].arc, curve.chi(j)});
    for (int j = 0; j + 1 < curve.size(); ++j) {
        SegmentClass sc = segmentClass(s, curve.data(), j);
        auto id = q.classOf(sc.polygon, sc.fromSlot, sc.t);
        if (!id) throw std::runtime_error("internal: string segment has no class");
        if (sc.positive)
            X.addEntry(j, j + 1, EElem::basis(*id));
        else
            X.addEntry(j + 1, j, EElem::basis(*id));
    }
    checkDelta(X);
    return X;
}

std::vector<StringCat::HomChain> StringCat::homBasis(const TwistedComplex& X,
                                                     const TwistedComplex& Y) const {
    std::vector<HomChain> out;
    for (int u = 0; u < (int)X.slots.size(); ++u)
        for (int v = 0; v < (int)Y.slots.size(); ++v)
            for (int id : ext_->homBasis(X.slots[u].vertex, Y.slots[v].vertex))
                out.push_back({u, v, id, ext_->degPi(id) + X.slots[u].chi - Y.slots[v].chi});
    return out;
}

std::map<int, mpq_class> StringCat::homDiff(const TwistedComplex& X, const TwistedComplex& Y,
                                            const std::vector<HomChain>& basis,
                                            const std::map<std::tuple<int, int, int>, int>& index,
                                            int chainIdx) const {
    const ExtAlgebra& E = *ext_;
    const HomChain& f = basis[chainIdx];
    std::map<int, mpq_class> out;
    auto accum = [&](int u, int v, const EElem& e, const mpq_class& scale) {
        for (const auto& [id, c] : e.terms()) {
            auto it = index.find({u, v, id});
            if (it == index.end()) throw std::runtime_error("internal: hom chain index miss");
            out[it->second] += c * scale;
            if (out[it->second] == 0) out.erase(it->second);
        }
    };
    // delta_Y o f
    for (int w = 0; w < (int)Y.slots.size(); ++w) {
        EElem d = Y.entry(f.v, w);
        if (d.isZero()) continue;
        accum(f.u, w, E.compose(EElem::basis(f.basisId), d), 1);
    }
    // -(-1)^{|f|_1} f o delta_X
    int sgn = -signPow(f.deg.z);
    for (int t = 0; t < (int)X.slots.size(); ++t) {
        EElem d = X.entry(t, f.u);
        if (d.isZero()) continue;
        accum(t, f.v, E.compose(d, EElem::basis(f.basisId)), sgn);
    }
    return out;
}

HomReport StringCat::homComplex(const TwistedComplex& X, const TwistedComplex& Y) const {
    auto basis = homBasis(X, Y);
    std::map<std::tuple<int, int, int>, int> index;
    for (int i = 0; i < (int)basis.size(); ++i) index[{basis[i].u, basis[i].v, basis[i].basisId}] = i;
    // group by bidegree
    std::map<BiDegree, std::vector<int>, BiDegreeOrder> byDeg;
    for (int i = 0; i < (int)basis.size(); ++i) byDeg[basis[i].deg].push_back(i);
    // rank of D restricted to each degree
    std::map<BiDegree, long long, BiDegreeOrder> rankFrom;
    for (const auto& [deg, chains] : byDeg) {
        std::map<int, int> colIndex;
        BiDegree next = deg + BiDegree{1, 0};
        auto it = byDeg.find(next);
        if (it != byDeg.end())
            for (int i = 0; i < (int)it->second.size(); ++i) colIndex[it->second[i]] = i;
        std::vector<std::map<int, mpq_class>> rows;
        for (int ci : chains) {
            auto d = homDiff(X, Y, basis, index, ci);
            std::map<int, mpq_class> row;
            for (const auto& [target, coeff] : d) {
                auto jt = colIndex.find(target);
                if (jt == colIndex.end())
                    throw std::runtime_error("internal: hom differential left the degree grid");
                row[jt->second] = coeff;
            }
            rows.push_back(std::move(row));
        }
        rankFrom[deg] = rankOf(std::move(rows));
    }
    HomReport rep;
    for (const auto& [deg, chains] : byDeg) {
        long long dim = (long long)chains.size() - rankFrom[deg];
        auto prev = rankFrom.find(deg - BiDegree{1, 0});
        if (prev != rankFrom.end()) dim -= prev->second;
        if (dim < 0) throw std::runtime_error("internal: negative cohomology dimension");
        if (dim > 0) {
            rep.dims[deg] = dim;
            rep.qdim.add(deg, mpz_class((long)dim));
        }
    }
    return rep;
}

BiLaurent StringCat::qdimHom(const TwistedComplex& X, const TwistedComplex& Y) const {
    return homComplex(X, Y).qdim;
}

std::vector<BiLaurent> StringCat::fingerprint(const TwistedComplex& X) const {
    std::vector<BiLaurent> out(surface().arcCount());
    for (const auto& s : X.slots) out[s.vertex].add(-s.chi, 1);
    return out;
}

TwistedComplex StringCat::minimize(const TwistedComplex& Xin) const {
    const ExtAlgebra& E = *ext_;
    TwistedComplex X = Xin;
    for (;;) {
        int pu = -1, pv = -1;
        std::optional<EElem> ginv;
        for (const auto& [uv, e] : X.delta) {
            auto [u, v] = uv;
            if (X.slots[u].vertex != X.slots[v].vertex) continue;
            if (e.coeff(identityId(X.slots[u].vertex)) == 0) continue;
            ginv = E.invert(e, X.slots[u].vertex);
            if (ginv) {
                pu = u;
                pv = v;
                break;
            }
        }
        if (pu < 0) break;
        TwistedComplex Y;
        std::vector<int> map(X.slots.size(), -1);
        for (int i = 0; i < (int)X.slots.size(); ++i) {
            if (i == pu || i == pv) continue;
            map[i] = (int)Y.slots.size();
            Y.slots.push_back(X.slots[i]);
        }
        for (const auto& [uv, e] : X.delta) {
            auto [x, y] = uv;
            if (x == pu || x == pv || y == pu || y == pv) continue;
            Y.addEntry(map[x], map[y], e);
        }
        for (int x = 0; x < (int)X.slots.size(); ++x) {
            if (x == pu || x == pv) continue;
            EElem xv = X.entry(x, pv);
            if (xv.isZero()) continue;
            for (int y = 0; y < (int)X.slots.size(); ++y) {
                if (y == pu || y == pv) continue;
                EElem uy = X.entry(pu, y);
                if (uy.isZero()) continue;
                EElem corr = E.compose(E.compose(xv, *ginv), uy);
                Y.addEntry(map[x], map[y], corr * mpq_class(-1));
            }
        }
        X = std::move(Y);
    }
    checkDelta(X);
    return X;
}

MorphismData StringCat::twoPiMorphism(const Walk& sigma) const {
    MorphismData f;
    f.X = stringOfCurve(sigma);
    f.Y = f.X;
    f.nu = BiDegree{0, 1};
    // Loop components with alternating signs along the string; the all-plus
    // diagonal is a coboundary of the Serre-partner chains.
    for (int j = 0; j < (int)f.X.slots.size(); ++j)
        f.components[{j, j}] = EElem::basis(ext_->loopId(f.X.slots[j].vertex), j % 2 ? -1 : 1);
    if (!isClosed(f)) throw std::runtime_error("internal: 2pi morphism not closed");
    return f;
}

MorphismData StringCat::angleMorphism(const Walk& sigmaIn, const Walk& tauIn) const {
    const Surface& s = surface();
    const QuiverDGA& q = ext_->quiver();
    Walk sigma = sigmaIn.normalized();
    Walk tau = tauIn.normalized();
    if (sigma.data().start.kind != Endpoint::Decoration || tau.data().start.kind != Endpoint::Decoration ||
        sigma.data().start.polygon != tau.data().start.polygon)
        throw std::runtime_error("EndpointMismatch");
    bool sameOriented = sigma.data().start == tau.data().start && sigma.data().end == tau.data().end &&
                        sigma.data().passages == tau.data().passages &&
                        sigma.data().sweeps == tau.data().sweeps;
    if (sameOriented) {
        // equal underlying germs: the full-angle morphism (possibly between
        // shifted lifts)
        MorphismData f = twoPiMorphism(sigma);
        f.Y = stringOfCurve(tau);
        f.nu = BiDegree{0, 1} + sigma.chi(0) - tau.chi(0);
        if (!isClosed(f)) throw std::runtime_error("internal: shifted 2pi morphism not closed");
        return f;
    }

    MorphismData f;
    f.X = stringOfCurve(sigma);
    f.Y = stringOfCurve(tau);

    // longest shared prefix of crossings
    int common = 0;
    while (common < sigma.size() && common < tau.size() &&
           sigma.data().passages[common] == tau.data().passages[common] &&
           (common == 0 || sigma.data().sweeps[common - 1] == tau.data().sweeps[common - 1]))
        ++common;

    Arrangement arr(s, {&sigma, &tau});
    Arrangement::Gap g = arr.germGap(0, true, 1, true);
    if (g.identical) throw std::runtime_error("internal: identical germs in angleMorphism");
    int mStart = s.view(g.polygon).m();

    // The clockwise angle between the germs: t0 = 0 gives an identity prefix,
    // t0 = full turn a loop prefix; diverging germs give the connecting class.
    bool loopPrefix = false;
    if (common >= 1) {
        if (g.t != 0 && g.t != mStart)
            throw std::runtime_error("internal: shared first passage with a partial germ gap");
        loopPrefix = g.t == mStart;
    }
    BiDegree startDeg{};
    if (common == 0) {
        if (g.t == 0) throw std::runtime_error("internal: zero germ gap with distinct first passages");
        auto id = q.classOf(g.polygon, g.fromSlot, g.t);
        if (!id) throw std::runtime_error("internal: germ gap class missing");
        startDeg = q.cls(*id).degPi;
        f.nu = startDeg + sigma.chi(0) - tau.chi(0);
        f.components[{0, 0}] = EElem::basis(*id);
        if (!isClosed(f)) throw std::runtime_error("internal: angle morphism not closed");
        return f;
    }
    if (loopPrefix) startDeg = BiDegree{0, 1};
    f.nu = startDeg + sigma.chi(0) - tau.chi(0);

    int sgn = 1;
    for (int j = 0; j < common; ++j) {
        int id = loopPrefix ? ext_->loopId(f.X.slots[j].vertex) : identityId(f.X.slots[j].vertex);
        f.components[{j, j}] = EElem::basis(id, sgn);
        sgn *= loopPrefix ? -1 : signPow(f.nu.z);
    }
    if (common < sigma.size() && common < tau.size()) {
        // diverging sweeps inside the polygon entered together
        const Branch& bs = arr.branches()[arr.branchOf(0, common - 1)];
        const Branch& bt = arr.branches()[arr.branchOf(1, common - 1)];
        int tConn = (loopPrefix ? mStart * 0 + s.view(bs.polygon).m() : 0) +
                    tau.data().sweeps[common - 1] - sigma.data().sweeps[common - 1];
        bool branchesCross = false;
        {
            mpq_class alo = bs.lo(), ahi = bs.hi(), blo = bt.lo(), bhi = bt.hi();
            for (long long w = -std::abs(bs.sweep) - std::abs(bt.sweep) - 2;
                 w <= std::abs(bs.sweep) + std::abs(bt.sweep) + 2 && !branchesCross; ++w) {
                mpq_class lo2 = blo + mqOf(2 * w), hi2 = bhi + mqOf(2 * w);
                if ((alo < lo2 && lo2 < ahi && ahi < hi2) || (lo2 < alo && alo < hi2 && hi2 < ahi))
                    branchesCross = true;
            }
        }
        int m = s.view(bs.polygon).m();
        if (!branchesCross && tConn >= 0 && tConn <= m) {
            int fromSlot =
                s.occ(sigma.data().passages[common].arc, 1 - sigma.data().passages[common].toOcc).slot;
            std::optional<int> id;
            if (tConn == 0)
                id = identityId(f.X.slots[common].vertex);
            else
                id = q.classOf(bs.polygon, fromSlot, tConn);
            if (id) f.components[{common, common}] = EElem::basis(*id, sgn);
        }
    }
    if (!isClosed(f)) throw std::runtime_error("internal: angle morphism not closed");
    return f;
}

bool StringCat::isClosed(const MorphismData& f) const {
    const ExtAlgebra& E = *ext_;
    int sY = signPow(f.nu.z);
    int nx = (int)f.X.slots.size(), ny = (int)f.Y.slots.size();
    for (int u = 0; u < nx; ++u)
        for (int w = 0; w < ny; ++w) {
            EElem acc;
            for (int v = 0; v < ny; ++v) {
                auto it = f.components.find({u, v});
                if (it == f.components.end()) continue;
                EElem d = f.Y.entry(v, w);
                if (d.isZero()) continue;
                acc += E.compose(it->second, d) * mpq_class(sY);
            }
            for (int t = 0; t < nx; ++t) {
                EElem d = f.X.entry(u, t);
                if (d.isZero()) continue;
                auto it = f.components.find({t, w});
                if (it == f.components.end()) continue;
                acc += E.compose(d, it->second) * mpq_class(-1);
            }
            if (!acc.isZero()) return false;
        }
    return true;
}

MorphismData StringCat::composeMorphisms(const MorphismData& f, const MorphismData& g) const {
    MorphismData h;
    h.X = f.X;
    h.Y = g.Y;
    h.nu = f.nu + g.nu;
    for (const auto& [uv, a] : f.components)
        for (const auto& [vw, b] : g.components) {
            if (uv.second != vw.first) continue;
            EElem c = ext_->compose(a, b);
            if (c.isZero()) continue;
            auto key = std::make_pair(uv.first, vw.second);
            auto [it, fresh] = h.components.emplace(key, c);
            if (!fresh) {
                it->second += c;
                if (it->second.isZero()) h.components.erase(it);
            }
        }
    return h;
}

bool StringCat::nullHomotopic(const MorphismData& f) const {
    // Solve D(h) = f in the Hom complex of (X, Y[nu]) at total degree 0.
    TwistedComplex Ys = shift(f.Y, f.nu);
    auto basis = homBasis(f.X, Ys);
    std::map<std::tuple<int, int, int>, int> index;
    for (int i = 0; i < (int)basis.size(); ++i) index[{basis[i].u, basis[i].v, basis[i].basisId}] = i;
    // target vector: f's components in degree (0,0); note the shift keeps ids
    std::map<int, mpq_class> target;
    for (const auto& [uv, e] : f.components)
        for (const auto& [id, c] : e.terms()) {
            auto it = index.find({uv.first, uv.second, id});
            if (it == index.end()) throw std::runtime_error("internal: morphism outside hom basis");
            if (!(basis[it->second].deg == BiDegree{0, 0}))
                throw std::runtime_error("internal: morphism not of degree zero");
            target[it->second] = c;
        }
    // columns = chains of degree (-1,0); rows indexed by chains of degree (0,0)
    std::vector<int> cols;
    for (int i = 0; i < (int)basis.size(); ++i)
        if (basis[i].deg == BiDegree{-1, 0}) cols.push_back(i);
    // build the linear system D(h) = f: unknown coefficients on cols
    std::vector<std::map<int, mpq_class>> rowsT;  // one row per column (transposed later)
    for (int ci : cols) rowsT.push_back(homDiff(f.X, Ys, basis, index, ci));
    // gaussian solve: assemble as augmented system over the union of row indices
    std::map<int, int> rowIdx;
    for (const auto& r : rowsT)
        for (const auto& [t, c] : r) {
            (void)c;
            if (!rowIdx.count(t)) {
                int k = (int)rowIdx.size();
                rowIdx[t] = k;
            }
        }
    for (const auto& [t, c] : target) {
        (void)c;
        if (!rowIdx.count(t)) {
            int k = (int)rowIdx.size();
            rowIdx[t] = k;
        }
    }
    int nr = (int)rowIdx.size(), nc = (int)cols.size();
    std::vector<std::vector<mpq_class>> Mt(nr, std::vector<mpq_class>(nc + 1, 0));
    for (int j = 0; j < nc; ++j)
        for (const auto& [t, c] : rowsT[j]) Mt[rowIdx[t]][j] = c;
    for (const auto& [t, c] : target) Mt[rowIdx[t]][nc] = c;
    // row-reduce and test consistency
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (Mt[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(Mt[piv], Mt[row]);
        for (int r = 0; r < nr; ++r) {
            if (r == row || Mt[r][col] == 0) continue;
            mpq_class fac = Mt[r][col] / Mt[row][col];
            for (int c2 = col; c2 <= nc; ++c2) Mt[r][c2] -= fac * Mt[row][c2];
        }
        ++row;
    }
    for (int r = 0; r < nr; ++r) {
        bool allZero = true;
        for (int c2 = 0; c2 < nc; ++c2)
            if (Mt[r][c2] != 0) allZero = false;
        if (allZero && Mt[r][nc] != 0) return false;
    }
    return true;
}

TwistedComplex StringCat::coneOf(const MorphismData& f) const {
    if (!isClosed(f)) throw std::runtime_error("NotClosed");
    TwistedComplex C;
    int nx = (int)f.X.slots.size();
    for (const auto& s : f.X.slots) C.slots.push_back({s.vertex, s.chi + BiDegree{1, 0}});
    for (const auto& s : f.Y.slots) C.slots.push_back({s.vertex, s.chi + f.nu});
    for (const auto& [uv, e] : f.X.delta) C.addEntry(uv.first, uv.second, e * mpq_class(-1));
    int sY = signPow(f.nu.z);
    for (const auto& [uv, e] : f.Y.delta)
        C.addEntry(nx + uv.first, nx + uv.second, e * mpq_class(sY));
    for (const auto& [uv, e] : f.components) C.addEntry(uv.first, nx + uv.second, e);
    checkDelta(C);
    return C;
}

bool StringCat::isSpherical(const TwistedComplex& M) const {
    BiLaurent want = BiLaurent(1) + qpow(BiDegree{0, 1});
    return qdimHom(M, M) == want;
}

TwistedComplex StringCat::sphericalTwist(const TwistedComplex& M, const TwistedComplex& X) const {
    if (!isSpherical(M)) throw std::runtime_error("NotSpherical");
    auto basis = homBasis(M, X);
    std::map<std::tuple<int, int, int>, int> index;
    for (int i = 0; i < (int)basis.size(); ++i) index[{basis[i].u, basis[i].v, basis[i].basisId}] = i;
    int nm = (int)M.slots.size();
    int nc = (int)basis.size();
    TwistedComplex T;
    // copies of M: slot (c, w) at index c*nm + w
    for (int c = 0; c < nc; ++c)
        for (int w = 0; w < nm; ++w)
            T.slots.push_back({M.slots[w].vertex, M.slots[w].chi + BiDegree{1, 0} - basis[c].deg});
    int base = nc * nm;
    for (const auto& s : X.slots) T.slots.push_back({s.vertex, s.chi});
    // within-copy differential
    for (int c = 0; c < nc; ++c) {
        int sgn = signPow(1 + basis[c].deg.z);
        for (const auto& [uv, e] : M.delta)
            T.addEntry(c * nm + uv.first, c * nm + uv.second, e * mpq_class(sgn));
    }
    // cross-copy: D(c) = sum lambda c'
    for (int c = 0; c < nc; ++c) {
        auto d = homDiff(M, X, basis, index, c);
        for (const auto& [cp, lambda] : d)
            for (int w = 0; w < nm; ++w)
                T.addEntry(c * nm + w, cp * nm + w,
                           EElem::basis(identityId(M.slots[w].vertex), lambda));
    }
    // evaluation
    for (int c = 0; c < nc; ++c) {
        int sgn = signPow(basis[c].deg.z);
        T.addEntry(c * nm + basis[c].u, base + basis[c].v, EElem::basis(basis[c].basisId, sgn));
    }
    for (const auto& [uv, e] : X.delta) T.addEntry(base + uv.first, base + uv.second, e);
    checkDelta(T);
    return minimize(T);
}

TwistedComplex StringCat::inverseSphericalTwist(const TwistedComplex& M, const TwistedComplex& X) const {
    if (!isSpherical(M)) throw std::runtime_error("NotSpherical");
    auto basis = homBasis(X, M);
    std::map<std::tuple<int, int, int>, int> index;
    for (int i = 0; i < (int)basis.size(); ++i) index[{basis[i].u, basis[i].v, basis[i].basisId}] = i;
    int nm = (int)M.slots.size();
    int nc = (int)basis.size();
    TwistedComplex T;
    for (const auto& s : X.slots) T.slots.push_back(s);
    int base = (int)T.slots.size();
    // dual copies M[d_c][-1]
    for (int c = 0; c < nc; ++c)
        for (int w = 0; w < nm; ++w)
            T.slots.push_back({M.slots[w].vertex, M.slots[w].chi + basis[c].deg - BiDegree{1, 0}});
    for (const auto& [uv, e] : X.delta) T.addEntry(uv.first, uv.second, e);
    // within-copy: -(-1)^{d_c}
    for (int c = 0; c < nc; ++c) {
        int sgn = -signPow(basis[c].deg.z);
        for (const auto& [uv, e] : M.delta)
            T.addEntry(base + c * nm + uv.first, base + c * nm + uv.second, e * mpq_class(sgn));
    }
    // dual cross-copy: copy_c -> copy_{c'} with coefficient of c in D(c'), negated
    for (int cp = 0; cp < nc; ++cp) {
        auto d = homDiff(X, M, basis, index, cp);
        for (const auto& [c, lambda] : d)
            for (int w = 0; w < nm; ++w)
                T.addEntry(base + c * nm + w, base + cp * nm + w,
                           EElem::basis(identityId(M.slots[w].vertex), -lambda));
    }
    // coevaluation, negated by the [-1]: X-slot u -> (c, w) for c = (u, w, pi)
    for (int c = 0; c < nc; ++c) {
        long long dz = basis[c].deg.z;
        int sgn = -signPow(dz * (dz + 1) / 2);
        T.addEntry(basis[c].u, base + c * nm + basis[c].v, EElem::basis(basis[c].basisId, sgn));
    }
    checkDelta(T);
    return minimize(T);
}

bool StringCat::probeEqual(const TwistedComplex& A, const TwistedComplex& B,
                           const std::vector<TwistedComplex>& probes) const {
    auto fa = fingerprint(A), fb = fingerprint(B);
    if (fa != fb) return false;
    for (const auto& P : probes) {
        if (!(qdimHom(P, A) == qdimHom(P, B))) return false;
        if (!(qdimHom(A, P) == qdimHom(B, P))) return false;
    }
    return true;
}

StringCat::LagrangianReport StringCat::lagrangianCheck(const Walk& curve) const {
    LagrangianReport rep;
    rep.zeroLevel = true;
    for (int j = 0; j < curve.size(); ++j)
        if (curve.chi(j).x != 0) {
            rep.zeroLevel = false;
            rep.offendingChi = "passage " + std::to_string(j) + " has X-part " +
                               std::to_string(curve.chi(j).x);
            break;
        }
    if (!rep.zeroLevel) return rep;
    TwistedComplex X = stringOfCurve(curve);
    rep.stringUsesOnlyZeroPart = true;
    for (const auto& [uv, e] : X.delta)
        for (const auto& [id, c] : e.terms()) {
            (void)c;
            if (!isIdentity(id) && ext_->quiver().cls(id).degB.x != 0) rep.stringUsesOnlyZeroPart = false;
        }
    return rep;
}

std::string StringCat::describe(const TwistedComplex& X) const {
    std::ostringstream os;
    const Surface& s = surface();
    os << "slots:";
    for (const auto& sl : X.slots) os << " S(" << s.spec().arcs[sl.vertex] << ")[" << renderExponent(sl.chi) << "]";
    os << "\ndelta:";
    if (X.delta.empty()) os << " 0";
    os << "\n";
    for (const auto& [uv, e] : X.delta) {
        os << "  " << uv.first << " -> " << uv.second << ":";
        for (const auto& [id, c] : e.terms()) {
            os << " " << c.get_str() << "*";
            if (isIdentity(id)) os << "id";
            else os << "pi_b" << id;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace dmsx
