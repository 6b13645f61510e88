#include "dmsx/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmsx {

QuiverDGA::QuiverDGA(const Surface& s) : surf_(&s) {
    // Loop classes first: one per arc, degree 1 - X.
    for (int a = 0; a < s.arcCount(); ++a) {
        ArrowClass c;
        c.src = c.dst = a;
        c.loop = true;
        c.arc = a;
        c.degB = BiDegree{1, -1};
        c.degPi = BiDegree{1, 0} - c.degB;
        // Witness data intentionally refers to occurrence 0.
        c.polygon = s.occ(a, 0).polygon;
        c.fromSlot = s.occ(a, 0).slot;
        c.toSlot = c.fromSlot;
        c.t = s.view(c.polygon).m();
        classes_.push_back(c);
    }
    // Ordinary classes: (polygon, fromSlot, t) with 1 <= t <= m-1.
    for (int p = 0; p < s.polygonCount(); ++p) {
        const PolygonView& v = s.view(p);
        for (int from = 0; from < v.m(); ++from)
            for (int t = 1; t < v.m(); ++t) {
                ArrowClass c;
                c.polygon = p;
                c.fromSlot = from;
                c.toSlot = (from + t) % v.m();
                c.t = t;
                c.src = v.arcOf[from];
                c.dst = v.arcOf[c.toSlot];
                c.degB = s.sweepDegree(p, from, t);
                c.degPi = BiDegree{1, 0} - c.degB;
                byWitness_[{p, from, t}] = (int)classes_.size();
                classes_.push_back(c);
            }
        // loop witnesses
        for (int from = 0; from < v.m(); ++from) {
            int arc = v.arcOf[from];
            byWitness_[{p, from, v.m()}] = arc;  // loop class id == arc id
            // Loop degree is forced to (1,-1) by the corner sum rule; check it.
            BiDegree d = s.sweepDegree(p, from, v.m());
            if (!(d == BiDegree{1, -1}))
                throw std::runtime_error("internal: loop degree violates the sum rule");
        }
    }
    // Differential: two-fold factorizations of each class, with sign (-1)^{|b1|_1}.
    diff_.assign(classes_.size(), {});
    auto addFactorizations = [&](int id, int polygon, int fromSlot, int t) {
        for (int t1 = 1; t1 < t; ++t1) {
            int t2 = t - t1;
            auto c1 = classOf(polygon, fromSlot, t1);
            auto c2 = classOf(polygon, (fromSlot + t1) % surf_->view(polygon).m(), t2);
            if (!c1 || !c2) continue;
            long long sign = (classes_[*c1].degB.z % 2 == 0) ? 1 : -1;
            bool dup = false;
            for (auto& term : diff_[id])
                if (term.c1 == *c1 && term.c2 == *c2) dup = true;
            if (!dup) diff_[id].push_back(QuadraticTerm{*c1, *c2, sign});
        }
    };
    for (int id = 0; id < (int)classes_.size(); ++id) {
        const ArrowClass& c = classes_[id];
        if (!c.loop) {
            addFactorizations(id, c.polygon, c.fromSlot, c.t);
        } else {
            for (int w = 0; w < 2; ++w) {
                const Occurrence& o = s.occ(c.arc, w);
                addFactorizations(id, o.polygon, o.slot, s.view(o.polygon).m());
            }
        }
        // homogeneity of d
        for (const auto& term : diff_[id]) {
            BiDegree d = classes_[term.c1].degB + classes_[term.c2].degB;
            if (!(d == c.degB + BiDegree{1, 0}))
                throw std::runtime_error("internal: differential term not homogeneous");
        }
    }
    checkDSquare();
}

std::optional<int> QuiverDGA::classOf(int polygon, int fromSlot, int t) const {
    if (t <= 0) return std::nullopt;
    auto it = byWitness_.find({polygon, fromSlot, t});
    if (it == byWitness_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> QuiverDGA::compose(int c1, int c2) const {
    const ArrowClass& a = classes_[c1];
    const ArrowClass& b = classes_[c2];
    if (a.loop || b.loop) return std::nullopt;  // full turn + anything overshoots
    if (a.polygon != b.polygon) return std::nullopt;
    if (a.toSlot != b.fromSlot) return std::nullopt;
    int m = surf_->view(a.polygon).m();
    if (a.t + b.t > m) return std::nullopt;
    return classOf(a.polygon, a.fromSlot, a.t + b.t);
}

void QuiverDGA::checkDSquare() const {
    // Expand d(d(b)) with the Leibniz rule over length-3 paths and check it
    // cancels, for every class.
    for (int id = 0; id < (int)classes_.size(); ++id) {
        std::map<std::tuple<int, int, int>, long long> acc;
        for (const auto& t : diff_[id]) {
            for (const auto& u : diff_[t.c1]) {  // d(b1) b2
                acc[{u.c1, u.c2, t.c2}] += t.coeff * u.coeff;
            }
            long long s1 = (classes_[t.c1].degB.z % 2 == 0) ? 1 : -1;
            for (const auto& u : diff_[t.c2]) {  // (-1)^{|b1|} b1 d(b2)
                acc[{t.c1, u.c1, u.c2}] += t.coeff * s1 * u.coeff;
            }
        }
        for (const auto& [path, coeff] : acc)
            if (coeff != 0) throw std::runtime_error("DSquareNonzero");
    }
}

std::vector<int> QuiverDGA::zeroPartClasses() const {
    std::vector<int> out;
    for (int id = 0; id < (int)classes_.size(); ++id)
        if (classes_[id].degB.x == 0) out.push_back(id);
    // Induced differential must stay inside: every factor of d(b) for b in the
    // zero part has X-degree zero (cut crossings of sub-sweeps of a cut-free
    // sweep vanish); assert it.
    for (int id : out)
        for (const auto& t : diff_[id])
            if (classes_[t.c1].degB.x != 0 || classes_[t.c2].degB.x != 0)
                throw std::runtime_error("internal: zero part not closed under d");
    return out;
}

std::string QuiverDGA::describe() const {
    const Surface& s = *surf_;
    std::ostringstream os;
    os << "vertices:";
    for (int a = 0; a < s.arcCount(); ++a) os << " " << s.spec().arcs[a];
    os << "\narrows:\n";
    for (int id = 0; id < (int)classes_.size(); ++id) {
        const ArrowClass& c = classes_[id];
        os << "  b" << id << (c.loop ? " (loop)" : "") << ": " << s.spec().arcs[c.src] << " -> "
           << s.spec().arcs[c.dst] << "  deg " << renderExponent(c.degB) << "\n";
    }
    os << "differential:\n";
    for (int id = 0; id < (int)classes_.size(); ++id) {
        if (diff_[id].empty()) continue;
        os << "  d(b" << id << ") =";
        bool first = true;
        for (const auto& t : diff_[id]) {
            os << (t.coeff > 0 ? (first ? " " : " + ") : " - ");
            os << "b" << t.c1 << "*b" << t.c2;
            first = false;
        }
        os << "\n";
    }
    os << "zero part (Z-degree arrows):";
    for (int id : zeroPartClasses()) os << " b" << id;
    os << "\n";
    return os.str();
}

void EElem::add(int id, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(id, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class EElem::coeff(int id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

EElem& EElem::operator+=(const EElem& o) {
    for (const auto& [id, c] : o.terms_) add(id, c);
    return *this;
}

EElem EElem::operator*(const mpq_class& c) const {
    EElem r;
    if (c == 0) return r;
    for (const auto& [id, v] : terms_) r.add(id, v * c);
    return r;
}

ExtAlgebra::ExtAlgebra(const QuiverDGA& q) : q_(&q) {
    int n = vertexCount();
    basis_.assign(n, std::vector<std::vector<int>>(n));
    loopId_.assign(n, -1);
    for (int i = 0; i < n; ++i) basis_[i][i].push_back(identityId(i));
    for (int id = 0; id < q.classCount(); ++id) {
        const ArrowClass& c = q.cls(id);
        basis_[c.src][c.dst].push_back(id);
        if (c.loop) loopId_[c.arc] = id;
    }
    checkAssociativity();
}

std::optional<int> ExtAlgebra::composeBasis(int a, int b) const {
    if (dstOf(a) != srcOf(b)) return std::nullopt;
    if (isIdentity(a)) return b;
    if (isIdentity(b)) return a;
    return q_->compose(a, b);
}

EElem ExtAlgebra::compose(const EElem& a, const EElem& b) const {
    EElem r;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms())
            if (auto c = composeBasis(ia, ib)) r.add(*c, ca * cb);
    return r;
}

std::optional<EElem> ExtAlgebra::invert(const EElem& e, int vertex) const {
    mpq_class lead = e.coeff(identityId(vertex));
    if (lead == 0) return std::nullopt;
    EElem nil = e;
    nil.add(identityId(vertex), -lead);  // e = lead*(1 + nil/lead)
    EElem acc = EElem::basis(identityId(vertex), 1 / lead);
    EElem result = acc;
    // Neumann series; nilpotency bounds the loop.
    EElem power = EElem::basis(identityId(vertex));
    mpq_class sign = 1;
    for (int k = 1; k <= q_->classCount() + 1; ++k) {
        power = compose(power, nil * (1 / lead));
        if (power.isZero()) break;
        sign = -sign;
        result += power * (sign / lead);
        if (k == q_->classCount() + 1) return std::nullopt;  // not nilpotent (bug)
    }
    return result;
}

void ExtAlgebra::checkAssociativity() const {
    int n = vertexCount();
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(identityId(i));
    for (int id = 0; id < q_->classCount(); ++id) all.push_back(id);
    for (int a : all)
        for (int b : all) {
            if (dstOf(a) != srcOf(b)) continue;
            auto ab = composeBasis(a, b);
            for (int c : all) {
                if (dstOf(b) != srcOf(c)) continue;
                auto bc = composeBasis(b, c);
                std::optional<int> left = ab ? composeBasis(*ab, c) : std::nullopt;
                std::optional<int> right = bc ? composeBasis(a, *bc) : std::nullopt;
                if (left != right) throw std::runtime_error("AssociativityFailure");
            }
        }
}

}  // namespace dmsx
