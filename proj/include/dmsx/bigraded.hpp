#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dmsx {

// Exponent in the group Z + Z*X. z is the coefficient of 1, x the coefficient of X.
struct BiDegree {
    long long z = 0;
    long long x = 0;

    friend BiDegree operator+(BiDegree a, BiDegree b);
    friend BiDegree operator-(BiDegree a, BiDegree b);
    BiDegree operator-() const { return BiDegree{-z, -x}; }
    BiDegree& operator+=(BiDegree o) { *this = *this + o; return *this; }
    BiDegree& operator-=(BiDegree o) { *this = *this - o; return *this; }
    bool operator==(const BiDegree&) const = default;
    bool isZero() const { return z == 0 && x == 0; }
};

// Order used everywhere terms are listed: (x, z) ascending. This is the CLI contract order.
struct BiDegreeOrder {
    bool operator()(const BiDegree& a, const BiDegree& b) const {
        if (a.x != b.x) return a.x < b.x;
        return a.z < b.z;
    }
};

inline void checkExponent(long long v) {
    // Invariant polynomials stay tiny; anything near the limit is a bug upstream.
    if (v > (1LL << 56) || v < -(1LL << 56)) throw std::overflow_error("BiDegree exponent overflow");
}

inline BiDegree operator+(BiDegree a, BiDegree b) {
    BiDegree r{a.z + b.z, a.x + b.x};
    checkExponent(r.z);
    checkExponent(r.x);
    return r;
}

inline BiDegree operator-(BiDegree a, BiDegree b) {
    BiDegree r{a.z - b.z, a.x - b.x};
    checkExponent(r.z);
    checkExponent(r.x);
    return r;
}

// Laurent polynomial in q with exponents in Z + Z*X and integer coefficients.
// Canonical form: no zero coefficients stored; equality is map equality.
class BiLaurent {
public:
    using Terms = std::map<BiDegree, mpz_class, BiDegreeOrder>;

    BiLaurent() = default;
    explicit BiLaurent(long long constant) { add(BiDegree{0, 0}, mpz_class((long)constant)); }
    static BiLaurent monomial(BiDegree d, mpz_class c = 1) {
        BiLaurent p;
        p.add(d, std::move(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    mpz_class coeff(BiDegree d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add(BiDegree d, const mpz_class& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const BiLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiLaurent& o) const { return !(*this == o); }

    friend BiLaurent bl_add(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent bl_mul(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent bl_involute(const BiLaurent& a);

    BiLaurent operator+(const BiLaurent& o) const { return bl_add(*this, o); }
    BiLaurent operator*(const BiLaurent& o) const { return bl_mul(*this, o); }
    BiLaurent operator-() const;
    BiLaurent operator-(const BiLaurent& o) const { return *this + (-o); }

    // Sum of coefficients, i.e. specialization at q = 1. Ring homomorphism to Z.
    mpz_class evalAtOne() const;

    // Rendering contract: terms sorted by (x, z) ascending, "c*q^(exponent)", coefficient 1 omitted,
    // exponent forms: "1" for (0,0) term base, "q^3", "q^-1", "q^X", "q^-2X", "q^(X-1)", "q^(2X+3)".
    std::string str() const;

private:
    Terms terms_;
};

BiLaurent bl_add(const BiLaurent& a, const BiLaurent& b);
BiLaurent bl_mul(const BiLaurent& a, const BiLaurent& b);
BiLaurent bl_involute(const BiLaurent& a);

// q^d as a convenience.
inline BiLaurent qpow(BiDegree d) { return BiLaurent::monomial(d); }

std::string renderExponent(BiDegree d);

// GMP helpers: unambiguous construction from 64-bit integers.
inline mpq_class mqOf(long long v) { return mpq_class((long)v); }
inline mpq_class mqFrac(long long num, long long den) {
    mpq_class q(mpz_class((long)num), mpz_class((long)den));
    q.canonicalize();
    return q;
}


}  // namespace dmsx
