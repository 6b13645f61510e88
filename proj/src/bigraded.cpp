#include "dmsx/bigraded.hpp"

#include <sstream>

namespace dmsx {

BiLaurent bl_add(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [d, c] : b.terms_) r.add(d, c);
    return r;
}

BiLaurent bl_mul(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.add(da + db, ca * cb);
    return r;
}

BiLaurent bl_involute(const BiLaurent& a) {
    BiLaurent r;
    for (const auto& [d, c] : a.terms_) r.add(-d, c);
    return r;
}

BiLaurent BiLaurent::operator-() const {
    BiLaurent r;
    for (const auto& [d, c] : terms_) r.add(d, -c);
    return r;
}

mpz_class BiLaurent::evalAtOne() const {
    mpz_class s = 0;
    for (const auto& [d, c] : terms_) s += c;
    return s;
}

std::string renderExponent(BiDegree d) {
    std::ostringstream os;
    if (d.x == 0) {
        os << d.z;
    } else {
        std::ostringstream xs;
        if (d.x == 1) xs << "X";
        else if (d.x == -1) xs << "-X";
        else xs << d.x << "X";
        if (d.z == 0) {
            os << xs.str();
        } else {
            os << "(" << xs.str();
            if (d.z > 0) os << "+" << d.z;
            else os << d.z;
            os << ")";
        }
    }
    return os.str();
}

std::string BiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unitCoeff = (mag == 1);
        bool constantTerm = d.isZero();
        if (constantTerm) {
            os << mag.get_str();
        } else {
            if (!unitCoeff) os << mag.get_str() << "*";
            os << "q^" << renderExponent(d);
        }
    }
    return os.str();
}

}  // namespace dmsx
