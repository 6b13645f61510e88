#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dmsx/bigraded.hpp"

using namespace dmsx;

namespace {
BiLaurent randomPoly(std::mt19937& rng) {
    BiLaurent p;
    int terms = (int)(rng() % 5);
    for (int i = 0; i < terms; ++i)
        p.add(BiDegree{(long long)(rng() % 9) - 4, (long long)(rng() % 5) - 2},
              mpz_class((long)((long long)(rng() % 11) - 5)));
    return p;
}
}  // namespace

TEST_CASE("addition basics") {
    BiLaurent one(1);
    BiLaurent qX = qpow({0, 1});
    CHECK((one + qX).str() == "1 + q^X");
    BiLaurent p = randomPoly(*(new std::mt19937(7)));
    CHECK(bl_add(p, BiLaurent{}) == p);
    BiLaurent q1 = qpow({1, 0});
    CHECK(bl_add(q1, -q1).isZero());
}

TEST_CASE("multiplication and exponent arithmetic") {
    BiLaurent factor = BiLaurent(1) + qpow({-1, 1});  // 1 + q^{X-1}
    BiLaurent mono = qpow({3, 2});
    BiLaurent prod = factor * mono;
    BiLaurent want = qpow({3, 2}) + qpow({2, 3});
    CHECK(prod == want);
    BiLaurent p = randomPoly(*(new std::mt19937(3)));
    CHECK(p * BiLaurent(1) == p);
    BiLaurent a = qpow({1, 0}) + qpow({0, 1});
    BiLaurent b = qpow({1, 0}) - qpow({0, 1});
    CHECK(a * b == qpow({2, 0}) - qpow({0, 2}));
}

TEST_CASE("involution") {
    CHECK(bl_involute(qpow({3, -2})) == qpow({-3, 2}));
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        BiLaurent p = randomPoly(rng);
        CHECK(bl_involute(bl_involute(p)) == p);
    }
    CHECK(bl_involute(BiLaurent(1) + qpow({0, 1})) == BiLaurent(1) + qpow({0, -1}));
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(42);
    for (int i = 0; i < 60; ++i) {
        BiLaurent a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(bl_involute(a * b) == bl_involute(a) * bl_involute(b));
        CHECK((a + b).evalAtOne() == a.evalAtOne() + b.evalAtOne());
        CHECK((a * b).evalAtOne() == a.evalAtOne() * b.evalAtOne());
    }
}

TEST_CASE("rendering contract") {
    CHECK(BiLaurent{}.str() == "0");
    CHECK(BiLaurent(1).str() == "1");
    CHECK(qpow({-1, 0}).str() == "q^-1");
    CHECK((qpow({-1, 0}) + qpow({-1, 1})).str() == "q^-1 + q^(X-1)");
    CHECK((qpow({2, 0}) - qpow({0, 2})).str() == "q^2 - q^2X");
    BiLaurent p = BiLaurent::monomial({0, 1}, 2) + qpow({3, 2});
    CHECK(p.str() == "2*q^X + q^(2X+3)");
    // sorted by (x, z) ascending
    BiLaurent q = qpow({5, 0}) + qpow({-2, 0}) + qpow({0, -1});
    CHECK(q.str() == "q^-X + q^-2 + q^5");
}

TEST_CASE("exponent overflow is an error") {
    BiDegree big{(1LL << 56), 0};
    CHECK_THROWS(big + big);
}
