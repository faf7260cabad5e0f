#include "doctest.h"
#include "oracles.hpp"

#include "krg/alcove.hpp"

#include <random>
#include <set>

using namespace krg;

namespace {

AffinePoint pt(std::vector<Q> v) { return AffinePoint::make(std::move(v)); }

AffinePoint random_point(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<int> D(2, 60);
    std::vector<Q> x(n);
    for (auto& c : x) {
        int q = D(g);
        std::uniform_int_distribution<int> P(-3 * q, 3 * q);
        c = frac(P(g), q);
    }
    return pt(x);
}

ExtAffineWeylElt random_word(std::mt19937_64& g, int n, int len) {
    ExtAffineWeylElt w = ExtAffineWeylElt::identity(n);
    for (int k = 0; k < len; ++k) w = w * simple_reflection(n, static_cast<int>(g() % n));
    return w;
}

}  // namespace

TEST_CASE("classify examples") {
    auto a = classify(pt({frac(1, 2), frac(1, 5), Q(0)}));
    REQUIRE(a.regular);
    CHECK(a.w == ExtAffineWeylElt::identity(3));
    auto b = classify(pt({frac(1, 5), frac(1, 2), Q(0)}));
    REQUIRE(b.regular);
    CHECK(b.w.sigma == std::vector<int>{1, 0, 2});
    CHECK(b.w.m == std::vector<long>{0, 0, 0});
    AffinePoint x = pt({frac(3, 2), frac(1, 5), Q(0)});
    auto c = classify(x);
    REQUIRE(c.regular);
    CHECK(in_alcove(c.w, x, false));
    CHECK(c.w.in_affine_weyl());
    auto d = classify(pt({Q(1), Q(0), frac(1, 3)}));
    CHECK_FALSE(d.regular);
    REQUIRE(d.walls.size() == 1);
    CHECK(d.walls[0] == Wall{0, 1, 1});
}

TEST_CASE("classify agrees with exhaustive membership") {
    std::mt19937_64 g(2024);
    for (int n : {3, 4}) {
        int regular = 0;
        while (regular < 300) {
            AffinePoint x = random_point(g, n);
            auto c = classify(x);
            if (!c.regular) {
                for (const auto& h : c.walls) CHECK(h.contains(x));
                continue;
            }
            ++regular;
            auto all = oracle::alcoves_containing(x);
            CHECK(all.size() == static_cast<size_t>(n));
            int in_w = 0;
            for (const auto& w : all)
                if (w.in_affine_weyl()) {
                    ++in_w;
                    CHECK(w == c.w);
                }
            CHECK(in_w == 1);
        }
    }
}

TEST_CASE("group law") {
    std::mt19937_64 g(5);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + t % 2;
        auto a = random_word(g, n, 6), b = random_word(g, n, 6);
        AffinePoint x = random_point(g, n);
        CHECK(act(a * b, x) == act(a, act(b, x)));
        CHECK(a * a.inverse() == ExtAffineWeylElt::identity(n));
        // (s1, l1)(s2, l2) = (s1 s2, s2^-1(l1) + l2)
        auto ab = a * b;
        for (int k = 0; k < n; ++k) CHECK(ab.sigma[k] == a.sigma[b.sigma[k]]);
    }
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < n; ++i) CHECK(simple_reflection(n, i) * simple_reflection(n, i) == ExtAffineWeylElt::identity(n));
}

TEST_CASE("walls of the base alcove") {
    auto w = walls_of(ExtAffineWeylElt::identity(3));
    REQUIRE(w.size() == 3);
    CHECK(w[0].str() == "H^0_{1,2}");
    CHECK(w[1].str() == "H^0_{2,3}");
    CHECK(w[2].str() == "H^-1_{3,1}");
}

TEST_CASE("walls_of and classify are equivariant") {
    std::mt19937_64 g(77);
    for (int t = 0; t < 200; ++t) {
        int n = 3 + t % 2;
        auto w = random_word(g, n, 1 + t % 9);
        auto base = walls_of(ExtAffineWeylElt::identity(n));
        auto ws = walls_of(w);
        for (int k = 0; k < n; ++k) CHECK(ws[k] == act(w, base[k]));
        std::set<std::string> distinct;
        for (const auto& h : ws) distinct.insert(h.canonical().str());
        CHECK(distinct.size() == static_cast<size_t>(n));
        AffinePoint x = random_point(g, n);
        auto c = classify(x);
        if (!c.regular) continue;
        auto d = classify(act(w, x));
        REQUIRE(d.regular);
        CHECK(d.w == w * c.w);
    }
    // translation by a root: walls shift by integers
    ExtAffineWeylElt tr = ExtAffineWeylElt::make({0, 1, 2}, {1, -1, 0});
    auto ws = walls_of(tr);
    auto base = walls_of(ExtAffineWeylElt::identity(3));
    for (int k = 0; k < 3; ++k) {
        CHECK(ws[k].i == base[k].i);
        CHECK(ws[k].j == base[k].j);
    }
}

TEST_CASE("subregular samples") {
    auto one = ExtAffineWeylElt::identity(3);
    AffinePoint a = subregular_sample(one, 1);
    CHECK(a.x[0] == a.x[1]);
    AffinePoint b = subregular_sample(one, 3);
    CHECK(b.x[0] - b.x[2] == 1);
    std::mt19937_64 g(3);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + t % 3;
        auto w = random_word(g, n, t % 7);
        auto ws = walls_of(w);
        for (int j = 1; j <= n; ++j) {
            AffinePoint p = subregular_sample(w, j);
            auto c = classify(p);
            CHECK_FALSE(c.regular);
            REQUIRE(c.walls.size() == 1);
            CHECK(c.walls[0].canonical() == ws[j - 1].canonical());
            CHECK(in_alcove(w, p, true));
        }
        CHECK(in_alcove(w, regular_sample(w), false));
    }
}
