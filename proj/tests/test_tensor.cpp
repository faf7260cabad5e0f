#include "doctest.h"
#include "oracles.hpp"

#include "krg/promotion.hpp"
#include "krg/tensor_crystal.hpp"

#include <algorithm>

using namespace krg;

namespace {

int elem(const Crystal& c, std::vector<int> parts) {
    for (int b = 0; b < c.size(); ++b)
        if (c.parts[b] == parts) return b;
    return -1;
}

std::vector<int> sizes(const Crystal& c) {
    std::vector<int> s;
    for (const auto& comp : decompose_normal(c)) s.push_back(comp.size);
    std::sort(s.rbegin(), s.rend());
    return s;
}

std::vector<int> normalize(std::vector<int> lam, int n) {
    lam.resize(n, 0);
    int last = lam.back();
    for (int& x : lam) x -= last;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

StringStats rotate(const StringStats& s, int n) {
    StringStats out;
    for (const auto& [key, cnt] : s) {
        std::vector<int> rot(n);
        for (int a = 0; a < n; ++a) rot[(a + 1) % n] = key.second[a];
        out[{key.first, canonical_weight(rot)}] += cnt;
    }
    return out;
}

}  // namespace

TEST_CASE("tensor rule examples, n = 2") {
    Crystal b = build_kr(2, 1, 1);
    Crystal t = tensor(b, b);
    int one = b.find(Tableau::parse(2, "[[1]]")), two = b.find(Tableau::parse(2, "[[2]]"));
    int x21 = elem(t, {two, one}), x11 = elem(t, {one, one}), x12 = elem(t, {one, two});
    CHECK(t.e[1][x21] < 0);
    CHECK(t.f[1][x21] < 0);
    CHECK(t.f[1][x11] == x12);
    CHECK(t.size() == 4);
    CHECK(sizes(t) == std::vector<int>{3, 1});
    CHECK(t.affine);
    for (int j = 0; j < 2; ++j) {
        std::string why;
        CHECK_MESSAGE(check_axioms(view(t, j), classical_indices(2), &why), why);
    }
}

TEST_CASE("sizes multiply and characters convolve") {
    std::vector<Crystal> fs = {build_kr(3, 1, 1), build_kr(3, 1, 2), build_kr(3, 2, 1)};
    for (const auto& a : fs)
        for (const auto& b : fs) {
            Crystal t = tensor(a, b);
            CHECK(t.size() == a.size() * b.size());
            std::map<Content, int> conv;
            for (const auto& u : a.wt)
                for (const auto& v : b.wt) {
                    Content w(3);
                    for (int k = 0; k < 3; ++k) w[k] = u[k] + v[k];
                    ++conv[w];
                }
            CHECK(weight_multiplicities(t.wt) == conv);
        }
}

TEST_CASE("tensor_many") {
    Crystal b = build_kr(2, 1, 1);
    Crystal t = tensor_many({b, b, b});
    CHECK(t.size() == 8);
    CHECK(sizes(t) == std::vector<int>{4, 2, 2});
    Crystal one = tensor_many({b});
    CHECK(one.size() == b.size());
    CHECK(one.f == b.f);
}

TEST_CASE("string statistics examples") {
    Crystal b = build_kr(2, 1, 1);
    for (int j = 0; j < 2; ++j) {
        auto s = string_statistics(b, j);
        REQUIRE(s.size() == 1);
        CHECK(s.begin()->first.first == 2);
        CHECK(s.begin()->second == 1);
    }
    Crystal c = build_kr(4, 2, 2);
    for (int j = 0; j < 4; ++j) CHECK(string_statistics(c, (j + 1) % 4) == rotate(string_statistics(c, j), 4));
}

TEST_CASE("reassociation leaves string statistics unchanged") {
    std::vector<Crystal> fs = {build_kr(3, 1, 1), build_kr(3, 1, 2), build_kr(3, 2, 1)};
    Crystal l = tensor(tensor(fs[0], fs[1]), fs[2]);
    Crystal r = tensor(fs[0], tensor(fs[1], fs[2]));
    for (int j = 0; j < 3; ++j) CHECK(string_statistics(l, j) == string_statistics(r, j));
    Crystal b = build_kr(2, 1, 1), v = build_kr(2, 2, 1);
    for (int j = 0; j < 2; ++j)
        CHECK(string_statistics(tensor(tensor(b, v), b), j) == string_statistics(tensor(b, tensor(v, b)), j));
}

TEST_CASE("fundamental products follow the Pieri rule") {
    for (int n = 3; n <= 5; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                Crystal t = tensor(build_kr(n, 1, a), build_kr(n, 1, b));
                std::vector<std::vector<int>> got, want;
                for (const auto& comp : decompose_normal(t)) {
                    CHECK(comp.normal);
                    got.push_back(comp.lambda);
                }
                for (int k = std::max(0, a + b - n); k <= std::min(a, b); ++k) {
                    std::vector<int> lam(k, 2);
                    lam.resize(a + b - k, 1);
                    want.push_back(normalize(lam, n));
                }
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                CHECK(got == want);
            }
}
