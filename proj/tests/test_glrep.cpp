#include "doctest.h"
#include "oracles.hpp"

#include "krg/glrep.hpp"
#include "krg/promotion.hpp"

using namespace krg;

namespace {

long choose(int n, int r) {
    long c = 1;
    for (int k = 0; k < r; ++k) c = c * (n - k) / (k + 1);
    return c;
}

std::map<Content, int> ssyt_contents(int n, int l, int r) {
    std::map<Content, int> out;
    for (const auto& t : oracle::all_ssyt(n, std::vector<int>(r, l))) ++out[t.content()];
    return out;
}

}  // namespace

TEST_CASE("irrep dimensions") {
    CHECK(build_irrep(4, 2, 2).dim == 20);
    CHECK(build_irrep(3, 2, 1).dim == 6);
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) CHECK(build_irrep(n, 1, r).dim == choose(n, r));
    CHECK(build_wedge(4, 2).dim == 6);
    CHECK_THROWS(build_irrep(3, 1, 4));
    CHECK_THROWS(build_irrep(3, 0, 1));
}

TEST_CASE("gl_n relations, weight diagonal and Casimir") {
    for (int n = 2; n <= 4; ++n)
        for (int l = 1; l <= 3; ++l)
            for (int r = 1; r <= n; ++r) {
                MatrixRep rep = build_irrep(n, l, r);
                std::string why;
                CHECK_MESSAGE(check_gl_relations(rep, &why), why);
                CHECK(casimir(rep).dense().is_scalar());
                CHECK(static_cast<long long>(rep.dim) == ssyt_count(n, rectangle(l, r)));
            }
}

TEST_CASE("weight multiplicities") {
    auto m = weight_multiplicities(build_irrep(3, 1, 1));
    CHECK(m.size() == 3);
    CHECK(m[Content{1, 0, 0}] == 1);
    CHECK(m[Content{0, 1, 0}] == 1);
    CHECK(m[Content{0, 0, 1}] == 1);
    CHECK(weight_multiplicities(build_irrep(4, 2, 2))[Content{1, 1, 1, 1}] == 2);
    for (int n = 2; n <= 4; ++n)
        for (int l = 1; l <= 3; ++l)
            for (int r = 1; r <= n; ++r) CHECK(weight_multiplicities(build_irrep(n, l, r)) == ssyt_contents(n, l, r));
}

TEST_CASE("tensor products") {
    MatrixRep v = build_irrep(2, 1, 1);
    TensorRep t = build_tensor({{v, Scalar(0), Scalar(0)}, {v, Scalar(1), Scalar(0)}});
    CHECK(t.dim == 4);
    auto w = weight_multiplicities(t.weights);
    CHECK(w == std::map<Content, int>{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    // E_ab^{(i)} is the Kronecker embedding of the factor matrix
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(t.E(0, a, b) == kron(v.E(a, b).dense(), Mat::identity(2)));
            CHECK(t.E(1, a, b) == kron(Mat::identity(2), v.E(a, b).dense()));
            CHECK(t.E(0, a, b) == oracle::e2(2, 0, a, b));
        }
    TensorRep big = build_tensor({{build_irrep(4, 2, 2), Scalar(0), Scalar(0)}, {build_irrep(4, 1, 1), Scalar(0, 1), Scalar(0)}});
    CHECK(big.dim == 80);
    CHECK_THROWS(build_tensor({{v, Scalar(0), Scalar(0)}, {v, Scalar(0), Scalar(0)}}));
}

TEST_CASE("adjoint in the stored basis") {
    MatrixRep rep = build_irrep(3, 2, 1);
    TensorRep t = build_tensor({{rep, Scalar(0), Scalar(0)}});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(t.adjoint(t.E(0, a, b)) == t.E(0, b, a));
}

TEST_CASE("normal shift") {
    // half of l - r - n
    CHECK(normal_shift(2, 1, 1) == frac(-1, 1));
    CHECK(normal_shift(3, 1, 2) == frac(-2, 1));
    CHECK(normal_shift(3, 2, 1) == frac(-1, 1));
    CHECK(normal_shift(4, 1, 1) == frac(-2, 1));
    CHECK(normal_shift(3, 1, 1) == frac(-3, 2));
}
