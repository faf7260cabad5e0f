#include "doctest.h"
#include "oracles.hpp"

#include "krg/gaudin.hpp"

#include <random>

using namespace krg;

namespace {

GaudinConfig config(const std::vector<MatrixRep>& reps, const std::vector<Scalar>& z, const std::vector<Q>& chi) {
    std::vector<TensorFactor> fs;
    for (size_t i = 0; i < reps.size(); ++i) fs.push_back({reps[i], z[i], Scalar(0)});
    return GaudinConfig{build_tensor(fs), chi};
}

GaudinConfig vector_config(int n, const std::vector<Scalar>& z, const std::vector<Q>& chi) {
    return config(std::vector<MatrixRep>(z.size(), build_irrep(n, 1, 1)), z, chi);
}

const Generator* find(const CommutingFamily& f, int k, int pole, int l) {
    for (const auto& g : f.gens)
        if (g.k == k && g.pole == pole && g.l == l) return &g;
    return nullptr;
}

bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b) {
    std::vector<Mat> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    int r = span_rank(ab);
    return r == span_rank(a) && r == span_rank(b);
}

}  // namespace

TEST_CASE("n = 1 determinant") {
    GaudinConfig cfg = config({build_irrep(1, 1, 1), build_irrep(1, 1, 1)}, {Scalar(0), Scalar(2)}, {frac(1, 3)});
    DiffOpPoly op = gaudin_cdet(cfg);
    auto L = lax_matrix(cfg);
    CHECK(op.coeff(0) == L[0] - MatRatFun::identity(cfg.rep.dim, Scalar(frac(1, 3))));
    CHECK(op.coeff(1) == MatRatFun::identity(cfg.rep.dim, Scalar(-1)));
}

TEST_CASE("Lax matrix") {
    GaudinConfig cfg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    auto L = lax_matrix(cfg);
    REQUIRE(L.size() == 4);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) CHECK(residue(L[a * 2 + b], cfg.z(i), 0) == cfg.rep.E(i, a, b));
    GaudinConfig one = vector_config(2, {Scalar(frac(1, 2))}, {Q(0), Q(0)});
    auto L1 = lax_matrix(one);
    CHECK(L1[0] == MatRatFun::simple(one.rep.E(0, 0, 0), Scalar(frac(1, 2))));
    // far away, u L(u) is close to Delta(E)
    Scalar u(1000000);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(max_abs(L[a * 2 + b].eval(u) * u - cfg.rep.total(a, b)) < 1e-5);
}

TEST_CASE("n = 2 leading coefficient") {
    GaudinConfig cfg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    DiffOpPoly op = gaudin_cdet(cfg);
    CHECK(op.degree() == 2);
    CHECK(op.coeff(2) == MatRatFun::identity(4));
}

TEST_CASE("quadratic Hamiltonians match the hand expansion") {
    for (int k : {2, 3}) {
        std::vector<Scalar> z = {Scalar(0), Scalar(1), Scalar(frac(-5, 2))};
        z.resize(k);
        std::vector<Q> chi = {frac(1, 3), frac(-1, 5)};
        GaudinConfig cfg = vector_config(2, z, chi);
        auto fam = residue_generators(cfg);
        for (int i = 0; i < k; ++i) {
            const Generator* g = find(fam, 0, i, 0);
            REQUIRE(g);
            Mat hand = oracle::gaudin_h0_n2(z, chi, i);
            CHECK(g->m == hand);
            // documented normalization: r = -(sum_j Omega_ij/(z_i-z_j) - chi^(i)) + central
            Mat chi_i = Scalar(chi[0]) * oracle::e2(k, i, 0, 0) + Scalar(chi[1]) * oracle::e2(k, i, 1, 1);
            CHECK((g->m + oracle::omega_sum_n2(z, i) - chi_i).is_scalar());
        }
        // the l = 1 residue of b_0 is the quantum determinant of C^2, which vanishes
        CHECK(find(fam, 0, 0, 1) == nullptr);
    }
}

TEST_CASE("residue generators commute, negative control breaks it") {
    GaudinConfig cfg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    auto fam = residue_generators(cfg);
    CHECK(fam.gens.size() >= 2);
    CHECK(fam.convention == "cdet(L(u) - d_u - chi)");
    CHECK(check_commuting(fam.mats()).empty());
    CHECK(check_commuting({fam.gens[0].m}).empty());

    std::mt19937 g(13);
    std::uniform_int_distribution<int> U(-3, 3);
    for (int t = 0; t < 5; ++t) {
        auto ms = fam.mats();
        Mat p(4, 4);
        for (auto& x : p.v) x = Scalar(U(g));
        if (p.is_scalar()) continue;
        ms[t % ms.size()] += p;
        CHECK_FALSE(check_commuting(ms).empty());
    }
}

TEST_CASE("higher rank and higher spin families commute") {
    GaudinConfig a = config({build_irrep(2, 2, 1), build_irrep(2, 1, 1)}, {Scalar(0), Scalar(frac(3, 2))}, {frac(2, 7), frac(-1, 3)});
    CHECK(check_commuting(residue_generators(a).mats()).empty());
    GaudinConfig b = config({build_irrep(3, 1, 1), build_irrep(3, 1, 2)}, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 5), frac(1, 7)});
    auto fam = residue_generators(b);
    CHECK(check_commuting(fam.mats()).empty());
    CHECK(fam.rank > 1);
}

TEST_CASE("Manin property and the antisymmetrized trace") {
    GaudinConfig cfg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    OpMatrix M = gaudin_operator_matrix(cfg);
    std::string why;
    CHECK_MESSAGE(is_manin(M, &why), why);
    CHECK(antisym_trace(M) == cdet(M));
    // a matrix with a non-commuting column pair is not Manin
    OpMatrix N = M;
    N[0][0] = N[0][0] + DiffOpPoly::mult(MatRatFun::constant(cfg.rep.E(0, 0, 1)));
    CHECK_FALSE(is_manin(N));
}

TEST_CASE("invariance") {
    auto reg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    auto r = invariance_check(residue_generators(reg), reg.rep, reg.chi);
    CHECK(r.pass);
    CHECK(r.checked.size() == 2);

    auto sub = vector_config(3, {Scalar(0), Scalar(1)}, {frac(1, 4), frac(1, 4), frac(-1, 2)});
    auto s = invariance_check(residue_generators(sub), sub.rep, sub.chi);
    CHECK(s.pass);
    CHECK(s.checked.size() == 5);

    auto zero = vector_config(2, {Scalar(0), Scalar(1)}, {Q(0), Q(0)});
    auto z = invariance_check(residue_generators(zero), zero.rep, zero.chi);
    CHECK(z.pass);
    CHECK(z.checked.size() == 4);
    CHECK(coincident_pairs({Q(0), frac(1, 2), Q(0)}) == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("translation and scaling") {
    std::vector<Scalar> z = {Scalar(0), Scalar(1), Scalar(frac(5, 2))};
    std::vector<Q> chi = {frac(1, 3), frac(-1, 5)};
    auto base = residue_generators(vector_config(2, z, chi));
    std::vector<Scalar> zt;
    for (auto& x : z) zt.push_back(x + Scalar(frac(7, 3)));
    auto moved = residue_generators(vector_config(2, zt, chi));
    REQUIRE(base.gens.size() == moved.gens.size());
    for (size_t t = 0; t < base.gens.size(); ++t) CHECK(base.gens[t].m == moved.gens[t].m);

    Q s = frac(3, 2);
    std::vector<Q> schi;
    for (auto& c : chi) schi.push_back(s * c);
    std::vector<Scalar> sz;
    for (auto& x : z) sz.push_back(Scalar(s) * x + Scalar(frac(-1, 4)));
    auto lhs = residue_generators(vector_config(2, z, schi));
    auto rhs = residue_generators(vector_config(2, sz, chi));
    CHECK(same_span(lhs.mats(), rhs.mats()));
    // and a different chi gives a different span
    auto other = residue_generators(vector_config(2, z, {frac(1, 2), frac(1, 7)}));
    CHECK_FALSE(same_span(lhs.mats(), other.mats()));
}

TEST_CASE("wall family") {
    auto cfg = vector_config(2, {Scalar(0), Scalar(1)}, {Q(0), Q(0)});
    auto fam = wall_family(cfg);
    CHECK(fam.gens.back().tag == "Delta(h_12)");
    CHECK(fam.gens.back().m == cfg.rep.total(0, 0) - cfg.rep.total(1, 1));
    CHECK(check_commuting(fam.mats()).empty());
    auto reg = vector_config(2, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 3)});
    CHECK_THROWS(wall_family(reg));
}

TEST_CASE("cap on n") {
    auto cfg = vector_config(3, {Scalar(0), Scalar(1)}, {frac(1, 3), frac(-1, 5), Q(0)});
    cfg.cap_n = 2;
    CHECK_THROWS(gaudin_cdet(cfg));
}
