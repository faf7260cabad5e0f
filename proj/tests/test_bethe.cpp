#include "doctest.h"
#include "oracles.hpp"

#include "krg/bethe.hpp"

using namespace krg;

namespace {

TensorRep tensor_of(const std::vector<MatrixRep>& reps, const std::vector<Scalar>& z, const std::vector<Scalar>& d) {
    std::vector<TensorFactor> fs;
    for (size_t i = 0; i < reps.size(); ++i) fs.push_back({reps[i], z[i], d[i]});
    return build_tensor(fs);
}

// imaginary points and the normality shifts
TensorRep normal_tensor(int n, const std::vector<std::pair<int, int>>& lr) {
    std::vector<MatrixRep> reps;
    std::vector<Scalar> z, d;
    int k = static_cast<int>(lr.size());
    for (int j = 0; j < k; ++j) {
        reps.push_back(build_irrep(n, lr[j].first, lr[j].second));
        z.push_back(Scalar(Q(0), Q(4 * (k - j))));
        d.push_back(Scalar(normal_shift(n, lr[j].first, lr[j].second)));
    }
    return tensor_of(reps, z, d);
}

TorusElement torus(std::vector<Q> t) {
    std::vector<Scalar> c;
    for (auto& x : t) c.push_back(circle_point(x));
    return TorusElement::make(c);
}

Mat diag(const TorusElement& C) { return Mat::diagonal(C.c); }

bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b) {
    std::vector<Mat> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    int r = span_rank(ab);
    return r == span_rank(a) && r == span_rank(b);
}

}  // namespace

TEST_CASE("antisymmetrizer") {
    CHECK(antisymmetrizer(3, 1) == Mat::identity(3));
    CHECK(rank(antisymmetrizer(2, 2)) == 1);
    for (int n = 1; n <= 4; ++n)
        for (int a = 1; a <= n; ++a) {
            Mat A = antisymmetrizer(n, a);
            CHECK(A * A == A);
            long c = 1;
            for (int k = 0; k < a; ++k) c = c * (n - k) / (k + 1);
            CHECK(rank(A) == c);
        }
}

TEST_CASE("torus elements") {
    CHECK_THROWS(TorusElement::make({Scalar(2), Scalar(1)}));
    auto C = torus_from_point({frac(1, 2), Q(0), frac(3, 2)});
    CHECK(C.c[0] == Scalar(-1));
    CHECK(C.c[1] == Scalar(1));
    CHECK(C.c[2] == Scalar(-1));
    CHECK(C.coincident_pairs() == std::vector<std::pair<int, int>>{{0, 2}});
    auto R = torus_from_point({frac(1, 3), frac(1, 5), Q(0)});
    CHECK(R.regular());
    for (const auto& x : R.c) CHECK(x.norm2() == 1);
    CHECK(R.normalized().c[0] == Scalar(1));
}

TEST_CASE("tau hand example: a = 1, k = 1, n = 2") {
    Scalar z(Q(0), Q(1));
    TensorRep rep = tensor_of({build_irrep(2, 1, 1)}, {z}, {Scalar(0)});
    auto C = torus({frac(1, 2), frac(-1, 3)});
    for (int t = 1; t <= 4; ++t) {
        Scalar u(frac(t, 3));
        Mat want = (C.c[0] + C.c[1]) * Mat::identity(2) + (u - z).inv() * Mat::diagonal(C.c);
        CHECK(tau_eval(1, C, rep, u) == want);
    }
    // u -> infinity
    Mat far = tau_eval(1, C, rep, Scalar(1000000));
    CHECK(max_abs(far - (C.c[0] + C.c[1]) * Mat::identity(2)) < 1e-5);
}

TEST_CASE("tau agrees with the dense partial trace") {
    struct Case {
        int n;
        std::vector<std::pair<int, int>> lr;
    };
    for (const Case& cs : {Case{2, {{1, 1}, {1, 1}}}, Case{2, {{2, 1}, {1, 1}}}, Case{3, {{1, 1}}}, Case{3, {{1, 1}, {1, 2}}}}) {
        TensorRep rep = normal_tensor(cs.n, cs.lr);
        oracle::DenseTau dense(rep);
        auto C = torus(cs.n == 2 ? std::vector<Q>{frac(1, 2), frac(-2, 3)} : std::vector<Q>{frac(1, 2), frac(-2, 3), frac(3, 7)});
        int amax = rep.dim * cs.n > 30 ? 2 : cs.n;
        for (int a = 1; a <= amax; ++a) CHECK(tau_eval(a, C, rep, Scalar(frac(2, 5))) == dense.tau(a, diag(C), Scalar(frac(2, 5))));
    }
}

TEST_CASE("tau_n is central on C^n") {
    for (int n = 2; n <= 3; ++n) {
        TensorRep rep = tensor_of({build_irrep(n, 1, 1)}, {Scalar(Q(0), Q(2))}, {Scalar(0)});
        std::vector<Scalar> one(n, Scalar(1));
        for (int t = 1; t <= 3; ++t) CHECK(tau_eval(n, TorusElement::make(one), rep, Scalar(frac(t, 7))).is_scalar());
    }
}

TEST_CASE("commutativity certificate") {
    TensorRep rep = normal_tensor(2, {{1, 1}, {1, 1}});
    auto fam = bethe_family(torus({frac(1, 2), frac(-1, 3)}), rep, 9);
    auto cert = bethe_commuting_certificate(fam, rep);
    CHECK(cert.pass);
    CHECK(cert.grid == 9);
    CHECK(cert.grid > cert.degree_bound);
    CHECK(cert.all_normal);
    CHECK(bethe_degree_bound(2, 2) == 4);

    auto C0 = torus_from_point({Q(0), Q(0)});
    auto wall = wall_bethe_family(C0, {0, 1}, rep);
    auto wc = bethe_commuting_certificate(wall, rep);
    CHECK(wc.pass);
    CHECK(wc.all_normal);
    REQUIRE(wall.extra.size() == 1);
    CHECK(wall.extra[0] == rep.total(0, 0) - rep.total(1, 1));
    CHECK_THROWS(wall_bethe_family(torus({frac(1, 2), frac(-1, 3)}), {0, 1}, rep));

    TensorRep r3 = normal_tensor(3, {{1, 1}, {1, 2}});
    auto c3 = bethe_commuting_certificate(bethe_family(torus({frac(1, 2), frac(-2, 3), frac(3, 7)}), r3), r3);
    CHECK(c3.pass);
    CHECK(c3.all_normal);
}

TEST_CASE("negative controls") {
    TensorRep rep = normal_tensor(2, {{1, 1}, {1, 1}});
    oracle::DenseTau dense(rep);
    Mat C = diag(torus({frac(1, 2), frac(-1, 3)}));
    Mat D(2, 2);
    D(0, 0) = Scalar(1);
    D(0, 1) = Scalar(2);
    D(1, 0) = Scalar(frac(1, 3));
    D(1, 1) = Scalar(-1);
    Scalar u1(frac(1, 5)), u2(frac(7, 3));
    // the same non-diagonal matrix in every slot still commutes
    CHECK(commutator(dense.tau(2, D, u1), dense.tau(1, D, u2)).is_zero());
    CHECK(commutator(dense.tau(2, D, u1), dense.tau(2, D, u2)).is_zero());
    // a different matrix in the second slot does not
    Mat bad1 = dense.tau(2, std::vector<Mat>{C, D}, u1), bad2 = dense.tau(2, std::vector<Mat>{C, D}, u2);
    bool broken = !commutator(bad1, bad2).is_zero() || !commutator(bad1, dense.tau(1, C, u2)).is_zero();
    CHECK(broken);
    // non-imaginary points break normality
    TensorRep off = tensor_of({build_irrep(2, 1, 1), build_irrep(2, 1, 1)}, {Scalar(frac(1, 2), Q(4)), Scalar(Q(0), Q(1))},
                              {Scalar(0), Scalar(0)});
    auto cert = bethe_commuting_certificate(bethe_family(torus({frac(1, 2), frac(-1, 3)}), off), off);
    CHECK(cert.pass);
    CHECK_FALSE(cert.all_normal);
    CHECK_THROWS(tau_eval(1, torus({frac(1, 2), frac(-1, 3)}), rep, rep.point(0)));
}

TEST_CASE("rescaling C keeps the span") {
    TensorRep rep = normal_tensor(2, {{1, 1}, {1, 1}});
    auto C = torus({frac(1, 2), frac(-1, 3)});
    Scalar a = circle_point(frac(2, 5));
    auto aC = TorusElement::make({a * C.c[0], a * C.c[1]});
    CHECK(same_span(bethe_family(C, rep).mats(), bethe_family(aC, rep).mats()));
}

TEST_CASE("shift cdet for n = 1 by hand") {
    Scalar eps(frac(1, 8));
    TensorRep rep = tensor_of({build_irrep(1, 1, 1)}, {Scalar(frac(1, 2))}, {Scalar(frac(1, 3))});
    auto sc = shift_cdet(eps, Scalar(1), {frac(2, 5)}, rep, 8);
    // op = T(u - eps) S - exp(-eps chi)
    Scalar p = Scalar(frac(1, 2)) + eps * Scalar(frac(1, 3));
    for (int t = 1; t <= 3; ++t) {
        Scalar u(frac(t, 11));
        CHECK(sc.op.coeff(1).eval(u)(0, 0) == Scalar(1) + eps / (u - eps - p));
    }
    Scalar ex(0), term(1);
    for (int m = 0; m <= 8; ++m) {
        ex += term;
        term *= -eps * Scalar(frac(2, 5)) / Scalar(m + 1);
    }
    CHECK(sc.op.coeff(0).eval(Scalar(3))(0, 0) == -ex);
    REQUIRE(sc.residues.size() == 3);
    CHECK(sc.residues[0].m(0, 0) == Scalar(1));
    CHECK(sc.residues[1].m(0, 0) == -eps);
    CHECK(sc.residues[2].m(0, 0) == Scalar(frac(-1, 48)));
}

TEST_CASE("degeneration to Gaudin") {
    TensorRep rep = tensor_of({build_irrep(2, 1, 1), build_irrep(2, 1, 1)}, {Scalar(0), Scalar(1)},
                              {Scalar(frac(1, 2)), Scalar(frac(-1, 3))});
    std::vector<Scalar> eps;
    for (int m = 3; m <= 6; ++m) eps.push_back(Scalar(frac(1, 1 << m)));
    auto d = degeneration(eps, Scalar(1), {frac(1, 3), frac(-1, 5)}, rep);
    CHECK(d.pass);
    for (size_t t = 1; t < d.rows.size(); ++t) {
        CHECK(d.rows[t].error < d.rows[t - 1].error);
        CHECK(std::abs(d.rows[t].ratio - 0.5) <= 0.15);
    }
}
