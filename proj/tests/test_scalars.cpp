#include "doctest.h"
#include "oracles.hpp"

#include "krg/ratfun.hpp"

#include <random>

using namespace krg;

namespace {

Mat rmat(std::mt19937& g, int d, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> U(lo, hi), D(1, 4);
    Mat m(d, d);
    for (auto& x : m.v) x = Scalar(frac(U(g), D(g)));
    return m;
}

RatFun scalar_fn(const SPoly& num, std::vector<Pole> poles) { return ratfun_from(num, poles); }

Scalar at(const RatFun& f, const Scalar& u) { return f.eval(u)(0, 0); }

// random matrix rational function with poles among {0, 1, -1/2}
MatRatFun rfun(std::mt19937& g, int d) {
    static const Scalar ps[] = {Scalar(0), Scalar(1), Scalar(frac(-1, 2))};
    MatRatFun f = MatRatFun::constant(rmat(g, d)) + MatRatFun::monomial(rmat(g, d), 1);
    for (int t = 0; t < 2; ++t) f = f + MatRatFun::simple(rmat(g, d), ps[g() % 3], 1 + static_cast<int>(g() % 2));
    return f;
}

DiffOpPoly rdiff(std::mt19937& g, int d) {
    DiffOpPoly op(d);
    op.b = {rfun(g, d), rfun(g, d)};
    return op;
}

ShiftOpPoly rshift(std::mt19937& g, int d, const Scalar& eps) {
    ShiftOpPoly op(d, eps);
    op.r = {rfun(g, d), rfun(g, d)};
    return op;
}

// sum_k b_k(u) f^{(k)}(u)
MatRatFun apply(const DiffOpPoly& op, const MatRatFun& f) {
    MatRatFun out(op.dim), df = f;
    for (size_t k = 0; k < op.b.size(); ++k) {
        out = out + op.b[k] * df;
        df = df.derivative();
    }
    return out;
}

// sum_a R_a(u) f(u - a eps)
MatRatFun apply(const ShiftOpPoly& op, const MatRatFun& f) {
    MatRatFun out(op.dim);
    for (size_t a = 0; a < op.r.size(); ++a) out = out + op.r[a] * f.shifted(Scalar(static_cast<long>(a)) * op.eps);
    return out;
}

}  // namespace

TEST_CASE("scalars are canonical and form a field") {
    CHECK(Scalar(frac(10, 5)) == Scalar(2));
    CHECK(frac(6, -4) == frac(-3, 2));
    CHECK(Scalar::parse("1/2+3/4*i") == Scalar(frac(1, 2), frac(3, 4)));
    CHECK(Scalar::parse("-i") == Scalar(0, -1));
    CHECK(Scalar::parse("2/3*i").str() == "2/3*i");
    std::mt19937 g(7);
    std::uniform_int_distribution<int> U(-9, 9);
    for (int t = 0; t < 200; ++t) {
        Scalar a(frac(U(g), 7), frac(U(g), 5)), b(frac(U(g), 3), frac(U(g), 11));
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a / b) * (b / a) == Scalar(1));
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK_THROWS(Scalar(0).inv());
    CHECK_THROWS(Scalar::parse("1/0"));
}

TEST_CASE("circle points have unit modulus") {
    for (int p = -5; p <= 5; ++p) CHECK(circle_point(frac(p, 3)).norm2() == 1);
    CHECK(rationalize(0.333333333, 100) == frac(1, 3));
}

TEST_CASE("derivative examples") {
    RatFun inv = scalar_fn({Scalar(1)}, {{Scalar(0), 1}});
    RatFun d = inv.derivative();
    for (int k = 1; k <= 5; ++k) {
        Scalar u(frac(k, 3));
        CHECK(at(d, u) == -(u * u).inv());
    }
    CHECK(RatFun::constant(Mat::identity(1, Scalar(5))).derivative().is_zero());

    // u/((u-1)(u-2)); hand derivative (2 - u^2)/((u-1)^2 (u-2)^2)
    RatFun f = scalar_fn({Scalar(0), Scalar(1)}, {{Scalar(1), 1}, {Scalar(2), 1}});
    RatFun df = f.derivative();
    std::mt19937 g(3);
    std::uniform_int_distribution<int> U(-40, 40);
    int checked = 0;
    while (checked < 10) {
        Scalar u(frac(U(g), 7));
        if (u == Scalar(1) || u == Scalar(2)) continue;
        Scalar a = u - Scalar(1), b = u - Scalar(2);
        CHECK(at(df, u) == (Scalar(2) - u * u) / (a * a * b * b));
        double h = 1e-6, x = u.re.get_d();
        auto fd = [](double y) { return y / ((y - 1) * (y - 2)); };
        CHECK(std::abs((fd(x + h) - fd(x - h)) / (2 * h) - at(df, u).re.get_d()) < 1e-4);
        ++checked;
    }
    CHECK(df.pole_mult(Scalar(1)) == 2);
}

TEST_CASE("residue examples") {
    RatFun inv = scalar_fn({Scalar(1)}, {{Scalar(0), 1}});
    CHECK(residue(inv, Scalar(0), 0)(0, 0) == Scalar(1));

    std::mt19937 g(1);
    Mat A = rmat(g, 3);
    MatRatFun sq = MatRatFun::simple(A, Scalar(1), 2);
    CHECK(residue(sq, Scalar(1), 1) == A);
    CHECK(residue(sq, Scalar(1), 0).is_zero());

    RatFun f = scalar_fn({Scalar(0), Scalar(1)}, {{Scalar(1), 1}, {Scalar(2), 1}});
    CHECK(residue(f, Scalar(1), 0)(0, 0) == Scalar(-1));
    CHECK(residue(f, Scalar(2), 0)(0, 0) == Scalar(2));
    CHECK(residue(f, Scalar(7), 0)(0, 0) == Scalar(0));
}

TEST_CASE("residue equals the Laurent coefficient of (u-p)^l f") {
    std::mt19937 g(11);
    for (int t = 0; t < 20; ++t) {
        MatRatFun f = rfun(g, 2);
        for (const Pole& p : f.poles)
            for (int l = 0; l <= 3; ++l) {
                MatRatFun w = f;
                for (int s = 0; s < l; ++s) w = w * (MatRatFun::monomial(Mat::identity(2), 1) - MatRatFun::identity(2, p.at));
                CHECK(residue(f, p.at, l) == laurent_coeff(w, p.at, -1));
                CHECK(residue(f, p.at, l) == laurent_coeff(f, p.at, -1 - l));
            }
    }
}

TEST_CASE("matrix rational functions: arithmetic against pointwise evaluation") {
    std::mt19937 g(5);
    for (int t = 0; t < 20; ++t) {
        MatRatFun a = rfun(g, 2), b = rfun(g, 2);
        Scalar u(frac(static_cast<int>(g() % 50) + 3, 7));
        CHECK((a * b).eval(u) == a.eval(u) * b.eval(u));
        CHECK((a + b).eval(u) == a.eval(u) + b.eval(u));
        CHECK(a.shifted(Scalar(frac(1, 3))).eval(u) == a.eval(u - Scalar(frac(1, 3))));
    }
}

TEST_CASE("diffop normal ordering") {
    Scalar z(frac(2, 3));
    DiffOpPoly d = DiffOpPoly::d(1);
    MatRatFun r = MatRatFun::simple(Mat::identity(1), z);
    DiffOpPoly lhs = d * DiffOpPoly::mult(r);
    DiffOpPoly rhs = DiffOpPoly::mult(r) * d - DiffOpPoly::mult(MatRatFun::simple(Mat::identity(1), z, 2));
    CHECK(lhs == rhs);
    DiffOpPoly dd = d * d;
    CHECK(dd.degree() == 2);
    CHECK(dd.coeff(2) == MatRatFun::identity(1));
    CHECK(dd.coeff(1).is_zero());
    CHECK(dd.coeff(0).is_zero());
}

TEST_CASE("diffop products agree with application to u^m") {
    std::mt19937 g(2);
    for (int t = 0; t < 6; ++t) {
        DiffOpPoly a = rdiff(g, 2), b = rdiff(g, 2);
        DiffOpPoly ab = a * b;
        for (int m = 0; m <= 6; ++m) {
            MatRatFun um = MatRatFun::monomial(Mat::identity(2), m);
            CHECK(apply(ab, um) == apply(a, apply(b, um)));
        }
    }
}

TEST_CASE("shift operators") {
    Scalar eps(frac(1, 4));
    ShiftOpPoly S = ShiftOpPoly::shift(1, eps);
    MatRatFun u = MatRatFun::monomial(Mat::identity(1), 1);
    ShiftOpPoly su = S * ShiftOpPoly::mult(u, eps);
    CHECK(su.degree() == 1);
    CHECK(su.coeff(0).is_zero());
    CHECK(su.coeff(1) == u - MatRatFun::identity(1, eps));
    ShiftOpPoly ss = S * S;
    CHECK(ss.degree() == 2);
    CHECK(ss.coeff(2) == MatRatFun::identity(1));

    std::mt19937 g(4);
    for (int t = 0; t < 6; ++t) {
        ShiftOpPoly a = rshift(g, 2, eps), b = rshift(g, 2, eps);
        ShiftOpPoly ab = a * b;
        MatRatFun f = rfun(g, 2);
        MatRatFun lhs = apply(ab, f), rhs = apply(a, apply(b, f));
        for (int k = 0; k < 5; ++k) {
            Scalar x(frac(7 * k + 3, 13));
            CHECK(lhs.eval(x) == rhs.eval(x));
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937 g(9);
    for (int t = 0; t < 4; ++t) {
        DiffOpPoly a = rdiff(g, 2), b = rdiff(g, 2), c = rdiff(g, 2);
        CHECK((a * b) * c == a * (b * c));
        Scalar eps(frac(1, 3));
        ShiftOpPoly x = rshift(g, 2, eps), y = rshift(g, 2, eps), z = rshift(g, 2, eps);
        ShiftOpPoly l = (x * y) * z, r = x * (y * z);
        REQUIRE(l.r.size() == r.r.size());
        for (size_t k = 0; k < l.r.size(); ++k) CHECK(l.r[k] == r.r[k]);
    }
}

TEST_CASE("span rank and kron") {
    Mat a = Mat::identity(2), b = oracle::unit(2, 0, 1);
    CHECK(span_rank({a, b, a + b}) == 2);
    CHECK(kron(a, b).rows == 4);
    CHECK(kron(b, b).nnz() == 1);
    CHECK(rank(Mat::identity(3)) == 3);
}
