// Matrix-valued polynomials and rational functions in one variable u with
// explicitly factored denominators, plus the differential and shift operator
// algebras built on them.
#pragma once

#include "krg/matrix.hpp"

#include <vector>

namespace krg {

// Scalar polynomial, coefficient k multiplies u^k.
using SPoly = std::vector<Scalar>;
SPoly spoly_mul(const SPoly& a, const SPoly& b);
SPoly spoly_linear(const Scalar& root);  // u - root

struct MatPoly {
    int dim = 0;
    std::vector<Mat> c;  // c[k] multiplies u^k; empty means zero

    MatPoly() = default;
    explicit MatPoly(int d) : dim(d) {}
    static MatPoly constant(const Mat& m);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    Mat eval(const Scalar& u) const;
    MatPoly derivative() const;
    // coefficients of P(s + t) in t
    MatPoly taylor_at(const Scalar& s) const;
    MatPoly mul_linear(const Scalar& p) const;  // P(u)*(u-p)
    MatPoly div_linear(const Scalar& p) const;  // exact P(u)/(u-p); throws if P(p) != 0
    MatPoly mul_spoly(const SPoly& s) const;
};

MatPoly operator+(const MatPoly& a, const MatPoly& b);
MatPoly operator-(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const Scalar& s, const MatPoly& a);

struct Pole {
    Scalar at;
    int mult = 0;
};

// num(u) / prod (u - p)^m over the declared poles.
struct MatRatFun {
    int dim = 0;
    MatPoly num;
    std::vector<Pole> poles;

    MatRatFun() = default;
    explicit MatRatFun(int d) : dim(d), num(d) {}
    static MatRatFun constant(const Mat& m);
    static MatRatFun identity(int d, const Scalar& s = Scalar(1));
    // m / (u - p)^k
    static MatRatFun simple(const Mat& m, const Scalar& p, int k = 1);
    // polynomial u^k times m
    static MatRatFun monomial(const Mat& m, int k);

    bool is_zero() const { return num.is_zero(); }
    int pole_mult(const Scalar& p) const;
    int max_mult() const;

    Mat eval(const Scalar& u) const;
    MatRatFun derivative() const;
    MatRatFun shifted(const Scalar& s) const;  // f(u - s)
    // cancel factors (u-p) dividing the numerator
    void reduce();
    // declare additional pole multiplicity (numerator multiplied accordingly)
    MatRatFun with_poles(const std::vector<Pole>& target) const;
};

MatRatFun operator+(const MatRatFun& a, const MatRatFun& b);
MatRatFun operator-(const MatRatFun& a, const MatRatFun& b);
MatRatFun operator-(const MatRatFun& a);
MatRatFun operator*(const MatRatFun& a, const MatRatFun& b);
MatRatFun operator*(const Scalar& s, const MatRatFun& a);
bool operator==(const MatRatFun& a, const MatRatFun& b);

// Scalar rational functions are the 1x1 case.
using RatFun = MatRatFun;
RatFun ratfun_from(const SPoly& num, const std::vector<Pole>& poles);

// res_{u=p} (u-p)^l f(u) du
Mat residue(const MatRatFun& f, const Scalar& p, int l);
// Laurent coefficient of (u-p)^k, any integer k >= -mult
Mat laurent_coeff(const MatRatFun& f, const Scalar& p, int k);

// sum_k b[k](u) d^k, derivatives to the right
struct DiffOpPoly {
    int dim = 0;
    std::vector<MatRatFun> b;

    DiffOpPoly() = default;
    explicit DiffOpPoly(int d) : dim(d) {}
    static DiffOpPoly mult(const MatRatFun& r);  // r * d^0
    static DiffOpPoly d(int dim);                // d^1

    int degree() const { return static_cast<int>(b.size()) - 1; }
    void trim();
    MatRatFun coeff(int k) const;
};

DiffOpPoly operator+(const DiffOpPoly& a, const DiffOpPoly& b);
DiffOpPoly operator-(const DiffOpPoly& a, const DiffOpPoly& b);
DiffOpPoly operator*(const DiffOpPoly& a, const DiffOpPoly& b);
DiffOpPoly operator*(const Scalar& s, const DiffOpPoly& a);
bool operator==(const DiffOpPoly& a, const DiffOpPoly& b);

// sum_a R[a](u) S^a with S f(u) = f(u - eps) S
struct ShiftOpPoly {
    int dim = 0;
    Scalar eps;
    std::vector<MatRatFun> r;

    ShiftOpPoly() = default;
    ShiftOpPoly(int d, const Scalar& e) : dim(d), eps(e) {}
    static ShiftOpPoly mult(const MatRatFun& f, const Scalar& eps);
    static ShiftOpPoly shift(int dim, const Scalar& eps);

    int degree() const { return static_cast<int>(r.size()) - 1; }
    void trim();
    MatRatFun coeff(int a) const;
    // coefficient of d^k after expanding S = exp(-eps d)
    MatRatFun diff_coeff(int k) const;
};

ShiftOpPoly operator+(const ShiftOpPoly& a, const ShiftOpPoly& b);
ShiftOpPoly operator-(const ShiftOpPoly& a, const ShiftOpPoly& b);
ShiftOpPoly operator*(const ShiftOpPoly& a, const ShiftOpPoly& b);
ShiftOpPoly operator*(const Scalar& s, const ShiftOpPoly& a);

}  // namespace krg
