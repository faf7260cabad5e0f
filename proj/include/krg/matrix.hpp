// Dense exact matrices over Scalar, and sparse rational matrices for reps.
#pragma once

#include "krg/scalar.hpp"

#include <utility>
#include <vector>

namespace krg {

struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> v;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c) {}
    static Mat identity(int n, const Scalar& s = Scalar(1));
    static Mat diagonal(const std::vector<Scalar>& d);

    Scalar& operator()(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
    const Scalar& operator()(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
    bool is_zero() const;
    bool is_scalar() const;  // multiple of the identity
    bool is_diagonal() const;
    Scalar trace() const;
    Mat transpose() const;
    Mat adjoint() const;  // conjugate transpose
    size_t nnz() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);
    // this += s * o
    void axpy(const Scalar& s, const Mat& o);
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, const Scalar& s);
Mat operator*(const Scalar& s, Mat a);
bool operator==(const Mat& a, const Mat& b);
inline bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

Mat commutator(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

// Largest |entry| as a double (for reporting residuals).
double max_abs(const Mat& a);

// Rank of the span of a list of matrices (each flattened to a row vector).
int span_rank(const std::vector<Mat>& ms);
// Rank of a matrix over the Gaussian rationals.
int rank(const Mat& m);

// Sparse rational matrix stored by columns: col[j] = list of (row, value).
struct SpMat {
    int dim = 0;
    std::vector<std::vector<std::pair<int, Q>>> col;

    SpMat() = default;
    explicit SpMat(int d) : dim(d), col(d) {}
    static SpMat identity(int d);

    void add(int i, int j, const Q& x);  // assumes (i,j) not present yet or accumulates
    Q at(int i, int j) const;
    Mat dense() const;
    size_t nnz() const;
};

SpMat sp_mul(const SpMat& a, const SpMat& b);
SpMat sp_sub(const SpMat& a, const SpMat& b);
SpMat sp_add(const SpMat& a, const SpMat& b);
SpMat sp_scale(const SpMat& a, const Q& s);
SpMat sp_kron(const SpMat& a, const SpMat& b);
bool sp_is_zero(const SpMat& a);
bool sp_equal(const SpMat& a, const SpMat& b);

}  // namespace krg
