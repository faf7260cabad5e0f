#include "krg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace krg {

Mat Mat::identity(int n, const Scalar& s) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Mat Mat::diagonal(const std::vector<Scalar>& d) {
    int n = static_cast<int>(d.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_diagonal() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

bool Mat::is_scalar() const {
    if (!square() || !is_diagonal()) return false;
    for (int i = 1; i < rows; ++i)
        if ((*this)(i, i) != (*this)(0, 0)) return false;
    return true;
}

Scalar Mat::trace() const {
    Scalar t;
    for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
    return t;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::adjoint() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

size_t Mat::nnz() const {
    size_t k = 0;
    for (const auto& x : v)
        if (!x.is_zero()) ++k;
    return k;
}

static void check_same(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix dimension mismatch");
}

Mat& Mat::operator+=(const Mat& o) {
    check_same(*this, o);
    for (size_t k = 0; k < v.size(); ++k)
        if (!o.v[k].is_zero()) v[k] += o.v[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_same(*this, o);
    for (size_t k = 0; k < v.size(); ++k)
        if (!o.v[k].is_zero()) v[k] -= o.v[k];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        for (auto& x : v) x = Scalar();
        return *this;
    }
    for (auto& x : v)
        if (!x.is_zero()) x *= s;
    return *this;
}

void Mat::axpy(const Scalar& s, const Mat& o) {
    check_same(*this, o);
    if (s.is_zero()) return;
    for (size_t k = 0; k < v.size(); ++k)
        if (!o.v[k].is_zero()) v[k].addmul(s, o.v[k]);
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator-(const Mat& a) {
    Mat r = a;
    for (auto& x : r.v) x = -x;
    return r;
}
Mat operator*(Mat a, const Scalar& s) { return a *= s; }
Mat operator*(const Scalar& s, Mat a) { return a *= s; }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    Mat c(a.rows, b.cols);
    // row-sparse structure of b, computed once
    std::vector<std::vector<int>> bnz(b.rows);
    for (int k = 0; k < b.rows; ++k)
        for (int j = 0; j < b.cols; ++j)
            if (!b(k, j).is_zero()) bnz[k].push_back(j);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j : bnz[k]) c(i, j).addmul(x, b(k, j));
        }
    return c;
}

bool operator==(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    return a.v == b.v;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat kron(const Mat& a, const Mat& b) {
    Mat k(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a(i, j).is_zero()) continue;
            for (int p = 0; p < b.rows; ++p)
                for (int q = 0; q < b.cols; ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows + p, j * b.cols + q) = a(i, j) * b(p, q);
        }
    return k;
}

double max_abs(const Mat& a) {
    double m = 0;
    for (const auto& x : a.v) m = std::max(m, std::abs(x.to_complex()));
    return m;
}

// Gaussian elimination on rows; destroys its argument.
static int rank_rows(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    size_t ncol = rows[0].size();
    int r = 0;
    for (size_t c = 0; c < ncol && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][c].inv();
        for (size_t j = c; j < ncol; ++j) rows[r][j] *= inv;
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (size_t j = c; j < ncol; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

int span_rank(const std::vector<Mat>& ms) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : ms) rows.push_back(m.v);
    return rank_rows(std::move(rows));
}

int rank(const Mat& m) {
    std::vector<std::vector<Scalar>> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) rows[i].assign(m.v.begin() + static_cast<long>(i) * m.cols, m.v.begin() + static_cast<long>(i + 1) * m.cols);
    return rank_rows(std::move(rows));
}

// ---- sparse ----

SpMat SpMat::identity(int d) {
    SpMat m(d);
    for (int i = 0; i < d; ++i) m.col[i].push_back({i, Q(1)});
    return m;
}

void SpMat::add(int i, int j, const Q& x) {
    if (sgn(x) == 0) return;
    for (auto it = col[j].begin(); it != col[j].end(); ++it)
        if (it->first == i) {
            it->second += x;
            if (sgn(it->second) == 0) col[j].erase(it);
            return;
        }
    col[j].push_back({i, x});
}

Q SpMat::at(int i, int j) const {
    for (const auto& [r, x] : col[j])
        if (r == i) return x;
    return 0;
}

Mat SpMat::dense() const {
    Mat m(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [i, x] : col[j]) m(i, j) = Scalar(x);
    return m;
}

size_t SpMat::nnz() const {
    size_t k = 0;
    for (const auto& c : col) k += c.size();
    return k;
}

static void normalize_col(std::vector<std::pair<int, Q>>& c, std::map<int, Q>& acc) {
    c.clear();
    for (auto& [i, x] : acc)
        if (sgn(x) != 0) c.push_back({i, x});
}

SpMat sp_mul(const SpMat& a, const SpMat& b) {
    SpMat c(a.dim);
    for (int j = 0; j < b.dim; ++j) {
        std::map<int, Q> acc;
        for (const auto& [k, y] : b.col[j])
            for (const auto& [i, x] : a.col[k]) acc[i] += x * y;
        normalize_col(c.col[j], acc);
    }
    return c;
}

SpMat sp_add(const SpMat& a, const SpMat& b) {
    SpMat c(a.dim);
    for (int j = 0; j < a.dim; ++j) {
        std::map<int, Q> acc;
        for (const auto& [i, x] : a.col[j]) acc[i] += x;
        for (const auto& [i, x] : b.col[j]) acc[i] += x;
        normalize_col(c.col[j], acc);
    }
    return c;
}

SpMat sp_scale(const SpMat& a, const Q& s) {
    SpMat c(a.dim);
    if (sgn(s) == 0) return c;
    for (int j = 0; j < a.dim; ++j)
        for (const auto& [i, x] : a.col[j]) c.col[j].push_back({i, x * s});
    return c;
}

SpMat sp_sub(const SpMat& a, const SpMat& b) { return sp_add(a, sp_scale(b, Q(-1))); }

SpMat sp_kron(const SpMat& a, const SpMat& b) {
    SpMat c(a.dim * b.dim);
    for (int j = 0; j < a.dim; ++j)
        for (const auto& [i, x] : a.col[j])
            for (int q = 0; q < b.dim; ++q)
                for (const auto& [p, y] : b.col[q]) c.col[j * b.dim + q].push_back({i * b.dim + p, x * y});
    for (auto& cl : c.col) std::sort(cl.begin(), cl.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return c;
}

bool sp_is_zero(const SpMat& a) {
    for (const auto& c : a.col)
        for (const auto& e : c)
            if (sgn(e.second) != 0) return false;
    return true;
}

bool sp_equal(const SpMat& a, const SpMat& b) { return a.dim == b.dim && sp_is_zero(sp_sub(a, b)); }

}  // namespace krg
