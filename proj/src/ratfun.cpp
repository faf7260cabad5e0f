#include "krg/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace krg {

SPoly spoly_mul(const SPoly& a, const SPoly& b) {
    if (a.empty() || b.empty()) return {};
    SPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j].addmul(a[i], b[j]);
    return c;
}

SPoly spoly_linear(const Scalar& root) { return {-root, Scalar(1)}; }

// ---------------- MatPoly ----------------

MatPoly MatPoly::constant(const Mat& m) {
    MatPoly p(m.rows);
    p.c.push_back(m);
    p.trim();
    return p;
}

void MatPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Mat MatPoly::eval(const Scalar& u) const {
    if (c.empty()) return Mat(dim, dim);
    Mat acc = c.back();
    for (int k = degree() - 1; k >= 0; --k) {
        acc *= u;
        acc += c[k];
    }
    return acc;
}

MatPoly MatPoly::derivative() const {
    MatPoly d(dim);
    for (int k = 1; k <= degree(); ++k) d.c.push_back(c[k] * Scalar(k));
    d.trim();
    return d;
}

MatPoly MatPoly::taylor_at(const Scalar& s) const {
    MatPoly out(dim);
    int d = degree();
    if (d < 0) return out;
    out.c.assign(d + 1, Mat(dim, dim));
    if (s.is_zero()) {
        out.c = c;
        return out;
    }
    std::vector<Scalar> spow(d + 1);
    spow[0] = Scalar(1);
    for (int k = 1; k <= d; ++k) spow[k] = spow[k - 1] * s;
    for (int k = 0; k <= d; ++k)
        for (int j = 0; j <= k; ++j) out.c[j].axpy(Scalar(binomial(k, j)) * spow[k - j], c[k]);
    out.trim();
    return out;
}

MatPoly MatPoly::mul_linear(const Scalar& p) const {
    MatPoly out(dim);
    if (c.empty()) return out;
    out.c.assign(c.size() + 1, Mat(dim, dim));
    for (size_t k = 0; k < c.size(); ++k) {
        out.c[k + 1] += c[k];
        out.c[k].axpy(-p, c[k]);
    }
    out.trim();
    return out;
}

MatPoly MatPoly::div_linear(const Scalar& p) const {
    MatPoly q(dim);
    if (c.empty()) return q;
    int d = degree();
    if (d == 0) {
        if (!c[0].is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }
    q.c.assign(d, Mat(dim, dim));
    q.c[d - 1] = c[d];
    for (int k = d - 1; k >= 1; --k) {
        q.c[k - 1] = c[k];
        q.c[k - 1].axpy(p, q.c[k]);
    }
    Mat rem = c[0];
    rem.axpy(p, q.c[0]);
    if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
    q.trim();
    return q;
}

MatPoly MatPoly::mul_spoly(const SPoly& s) const {
    MatPoly out(dim);
    if (c.empty() || s.empty()) return out;
    out.c.assign(c.size() + s.size() - 1, Mat(dim, dim));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) out.c[i + j].axpy(s[j], c[i]);
    out.trim();
    return out;
}

MatPoly operator+(const MatPoly& a, const MatPoly& b) {
    MatPoly out(std::max(a.dim, b.dim));
    size_t n = std::max(a.c.size(), b.c.size());
    out.c.assign(n, Mat(out.dim, out.dim));
    for (size_t k = 0; k < a.c.size(); ++k) out.c[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) out.c[k] += b.c[k];
    out.trim();
    return out;
}

MatPoly operator-(const MatPoly& a, const MatPoly& b) { return a + Scalar(-1) * b; }

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    MatPoly out(a.dim);
    if (a.c.empty() || b.c.empty()) return out;
    out.c.assign(a.c.size() + b.c.size() - 1, Mat(a.dim, a.dim));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

MatPoly operator*(const Scalar& s, const MatPoly& a) {
    MatPoly out = a;
    for (auto& m : out.c) m *= s;
    out.trim();
    return out;
}

// ---------------- MatRatFun ----------------

MatRatFun MatRatFun::constant(const Mat& m) {
    MatRatFun f(m.rows);
    f.num = MatPoly::constant(m);
    return f;
}

MatRatFun MatRatFun::identity(int d, const Scalar& s) { return constant(Mat::identity(d, s)); }

MatRatFun MatRatFun::simple(const Mat& m, const Scalar& p, int k) {
    MatRatFun f = constant(m);
    if (!f.num.is_zero() && k > 0) f.poles.push_back({p, k});
    return f;
}

MatRatFun MatRatFun::monomial(const Mat& m, int k) {
    MatRatFun f(m.rows);
    f.num.c.assign(k + 1, Mat(m.rows, m.rows));
    f.num.c[k] = m;
    f.num.trim();
    return f;
}

int MatRatFun::pole_mult(const Scalar& p) const {
    for (const auto& q : poles)
        if (q.at == p) return q.mult;
    return 0;
}

int MatRatFun::max_mult() const {
    int m = 0;
    for (const auto& q : poles) m = std::max(m, q.mult);
    return m;
}

Mat MatRatFun::eval(const Scalar& u) const {
    Mat v = num.eval(u);
    Scalar den(1);
    for (const auto& q : poles) {
        Scalar x = u - q.at;
        if (x.is_zero()) throw std::domain_error("evaluation at a pole");
        for (int k = 0; k < q.mult; ++k) den *= x;
    }
    v *= den.inv();
    return v;
}

void MatRatFun::reduce() {
    if (num.is_zero()) {
        poles.clear();
        return;
    }
    std::vector<Pole> kept;
    for (auto q : poles) {
        while (q.mult > 0 && num.eval(q.at).is_zero()) {
            num = num.div_linear(q.at);
            --q.mult;
        }
        if (q.mult > 0) kept.push_back(q);
    }
    poles = std::move(kept);
}

MatRatFun MatRatFun::with_poles(const std::vector<Pole>& target) const {
    MatRatFun out = *this;
    for (const auto& t : target) {
        int have = pole_mult(t.at);
        if (t.mult <= have) continue;
        for (int k = have; k < t.mult; ++k) out.num = out.num.mul_linear(t.at);
        bool found = false;
        for (auto& q : out.poles)
            if (q.at == t.at) {
                q.mult = t.mult;
                found = true;
            }
        if (!found) out.poles.push_back(t);
    }
    return out;
}

static std::vector<Pole> pole_union(const std::vector<Pole>& a, const std::vector<Pole>& b) {
    std::vector<Pole> u = a;
    for (const auto& q : b) {
        bool found = false;
        for (auto& p : u)
            if (p.at == q.at) {
                p.mult = std::max(p.mult, q.mult);
                found = true;
            }
        if (!found) u.push_back(q);
    }
    return u;
}

MatRatFun operator+(const MatRatFun& a, const MatRatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto target = pole_union(a.poles, b.poles);
    MatRatFun x = a.with_poles(target), y = b.with_poles(target);
    MatRatFun out(a.dim);
    out.num = x.num + y.num;
    out.poles = x.poles;
    out.reduce();
    return out;
}

MatRatFun operator-(const MatRatFun& a) { return Scalar(-1) * a; }
MatRatFun operator-(const MatRatFun& a, const MatRatFun& b) { return a + (-b); }

MatRatFun operator*(const MatRatFun& a, const MatRatFun& b) {
    MatRatFun out(a.dim);
    if (a.is_zero() || b.is_zero()) return out;
    out.num = a.num * b.num;
    out.poles = a.poles;
    for (const auto& q : b.poles) {
        bool found = false;
        for (auto& p : out.poles)
            if (p.at == q.at) {
                p.mult += q.mult;
                found = true;
            }
        if (!found) out.poles.push_back(q);
    }
    out.reduce();
    return out;
}

MatRatFun operator*(const Scalar& s, const MatRatFun& a) {
    MatRatFun out = a;
    out.num = s * a.num;
    if (out.num.is_zero()) out.poles.clear();
    return out;
}

bool operator==(const MatRatFun& a, const MatRatFun& b) { return (a - b).is_zero(); }

MatRatFun MatRatFun::derivative() const {
    MatRatFun out(dim);
    if (num.is_zero()) return out;
    if (poles.empty()) {
        out.num = num.derivative();
        return out;
    }
    SPoly R{Scalar(1)}, W;
    for (const auto& q : poles) R = spoly_mul(R, spoly_linear(q.at));
    for (size_t i = 0; i < poles.size(); ++i) {
        SPoly t{Scalar(poles[i].mult)};
        for (size_t j = 0; j < poles.size(); ++j)
            if (j != i) t = spoly_mul(t, spoly_linear(poles[j].at));
        if (W.size() < t.size()) W.resize(t.size());
        for (size_t k = 0; k < t.size(); ++k) W[k] += t[k];
    }
    out.num = num.derivative().mul_spoly(R) - num.mul_spoly(W);
    out.poles = poles;
    for (auto& q : out.poles) ++q.mult;
    out.reduce();
    return out;
}

MatRatFun MatRatFun::shifted(const Scalar& s) const {
    MatRatFun out = *this;
    if (s.is_zero()) return out;
    out.num = num.taylor_at(-s);
    for (auto& q : out.poles) q.at += s;
    return out;
}

RatFun ratfun_from(const SPoly& num, const std::vector<Pole>& poles) {
    RatFun f(1);
    for (const auto& x : num) {
        Mat m(1, 1);
        m(0, 0) = x;
        f.num.c.push_back(m);
    }
    f.num.trim();
    for (const auto& p : poles)
        if (p.mult > 0) f.poles.push_back(p);
    f.reduce();
    return f;
}

Mat laurent_coeff(const MatRatFun& f, const Scalar& p, int k) {
    Mat zero(f.dim, f.dim);
    if (f.is_zero()) return zero;
    int m = f.pole_mult(p);
    int K = k + m;  // coefficient index in g(t) = (u-p)^m f
    if (K < 0) return zero;
    MatPoly N = f.num.taylor_at(p);
    // series of prod_{q != p} (t + (p - q))^{-m_q}, truncated at t^K
    std::vector<Scalar> h(K + 1);
    h[0] = Scalar(1);
    for (const auto& q : f.poles) {
        if (q.at == p) continue;
        Scalar delta = p - q.at;
        Scalar dinv = delta.inv();
        std::vector<Scalar> s(K + 1);
        Scalar base(1);
        for (int r = 0; r < q.mult; ++r) base *= dinv;
        Scalar dpow(1);
        for (int j = 0; j <= K; ++j) {
            Q coef = binomial(q.mult + j - 1, j);
            if (j % 2) coef = -coef;
            s[j] = base * dpow * Scalar(coef);
            dpow *= dinv;
        }
        std::vector<Scalar> hn(K + 1);
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j) hn[i + j].addmul(h[i], s[j]);
        h = std::move(hn);
    }
    Mat out = zero;
    for (int j = 0; j <= K && j <= N.degree(); ++j) out.axpy(h[K - j], N.c[j]);
    return out;
}

Mat residue(const MatRatFun& f, const Scalar& p, int l) { return laurent_coeff(f, p, -1 - l); }

// ---------------- DiffOpPoly ----------------

DiffOpPoly DiffOpPoly::mult(const MatRatFun& r) {
    DiffOpPoly d(r.dim);
    d.b.push_back(r);
    d.trim();
    return d;
}

DiffOpPoly DiffOpPoly::d(int dim) {
    DiffOpPoly o(dim);
    o.b.push_back(MatRatFun(dim));
    o.b.push_back(MatRatFun::identity(dim));
    return o;
}

void DiffOpPoly::trim() {
    while (!b.empty() && b.back().is_zero()) b.pop_back();
}

MatRatFun DiffOpPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return MatRatFun(dim);
    return b[k];
}

DiffOpPoly operator+(const DiffOpPoly& x, const DiffOpPoly& y) {
    DiffOpPoly o(std::max(x.dim, y.dim));
    size_t n = std::max(x.b.size(), y.b.size());
    for (size_t k = 0; k < n; ++k) {
        MatRatFun s(o.dim);
        if (k < x.b.size()) s = s + x.b[k];
        if (k < y.b.size()) s = s + y.b[k];
        o.b.push_back(s);
    }
    o.trim();
    return o;
}

DiffOpPoly operator*(const Scalar& s, const DiffOpPoly& a) {
    DiffOpPoly o = a;
    for (auto& r : o.b) r = s * r;
    o.trim();
    return o;
}

DiffOpPoly operator-(const DiffOpPoly& x, const DiffOpPoly& y) { return x + Scalar(-1) * y; }

DiffOpPoly operator*(const DiffOpPoly& x, const DiffOpPoly& y) {
    DiffOpPoly o(x.dim);
    if (x.b.empty() || y.b.empty()) return o;
    int dx = x.degree(), dy = y.degree();
    // derivatives of y's coefficients up to order dx
    std::vector<std::vector<MatRatFun>> dys(dy + 1);
    for (int bidx = 0; bidx <= dy; ++bidx) {
        dys[bidx].push_back(y.b[bidx]);
        for (int j = 1; j <= dx; ++j) dys[bidx].push_back(dys[bidx].back().derivative());
    }
    std::vector<MatRatFun> acc(dx + dy + 1, MatRatFun(x.dim));
    for (int a = 0; a <= dx; ++a) {
        if (x.b[a].is_zero()) continue;
        for (int bb = 0; bb <= dy; ++bb)
            for (int j = 0; j <= a; ++j) {
                const MatRatFun& yd = dys[bb][j];
                if (yd.is_zero()) continue;
                acc[a + bb - j] = acc[a + bb - j] + Scalar(binomial(a, j)) * (x.b[a] * yd);
            }
    }
    o.b = std::move(acc);
    o.trim();
    return o;
}

bool operator==(const DiffOpPoly& x, const DiffOpPoly& y) {
    DiffOpPoly d = x - y;
    return d.b.empty();
}

// ---------------- ShiftOpPoly ----------------

ShiftOpPoly ShiftOpPoly::mult(const MatRatFun& f, const Scalar& eps) {
    ShiftOpPoly s(f.dim, eps);
    s.r.push_back(f);
    s.trim();
    return s;
}

ShiftOpPoly ShiftOpPoly::shift(int dim, const Scalar& eps) {
    ShiftOpPoly s(dim, eps);
    s.r.push_back(MatRatFun(dim));
    s.r.push_back(MatRatFun::identity(dim));
    return s;
}

void ShiftOpPoly::trim() {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

MatRatFun ShiftOpPoly::coeff(int a) const {
    if (a < 0 || a > degree()) return MatRatFun(dim);
    return r[a];
}

MatRatFun ShiftOpPoly::diff_coeff(int k) const {
    MatRatFun out(dim);
    Scalar kf = Scalar(factorial(k)).inv();
    for (int a = 0; a <= degree(); ++a) {
        if (r[a].is_zero()) continue;
        Scalar w(1);
        Scalar step = Scalar(-a) * eps;
        for (int t = 0; t < k; ++t) w *= step;
        if (w.is_zero()) continue;
        out = out + (w * kf) * r[a];
    }
    return out;
}

static void check_eps(const ShiftOpPoly& x, const ShiftOpPoly& y) {
    if (x.eps != y.eps) throw std::invalid_argument("shift operators with different steps");
}

ShiftOpPoly operator+(const ShiftOpPoly& x, const ShiftOpPoly& y) {
    check_eps(x, y);
    ShiftOpPoly o(std::max(x.dim, y.dim), x.eps);
    size_t n = std::max(x.r.size(), y.r.size());
    for (size_t k = 0; k < n; ++k) {
        MatRatFun s(o.dim);
        if (k < x.r.size()) s = s + x.r[k];
        if (k < y.r.size()) s = s + y.r[k];
        o.r.push_back(s);
    }
    o.trim();
    return o;
}

ShiftOpPoly operator*(const Scalar& s, const ShiftOpPoly& a) {
    ShiftOpPoly o = a;
    for (auto& f : o.r) f = s * f;
    o.trim();
    return o;
}

ShiftOpPoly operator-(const ShiftOpPoly& x, const ShiftOpPoly& y) { return x + Scalar(-1) * y; }

ShiftOpPoly operator*(const ShiftOpPoly& x, const ShiftOpPoly& y) {
    check_eps(x, y);
    ShiftOpPoly o(x.dim, x.eps);
    if (x.r.empty() || y.r.empty()) return o;
    std::vector<MatRatFun> acc(x.r.size() + y.r.size() - 1, MatRatFun(x.dim));
    for (int a = 0; a <= x.degree(); ++a) {
        if (x.r[a].is_zero()) continue;
        Scalar sh = Scalar(a) * x.eps;
        for (int b = 0; b <= y.degree(); ++b) {
            if (y.r[b].is_zero()) continue;
            acc[a + b] = acc[a + b] + x.r[a] * y.r[b].shifted(sh);
        }
    }
    o.r = std::move(acc);
    o.trim();
    return o;
}

}  // namespace krg
