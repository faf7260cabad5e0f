#include "krg/alcove.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace krg {

AffinePoint AffinePoint::make(std::vector<Q> v) {
    if (v.empty()) throw std::invalid_argument("empty point");
    Q last = v.back();
    for (auto& x : v) x -= last;
    return AffinePoint{std::move(v)};
}

std::string AffinePoint::str() const {
    std::string s = "(";
    for (size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + rational_str(x[k]);
    return s + ")";
}

ExtAffineWeylElt ExtAffineWeylElt::identity(int n) {
    ExtAffineWeylElt w;
    w.sigma.resize(n);
    std::iota(w.sigma.begin(), w.sigma.end(), 0);
    w.m.assign(n, 0);
    return w;
}

ExtAffineWeylElt ExtAffineWeylElt::make(std::vector<int> sigma, std::vector<long> m) {
    if (sigma.size() != m.size() || sigma.empty()) throw std::invalid_argument("bad affine Weyl element");
    std::vector<int> chk = sigma;
    std::sort(chk.begin(), chk.end());
    for (int k = 0; k < static_cast<int>(chk.size()); ++k)
        if (chk[k] != k) throw std::invalid_argument("sigma is not a permutation");
    long last = m.back();
    for (auto& x : m) x -= last;
    return ExtAffineWeylElt{std::move(sigma), std::move(m)};
}

bool ExtAffineWeylElt::in_affine_weyl() const {
    long s = std::accumulate(m.begin(), m.end(), 0L);
    long nn = n();
    return ((s % nn) + nn) % nn == 0;
}

ExtAffineWeylElt ExtAffineWeylElt::inverse() const {
    int nn = n();
    std::vector<int> inv(nn);
    for (int k = 0; k < nn; ++k) inv[sigma[k]] = k;
    std::vector<long> mu(nn);
    for (int j = 0; j < nn; ++j) mu[j] = -m[inv[j]];
    return make(inv, mu);
}

std::string ExtAffineWeylElt::str() const {
    std::string s = "(sigma=[";
    for (int k = 0; k < n(); ++k) s += (k ? "," : "") + std::to_string(sigma[k] + 1);
    s += "]; m=[";
    for (int k = 0; k < n(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
    return s + "])";
}

ExtAffineWeylElt operator*(const ExtAffineWeylElt& a, const ExtAffineWeylElt& b) {
    int n = a.n();
    if (b.n() != n) throw std::invalid_argument("rank mismatch");
    std::vector<int> s(n);
    std::vector<long> mu(n);
    for (int j = 0; j < n; ++j) {
        s[j] = a.sigma[b.sigma[j]];
        mu[j] = b.m[j] + a.m[b.sigma[j]];
    }
    return ExtAffineWeylElt::make(s, mu);
}

AffinePoint act(const ExtAffineWeylElt& w, const AffinePoint& a) {
    int n = w.n();
    if (a.n() != n) throw std::invalid_argument("rank mismatch");
    std::vector<Q> b(n);
    for (int k = 0; k < n; ++k) b[w.sigma[k]] = a.x[k] + w.m[k];
    return AffinePoint::make(b);
}

ExtAffineWeylElt simple_reflection(int n, int i) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::vector<long> m(n, 0);
    if (i == 0) {
        std::swap(s[0], s[n - 1]);
        m[0] = -1;
        m[n - 1] = 1;
    } else {
        std::swap(s[i - 1], s[i]);
    }
    return ExtAffineWeylElt::make(s, m);
}

Wall Wall::canonical() const {
    if (i < j) return *this;
    return Wall{j, i, -k};
}

bool Wall::operator==(const Wall& o) const {
    Wall a = canonical(), b = o.canonical();
    return a.i == b.i && a.j == b.j && a.k == b.k;
}

bool Wall::contains(const AffinePoint& a) const { return a.x[i] - a.x[j] == k; }

std::string Wall::str() const {
    return "H^" + std::to_string(k) + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

Wall act(const ExtAffineWeylElt& w, const Wall& h) {
    return Wall{w.sigma[h.i], w.sigma[h.j], h.k + w.m[h.i] - w.m[h.j]};
}

bool in_alcove(const ExtAffineWeylElt& w, const AffinePoint& a, bool closed) {
    int n = w.n();
    std::vector<Q> y(n);
    for (int k = 0; k < n; ++k) y[k] = a.x[w.sigma[k]] - w.m[k];
    auto ge = [closed](const Q& p, const Q& q) { return closed ? p >= q : p > q; };
    for (int k = 0; k + 1 < n; ++k)
        if (!ge(y[k], y[k + 1])) return false;
    return ge(y[n - 1] + 1, y[0]);
}

Classification classify(const AffinePoint& a) {
    int n = a.n();
    Classification out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Q d = a.x[i] - a.x[j];
            if (d.get_den() == 1) out.walls.push_back(Wall{i, j, d.get_num().get_si()});
        }
    if (!out.walls.empty()) return out;
    ExtAffineWeylElt w = ExtAffineWeylElt::identity(n);
    AffinePoint y = a;
    const ExtAffineWeylElt s0 = simple_reflection(n, 0);
    std::vector<ExtAffineWeylElt> s(n);
    for (int i = 1; i < n; ++i) s[i] = simple_reflection(n, i);
    for (;;) {
        int hit = -1;
        for (int i = 1; i < n && hit < 0; ++i)
            if (y.x[i - 1] < y.x[i]) hit = i;
        if (hit < 0 && y.x[0] - y.x[n - 1] > 1) hit = 0;
        if (hit < 0) break;
        const ExtAffineWeylElt& r = hit == 0 ? s0 : s[hit];
        y = act(r, y);
        w = w * r;
        ++out.steps;
        if (out.steps > 1000000) throw std::logic_error("classify: folding did not terminate");
    }
    out.regular = true;
    out.w = w;
    return out;
}

std::vector<Wall> walls_of(const ExtAffineWeylElt& w) {
    int n = w.n();
    std::vector<Wall> h;
    for (int k = 0; k + 1 < n; ++k) h.push_back(Wall{w.sigma[k], w.sigma[k + 1], w.m[k] - w.m[k + 1]});
    h.push_back(Wall{w.sigma[n - 1], w.sigma[0], w.m[n - 1] - w.m[0] - 1});
    return h;
}

// Point of the base alcove with gaps d_1..d_n (sum 1): y_k - y_{k+1} = d_k.
static AffinePoint from_gaps(const std::vector<Q>& d) {
    int n = static_cast<int>(d.size());
    std::vector<Q> y(n, Q(0));
    for (int k = n - 2; k >= 0; --k) y[k] = y[k + 1] + d[k];
    return AffinePoint::make(y);
}

static std::vector<Q> gaps(int n, int zero) {
    std::vector<Q> d(n);
    Q total = 0;
    for (int k = 0; k < n; ++k) {
        d[k] = k == zero ? Q(0) : Q(2 * k + 3);
        total += d[k];
    }
    for (auto& x : d) x /= total;
    return d;
}

AffinePoint regular_sample(const ExtAffineWeylElt& w) { return act(w, from_gaps(gaps(w.n(), -1))); }

AffinePoint subregular_sample(const ExtAffineWeylElt& w, int j) {
    if (j < 1 || j > w.n()) throw std::invalid_argument("subregular_sample: need 1 <= j <= n");
    return act(w, from_gaps(gaps(w.n(), j - 1)));
}

}  // namespace krg
