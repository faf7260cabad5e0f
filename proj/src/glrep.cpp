#include "krg/glrep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace krg {

namespace {

// Vectors in (wedge^r C^n)^{tensor l}: key packs one r-subset bitmask per factor
// into 8-bit slots.
using AVec = std::map<uint64_t, Q>;

uint64_t slot(uint64_t key, int t) { return (key >> (8 * t)) & 0xffu; }
uint64_t set_slot(uint64_t key, int t, uint64_t s) {
    key &= ~(uint64_t(0xff) << (8 * t));
    return key | (s << (8 * t));
}

AVec apply_E(const AVec& v, int a, int b, int l) {
    AVec out;
    for (const auto& [key, c] : v)
        for (int t = 0; t < l; ++t) {
            uint64_t S = slot(key, t);
            if (!(S >> b & 1u)) continue;
            if (a == b) {
                out[key] += c;
                continue;
            }
            if (S >> a & 1u) continue;
            int lo = std::min(a, b), hi = std::max(a, b);
            uint64_t between = S & (((uint64_t(1) << hi) - 1) & ~((uint64_t(1) << (lo + 1)) - 1));
            int sign = std::popcount(between) % 2 ? -1 : 1;
            uint64_t S2 = (S & ~(uint64_t(1) << b)) | (uint64_t(1) << a);
            out[set_slot(key, t, S2)] += sign * c;
        }
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

Q dot(const AVec& x, const AVec& y) {
    const AVec& small = x.size() < y.size() ? x : y;
    const AVec& big = x.size() < y.size() ? y : x;
    Q s = 0;
    for (const auto& [k, c] : small) {
        auto it = big.find(k);
        if (it != big.end()) s += c * it->second;
    }
    return s;
}

void axpy(AVec& y, const Q& s, const AVec& x) {
    for (const auto& [k, c] : x) {
        Q& t = y[k];
        t += s * c;
    }
    for (auto it = y.begin(); it != y.end();)
        it = sgn(it->second) == 0 ? y.erase(it) : std::next(it);
}

Content content_of(uint64_t key, int n, int l) {
    Content w(n, 0);
    for (int t = 0; t < l; ++t) {
        uint64_t S = slot(key, t);
        for (int a = 0; a < n; ++a)
            if (S >> a & 1u) ++w[a];
    }
    return w;
}

}  // namespace

MatrixRep build_irrep(int n, int l, int r) {
    if (n < 1 || n > 8) throw std::invalid_argument("build_irrep: need 1 <= n <= 8");
    if (r < 1 || r > n) throw std::invalid_argument("build_irrep: need 1 <= r <= n");
    if (l < 1 || l > 8) throw std::invalid_argument("build_irrep: need 1 <= l <= 8");

    uint64_t top = (uint64_t(1) << r) - 1, key0 = 0;
    for (int t = 0; t < l; ++t) key0 = set_slot(key0, t, top);

    struct Found {
        AVec v;
        Content w;
        Q g;
    };
    std::vector<Found> basis;
    std::map<Content, std::vector<int>> by_weight;
    std::deque<int> queue;

    auto consider = [&](AVec v) {
        if (v.empty()) return;
        Content w = content_of(v.begin()->first, n, l);
        auto& same = by_weight[w];
        // Gram-Schmidt against the vectors already found with this weight
        for (int k : same) {
            Q c = dot(v, basis[k].v);
            if (sgn(c) != 0) axpy(v, -c / basis[k].g, basis[k].v);
        }
        if (v.empty()) return;
        Q g = dot(v, v);
        same.push_back(static_cast<int>(basis.size()));
        queue.push_back(static_cast<int>(basis.size()));
        basis.push_back({std::move(v), w, g});
    };

    consider(AVec{{key0, Q(1)}});
    while (!queue.empty()) {
        int j = queue.front();
        queue.pop_front();
        for (int a = 0; a + 1 < n; ++a) consider(apply_E(basis[j].v, a + 1, a, l));
    }

    std::vector<int> order(basis.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return basis[x].w > basis[y].w; });
    std::vector<int> pos(basis.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    MatrixRep rep;
    rep.n = n;
    rep.l = l;
    rep.r = r;
    rep.dim = static_cast<int>(basis.size());
    for (int i : order) {
        rep.weights.push_back(basis[i].w);
        rep.gram.push_back(basis[i].g);
    }
    rep.gens.assign(static_cast<size_t>(n) * n, SpMat(rep.dim));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SpMat& M = rep.gens[static_cast<size_t>(a) * n + b];
            for (size_t j = 0; j < basis.size(); ++j) {
                AVec img = apply_E(basis[j].v, a, b, l);
                if (img.empty()) continue;
                Content w = basis[j].w;
                w[a] += 1;
                w[b] -= 1;
                auto it = by_weight.find(w);
                if (it == by_weight.end()) throw std::logic_error("build_irrep: image outside the module");
                for (int k : it->second) {
                    Q c = dot(img, basis[k].v) / basis[k].g;
                    if (sgn(c) == 0) continue;
                    M.col[pos[j]].push_back({pos[k], c});
                    axpy(img, -c, basis[k].v);
                }
                if (!img.empty()) throw std::logic_error("build_irrep: submodule not invariant");
            }
            for (auto& cl : M.col) std::sort(cl.begin(), cl.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    rep.label = "V(" + std::to_string(n) + ";l=" + std::to_string(l) + ",r=" + std::to_string(r) + ")";
    return rep;
}

MatrixRep build_wedge(int n, int r) {
    MatrixRep rep = build_irrep(n, 1, r);
    rep.label = r == 1 ? "C^" + std::to_string(n) : "wedge^" + std::to_string(r) + " C^" + std::to_string(n);
    return rep;
}

bool check_gl_relations(const MatrixRep& rep, std::string* why) {
    int n = rep.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    SpMat lhs = sp_sub(sp_mul(rep.E(a, b), rep.E(c, d)), sp_mul(rep.E(c, d), rep.E(a, b)));
                    SpMat rhs(rep.dim);
                    if (b == c) rhs = sp_add(rhs, rep.E(a, d));
                    if (d == a) rhs = sp_sub(rhs, rep.E(c, b));
                    if (!sp_equal(lhs, rhs)) {
                        if (why)
                            *why = "commutation fails for E" + std::to_string(a + 1) + std::to_string(b + 1) + ", E" +
                                   std::to_string(c + 1) + std::to_string(d + 1);
                        return false;
                    }
                }
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < rep.dim; ++j) {
            for (const auto& [i, x] : rep.E(a, a).col[j])
                if (i != j) {
                    if (why) *why = "E_aa not diagonal";
                    return false;
                }
            if (rep.E(a, a).at(j, j) != rep.weights[j][a]) {
                if (why) *why = "E_aa diagonal differs from the weight";
                return false;
            }
        }
    return true;
}

SpMat casimir(const MatrixRep& rep) {
    SpMat c(rep.dim);
    for (int a = 0; a < rep.n; ++a)
        for (int b = 0; b < rep.n; ++b) c = sp_add(c, sp_mul(rep.E(a, b), rep.E(b, a)));
    return c;
}

std::map<Content, int> weight_multiplicities(const std::vector<Content>& weights) {
    std::map<Content, int> m;
    for (const auto& w : weights) ++m[w];
    return m;
}

TensorRep build_tensor(const std::vector<TensorFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("build_tensor: no factors");
    TensorRep t;
    t.n = factors[0].rep.n;
    t.factors = factors;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].rep.n != t.n) throw std::invalid_argument("build_tensor: factors have different n");
        for (size_t j = 0; j < i; ++j)
            if (t.point(static_cast<int>(i)) == t.point(static_cast<int>(j)))
                throw std::invalid_argument("build_tensor: repeated evaluation points");
        t.dims.push_back(factors[i].rep.dim);
    }
    t.weights = {Content(t.n, 0)};
    t.gram = {Q(1)};
    for (const auto& f : factors) {
        std::vector<Content> w;
        std::vector<Q> g;
        for (size_t x = 0; x < t.weights.size(); ++x)
            for (int y = 0; y < f.rep.dim; ++y) {
                Content s = t.weights[x];
                for (int a = 0; a < t.n; ++a) s[a] += f.rep.weights[y][a];
                w.push_back(s);
                g.push_back(t.gram[x] * f.rep.gram[y]);
            }
        t.weights = std::move(w);
        t.gram = std::move(g);
    }
    t.dim = static_cast<int>(t.weights.size());
    return t;
}

SpMat TensorRep::embedded(int i, int a, int b) const {
    SpMat acc = SpMat::identity(1);
    for (int j = 0; j < k(); ++j) acc = sp_kron(acc, j == i ? factors[j].rep.E(a, b) : SpMat::identity(dims[j]));
    return acc;
}

Mat TensorRep::total(int a, int b) const {
    SpMat acc(dim);
    for (int i = 0; i < k(); ++i) acc = sp_add(acc, embedded(i, a, b));
    return acc.dense();
}

Mat TensorRep::adjoint(const Mat& m) const {
    Mat out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m(i, j).is_zero()) continue;
            out(j, i) = m(i, j).conj() * Scalar(gram[i] / gram[j]);
        }
    return out;
}

bool TensorRep::is_normal(const Mat& m) const {
    Mat a = adjoint(m);
    return m * a == a * m;
}

Q normal_shift(int n, int l, int r) { return frac(l - r - n, 2); }

}  // namespace krg
