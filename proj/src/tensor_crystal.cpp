#include "krg/tensor_crystal.hpp"

#include <stdexcept>

namespace krg {

Crystal tensor(const Crystal& a, const Crystal& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor: rank mismatch");
    Crystal c;
    c.n = a.n;
    c.affine = a.affine && b.affine;
    int na = a.size(), nb = b.size();
    int total = na * nb;
    c.init_ops(total);
    auto id = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            c.labels.push_back(a.labels[x] + " (x) " + b.labels[y]);
            Content w = a.wt[x];
            for (int k = 0; k < c.n; ++k) w[k] += b.wt[y][k];
            c.wt.push_back(w);
            std::vector<int> p = a.parts.empty() ? std::vector<int>{x} : a.parts[x];
            if (b.parts.empty())
                p.push_back(y);
            else
                p.insert(p.end(), b.parts[y].begin(), b.parts[y].end());
            c.parts.push_back(p);
        }
    for (int i = c.affine ? 0 : 1; i < c.n; ++i) {
        std::vector<int> ea(na), pb(nb);
        for (int x = 0; x < na; ++x) ea[x] = string_data(a, i, x).first;
        for (int y = 0; y < nb; ++y) pb[y] = string_data(b, i, y).second;
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < nb; ++y) {
                int self = id(x, y);
                if (ea[x] > pb[y]) {
                    int t = a.e[i][x];
                    c.e[i][self] = t >= 0 ? id(t, y) : -1;
                } else {
                    int t = b.e[i][y];
                    c.e[i][self] = t >= 0 ? id(x, t) : -1;
                }
                if (ea[x] >= pb[y]) {
                    int t = a.f[i][x];
                    c.f[i][self] = t >= 0 ? id(t, y) : -1;
                } else {
                    int t = b.f[i][y];
                    c.f[i][self] = t >= 0 ? id(x, t) : -1;
                }
            }
    }
    return c;
}

Crystal tensor_many(const std::vector<Crystal>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor_many: no factors");
    Crystal acc = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
    return acc;
}

StringStats string_statistics(const Crystal& c, int j) {
    int i = ((j % c.n) + c.n) % c.n;
    if (i == 0 && !c.affine) throw std::invalid_argument("string_statistics: index 0 needs an affine crystal");
    StringStats s;
    for (int b = 0; b < c.size(); ++b) {
        if (c.e[i][b] >= 0) continue;
        int len = 1 + string_data(c, i, b).second;
        ++s[{len, canonical_weight(c.wt[b])}];
    }
    return s;
}

}  // namespace krg
