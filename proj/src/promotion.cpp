#include "krg/promotion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace krg {

Tableau promote(const Tableau& t) {
    const int n = t.n;
    const int H = 0;  // hole marker
    auto g = t.rows;
    std::vector<std::pair<int, int>> holes;
    for (int r = 0; r < static_cast<int>(g.size()); ++r)
        for (int c = 0; c < static_cast<int>(g[r].size()); ++c)
            if (g[r][c] == n) {
                g[r][c] = H;
                holes.push_back({r, c});
            }
    std::sort(holes.begin(), holes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto [r, c] : holes) {
        for (;;) {
            bool has_up = r > 0 && g[r - 1][c] != H;
            bool has_left = c > 0 && g[r][c - 1] != H;
            if (!has_up && !has_left) break;
            bool go_up = has_up && (!has_left || g[r - 1][c] >= g[r][c - 1]);
            if (go_up) {
                g[r][c] = g[r - 1][c];
                g[r - 1][c] = H;
                --r;
            } else {
                g[r][c] = g[r][c - 1];
                g[r][c - 1] = H;
                --c;
            }
        }
    }
    Tableau out = t;
    for (size_t r = 0; r < g.size(); ++r)
        for (size_t c = 0; c < g[r].size(); ++c) out.rows[r][c] = g[r][c] == H ? 1 : g[r][c] + 1;
    return out;
}

std::vector<int> promotion_map(const Crystal& c) {
    std::map<Tableau, int> index;
    for (int b = 0; b < static_cast<int>(c.tableaux.size()); ++b) index[c.tableaux[b]] = b;
    std::vector<int> pr(c.tableaux.size(), -1);
    std::vector<int> hit(c.tableaux.size(), 0);
    for (int b = 0; b < static_cast<int>(c.tableaux.size()); ++b) {
        Tableau p = promote(c.tableaux[b]);
        auto it = index.find(p);
        if (it == index.end()) throw std::logic_error("promotion leaves the crystal at " + c.labels[b]);
        pr[b] = it->second;
        if (hit[it->second]++) throw std::logic_error("promotion is not injective");
    }
    return pr;
}

static int perm_order(const std::vector<int>& p) {
    std::vector<int> seen(p.size(), 0);
    long long ord = 1;
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        long long len = 0;
        for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

int promotion_order(int n, const std::vector<int>& lambda, int cap) {
    return perm_order(promotion_map(build_crystal(n, lambda, cap)));
}

std::vector<int> phi_operator(const Crystal& c, std::string* why) {
    auto full = schutzenberger(c, 1, c.n - 1, why);
    if (full.empty()) return {};
    auto sub = schutzenberger(c, 1, c.n - 2, why);
    if (sub.empty()) return {};
    std::vector<int> phi(c.size());
    for (int b = 0; b < c.size(); ++b) phi[b] = full[sub[b]];
    return phi;
}

std::vector<int> rectangle(int l, int r) { return std::vector<int>(r, l); }

// Affine structure from promotion; throws when pr^n != id.
static Crystal affinize(int n, const std::vector<int>& lambda, int cap) {
    if (n < 2) throw std::invalid_argument("affine crystals need n >= 2");
    Crystal c = build_crystal(n, lambda, cap);
    auto pr = promotion_map(c);
    int ord = perm_order(pr);
    if (n % ord != 0)
        throw std::domain_error("promotion order " + std::to_string(ord) + " does not divide n = " + std::to_string(n));
    std::vector<int> inv(pr.size());
    for (size_t b = 0; b < pr.size(); ++b) inv[pr[b]] = static_cast<int>(b);
    for (int b = 0; b < c.size(); ++b) {
        int x = c.e[1][pr[b]];
        c.e[0][b] = x >= 0 ? inv[x] : -1;
        int y = c.f[1][pr[b]];
        c.f[0][b] = y >= 0 ? inv[y] : -1;
    }
    c.affine = true;
    return c;
}

static std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Crystal build_kr(int n, int l, int r, int cap) {
    if (r < 1 || r > n || l < 1) throw std::invalid_argument("build_kr: need 1 <= r <= n and l >= 1");
    Crystal c = affinize(n, rectangle(l, r), cap);
    for (int j = 0; j < n; ++j) {
        std::string why;
        if (!check_axioms(view(c, j), all_indices(n), &why))
            throw std::logic_error("build_kr: view " + std::to_string(j) + ": " + why);
    }
    return c;
}

// Number of bijections intertwining e_i (i=1..n-2) with e_{i+1} and shifting
// weights by tau_[1]: a product of factorials of component multiplicities.
static long long count_phi_candidates(const Crystal& c) {
    int n = c.n;
    if (n < 2) return 1;
    std::vector<int> lower, upper;
    for (int i = 1; i <= n - 2; ++i) lower.push_back(i);
    for (int i = 2; i <= n - 1; ++i) upper.push_back(i);
    auto keys = [&](const std::vector<int>& idx, bool shift) {
        std::map<Content, int> m;
        if (idx.empty()) {
            for (int b = 0; b < c.size(); ++b) {
                Content w = c.wt[b];
                if (shift) std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
                ++m[w];
            }
            return m;
        }
        for (const auto& C : decompose_normal(c, idx)) {
            if (C.sources != 1) return std::map<Content, int>{};
            Content w = c.wt[C.highest];
            if (shift) std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
            ++m[w];
        }
        return m;
    };
    auto from = keys(lower, true), to = keys(upper, false);
    if (from.empty() || from != to) return 0;
    long long count = 1;
    for (const auto& [w, m] : from)
        for (int k = 2; k <= m; ++k) count *= k;
    return count;
}

UniquenessReport verify_uniqueness(int n, const std::vector<int>& lambda0, int cap) {
    UniquenessReport rep;
    rep.n = n;
    for (int x : lambda0)
        if (x > 0) rep.lambda.push_back(x);
    rep.rectangular = !rep.lambda.empty() && std::all_of(rep.lambda.begin(), rep.lambda.end(), [&](int x) { return x == rep.lambda[0]; });
    Crystal base = build_crystal(n, rep.lambda, cap);
    auto pr = promotion_map(base);
    rep.promotion_order = perm_order(pr);
    rep.extendable = n >= 2 && n % rep.promotion_order == 0;
    if (!rep.extendable) {
        rep.note = "non-extendable: promotion order " + std::to_string(rep.promotion_order) + " != n";
        return rep;
    }
    Crystal c = affinize(n, rep.lambda, cap);
    std::string why;
    rep.views_ok = true;
    for (int j = 0; j < n; ++j)
        if (!check_axioms(view(c, j), all_indices(n), &why)) {
            rep.views_ok = false;
            rep.note = "view " + std::to_string(j) + ": " + why;
        }
    auto comps = decompose_normal(c);
    {
        // compare after removing full columns
        Content lam(rep.lambda.begin(), rep.lambda.end());
        lam.resize(n, 0);
        int last = lam.back();
        for (int& x : lam) x -= last;
        while (!lam.empty() && lam.back() == 0) lam.pop_back();
        rep.classical_iso = comps.size() == 1 && comps[0].normal && comps[0].lambda == lam;
    }
    rep.view1_normal = is_normal(view(c, 1), &why);
    auto phi = phi_operator(c, &why);
    rep.phi_equals_pr = !phi.empty() && phi == pr;
    rep.phi_candidates = count_phi_candidates(c);
    rep.pass = rep.views_ok && rep.classical_iso && rep.view1_normal && rep.phi_equals_pr && rep.phi_candidates == 1;
    if (!rep.pass && rep.note.empty()) rep.note = why;
    return rep;
}

}  // namespace krg
