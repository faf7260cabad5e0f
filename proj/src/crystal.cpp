#include "krg/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace krg {

int Crystal::find(const std::string& label) const {
    for (int b = 0; b < size(); ++b)
        if (labels[b] == label) return b;
    return -1;
}

int Crystal::find(const Tableau& t) const {
    for (int b = 0; b < static_cast<int>(tableaux.size()); ++b)
        if (tableaux[b] == t) return b;
    return -1;
}

void Crystal::init_ops(int count) {
    e.assign(n, std::vector<int>(count, -1));
    f.assign(n, std::vector<int>(count, -1));
}

std::vector<int> canonical_weight(const Content& c) {
    if (c.empty()) return {};
    int m = *std::min_element(c.begin(), c.end());
    std::vector<int> out(c);
    for (int& x : out) x -= m;
    return out;
}

Content alpha(int n, int i) {
    Content a(n, 0);
    int p = i == 0 ? n - 1 : i - 1;     // raised coordinate
    int q = i == 0 ? 0 : i;             // lowered coordinate
    a[p] += 1;
    a[q] -= 1;
    return a;
}

std::vector<int> classical_indices(int n) {
    std::vector<int> v;
    for (int i = 1; i < n; ++i) v.push_back(i);
    return v;
}

std::pair<int, int> string_data(const Crystal& c, int i, int b) {
    int eps = 0, phi = 0;
    for (int x = c.e[i][b]; x >= 0; x = c.e[i][x]) {
        ++eps;
        if (eps > c.size()) throw std::logic_error("string_data: e-cycle");
    }
    for (int x = c.f[i][b]; x >= 0; x = c.f[i][x]) {
        ++phi;
        if (phi > c.size()) throw std::logic_error("string_data: f-cycle");
    }
    return {eps, phi};
}

static bool shift_matches(const Content& from, const Content& to, const Content& a) {
    // to - from - a must be a multiple of the all-ones vector
    int d0 = to[0] - from[0] - a[0];
    for (size_t k = 1; k < a.size(); ++k)
        if (to[k] - from[k] - a[k] != d0) return false;
    return true;
}

bool check_axioms(const Crystal& c, const std::vector<int>& indices, std::string* why) {
    for (int i : indices) {
        Content a = alpha(c.n, i);
        for (int b = 0; b < c.size(); ++b) {
            int x = c.e[i][b];
            if (x >= 0) {
                if (c.f[i][x] != b) {
                    if (why) *why = "e/f pairing fails for index " + std::to_string(i) + " at " + c.labels[b];
                    return false;
                }
                if (!shift_matches(c.wt[b], c.wt[x], a)) {
                    if (why) *why = "weight shift fails for e_" + std::to_string(i) + " at " + c.labels[b];
                    return false;
                }
            }
            int y = c.f[i][b];
            if (y >= 0 && c.e[i][y] != b) {
                if (why) *why = "f/e pairing fails for index " + std::to_string(i) + " at " + c.labels[b];
                return false;
            }
        }
    }
    return true;
}

std::vector<Component> decompose_normal(const Crystal& c, const std::vector<int>& indices0) {
    std::vector<int> indices = indices0.empty() ? classical_indices(c.n) : indices0;
    std::vector<int> comp(c.size(), -1);
    std::vector<Component> out;
    for (int s = 0; s < c.size(); ++s) {
        if (comp[s] >= 0) continue;
        Component C;
        std::deque<int> q{s};
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int b = q.front();
            q.pop_front();
            C.members.push_back(b);
            for (int i : indices)
                for (int x : {c.e[i][b], c.f[i][b]})
                    if (x >= 0 && comp[x] < 0) {
                        comp[x] = static_cast<int>(out.size());
                        q.push_back(x);
                    }
        }
        std::sort(C.members.begin(), C.members.end());
        C.size = static_cast<int>(C.members.size());
        for (int b : C.members) {
            bool src = true;
            for (int i : indices)
                if (c.e[i][b] >= 0) src = false;
            if (src) {
                if (C.sources == 0) C.highest = b;
                ++C.sources;
            }
        }
        out.push_back(std::move(C));
    }

    bool full = indices == classical_indices(c.n);
    for (auto& C : out) {
        if (C.sources != 1) continue;
        const Content& w = c.wt[C.highest];
        Content lam = w;
        bool dominant = true;
        for (size_t k = 1; k < lam.size(); ++k)
            if (lam[k] > lam[k - 1]) dominant = false;
        if (!dominant) continue;
        int last = lam.empty() ? 0 : lam.back();
        for (int& x : lam) x -= last;
        while (!lam.empty() && lam.back() == 0) lam.pop_back();
        C.lambda = lam;
        if (!full) continue;
        // isomorphism test against B_lambda by simultaneous traversal
        Crystal B = build_crystal(c.n, lam);
        if (B.size() != C.size) continue;
        std::map<int, int> m;
        std::vector<int> used(B.size(), 0);
        m[C.highest] = 0;
        used[0] = 1;
        std::deque<int> q{C.highest};
        bool ok = true;
        while (!q.empty() && ok) {
            int x = q.front();
            q.pop_front();
            int y = m[x];
            for (int i : indices)
                for (int dir = 0; dir < 2 && ok; ++dir) {
                    int xs = dir ? c.f[i][x] : c.e[i][x];
                    int ys = dir ? B.f[i][y] : B.e[i][y];
                    if ((xs < 0) != (ys < 0)) {
                        ok = false;
                        break;
                    }
                    if (xs < 0) continue;
                    auto it = m.find(xs);
                    if (it == m.end()) {
                        if (used[ys]) {
                            ok = false;
                            break;
                        }
                        m[xs] = ys;
                        used[ys] = 1;
                        q.push_back(xs);
                    } else if (it->second != ys) {
                        ok = false;
                    }
                }
        }
        C.normal = ok && static_cast<int>(m.size()) == C.size;
    }
    return out;
}

bool is_normal(const Crystal& c, std::string* why) {
    for (const auto& C : decompose_normal(c)) {
        if (!C.normal) {
            if (why)
                *why = "component of size " + std::to_string(C.size) + " with " + std::to_string(C.sources) +
                       " sources is not a highest-weight crystal";
            return false;
        }
    }
    return true;
}

Crystal view(const Crystal& c, int j) {
    int n = c.n;
    j = ((j % n) + n) % n;
    Crystal v = c;
    for (int b = 0; b < c.size(); ++b)
        for (int a = 0; a < n; ++a) v.wt[b][(a + j) % n] = c.wt[b][a];
    for (int i = 0; i < n; ++i) {
        int src = ((i - j) % n + n) % n;
        v.e[i] = c.e[src];
        v.f[i] = c.f[src];
    }
    return v;
}

std::vector<int> schutzenberger(const Crystal& c, int lo, int hi, std::string* why) {
    std::vector<int> idx;
    for (int i = lo; i <= hi; ++i) idx.push_back(i);
    std::vector<int> xi(c.size(), -1);
    if (idx.empty()) {
        for (int b = 0; b < c.size(); ++b) xi[b] = b;
        return xi;
    }
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return std::vector<int>{};
    };
    for (const auto& C : decompose_normal(c, idx)) {
        int sink = -1, sinks = 0;
        for (int b : C.members) {
            bool s = true;
            for (int i : idx)
                if (c.f[i][b] >= 0) s = false;
            if (s) {
                sink = b;
                ++sinks;
            }
        }
        if (C.sources != 1 || sinks != 1) return fail("component without a unique source and sink");
        xi[C.highest] = sink;
        std::deque<int> q{C.highest};
        while (!q.empty()) {
            int p = q.front();
            q.pop_front();
            for (int i : idx) {
                int ch = c.f[i][p];
                if (ch < 0 || xi[ch] >= 0) continue;
                int img = c.e[lo + hi - i][xi[p]];
                if (img < 0) return fail("f-word from the source has no matching e-word from the sink");
                xi[ch] = img;
                q.push_back(ch);
            }
        }
    }
    // every defining relation, not only the spanning-tree ones
    for (int b = 0; b < c.size(); ++b) {
        if (xi[b] < 0) return fail("unreached element");
        for (int i : idx) {
            int s = lo + hi - i;
            int fb = c.f[i][b], eb = c.e[i][b];
            int lhs_f = fb >= 0 ? xi[fb] : -1, rhs_f = c.e[s][xi[b]];
            int lhs_e = eb >= 0 ? xi[eb] : -1, rhs_e = c.f[s][xi[b]];
            if (lhs_f != rhs_f || lhs_e != rhs_e) return fail("relation xi f_i = e_{lo+hi-i} xi fails");
        }
    }
    for (int b = 0; b < c.size(); ++b)
        if (xi[xi[b]] != b) return fail("xi is not an involution");
    return xi;
}

}  // namespace krg
