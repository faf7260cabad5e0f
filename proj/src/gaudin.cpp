#include "krg/gaudin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace krg {

std::vector<Mat> CommutingFamily::mats() const {
    std::vector<Mat> out;
    for (const auto& g : gens) out.push_back(g.m);
    return out;
}

std::vector<MatRatFun> lax_matrix(const GaudinConfig& cfg) {
    const TensorRep& rep = cfg.rep;
    int n = rep.n;
    std::vector<MatRatFun> L(static_cast<size_t>(n) * n, MatRatFun(rep.dim));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < rep.k(); ++i)
                L[a * n + b] = L[a * n + b] + MatRatFun::simple(rep.E(i, a, b), cfg.z(i));
    return L;
}

OpMatrix gaudin_operator_matrix(const GaudinConfig& cfg, int chi_sign) {
    int n = cfg.n(), dim = cfg.rep.dim;
    if (static_cast<int>(cfg.chi.size()) != n) throw std::invalid_argument("chi must have n entries");
    auto L = lax_matrix(cfg);
    OpMatrix M(n, std::vector<DiffOpPoly>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            MatRatFun r = L[a * n + b];
            if (a == b) r = r - MatRatFun::identity(dim, Scalar(Q(chi_sign) * cfg.chi[a]));
            M[a][b] = DiffOpPoly::mult(r);
            M[a][b].dim = dim;
            if (a == b) M[a][b] = M[a][b] - DiffOpPoly::d(dim);
        }
    return M;
}

static int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

DiffOpPoly cdet(const OpMatrix& M) {
    int n = static_cast<int>(M.size());
    int dim = M[0][0].dim;
    DiffOpPoly acc(dim);
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        DiffOpPoly term = M[s[0]][0];
        for (int c = 1; c < n; ++c) term = term * M[s[c]][c];
        acc = perm_sign(s) > 0 ? acc + term : acc - term;
    } while (std::next_permutation(s.begin(), s.end()));
    return acc;
}

DiffOpPoly antisym_trace(const OpMatrix& M) {
    int n = static_cast<int>(M.size());
    int dim = M[0][0].dim;
    DiffOpPoly acc(dim);
    std::vector<int> p(n, 0);
    long total = 1;
    for (int k = 0; k < n; ++k) total *= n;
    for (long code = 0; code < total; ++code) {
        long x = code;
        for (int k = 0; k < n; ++k) {
            p[k] = static_cast<int>(x % n);
            x /= n;
        }
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        do {
            DiffOpPoly term = M[p[s[0]]][p[0]];
            for (int k = 1; k < n; ++k) term = term * M[p[s[k]]][p[k]];
            acc = perm_sign(s) > 0 ? acc + term : acc - term;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return Scalar(factorial(n)).inv() * acc;
}

bool is_manin(const OpMatrix& M, std::string* why) {
    int n = static_cast<int>(M.size());
    for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    DiffOpPoly lhs = M[p][l] * M[r][s] - M[r][s] * M[p][l];
                    DiffOpPoly rhs = M[r][l] * M[p][s] - M[p][s] * M[r][l];
                    if (!(lhs == rhs)) {
                        if (why)
                            *why = "Manin relation fails at (p,l,r,s) = (" + std::to_string(p + 1) + "," + std::to_string(l + 1) +
                                   "," + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")";
                        return false;
                    }
                }
    return true;
}

DiffOpPoly gaudin_cdet(const GaudinConfig& cfg, int chi_sign) {
    if (cfg.n() > cfg.cap_n) throw std::length_error("gaudin_cdet: n exceeds the cap");
    return cdet(gaudin_operator_matrix(cfg, chi_sign));
}

std::string check_commuting(const std::vector<Mat>& ms) {
    for (size_t x = 0; x < ms.size(); ++x)
        for (size_t y = x + 1; y < ms.size(); ++y)
            if (!(ms[x] * ms[y] == ms[y] * ms[x])) return "generators " + std::to_string(x) + " and " + std::to_string(y) + " do not commute";
    return {};
}

CommutingFamily residue_generators(const GaudinConfig& cfg, const DiffOpPoly& op, const std::string& convention) {
    CommutingFamily fam;
    fam.convention = convention;
    int n = cfg.n();
    for (int k = 0; k <= n; ++k) {
        MatRatFun bk = op.coeff(k);
        for (int i = 0; i < cfg.rep.k(); ++i)
            for (int l = 0; l <= k; ++l) {
                Mat r = residue(bk, cfg.z(i), l);
                if (r.is_zero()) continue;
                fam.gens.push_back({r, k, i, l, "res_{z" + std::to_string(i + 1) + "} (u-z" + std::to_string(i + 1) + ")^" + std::to_string(l) + " b_" + std::to_string(k)});
            }
    }
    auto bad = check_commuting(fam.mats());
    if (!bad.empty()) throw std::logic_error("residue_generators: " + bad);
    fam.rank = span_rank(fam.mats());
    return fam;
}

CommutingFamily residue_generators(const GaudinConfig& cfg) {
    return residue_generators(cfg, gaudin_cdet(cfg, +1), "cdet(L(u) - d_u - chi)");
}

std::vector<std::pair<int, int>> coincident_pairs(const std::vector<Q>& chi) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < chi.size(); ++i)
        for (size_t j = i + 1; j < chi.size(); ++j)
            if (chi[i] == chi[j]) out.push_back({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

InvarianceReport invariance_check(const CommutingFamily& fam, const TensorRep& rep, const std::vector<Q>& chi) {
    InvarianceReport out;
    int n = rep.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (chi[a] != chi[b]) continue;
            Mat x = rep.total(a, b);
            std::string name = "Delta(E" + std::to_string(a + 1) + std::to_string(b + 1) + ")";
            out.checked.push_back(name);
            for (size_t g = 0; g < fam.gens.size(); ++g)
                if (!(fam.gens[g].m * x == x * fam.gens[g].m)) {
                    out.pass = false;
                    out.failures.push_back(name + " vs " + fam.gens[g].tag);
                }
        }
    return out;
}

CommutingFamily wall_family(const GaudinConfig& cfg) {
    auto pairs = coincident_pairs(cfg.chi);
    if (pairs.size() != 1) throw std::invalid_argument("wall_family: chi0 must have exactly one coincident pair");
    auto [i, j] = pairs[0];
    CommutingFamily fam = residue_generators(cfg);
    Generator h;
    h.m = cfg.rep.total(i, i) - cfg.rep.total(j, j);
    h.tag = "Delta(h_" + std::to_string(i + 1) + std::to_string(j + 1) + ")";
    fam.gens.push_back(h);
    auto bad = check_commuting(fam.mats());
    if (!bad.empty()) throw std::logic_error("wall_family: " + bad);
    fam.rank = span_rank(fam.mats());
    return fam;
}

}  // namespace krg
