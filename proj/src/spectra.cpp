#include "krg/spectra.hpp"

#include "krg/alcove.hpp"
#include "krg/promotion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace krg {

namespace {

template <class R>
R to_real(const Q& q) {
    if constexpr (std::is_same_v<R, double>) {
        return q.get_d();
    } else {
        mpf_class f(q, 256);
        mp_exp_t e;
        std::string digits = f.get_str(e, 10, 40);
        if (digits.empty()) return R(0);
        bool neg = digits[0] == '-';
        if (neg) digits.erase(0, 1);
        std::string s = (neg ? "-0." : "0.") + digits + "e" + std::to_string(e);
        return std::stold(s);
    }
}

template <class R>
struct Diag {
    using C = std::complex<R>;
    using MatX = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;

    static MatX convert(const Mat& m, const std::vector<R>& root) {
        MatX out(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                const Scalar& x = m(i, j);
                out(i, j) = x.is_zero() ? C(0) : C(to_real<R>(x.re), to_real<R>(x.im)) * (root[i] / root[j]);
            }
        return out;
    }

    static R maxabs(const MatX& m) {
        R best = 0;
        for (Eigen::Index i = 0; i < m.size(); ++i) best = std::max(best, std::abs(m(i)));
        return best;
    }

    // split the columns of Qb into clusters of equal eigenvalue of op restricted to span(Qb)
    static std::vector<MatX> split(const MatX& Qb, const MatX& op, R thr) {
        MatX B = Qb.adjoint() * op * Qb;
        Eigen::ComplexSchur<MatX> schur(B);
        MatX U = schur.matrixU();
        MatX T = schur.matrixT();
        int d = static_cast<int>(B.rows());
        std::vector<int> idx(d);
        std::iota(idx.begin(), idx.end(), 0);
        // single linkage on the eigenvalues
        std::vector<int> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (std::abs(T(a, a) - T(b, b)) <= thr) parent[find(a)] = find(b);
        std::map<int, std::vector<int>> groups;
        for (int a = 0; a < d; ++a) groups[find(a)].push_back(a);
        std::vector<MatX> out;
        MatX W = Qb * U;
        for (auto& [root, cols] : groups) {
            MatX blk(W.rows(), static_cast<Eigen::Index>(cols.size()));
            for (size_t c = 0; c < cols.size(); ++c) blk.col(static_cast<Eigen::Index>(c)) = W.col(cols[c]);
            out.push_back(blk);
        }
        return out;
    }

    static JointSpectrum run(const std::vector<Mat>& members, const std::vector<Q>& gram, const std::vector<Content>& weights,
                             double tol, std::uint64_t seed) {
        JointSpectrum js;
        js.tol = tol;
        int dim = static_cast<int>(gram.size());
        js.dim = dim;
        std::vector<R> root(dim);
        for (int k = 0; k < dim; ++k) root[k] = std::sqrt(to_real<R>(gram[k]));
        std::vector<MatX> M;
        std::vector<R> scale;
        for (const auto& m : members) {
            if (m.rows != dim || m.cols != dim) throw std::invalid_argument("joint_diagonalize: member of the wrong size");
            M.push_back(convert(m, root));
            R s = maxabs(M.back());
            scale.push_back(s > 0 ? s : R(1));
        }
        for (auto s : scale) js.scales.push_back(static_cast<double>(s));

        for (size_t m = 0; m < M.size(); ++m) {
            MatX c = M[m] * M[m].adjoint() - M[m].adjoint() * M[m];
            if (maxabs(c) > R(tol) * scale[m] * scale[m] * dim) js.normal = false;
        }

        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        MatX X = MatX::Zero(dim, dim);
        for (size_t m = 0; m < M.size(); ++m) X += R(coef(rng)) * M[m] / scale[m];

        MatX P(dim, dim), Pinv(dim, dim);
        if (js.normal) {
            std::vector<MatX> blocks{MatX::Identity(dim, dim)};
            std::vector<MatX> ops{X};
            for (size_t m = 0; m < M.size(); ++m) ops.push_back(M[m] / scale[m]);
            for (const auto& op : ops) {
                R thr = R(tol) * std::max(R(1), maxabs(op));
                std::vector<MatX> next;
                for (const auto& b : blocks) {
                    if (b.cols() == 1) {
                        next.push_back(b);
                        continue;
                    }
                    auto parts = split(b, op, thr);
                    next.insert(next.end(), parts.begin(), parts.end());
                }
                blocks = std::move(next);
            }
            int c = 0;
            for (const auto& b : blocks)
                for (Eigen::Index k = 0; k < b.cols(); ++k) P.col(c++) = b.col(k);
            Pinv = P.adjoint();
        } else {
            Eigen::ComplexEigenSolver<MatX> es(X);
            P = es.eigenvectors();
            for (int k = 0; k < dim; ++k) P.col(k).normalize();
            Pinv = P.inverse();
        }

        js.lines.resize(dim);
        R resid = 0;
        for (size_t m = 0; m < M.size(); ++m) {
            MatX D = Pinv * M[m] * P;
            MatX diag = MatX::Zero(dim, dim);
            for (int k = 0; k < dim; ++k) diag(k, k) = D(k, k);
            resid = std::max(resid, maxabs(M[m] - P * diag * Pinv) / scale[m]);
            for (int k = 0; k < dim; ++k) js.lines[k].values.push_back(cplx(static_cast<double>(D(k, k).real()), static_cast<double>(D(k, k).imag())));
        }
        js.residual = static_cast<double>(resid);
        for (int k = 0; k < dim; ++k) {
            auto& line = js.lines[k];
            for (int t = 0; t < dim; ++t) line.v.push_back(cplx(static_cast<double>(P(t, k).real()), static_cast<double>(P(t, k).imag())));
            if (!weights.empty()) {
                int n = static_cast<int>(weights[0].size());
                line.weight.assign(n, 0.0);
                for (int t = 0; t < dim; ++t) {
                    double p = std::norm(line.v[t]);
                    for (int a = 0; a < n; ++a) line.weight[a] += p * weights[t][a];
                }
                double vn = 0;
                for (auto& x : line.v) vn += std::norm(x);
                for (auto& w : line.weight) {
                    w /= vn;
                    if (std::fabs(w - std::round(w)) > 1e-6) js.weights_integral = false;
                }
            }
        }
        double gap = dim > 1 ? INFINITY : 0;
        for (int x = 0; x < dim; ++x)
            for (int y = x + 1; y < dim; ++y) {
                double d = 0;
                for (size_t m = 0; m < M.size(); ++m)
                    d = std::max(d, std::abs(js.lines[x].values[m] - js.lines[y].values[m]) / js.scales[m]);
                gap = std::min(gap, d);
            }
        js.min_gap = gap;
        js.simple = dim <= 1 || gap > tol;
        return js;
    }
};

}  // namespace

JointSpectrum joint_diagonalize(const std::vector<Mat>& members, const std::vector<Q>& gram,
                                const std::vector<Content>& weights, double tol, std::uint64_t seed) {
    if (members.empty()) throw std::invalid_argument("joint_diagonalize: empty family");
    JointSpectrum js = Diag<double>::run(members, gram, weights, tol, seed);
    if (js.min_gap > tol / 10 && js.min_gap < tol * 10) {
        JointSpectrum ext = Diag<long double>::run(members, gram, weights, tol, seed);
        ext.retries = 1;
        ext.precision = "long double";
        return ext;
    }
    return js;
}

JointSpectrum joint_diagonalize(const std::vector<Mat>& members, const TensorRep& rep, double tol, std::uint64_t seed) {
    return joint_diagonalize(members, rep.gram, rep.weights, tol, seed);
}

StringStats SpectralStrings::stats() const {
    StringStats s;
    for (const auto& h : strings) ++s[{static_cast<int>(h.lines.size()), h.source_weight}];
    return s;
}

SpectralStrings wall_strings(const JointSpectrum& js, int h_index, double tol) {
    SpectralStrings out;
    int dim = js.dim;
    if (dim == 0) return out;
    int members = static_cast<int>(js.lines[0].values.size());
    if (h_index < 0 || h_index >= members) throw std::invalid_argument("wall_strings: bad h index");
    auto dist = [&](int x, int y) {
        double d = 0;
        for (int m = 0; m < members; ++m) {
            if (m == h_index) continue;
            d = std::max(d, std::abs(js.lines[x].values[m] - js.lines[y].values[m]) / js.scales[m]);
        }
        return d;
    };
    // eigenvalues of one eigenspace agree to rounding; distinct ones are far apart
    double thr = std::sqrt(tol);
    std::vector<int> parent(dim);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < dim; ++x)
        for (int y = x + 1; y < dim; ++y)
            if (dist(x, y) <= thr) parent[find(x)] = find(y);
    out.separation = INFINITY;
    for (int x = 0; x < dim; ++x)
        for (int y = x + 1; y < dim; ++y) {
            double d = dist(x, y);
            if (find(x) == find(y))
                out.spread = std::max(out.spread, d);
            else
                out.separation = std::min(out.separation, d);
        }
    if (out.separation <= 100 * out.spread) {
        out.ok = false;
        out.problems.push_back("eigenspaces are not cleanly separated");
    }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < dim; ++x) groups[find(x)].push_back(x);
    double itol = std::max(1e-6, 100 * tol);
    for (auto& [root, idx] : groups) {
        HString s;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return js.lines[a].values[h_index].real() > js.lines[b].values[h_index].real();
        });
        s.lines = idx;
        for (int x : idx) {
            cplx h = js.lines[x].values[h_index];
            s.h.push_back(h.real());
            if (std::fabs(h.imag()) > itol || std::fabs(h.real() - std::round(h.real())) > itol) s.ok = false;
        }
        for (size_t t = 0; t + 1 < s.h.size(); ++t)
            if (std::lround(s.h[t]) - std::lround(s.h[t + 1]) != 2) s.ok = false;
        if (std::lround(s.h.front()) != -std::lround(s.h.back())) s.ok = false;
        if (!js.lines[idx[0]].weight.empty()) {
            Content w;
            for (double x : js.lines[idx[0]].weight) w.push_back(static_cast<int>(std::lround(x)));
            s.source_weight = canonical_weight(w);
        }
        if (!s.ok) {
            out.ok = false;
            std::string hs;
            for (double x : s.h) hs += (hs.empty() ? "" : ",") + std::to_string(x);
            out.problems.push_back("broken h-string {" + hs + "}");
        }
        out.strings.push_back(std::move(s));
    }
    std::sort(out.strings.begin(), out.strings.end(), [](const HString& a, const HString& b) {
        if (a.lines.size() != b.lines.size()) return a.lines.size() > b.lines.size();
        return a.source_weight < b.source_weight;
    });
    return out;
}

ComparisonReport compare_with_crystal(const std::vector<SpectralStrings>& per_wall, const std::vector<Content>& weights,
                                      const Crystal& comb) {
    ComparisonReport rep;
    rep.pass = true;
    for (int j = 0; j < static_cast<int>(per_wall.size()); ++j) {
        WallComparison w;
        w.j = j;
        w.spectral = per_wall[j].stats();
        w.combinatorial = string_statistics(comb, j);
        w.match = w.spectral == w.combinatorial;
        rep.pass = rep.pass && w.match;
        rep.walls.push_back(std::move(w));
    }
    std::map<std::vector<int>, int> a, b;
    for (const auto& w : weights) ++a[canonical_weight(w)];
    for (const auto& w : comb.wt) ++b[canonical_weight(w)];
    rep.weights_match = a == b;
    rep.pass = rep.pass && rep.weights_match;
    return rep;
}

TensorRep pipeline_rep(const PipelineConfig& cfg) {
    std::vector<TensorFactor> fs;
    int k = static_cast<int>(cfg.factors.size());
    for (int j = 0; j < k; ++j) {
        const auto& f = cfg.factors[j];
        fs.push_back({build_irrep(cfg.n, f.l, f.r), Scalar(Q(0), cfg.s * (k - j)), Scalar(normal_shift(cfg.n, f.l, f.r))});
    }
    return build_tensor(fs);
}

static std::string order_name(int k, bool reversed) {
    std::string s;
    for (int j = 0; j < k; ++j) {
        int idx = reversed ? k - j : j + 1;
        s += (j ? " (x) " : "") + std::string("B(z") + std::to_string(idx) + ")";
    }
    return s;
}

PipelineReport compare_pipeline(const PipelineConfig& cfg) {
    PipelineReport out;
    out.cfg = cfg;
    int n = cfg.n;
    if (cfg.factors.empty()) throw std::invalid_argument("compare_pipeline: no factors");
    TensorRep rep = pipeline_rep(cfg);
    out.strings.resize(n);
    std::vector<Content> weights;
    ExtAffineWeylElt id = ExtAffineWeylElt::identity(n);
    auto walls = walls_of(id);
    for (int jw = 1; jw <= n; ++jw) {
        AffinePoint chi = subregular_sample(id, jw);
        Wall w = walls[jw - 1];
        TorusElement C0 = torus_from_point(chi.x);
        BetheFamily fam = wall_bethe_family(C0, {w.i, w.j}, rep, cfg.grid);
        BetheCertificate cert = bethe_commuting_certificate(fam, rep);
        if (!cert.pass) out.certificates_ok = false;
        auto ms = fam.mats();
        JointSpectrum js = joint_diagonalize(ms, rep, cfg.tol, cfg.seed);
        SpectralStrings ss = wall_strings(js, static_cast<int>(ms.size()) - 1, cfg.tol);
        ss.j = jw % n;
        if (weights.empty())
            for (const auto& line : js.lines) {
                Content c;
                for (double x : line.weight) c.push_back(static_cast<int>(std::lround(x)));
                weights.push_back(c);
            }
        out.walls.push_back(w.str() + " chi0=" + chi.str() + " C0=" + C0.str());
        out.strings[jw % n] = std::move(ss);
    }
    std::vector<Crystal> fs;
    for (const auto& f : cfg.factors) fs.push_back(build_kr(n, f.l, f.r, cfg.cap));
    Crystal fwd = tensor_many(fs);
    std::reverse(fs.begin(), fs.end());
    Crystal rev = tensor_many(fs);
    out.weights = weights;
    out.forward = compare_with_crystal(out.strings, weights, fwd);
    out.forward.order = order_name(static_cast<int>(cfg.factors.size()), false);
    out.reversed = compare_with_crystal(out.strings, weights, rev);
    out.reversed.order = order_name(static_cast<int>(cfg.factors.size()), true);
    bool strings_ok = true;
    for (const auto& s : out.strings) strings_ok = strings_ok && s.ok;
    if (out.forward.pass && out.reversed.pass)
        out.matching_order = "both";
    else if (out.forward.pass)
        out.matching_order = out.forward.order;
    else if (out.reversed.pass)
        out.matching_order = out.reversed.order;
    else
        out.matching_order = "none";
    out.pass = strings_ok && out.certificates_ok && (out.forward.pass || out.reversed.pass);
    return out;
}

static Q threshold(const std::vector<ScanPoint>& pts, bool* eventually) {
    *eventually = !pts.empty() && pts.back().simple;
    if (!*eventually) return Q(-1);
    size_t k = pts.size();
    while (k > 0 && pts[k - 1].simple) --k;
    return pts[k].s;
}

ScanReport scan_simple_spectrum(const PipelineConfig& base, const TorusElement& C, const std::vector<Q>& s_grid) {
    ScanReport out;
    auto eval = [&](const Q& s) {
        PipelineConfig cfg = base;
        cfg.s = s;
        TensorRep rep;
        try {
            rep = pipeline_rep(cfg);
        } catch (const std::invalid_argument&) {
            return ScanPoint{s, 0.0, false};  // evaluation points collide
        }
        BetheFamily fam = bethe_family(C, rep, cfg.grid);
        JointSpectrum js = joint_diagonalize(fam.mats(), rep, cfg.tol, cfg.seed);
        return ScanPoint{s, js.min_gap, js.simple};
    };
    std::vector<Q> grid = s_grid;
    std::sort(grid.begin(), grid.end());
    Q step = 0;
    for (size_t t = 0; t + 1 < grid.size(); ++t) step = std::max(step, Q(grid[t + 1] - grid[t]));
    std::map<Q, ScanPoint> cache;
    for (const auto& s : grid) {
        auto p = eval(s);
        cache[s] = p;
        out.coarse.push_back(p);
    }
    for (size_t t = 0; t < grid.size(); ++t) {
        out.fine.push_back(cache[grid[t]]);
        if (t + 1 < grid.size()) {
            Q mid = (grid[t] + grid[t + 1]) / 2;
            out.fine.push_back(eval(mid));
        }
    }
    bool ec = false, ef = false;
    out.threshold_coarse = threshold(out.coarse, &ec);
    out.threshold_fine = threshold(out.fine, &ef);
    out.eventually_simple = ec && ef;
    Q diff = out.threshold_coarse - out.threshold_fine;
    if (diff < 0) diff = -diff;
    out.stable = out.eventually_simple && diff <= step;
    return out;
}

}  // namespace krg
