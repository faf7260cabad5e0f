#include "krg/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace krg {

TorusElement TorusElement::make(std::vector<Scalar> c) {
    for (const auto& x : c)
        if (x.norm2() != 1) throw std::invalid_argument("torus entry " + x.str() + " is not of unit modulus");
    return TorusElement{std::move(c)};
}

std::vector<std::pair<int, int>> TorusElement::coincident_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (c[i] == c[j]) out.push_back({i, j});
    return out;
}

TorusElement TorusElement::normalized() const {
    TorusElement t = *this;
    Scalar inv = c[0].inv();
    for (auto& x : t.c) x *= inv;
    return t;
}

std::string TorusElement::str() const {
    std::string s = "diag(";
    for (int a = 0; a < n(); ++a) s += (a ? ", " : "") + c[a].str();
    return s + ")";
}

TorusElement torus_from_point(const std::vector<Q>& chi, long max_den) {
    std::vector<Scalar> c;
    for (const auto& x : chi) {
        // fractional part in [0,1), exactly
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        Q f = x - Q(fl);
        if (f == frac(1, 2)) {
            c.push_back(Scalar(-1));
            continue;
        }
        // exp(2 pi i f) = circle_point(tan(pi f)); tan is rationalized, which keeps |c| = 1
        double t = std::tan(M_PI * f.get_d());
        c.push_back(circle_point(rationalize(t, max_den)));
    }
    return TorusElement::make(std::move(c));
}

static int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

Mat antisymmetrizer(int n, int a) {
    if (a < 1 || a > n) throw std::invalid_argument("antisymmetrizer: need 1 <= a <= n");
    int N = 1;
    for (int k = 0; k < a; ++k) N *= n;
    Mat A(N, N);
    std::vector<int> s(a);
    std::iota(s.begin(), s.end(), 0);
    Scalar w = Scalar(factorial(a)).inv();
    std::vector<int> p(a), q(a);
    do {
        Scalar sw = perm_sign(s) > 0 ? w : -w;
        for (int code = 0; code < N; ++code) {
            int x = code;
            for (int k = a - 1; k >= 0; --k) {
                p[k] = x % n;
                x /= n;
            }
            int qc = 0;
            for (int k = 0; k < a; ++k) qc = qc * n + p[s[k]];
            A(code, qc) += sw;
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return A;
}

std::vector<Mat> transfer_matrix(const TensorRep& rep, const Scalar& u) {
    int n = rep.n, dim = rep.dim;
    std::vector<Mat> T(static_cast<size_t>(n) * n, Mat(dim, dim));
    for (int a = 0; a < n; ++a) T[a * n + a] = Mat::identity(dim);
    for (int i = 0; i < rep.k(); ++i) {
        Scalar gap = u - rep.point(i);
        if (gap.is_zero()) throw std::domain_error("transfer_matrix: u hits the pole " + rep.point(i).str());
        Scalar s = gap.inv();
        std::vector<Mat> F(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) F[a * n + b] = rep.E(i, a, b) * s;
        std::vector<Mat> next = T;  // T * (1 + F)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (T[x * n + z].is_zero() || F[z * n + y].is_zero()) continue;
                    next[x * n + y] += T[x * n + z] * F[z * n + y];
                }
        T = std::move(next);
    }
    return T;
}

Mat tau_eval(int a, const TorusElement& C, const TensorRep& rep, const Scalar& u) {
    int n = rep.n;
    if (a < 1 || a > n) throw std::invalid_argument("tau_eval: need 1 <= a <= n");
    if (C.n() != n) throw std::invalid_argument("tau_eval: torus rank mismatch");
    std::vector<std::vector<Mat>> T;
    for (int m = 0; m < a; ++m) T.push_back(transfer_matrix(rep, u - Scalar(m)));
    Mat acc(rep.dim, rep.dim);
    // p runs over tuples of distinct letters; tuples with repeats cancel in pairs
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 0);
    std::vector<int> p(a), q(a), s(a);
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> subset;
        for (int x = 0; x < n; ++x)
            if (pick[x]) subset.push_back(x);
        std::vector<int> ord = subset;
        do {
            p = ord;
            std::iota(s.begin(), s.end(), 0);
            do {
                Scalar coef(perm_sign(s));
                for (int k = 0; k < a; ++k) {
                    q[k] = p[s[k]];
                    coef *= C.c[q[k]];
                }
                Mat term = T[0][q[0] * n + p[0]];
                for (int k = 1; k < a && !term.is_zero(); ++k) term = term * T[k][q[k] * n + p[k]];
                if (!term.is_zero()) acc.axpy(coef, term);
            } while (std::next_permutation(s.begin(), s.end()));
        } while (std::next_permutation(ord.begin(), ord.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    acc *= Scalar(factorial(a)).inv();
    return acc;
}

std::vector<Mat> BetheFamily::mats() const {
    std::vector<Mat> out;
    for (const auto& s : samples) out.push_back(s.m);
    for (const auto& m : extra) out.push_back(m);
    return out;
}

int bethe_degree_bound(int n, int k) { return n * k; }

std::vector<Scalar> sample_grid(const TensorRep& rep, int count) {
    std::vector<Scalar> out;
    Q bump = frac(1, 11);
    for (int j = 0; j < count; ++j) {
        Scalar u(frac(3 * j + 1, 5));
        for (;;) {
            bool clash = false;
            for (int i = 0; i < rep.k() && !clash; ++i)
                for (int m = 0; m < rep.n && !clash; ++m)
                    if (u - Scalar(m) == rep.point(i)) clash = true;
            if (!clash) break;
            u += Scalar(bump);
        }
        out.push_back(u);
    }
    return out;
}

BetheFamily bethe_family(const TorusElement& C, const TensorRep& rep, int grid) {
    int bound = bethe_degree_bound(rep.n, rep.k());
    if (grid <= bound + 1) grid = bound + 2;
    BetheFamily fam;
    fam.C = C;
    for (const auto& u : sample_grid(rep, grid))
        for (int a = 1; a <= rep.n; ++a) fam.samples.push_back({a, u, tau_eval(a, C, rep, u)});
    return fam;
}

BetheCertificate bethe_commuting_certificate(const BetheFamily& fam, const TensorRep& rep) {
    BetheCertificate cert;
    cert.degree_bound = bethe_degree_bound(rep.n, rep.k());
    std::vector<Scalar> pts;
    for (const auto& s : fam.samples)
        if (std::find(pts.begin(), pts.end(), s.u) == pts.end()) pts.push_back(s.u);
    cert.grid = static_cast<int>(pts.size());
    for (const auto& u : pts) cert.sample_points.push_back(u.str());
    if (cert.grid <= cert.degree_bound) {
        cert.pass = false;
        cert.witnesses.push_back("grid of " + std::to_string(cert.grid) + " points does not exceed the degree bound " +
                                 std::to_string(cert.degree_bound));
    }
    auto name = [&](size_t x) {
        if (x < fam.samples.size())
            return "tau_" + std::to_string(fam.samples[x].a) + "(" + fam.samples[x].u.str() + ")";
        size_t e = x - fam.samples.size();
        return e < fam.extra_tags.size() ? fam.extra_tags[e] : "extra_" + std::to_string(e);
    };
    auto ms = fam.mats();
    for (size_t x = 0; x < ms.size(); ++x) {
        for (size_t y = x + 1; y < ms.size(); ++y) {
            ++cert.checked;
            if (!(ms[x] * ms[y] == ms[y] * ms[x])) {
                cert.pass = false;
                if (cert.witnesses.size() < 8) cert.witnesses.push_back("[" + name(x) + ", " + name(y) + "] != 0");
            }
        }
        if (!rep.is_normal(ms[x])) {
            cert.all_normal = false;
            if (cert.non_normal.size() < 8) cert.non_normal.push_back(name(x));
        }
    }
    return cert;
}

BetheFamily wall_bethe_family(const TorusElement& C0, std::pair<int, int> pair, const TensorRep& rep, int grid) {
    auto pairs = C0.coincident_pairs();
    if (pairs.size() != 1) throw std::invalid_argument("wall_bethe_family: C0 must have exactly one coincident pair");
    auto [i, j] = pair;
    if (std::minmax(i, j) != std::minmax(pairs[0].first, pairs[0].second))
        throw std::invalid_argument("wall_bethe_family: the pair does not match the coincidence of C0");
    BetheFamily fam = bethe_family(C0, rep, grid);
    fam.wall_pair = pair;
    fam.extra.push_back(rep.total(i, i) - rep.total(j, j));
    fam.extra_tags.push_back("Delta(h_" + std::to_string(i + 1) + std::to_string(j + 1) + ")");
    return fam;
}

// ---------------- degeneration ----------------

static Scalar truncated_exp(const Scalar& x, int order) {
    Scalar acc(1), term(1);
    for (int t = 1; t <= order; ++t) {
        term *= x;
        term *= Scalar(frac(1, t));
        acc += term;
    }
    return acc;
}

// pole of factor i at z_i/c + eps*d_i
static Scalar shifted_pole(const TensorRep& rep, int i, const Scalar& eps, const Scalar& c) {
    return rep.factors[i].z / c + eps * rep.factors[i].d;
}

ShiftCdetResult shift_cdet(const Scalar& eps, const Scalar& c, const std::vector<Q>& chi, const TensorRep& rep,
                           int taylor_order) {
    if (eps.is_zero() || c.is_zero()) throw std::invalid_argument("shift_cdet: eps and c must be nonzero");
    int n = rep.n, dim = rep.dim, k = rep.k();
    if (static_cast<int>(chi.size()) != n) throw std::invalid_argument("shift_cdet: chi must have n entries");
    ShiftCdetResult out;
    out.eps = eps;
    out.c = c;
    out.taylor_order = taylor_order;

    std::vector<Scalar> poles;
    for (int i = 0; i < k; ++i) poles.push_back(shifted_pole(rep, i, eps, c));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int m = -n; m <= n; ++m)
                if (i != j && poles[i] + Scalar(m) * eps == poles[j])
                    throw std::domain_error("shift_cdet: pole collision for this eps");

    // T(u) = prod_i (1 + eps E^{(i)}/(u - p_i)) with operator entries
    std::vector<MatRatFun> T(static_cast<size_t>(n) * n, MatRatFun(dim));
    for (int a = 0; a < n; ++a) T[a * n + a] = MatRatFun::identity(dim);
    for (int i = 0; i < k; ++i) {
        std::vector<MatRatFun> next = T;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (T[x * n + z].is_zero()) continue;
                    Mat e = rep.E(i, z, y);
                    if (e.is_zero()) continue;
                    next[x * n + y] = next[x * n + y] + T[x * n + z] * MatRatFun::simple(eps * e, poles[i]);
                }
        T = std::move(next);
    }

    std::vector<std::vector<ShiftOpPoly>> M(n, std::vector<ShiftOpPoly>(n));
    ShiftOpPoly S = ShiftOpPoly::shift(dim, eps);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            M[a][b] = S * ShiftOpPoly::mult(T[a * n + b], eps);
            M[a][b].dim = dim;
            if (a == b) M[a][b] = M[a][b] - ShiftOpPoly::mult(MatRatFun::identity(dim, truncated_exp(-eps * Scalar(chi[a]), taylor_order)), eps);
        }

    ShiftOpPoly acc(dim, eps);
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        ShiftOpPoly term = M[s[0]][0];
        for (int col = 1; col < n; ++col) term = term * M[s[col]][col];
        acc = perm_sign(s) > 0 ? acc + term : acc - term;
    } while (std::next_permutation(s.begin(), s.end()));
    out.op = acc;

    Scalar scale(1);
    for (int t = 0; t < n; ++t) scale *= eps;
    scale = scale.inv();

    for (int kk = 0; kk <= n; ++kk) {
        MatRatFun bk = scale * acc.diff_coeff(kk);
        for (int i = 0; i < k; ++i) {
            Scalar centre = rep.factors[i].z / c;
            for (int l = 0; l <= kk; ++l) {
                Mat r(dim, dim);
                // (u - centre)^l = sum_s C(l,s) (q - centre)^{l-s} (u - q)^s around each pole q of the cluster
                for (int j = 0; j <= n; ++j) {
                    Scalar q = poles[i] + Scalar(j) * eps;
                    if (bk.pole_mult(q) == 0) continue;
                    Scalar off = q - centre;
                    for (int t = 0; t <= l; ++t) {
                        Scalar w(binomial(l, t));
                        for (int e = 0; e < l - t; ++e) w *= off;
                        r.axpy(w, residue(bk, q, t));
                    }
                }
                out.residues.push_back({r, kk, i, l, "r_{" + std::to_string(kk) + ",z" + std::to_string(i + 1) + "," + std::to_string(l) + "}"});
            }
        }
    }

    double tail = 0;
    for (const auto& x : chi) {
        double ax = std::fabs((eps * Scalar(x)).to_complex().real()) + std::fabs((eps * Scalar(x)).to_complex().imag());
        double t = std::pow(ax, taylor_order + 1) / std::tgamma(taylor_order + 2.0) * std::exp(ax);
        tail = std::max(tail, t);
    }
    out.tail_bound = tail * std::pow(std::abs(eps.to_complex()), -n);
    return out;
}

DegenerationReport degeneration(const std::vector<Scalar>& eps_list, const Scalar& c, const std::vector<Q>& chi,
                                const TensorRep& rep, int taylor_order) {
    DegenerationReport rep_out;
    rep_out.limit_convention = "cdet(L_{z/c}(u) - d_u + chi)";
    std::vector<TensorFactor> lim;
    for (const auto& f : rep.factors) lim.push_back({f.rep, f.z / c, Scalar(0)});
    GaudinConfig cfg{build_tensor(lim), chi};
    DiffOpPoly g = gaudin_cdet(cfg, -1);
    int n = rep.n;
    std::vector<Mat> target;
    for (int kk = 0; kk <= n; ++kk) {
        MatRatFun bk = g.coeff(kk);
        for (int i = 0; i < rep.k(); ++i)
            for (int l = 0; l <= kk; ++l) target.push_back(residue(bk, cfg.z(i), l));
    }
    double prev = 0;
    bool ok = eps_list.size() >= 2;
    for (size_t e = 0; e < eps_list.size(); ++e) {
        ShiftCdetResult sc = shift_cdet(eps_list[e], c, chi, rep, taylor_order);
        double err = 0;
        for (size_t t = 0; t < target.size(); ++t) err = std::max(err, max_abs(sc.residues[t].m - target[t]));
        DegenerationRow row{eps_list[e], err, 0};
        if (e > 0) {
            row.ratio = prev > 0 ? err / prev : 0;
            if (std::fabs(row.ratio - rep_out.ratio_target) > rep_out.ratio_tol) ok = false;
        }
        prev = err;
        rep_out.rows.push_back(row);
    }
    rep_out.pass = ok;
    return rep_out;
}

}  // namespace krg
