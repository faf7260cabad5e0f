// krgeom: KR crystals, Gaudin and Bethe families, and the crystal-vs-spectra
// comparison from the command line. Exit codes: 0 pass, 1 fail, 2 usage.
#include "krg/alcove.hpp"
#include "krg/bethe.hpp"
#include "krg/gaudin.hpp"
#include "krg/promotion.hpp"
#include "krg/report.hpp"
#include "krg/spectra.hpp"
#include "krg/tensor_crystal.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <random>
#include <sstream>

using namespace krg;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::string json_path, dot_path;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int cap = kDefaultCap;

    int n = 2;
    int k = 0;
    std::string kr, lambda, factors, crystal_factors;
    bool affine = false;
    std::string z, d, chi, c, eps = "1/8,1/16,1/32,1/64,1/128,1/256", cscale = "1", s = "4", s_grid, point, pair;
    int grid = 0, random = 0, taylor = 8;
    std::string family = "bethe";
    bool matrices = false;
};

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::vector<Q> rational_list(const std::string& s) {
    std::vector<Q> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_rational(tok));
    return out;
}

// "l,r;l,r;..."
std::vector<KRFactor> factor_list(const std::string& s) {
    std::vector<KRFactor> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        auto v = int_list(tok);
        if (v.size() != 2) throw UsageError("factor '" + tok + "' must be l,r");
        out.push_back({v[0], v[1]});
    }
    return out;
}

std::vector<KRFactor> resolve_factors(const Opts& o) {
    if (!o.factors.empty()) return factor_list(o.factors);
    int k = o.k > 0 ? o.k : 2;
    return std::vector<KRFactor>(k, KRFactor{1, 1});
}

// evaluation points: explicit --z, else imaginary (k-j) * s * i
TensorRep resolve_rep(const Opts& o, bool bethe_shifts) {
    auto fs = resolve_factors(o);
    int k = static_cast<int>(fs.size());
    std::vector<Scalar> z = o.z.empty() ? std::vector<Scalar>{} : parse_scalar_list(o.z);
    std::vector<Scalar> d = o.d.empty() ? std::vector<Scalar>{} : parse_scalar_list(o.d);
    if (!z.empty() && static_cast<int>(z.size()) != k) throw UsageError("--z needs one point per factor");
    if (!d.empty() && static_cast<int>(d.size()) != k) throw UsageError("--d needs one shift per factor");
    Q s = parse_rational(o.s);
    std::vector<TensorFactor> out;
    for (int j = 0; j < k; ++j) {
        Scalar zj = z.empty() ? (bethe_shifts ? Scalar(Q(0), s * (k - j)) : Scalar(j)) : z[j];
        Scalar dj = !d.empty() ? d[j] : (bethe_shifts ? Scalar(normal_shift(o.n, fs[j].l, fs[j].r)) : Scalar(0));
        out.push_back({build_irrep(o.n, fs[j].l, fs[j].r), zj, dj});
    }
    TensorRep rep = build_tensor(out);
    if (rep.dim > 512) throw UsageError("representation dimension " + std::to_string(rep.dim) + " exceeds the cap 512");
    return rep;
}

std::vector<Q> resolve_chi(const Opts& o) {
    if (!o.chi.empty()) {
        auto chi = rational_list(o.chi);
        if (static_cast<int>(chi.size()) != o.n) throw UsageError("--chi needs n entries");
        return chi;
    }
    return regular_sample(ExtAffineWeylElt::identity(o.n)).x;
}

TorusElement resolve_torus(const Opts& o) {
    if (!o.c.empty()) {
        auto c = parse_scalar_list(o.c);
        if (static_cast<int>(c.size()) != o.n) throw UsageError("--C needs n entries");
        return TorusElement::make(c);
    }
    return torus_from_point(resolve_chi(o));
}

std::vector<int> resolve_shape(const Opts& o, bool* rectangular) {
    *rectangular = false;
    if (!o.kr.empty()) {
        auto v = int_list(o.kr);
        if (v.size() != 2) throw UsageError("--kr must be l,r");
        *rectangular = true;
        return rectangle(v[0], v[1]);
    }
    if (!o.lambda.empty()) return int_list(o.lambda);
    throw UsageError("a crystal needs --kr l,r or --lambda");
}

json base_report(const std::string& cmd, const Opts& o) {
    json cfg = {{"command", cmd}, {"n", o.n}, {"seed", o.seed}, {"tol", o.tol}, {"cap", o.cap}};
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) cfg[key] = v;
    };
    put("kr", o.kr);
    put("lambda", o.lambda);
    put("factors", o.factors);
    put("z", o.z);
    put("d", o.d);
    put("chi", o.chi);
    put("C", o.c);
    put("pair", o.pair);
    if (o.k) cfg["k"] = o.k;
    return {{"config", cfg}};
}

int finish(const Opts& o, json report, bool pass) {
    report["pass"] = pass;
    if (!o.json_path.empty()) write_text(o.json_path, report.dump(2) + "\n");
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int cmd_crystal(const std::string& action, const Opts& o) {
    json rep = base_report("crystal " + action, o);
    if (action == "export" && o.dot_path.empty() && o.json_path.empty()) throw UsageError("export needs --dot or --json");
    bool rect = false;
    auto lam = resolve_shape(o, &rect);
    if (action == "verify") {
        UniquenessReport u = verify_uniqueness(o.n, lam, o.cap);
        rep["uniqueness"] = to_json(u);
        std::cout << "promotion order " << u.promotion_order << (u.extendable ? "" : " (non-extendable)") << "\n";
        if (!u.note.empty()) std::cout << u.note << "\n";
        return finish(o, rep, u.pass);
    }
    bool affine = rect && (o.affine || !o.kr.empty());
    if (o.affine && !rect) {
        int ord = promotion_order(o.n, lam, o.cap);
        if (ord != o.n) {
            rep["promotion_order"] = ord;
            std::cout << "non-extendable: promotion order " << ord << " != " << o.n << "\n";
            return finish(o, rep, false);
        }
    }
    Crystal c = affine ? build_kr(o.n, lam[0], static_cast<int>(lam.size()), o.cap) : build_crystal(o.n, lam, o.cap);
    std::vector<int> idx = classical_indices(o.n);
    if (c.affine) idx.insert(idx.begin(), 0);
    std::string why;
    bool ok = check_axioms(c, idx, &why);
    std::cout << "crystal of size " << c.size() << (c.affine ? " (affine)" : "") << "\n";
    if (!ok) std::cout << why << "\n";
    if (!o.dot_path.empty()) write_text(o.dot_path, to_dot(c));
    rep["crystal"] = to_json(c);
    rep["axioms"] = ok;
    return finish(o, rep, ok);
}

int cmd_tensor(const Opts& o) {
    json rep = base_report("tensor", o);
    auto fs = resolve_factors(o);
    std::vector<Crystal> cs;
    for (const auto& f : fs) cs.push_back(build_kr(o.n, f.l, f.r, o.cap));
    Crystal c = tensor_many(cs);
    std::vector<int> idx = classical_indices(o.n);
    idx.insert(idx.begin(), 0);
    std::string why;
    bool ok = check_axioms(c, idx, &why);
    json stats = json::array();
    for (int j = 0; j < o.n; ++j) stats.push_back({{"j", j}, {"strings", to_json(string_statistics(c, j))}});
    rep["string_statistics"] = stats;
    rep["crystal"] = to_json(c);
    rep["axioms"] = ok;
    std::cout << "tensor crystal of size " << c.size() << "\n";
    if (!ok) std::cout << why << "\n";
    if (!o.dot_path.empty()) write_text(o.dot_path, to_dot(c));
    return finish(o, rep, ok);
}

int cmd_alcove(const Opts& o) {
    json rep = base_report("alcove", o);
    if (!o.point.empty()) {
        auto a = AffinePoint::make(rational_list(o.point));
        auto cl = classify(a);
        rep["point"] = a.str();
        rep["classification"] = to_json(cl);
        if (cl.regular)
            std::cout << "regular, alcove of " << cl.w.str() << "\n";
        else
            std::cout << (cl.walls.size() == 1 ? "subregular" : "on " + std::to_string(cl.walls.size()) + " walls") << "\n";
        bool ok = !cl.regular || in_alcove(cl.w, a, false);
        return finish(o, rep, ok);
    }
    if (o.random <= 0) throw UsageError("alcove needs --point or --random N");
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> num(-500, 500);
    int bad = 0, regular = 0;
    for (int t = 0; t < o.random; ++t) {
        std::vector<Q> x;
        for (int k = 0; k < o.n; ++k) x.push_back(frac(num(rng), 97));
        auto a = AffinePoint::make(x);
        auto cl = classify(a);
        if (!cl.regular) continue;
        ++regular;
        if (!in_alcove(cl.w, a, false)) ++bad;
    }
    rep["samples"] = o.random;
    rep["regular"] = regular;
    rep["mismatches"] = bad;
    std::cout << regular << " regular points, " << bad << " mismatches\n";
    return finish(o, rep, bad == 0);
}

int cmd_gaudin(const std::string& action, const Opts& o) {
    json rep = base_report("gaudin " + action, o);
    GaudinConfig cfg{resolve_rep(o, false), resolve_chi(o)};
    rep["convention"] = "cdet(L(u) - d_u - chi)";
    if (action == "commute" || action == "hamiltonian") {
        CommutingFamily fam = residue_generators(cfg);
        auto M = gaudin_operator_matrix(cfg);
        std::string why;
        bool manin = is_manin(M, &why);
        bool trace = cfg.n() <= 3 ? antisym_trace(M) == cdet(M) : true;
        auto inv = invariance_check(fam, cfg.rep, cfg.chi);
        rep["family"] = to_json(fam, action == "hamiltonian" || o.matrices);
        rep["manin"] = manin;
        rep["trace_equals_cdet"] = trace;
        rep["invariance"] = to_json(inv);
        std::cout << fam.gens.size() << " generators, span rank " << fam.rank << ", all commute\n";
        return finish(o, rep, manin && trace && inv.pass);
    }
    if (action == "wall") {
        CommutingFamily fam = wall_family(cfg);
        // the sl_2 of the coincident pair acts on the residue generators, not on Delta(h)
        auto inv = invariance_check(residue_generators(cfg), cfg.rep, cfg.chi);
        rep["family"] = to_json(fam, o.matrices);
        rep["invariance"] = to_json(inv);
        auto js = joint_diagonalize(fam.mats(), cfg.rep, o.tol, o.seed);
        auto ss = wall_strings(js, static_cast<int>(fam.gens.size()) - 1, o.tol);
        rep["strings"] = to_json(ss);
        std::cout << fam.gens.size() << " generators with Delta(h); " << ss.strings.size() << " h-strings\n";
        return finish(o, rep, inv.pass && ss.ok);
    }
    throw UsageError("unknown gaudin action " + action);
}

int cmd_bethe(const std::string& action, const Opts& o) {
    json rep = base_report("bethe " + action, o);
    if (action == "commute" || action == "wall") {
        TensorRep tr = resolve_rep(o, true);
        TorusElement C = resolve_torus(o);
        rep["C"] = C.str();
        BetheFamily fam;
        if (action == "wall") {
            auto p = C.coincident_pairs();
            if (p.size() != 1) throw UsageError("bethe wall needs C with exactly one coincident pair");
            std::pair<int, int> pair = p[0];
            if (!o.pair.empty()) {
                auto v = int_list(o.pair);
                if (v.size() != 2) throw UsageError("--pair must be i,j");
                pair = {v[0] - 1, v[1] - 1};
            }
            fam = wall_bethe_family(C, pair, tr, o.grid);
        } else {
            fam = bethe_family(C, tr, o.grid);
        }
        BetheCertificate cert = bethe_commuting_certificate(fam, tr);
        rep["certificate"] = to_json(cert);
        std::cout << "grid " << cert.grid << " > degree bound " << cert.degree_bound << ", " << cert.checked
                  << " pairs, normal " << (cert.all_normal ? "yes" : "no") << "\n";
        for (const auto& w : cert.witnesses) std::cout << "  " << w << "\n";
        return finish(o, rep, cert.pass);
    }
    if (action == "degenerate") {
        TensorRep tr = resolve_rep(o, false);
        std::vector<Scalar> eps = parse_scalar_list(o.eps);
        Scalar c = Scalar::parse(o.cscale);
        DegenerationReport d = degeneration(eps, c, resolve_chi(o), tr, o.taylor);
        rep["degeneration"] = to_json(d);
        std::cout << "eps        error          ratio\n";
        for (const auto& r : d.rows) std::cout << r.eps.str() << "  " << r.error << "  " << r.ratio << "\n";
        return finish(o, rep, d.pass);
    }
    throw UsageError("unknown bethe action " + action);
}

int cmd_spectra(const std::string& action, const Opts& o) {
    json rep = base_report("spectra " + action, o);
    if (action == "scan") {
        PipelineConfig pc;
        pc.n = o.n;
        pc.factors = resolve_factors(o);
        pc.tol = o.tol;
        pc.seed = o.seed;
        pc.grid = o.grid;
        std::vector<Q> grid = o.s_grid.empty() ? std::vector<Q>{0, 1, 2, 3, 4, 5, 6} : rational_list(o.s_grid);
        ScanReport sr = scan_simple_spectrum(pc, resolve_torus(o), grid);
        rep["scan"] = to_json(sr);
        for (const auto& p : sr.fine) std::cout << "s=" << rational_str(p.s) << " gap " << p.min_gap << (p.simple ? "" : " (not simple)") << "\n";
        std::cout << "threshold " << rational_str(sr.threshold_fine) << (sr.stable ? " (stable)" : " (unstable)") << "\n";
        return finish(o, rep, sr.eventually_simple && sr.stable);
    }
    if (action == "diag") {
        std::vector<Mat> ms;
        TensorRep tr;
        if (o.family == "gaudin") {
            GaudinConfig cfg{resolve_rep(o, false), resolve_chi(o)};
            ms = residue_generators(cfg).mats();
            tr = cfg.rep;
        } else {
            tr = resolve_rep(o, true);
            ms = bethe_family(resolve_torus(o), tr, o.grid).mats();
        }
        auto js = joint_diagonalize(ms, tr, o.tol, o.seed);
        rep["spectrum"] = to_json(js, o.matrices);
        std::cout << js.lines.size() << " eigenlines, min gap " << js.min_gap << (js.simple ? ", simple" : ", not simple") << "\n";
        return finish(o, rep, js.simple && js.normal);
    }
    throw UsageError("unknown spectra action " + action);
}

int cmd_compare(const Opts& o) {
    json rep = base_report("compare", o);
    PipelineConfig pc;
    pc.n = o.n;
    pc.factors = resolve_factors(o);
    pc.s = parse_rational(o.s);
    pc.tol = o.tol;
    pc.seed = o.seed;
    pc.grid = o.grid;
    pc.cap = o.cap;
    PipelineReport pr = compare_pipeline(pc);
    if (!o.crystal_factors.empty()) {
        // compare the same spectra against a different crystal
        std::vector<Crystal> cs;
        for (const auto& f : factor_list(o.crystal_factors)) cs.push_back(build_kr(o.n, f.l, f.r, o.cap));
        Crystal other = tensor_many(cs);
        pr.forward = compare_with_crystal(pr.strings, pr.weights, other);
        pr.forward.order = "crystal " + o.crystal_factors;
        pr.reversed = pr.forward;
        pr.pass = pr.forward.pass;
        pr.matching_order = pr.pass ? pr.forward.order : "none";
    }
    rep["comparison"] = to_json(pr);
    for (const auto& w : pr.forward.walls)
        std::cout << "j=" << w.j << ": " << (w.match ? "MATCH" : "MISMATCH") << " (" << pr.forward.order << ")\n";
    if (o.crystal_factors.empty())
        for (const auto& w : pr.reversed.walls)
            std::cout << "j=" << w.j << ": " << (w.match ? "MATCH" : "MISMATCH") << " (" << pr.reversed.order << ")\n";
    std::cout << "matching order: " << pr.matching_order << "\n";
    return finish(o, rep, pr.pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"krgeom: KR crystals from the spectra of Bethe and Gaudin families"};
    app.set_config("--config", "", "TOML/INI file with the same field names as the flags");
    app.require_subcommand(1);
    Opts o;
    app.add_option("--json", o.json_path, "write the JSON report here");
    app.add_option("--dot", o.dot_path, "write a DOT graph here");
    app.add_option("--seed", o.seed, "seed for the random combination");
    app.add_option("--tol", o.tol, "relative tolerance for numerics");
    app.add_option("--cap", o.cap, "crystal element cap");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "rank of gl_n")->check(CLI::Range(1, 8));
        sub->add_option("--k", o.k, "number of vector-representation factors");
        sub->add_option("--factors", o.factors, "KR factors l,r;l,r;...");
        sub->add_option("--z", o.z, "evaluation points, e.g. 0,1 or 2*i,1*i");
        sub->add_option("--d", o.d, "real shifts");
        sub->add_option("--chi", o.chi, "diagonal chi");
        sub->add_option("--C", o.c, "torus element (unit modulus entries)");
        sub->add_option("--s", o.s, "scale of the imaginary evaluation points");
        sub->add_option("--grid", o.grid, "sample points per variable");
        sub->add_flag("--matrices", o.matrices, "include matrices or vectors in the report");
    };

    std::string crystal_action, gaudin_action, bethe_action, spectra_action;
    auto crystal = app.add_subcommand("crystal", "build, verify or export a crystal");
    crystal->add_option("action", crystal_action, "build|verify|export")->required()->check(CLI::IsMember({"build", "verify", "export"}));
    crystal->add_option("--n", o.n)->check(CLI::Range(1, 8));
    crystal->add_option("--kr", o.kr, "rectangle l,r");
    crystal->add_option("--lambda", o.lambda, "partition");
    crystal->add_flag("--affine", o.affine, "require the affine structure");
    crystal->add_option("--dot", o.dot_path);
    crystal->add_option("--json", o.json_path);

    auto tensor = app.add_subcommand("tensor", "tensor product of KR crystals");
    tensor->add_option("--n", o.n)->check(CLI::Range(1, 8));
    tensor->add_option("--factors", o.factors, "l,r;l,r;...")->required();
    tensor->add_option("--dot", o.dot_path);
    tensor->add_option("--json", o.json_path);

    auto alcove = app.add_subcommand("alcove", "classify points of R^n/R(1,..,1)");
    alcove->add_option("--n", o.n)->check(CLI::Range(2, 8));
    alcove->add_option("--point", o.point, "rational coordinates");
    alcove->add_option("--random", o.random, "self-check on N random points");
    alcove->add_option("--json", o.json_path);

    auto gaudin = app.add_subcommand("gaudin", "inhomogeneous Gaudin families");
    gaudin->add_option("action", gaudin_action, "commute|hamiltonian|wall")->required()->check(CLI::IsMember({"commute", "hamiltonian", "wall"}));
    common(gaudin);
    gaudin->add_option("--json", o.json_path);

    auto bethe = app.add_subcommand("bethe", "evaluated Bethe families");
    bethe->add_option("action", bethe_action, "commute|wall|degenerate")->required()->check(CLI::IsMember({"commute", "wall", "degenerate"}));
    common(bethe);
    bethe->add_option("--pair", o.pair, "coincident pair i,j (1-based) for the wall family");
    bethe->add_option("--eps", o.eps, "eps schedule");
    bethe->add_option("--c", o.cscale, "c in eps' = c eps");
    bethe->add_option("--taylor", o.taylor, "Taylor order of exp(-eps chi)");
    bethe->add_option("--json", o.json_path);

    auto spectra = app.add_subcommand("spectra", "joint spectra and simplicity scans");
    spectra->add_option("action", spectra_action, "diag|scan")->required()->check(CLI::IsMember({"diag", "scan"}));
    common(spectra);
    spectra->add_option("--family", o.family, "bethe|gaudin")->check(CLI::IsMember({"bethe", "gaudin"}));
    spectra->add_option("--s-grid", o.s_grid, "values of s to scan");
    spectra->add_option("--json", o.json_path);

    auto compare = app.add_subcommand("compare", "KR tensor crystal vs wall h-strings");
    common(compare);
    compare->add_option("--crystal-factors", o.crystal_factors, "compare against these KR factors instead");
    compare->add_option("--json", o.json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*crystal) return cmd_crystal(crystal_action, o);
        if (*tensor) return cmd_tensor(o);
        if (*alcove) return cmd_alcove(o);
        if (*gaudin) return cmd_gaudin(gaudin_action, o);
        if (*bethe) return cmd_bethe(bethe_action, o);
        if (*spectra) return cmd_spectra(spectra_action, o);
        if (*compare) return cmd_compare(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!o.json_path.empty()) write_text(o.json_path, json{{"pass", false}, {"error", e.what()}}.dump(2) + "\n");
        return 1;
    }
    return 2;
}
