#include "krg/report.hpp"

#include <fstream>
#include <stdexcept>

namespace krg {

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Crystal& c) {
    json j;
    j["n"] = c.n;
    j["affine"] = c.affine;
    j["size"] = c.size();
    json nodes = json::array();
    for (int b = 0; b < c.size(); ++b) nodes.push_back({{"id", b}, {"label", c.labels[b]}, {"weight", c.wt[b]}});
    j["nodes"] = nodes;
    json edges = json::array();
    for (int i = c.affine ? 0 : 1; i < c.n; ++i)
        for (int b = 0; b < c.size(); ++b)
            if (c.f[i][b] >= 0) edges.push_back({{"i", i}, {"from", b}, {"to", c.f[i][b]}});
    j["f_edges"] = edges;
    return j;
}

json to_json(const UniquenessReport& r) {
    return {{"n", r.n},
            {"lambda", r.lambda},
            {"rectangular", r.rectangular},
            {"promotion_order", r.promotion_order},
            {"extendable", r.extendable},
            {"classical_iso", r.classical_iso},
            {"views_ok", r.views_ok},
            {"view1_normal", r.view1_normal},
            {"phi_equals_pr", r.phi_equals_pr},
            {"phi_candidates", r.phi_candidates},
            {"pass", r.pass},
            {"note", r.note}};
}

json to_json(const ExtAffineWeylElt& w) {
    std::vector<int> s;
    for (int x : w.sigma) s.push_back(x + 1);
    return {{"sigma", s}, {"m", w.m}, {"text", w.str()}};
}

json to_json(const Classification& c) {
    json j;
    j["regular"] = c.regular;
    if (c.regular) {
        j["w"] = to_json(c.w);
        j["steps"] = c.steps;
        json walls = json::array();
        for (const auto& h : walls_of(c.w)) walls.push_back(h.str());
        j["bounding_walls"] = walls;
    } else {
        json walls = json::array();
        for (const auto& h : c.walls) walls.push_back(h.str());
        j["walls"] = walls;
        j["subregular"] = c.walls.size() == 1;
    }
    return j;
}

json to_json(const CommutingFamily& f, bool with_matrices) {
    json j;
    j["convention"] = f.convention;
    j["rank"] = f.rank;
    j["count"] = f.gens.size();
    json gens = json::array();
    for (const auto& g : f.gens) {
        json x = {{"tag", g.tag}, {"k", g.k}, {"pole", g.pole}, {"l", g.l}, {"nnz", g.m.nnz()}};
        if (with_matrices) x["matrix"] = to_json(g.m);
        gens.push_back(x);
    }
    j["generators"] = gens;
    return j;
}

json to_json(const InvarianceReport& r) { return {{"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}}; }

json to_json(const BetheCertificate& c) {
    return {{"pass", c.pass},
            {"degree_bound", c.degree_bound},
            {"grid", c.grid},
            {"sample_points", c.sample_points},
            {"pairs_checked", c.checked},
            {"witnesses", c.witnesses},
            {"all_normal", c.all_normal},
            {"non_normal", c.non_normal}};
}

json to_json(const DegenerationReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back({{"eps", row.eps.str()}, {"error", row.error}, {"ratio", row.ratio}});
    return {{"rows", rows},
            {"pass", r.pass},
            {"ratio_target", r.ratio_target},
            {"ratio_tol", r.ratio_tol},
            {"limit_convention", r.limit_convention}};
}

static json cjson(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const JointSpectrum& js, bool with_vectors) {
    json lines = json::array();
    for (const auto& l : js.lines) {
        json x;
        json vals = json::array();
        for (const auto& v : l.values) vals.push_back(cjson(v));
        x["values"] = vals;
        x["weight"] = l.weight;
        if (with_vectors) {
            json v = json::array();
            for (const auto& z : l.v) v.push_back(cjson(z));
            x["vector"] = v;
        }
        lines.push_back(x);
    }
    return {{"dim", js.dim},
            {"simple", js.simple},
            {"min_gap", js.min_gap},
            {"tol", js.tol},
            {"residual", js.residual},
            {"normal", js.normal},
            {"weights_integral", js.weights_integral},
            {"precision", js.precision},
            {"retries", js.retries},
            {"lines", lines}};
}

json to_json(const StringStats& s) {
    json out = json::array();
    for (const auto& [key, count] : s) out.push_back({{"length", key.first}, {"source_weight", key.second}, {"count", count}});
    return out;
}

json to_json(const SpectralStrings& s) {
    json strings = json::array();
    for (const auto& h : s.strings) strings.push_back({{"h", h.h}, {"source_weight", h.source_weight}, {"ok", h.ok}});
    return {{"j", s.j},
            {"ok", s.ok},
            {"problems", s.problems},
            {"separation", s.separation},
            {"spread", s.spread},
            {"strings", strings},
            {"statistics", to_json(s.stats())}};
}

json to_json(const ComparisonReport& r) {
    json walls = json::array();
    for (const auto& w : r.walls)
        walls.push_back({{"j", w.j}, {"match", w.match}, {"spectral", to_json(w.spectral)}, {"combinatorial", to_json(w.combinatorial)}});
    return {{"order", r.order}, {"pass", r.pass}, {"weights_match", r.weights_match}, {"walls", walls}};
}

json to_json(const PipelineReport& r) {
    json factors = json::array();
    for (const auto& f : r.cfg.factors) factors.push_back({{"l", f.l}, {"r", f.r}});
    json strings = json::array();
    for (const auto& s : r.strings) strings.push_back(to_json(s));
    return {{"config", {{"n", r.cfg.n}, {"factors", factors}, {"s", rational_str(r.cfg.s)}, {"tol", r.cfg.tol}, {"seed", r.cfg.seed}}},
            {"walls", r.walls},
            {"strings", strings},
            {"forward", to_json(r.forward)},
            {"reversed", to_json(r.reversed)},
            {"certificates_ok", r.certificates_ok},
            {"matching_order", r.matching_order},
            {"pass", r.pass}};
}

json to_json(const ScanReport& r) {
    auto pts = [](const std::vector<ScanPoint>& v) {
        json a = json::array();
        for (const auto& p : v) a.push_back({{"s", rational_str(p.s)}, {"min_gap", p.min_gap}, {"simple", p.simple}});
        return a;
    };
    return {{"coarse", pts(r.coarse)},
            {"fine", pts(r.fine)},
            {"threshold_coarse", rational_str(r.threshold_coarse)},
            {"threshold_fine", rational_str(r.threshold_fine)},
            {"stable", r.stable},
            {"eventually_simple", r.eventually_simple}};
}

std::string to_dot(const Crystal& c) {
    static const char* colors[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
    std::string s = "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
    for (int b = 0; b < c.size(); ++b) {
        std::string label = c.labels[b];
        for (size_t p = 0; (p = label.find('"', p)) != std::string::npos; p += 2) label.replace(p, 1, "\\\"");
        s += "  n" + std::to_string(b) + " [label=\"" + label + "\"];\n";
    }
    for (int i = c.affine ? 0 : 1; i < c.n; ++i)
        for (int b = 0; b < c.size(); ++b)
            if (c.f[i][b] >= 0)
                s += "  n" + std::to_string(b) + " -> n" + std::to_string(c.f[i][b]) + " [label=\"" + std::to_string(i) +
                     "\", color=" + colors[i % 9] + "];\n";
    return s + "}\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace krg
