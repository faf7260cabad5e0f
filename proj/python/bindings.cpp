// Thin module: inputs are plain Python values, results come back as JSON text.
#include "krg/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace krg;

namespace {

std::vector<Q> rationals(const std::vector<std::string>& xs) {
    std::vector<Q> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

std::vector<KRFactor> kr_factors(const std::vector<std::pair<int, int>>& lr) {
    std::vector<KRFactor> out;
    for (auto [l, r] : lr) out.push_back({l, r});
    return out;
}

}  // namespace

PYBIND11_MODULE(_krgeom, m) {
    m.doc() = "KR crystals, alcoves and Gaudin/Bethe spectra (exact core)";

    m.def("crystal", [](int n, const std::vector<int>& lambda) { return to_json(build_crystal(n, lambda)).dump(); },
          py::arg("n"), py::arg("lam"));
    m.def("kr_crystal", [](int n, int l, int r) { return to_json(build_kr(n, l, r)).dump(); }, py::arg("n"), py::arg("l"),
          py::arg("r"));
    m.def("promote", [](int n, const std::string& t) { return promote(Tableau::parse(n, t)).str(); }, py::arg("n"),
          py::arg("tableau"));
    m.def("promotion_order", [](int n, const std::vector<int>& lambda) { return promotion_order(n, lambda); }, py::arg("n"),
          py::arg("lam"));
    m.def("verify_uniqueness", [](int n, const std::vector<int>& lambda) { return to_json(verify_uniqueness(n, lambda)).dump(); },
          py::arg("n"), py::arg("lam"));
    m.def("tensor_strings",
          [](int n, const std::vector<std::pair<int, int>>& lr, int j) {
              std::vector<Crystal> cs;
              for (auto [l, r] : lr) cs.push_back(build_kr(n, l, r));
              return to_json(string_statistics(tensor_many(cs), j)).dump();
          },
          py::arg("n"), py::arg("factors"), py::arg("j"));
    m.def("normal_shift", [](int n, int l, int r) { return rational_str(normal_shift(n, l, r)); });

    m.def("classify", [](const std::vector<std::string>& x) { return to_json(classify(AffinePoint::make(rationals(x)))).dump(); },
          py::arg("point"));
    m.def("walls_of_base", [](int n) {
        std::vector<std::string> out;
        for (const auto& h : walls_of(ExtAffineWeylElt::identity(n))) out.push_back(h.str());
        return out;
    });

    m.def("gaudin_family",
          [](int n, const std::vector<std::pair<int, int>>& lr, const std::vector<std::string>& z, const std::vector<std::string>& chi) {
              std::vector<TensorFactor> fs;
              for (size_t i = 0; i < lr.size(); ++i)
                  fs.push_back({build_irrep(n, lr[i].first, lr[i].second), Scalar::parse(z.at(i)), Scalar(0)});
              GaudinConfig cfg{build_tensor(fs), rationals(chi)};
              auto fam = residue_generators(cfg);
              json j = to_json(fam);
              j["commuting"] = check_commuting(fam.mats()).empty();
              j["invariance"] = to_json(invariance_check(fam, cfg.rep, cfg.chi));
              return j.dump();
          },
          py::arg("n"), py::arg("factors"), py::arg("z"), py::arg("chi"));

    m.def("compare",
          [](int n, const std::vector<std::pair<int, int>>& lr) {
              PipelineConfig cfg;
              cfg.n = n;
              cfg.factors = kr_factors(lr);
              return to_json(compare_pipeline(cfg)).dump();
          },
          py::arg("n"), py::arg("factors"));
}
