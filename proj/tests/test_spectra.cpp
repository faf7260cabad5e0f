#include "doctest.h"
#include "oracles.hpp"

#include "krg/promotion.hpp"
#include "krg/spectra.hpp"

#include <algorithm>
#include <cmath>

using namespace krg;

namespace {

GaudinConfig c2c2(const std::vector<Q>& chi) {
    MatrixRep v = build_irrep(2, 1, 1);
    return GaudinConfig{build_tensor({{v, Scalar(0), Scalar(0)}, {v, Scalar(1), Scalar(0)}}), chi};
}

std::vector<std::vector<long>> h_strings(const SpectralStrings& s) {
    std::vector<std::vector<long>> out;
    for (const auto& h : s.strings) {
        std::vector<long> v;
        for (double x : h.h) v.push_back(std::lround(x));
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("trivial families") {
    std::vector<Q> gram(4, Q(1));
    auto id = joint_diagonalize({Mat::identity(4)}, gram, {});
    CHECK_FALSE(id.simple);

    Mat d = Mat::diagonal({Scalar(1), Scalar(2), Scalar(-3), Scalar(frac(1, 2))});
    auto js = joint_diagonalize({d}, gram, {});
    CHECK(js.simple);
    REQUIRE(js.lines.size() == 4);
    for (const auto& l : js.lines) {
        int big = 0;
        for (const auto& x : l.v) big += std::abs(x) > 1 - 1e-10;
        CHECK(big == 1);
    }
    CHECK(js.residual < 1e-12);
}

TEST_CASE("generic Gaudin family has simple spectrum") {
    auto cfg = c2c2({frac(1, 3), frac(-1, 5)});
    auto fam = residue_generators(cfg);
    auto js = joint_diagonalize(fam.mats(), cfg.rep);
    CHECK(js.simple);
    CHECK(js.lines.size() == 4);
    CHECK(js.weights_integral);
    CHECK(js.residual < 1e-8);
    // exact cross-check: a rational combination has a squarefree characteristic polynomial
    Mat comb(4, 4);
    long w = 1;
    for (const auto& m : fam.mats()) comb.axpy(Scalar(w++), m);
    CHECK(oracle::squarefree(oracle::charpoly(comb)));
    // weights round to the representation's weights
    std::map<Content, int> got;
    for (const auto& l : js.lines) {
        Content c;
        for (double x : l.weight) c.push_back(static_cast<int>(std::lround(x)));
        ++got[c];
    }
    CHECK(got == weight_multiplicities(cfg.rep.weights));
}

TEST_CASE("fixed seed is reproducible") {
    auto cfg = c2c2({frac(1, 3), frac(-1, 5)});
    auto ms = residue_generators(cfg).mats();
    auto a = joint_diagonalize(ms, cfg.rep, 1e-8, 42), b = joint_diagonalize(ms, cfg.rep, 1e-8, 42);
    REQUIRE(a.lines.size() == b.lines.size());
    for (size_t k = 0; k < a.lines.size(); ++k) CHECK(a.lines[k].values == b.lines[k].values);
}

TEST_CASE("sl2 strings at the wall") {
    auto cfg = c2c2({Q(0), Q(0)});
    auto plain = residue_generators(cfg);
    auto js0 = joint_diagonalize(plain.mats(), cfg.rep);
    CHECK_FALSE(js0.simple);

    auto fam = wall_family(cfg);
    auto js = joint_diagonalize(fam.mats(), cfg.rep);
    CHECK(js.simple);
    auto s = wall_strings(js, static_cast<int>(fam.gens.size()) - 1);
    CHECK(s.ok);
    CHECK(h_strings(s) == std::vector<std::vector<long>>{{0}, {2, 0, -2}});
    for (const auto& h : s.strings)
        for (size_t k = 0; k < h.h.size(); ++k) CHECK(std::abs(h.h[k] + h.h[h.h.size() - 1 - k]) < 1e-8);
}

TEST_CASE("broken strings are reported") {
    // h with eigenvalues 2 and 0 inside one eigenspace of the rest: a gap
    std::vector<Q> gram(2, Q(1));
    Mat h = Mat::diagonal({Scalar(2), Scalar(0)});
    auto js = joint_diagonalize({Mat::identity(2), h}, gram, {});
    auto s = wall_strings(js, 1);
    CHECK_FALSE(s.ok);
    CHECK_FALSE(s.problems.empty());
}

TEST_CASE("pipeline matches the crystal for n = 2") {
    PipelineConfig cfg;
    cfg.n = 2;
    cfg.factors = {{1, 1}, {1, 1}};
    auto r = compare_pipeline(cfg);
    CHECK(r.pass);
    CHECK(r.certificates_ok);
    CHECK(r.forward.pass);
    CHECK(r.forward.weights_match);
    for (const auto& s : r.strings) CHECK(s.ok);
    // the affine wall gives strings {2,0,-2} and {0} here as well
    StringStats comb = string_statistics(tensor(build_kr(2, 1, 1), build_kr(2, 1, 1)), 0);
    CHECK(r.strings[0].stats() == comb);
}

TEST_CASE("simplicity scan") {
    PipelineConfig cfg;
    cfg.n = 2;
    cfg.factors = {{1, 1}, {1, 1}};
    auto C = TorusElement::make({circle_point(frac(1, 2)), circle_point(frac(-1, 3))});
    std::vector<Q> grid;
    for (int k = 0; k <= 8; ++k) grid.push_back(frac(k, 2));
    auto r = scan_simple_spectrum(cfg, C, grid);
    CHECK_FALSE(r.coarse.front().simple);
    CHECK(r.eventually_simple);
    CHECK(r.stable);
    CHECK(r.fine.size() > r.coarse.size());
}
