// Floating-point joint diagonalization of exact commuting families, h-strings
// at walls, and the comparison of spectral string statistics with KR crystals.
#pragma once

#include "krg/bethe.hpp"
#include "krg/crystal.hpp"
#include "krg/tensor_crystal.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace krg {

using cplx = std::complex<double>;

struct Eigenline {
    std::vector<cplx> v;        // unit vector, orthonormalized basis of V
    std::vector<cplx> values;   // Rayleigh quotient of each member
    std::vector<double> weight; // <v, Delta(E_aa) v>
};

struct JointSpectrum {
    int dim = 0;
    std::vector<Eigenline> lines;
    std::vector<double> scales;  // max-entry norm of each member
    double tol = 1e-8;
    double min_gap = 0;      // min over line pairs of the max relative member distance
    double residual = 0;     // reconstruction error, relative max-entry
    bool simple = false;
    bool normal = true;      // all members normal within tol
    bool weights_integral = true;
    int retries = 0;         // reruns in extended precision
    std::string precision = "double";
};

// gram: squared norms of the orthogonal basis; weights: content of each basis
// vector (may be empty).
JointSpectrum joint_diagonalize(const std::vector<Mat>& members, const std::vector<Q>& gram,
                                const std::vector<Content>& weights, double tol = 1e-8, std::uint64_t seed = 1);
JointSpectrum joint_diagonalize(const std::vector<Mat>& members, const TensorRep& rep, double tol = 1e-8,
                                std::uint64_t seed = 1);

struct HString {
    std::vector<double> h;      // descending
    std::vector<int> lines;     // indices into JointSpectrum::lines
    std::vector<int> source_weight;  // canonicalized
    bool ok = true;
};

struct SpectralStrings {
    int j = 0;  // crystal index of the wall, 0 = affine
    std::vector<HString> strings;
    bool ok = true;  // integer, simple, gap-free and symmetric
    std::vector<std::string> problems;
    double separation = 0;  // smallest distance between distinct eigenspaces
    double spread = 0;      // largest distance inside one eigenspace

    StringStats stats() const;
};

// Groups lines by the tuple of all members except h_index, then sorts each
// group by the h eigenvalue.
SpectralStrings wall_strings(const JointSpectrum& js, int h_index, double tol = 1e-8);

struct WallComparison {
    int j = 0;
    StringStats spectral, combinatorial;
    bool match = false;
};

struct ComparisonReport {
    std::vector<WallComparison> walls;
    bool weights_match = false;
    bool pass = false;
    std::string order;  // "z1 (x) z2 (x) ..." or reversed
};

// per_wall[j] for crystal index j = 0..n-1
ComparisonReport compare_with_crystal(const std::vector<SpectralStrings>& per_wall, const std::vector<Content>& weights,
                                      const Crystal& comb);

struct KRFactor {
    int l = 1, r = 1;
};

struct PipelineConfig {
    int n = 2;
    std::vector<KRFactor> factors;
    Q s = 4;              // z_j = (k+1-j) * s * i before the real shift
    double tol = 1e-8;
    std::uint64_t seed = 1;
    int grid = 0;         // sample points per tau (0 = degree bound + 2)
    int cap = kDefaultCap;
};

TensorRep pipeline_rep(const PipelineConfig& cfg);

struct PipelineReport {
    PipelineConfig cfg;
    std::vector<SpectralStrings> strings;  // indexed by crystal index j
    std::vector<Content> weights;          // rounded torus weights of the eigenlines
    ComparisonReport forward, reversed;
    bool certificates_ok = true;  // exact commutativity of every wall family
    bool pass = false;
    std::string matching_order;
    std::vector<std::string> walls;  // description of each wall and C0
};

// KR tensor crystal vs h-strings of wall Bethe families at every wall of the
// base alcove, both factor orders.
PipelineReport compare_pipeline(const PipelineConfig& cfg);

struct ScanPoint {
    Q s;
    double min_gap = 0;
    bool simple = false;
};

struct ScanReport {
    std::vector<ScanPoint> coarse, fine;
    Q threshold_coarse, threshold_fine;  // smallest grid s beyond which every point is simple
    bool stable = false;
    bool eventually_simple = false;
};

// Bethe family at regular C for z_j scaled by each s in the grid; the fine
// grid adds midpoints.
ScanReport scan_simple_spectrum(const PipelineConfig& base, const TorusElement& C, const std::vector<Q>& s_grid);

}  // namespace krg
