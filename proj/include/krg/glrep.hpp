// Explicit gl_n representations: wedge powers, rectangular irreducibles
// V_{l w_r}, and tensor products with per-factor embeddings.
#pragma once

#include "krg/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace krg {

using Content = std::vector<int>;

struct MatrixRep {
    int n = 0, dim = 0;
    std::vector<SpMat> gens;         // gens[a*n+b] is E_ab (0-based a,b)
    std::vector<Content> weights;    // content vector of each basis vector
    std::vector<Q> gram;             // squared norms; the basis is orthogonal for E_ab^* = E_ba
    int l = 0, r = 0;                // rectangle parameters when built by build_irrep
    std::string label;

    const SpMat& E(int a, int b) const { return gens[static_cast<size_t>(a) * n + b]; }
};

MatrixRep build_wedge(int n, int r);
MatrixRep build_irrep(int n, int l, int r);

// Exact check of [E_ab,E_cd] = d_bc E_ad - d_da E_cb and of the weight diagonal.
bool check_gl_relations(const MatrixRep& rep, std::string* why = nullptr);
// Casimir sum_ab E_ab E_ba; scalar on irreducibles
SpMat casimir(const MatrixRep& rep);

std::map<Content, int> weight_multiplicities(const std::vector<Content>& weights);
inline std::map<Content, int> weight_multiplicities(const MatrixRep& rep) { return weight_multiplicities(rep.weights); }

struct TensorFactor {
    MatrixRep rep;
    Scalar z;  // evaluation point
    Scalar d;  // real shift
};

struct TensorRep {
    int n = 0, dim = 0;
    std::vector<TensorFactor> factors;
    std::vector<int> dims;
    std::vector<Content> weights;
    std::vector<Q> gram;

    int k() const { return static_cast<int>(factors.size()); }
    // E_ab acting on factor i, identity elsewhere
    SpMat embedded(int i, int a, int b) const;
    Mat E(int i, int a, int b) const { return embedded(i, a, b).dense(); }
    // Delta(E_ab) = sum_i E_ab^{(i)}
    Mat total(int a, int b) const;
    // evaluation point shifted by the factor's shift: z_i + d_i
    Scalar point(int i) const { return factors[i].z + factors[i].d; }
    // adjoint for the invariant Hermitian form, in the stored orthogonal basis
    Mat adjoint(const Mat& m) const;
    bool is_normal(const Mat& m) const;
};

TensorRep build_tensor(const std::vector<TensorFactor>& factors);

// Re(z) shift under which evaluated Bethe operators are normal, for V_{l w_r}.
Q normal_shift(int n, int l, int r);

}  // namespace krg
